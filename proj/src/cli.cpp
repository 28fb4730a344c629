#include "mb/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mb/cache.hpp"
#include "mb/harness.hpp"
#include "mb/io.hpp"
#include "mb/version.hpp"

namespace mb {

namespace {

// --complex accepts inline text, a path to a text file, or a path to a JSON
// file ({"n":..,"facets":[[..],..]}).
SimplicialComplex load_complex(const std::string& arg) {
  std::string text = arg;
  if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg))
    text = read_text_file(arg);
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{')
    return complex_from_json(json::parse(text));
  return parse_complex(text);
}

std::string degree_set_text(const std::set<long long>& s) {
  std::ostringstream os;
  bool first = true;
  for (long long d : s) {
    os << (first ? "" : ",") << d;
    first = false;
  }
  return first ? "-" : os.str();
}

struct CommonOpts {
  std::string complex_arg;
  std::string levels_text = "2";
  std::string cache_dir;
  bool json_out = false;
  Budgets budgets;
};

std::string budgets_text(const Budgets& b) {
  std::ostringstream os;
  os << b.fiber_points << "," << b.completion_pairs << "," << b.completion_basis << ","
     << b.completion_work << "," << b.scan_tables;
  return os.str();
}

void add_budget_options(CLI::App* cmd, Budgets& b) {
  cmd->add_option("--fiber-budget", b.fiber_points, "max points per fiber enumeration");
  cmd->add_option("--completion-pairs", b.completion_pairs, "max critical pairs in completion");
  cmd->add_option("--completion-work", b.completion_work, "max divisibility probes in completion");
  cmd->add_option("--scan-tables", b.scan_tables, "max cell multisets in the exhaustive scan");
}

void add_cache_option(CLI::App* cmd, std::string& dir) {
  cmd->add_option("--cache-dir", dir,
                  "directory for cached results (also read from MB_CACHE_DIR)");
}

ResultCache open_cache(const std::string& flag_value) {
  if (!flag_value.empty()) return ResultCache(flag_value);
  const char* env = std::getenv("MB_CACHE_DIR");
  return ResultCache(env ? env : "");
}

// Print through the cache: emit the stored text on a hit, otherwise compute,
// store, and emit.
template <typename Fn>
void cached_output(const ResultCache& cache, const std::string& kind, const std::string& payload,
                   std::ostream& out, Fn&& compute) {
  if (!cache.enabled()) {
    out << compute();
    return;
  }
  std::string key = cache_key(kind, payload);
  if (auto hit = cache.get(key)) {
    out << *hit;
    return;
  }
  std::string text = compute();
  cache.put(key, text);
  out << text;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for simplicial complexes, their face-ring resolutions, "
               "and Markov bases of hierarchical models"};
  app.set_version_flag("--version", std::string(engine_version));
  app.require_subcommand(1);

  CommonOpts betti_o, markov_o, moves_o, check_o;
  std::string betti_field = "QQ";
  auto* betti = app.add_subcommand("betti", "Betti diagram of the face ring");
  betti->add_option("--complex", betti_o.complex_arg, "complex text or file")->required();
  betti->add_option("--field", betti_field, "coefficient field: QQ, F2, F3, ...");
  betti->add_flag("--json", betti_o.json_out, "emit JSON");
  add_cache_option(betti, betti_o.cache_dir);

  auto* markov = app.add_subcommand("markov", "minimal Markov basis of the hierarchical model");
  markov->add_option("--complex", markov_o.complex_arg, "complex text or file")->required();
  markov->add_option("--levels", markov_o.levels_text, "levels per vertex, e.g. 2 or 2,2,3");
  markov->add_flag("--json", markov_o.json_out, "emit JSON");
  add_budget_options(markov, markov_o.budgets);
  add_cache_option(markov, markov_o.cache_dir);

  std::string nonface_text;
  bool moves_linear = false;
  auto* moves = app.add_subcommand("moves", "explicit move tableaux from minimal nonfaces");
  moves->add_option("--complex", moves_o.complex_arg, "complex text or file")->required();
  moves->add_option("--nonface", nonface_text, "one minimal nonface, e.g. 35 or {3,5}");
  moves->add_flag("--linear", moves_linear, "list the degree-1 moves instead");
  moves->add_flag("--json", moves_o.json_out, "emit JSON");

  int check_scan_bound = 6;
  auto* check = app.add_subcommand("check", "compare predicted and actual Markov degrees");
  check->add_option("--complex", check_o.complex_arg, "complex text or file")->required();
  check->add_option("--scan-bound", check_scan_bound, "exhaustive-scan degree bound on fallback");
  check->add_flag("--json", check_o.json_out, "emit JSON");
  add_budget_options(check, check_o.budgets);
  add_cache_option(check, check_o.cache_dir);

  int enum_n = 3;
  bool enum_full = false, enum_classify = false;
  auto* enumerate = app.add_subcommand("enumerate", "complexes with full vertex support, up to iso");
  enumerate->add_option("--n", enum_n, "number of vertices")->required();
  enumerate->add_flag("--include-full-simplex", enum_full, "include the full simplex");
  enumerate->add_flag("--classify", enum_classify, "append the proven-case classification");

  int t1_n = 3;
  bool t1_full = false;
  Budgets t1_budgets;
  auto* table1 = app.add_subcommand("table1", "histogram of unpredicted Markov degree counts");
  table1->add_option("--n", t1_n, "number of vertices")->required();
  table1->add_flag("--include-full-simplex", t1_full, "include the full simplex");
  add_budget_options(table1, t1_budgets);

  Budgets t2_budgets;
  auto* table2 = app.add_subcommand("table2", "published four-vertex survey vs computed values");
  add_budget_options(table2, t2_budgets);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help / --version exit through CLI11 with success.
      std::ostringstream os;
      int code = app.exit(e, os, os);
      out << os.str();
      return code;
    }
    std::ostringstream os;
    app.exit(e, os, os);
    err << os.str();
    return static_cast<int>(ExitCode::exit_usage);
  }

  try {
    if (betti->parsed()) {
      SimplicialComplex c = load_complex(betti_o.complex_arg);
      FieldSpec field = FieldSpec::parse(betti_field);
      ResultCache cache = open_cache(betti_o.cache_dir);
      std::string payload = c.str() + "|" + field.str() + "|" + (betti_o.json_out ? "json" : "text");
      cached_output(cache, "betti", payload, out, [&] {
        BettiDiagram d = betti_diagram(c, field);
        if (betti_o.json_out) return betti_to_json(d).dump(2) + "\n";
        return d.render();
      });
    } else if (markov->parsed()) {
      SimplicialComplex c = load_complex(markov_o.complex_arg);
      Levels levels = parse_levels(markov_o.levels_text, c.n());
      ResultCache cache = open_cache(markov_o.cache_dir);
      std::string payload = c.str() + "|" + levels.str() + "|" + budgets_text(markov_o.budgets) +
                            "|" + (markov_o.json_out ? "json" : "text");
      cached_output(cache, "markov", payload, out, [&] {
        MarginalMatrix m = marginal_matrix(c, levels);
        MarkovResult r = markov_basis(m, markov_o.budgets);
        std::ostringstream os;
        if (markov_o.json_out) {
          json j = moves_to_json(r.moves, levels);
          j["complete"] = r.complete;
          if (!r.note.empty()) j["note"] = r.note;
          json deg = json::object();
          for (const auto& [d, cnt] : r.degree_multiset) deg[std::to_string(d)] = cnt;
          j["degree_multiset"] = deg;
          os << j.dump(2) << "\n";
          return os.str();
        }
        os << "moves: " << r.moves.size() << (r.complete ? "" : "  (incomplete: " + r.note + ")")
           << "\n";
        for (const auto& [d, cnt] : r.degree_multiset)
          os << "  degree " << d << ": " << cnt << "\n";
        for (const Move& mv : r.moves) os << mv.str(levels) << "\n";
        return os.str();
      });
    } else if (moves->parsed()) {
      SimplicialComplex c = load_complex(moves_o.complex_arg);
      Levels levels = Levels::uniform(c.n(), 2);
      if (moves_linear) {
        std::vector<Move> lin = linear_moves(c, levels);
        if (moves_o.json_out) {
          out << moves_to_json(lin, levels).dump(2) << "\n";
        } else {
          out << "linear moves: " << lin.size() << "\n";
          for (const Move& mv : lin) out << mv.str(levels) << "\n";
        }
      } else {
        VertexDecomposition vd = is_vertex_decomposable(c);
        if (!vd.is_vd)
          throw input_error("move recipe needs a vertex-decomposable complex");
        std::vector<Face> nfs;
        if (nonface_text.empty()) {
          nfs = minimal_nonfaces(c);
        } else {
          std::string t = "n=" + std::to_string(c.n()) + "; " + nonface_text;
          nfs = parse_complex(t).facets();
        }
        json all = json::array();
        for (Face nf : nfs) {
          std::vector<Tableau> ts = recipe_moves(c, nf, vd.order);
          if (moves_o.json_out) {
            json o;
            o["nonface"] = nf.vertices();
            json arr = json::array();
            for (const Tableau& t : ts) arr.push_back(tableau_to_json(t));
            o["tableaux"] = arr;
            all.push_back(o);
          } else {
            out << "nonface " << nf.str() << ": " << ts.size() << " tableaux\n";
            for (const Tableau& t : ts) out << t.render() << "\n\n";
          }
        }
        if (moves_o.json_out) out << all.dump(2) << "\n";
      }
    } else if (check->parsed()) {
      SimplicialComplex c = load_complex(check_o.complex_arg);
      ResultCache cache = open_cache(check_o.cache_dir);
      std::string payload = c.str() + "|" + budgets_text(check_o.budgets) + "|" +
                            std::to_string(check_scan_bound) + "|" +
                            (check_o.json_out ? "json" : "text");
      cached_output(cache, "check", payload, out, [&] {
        ConjectureReport rep = check_conjecture(c, check_o.budgets, check_scan_bound);
        std::ostringstream os;
        if (check_o.json_out) {
          json j;
          j["complex"] = rep.complex_text;
          j["predicted"] = rep.prediction.degrees;
          json rows = json::object();
          for (const auto& [f, rs] : rep.prediction.rows_by_field) rows[f] = rs;
          j["rows_by_field"] = rows;
          j["actual"] = rep.actual.degrees;
          j["actual_complete"] = rep.actual.complete;
          j["missing"] = rep.missing;
          j["extra"] = rep.extra;
          j["status"] = rep.status_str();
          os << j.dump(2) << "\n";
          return os.str();
        }
        os << "complex:   " << rep.complex_text << "\n";
        for (const auto& [f, rs] : rep.prediction.rows_by_field) {
          os << "rows " << f << ":   ";
          for (int r : rs) os << r << " ";
          os << "\n";
        }
        os << "predicted: " << degree_set_text(rep.prediction.degrees) << "\n";
        os << "actual:    " << degree_set_text(rep.actual.degrees)
           << (rep.actual.complete ? "" : "  (incomplete: " + rep.actual.note + ")") << "\n";
        os << "missing:   " << degree_set_text(rep.missing) << "\n";
        os << "extra:     " << degree_set_text(rep.extra) << "\n";
        os << "status:    " << rep.status_str() << "\n";
        return os.str();
      });
    } else if (enumerate->parsed()) {
      for (const SimplicialComplex& c : enumerate_complexes(enum_n, true, enum_full)) {
        out << c.str();
        if (enum_classify) out << "  [" << coverage_str(classify_theorem_coverage(c)) << "]";
        out << "\n";
      }
    } else if (table1->parsed()) {
      out << render_table1(reproduce_table1(t1_n, t1_full, t1_budgets));
    } else if (table2->parsed()) {
      out << render_table2(reproduce_table2(t2_budgets));
    }
  } catch (const budget_error& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return static_cast<int>(ExitCode::exit_budget);
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::exit_usage);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::exit_internal);
  }
  return static_cast<int>(ExitCode::exit_ok);
}

}  // namespace mb
