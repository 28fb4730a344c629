#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mb/complex.hpp"
#include "mb/markov.hpp"
#include "mb/model.hpp"
#include "mb/moves.hpp"
#include "mb/stanley_reisner.hpp"

namespace mb {

using nlohmann::json;

// Text form of a complex: "n=4; 12 23 34 14".  Facet tokens are digit
// strings for vertex labels up to 9, "{1,10}" comma form in general, and
// "{}" for the empty face.  Faces that are not maximal are pruned.
SimplicialComplex parse_complex(const std::string& text);

// Levels list "2,2,2" (one entry per vertex) or a single number for uniform
// levels.
Levels parse_levels(const std::string& text, int n);

json complex_to_json(const SimplicialComplex& c);        // {"n":4,"facets":[[1,2],...]}
SimplicialComplex complex_from_json(const json& j);

json betti_to_json(const BettiDiagram& b);               // {"field":..,"entries":[[i,j,rank],..]}
json move_to_json(const Move& m, const Levels& levels);  // {"plus":[[..cell..],..],"minus":[..]}
json moves_to_json(const std::vector<Move>& moves, const Levels& levels);
json tableau_to_json(const Tableau& t);

std::string read_text_file(const std::string& path);     // throws input_error when unreadable
void write_text_file_atomic(const std::string& path, const std::string& content);

}  // namespace mb
