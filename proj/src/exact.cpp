#include "mb/exact.hpp"

#include <algorithm>

namespace mb {

int bareiss_rank(IntMat m) {
  int r = 0;
  mpz_class prev = 1;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i) {
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j) {
        mpz_class t = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

int rank_mod_p(const IntMat& m, long long p) {
  if (p < 2) throw input_error("rank_mod_p: modulus must be a prime >= 2");
  std::vector<long long> a(m.a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class r = m.a[i] % static_cast<long>(p);
    long long v = r.get_si() % p;
    a[i] = v < 0 ? v + p : v;
  }
  auto at = [&](int r, int c) -> long long& { return a[static_cast<std::size_t>(r) * m.cols + c]; };
  auto mulmod = [&](long long x, long long y) {
    return static_cast<long long>(static_cast<__int128>(x) * y % p);
  };
  auto powmod = [&](long long b, long long e) {
    long long acc = 1 % p;
    while (e > 0) {
      if (e & 1) acc = mulmod(acc, b);
      b = mulmod(b, b);
      e >>= 1;
    }
    return acc;
  };
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(at(pivot, j), at(rank, j));
    long long inv = powmod(at(rank, c), p - 2);  // Fermat inverse, p prime
    for (int i = rank + 1; i < m.rows; ++i) {
      if (at(i, c) == 0) continue;
      long long f = mulmod(at(i, c), inv);
      for (int j = c; j < m.cols; ++j) {
        long long v = at(i, j) - mulmod(f, at(rank, j));
        at(i, j) = v < 0 ? v + p : v;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntMat& m) {
  // Work on B = [m^T | I]; unimodular row operations bring the left block to
  // echelon form, after which the right blocks of the zero rows span the
  // kernel lattice of m.
  int nr = m.cols;           // rows of B = columns of m
  int nc = m.rows + m.cols;  // left block m.rows wide, right block identity
  IntMat b(nr, nc);
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < m.rows; ++j) b.at(i, j) = m.at(j, i);
    b.at(i, m.rows + i) = 1;
  }
  int r = 0;
  for (int c = 0; c < m.rows && r < nr; ++c) {
    while (true) {
      // Pivot: row at or below r with the smallest nonzero magnitude in col c.
      int pivot = -1;
      for (int i = r; i < nr; ++i) {
        if (b.at(i, c) == 0) continue;
        if (pivot < 0 || mpz_cmpabs(b.at(i, c).get_mpz_t(), b.at(pivot, c).get_mpz_t()) < 0)
          pivot = i;
      }
      if (pivot < 0) break;  // column already clear below r
      if (pivot != r)
        for (int j = 0; j < nc; ++j) std::swap(b.at(pivot, j), b.at(r, j));
      bool clear = true;
      for (int i = r + 1; i < nr; ++i) {
        if (b.at(i, c) == 0) continue;
        // Round-to-nearest quotient keeps entries small.
        mpz_class num = b.at(i, c), den = b.at(r, c);
        mpz_class q = num / den;
        mpz_class rem = num - q * den;
        if (2 * abs(rem) > abs(den)) q += (sgn(rem) == sgn(den)) ? 1 : -1;
        if (q != 0)
          for (int j = 0; j < nc; ++j) b.at(i, j) -= q * b.at(r, j);
        if (b.at(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (b.at(r, c) != 0) ++r;
  }
  std::vector<std::vector<mpz_class>> kernel;
  for (int i = r; i < nr; ++i) {
    std::vector<mpz_class> v(nr);
    bool nonzero = false;
    for (int j = 0; j < nr; ++j) {
      v[j] = b.at(i, m.rows + j);
      if (v[j] != 0) nonzero = true;
    }
    if (!nonzero) throw internal_error("kernel elimination produced a zero right block");
    // Sign normalization: first nonzero entry positive.
    for (int j = 0; j < nr; ++j) {
      if (v[j] != 0) {
        if (v[j] < 0)
          for (auto& x : v) x = -x;
        break;
      }
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace mb
