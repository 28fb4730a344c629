#pragma once

#include <gmpxx.h>

#include <vector>

#include "mb/error.hpp"

namespace mb {

// Dense integer matrix over arbitrary-precision integers, row major.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<mpz_class> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  mpz_class& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Rank over the rationals via fraction-free (Bareiss) elimination.
// Exact for any integer matrix; entry growth is bounded by minors.
int bareiss_rank(IntMat m);

// Rank over the prime field F_p (p prime, p < 2^31); Gaussian elimination
// with machine arithmetic.
int rank_mod_p(const IntMat& m, long long p);

// Basis of the integer kernel lattice {v : m v = 0} via unimodular row
// reduction of [m^T | I].  The result is deterministic; vectors have
// arbitrary-precision entries (callers at desk scale can narrow them).
std::vector<std::vector<mpz_class>> integer_kernel_basis(const IntMat& m);

inline long long to_ll(const mpz_class& z) {
  if (!z.fits_slong_p()) throw internal_error("integer overflows long long during narrowing");
  return z.get_si();
}

}  // namespace mb
