#pragma once

#include <random>
#include <string>
#include <vector>

#include "convcode/polymatrix.hpp"

namespace convcode::testing {

inline Poly bin(const Field& f, std::vector<Elem> c) { return Poly(f, std::move(c)); }

/// Binary polynomial from a bit string, lowest power first: "101" = 1 + z^2.
inline Poly bits(const std::string& s) {
  const Field& f = Field::get(2);
  std::vector<Elem> c;
  for (char ch : s) c.push_back(ch == '1' ? 1 : 0);
  return Poly(f, c);
}

inline Poly random_poly(const Field& f, std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<unsigned> elem(0, f.order() - 1);
  std::vector<Elem> c(static_cast<std::size_t>(max_deg + 1));
  for (auto& x : c) x = static_cast<Elem>(elem(rng));
  return Poly(f, c);
}

inline PolyVector random_vector(const Field& f, std::mt19937& rng, std::size_t n, int max_deg) {
  PolyVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_poly(f, rng, max_deg));
  return v;
}

inline PolyMatrix random_matrix(const Field& f, std::mt19937& rng, std::size_t k, std::size_t n, int max_deg) {
  PolyMatrix m(f, k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_poly(f, rng, max_deg);
  return m;
}

/// Product of random elementary row operations: unimodular by construction.
inline PolyMatrix random_unimodular(const Field& f, std::mt19937& rng, std::size_t k, int max_deg, int steps = 6) {
  PolyMatrix u = PolyMatrix::identity(f, k);
  if (k < 2) {
    std::uniform_int_distribution<unsigned> nz(1, f.order() - 1);
    u(0, 0) = Poly::constant(f, static_cast<Elem>(nz(rng)));
    return u;
  }
  std::uniform_int_distribution<std::size_t> idx(0, k - 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t a = idx(rng);
    std::size_t b = idx(rng);
    if (a == b) b = (b + 1) % k;
    const Poly factor = random_poly(f, rng, max_deg);
    for (std::size_t j = 0; j < k; ++j) u(a, j) += factor * u(b, j);
  }
  return u;
}

/// Random basic k x n matrix (rejection sampling).
inline PolyMatrix random_basic(const Field& f, std::mt19937& rng, std::size_t k, std::size_t n, int max_deg) {
  while (true) {
    PolyMatrix g = random_matrix(f, rng, k, n, max_deg);
    if (is_basic(g)) return g;
  }
}

/// Random reduced basic matrix whose row degrees are at most max_deg.
inline PolyMatrix random_reduced(const Field& f, std::mt19937& rng, std::size_t k, std::size_t n, int max_deg) {
  while (true) {
    PolyMatrix g = random_matrix(f, rng, k, n, max_deg);
    if (!is_basic(g)) continue;
    bool zero_row = false;
    for (int d : g.row_degrees()) zero_row = zero_row || d < 0;
    if (zero_row) continue;
    if (is_reduced(g)) return g;
  }
}

}  // namespace convcode::testing
