#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "convcode/fmatrix.hpp"
#include "convcode/infint.hpp"

namespace convcode {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in W with integer coefficients, ascending, no trailing zeros.
/// Weight enumerators have nonnegative coefficients; negative ones only show
/// up inside series inversion.
class WPoly {
 public:
  WPoly() = default;
  explicit WPoly(std::vector<BigInt> coeffs);
  static WPoly one() { return monomial(0); }
  /// c * W^e
  static WPoly monomial(std::size_t e, const BigInt& c = 1);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  /// Smallest exponent with a nonzero coefficient; infinite for zero.
  InfInt del() const;
  BigInt at_one() const;

  WPoly operator+(const WPoly& o) const;
  WPoly operator-(const WPoly& o) const;
  WPoly operator-() const;
  WPoly operator*(const WPoly& o) const;
  WPoly& operator+=(const WPoly& o);
  WPoly& operator-=(const WPoly& o) { return *this = *this - o; }
  /// Adds c * W^e in place.
  void add_term(std::size_t e, const BigInt& c = 1);

  bool operator==(const WPoly& o) const { return coeffs_ == o.coeffs_; }
  /// Total order used for canonical fingerprints: degree, then coefficients.
  bool operator<(const WPoly& o) const;

  /// "0", "1+2W+W^2", "W^5-W^10".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Weight enumerator of a set of constant vectors.
WPoly we_of_set(const std::vector<FVector>& vectors);

/// Power series in L with WPoly coefficients, truncated after L^order.
class WSeries {
 public:
  explicit WSeries(std::size_t order = 12) : coeffs_(order + 1) {}
  WSeries(std::size_t order, std::vector<WPoly> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const WPoly& operator[](std::size_t l) const { return coeffs_[l]; }
  WPoly& operator[](std::size_t l) { return coeffs_[l]; }

  WSeries operator+(const WSeries& o) const;
  WSeries operator-(const WSeries& o) const;
  WSeries operator*(const WSeries& o) const;
  bool operator==(const WSeries& o) const { return coeffs_ == o.coeffs_; }

  /// Multiplicative inverse up to the truncation order. Requires the L^0
  /// coefficient to be the constant 1; throws std::domain_error otherwise.
  WSeries inverse() const;

  std::string to_string() const;

 private:
  void check_order(const WSeries& o) const;
  std::vector<WPoly> coeffs_;
};

}  // namespace convcode
