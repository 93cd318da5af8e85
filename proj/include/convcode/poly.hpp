#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "convcode/fmatrix.hpp"
#include "convcode/gf.hpp"
#include "convcode/infint.hpp"

namespace convcode {

/// Polynomial in z over GF(q), ascending coefficients without trailing zeros.
///
/// degree() of the zero polynomial is -1, below every real degree; delay()
/// of the zero polynomial is infinite.
class Poly {
 public:
  explicit Poly(const Field& f) : field_(&f) {}
  Poly(const Field& f, std::vector<Elem> coeffs);
  static Poly constant(const Field& f, Elem c) { return Poly(f, {c}); }
  /// c * z^degree
  static Poly monomial(const Field& f, Elem c, std::size_t degree);
  static Poly z(const Field& f) { return monomial(f, 1, 1); }

  const Field& field() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  InfInt delay() const;
  Elem coeff(std::size_t t) const { return t < coeffs_.size() ? coeffs_[t] : Elem{0}; }
  Elem leading() const { return coeffs_.empty() ? Elem{0} : coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Number of nonzero coefficients.
  std::size_t weight() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem c) const;
  /// this * z^s
  Poly shifted(std::size_t s) const;
  /// this / z^s; precondition: delay() >= s.
  Poly unshifted(std::size_t s) const;
  /// Coefficients 0..t only.
  Poly truncated(std::size_t t) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  /// Euclidean division; throws std::domain_error for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly monic() const;

  bool operator==(const Poly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  void check_field(const Poly& o) const;

  const Field* field_;
  std::vector<Elem> coeffs_;
};

Poly gcd(Poly a, Poly b);

/// Row vector of polynomials. The sum over t of the Hamming weights of the
/// constant coefficient vectors v_t is its weight.
using PolyVector = std::vector<Poly>;

PolyVector zero_vector(const Field& f, std::size_t n);
bool is_zero(const PolyVector& v);
std::size_t weight(const PolyVector& v);
InfInt delay(const PolyVector& v);
/// Maximal entry degree; -1 for the zero vector.
int degree(const PolyVector& v);
/// Coefficient vector v_t in F^n.
FVector coefficient(const PolyVector& v, std::size_t t);
/// v_{[0, j]}
PolyVector truncated(const PolyVector& v, std::size_t j);
PolyVector add(const PolyVector& a, const PolyVector& b);
PolyVector sub(const PolyVector& a, const PolyVector& b);
PolyVector scaled(const PolyVector& a, const Poly& s);
/// Builds v = sum_t coeffs[t] z^t.
PolyVector from_coefficients(const Field& f, std::size_t n, const std::vector<FVector>& coeffs);
std::string to_string(const PolyVector& v);

}  // namespace convcode
