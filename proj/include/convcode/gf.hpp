#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace convcode {

/// Canonical integer encoding of an element of GF(p^m): the residue
/// c_0 + c_1 x + ... + c_{m-1} x^{m-1} is stored as sum c_i p^i.
using Elem = std::uint16_t;

inline constexpr unsigned kDefaultMaxFieldOrder = 256;
inline constexpr unsigned kHardMaxFieldOrder = 1024;

/// The finite field GF(p^m) with table-driven arithmetic.
///
/// Fields are interned: `Field::get(p, m)` always returns the same object
/// for the same (p, m), so field identity can be compared by address. The
/// modulus is the lexicographically smallest monic irreducible polynomial of
/// degree m over GF(p), coefficients compared from the constant term up.
class Field {
 public:
  /// Returns GF(p^m). Throws std::invalid_argument if p is not prime, m == 0
  /// or p^m exceeds `max_order`.
  static const Field& get(unsigned p, unsigned m = 1, unsigned max_order = kDefaultMaxFieldOrder);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  unsigned characteristic() const { return p_; }
  unsigned extension_degree() const { return m_; }
  unsigned order() const { return q_; }
  /// Monic modulus, ascending coefficients (size m + 1).
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  /// Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Image of the integer n under Z -> GF(p) -> GF(p^m).
  Elem from_int(long long n) const;
  /// The class of x modulo the field polynomial (only meaningful for m > 1).
  Elem alpha() const { return m_ > 1 ? static_cast<Elem>(p_) : Elem{0}; }
  bool in_prime_subfield(Elem a) const { return a < p_; }

  /// All q elements in canonical order 0, 1, ...
  std::vector<Elem> elements() const;

  /// Text form: integers for the prime subfield, `a`, `a2`, ... for powers
  /// of alpha, otherwise a parenthesized polynomial in `a`.
  std::string format(Elem a) const;

  bool operator==(const Field& o) const { return this == &o; }

 private:
  Field(unsigned p, unsigned m, std::vector<unsigned> modulus);

  unsigned p_;
  unsigned m_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

bool is_prime(unsigned n);

/// Monic irreducible modulus chosen for GF(p^m); see Field.
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned m);

/// An element bound to its field. Arithmetic between elements of different
/// fields throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(const Field& f, Elem v);

  const Field& field() const { return *field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
  FieldElement inverse() const { return {*field_, field_->inv(value_)}; }

  bool operator==(const FieldElement& o) const { return field_ == o.field_ && value_ == o.value_; }
  /// Canonical order; only meaningful within one field.
  bool operator<(const FieldElement& o) const { return value_ < o.value_; }

  std::string to_string() const { return field_->format(value_); }

 private:
  void check_same_field(const FieldElement& o) const;

  const Field* field_;
  Elem value_;
};

}  // namespace convcode
