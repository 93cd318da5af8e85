#include "convcode/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace convcode {

Poly::Poly(const Field& f, std::vector<Elem> coeffs) : field_(&f), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_)
    if (c >= f.order()) throw std::invalid_argument("polynomial coefficient out of range");
  trim();
}

Poly Poly::monomial(const Field& f, Elem c, std::size_t degree) {
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Poly(f, std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::check_field(const Poly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("polynomials over different fields");
}

InfInt Poly::delay() const {
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    if (coeffs_[t]) return InfInt{t};
  return InfInt::inf();
}

std::size_t Poly::weight() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c != 0; }));
}

Poly Poly::operator+(const Poly& o) const {
  check_field(o);
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->add(coeff(i), o.coeff(i));
  Poly r(*field_);
  r.coeffs_ = std::move(out);
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check_field(o);
  std::vector<Elem> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(coeff(i), o.coeff(i));
  Poly r(*field_);
  r.coeffs_ = std::move(out);
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (Elem& c : r.coeffs_) c = field_->neg(c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_field(o);
  if (is_zero() || o.is_zero()) return Poly(*field_);
  std::vector<Elem> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i]) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] = field_->add(out[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
  }
  Poly r(*field_);
  r.coeffs_ = std::move(out);
  r.trim();
  return r;
}

Poly Poly::scaled(Elem c) const {
  Poly r(*this);
  for (Elem& x : r.coeffs_) x = field_->mul(c, x);
  r.trim();
  return r;
}

Poly Poly::shifted(std::size_t s) const {
  if (is_zero()) return *this;
  Poly r(*field_);
  r.coeffs_.assign(s, 0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Poly Poly::unshifted(std::size_t s) const {
  if (is_zero()) return *this;
  if (delay() < InfInt{s}) throw std::domain_error("polynomial is not divisible by the requested power of z");
  Poly r(*field_);
  r.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(s), coeffs_.end());
  return r;
}

Poly Poly::truncated(std::size_t t) const {
  if (coeffs_.size() <= t + 1) return *this;
  Poly r(*field_);
  r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(t + 1));
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  check_field(d);
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = *field_;
  Poly rem(*this);
  Poly quot(f);
  if (rem.degree() < d.degree()) return {quot, rem};
  quot.coeffs_.assign(static_cast<std::size_t>(rem.degree() - d.degree() + 1), 0);
  const Elem lead_inv = f.inv(d.leading());
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
    const Elem factor = f.mul(rem.leading(), lead_inv);
    quot.coeffs_[shift] = factor;
    for (std::size_t i = 0; i < d.coeffs_.size(); ++i)
      rem.coeffs_[shift + i] = f.sub(rem.coeffs_[shift + i], f.mul(factor, d.coeffs_[i]));
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    const Elem c = coeffs_[t];
    if (!c) continue;
    std::string term;
    const std::string cs = field_->format(c);
    if (t == 0) {
      term = cs;
    } else {
      const std::string zs = t == 1 ? "z" : "z^" + std::to_string(t);
      term = c == 1 ? zs : cs + "*" + zs;
    }
    out += out.empty() ? term : "+" + term;
  }
  return out;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyVector zero_vector(const Field& f, std::size_t n) { return PolyVector(n, Poly(f)); }

bool is_zero(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

std::size_t weight(const PolyVector& v) {
  std::size_t w = 0;
  for (const auto& p : v) w += p.weight();
  return w;
}

InfInt delay(const PolyVector& v) {
  InfInt d = InfInt::inf();
  for (const auto& p : v) d = std::min(d, p.delay());
  return d;
}

int degree(const PolyVector& v) {
  int d = -1;
  for (const auto& p : v) d = std::max(d, p.degree());
  return d;
}

FVector coefficient(const PolyVector& v, std::size_t t) {
  FVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].coeff(t);
  return out;
}

PolyVector truncated(const PolyVector& v, std::size_t j) {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.truncated(j));
  return out;
}

PolyVector add(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  PolyVector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] + b[i]);
  return out;
}

PolyVector sub(const PolyVector& a, const PolyVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  PolyVector out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] - b[i]);
  return out;
}

PolyVector scaled(const PolyVector& a, const Poly& s) {
  PolyVector out;
  out.reserve(a.size());
  for (const auto& p : a) out.push_back(p * s);
  return out;
}

PolyVector from_coefficients(const Field& f, std::size_t n, const std::vector<FVector>& coeffs) {
  std::vector<std::vector<Elem>> entries(n, std::vector<Elem>(coeffs.size(), 0));
  for (std::size_t t = 0; t < coeffs.size(); ++t) {
    if (coeffs[t].size() != n) throw std::invalid_argument("coefficient vector length mismatch");
    for (std::size_t i = 0; i < n; ++i) entries[i][t] = coeffs[t][i];
  }
  PolyVector out;
  out.reserve(n);
  for (auto& e : entries) out.emplace_back(f, std::move(e));
  return out;
}

std::string to_string(const PolyVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

}  // namespace convcode
