#include "convcode/wenum.hpp"

#include <algorithm>
#include <stdexcept>

namespace convcode {

WPoly::WPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

WPoly WPoly::monomial(std::size_t e, const BigInt& c) {
  WPoly p;
  p.add_term(e, c);
  return p;
}

void WPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

InfInt WPoly::del() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return InfInt{i};
  return InfInt::inf();
}

BigInt WPoly::at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

void WPoly::add_term(std::size_t e, const BigInt& c) {
  if (coeffs_.size() <= e) coeffs_.resize(e + 1);
  coeffs_[e] += c;
  trim();
}

WPoly& WPoly::operator+=(const WPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

WPoly WPoly::operator+(const WPoly& o) const {
  WPoly r(*this);
  return r += o;
}

WPoly WPoly::operator-() const {
  WPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

WPoly WPoly::operator-(const WPoly& o) const { return *this + (-o); }

WPoly WPoly::operator*(const WPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return WPoly(std::move(out));
}

bool WPoly::operator<(const WPoly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  return std::lexicographical_compare(coeffs_.begin(), coeffs_.end(), o.coeffs_.begin(), o.coeffs_.end());
}

std::string WPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    std::string term;
    if (i == 0) {
      term = mag.str();
    } else {
      const std::string w = i == 1 ? "W" : "W^" + std::to_string(i);
      term = mag == 1 ? w : mag.str() + w;
    }
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? "-" : "+") + term;
  }
  return out;
}

WPoly we_of_set(const std::vector<FVector>& vectors) {
  WPoly p;
  for (const auto& v : vectors) p.add_term(hamming_weight(v));
  return p;
}

WSeries::WSeries(std::size_t order, std::vector<WPoly> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

void WSeries::check_order(const WSeries& o) const {
  if (order() != o.order()) throw std::invalid_argument("series with different truncation orders");
}

WSeries WSeries::operator+(const WSeries& o) const {
  check_order(o);
  WSeries r(*this);
  for (std::size_t l = 0; l <= order(); ++l) r.coeffs_[l] += o.coeffs_[l];
  return r;
}

WSeries WSeries::operator-(const WSeries& o) const {
  check_order(o);
  WSeries r(*this);
  for (std::size_t l = 0; l <= order(); ++l) r.coeffs_[l] -= o.coeffs_[l];
  return r;
}

WSeries WSeries::operator*(const WSeries& o) const {
  check_order(o);
  WSeries r(order());
  for (std::size_t a = 0; a <= order(); ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; a + b <= order(); ++b) r.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  return r;
}

WSeries WSeries::inverse() const {
  if (!(coeffs_[0] == WPoly::one())) throw std::domain_error("series inverse: constant term is not 1");
  WSeries inv(order());
  inv.coeffs_[0] = WPoly::one();
  for (std::size_t l = 1; l <= order(); ++l) {
    WPoly acc;
    for (std::size_t i = 1; i <= l; ++i) acc += coeffs_[i] * inv.coeffs_[l - i];
    inv.coeffs_[l] = -acc;
  }
  return inv;
}

std::string WSeries::to_string() const {
  std::string out;
  for (std::size_t l = 0; l <= order(); ++l) {
    if (coeffs_[l].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[l].to_string() + ")" + (l == 0 ? "" : l == 1 ? "L" : "L^" + std::to_string(l));
  }
  return out.empty() ? "0" : out;
}

}  // namespace convcode
