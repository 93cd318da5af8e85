#include "convcode/gf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace convcode {

namespace {

// Dense polynomials over GF(p) with ascending coefficients; used only while
// building a field.
using PrimePoly = std::vector<unsigned>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PrimePoly prime_mod(PrimePoly a, const PrimePoly& b, unsigned p) {
  trim(a);
  const unsigned lead_inv = [&] {
    for (unsigned x = 1; x < p; ++x)
      if ((x * b.back()) % p == 1) return x;
    return 1u;
  }();
  while (a.size() >= b.size()) {
    const unsigned factor = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p * p - factor * b[i] % p) % p;
    trim(a);
  }
  return a;
}

bool is_irreducible(const PrimePoly& f, unsigned p) {
  const unsigned m = static_cast<unsigned>(f.size()) - 1;
  if (m <= 1) return m == 1;
  // Trial division by every monic polynomial of degree 1 .. m/2.
  for (unsigned d = 1; 2 * d <= m; ++d) {
    std::size_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      PrimePoly g(d + 1, 0);
      std::size_t c = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (prime_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> smallest_irreducible(unsigned p, unsigned m) {
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  std::size_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  // Enumerate (c_0, ..., c_{m-1}) with c_0 most significant.
  for (std::size_t code = 0; code < count; ++code) {
    PrimePoly f(m + 1, 0);
    std::size_t c = code;
    for (unsigned i = m; i-- > 0;) {
      f[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

const Field& Field::get(unsigned p, unsigned m, unsigned max_order) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  const unsigned bound = std::min(max_order, kHardMaxFieldOrder);
  unsigned long long q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > bound)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                  " exceeds the bound " + std::to_string(bound));
  }

  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[{p, m}];
  if (!slot) slot.reset(new Field(p, m, smallest_irreducible(p, m)));
  return *slot;
}

Field::Field(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m; ++i) q_ *= p;

  auto decode = [&](unsigned code) {
    PrimePoly a(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      a[i] = code % p_;
      code /= p_;
    }
    return a;
  };
  auto encode = [&](const PrimePoly& a) {
    unsigned code = 0;
    for (std::size_t i = a.size(); i-- > 0;) code = code * p_ + a[i];
    return static_cast<Elem>(code);
  };

  add_.resize(std::size_t{q_} * q_);
  mul_.resize(std::size_t{q_} * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    const PrimePoly pa = decode(a);
    PrimePoly na(m_);
    for (unsigned i = 0; i < m_; ++i) na[i] = (p_ - pa[i]) % p_;
    neg_[a] = encode(na);
    for (unsigned b = 0; b < q_; ++b) {
      const PrimePoly pb = decode(b);
      PrimePoly s(m_);
      for (unsigned i = 0; i < m_; ++i) s[i] = (pa[i] + pb[i]) % p_;
      add_[a * q_ + b] = encode(s);
      PrimePoly prod(2 * m_ - 1, 0);
      for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
      PrimePoly r = m_ == 1 ? prod : prime_mod(prod, modulus_, p_);
      r.resize(m_, 0);
      mul_[a * q_ + b] = encode(r);
    }
  }
  for (unsigned a = 1; a < q_; ++a)
    for (unsigned b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Elem>(b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(q_);
  for (unsigned i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
  return out;
}

std::string Field::format(Elem a) const {
  if (in_prime_subfield(a)) return std::to_string(a);
  Elem power = alpha();
  for (unsigned k = 1; k + 1 < q_; ++k) {
    if (power == a) return k == 1 ? std::string("a") : "a" + std::to_string(k);
    power = mul(power, alpha());
    if (power == alpha()) break;
  }
  std::string out;
  unsigned code = a;
  for (unsigned i = 0; i < m_; ++i) {
    const unsigned c = code % p_;
    code /= p_;
    if (c == 0) continue;
    std::string term;
    if (i == 0) {
      term = std::to_string(c);
    } else {
      term = (c == 1 ? "" : std::to_string(c)) + "a" + (i == 1 ? "" : "^" + std::to_string(i));
    }
    out = out.empty() ? term : term + "+" + out;
  }
  return "(" + out + ")";
}

FieldElement::FieldElement(const Field& f, Elem v) : field_(&f), value_(v) {
  if (v >= f.order()) throw std::invalid_argument("element code out of range for GF(" + std::to_string(f.order()) + ")");
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_) throw std::invalid_argument("arithmetic between elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  return {*field_, field_->add(value_, o.value_)};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  return {*field_, field_->sub(value_, o.value_)};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  return {*field_, field_->mul(value_, o.value_)};
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  return {*field_, field_->div(value_, o.value_)};
}

}  // namespace convcode
