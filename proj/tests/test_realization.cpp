#include <doctest.h>

#include "convcode/errors.hpp"
#include "convcode/realization.hpp"
#include "support.hpp"

using namespace convcode;
using namespace convcode::testing;

namespace {

PolyMatrix row(std::initializer_list<const char*> entries) {
  PolyVector v;
  for (const char* e : entries) v.push_back(bits(e));
  return PolyMatrix::from_rows({v});
}

// Shift-register state: the last nu_i inputs of each row, newest first.
FVector register_state(const PolyMatrix& g, const PolyVector& u, std::size_t t) {
  FVector x;
  const auto nu = g.row_degrees();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (int l = 1; l <= nu[i]; ++l) x.push_back(t >= static_cast<std::size_t>(l) ? u[i].coeff(t - l) : 0);
  return x;
}

// x_t = sum_{s=1}^{delta} u_{t-s} B A^{s-1}.
FVector transfer_state(const Realization& r, const PolyVector& u, std::size_t t) {
  const Field& f = r.field();
  FVector x(r.state_dim(), 0);
  FMatrix power = FMatrix::identity(f, r.state_dim());
  for (std::size_t s = 1; s <= r.state_dim() && s <= t; ++s) {
    x = add(f, x, power.left_mul(r.B.left_mul(coefficient(u, t - s))));
    power = power * r.A;
  }
  return x;
}

// Atomic without reference to states: nonzero constant term and no proper
// prefix v_[0, L] lies in the code.
bool atomic_oracle(const ConvCode& c, const PolyVector& v) {
  if (hamming_weight(coefficient(v, 0)) == 0) return false;
  for (int l = 0; l < degree(v); ++l)
    if (c.contains(truncated(v, static_cast<std::size_t>(l)))) return false;
  return true;
}

// x_i = 0 iff v_[0, i-1] lies in the code (x_0 = 0).
bool in_S_j_oracle(const ConvCode& c, const PolyVector& v, std::size_t j) {
  auto zero_state = [&](std::size_t i) { return i == 0 || c.contains(truncated(v, i - 1)).has_value(); };
  for (std::size_t i = 0; i <= j; ++i)
    if (zero_state(i) && zero_state(i + 1)) return false;
  return true;
}

}  // namespace

TEST_CASE("controller canonical form of (1, z, z, 1+z)") {
  const Realization r = ccf(row({"1", "01", "01", "11"}));
  const Field& f = Field::get(2);
  CHECK(r.A == FMatrix(f, 1, 1, {0}));
  CHECK(r.B == FMatrix(f, 1, 1, {1}));
  CHECK(r.C == FMatrix(f, 1, 4, {0, 1, 1, 1}));
  CHECK(r.D == FMatrix(f, 1, 4, {1, 0, 0, 1}));
  CHECK_THROWS_AS(ccf(row({"11", "11"})), PreconditionError);
}

TEST_CASE("realization runs reproduce encoding and state formulas") {
  std::mt19937 rng(21);
  for (int t = 0; t < 40; ++t) {
    const Field& f = t % 2 ? Field::get(3) : Field::get(2);
    const std::size_t k = 1 + t % 3;
    const PolyMatrix g = random_reduced(f, rng, k, k + 1 + t % 2, 2);
    const Realization r = ccf(g);
    const PolyVector u = random_vector(f, rng, k, 5);
    const Trajectory tr = run(r, u);
    CHECK(tr.output == g.left_mul(u));
    for (std::size_t s = 0; s < 10; ++s) {
      CHECK(tr.state(s) == register_state(g, u, s));
      CHECK(tr.state(s) == transfer_state(r, u, s));
    }
  }
}

TEST_CASE("atomic codewords and S_j membership against truncation oracles") {
  std::mt19937 rng(22);
  for (int t = 0; t < 30; ++t) {
    const Field& f = t % 2 ? Field::get(3) : Field::get(2);
    const std::size_t k = 1 + t % 2;
    const ConvCode c = ConvCode::from_encoder(random_reduced(f, rng, k, k + 2, 2));
    for (int s = 0; s < 10; ++s) {
      const PolyVector u = random_vector(f, rng, k, 3);
      if (is_zero(u)) continue;
      const PolyVector v = c.encode(u);
      CHECK(is_atomic(c, v) == atomic_oracle(c, v));
      for (std::size_t j = 0; j < 5; ++j) CHECK(in_S_j(c, v, j) == in_S_j_oracle(c, v, j));
    }
  }
  const ConvCode c = ConvCode::from_encoder(row({"1", "01"}));
  CHECK_THROWS_AS(is_atomic(c, {bits("1"), bits("1")}), PreconditionError);
  CHECK_THROWS_AS(is_atomic(c, {bits(""), bits("")}), PreconditionError);
}

TEST_CASE("S_j and atomicity for (1, z, z, 1+z) in terms of the message") {
  // The state is x_t = u_{t-1}, so uG is in S_j iff u_0 != 0 and no two
  // consecutive coefficients among u_0..u_j vanish.
  const ConvCode c = ConvCode::from_encoder(row({"1", "01", "01", "11"}));
  for (unsigned m = 1; m < 64; ++m) {
    std::string s;
    for (int b = 0; b < 6; ++b) s += (m >> b) & 1 ? '1' : '0';
    const PolyVector v = c.encode({bits(s)});
    for (std::size_t j = 0; j < 6; ++j) {
      bool expected = s[0] == '1';
      for (std::size_t i = 0; i + 1 <= j; ++i) expected = expected && !(s[i] == '0' && s[i + 1] == '0');
      CHECK(in_S_j(c, v, j) == expected);
    }
    // Atomic: every state x_1..x_{deg v} nonzero, i.e. u has no zero
    // coefficient up to its degree.
    const std::string used = s.substr(0, s.find_last_of('1') + 1);
    CHECK(is_atomic(c, v) == (used.find('0') == std::string::npos));
  }
}
