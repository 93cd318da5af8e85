#include "convcode/realization.hpp"

#include <algorithm>

#include "convcode/errors.hpp"

namespace convcode {

Realization ccf(const PolyMatrix& g) {
  if (!is_basic(g)) throw PreconditionError("ccf: encoder is not basic");
  if (!is_reduced(g)) throw PreconditionError("ccf: encoder is not reduced");
  const Field& f = g.field();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  const std::vector<int> nu = g.row_degrees();
  std::size_t delta = 0;
  for (int d : nu) delta += static_cast<std::size_t>(d);

  Realization r{FMatrix(f, delta, delta), FMatrix(f, k, delta), FMatrix(f, delta, n), g.coefficient(0), nu};
  std::size_t offset = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const auto size = static_cast<std::size_t>(nu[i]);
    if (size == 0) continue;
    r.B(i, offset) = 1;
    for (std::size_t l = 0; l < size; ++l) {
      if (l + 1 < size) r.A(offset + l, offset + l + 1) = 1;
      for (std::size_t j = 0; j < n; ++j) r.C(offset + l, j) = g(i, j).coeff(l + 1);
    }
    offset += size;
  }
  return r;
}

FVector Trajectory::state(std::size_t t) const {
  if (t < states.size()) return states[t];
  return FVector(states.front().size(), 0);
}

Trajectory run(const Realization& r, const PolyVector& u) {
  if (u.size() != r.inputs()) throw std::invalid_argument("run: message length does not match the realization");
  const Field& f = r.field();
  const int du = degree(u);
  // After the last input the state drains in at most delta steps.
  const std::size_t steps = du < 0 ? 0 : static_cast<std::size_t>(du) + 1 + r.state_dim();
  FVector x(r.state_dim(), 0);
  std::vector<FVector> states{x};
  std::vector<FVector> outputs;
  for (std::size_t t = 0; t < steps; ++t) {
    const FVector ut = coefficient(u, t);
    outputs.push_back(add(f, r.C.left_mul(x), r.D.left_mul(ut)));
    x = add(f, r.A.left_mul(x), r.B.left_mul(ut));
    states.push_back(x);
  }
  while (states.size() > 1 && std::all_of(states.back().begin(), states.back().end(), [](Elem e) { return e == 0; }))
    states.pop_back();
  return {from_coefficients(f, r.outputs(), outputs), std::move(states)};
}

namespace {

bool is_zero_state(const FVector& x) {
  return std::all_of(x.begin(), x.end(), [](Elem e) { return e == 0; });
}

Trajectory codeword_trajectory(const ConvCode& c, const PolyVector& v) {
  const auto u = c.contains(v);
  if (!u) throw PreconditionError("vector is not a codeword of the code");
  return run(ccf(c.encoder()), *u);
}

}  // namespace

bool is_atomic(const ConvCode& c, const PolyVector& v) {
  if (is_zero(v)) throw PreconditionError("is_atomic: zero codeword");
  const Trajectory tr = codeword_trajectory(c, v);
  if (coefficient(v, 0) == FVector(v.size(), 0)) return false;
  const auto n = static_cast<std::size_t>(degree(v));
  for (std::size_t t = 1; t <= n; ++t)
    if (is_zero_state(tr.state(t))) return false;
  return true;
}

bool in_S_j(const ConvCode& c, const PolyVector& v, std::size_t j) {
  const Trajectory tr = codeword_trajectory(c, v);
  for (std::size_t i = 0; i <= j; ++i)
    if (is_zero_state(tr.state(i)) && is_zero_state(tr.state(i + 1))) return false;
  return true;
}

}  // namespace convcode
