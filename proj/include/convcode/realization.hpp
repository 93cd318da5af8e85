#pragma once

#include <vector>

#include "convcode/code.hpp"
#include "convcode/fmatrix.hpp"
#include "convcode/polymatrix.hpp"

namespace convcode {

/// State-space system x_{t+1} = x_t A + u_t B, v_t = x_t C + u_t D with
/// x_0 = 0. A is delta x delta, B is k x delta, C is delta x n, D is k x n.
struct Realization {
  FMatrix A;
  FMatrix B;
  FMatrix C;
  FMatrix D;
  /// Row degrees of the encoder, in row order.
  std::vector<int> row_degrees;

  std::size_t state_dim() const { return A.rows(); }
  std::size_t inputs() const { return D.rows(); }
  std::size_t outputs() const { return D.cols(); }
  const Field& field() const { return D.field(); }
};

/// Controller canonical form of a basic reduced encoder. Row i with degree
/// nu_i > 0 owns a block of nu_i state coordinates holding its last nu_i
/// inputs; blocks appear in row order. Throws PreconditionError otherwise.
Realization ccf(const PolyMatrix& g);

struct Trajectory {
  PolyVector output;
  /// States x_0, x_1, ..., up to the last nonzero state (just x_0 when all
  /// states vanish).
  std::vector<FVector> states;

  /// x_t, zero beyond the stored range.
  FVector state(std::size_t t) const;
};

Trajectory run(const Realization& r, const PolyVector& u);

/// Codeword with nonzero constant term whose states x_1..x_N are all nonzero,
/// N = deg v. Throws PreconditionError if v is zero or not in the code.
bool is_atomic(const ConvCode& c, const PolyVector& v);

/// True iff (x_i, x_{i+1}) != (0, 0) for i = 0..j along the state sequence
/// of v. Throws PreconditionError if v is not in the code.
bool in_S_j(const ConvCode& c, const PolyVector& v, std::size_t j);

}  // namespace convcode
