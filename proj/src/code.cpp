#include "convcode/code.hpp"

#include <mutex>
#include <numeric>

#include "convcode/errors.hpp"

namespace convcode {

struct ConvCode::Canonical {
  std::once_flag once;
  std::optional<HermiteResult> result;
};

ConvCode::ConvCode(PolyMatrix input, Reduction reduction)
    : input_(std::move(input)),
      transform_(std::move(reduction.transform)),
      encoder_(std::move(reduction.reduced)),
      indices_(sorted_row_degrees(encoder_)),
      degree_(std::accumulate(indices_.begin(), indices_.end(), 0)),
      canonical_(std::make_shared<Canonical>()) {}

ConvCode ConvCode::from_encoder(const PolyMatrix& g) {
  if (g.rows() == 0 || g.rows() > g.cols()) throw PreconditionError("encoder must have 1 <= k <= n");
  return ConvCode(g, reduce(g));
}

const HermiteResult& ConvCode::hermite() const {
  std::call_once(canonical_->once, [this] { canonical_->result = hermite_decompose(encoder_); });
  return *canonical_->result;
}

const PolyMatrix& ConvCode::canonical() const { return hermite().form; }

std::optional<PolyVector> ConvCode::contains(const PolyVector& v) const {
  if (v.size() != length()) return std::nullopt;
  for (const auto& p : v)
    if (&p.field() != &field()) return std::nullopt;
  return solve_message(hermite(), v);
}

ConvCode ConvCode::dual() const {
  if (dimension() == length()) throw PreconditionError("the dual of the full space is the zero code");
  return from_encoder(right_kernel_basis(encoder_));
}

bool ConvCode::operator==(const ConvCode& o) const {
  return &field() == &o.field() && length() == o.length() && dimension() == o.dimension() &&
         canonical() == o.canonical();
}

}  // namespace convcode
