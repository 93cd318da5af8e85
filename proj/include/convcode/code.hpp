#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "convcode/polymatrix.hpp"

namespace convcode {

/// A convolutional code: the row module of a basic encoder over GF(q)[z].
///
/// The code keeps a reduced encoder (produced by `reduce` from the input) and
/// its Forney indices. Copies share one lazily computed Hermite form.
class ConvCode {
 public:
  /// Throws PreconditionError if `g` is not basic.
  static ConvCode from_encoder(const PolyMatrix& g);

  const Field& field() const { return encoder_.field(); }
  std::size_t length() const { return encoder_.cols(); }
  std::size_t dimension() const { return encoder_.rows(); }

  /// Reduced encoder; row order as produced by the reduction.
  const PolyMatrix& encoder() const { return encoder_; }
  /// The matrix the code was built from, and U with encoder() = U * input.
  const PolyMatrix& input_encoder() const { return input_; }
  const PolyMatrix& reduction_transform() const { return transform_; }

  /// Sorted descending.
  const std::vector<int>& forney_indices() const { return indices_; }
  int degree() const { return degree_; }
  int memory() const { return indices_.empty() ? 0 : indices_.front(); }

  PolyVector encode(const PolyVector& u) const { return encoder_.left_mul(u); }
  /// The message u with u * encoder() = v, if v is a codeword.
  std::optional<PolyVector> contains(const PolyVector& v) const;

  /// Hermite form of the encoder, computed once.
  const PolyMatrix& canonical() const;

  ConvCode dual() const;

  bool operator==(const ConvCode& o) const;

 private:
  struct Canonical;

  ConvCode(PolyMatrix input, Reduction reduction);
  const HermiteResult& hermite() const;

  PolyMatrix input_;
  PolyMatrix transform_;
  PolyMatrix encoder_;
  std::vector<int> indices_;
  int degree_ = 0;
  std::shared_ptr<Canonical> canonical_;
};

}  // namespace convcode
