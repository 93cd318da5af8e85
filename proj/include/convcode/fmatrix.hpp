#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convcode/gf.hpp"

namespace convcode {

/// Row vector over a field, stored as raw element codes.
using FVector = std::vector<Elem>;

std::size_t hamming_weight(const FVector& v);

/// Dense matrix over GF(q).
class FMatrix {
 public:
  FMatrix(const Field& f, std::size_t rows, std::size_t cols);
  FMatrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Elem> data);
  static FMatrix identity(const Field& f, std::size_t n);
  /// Builds a matrix from rows of integer codes.
  static FMatrix from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows);

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::vector<Elem>& data() const { return data_; }

  FVector row(std::size_t i) const;
  FVector col(std::size_t j) const;

  FMatrix operator*(const FMatrix& o) const;
  FMatrix operator+(const FMatrix& o) const;
  FMatrix transpose() const;
  bool operator==(const FMatrix& o) const;

  /// x * this for a row vector x of length rows().
  FVector left_mul(const FVector& x) const;

  std::size_t rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  /// Throws std::domain_error if singular.
  FMatrix inverse() const;
  /// Basis (as rows) of { y : y * this = 0 }.
  FMatrix left_kernel() const;
  /// Some x with x * this = b, if one exists.
  std::optional<FVector> solve_left(const FVector& b) const;

  std::string to_string() const;

 private:
  const Field* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// Vector arithmetic helpers over one field.
FVector add(const Field& f, const FVector& a, const FVector& b);
FVector scale(const Field& f, Elem s, const FVector& a);

/// Mixed-radix enumeration of F^len in canonical order (leftmost coordinate
/// most significant). Returns false after the last vector.
bool next_vector(const Field& f, FVector& v);

/// Index of v in the canonical enumeration of F^len.
std::size_t vector_index(const Field& f, const FVector& v);
FVector vector_at(const Field& f, std::size_t len, std::size_t index);

}  // namespace convcode
