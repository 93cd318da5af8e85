#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convcode/fmatrix.hpp"
#include "convcode/poly.hpp"

namespace convcode {

/// Dense k x n matrix over GF(q)[z], row-major.
class PolyMatrix {
 public:
  PolyMatrix(const Field& f, std::size_t rows, std::size_t cols);
  static PolyMatrix identity(const Field& f, std::size_t n);
  static PolyMatrix from_rows(const std::vector<PolyVector>& rows);
  static PolyMatrix from_constant(const FMatrix& m);

  const Field& field() const { return *field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  PolyVector row(std::size_t i) const;
  PolyVector col(std::size_t j) const;
  void set_row(std::size_t i, const PolyVector& v);

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix transpose() const;
  bool operator==(const PolyMatrix& o) const;

  /// u * this for a message u of length rows().
  PolyVector left_mul(const PolyVector& u) const;

  /// Coefficient matrix of z^t.
  FMatrix coefficient(std::size_t t) const;
  /// Maximal entry degree (-1 for the zero matrix).
  int max_degree() const;
  std::vector<int> row_degrees() const;
  /// Row i is the coefficient of z^{nu_i} in row i, nu_i its row degree.
  FMatrix leading_row_matrix() const;
  /// Matrix with the listed rows, in order.
  PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;

  std::string to_string() const;

 private:
  const Field* field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> data_;
};

/// Determinant of a square matrix (fraction-free elimination).
Poly determinant(const PolyMatrix& m);

/// Maximal degree of the k x k minors. Throws PreconditionError if rank < k
/// or k > n.
int matrix_degree(const PolyMatrix& g);

/// True iff the k x k minors have a nonzero constant gcd.
bool is_basic(const PolyMatrix& g);

/// True iff the leading row coefficient matrix has full row rank.
/// Throws PreconditionError on a zero row.
bool is_reduced(const PolyMatrix& g);

struct Reduction {
  PolyMatrix transform;  ///< unimodular U
  PolyMatrix reduced;    ///< U * G, reduced
};

/// Row reduction to a reduced encoder of the same row module.
///
/// While the leading row coefficient matrix is singular, a left kernel
/// vector of it is used to cancel the leading coefficients of the
/// highest-degree participating row (largest index on ties). Each step lowers
/// the sum of row degrees. Throws PreconditionError if G is not basic.
Reduction reduce(const PolyMatrix& g);

/// Same procedure for any full-row-rank matrix; no basicness check.
Reduction row_reduce(const PolyMatrix& g);

/// Forney indices sorted in descending order.
std::vector<int> sorted_row_degrees(const PolyMatrix& g);

struct HermiteResult {
  PolyMatrix transform;  ///< unimodular T
  PolyMatrix form;       ///< T * G
  std::vector<std::size_t> pivot_cols;
};

/// Row echelon form over GF(q)[z] with monic pivots and entries above a
/// pivot of strictly smaller degree. Canonical for the row module.
/// Throws PreconditionError if G is not basic.
PolyMatrix hermite_form(const PolyMatrix& g);
/// Full-row-rank input, transform included; no basicness check.
HermiteResult hermite_decompose(const PolyMatrix& g);

/// Basic H of size (n-k) x n with H G^T = 0. Throws PreconditionError if G is
/// not basic.
PolyMatrix right_kernel_basis(const PolyMatrix& g);

/// The message u with u G = v, if v lies in the row module of the
/// full-row-rank matrix behind `h`.
std::optional<PolyVector> solve_message(const HermiteResult& h, const PolyVector& v);

}  // namespace convcode
