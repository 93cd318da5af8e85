#include "convcode/fmatrix.hpp"

#include <sstream>
#include <stdexcept>

namespace convcode {

std::size_t hamming_weight(const FVector& v) {
  std::size_t w = 0;
  for (Elem e : v) w += e != 0;
  return w;
}

FMatrix::FMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FMatrix::FMatrix(const Field& f, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(&f), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("FMatrix: data size does not match dimensions");
}

FMatrix FMatrix::identity(const Field& f, std::size_t n) {
  FMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FMatrix FMatrix::from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  FMatrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("FMatrix: ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j] >= f.order()) throw std::invalid_argument("FMatrix: element code out of range");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

FVector FMatrix::row(std::size_t i) const {
  return FVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

FVector FMatrix::col(std::size_t j) const {
  FVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("FMatrix: dimension mismatch in product");
  const Field& f = *field_;
  FMatrix out(f, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Elem a = (*this)(i, l);
      if (!a) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) = f.add(out(i, j), f.mul(a, o(l, j)));
    }
  return out;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FMatrix: dimension mismatch in sum");
  FMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], o.data_[i]);
  return out;
}

FMatrix FMatrix::transpose() const {
  FMatrix out(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool FMatrix::operator==(const FMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

FVector FMatrix::left_mul(const FVector& x) const {
  if (x.size() != rows_) throw std::invalid_argument("FMatrix: vector length mismatch");
  const Field& f = *field_;
  FVector out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] = f.add(out[j], f.mul(x[i], (*this)(i, j)));
  }
  return out;
}

namespace {

// Row echelon form of `m` in place; the same row operations are applied to
// `companion` (which must have m.rows() rows). Returns pivot columns.
std::vector<std::size_t> echelon(FMatrix& m, FMatrix* companion) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    auto swap_rows = [&](FMatrix& x) {
      for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(p, j), x(r, j));
    };
    if (p != r) {
      swap_rows(m);
      if (companion) swap_rows(*companion);
    }
    const Elem inv = f.inv(m(r, c));
    auto scale_row = [&](FMatrix& x) {
      for (std::size_t j = 0; j < x.cols(); ++j) x(r, j) = f.mul(x(r, j), inv);
    };
    scale_row(m);
    if (companion) scale_row(*companion);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem factor = m(i, c);
      auto eliminate = [&](FMatrix& x) {
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = f.sub(x(i, j), f.mul(factor, x(r, j)));
      };
      eliminate(m);
      if (companion) eliminate(*companion);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t FMatrix::rank() const {
  FMatrix copy(*this);
  return echelon(copy, nullptr).size();
}

FMatrix FMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of a non-square matrix");
  FMatrix copy(*this);
  FMatrix inv = identity(*field_, rows_);
  if (echelon(copy, &inv).size() != rows_) throw std::domain_error("matrix is singular");
  return inv;
}

FMatrix FMatrix::left_kernel() const {
  FMatrix copy(*this);
  FMatrix track = identity(*field_, rows_);
  const std::size_t r = echelon(copy, &track).size();
  FMatrix out(*field_, rows_ - r, rows_);
  for (std::size_t i = r; i < rows_; ++i)
    for (std::size_t j = 0; j < rows_; ++j) out(i - r, j) = track(i, j);
  return out;
}

std::optional<FVector> FMatrix::solve_left(const FVector& b) const {
  if (b.size() != cols_) throw std::invalid_argument("FMatrix: right-hand side length mismatch");
  // x * M = b  <=>  M^T x^T = b^T; eliminate on the transposed system.
  FMatrix t = transpose();
  FMatrix rhs(*field_, cols_, 1);
  for (std::size_t i = 0; i < cols_; ++i) rhs(i, 0) = b[i];
  const auto pivots = echelon(t, &rhs);
  for (std::size_t i = pivots.size(); i < t.rows(); ++i)
    if (rhs(i, 0) != 0) return std::nullopt;
  FVector x(rows_, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs(i, 0);
  return x;
}

std::string FMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << field_->format((*this)(i, j));
    }
  }
  os << "]";
  return os.str();
}

FVector add(const Field& f, const FVector& a, const FVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  FVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

FVector scale(const Field& f, Elem s, const FVector& a) {
  FVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(s, a[i]);
  return out;
}

bool next_vector(const Field& f, FVector& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (++v[i] < f.order()) return true;
    v[i] = 0;
  }
  return false;
}

std::size_t vector_index(const Field& f, const FVector& v) {
  std::size_t idx = 0;
  for (Elem e : v) idx = idx * f.order() + e;
  return idx;
}

FVector vector_at(const Field& f, std::size_t len, std::size_t index) {
  FVector v(len, 0);
  for (std::size_t i = len; i-- > 0;) {
    v[i] = static_cast<Elem>(index % f.order());
    index /= f.order();
  }
  return v;
}

}  // namespace convcode
