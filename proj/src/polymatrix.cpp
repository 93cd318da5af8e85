#include "convcode/polymatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "convcode/errors.hpp"

namespace convcode {

PolyMatrix::PolyMatrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(&f), rows_(rows), cols_(cols), data_(rows * cols, Poly(f)) {}

PolyMatrix PolyMatrix::identity(const Field& f, std::size_t n) {
  PolyMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(f, 1);
  return m;
}

PolyMatrix PolyMatrix::from_rows(const std::vector<PolyVector>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("PolyMatrix: empty matrix");
  const Field& f = rows.front().front().field();
  PolyMatrix m(f, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("PolyMatrix: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (&rows[i][j].field() != &f) throw std::invalid_argument("PolyMatrix: entries over different fields");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

PolyMatrix PolyMatrix::from_constant(const FMatrix& c) {
  PolyMatrix m(c.field(), c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = Poly::constant(c.field(), c(i, j));
  return m;
}

PolyVector PolyMatrix::row(std::size_t i) const {
  return PolyVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

PolyVector PolyMatrix::col(std::size_t j) const {
  PolyVector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

void PolyMatrix::set_row(std::size_t i, const PolyVector& v) {
  if (v.size() != cols_) throw std::invalid_argument("PolyMatrix: row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix: dimension mismatch in product");
  PolyMatrix out(*field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = 0; l < cols_; ++l) {
      const Poly& a = (*this)(i, l);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(l, j);
    }
  return out;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix out(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

PolyVector PolyMatrix::left_mul(const PolyVector& u) const {
  if (u.size() != rows_) throw std::invalid_argument("message length does not match the number of rows");
  PolyVector out = zero_vector(*field_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] += u[i] * (*this)(i, j);
  }
  return out;
}

FMatrix PolyMatrix::coefficient(std::size_t t) const {
  FMatrix out(*field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).coeff(t);
  return out;
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& p : data_) d = std::max(d, p.degree());
  return d;
}

std::vector<int> PolyMatrix::row_degrees() const {
  std::vector<int> out(rows_, -1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] = std::max(out[i], (*this)(i, j).degree());
  return out;
}

FMatrix PolyMatrix::leading_row_matrix() const {
  const auto degs = row_degrees();
  FMatrix out(*field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (degs[i] < 0) continue;
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).coeff(static_cast<std::size_t>(degs[i]));
  }
  return out;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMatrix out(*field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) out.set_row(i, row(idx[i]));
  return out;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).to_string();
    }
  }
  os << "]";
  return os.str();
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  if (n == 0) return Poly::constant(f, 1);
  PolyMatrix a(m);
  Poly prev = Poly::constant(f, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return Poly(f);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)).divmod(prev).first;
      a(i, k) = Poly(f);
    }
    prev = a(k, k);
  }
  Poly det = a(n - 1, n - 1);
  return negate ? -det : det;
}

namespace {

// Calls fn(minor) for every k x k minor of g (columns in lexicographic
// subset order) until fn returns false.
template <typename Fn>
void for_each_maximal_minor(const PolyMatrix& g, Fn&& fn) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  PolyMatrix sub(g.field(), k, k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = g(i, cols[j]);
    if (!fn(determinant(sub))) return;
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

void add_row_multiple(PolyMatrix& m, std::size_t target, std::size_t source, const Poly& factor) {
  if (factor.is_zero()) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void swap_rows(PolyMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void scale_row(PolyMatrix& m, std::size_t r, Elem c) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = m(r, j).scaled(c);
}

struct Echelon {
  PolyMatrix transform;
  PolyMatrix form;
  std::vector<std::size_t> pivot_cols;
};

// Hermite-style echelon form of an arbitrary matrix; zero rows collect at
// the bottom and are matched by the rows of `transform` spanning the left
// kernel.
Echelon echelon(const PolyMatrix& g) {
  const Field& f = g.field();
  Echelon e{PolyMatrix::identity(f, g.rows()), g, {}};
  PolyMatrix& a = e.form;
  PolyMatrix& t = e.transform;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i)
        if (!a(i, c).is_zero() && (best == a.rows() || a(i, c).degree() < a(best, c).degree())) best = i;
      if (best == a.rows()) break;
      swap_rows(a, r, best);
      swap_rows(t, r, best);
      bool remaining = false;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c).is_zero()) continue;
        const Poly q = a(i, c).divmod(a(r, c)).first;
        add_row_multiple(a, i, r, -q);
        add_row_multiple(t, i, r, -q);
        remaining = remaining || !a(i, c).is_zero();
      }
      if (!remaining) {
        have_pivot = true;
        break;
      }
    }
    if (!have_pivot) continue;
    const Elem inv = f.inv(a(r, c).leading());
    scale_row(a, r, inv);
    scale_row(t, r, inv);
    for (std::size_t i = 0; i < r; ++i) {
      const Poly q = a(i, c).divmod(a(r, c)).first;
      add_row_multiple(a, i, r, -q);
      add_row_multiple(t, i, r, -q);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

void require_basic(const PolyMatrix& g, const char* what) {
  if (!is_basic(g)) throw PreconditionError(std::string(what) + ": matrix is not basic");
}

}  // namespace

int matrix_degree(const PolyMatrix& g) {
  if (g.rows() > g.cols()) throw PreconditionError("matrix_degree: more rows than columns");
  int best = -1;
  for_each_maximal_minor(g, [&](const Poly& minor) {
    best = std::max(best, minor.degree());
    return true;
  });
  if (best < 0) throw PreconditionError("matrix_degree: matrix does not have full row rank");
  return best;
}

bool is_basic(const PolyMatrix& g) {
  if (g.rows() > g.cols()) return false;
  Poly acc(g.field());
  bool done = false;
  for_each_maximal_minor(g, [&](const Poly& minor) {
    acc = gcd(acc, minor);
    done = !acc.is_zero() && acc.is_constant();
    return !done;
  });
  return done;
}

bool is_reduced(const PolyMatrix& g) {
  for (int d : g.row_degrees())
    if (d < 0) throw PreconditionError("is_reduced: matrix has a zero row");
  return g.leading_row_matrix().rank() == g.rows();
}

Reduction row_reduce(const PolyMatrix& g) {
  const Field& f = g.field();
  Reduction out{PolyMatrix::identity(f, g.rows()), g};
  PolyMatrix& u = out.transform;
  PolyMatrix& a = out.reduced;
  while (true) {
    const auto degs = a.row_degrees();
    for (int d : degs)
      if (d < 0) throw PreconditionError("reduce: matrix does not have full row rank");
    const FMatrix kernel = a.leading_row_matrix().left_kernel();
    if (kernel.rows() == 0) break;
    const FVector rel = kernel.row(0);
    std::size_t target = a.rows();
    for (std::size_t i = 0; i < rel.size(); ++i)
      if (rel[i] && (target == a.rows() || degs[i] >= degs[target])) target = i;
    const Elem inv = f.inv(rel[target]);
    for (std::size_t i = 0; i < rel.size(); ++i) {
      if (i == target || !rel[i]) continue;
      const Poly factor = Poly::monomial(f, f.mul(rel[i], inv), static_cast<std::size_t>(degs[target] - degs[i]));
      add_row_multiple(a, target, i, factor);
      add_row_multiple(u, target, i, factor);
    }
  }
  return out;
}

Reduction reduce(const PolyMatrix& g) {
  require_basic(g, "reduce");
  return row_reduce(g);
}

std::vector<int> sorted_row_degrees(const PolyMatrix& g) {
  auto d = g.row_degrees();
  std::sort(d.rbegin(), d.rend());
  return d;
}

HermiteResult hermite_decompose(const PolyMatrix& g) {
  Echelon e = echelon(g);
  if (e.pivot_cols.size() != g.rows()) throw PreconditionError("hermite form: matrix does not have full row rank");
  return {std::move(e.transform), std::move(e.form), std::move(e.pivot_cols)};
}

PolyMatrix hermite_form(const PolyMatrix& g) {
  require_basic(g, "hermite_form");
  return hermite_decompose(g).form;
}

PolyMatrix right_kernel_basis(const PolyMatrix& g) {
  require_basic(g, "right_kernel_basis");
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  Echelon e = echelon(g.transpose());
  if (e.pivot_cols.size() != k) throw std::logic_error("right_kernel_basis: unexpected rank");
  PolyMatrix h(g.field(), n - k, n);
  for (std::size_t i = k; i < n; ++i) h.set_row(i - k, e.transform.row(i));
  return h;
}

std::optional<PolyVector> solve_message(const HermiteResult& h, const PolyVector& v) {
  const PolyMatrix& form = h.form;
  if (v.size() != form.cols()) throw std::invalid_argument("solve_message: vector length mismatch");
  const Field& f = form.field();
  PolyVector residual = v;
  PolyVector w = zero_vector(f, form.rows());
  for (std::size_t i = 0; i < form.rows(); ++i) {
    const std::size_t c = h.pivot_cols[i];
    auto [q, rem] = residual[c].divmod(form(i, c));
    if (!rem.is_zero()) return std::nullopt;
    w[i] = q;
    if (!q.is_zero()) residual = sub(residual, scaled(form.row(i), q));
  }
  if (!is_zero(residual)) return std::nullopt;
  return h.transform.left_mul(w);
}

}  // namespace convcode
