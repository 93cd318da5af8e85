#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "convcode/budget.hpp"
#include "convcode/fmatrix.hpp"
#include "convcode/polymatrix.hpp"
#include "convcode/realization.hpp"
#include "convcode/wenum.hpp"

namespace convcode {

/// Weight adjacency matrix: a q^delta x q^delta matrix of WPoly indexed by
/// state pairs. States are numbered in canonical order (leftmost coordinate
/// most significant, see vector_index). Rows are stored sparsely, sorted by
/// column.
class WAM {
 public:
  using Entry = std::pair<std::size_t, WPoly>;

  WAM(const Field& f, std::size_t delta);

  const Field& field() const { return *field_; }
  std::size_t delta() const { return delta_; }
  std::size_t size() const { return rows_.size(); }

  /// Entry (X, Y); the zero polynomial when absent.
  const WPoly& operator()(std::size_t x, std::size_t y) const;
  /// Replaces entry (X, Y); a zero value removes it.
  void set(std::size_t x, std::size_t y, WPoly value);
  const std::vector<Entry>& row(std::size_t x) const { return rows_[x]; }

  bool operator==(const WAM& o) const { return field_ == o.field_ && delta_ == o.delta_ && rows_ == o.rows_; }

  /// Dense rendering with state labels.
  std::string to_string() const;

 private:
  const Field* field_;
  std::size_t delta_;
  std::vector<std::vector<Entry>> rows_;
};

/// WAM of the controller canonical form of a basic reduced encoder.
/// Throws PreconditionError for other inputs and BudgetExceeded when q^delta
/// exceeds budgets.states or q^(delta+k) exceeds budgets.enumeration.
WAM wam(const PolyMatrix& g, const Budgets& budgets = {});
WAM wam(const Realization& r, const Budgets& budgets = {});

/// Copy with the (0,0) entry removed.
WAM tilde(const WAM& w);
/// Copy with 1 subtracted from the (0,0) entry. Throws std::invalid_argument
/// if that entry has no constant term 1.
WAM hat(const WAM& w);

/// Some invertible T with w(X, Y) = w2(XT, YT) for all states, if any. The
/// identity is tried first; otherwise the first witness in lexicographic
/// order of the rows of T. Throws std::invalid_argument on a field or size
/// mismatch and BudgetExceeded when |GL_delta(q)| exceeds
/// budgets.linear_group.
std::optional<FMatrix> wam_equivalent(const WAM& w, const WAM& w2, const Budgets& budgets = {});

/// True iff w(X, Y) == w2(XT, YT) for all X, Y.
bool wam_related_by(const WAM& w, const WAM& w2, const FMatrix& t);

/// Order of GL_d(q), saturated just above `limit`.
std::uint64_t general_linear_order(std::uint64_t q, std::uint64_t d, std::uint64_t limit);

}  // namespace convcode
