#include "convcode/distances.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "convcode/errors.hpp"
#include "convcode/realization.hpp"

namespace convcode {

namespace {

constexpr std::array<std::pair<DistanceFamily, const char*>, 6> kFamilyNames{{
    {DistanceFamily::column, "column"},
    {DistanceFamily::extended_row, "extended_row"},
    {DistanceFamily::active_column, "active_column"},
    {DistanceFamily::active_row, "active_row"},
    {DistanceFamily::active_segment, "active_segment"},
    {DistanceFamily::active_burst, "active_burst"},
}};

using DelayRows = std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>>;
using DelayVector = std::vector<InfInt>;

DelayRows delay_rows(const WAM& w) {
  DelayRows rows(w.size());
  for (std::size_t x = 0; x < w.size(); ++x)
    for (const auto& [y, p] : w.row(x)) rows[x].emplace_back(y, p.del().value());
  return rows;
}

DelayVector step(const DelayVector& r, const DelayRows& m) {
  DelayVector out(r.size(), InfInt::inf());
  for (std::size_t x = 0; x < r.size(); ++x) {
    if (r[x].is_inf()) continue;
    for (const auto& [y, d] : m[x]) out[y] = std::min(out[y], r[x] + InfInt{d});
  }
  return out;
}

DelayVector unit_row(std::size_t size) {
  DelayVector r(size, InfInt::inf());
  r[0] = InfInt{0};
  return r;
}

InfInt min_of(const DelayVector& r) { return *std::min_element(r.begin(), r.end()); }

DistanceProfile make_profile(DistanceFamily f, std::size_t jmin) { return DistanceProfile{f, jmin, {}}; }

}  // namespace

std::string to_string(DistanceFamily f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "unknown";
}

std::optional<DistanceFamily> parse_family(const std::string& name) {
  for (const auto& [fam, n] : kFamilyNames)
    if (name == n) return fam;
  return std::nullopt;
}

InfInt DistanceProfile::at(std::size_t j) const {
  if (j < jmin || j - jmin >= values.size()) throw std::out_of_range("distance profile index out of range");
  return values[j - jmin];
}

DelayMatrix delay_matrix(const WAM& w) {
  DelayMatrix m(w.size(), std::vector<InfInt>(w.size(), InfInt::inf()));
  for (std::size_t x = 0; x < w.size(); ++x)
    for (const auto& [y, p] : w.row(x)) m[x][y] = p.del();
  return m;
}

DelayMatrix min_plus(const DelayMatrix& a, const DelayMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != (a.empty() ? 0 : a.front().size())) throw std::invalid_argument("min_plus: dimension mismatch");
  const std::size_t m = b.empty() ? 0 : b.front().size();
  DelayMatrix out(n, std::vector<InfInt>(m, InfInt::inf()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < b.size(); ++l) {
      if (a[i][l].is_inf()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] = std::min(out[i][j], a[i][l] + b[l][j]);
    }
  return out;
}

std::vector<DelayMatrix> tilde_delay_powers(const WAM& w, std::size_t jmax) {
  if (w.size() > 1024) throw BudgetExceeded("delay matrices: too many states for dense tables");
  const DelayMatrix base = delay_matrix(tilde(w));
  std::vector<DelayMatrix> out;
  for (std::size_t j = 1; j <= jmax; ++j) out.push_back(j == 1 ? base : min_plus(out.back(), base));
  return out;
}

WAM wam_power(const WAM& w, std::size_t j) {
  WAM acc(w.field(), w.delta());
  for (std::size_t s = 0; s < w.size(); ++s) acc.set(s, s, WPoly::one());
  for (std::size_t step_no = 0; step_no < j; ++step_no) {
    WAM next(w.field(), w.delta());
    for (std::size_t x = 0; x < w.size(); ++x) {
      std::vector<WPoly> row(w.size());
      for (const auto& [l, a] : acc.row(x))
        for (const auto& [y, b] : w.row(l)) row[y] += a * b;
      for (std::size_t y = 0; y < w.size(); ++y)
        if (!row[y].is_zero()) next.set(x, y, std::move(row[y]));
    }
    acc = std::move(next);
  }
  return acc;
}

WSeries phi_series(const WAM& w, std::size_t order) {
  const WAM h = hat(w);
  WSeries phi(order);
  std::vector<WPoly> r(w.size());
  r[0] = WPoly::one();
  phi[0] = WPoly::one();
  for (std::size_t l = 1; l <= order; ++l) {
    std::vector<WPoly> next(w.size());
    for (std::size_t x = 0; x < w.size(); ++x) {
      if (r[x].is_zero()) continue;
      for (const auto& [y, p] : h.row(x)) next[y] += r[x] * p;
    }
    r = std::move(next);
    phi[l] = r[0];
  }
  return phi;
}

OmegaSeries omega_series(const WAM& w, std::size_t order) {
  const WSeries inv = phi_series(w, order).inverse();
  OmegaSeries out;
  for (std::size_t l = 1; l <= order; ++l) {
    WPoly omega = -inv[l];
    for (const auto& c : omega.coeffs())
      if (c < 0) throw std::logic_error("omega series: negative coefficient");
    out.omegas.push_back(std::move(omega));
  }
  return out;
}

OmegaSeries omega_series(const ConvCode& c, std::size_t order, const Budgets& budgets) {
  return omega_series(wam(c.encoder(), budgets), order);
}

WSeries weight_enumerator(const OmegaSeries& omega) {
  WSeries s(omega.order());
  s[0] = WPoly::one();
  for (std::size_t l = 1; l <= omega.order(); ++l) s[l] = omega(l);
  return s;
}

DistanceProfile column_distances(const WAM& w, std::size_t jmax) {
  const DelayRows full = delay_rows(w);
  const DelayRows hatted = delay_rows(hat(w));
  DistanceProfile out = make_profile(DistanceFamily::column, 0);
  DelayVector r = step(unit_row(w.size()), hatted);
  out.values.push_back(min_of(r));
  for (std::size_t j = 1; j <= jmax; ++j) {
    r = step(r, full);
    out.values.push_back(min_of(r));
  }
  return out;
}

DistanceProfile extended_row_distances(const OmegaSeries& omega, std::size_t jmax) {
  if (omega.order() < jmax + 1) throw std::invalid_argument("extended row distances: omega series too short");
  DistanceProfile out = make_profile(DistanceFamily::extended_row, 0);
  for (std::size_t j = 0; j <= jmax; ++j) out.values.push_back(omega(j + 1).del());
  return out;
}

DistanceProfile extended_row_distances(const WAM& w, std::size_t jmax) {
  return extended_row_distances(omega_series(w, jmax + 1), jmax);
}

std::size_t active_burst_jmin(const WAM& w) { return w(0, 0) == WPoly::one() ? 1 : 0; }

DistanceProfile active_distances(const WAM& w, DistanceFamily family, std::size_t jmax) {
  const DelayRows t = delay_rows(tilde(w));
  switch (family) {
    case DistanceFamily::active_column: {
      DistanceProfile out = make_profile(family, 0);
      DelayVector r = unit_row(w.size());
      for (std::size_t j = 0; j <= jmax; ++j) {
        r = step(r, t);
        out.values.push_back(min_of(r));
      }
      return out;
    }
    case DistanceFamily::active_segment: {
      DistanceProfile out = make_profile(family, 0);
      DelayVector r(w.size(), InfInt{0});
      for (std::size_t j = 0; j <= jmax; ++j) {
        r = step(r, t);
        out.values.push_back(min_of(r));
      }
      return out;
    }
    case DistanceFamily::active_burst: {
      const std::size_t jmin = active_burst_jmin(w);
      if (jmax < jmin) throw std::invalid_argument("active burst distances start at j = " + std::to_string(jmin));
      DistanceProfile out = make_profile(family, jmin);
      DelayVector r = unit_row(w.size());
      for (std::size_t j = 0; j <= jmax; ++j) {
        r = step(r, t);
        if (j >= jmin) out.values.push_back(r[0]);
      }
      return out;
    }
    default:
      throw std::invalid_argument("active_distances: family must be active_column, active_segment or active_burst");
  }
}

DistanceProfile active_burst_by_composition(const OmegaSeries& omega, std::size_t jmin, std::size_t jmax) {
  if (jmax < jmin) throw std::invalid_argument("active burst distances: jmax below jmin");
  if (omega.order() < jmax + 1) throw std::invalid_argument("active burst distances: omega series too short");
  // best[s]: least total delay over compositions of s into parts >= 2.
  std::vector<InfInt> best(jmax + 2, InfInt::inf());
  best[0] = InfInt{0};
  for (std::size_t s = 2; s <= jmax + 1; ++s)
    for (std::size_t part = 2; part <= s; ++part) best[s] = std::min(best[s], best[s - part] + omega(part).del());
  DistanceProfile out = make_profile(DistanceFamily::active_burst, jmin);
  for (std::size_t j = jmin; j <= jmax; ++j) out.values.push_back(best[j + 1]);
  return out;
}

namespace {

// Enumerates message blocks u_t in F^k through the controller canonical form.
class Walker {
 public:
  Walker(const PolyMatrix& g, const Budgets& budgets) : r_(ccf(g)), f_(r_.field()), limit_(budgets.enumeration) {
    FVector u(r_.inputs(), 0);
    do {
      ub_.push_back(r_.B.left_mul(u));
      ud_.push_back(r_.D.left_mul(u));
    } while (next_vector(f_, u));
  }

  struct Step {
    FVector next;
    std::size_t weight;
  };

  std::size_t inputs() const { return ub_.size(); }
  std::size_t state_dim() const { return r_.state_dim(); }
  const Field& field() const { return f_; }
  FVector zero_state() const { return FVector(r_.state_dim(), 0); }

  Step step(const FVector& x, std::size_t u) {
    if (++visited_ > limit_) throw BudgetExceeded("enumeration budget exceeded");
    return {add(f_, r_.A.left_mul(x), ub_[u]), hamming_weight(add(f_, r_.C.left_mul(x), ud_[u]))};
  }

 private:
  Realization r_;
  const Field& f_;
  std::uint64_t limit_;
  std::uint64_t visited_ = 0;
  std::vector<FVector> ub_;
  std::vector<FVector> ud_;
};

bool is_zero_state(const FVector& x) {
  return std::all_of(x.begin(), x.end(), [](Elem e) { return e == 0; });
}

void relax(std::vector<InfInt>& best, std::size_t t, std::size_t w) { best[t] = std::min(best[t], InfInt{w}); }

}  // namespace

DistanceProfile active_row_distances(const PolyMatrix& g, std::size_t jmax, const Budgets& budgets) {
  Walker walker(g, budgets);
  int memory = 0;
  for (int d : g.row_degrees()) memory = std::max(memory, d);
  DistanceProfile out = make_profile(DistanceFamily::active_row, 0);
  for (std::size_t j = 0; j <= jmax; ++j) {
    InfInt best = InfInt::inf();
    // u_0 .. u_j with u_j != 0, pairs (x_i, x_{i+1}) != (0,0) for i <= j,
    // then m zero inputs to flush the remaining output.
    auto rec = [&](auto&& self, std::size_t t, const FVector& x, std::size_t weight) -> void {
      for (std::size_t u = 0; u < walker.inputs(); ++u) {
        if (t == j && u == 0) continue;
        const auto s = walker.step(x, u);
        if (is_zero_state(x) && is_zero_state(s.next)) continue;
        if (t < j) {
          self(self, t + 1, s.next, weight + s.weight);
          continue;
        }
        std::size_t total = weight + s.weight;
        FVector y = s.next;
        for (int i = 0; i < memory; ++i) {
          const auto flush = walker.step(y, 0);
          total += flush.weight;
          y = flush.next;
        }
        best = std::min(best, InfInt{total});
      }
    };
    rec(rec, 0, walker.zero_state(), 0);
    out.values.push_back(best);
  }
  return out;
}

DistanceProfile distance_profile(const ConvCode& c, DistanceFamily family, std::size_t jmax, const Budgets& budgets) {
  if (family == DistanceFamily::active_row) return active_row_distances(c.encoder(), jmax, budgets);
  const WAM w = wam(c.encoder(), budgets);
  switch (family) {
    case DistanceFamily::column:
      return column_distances(w, jmax);
    case DistanceFamily::extended_row:
      return extended_row_distances(w, jmax);
    default:
      return active_distances(w, family, jmax);
  }
}

std::uint64_t free_distance(const WAM& w, const Budgets& budgets) {
  const DelayRows t = delay_rows(tilde(w));
  InfInt best = hat(w)(0, 0).del();
  // first[y]: least delay of a path 0 -> y whose interior avoids state 0;
  // reach[y]: least delay of any path in tilde(w) from 0 to y.
  DelayVector first = step(unit_row(w.size()), t);
  first[0] = InfInt::inf();
  DelayVector reach = first;
  for (std::uint64_t l = 1; l <= budgets.path_length; ++l) {
    // Atomic codewords with l + 1 transitions end here.
    DelayVector closing = step(first, t);
    best = std::min(best, closing[0]);
    // Every longer atomic path starts with l + 1 transitions of tilde(w).
    reach = step(reach, t);
    if (best.is_finite() && min_of(reach) >= best) return best.value();
    closing[0] = InfInt::inf();
    first = std::move(closing);
  }
  throw BudgetExceeded("free distance: no certificate within the path length budget");
}

std::uint64_t free_distance(const ConvCode& c, const Budgets& budgets) {
  return free_distance(wam(c.encoder(), budgets), budgets);
}

namespace enumerate {

namespace {

struct ActivePaths {
  std::vector<InfInt> column;
  std::vector<InfInt> burst;
};

// Paths from the zero state of length up to jmax + 1 avoiding two
// consecutive zero states.
ActivePaths active_paths(const ConvCode& c, std::size_t jmax, const Budgets& budgets) {
  Walker walker(c.encoder(), budgets);
  ActivePaths out{std::vector<InfInt>(jmax + 1, InfInt::inf()), std::vector<InfInt>(jmax + 1, InfInt::inf())};
  auto rec = [&](auto&& self, std::size_t t, const FVector& x, std::size_t weight) -> void {
    for (std::size_t u = 0; u < walker.inputs(); ++u) {
      const auto s = walker.step(x, u);
      if (is_zero_state(x) && is_zero_state(s.next)) continue;
      const std::size_t w = weight + s.weight;
      relax(out.column, t, w);
      if (is_zero_state(s.next)) relax(out.burst, t, w);
      if (t < jmax) self(self, t + 1, s.next, w);
    }
  };
  rec(rec, 0, walker.zero_state(), 0);
  return out;
}

}  // namespace

DistanceProfile column_distances(const ConvCode& c, std::size_t jmax, const Budgets& budgets) {
  Walker walker(c.encoder(), budgets);
  std::vector<InfInt> best(jmax + 1, InfInt::inf());
  auto rec = [&](auto&& self, std::size_t t, const FVector& x, std::size_t weight) -> void {
    for (std::size_t u = 0; u < walker.inputs(); ++u) {
      const auto s = walker.step(x, u);
      if (t == 0 && s.weight == 0) continue;  // v_0 must be nonzero
      const std::size_t w = weight + s.weight;
      relax(best, t, w);
      if (t == jmax) continue;
      // Skip subtrees that cannot improve any later entry.
      InfInt worst = InfInt{0};
      for (std::size_t l = t + 1; l <= jmax; ++l) worst = std::max(worst, best[l]);
      if (worst.is_finite() && worst <= InfInt{w}) continue;
      self(self, t + 1, s.next, w);
    }
  };
  rec(rec, 0, walker.zero_state(), 0);
  return DistanceProfile{DistanceFamily::column, 0, best};
}

DistanceProfile active_column_distances(const ConvCode& c, std::size_t jmax, const Budgets& budgets) {
  return DistanceProfile{DistanceFamily::active_column, 0, active_paths(c, jmax, budgets).column};
}

DistanceProfile active_burst_distances(const ConvCode& c, std::size_t jmax, const Budgets& budgets) {
  const auto jmin = static_cast<std::size_t>(std::min(1, c.forney_indices().back()));
  if (jmax < jmin) throw std::invalid_argument("active burst distances start at j = " + std::to_string(jmin));
  const auto burst = active_paths(c, jmax, budgets).burst;
  return DistanceProfile{DistanceFamily::active_burst, jmin,
                         std::vector<InfInt>(burst.begin() + static_cast<std::ptrdiff_t>(jmin), burst.end())};
}

DistanceProfile active_segment_distances(const ConvCode& c, std::size_t jmax, const Budgets& budgets) {
  Walker walker(c.encoder(), budgets);
  const auto m = static_cast<std::size_t>(c.memory());
  const Field& f = walker.field();
  // States x_m reachable from x_0 = 0 by m arbitrary inputs.
  std::vector<bool> reachable(checked_power(f.order(), walker.state_dim(), budgets.states), false);
  auto reach = [&](auto&& self, std::size_t t, const FVector& x) -> void {
    if (t == m) {
      reachable[vector_index(f, x)] = true;
      return;
    }
    for (std::size_t u = 0; u < walker.inputs(); ++u) self(self, t + 1, walker.step(x, u).next);
  };
  reach(reach, 0, walker.zero_state());

  std::vector<InfInt> best(jmax + 1, InfInt::inf());
  auto rec = [&](auto&& self, std::size_t t, const FVector& x, std::size_t weight) -> void {
    for (std::size_t u = 0; u < walker.inputs(); ++u) {
      const auto s = walker.step(x, u);
      if (is_zero_state(x) && is_zero_state(s.next)) continue;
      relax(best, t, weight + s.weight);
      if (t < jmax) self(self, t + 1, s.next, weight + s.weight);
    }
  };
  for (std::size_t xi = 0; xi < reachable.size(); ++xi)
    if (reachable[xi]) rec(rec, 0, vector_at(f, walker.state_dim(), xi), 0);
  return DistanceProfile{DistanceFamily::active_segment, 0, best};
}

OmegaSeries omega_series(const ConvCode& c, std::size_t order, const Budgets& budgets) {
  Walker walker(c.encoder(), budgets);
  OmegaSeries out{std::vector<WPoly>(order)};
  // Atomic: v_0 != 0, the path leaves the zero state and returns to it
  // exactly after deg v + 1 transitions.
  auto rec = [&](auto&& self, std::size_t t, const FVector& x, std::size_t weight) -> void {
    for (std::size_t u = 0; u < walker.inputs(); ++u) {
      const auto s = walker.step(x, u);
      if (t == 0 && s.weight == 0) continue;
      const std::size_t w = weight + s.weight;
      if (is_zero_state(s.next)) {
        if (s.weight > 0) out.omegas[t].add_term(w);
        continue;
      }
      if (t + 1 < order) self(self, t + 1, s.next, w);
    }
  };
  if (order > 0) rec(rec, 0, walker.zero_state(), 0);
  return out;
}

DistanceProfile extended_row_distances(const ConvCode& c, std::size_t jmax, const Budgets& budgets) {
  return convcode::extended_row_distances(enumerate::omega_series(c, jmax + 1, budgets), jmax);
}

}  // namespace enumerate

}  // namespace convcode
