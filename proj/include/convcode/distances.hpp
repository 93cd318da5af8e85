#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convcode/budget.hpp"
#include "convcode/code.hpp"
#include "convcode/infint.hpp"
#include "convcode/wam.hpp"
#include "convcode/wenum.hpp"

namespace convcode {

enum class DistanceFamily { column, extended_row, active_column, active_row, active_segment, active_burst };

std::string to_string(DistanceFamily f);
/// Accepts the names produced by to_string ("column", "extended_row", ...).
std::optional<DistanceFamily> parse_family(const std::string& name);

/// values[i] is the distance for j = jmin + i.
struct DistanceProfile {
  DistanceFamily family;
  std::size_t jmin = 0;
  std::vector<InfInt> values;

  std::size_t jmax() const { return jmin + values.size() - 1; }
  /// Throws std::out_of_range outside jmin..jmax.
  InfInt at(std::size_t j) const;
  bool operator==(const DistanceProfile& o) const = default;
};

/// Omega_1 .. Omega_N: Omega_l enumerates atomic codewords of degree l - 1
/// by weight.
struct OmegaSeries {
  std::vector<WPoly> omegas;

  std::size_t order() const { return omegas.size(); }
  /// Omega_l for 1 <= l <= order().
  const WPoly& operator()(std::size_t l) const { return omegas.at(l - 1); }
  bool operator==(const OmegaSeries& o) const { return omegas == o.omegas; }
};

using DelayMatrix = std::vector<std::vector<InfInt>>;

/// Entrywise delay.
DelayMatrix delay_matrix(const WAM& w);
/// (min, +) product; equals the delay matrix of the product for WAMs with
/// nonnegative coefficients.
DelayMatrix min_plus(const DelayMatrix& a, const DelayMatrix& b);
/// M_1 .. M_jmax with M_j the delay matrix of tilde(w)^j. Dense; throws
/// BudgetExceeded for more than 1024 states.
std::vector<DelayMatrix> tilde_delay_powers(const WAM& w, std::size_t jmax);
/// Exact power of a WAM (dense products; meant for small state spaces).
WAM wam_power(const WAM& w, std::size_t j);

/// Phi = sum_j L^j (hat(w)^j)_{0,0}, truncated after L^order.
WSeries phi_series(const WAM& w, std::size_t order);
/// Omega from we(C) = 2 - Phi^{-1}.
OmegaSeries omega_series(const WAM& w, std::size_t order);
OmegaSeries omega_series(const ConvCode& c, std::size_t order, const Budgets& budgets = {});

/// Weight enumerator coefficients 1, Omega_1, ..., Omega_order as a series.
WSeries weight_enumerator(const OmegaSeries& omega);

/// d^c_j = min_Y del((hat(w) w^j)_{0,Y}).
DistanceProfile column_distances(const WAM& w, std::size_t jmax);
/// d^r_j = del(Omega_{j+1}).
DistanceProfile extended_row_distances(const OmegaSeries& omega, std::size_t jmax);
DistanceProfile extended_row_distances(const WAM& w, std::size_t jmax);

/// Smallest j for which the active burst distance is defined: 0 when some
/// Forney index is zero (detected from w(0,0) != 1), else 1.
std::size_t active_burst_jmin(const WAM& w);

/// family in {active_column, active_segment, active_burst}:
/// a^c_j = min_Y del(tilde(w)^{j+1}_{0,Y}), a^s_j = min_{X,Y} del(...),
/// a^b_j = del(tilde(w)^{j+1}_{0,0}). Throws std::invalid_argument for other
/// families or jmax below the burst range.
DistanceProfile active_distances(const WAM& w, DistanceFamily family, std::size_t jmax);

/// a^b_j as the least total delay of Omega_{M_1}, ..., Omega_{M_r} over all
/// compositions M_1 + ... + M_r = j + 1 with parts M_l >= 2.
DistanceProfile active_burst_by_composition(const OmegaSeries& omega, std::size_t jmin, std::size_t jmax);

/// a^r_j by enumeration of all messages u of degree exactly j with uG in S_j;
/// an encoder property. Throws PreconditionError for non-reduced G and
/// BudgetExceeded past budgets.enumeration.
DistanceProfile active_row_distances(const PolyMatrix& g, std::size_t jmax, const Budgets& budgets = {});

/// Any family for a code; active_row uses the stored reduced encoder.
DistanceProfile distance_profile(const ConvCode& c, DistanceFamily family, std::size_t jmax,
                                 const Budgets& budgets = {});

/// Minimum weight of a nonzero codeword, via delays of Omega_l with a
/// certified stopping rule. Throws BudgetExceeded if no certificate is found
/// within budgets.path_length steps.
std::uint64_t free_distance(const WAM& w, const Budgets& budgets = {});
std::uint64_t free_distance(const ConvCode& c, const Budgets& budgets = {});

/// The same quantities straight from their definitions, by enumerating
/// messages and following the state sequences of the controller canonical
/// form. Used to validate the WAM formulas.
namespace enumerate {

DistanceProfile column_distances(const ConvCode& c, std::size_t jmax, const Budgets& budgets = {});
DistanceProfile active_column_distances(const ConvCode& c, std::size_t jmax, const Budgets& budgets = {});
DistanceProfile active_segment_distances(const ConvCode& c, std::size_t jmax, const Budgets& budgets = {});
DistanceProfile active_burst_distances(const ConvCode& c, std::size_t jmax, const Budgets& budgets = {});
/// Weight enumerators of the atomic codewords of degree 0 .. order-1.
OmegaSeries omega_series(const ConvCode& c, std::size_t order, const Budgets& budgets = {});
DistanceProfile extended_row_distances(const ConvCode& c, std::size_t jmax, const Budgets& budgets = {});

}  // namespace enumerate

}  // namespace convcode
