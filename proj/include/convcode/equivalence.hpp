#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convcode/budget.hpp"
#include "convcode/code.hpp"
#include "convcode/fmatrix.hpp"
#include "convcode/polymatrix.hpp"

namespace convcode {

/// n x n monomial matrix M = P D. Column i of G becomes column perm[i] of
/// G M, multiplied by scalars[perm[i]].
struct MonomialMatrix {
  const Field* field;
  std::vector<std::size_t> perm;
  std::vector<Elem> scalars;

  static MonomialMatrix identity(const Field& f, std::size_t n);
  std::size_t size() const { return perm.size(); }
  FMatrix to_matrix() const;
  PolyMatrix apply(const PolyMatrix& g) const;
  PolyVector apply(const PolyVector& v) const;
  /// this followed by o: G (this) (o).
  MonomialMatrix then(const MonomialMatrix& o) const;
  MonomialMatrix inverse() const;
  bool operator==(const MonomialMatrix& o) const = default;
};

/// Monomial matrix with an extra factor z^exponents[j] on destination column
/// j. Exponents may be negative, so images need not be polynomial.
struct ZMonomialMatrix {
  const Field* field;
  std::vector<std::size_t> perm;
  std::vector<Elem> scalars;
  std::vector<int> exponents;

  static ZMonomialMatrix identity(const Field& f, std::size_t n);
  static ZMonomialMatrix from_monomial(const MonomialMatrix& m);
  std::size_t size() const { return perm.size(); }
  /// Throws PreconditionError if some image column is not polynomial.
  PolyMatrix apply(const PolyMatrix& g) const;
  PolyVector apply(const PolyVector& v) const;
  bool maps_polynomially(const PolyMatrix& g) const;
  ZMonomialMatrix then(const ZMonomialMatrix& o) const;
  ZMonomialMatrix inverse() const;
  bool operator==(const ZMonomialMatrix& o) const = default;
};

/// M with gbar = g M, if the matrices are monomially equivalent. Columns are
/// matched after scaling each nonzero column so that its first nonzero
/// coefficient (entries in order, then ascending degree) is 1; the first
/// unused matching column of g is taken.
std::optional<MonomialMatrix> matrix_me(const PolyMatrix& g, const PolyMatrix& gbar);
/// Same, additionally dividing each column by z^(its delay).
std::optional<ZMonomialMatrix> matrix_zme(const PolyMatrix& g, const PolyMatrix& gbar);

/// Block-Toeplitz matrix of size k(nu+1) x n(2nu+1) with G_{c-r} in block
/// (r, c). Throws std::invalid_argument if nu < deg G.
FMatrix sliding_matrix(const PolyMatrix& g, std::size_t nu);

struct PairedIsometry {
  bool isometric = false;
  /// A message u of degree <= nu with wt(uG) != wt(u gbar).
  std::optional<PolyVector> counterexample;
};

/// Whether wt(uG) = wt(u gbar) for all u of degree <= nu, nu the largest
/// entry degree of both matrices; checked on the sliding matrices. Throws
/// BudgetExceeded past budgets.enumeration messages.
PairedIsometry paired_isometry(const PolyMatrix& g, const PolyMatrix& gbar, const Budgets& budgets = {});

/// Number of encoders U G with U unimodular and U G reduced with the same
/// row degree in every row, saturated just above `limit`.
std::uint64_t reduced_encoder_orbit_size(const PolyMatrix& g, std::uint64_t limit);

/// Calls visit(U, U G) for every such encoder until visit returns true;
/// returns whether it did. Throws PreconditionError if G is not reduced and
/// BudgetExceeded when the orbit is larger than budgets.orbit.
bool reduced_encoder_orbit(const PolyMatrix& g,
                           const std::function<bool(const PolyMatrix& u, const PolyMatrix& ug)>& visit,
                           const Budgets& budgets = {});

/// Reduced encoder with rows sorted by descending degree (stable).
PolyMatrix sorted_reduced_encoder(const ConvCode& c);

/// Unimodular U with U a = b for full-rank a, b of the same row module.
std::optional<PolyMatrix> transform_between(const PolyMatrix& a, const PolyMatrix& b);

struct MEWitness {
  PolyMatrix u;
  MonomialMatrix m;  ///< cbar.encoder() == u * m.apply(c.encoder())
};

struct ZMEWitness {
  PolyMatrix u;
  ZMonomialMatrix m;  ///< cbar.encoder() == u * m.apply(c.encoder())
};

struct StrongIsometryWitness {
  PolyMatrix g;     ///< reduced encoder of c
  PolyMatrix gbar;  ///< reduced encoder of cbar, zME to g with equal row degrees
  ZMonomialMatrix m;
};

/// Monomial equivalence of codes: searches the reduced-encoder orbit of c's
/// sorted reduced encoder for a matrix ME to cbar's. The orbit is walked row
/// by row and a prefix is abandoned as soon as its rows fail to be ME to the
/// same rows of the target. Throws BudgetExceeded past budgets.orbit search
/// nodes or budgets.enumeration row candidates.
std::optional<MEWitness> code_me(const ConvCode& c, const ConvCode& cbar, const Budgets& budgets = {});

/// Codes divided columnwise by z^(column delay), the delay of a column being
/// the least delay of that coordinate over all codewords.
ConvCode delay_normalized(const ConvCode& c);
/// Column delays of a code.
std::vector<InfInt> column_delays(const ConvCode& c);

/// Isometry (equivalently z-monomial equivalence) of codes, decided as
/// monomial equivalence of the delay-normalized codes.
std::optional<ZMEWitness> code_isometric(const ConvCode& c, const ConvCode& cbar, const Budgets& budgets = {});

/// Strong isometry: some reduced encoders of both codes with equal row
/// degrees are z-monomially equivalent. The encoder of c is fixed (rows
/// sorted) and the orbit of cbar's sorted reduced encoder is searched with
/// the same row-by-row pruning as code_me.
std::optional<StrongIsometryWitness> code_strongly_isometric(const ConvCode& c, const ConvCode& cbar,
                                                             const Budgets& budgets = {});

}  // namespace convcode
