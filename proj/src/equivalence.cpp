#include "convcode/equivalence.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "convcode/errors.hpp"
#include "convcode/wam.hpp"

namespace convcode {

namespace {

std::vector<std::size_t> inverse_perm(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

Poly times_power(const Poly& p, int e) {
  if (e >= 0) return p.shifted(static_cast<std::size_t>(e));
  if (p.delay() < InfInt{static_cast<std::uint64_t>(-e)})
    throw PreconditionError("z-monomial image is not polynomial");
  return p.unshifted(static_cast<std::size_t>(-e));
}

/// Column scaled so its first nonzero coefficient is 1, and that coefficient.
std::pair<PolyVector, Elem> normalize_column(PolyVector col) {
  const Field& f = col.front().field();
  for (const auto& p : col) {
    if (p.is_zero()) continue;
    const Elem lead = p.coeff(static_cast<std::size_t>(p.delay().value()));
    const Elem inv = f.inv(lead);
    for (auto& q : col) q = q.scaled(inv);
    return {col, lead};
  }
  return {col, 1};
}

std::size_t column_shift(const PolyVector& col) {
  const InfInt d = delay(col);
  return d.is_finite() ? static_cast<std::size_t>(d.value()) : 0;
}

PolyVector unshift_column(const PolyVector& col, std::size_t s) {
  PolyVector out;
  out.reserve(col.size());
  for (const auto& p : col) out.push_back(p.unshifted(s));
  return out;
}

struct ColumnKey {
  PolyVector normal;
  Elem lead;
  std::size_t shift;
};

ColumnKey column_key(const PolyVector& col, bool divide_delay) {
  const std::size_t s = divide_delay ? column_shift(col) : 0;
  auto [normal, lead] = normalize_column(s ? unshift_column(col, s) : col);
  return {std::move(normal), lead, s};
}

/// First-fit column matching; perm[i] is the gbar column matched to g column i.
std::optional<std::vector<std::size_t>> match_columns(const std::vector<ColumnKey>& a, const std::vector<ColumnKey>& b) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n, n);
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (used[i] || a[i].normal != b[j].normal) continue;
      used[i] = true;
      perm[i] = j;
      found = true;
    }
    if (!found) return std::nullopt;
  }
  return perm;
}

bool same_shape(const PolyMatrix& g, const PolyMatrix& gbar) {
  return &g.field() == &gbar.field() && g.rows() == gbar.rows() && g.cols() == gbar.cols();
}

std::vector<ColumnKey> column_keys(const PolyMatrix& g, bool divide_delay) {
  std::vector<ColumnKey> keys;
  keys.reserve(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) keys.push_back(column_key(g.col(j), divide_delay));
  return keys;
}

PolyMatrix from_columns(const Field& f, std::size_t rows, const std::vector<PolyVector>& cols) {
  PolyMatrix out(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = cols[j][i];
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
  if (a == 0 || b == 0) return 0;
  if (a > limit / b) return limit + 1;
  return std::min(a * b, limit + 1);
}

/// Slots of the reduced-encoder orbit of a reduced matrix.
struct OrbitShape {
  std::vector<int> nu;
  std::vector<std::vector<std::size_t>> groups;  // row indices sharing a degree
  struct Link {
    std::size_t i, j;
    std::size_t len;  // nu_i - nu_j + 1 coefficients
  };
  std::vector<Link> links;
};

OrbitShape orbit_shape(const PolyMatrix& g) {
  if (!is_reduced(g)) throw PreconditionError("reduced-encoder orbit needs a reduced encoder");
  OrbitShape s;
  s.nu = g.row_degrees();
  std::map<int, std::vector<std::size_t>, std::greater<>> by_degree;
  for (std::size_t i = 0; i < s.nu.size(); ++i) by_degree[s.nu[i]].push_back(i);
  for (auto& [d, rows] : by_degree) s.groups.push_back(rows);
  for (std::size_t i = 0; i < s.nu.size(); ++i)
    for (std::size_t j = 0; j < s.nu.size(); ++j)
      if (s.nu[i] > s.nu[j]) s.links.push_back({i, j, static_cast<std::size_t>(s.nu[i] - s.nu[j] + 1)});
  return s;
}

std::uint64_t orbit_size(const OrbitShape& s, std::uint64_t q, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (const auto& grp : s.groups) total = saturating_mul(total, general_linear_order(q, grp.size(), limit), limit);
  for (const auto& l : s.links) total = saturating_mul(total, checked_power(q, l.len, limit), limit);
  return total;
}

std::vector<FMatrix> invertible_matrices(const Field& f, std::size_t s) {
  std::vector<FMatrix> out;
  FVector entries(s * s, 0);
  do {
    FMatrix m(f, s, s, entries);
    if (m.is_invertible()) out.push_back(std::move(m));
  } while (next_vector(f, entries));
  return out;
}

}  // namespace

MonomialMatrix MonomialMatrix::identity(const Field& f, std::size_t n) {
  MonomialMatrix m{&f, std::vector<std::size_t>(n), std::vector<Elem>(n, 1)};
  std::iota(m.perm.begin(), m.perm.end(), 0);
  return m;
}

FMatrix MonomialMatrix::to_matrix() const {
  FMatrix m(*field, size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, perm[i]) = scalars[perm[i]];
  return m;
}

PolyVector MonomialMatrix::apply(const PolyVector& v) const {
  if (v.size() != size()) throw std::invalid_argument("monomial matrix size mismatch");
  PolyVector out = zero_vector(*field, size());
  for (std::size_t i = 0; i < size(); ++i) out[perm[i]] = v[i].scaled(scalars[perm[i]]);
  return out;
}

PolyMatrix MonomialMatrix::apply(const PolyMatrix& g) const {
  if (g.cols() != size()) throw std::invalid_argument("monomial matrix size mismatch");
  PolyMatrix out(*field, g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) out.set_row(r, apply(g.row(r)));
  return out;
}

MonomialMatrix MonomialMatrix::then(const MonomialMatrix& o) const {
  MonomialMatrix m{field, std::vector<std::size_t>(size()), std::vector<Elem>(size(), 1)};
  for (std::size_t i = 0; i < size(); ++i) {
    m.perm[i] = o.perm[perm[i]];
    m.scalars[m.perm[i]] = field->mul(o.scalars[m.perm[i]], scalars[perm[i]]);
  }
  return m;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix m{field, inverse_perm(perm), std::vector<Elem>(size(), 1)};
  for (std::size_t i = 0; i < size(); ++i) m.scalars[i] = field->inv(scalars[perm[i]]);
  return m;
}

ZMonomialMatrix ZMonomialMatrix::identity(const Field& f, std::size_t n) {
  return from_monomial(MonomialMatrix::identity(f, n));
}

ZMonomialMatrix ZMonomialMatrix::from_monomial(const MonomialMatrix& m) {
  return {m.field, m.perm, m.scalars, std::vector<int>(m.size(), 0)};
}

PolyVector ZMonomialMatrix::apply(const PolyVector& v) const {
  if (v.size() != size()) throw std::invalid_argument("monomial matrix size mismatch");
  PolyVector out = zero_vector(*field, size());
  for (std::size_t i = 0; i < size(); ++i)
    out[perm[i]] = times_power(v[i].scaled(scalars[perm[i]]), exponents[perm[i]]);
  return out;
}

PolyMatrix ZMonomialMatrix::apply(const PolyMatrix& g) const {
  if (g.cols() != size()) throw std::invalid_argument("monomial matrix size mismatch");
  PolyMatrix out(*field, g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r) out.set_row(r, apply(g.row(r)));
  return out;
}

bool ZMonomialMatrix::maps_polynomially(const PolyMatrix& g) const {
  for (std::size_t j = 0; j < size(); ++j) {
    const int e = exponents[perm[j]];
    if (e < 0 && delay(g.col(j)) < InfInt{static_cast<std::uint64_t>(-e)}) return false;
  }
  return true;
}

ZMonomialMatrix ZMonomialMatrix::then(const ZMonomialMatrix& o) const {
  ZMonomialMatrix m{field, std::vector<std::size_t>(size()), std::vector<Elem>(size(), 1), std::vector<int>(size(), 0)};
  for (std::size_t i = 0; i < size(); ++i) {
    const std::size_t d = o.perm[perm[i]];
    m.perm[i] = d;
    m.scalars[d] = field->mul(o.scalars[d], scalars[perm[i]]);
    m.exponents[d] = o.exponents[d] + exponents[perm[i]];
  }
  return m;
}

ZMonomialMatrix ZMonomialMatrix::inverse() const {
  ZMonomialMatrix m{field, inverse_perm(perm), std::vector<Elem>(size(), 1), std::vector<int>(size(), 0)};
  for (std::size_t i = 0; i < size(); ++i) {
    m.scalars[i] = field->inv(scalars[perm[i]]);
    m.exponents[i] = -exponents[perm[i]];
  }
  return m;
}

std::optional<MonomialMatrix> matrix_me(const PolyMatrix& g, const PolyMatrix& gbar) {
  if (!same_shape(g, gbar)) return std::nullopt;
  const auto a = column_keys(g, false);
  const auto b = column_keys(gbar, false);
  auto perm = match_columns(a, b);
  if (!perm) return std::nullopt;
  const Field& f = g.field();
  MonomialMatrix m{&f, *perm, std::vector<Elem>(g.cols(), 1)};
  for (std::size_t i = 0; i < g.cols(); ++i) m.scalars[m.perm[i]] = f.div(b[m.perm[i]].lead, a[i].lead);
  return m;
}

std::optional<ZMonomialMatrix> matrix_zme(const PolyMatrix& g, const PolyMatrix& gbar) {
  if (!same_shape(g, gbar)) return std::nullopt;
  const auto a = column_keys(g, true);
  const auto b = column_keys(gbar, true);
  auto perm = match_columns(a, b);
  if (!perm) return std::nullopt;
  const Field& f = g.field();
  ZMonomialMatrix m{&f, *perm, std::vector<Elem>(g.cols(), 1), std::vector<int>(g.cols(), 0)};
  for (std::size_t i = 0; i < g.cols(); ++i) {
    const std::size_t d = m.perm[i];
    m.scalars[d] = f.div(b[d].lead, a[i].lead);
    m.exponents[d] = static_cast<int>(b[d].shift) - static_cast<int>(a[i].shift);
  }
  return m;
}

FMatrix sliding_matrix(const PolyMatrix& g, std::size_t nu) {
  if (g.max_degree() > static_cast<int>(nu)) throw std::invalid_argument("sliding matrix width below encoder degree");
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  FMatrix s(g.field(), k * (nu + 1), n * (2 * nu + 1));
  for (std::size_t r = 0; r <= nu; ++r)
    for (std::size_t c = r; c <= r + nu; ++c) {
      const FMatrix block = g.coefficient(c - r);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) s(r * k + i, c * n + j) = block(i, j);
    }
  return s;
}

PairedIsometry paired_isometry(const PolyMatrix& g, const PolyMatrix& gbar, const Budgets& budgets) {
  if (&g.field() != &gbar.field() || g.rows() != gbar.rows())
    throw std::invalid_argument("paired isometry needs matrices with the same number of rows over one field");
  const Field& f = g.field();
  const std::size_t k = g.rows();
  const std::size_t nu = static_cast<std::size_t>(std::max({g.max_degree(), gbar.max_degree(), 0}));
  const std::uint64_t count = checked_power(f.order(), k * (nu + 1), budgets.enumeration);
  if (count > budgets.enumeration) throw BudgetExceeded("paired isometry check exceeds the enumeration budget");
  const FMatrix s = sliding_matrix(g, nu);
  const FMatrix sbar = sliding_matrix(gbar, nu);
  FVector u(k * (nu + 1), 0);
  while (next_vector(f, u)) {
    if (hamming_weight(s.left_mul(u)) == hamming_weight(sbar.left_mul(u))) continue;
    std::vector<FVector> coeffs;
    for (std::size_t t = 0; t <= nu; ++t)
      coeffs.emplace_back(u.begin() + static_cast<std::ptrdiff_t>(t * k), u.begin() + static_cast<std::ptrdiff_t>((t + 1) * k));
    return {false, from_coefficients(f, k, coeffs)};
  }
  return {true, std::nullopt};
}

std::uint64_t reduced_encoder_orbit_size(const PolyMatrix& g, std::uint64_t limit) {
  return orbit_size(orbit_shape(g), g.field().order(), limit);
}

bool reduced_encoder_orbit(const PolyMatrix& g,
                           const std::function<bool(const PolyMatrix& u, const PolyMatrix& ug)>& visit,
                           const Budgets& budgets) {
  const OrbitShape shape = orbit_shape(g);
  const Field& f = g.field();
  if (orbit_size(shape, f.order(), budgets.orbit) > budgets.orbit)
    throw BudgetExceeded("reduced-encoder orbit exceeds the orbit budget");

  std::vector<std::vector<FMatrix>> blocks;
  for (const auto& grp : shape.groups) blocks.push_back(invertible_matrices(f, grp.size()));
  std::vector<std::size_t> block_index(blocks.size(), 0);
  std::vector<FVector> link_coeffs;
  for (const auto& l : shape.links) link_coeffs.emplace_back(l.len, 0);

  const std::size_t k = g.rows();
  while (true) {
    PolyMatrix u(f, k, k);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& rows = shape.groups[b];
      const FMatrix& m = blocks[b][block_index[b]];
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows.size(); ++c) u(rows[r], rows[c]) = Poly::constant(f, m(r, c));
    }
    for (std::size_t l = 0; l < shape.links.size(); ++l)
      u(shape.links[l].i, shape.links[l].j) = Poly(f, link_coeffs[l]);
    if (visit(u, u * g)) return true;

    // Odometer: link coefficients first (last link fastest), then blocks.
    bool advanced = false;
    for (std::size_t l = shape.links.size(); l-- > 0 && !advanced;) advanced = next_vector(f, link_coeffs[l]);
    for (std::size_t b = blocks.size(); b-- > 0 && !advanced;) {
      if (++block_index[b] < blocks[b].size()) advanced = true;
      else block_index[b] = 0;
    }
    if (!advanced) return false;
  }
}

PolyMatrix sorted_reduced_encoder(const ConvCode& c) {
  const PolyMatrix& g = c.encoder();
  const auto nu = g.row_degrees();
  std::vector<std::size_t> order(g.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nu[a] > nu[b]; });
  return g.select_rows(order);
}

std::optional<PolyMatrix> transform_between(const PolyMatrix& a, const PolyMatrix& b) {
  if (!same_shape(a, b)) return std::nullopt;
  const HermiteResult h = hermite_decompose(a);
  std::vector<PolyVector> rows;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    auto u = solve_message(h, b.row(i));
    if (!u) return std::nullopt;
    rows.push_back(std::move(*u));
  }
  PolyMatrix u = PolyMatrix::from_rows(rows);
  const Poly det = determinant(u);
  if (det.is_zero() || !det.is_constant()) return std::nullopt;
  return u;
}

namespace {

bool comparable(const ConvCode& c, const ConvCode& cbar) {
  return &c.field() == &cbar.field() && c.length() == cbar.length() && c.dimension() == cbar.dimension() &&
         c.forney_indices() == cbar.forney_indices();
}

/// Orbit member U g (same orbit as reduced_encoder_orbit) whose rows
/// 0..r satisfy prefix_ok against the corresponding rows of the target, for
/// every r. Rows of U are chosen one at a time; a row of U g depends only on
/// the same row of U, so each prefix test is a necessary condition.
template <typename PrefixOk>
std::optional<PolyMatrix> pruned_orbit_search(const PolyMatrix& g, const PolyMatrix& target, PrefixOk prefix_ok,
                                              const Budgets& budgets) {
  const OrbitShape shape = orbit_shape(g);
  const Field& f = g.field();
  const std::size_t k = g.rows();
  std::vector<std::size_t> group_of(k);
  for (std::size_t b = 0; b < shape.groups.size(); ++b)
    for (std::size_t i : shape.groups[b]) group_of[i] = b;

  struct Candidate {
    PolyVector ug_row;
    FVector block;  // constants at the columns of the row's own degree group
  };
  std::vector<std::vector<Candidate>> candidates(k);
  std::uint64_t generated = 0;
  for (std::size_t r = 0; r < k; ++r) {
    std::vector<std::size_t> len(k, 0);
    std::size_t total = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (shape.nu[j] <= shape.nu[r]) total += len[j] = static_cast<std::size_t>(shape.nu[r] - shape.nu[j] + 1);
    generated += checked_power(f.order(), total, budgets.enumeration);
    if (generated > budgets.enumeration) throw BudgetExceeded("orbit row candidates exceed the enumeration budget");
    const PolyMatrix target_row = target.select_rows({r});
    FVector flat(total, 0);
    do {
      PolyVector urow;
      FVector block;
      std::size_t pos = 0;
      for (std::size_t j = 0; j < k; ++j) {
        urow.emplace_back(f, std::vector<Elem>(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                                               flat.begin() + static_cast<std::ptrdiff_t>(pos + len[j])));
        if (group_of[j] == group_of[r]) block.push_back(flat[pos]);
        pos += len[j];
      }
      if (std::all_of(block.begin(), block.end(), [](Elem e) { return e == 0; })) continue;
      PolyVector row = g.left_mul(urow);
      if (!prefix_ok(PolyMatrix::from_rows({row}), target_row)) continue;
      candidates[r].push_back({std::move(row), std::move(block)});
    } while (next_vector(f, flat));
  }

  std::vector<PolyVector> chosen;
  std::vector<std::vector<FVector>> blocks(shape.groups.size());
  std::uint64_t visited = 0;
  std::function<bool(std::size_t)> descend = [&](std::size_t r) -> bool {
    if (r == k) return true;
    auto& grp = blocks[group_of[r]];
    for (const auto& cand : candidates[r]) {
      if (++visited > budgets.orbit) throw BudgetExceeded("reduced-encoder orbit search exceeds the orbit budget");
      grp.push_back(cand.block);
      const bool independent = FMatrix(f, grp.size(), cand.block.size(),
                                       [&] {
                                         std::vector<Elem> d;
                                         for (const auto& v : grp) d.insert(d.end(), v.begin(), v.end());
                                         return d;
                                       }())
                                   .rank() == grp.size();
      if (independent) {
        chosen.push_back(cand.ug_row);
        std::vector<std::size_t> prefix(r + 1);
        std::iota(prefix.begin(), prefix.end(), 0);
        if (prefix_ok(PolyMatrix::from_rows(chosen), target.select_rows(prefix)) && descend(r + 1)) return true;
        chosen.pop_back();
      }
      grp.pop_back();
    }
    return false;
  };
  if (!descend(0)) return std::nullopt;
  return PolyMatrix::from_rows(chosen);
}

}  // namespace

std::optional<MEWitness> code_me(const ConvCode& c, const ConvCode& cbar, const Budgets& budgets) {
  if (!comparable(c, cbar)) return std::nullopt;
  const PolyMatrix target = sorted_reduced_encoder(cbar);
  auto me_prefix = [](const PolyMatrix& a, const PolyMatrix& b) { return matrix_me(a, b).has_value(); };
  const auto ug = pruned_orbit_search(sorted_reduced_encoder(c), target, me_prefix, budgets);
  if (!ug) return std::nullopt;
  MonomialMatrix m = *matrix_me(*ug, target);
  auto u = transform_between(m.apply(c.encoder()), cbar.encoder());
  if (!u) throw std::logic_error("monomial equivalence witness does not map the codes");
  return MEWitness{std::move(*u), std::move(m)};
}

std::vector<InfInt> column_delays(const ConvCode& c) {
  std::vector<InfInt> out;
  for (std::size_t j = 0; j < c.length(); ++j) out.push_back(delay(c.encoder().col(j)));
  return out;
}

ConvCode delay_normalized(const ConvCode& c) {
  const PolyMatrix& g = c.encoder();
  std::vector<PolyVector> cols;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    const PolyVector col = g.col(j);
    cols.push_back(unshift_column(col, column_shift(col)));
  }
  return ConvCode::from_encoder(from_columns(g.field(), g.rows(), cols));
}

std::optional<ZMEWitness> code_isometric(const ConvCode& c, const ConvCode& cbar, const Budgets& budgets) {
  if (&c.field() != &cbar.field() || c.length() != cbar.length() || c.dimension() != cbar.dimension())
    return std::nullopt;
  const auto me = code_me(delay_normalized(c), delay_normalized(cbar), budgets);
  if (!me) return std::nullopt;
  const auto d = column_delays(c);
  const auto dbar = column_delays(cbar);
  auto shift = [](const InfInt& x) { return x.is_finite() ? static_cast<int>(x.value()) : 0; };
  ZMonomialMatrix m = ZMonomialMatrix::from_monomial(me->m);
  for (std::size_t i = 0; i < m.size(); ++i) m.exponents[m.perm[i]] = shift(dbar[m.perm[i]]) - shift(d[i]);
  auto u = transform_between(m.apply(c.encoder()), cbar.encoder());
  if (!u) throw std::logic_error("isometry witness does not map the codes");
  return ZMEWitness{std::move(*u), std::move(m)};
}

std::optional<StrongIsometryWitness> code_strongly_isometric(const ConvCode& c, const ConvCode& cbar,
                                                             const Budgets& budgets) {
  if (!comparable(c, cbar)) return std::nullopt;
  const PolyMatrix g = sorted_reduced_encoder(c);
  // The orbit walked is that of cbar's encoder, so the roles are swapped in
  // the prefix test: rows of V gbar must be zME images of rows of g.
  auto zme_prefix = [](const PolyMatrix& vg, const PolyMatrix& grows) { return matrix_zme(grows, vg).has_value(); };
  const auto vg = pruned_orbit_search(sorted_reduced_encoder(cbar), g, zme_prefix, budgets);
  if (!vg) return std::nullopt;
  return StrongIsometryWitness{g, *vg, *matrix_zme(g, *vg)};
}

}  // namespace convcode
