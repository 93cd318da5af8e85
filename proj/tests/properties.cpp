#include "properties.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "convcode/distances.hpp"
#include "convcode/equivalence.hpp"
#include "convcode/realization.hpp"
#include "convcode/wam.hpp"
#include "support.hpp"

namespace convcode::testing {
namespace {

const Field& pick_field(std::mt19937& rng, bool with_gf4 = true) {
  std::uniform_int_distribution<int> d(0, with_gf4 ? 2 : 1);
  switch (d(rng)) {
    case 0: return Field::get(2);
    case 1: return Field::get(3);
    default: return Field::get(2, 2);
  }
}

std::size_t uniform(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

MonomialMatrix random_monomial(const Field& f, std::mt19937& rng, std::size_t n) {
  MonomialMatrix m = MonomialMatrix::identity(f, n);
  std::shuffle(m.perm.begin(), m.perm.end(), rng);
  std::uniform_int_distribution<unsigned> nz(1, f.order() - 1);
  for (auto& s : m.scalars) s = static_cast<Elem>(nz(rng));
  return m;
}

/// Exponents drawn from [lo, hi], raised where needed so that g M stays
/// polynomial.
ZMonomialMatrix random_zmonomial(const PolyMatrix& g, std::mt19937& rng, int lo, int hi) {
  ZMonomialMatrix m = ZMonomialMatrix::from_monomial(random_monomial(g.field(), rng, g.cols()));
  std::uniform_int_distribution<int> e(lo, hi);
  for (std::size_t i = 0; i < g.cols(); ++i) {
    const InfInt d = delay(g.col(i));
    const int floor = d.is_inf() ? 0 : -static_cast<int>(d.value());
    m.exponents[m.perm[i]] = std::max(e(rng), floor);
  }
  return m;
}

/// Random code of dimension 1..max_k, length k+1..max_n and degree at most
/// max_degree.
ConvCode random_code(const Field& f, std::mt19937& rng, std::size_t max_k, std::size_t max_n, int max_degree) {
  while (true) {
    const std::size_t k = uniform(rng, 1, max_k);
    if (k + 1 > max_n) continue;
    const std::size_t n = uniform(rng, k + 1, max_n);
    const int row_deg = static_cast<int>(uniform(rng, 0, static_cast<std::size_t>(max_degree)));
    ConvCode c = ConvCode::from_encoder(random_reduced(f, rng, k, n, row_deg));
    if (c.degree() <= max_degree) return c;
  }
}

/// Code spanned by a z-monomial image of c's encoder, with a scrambled
/// encoder; falls back to a plain monomial image if the image is not basic.
ConvCode zmonomial_image(const ConvCode& c, std::mt19937& rng, int lo, int hi) {
  const Field& f = c.field();
  for (int attempt = 0; attempt < 20; ++attempt) {
    const PolyMatrix img = random_zmonomial(c.encoder(), rng, lo, hi).apply(c.encoder());
    if (is_basic(img)) return ConvCode::from_encoder(random_unimodular(f, rng, c.dimension(), 1) * img);
  }
  const PolyMatrix img = random_monomial(f, rng, c.length()).apply(c.encoder());
  return ConvCode::from_encoder(random_unimodular(f, rng, c.dimension(), 1) * img);
}

bool delay_free(const PolyMatrix& g) {
  for (std::size_t j = 0; j < g.cols(); ++j) {
    const PolyVector col = g.col(j);
    if (!is_zero(col) && delay(col) != InfInt{0}) return false;
  }
  return true;
}

std::string describe(const PolyMatrix& g) { return g.to_string(); }

std::string describe(const ConvCode& c, const ConvCode& cbar) {
  return describe(c.encoder()) + " vs " + describe(cbar.encoder());
}

}  // namespace

PropertyResult double_dual(std::size_t trials) {
  PropertyResult r{"double dual"};
  std::mt19937 rng(501);
  for (std::size_t t = 0; t < trials; ++t) {
    const ConvCode c = random_code(pick_field(rng), rng, 3, 5, 3);
    ++r.trials;
    if (!(c.dual().dual() == c)) r.fail(describe(c.encoder()));
  }
  return r;
}

PropertyResult paired_isometry_vs_zme(std::size_t trials) {
  PropertyResult r{"paired isometry <=> zME"};
  std::mt19937 rng(41);
  std::size_t equivalent = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Field& f = pick_field(rng);
    const std::size_t k = uniform(rng, 1, 2);
    const std::size_t n = uniform(rng, k, 4);
    const PolyMatrix g = random_matrix(f, rng, k, n, k == 1 ? 2 : 1);
    PolyMatrix gbar = random_zmonomial(g, rng, -1, 1).apply(g);
    if (t % 2 == 1) {
      const std::size_t i = uniform(rng, 0, k - 1);
      const std::size_t j = uniform(rng, 0, n - 1);
      const std::size_t s = uniform(rng, 0, static_cast<std::size_t>(std::max(gbar.max_degree(), 0)));
      gbar(i, j) += Poly::monomial(f, 1, s);
    }
    ++r.trials;
    const PairedIsometry p = paired_isometry(g, gbar);
    const bool zme = matrix_zme(g, gbar).has_value();
    equivalent += zme;
    if (p.isometric != zme) r.fail(describe(g) + " vs " + describe(gbar));
    if (p.counterexample && weight(g.left_mul(*p.counterexample)) == weight(gbar.left_mul(*p.counterexample)))
      r.fail("invalid counterexample for " + describe(g));
  }
  r.note = std::to_string(equivalent) + " pairs zME";
  return r;
}

PropertyResult block_macwilliams_exhaustive(std::size_t max_k, std::size_t max_n) {
  PropertyResult r{"block MacWilliams (q = 2, exhaustive)"};
  const Field& f = Field::get(2);
  std::size_t classes_total = 0;
  for (std::size_t k = 1; k <= max_k; ++k) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      const std::size_t messages = std::size_t{1} << k;
      const std::size_t matrices = std::size_t{1} << (k * n);
      // Column j of matrix `bits` is the k-bit field (bits >> (j k)).
      auto column = [&](std::size_t bits, std::size_t j) { return (bits >> (j * k)) & (messages - 1); };
      auto to_poly = [&](std::size_t bits) {
        PolyMatrix g(f, k, n);
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < k; ++i) g(i, j) = Poly::constant(f, (column(bits, j) >> i) & 1);
        return g;
      };
      std::map<std::vector<std::size_t>, std::size_t> profile_class;  // profile -> class id
      std::map<std::vector<std::size_t>, std::size_t> key_class;      // sorted columns -> class id
      std::vector<std::size_t> representative;
      std::vector<std::size_t> class_of(matrices);
      for (std::size_t bits = 0; bits < matrices; ++bits) {
        std::vector<std::size_t> profile(messages, 0);
        std::vector<std::size_t> key(n);
        for (std::size_t j = 0; j < n; ++j) {
          const std::size_t col = column(bits, j);
          key[j] = col;
          for (std::size_t u = 0; u < messages; ++u) profile[u] += std::popcount(u & col) & 1;
        }
        std::sort(key.begin(), key.end());
        const auto [pit, pnew] = profile_class.emplace(profile, representative.size());
        const auto [kit, knew] = key_class.emplace(key, pit->second);
        if (pnew) representative.push_back(bits);
        // Equal profiles must mean equal sorted columns, and conversely.
        if (pnew != knew || kit->second != pit->second)
          r.fail("weight profile and column multiset disagree (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                 ", matrix " + std::to_string(bits) + ")");
        class_of[bits] = pit->second;
        ++r.trials;
      }
      const std::size_t classes = representative.size();
      classes_total += classes;
      std::vector<PolyMatrix> reps;
      for (std::size_t rep : representative) reps.push_back(to_poly(rep));
      for (std::size_t bits = 0; bits < matrices; ++bits) {
        const PolyMatrix g = to_poly(bits);
        const std::size_t cls = class_of[bits];
        const auto m = matrix_me(reps[cls], g);
        if (!m || !(m->apply(reps[cls]) == g)) r.fail("no monomial map onto " + describe(g));
        if (classes > 1 && matrix_me(reps[(cls + 1) % classes], g))
          r.fail("monomial map across weight classes onto " + describe(g));
      }
    }
  }
  r.note = std::to_string(classes_total) + " weight classes";
  return r;
}

PropertyResult positive_indices_me_vs_wam(std::size_t trials) {
  PropertyResult r{"positive indices: ME <=> equal WAM"};
  std::mt19937 rng(35);
  std::size_t me = 0;
  while (r.trials < trials) {
    const Field& f = pick_field(rng, false);
    const std::size_t k = uniform(rng, 1, 2);
    const int deg = k == 1 ? static_cast<int>(uniform(rng, 1, 2)) : 1;
    const PolyMatrix g = random_reduced(f, rng, k, 4, deg);
    const auto rows = g.row_degrees();
    if (*std::min_element(rows.begin(), rows.end()) < 1) continue;
    PolyMatrix gbar = g;
    switch (r.trials % 4) {
      case 0: gbar = random_monomial(f, rng, 4).apply(g); break;
      case 1: gbar = random_zmonomial(g, rng, -1, 1).apply(g); break;
      case 2: gbar = random_reduced(f, rng, k, 4, deg); break;
      default: {
        gbar = random_monomial(f, rng, 4).apply(g);
        const std::size_t j = uniform(rng, 0, 3);
        gbar(0, j) += Poly::monomial(f, 1, static_cast<std::size_t>(rows[0]));
      }
    }
    if (!is_basic(gbar) || gbar.row_degrees() != rows || !is_reduced(gbar)) continue;
    ++r.trials;
    const bool is_me = matrix_me(g, gbar).has_value();
    me += is_me;
    if (is_me != (wam(g) == wam(gbar))) r.fail(describe(g) + " vs " + describe(gbar));
  }
  r.note = std::to_string(me) + " pairs ME";
  return r;
}

PropertyResult strong_isometry_same_wam_me(std::size_t trials) {
  PropertyResult r{"strongly isometric encoders with equal WAM are ME"};
  std::mt19937 rng(44);
  std::size_t same_wam = 0;
  for (std::size_t attempt = 0; r.trials < trials && attempt < 20 * trials; ++attempt) {
    const ConvCode c = random_code(pick_field(rng, false), rng, 2, 4, 2);
    const ConvCode cbar = zmonomial_image(c, rng, attempt % 2 ? 0 : -1, attempt % 2 ? 0 : 1);
    const auto w = code_strongly_isometric(c, cbar);
    if (!w) continue;
    ++r.trials;
    if (!(w->m.apply(w->g) == w->gbar) || !(ConvCode::from_encoder(w->g) == c) ||
        !(ConvCode::from_encoder(w->gbar) == cbar) || !is_reduced(w->gbar))
      r.fail("invalid witness for " + describe(c, cbar));
    if (wam(w->g) == wam(w->gbar)) {
      ++same_wam;
      if (!matrix_me(w->g, w->gbar)) r.fail(describe(w->g) + " vs " + describe(w->gbar));
    }
  }
  r.note = std::to_string(same_wam) + " witnesses with equal WAM";
  return r;
}

PropertyResult at_most_one_positive_index(std::size_t trials) {
  PropertyResult r{"degree <= 1: strong isometry and WAM equivalence <=> ME"};
  std::mt19937 rng(45);
  std::size_t me = 0;
  std::size_t strong_only = 0;
  while (r.trials < trials) {
    const Field& f = pick_field(rng, false);
    const ConvCode c = random_code(f, rng, 2, 4, 1);
    ConvCode cbar = c;
    switch (r.trials % 3) {
      case 0: cbar = ConvCode::from_encoder(random_monomial(f, rng, c.length()).apply(c.encoder())); break;
      case 1: cbar = zmonomial_image(c, rng, -1, 1); break;
      default: {
        const ConvCode other = random_code(f, rng, c.dimension(), c.length(), 1);
        if (other.dimension() != c.dimension() || other.length() != c.length()) continue;
        cbar = other;
      }
    }
    ++r.trials;
    const bool strong = code_strongly_isometric(c, cbar).has_value();
    const bool same_wam = c.forney_indices() == cbar.forney_indices() &&
                          wam_equivalent(wam(c.encoder()), wam(cbar.encoder())).has_value();
    const bool is_me = code_me(c, cbar).has_value();
    me += is_me;
    strong_only += strong && !is_me;
    if ((strong && same_wam) != is_me) r.fail(describe(c, cbar));
  }
  r.note = std::to_string(me) + " pairs ME, " + std::to_string(strong_only) + " strongly isometric but not ME";
  return r;
}

PropertyResult delay_free_iso_vs_me(std::size_t trials) {
  PropertyResult r{"delay-free codes: isometric <=> ME"};
  std::mt19937 rng(42);
  std::size_t me = 0;
  while (r.trials < trials) {
    const Field& f = pick_field(rng, false);
    const ConvCode c = random_code(f, rng, 2, 4, 2);
    if (!delay_free(c.encoder())) continue;
    ConvCode cbar = c;
    if (r.trials % 3 == 0) {
      cbar = ConvCode::from_encoder(random_monomial(f, rng, c.length()).apply(c.encoder()));
    } else {
      const ConvCode other = random_code(f, rng, c.dimension(), c.length(), 2);
      if (other.dimension() != c.dimension() || other.length() != c.length()) continue;
      cbar = other;
    }
    if (!delay_free(cbar.encoder())) continue;
    ++r.trials;
    const bool iso = code_isometric(c, cbar).has_value();
    const bool is_me = code_me(c, cbar).has_value();
    me += is_me;
    if (iso != is_me) r.fail(describe(c, cbar));
  }
  r.note = std::to_string(me) + " pairs ME";
  return r;
}

PropertyResult strong_isometry_invariants(std::size_t trials) {
  PropertyResult r{"strong isometries preserve atomicity and distances"};
  std::mt19937 rng(38);
  const std::size_t jmax = 5;
  for (std::size_t attempt = 0; r.trials < trials && attempt < 20 * trials; ++attempt) {
    const Field& f = pick_field(rng, false);
    const ConvCode c = random_code(f, rng, 2, 4, 2);
    const ConvCode cbar = zmonomial_image(c, rng, -1, 1);
    const auto w = code_strongly_isometric(c, cbar);
    if (!w) continue;
    ++r.trials;
    const std::string what = describe(w->g) + " vs " + describe(w->gbar);
    for (int s = 0; s < 20; ++s) {
      const PolyVector u = random_vector(f, rng, c.dimension(), 3);
      if (is_zero(u)) continue;
      if (is_atomic(c, w->g.left_mul(u)) != is_atomic(cbar, w->gbar.left_mul(u)))
        r.fail("atomicity differs for " + to_string(u) + " under " + what);
    }
    if (!(omega_series(c, jmax + 1) == omega_series(cbar, jmax + 1))) r.fail("weight enumerators differ: " + what);
    for (DistanceFamily fam : {DistanceFamily::extended_row, DistanceFamily::active_burst})
      if (!(distance_profile(c, fam, jmax) == distance_profile(cbar, fam, jmax)))
        r.fail(to_string(fam) + " distances differ: " + what);
    if (!(active_row_distances(w->g, 4) == active_row_distances(w->gbar, 4)))
      r.fail("active row distances differ: " + what);
  }
  return r;
}

PropertyResult isometry_preserves_delay(std::size_t trials) {
  PropertyResult r{"isometries preserve delay"};
  std::mt19937 rng(36);
  for (std::size_t attempt = 0; r.trials < trials && attempt < 20 * trials; ++attempt) {
    const Field& f = pick_field(rng, false);
    const ConvCode c = random_code(f, rng, 2, 4, 2);
    const ConvCode cbar = zmonomial_image(c, rng, -2, 2);
    const auto w = code_isometric(c, cbar);
    if (!w) continue;
    ++r.trials;
    if (!(cbar.encoder() == w->u * w->m.apply(c.encoder()))) r.fail("invalid witness for " + describe(c, cbar));
    for (int s = 0; s < 20; ++s) {
      const PolyVector v = c.encode(random_vector(f, rng, c.dimension(), 4));
      const PolyVector image = w->m.apply(v);
      if (!cbar.contains(image)) r.fail("image outside the code: " + describe(c, cbar));
      if (delay(v) != delay(image)) r.fail("delay changes on " + to_string(v) + ": " + describe(c, cbar));
    }
  }
  return r;
}

PropertyResult wam_distances_vs_definitions(std::size_t codes) {
  PropertyResult r{"WAM distance formulas vs definitions"};
  std::mt19937 rng(26);
  const std::size_t jmax = 5;
  for (std::size_t t = 0; t < codes; ++t) {
    const ConvCode c = random_code(t % 2 ? Field::get(3) : Field::get(2), rng, 2, 4, 2);
    ++r.trials;
    const std::string what = describe(c.encoder());
    if (!(distance_profile(c, DistanceFamily::column, jmax) == enumerate::column_distances(c, jmax)))
      r.fail("column: " + what);
    if (!(distance_profile(c, DistanceFamily::active_column, jmax) == enumerate::active_column_distances(c, jmax)))
      r.fail("active column: " + what);
    if (!(distance_profile(c, DistanceFamily::active_segment, jmax) == enumerate::active_segment_distances(c, jmax)))
      r.fail("active segment: " + what);
    if (!(distance_profile(c, DistanceFamily::active_burst, jmax) == enumerate::active_burst_distances(c, jmax)))
      r.fail("active burst: " + what);
    if (!(distance_profile(c, DistanceFamily::extended_row, jmax) == enumerate::extended_row_distances(c, jmax)))
      r.fail("extended row: " + what);
    if (!(omega_series(c, jmax + 1) == enumerate::omega_series(c, jmax + 1))) r.fail("omega: " + what);
  }
  return r;
}

PropertyResult burst_formulas_agree(std::size_t codes) {
  PropertyResult r{"active burst: compositions vs tilde-WAM powers"};
  std::mt19937 rng(23);
  const std::size_t jmax = 8;
  for (std::size_t t = 0; t < codes; ++t) {
    const ConvCode c = random_code(pick_field(rng), rng, 2, 4, 2);
    ++r.trials;
    const WAM w = wam(c.encoder());
    const std::size_t jmin = active_burst_jmin(w);
    const DistanceProfile by_powers = active_distances(w, DistanceFamily::active_burst, jmax);
    const DistanceProfile by_parts = active_burst_by_composition(omega_series(w, jmax + 1), jmin, jmax);
    if (!(by_powers == by_parts)) r.fail(describe(c.encoder()));
  }
  return r;
}

PropertyResult strong_isometry_criterion_exhaustive(std::size_t max_n, int max_deg) {
  PropertyResult r{"strong isometry criterion vs message enumeration (GF(2), k = 1)"};
  const Field& f = Field::get(2);
  const int message_deg = 2 * max_deg + 1;
  std::size_t positives = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t per_entry = std::size_t{1} << (max_deg + 1);
    std::size_t total = 1;
    for (std::size_t j = 0; j < n; ++j) total *= per_entry;
    std::vector<ConvCode> codes;
    std::vector<std::vector<std::size_t>> profiles;
    for (std::size_t idx = 0; idx < total; ++idx) {
      PolyMatrix g(f, 1, n);
      std::size_t rest = idx;
      for (std::size_t j = 0; j < n; ++j, rest /= per_entry) {
        std::vector<Elem> coeffs;
        for (int b = 0; b <= max_deg; ++b) coeffs.push_back((rest % per_entry >> b) & 1);
        g(0, j) = Poly(f, coeffs);
      }
      if (is_zero(g.row(0)) || !is_basic(g)) continue;
      codes.push_back(ConvCode::from_encoder(g));
      // Weights of u g for every binary u of degree <= message_deg.
      std::vector<std::size_t> profile;
      for (std::size_t u = 1; u < (std::size_t{1} << (message_deg + 1)); ++u) {
        std::vector<Elem> uc;
        for (int b = 0; b <= message_deg; ++b) uc.push_back((u >> b) & 1);
        profile.push_back(weight(g.left_mul({Poly(f, uc)})));
      }
      profiles.push_back(std::move(profile));
    }
    for (std::size_t a = 0; a < codes.size(); ++a) {
      for (std::size_t b = 0; b < codes.size(); ++b) {
        // Over GF(2) with k = 1 the only isomorphism is u g -> u gbar.
        const bool direct = codes[a].degree() == codes[b].degree() && profiles[a] == profiles[b];
        const bool found = code_strongly_isometric(codes[a], codes[b]).has_value();
        ++r.trials;
        positives += direct;
        if (direct != found) r.fail(describe(codes[a], codes[b]));
      }
    }
  }
  r.note = std::to_string(positives) + " strongly isometric pairs";
  return r;
}

}  // namespace convcode::testing
