#include <doctest.h>

#include "convcode/equivalence.hpp"
#include "convcode/errors.hpp"
#include "convcode/examples.hpp"
#include "convcode/wam.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace convcode;
using namespace convcode::testing;

namespace {

PolyMatrix row(std::initializer_list<const char*> entries) {
  PolyVector v;
  for (const char* e : entries) v.push_back(bits(e));
  return PolyMatrix::from_rows({v});
}

MonomialMatrix random_monomial(const Field& f, std::mt19937& rng, std::size_t n) {
  MonomialMatrix m = MonomialMatrix::identity(f, n);
  std::shuffle(m.perm.begin(), m.perm.end(), rng);
  std::uniform_int_distribution<unsigned> nz(1, f.order() - 1);
  for (auto& s : m.scalars) s = static_cast<Elem>(nz(rng));
  return m;
}

const Field& field_for(int t) {
  return t % 3 == 0 ? Field::get(2) : t % 3 == 1 ? Field::get(3) : Field::get(2, 2);
}

void require_ok(const PropertyResult& r) {
  INFO(r.name << ": " << r.first_violation);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("monomial matrices act as column permutations with scaling") {
  std::mt19937 rng(51);
  for (int t = 0; t < 100; ++t) {
    const Field& f = field_for(t);
    const PolyMatrix g = random_matrix(f, rng, 2, 4, 2);
    const MonomialMatrix m = random_monomial(f, rng, 4);
    CHECK(m.apply(g) == g * PolyMatrix::from_constant(m.to_matrix()));
    CHECK(m.then(m.inverse()) == MonomialMatrix::identity(f, 4));
    const MonomialMatrix m2 = random_monomial(f, rng, 4);
    CHECK(m.then(m2).apply(g) == m2.apply(m.apply(g)));
    const auto found = matrix_me(g, m.apply(g));
    REQUIRE(found.has_value());
    CHECK(found->apply(g) == m.apply(g));
  }
}

TEST_CASE("z-monomial equivalence is found for random exponents") {
  std::mt19937 rng(52);
  std::uniform_int_distribution<int> e(-2, 2);
  for (int t = 0; t < 100; ++t) {
    const Field& f = field_for(t);
    const PolyMatrix g = random_matrix(f, rng, 2, 4, 2);
    ZMonomialMatrix m = ZMonomialMatrix::from_monomial(random_monomial(f, rng, 4));
    for (std::size_t i = 0; i < 4; ++i) {
      const InfInt d = delay(g.col(i));
      m.exponents[m.perm[i]] = std::max(e(rng), d.is_inf() ? 0 : -static_cast<int>(d.value()));
    }
    const PolyMatrix gbar = m.apply(g);
    const auto found = matrix_zme(g, gbar);
    REQUIRE(found.has_value());
    CHECK(found->apply(g) == gbar);
    CHECK(m.inverse().apply(gbar) == g);
  }
}

TEST_CASE("z-monomial images must stay polynomial") {
  const PolyMatrix g = row({"1", "01"});
  ZMonomialMatrix m = ZMonomialMatrix::identity(Field::get(2), 2);
  m.exponents = {-1, 0};
  CHECK_FALSE(m.maps_polynomially(g));
  CHECK_THROWS_AS(m.apply(g), PreconditionError);
  m.exponents = {0, -1};
  CHECK(m.apply(g) == row({"1", "1"}));
}

TEST_CASE("sliding generator matrix") {
  const FMatrix s = sliding_matrix(row({"1", "01"}), 1);
  const Field& f = Field::get(2);
  CHECK(s == FMatrix(f, 2, 6, {1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1}));
  CHECK_THROWS_AS(sliding_matrix(row({"1", "001"}), 1), std::invalid_argument);

  // u S_nu(G) lists the coefficients of uG for every u of degree <= nu.
  std::mt19937 rng(53);
  for (int t = 0; t < 200; ++t) {
    const Field& ft = field_for(t);
    const PolyMatrix g = random_matrix(ft, rng, 2, 3, 2);
    const std::size_t nu = 2 + t % 2;
    const PolyVector u = random_vector(ft, rng, 2, static_cast<int>(nu));
    FVector flat;
    for (std::size_t i = 0; i <= nu; ++i) {
      const FVector c = coefficient(u, i);
      flat.insert(flat.end(), c.begin(), c.end());
    }
    CHECK(hamming_weight(sliding_matrix(g, nu).left_mul(flat)) == weight(g.left_mul(u)));
  }
}

TEST_CASE("paired isometry") {
  const PolyMatrix g = row({"1", "01", "11"});
  CHECK(paired_isometry(g, row({"01", "01", "11"})).isometric);
  const PairedIsometry p = paired_isometry(g, row({"1", "11", "11"}));
  CHECK_FALSE(p.isometric);
  REQUIRE(p.counterexample.has_value());
  CHECK(weight(g.left_mul(*p.counterexample)) != weight(row({"1", "11", "11"}).left_mul(*p.counterexample)));
  require_ok(paired_isometry_vs_zme(40));
}

TEST_CASE("reduced-encoder orbit size against direct filtering") {
  const Field& f = Field::get(2);
  std::mt19937 rng(54);
  for (int shape = 0; shape < 3; ++shape) {
    PolyMatrix g(f, 2, 3);
    while (true) {
      g = random_reduced(f, rng, 2, 3, 1);
      const auto rd = g.row_degrees();
      if (shape == 0 && rd == std::vector<int>{1, 0}) break;
      if (shape == 1 && rd == std::vector<int>{1, 1}) break;
      if (shape == 2 && rd == std::vector<int>{0, 1}) break;
    }
    // All 2 x 2 U with entries of degree <= 1 such that U G is reduced with
    // the same row degrees and det U is a nonzero constant.
    std::uint64_t count = 0;
    for (unsigned bitsu = 0; bitsu < 256; ++bitsu) {
      PolyMatrix u(f, 2, 2);
      for (std::size_t e = 0; e < 4; ++e)
        u(e / 2, e % 2) = Poly(f, {static_cast<Elem>((bitsu >> (2 * e)) & 1), static_cast<Elem>((bitsu >> (2 * e + 1)) & 1)});
      const Poly det = determinant(u);
      if (det.is_zero() || !det.is_constant()) continue;
      const PolyMatrix ug = u * g;
      if (ug.row_degrees() == g.row_degrees() && is_reduced(ug)) ++count;
    }
    CHECK(reduced_encoder_orbit_size(g, 1000) == count);
    std::uint64_t visited = 0;
    reduced_encoder_orbit(g, [&](const PolyMatrix& u, const PolyMatrix& ug) {
      ++visited;
      CHECK(u * g == ug);
      return false;
    });
    CHECK(visited == count);
  }
}

TEST_CASE("code-level monomial equivalence witnesses") {
  std::mt19937 rng(55);
  for (int t = 0; t < 50; ++t) {
    const Field& f = field_for(t);
    const std::size_t k = 1 + t % 2;
    const ConvCode c = ConvCode::from_encoder(random_reduced(f, rng, k, k + 2, f.order() == 2 ? 2 : 1));
    const ConvCode cbar = ConvCode::from_encoder(random_unimodular(f, rng, k, 1) *
                                                 random_monomial(f, rng, c.length()).apply(c.encoder()));
    const auto w = code_me(c, cbar);
    REQUIRE(w.has_value());
    CHECK(cbar.encoder() == w->u * w->m.apply(c.encoder()));
  }
}

TEST_CASE("strong isometry witnesses") {
  const ConvCode c = ConvCode::from_encoder(example_matrix("exa4.3p_G"));
  const ConvCode cbar = ConvCode::from_encoder(example_matrix("exa4.3p_Gbar"));
  const auto w = code_strongly_isometric(c, cbar);
  REQUIRE(w.has_value());
  CHECK(w->m.apply(w->g) == w->gbar);
  CHECK(ConvCode::from_encoder(w->g) == c);
  CHECK(ConvCode::from_encoder(w->gbar) == cbar);
  CHECK_FALSE(code_me(c, cbar).has_value());
  CHECK(code_isometric(c, cbar).has_value());
  CHECK_FALSE(code_isometric(c.dual(), cbar.dual()).has_value());
}

TEST_CASE("codes with equivalent WAMs that are not monomially equivalent") {
  const ConvCode c = ConvCode::from_encoder(example_matrix("exa3.3_G"));
  const ConvCode cbar = ConvCode::from_encoder(example_matrix("exa3.3_Gbar"));
  CHECK(wam_equivalent(wam(c.encoder()), wam(cbar.encoder())).has_value());
  CHECK_FALSE(code_me(c, cbar).has_value());
}

TEST_CASE("structural properties on small samples") {
  require_ok(block_macwilliams_exhaustive(2, 4));
  require_ok(positive_indices_me_vs_wam(100));
  require_ok(strong_isometry_same_wam_me(30));
  require_ok(at_most_one_positive_index(60));
  require_ok(delay_free_iso_vs_me(40));
  require_ok(strong_isometry_invariants(15));
  require_ok(isometry_preserves_delay(30));
  require_ok(strong_isometry_criterion_exhaustive(2, 2));
}
