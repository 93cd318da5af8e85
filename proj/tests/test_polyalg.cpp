#include <doctest.h>

#include <algorithm>

#include "convcode/errors.hpp"
#include "support.hpp"

using namespace convcode;
using convcode::testing::bits;

namespace {

const Field& F2() { return Field::get(2); }

PolyMatrix mat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<PolyVector> out;
  for (const auto& r : rows) {
    PolyVector v;
    for (const auto& s : r) v.push_back(bits(s));
    out.push_back(v);
  }
  return PolyMatrix::from_rows(out);
}

// Cofactor expansion along the first row.
Poly laplace_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Poly acc(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix sub(m.field(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) sub(i - 1, jj++) = m(i, j);
    Poly term = m(0, c) * laplace_det(sub);
    acc = (c % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

bool same_module(const PolyMatrix& a, const PolyMatrix& b) { return hermite_form(a) == hermite_form(b); }

}  // namespace

TEST_CASE("weight and delay") {
  const Field& f = F2();
  CHECK(weight(zero_vector(f, 3)) == 0);
  CHECK(weight(PolyVector{bits("1"), bits("01"), bits("01"), bits("11")}) == 5);
  CHECK(delay(zero_vector(f, 2)).is_inf());
  CHECK(delay(PolyVector{bits("01"), bits("01"), bits("11")}) == InfInt{0});
  CHECK(delay(PolyVector{bits("001"), bits("0001")}) == InfInt{2});
  const PolyMatrix g = mat({{"111", "1", "0"}, {"001", "11", "001"}});
  CHECK(weight(g.left_mul({bits("11"), Poly(f)})) == 4);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937 rng(11);
  for (const Field* f : {&Field::get(2), &Field::get(3), &Field::get(2, 2)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + trial % 4;
      const PolyMatrix m = testing::random_matrix(*f, rng, n, n, 2);
      CHECK(determinant(m) == laplace_det(m));
    }
  }
}

TEST_CASE("matrix degree, basicness, reducedness") {
  const Field& f = F2();
  CHECK(matrix_degree(mat({{"1", "0", "1"}, {"0", "1", "1"}})) == 0);
  CHECK(matrix_degree(mat({{"1", "01", "0"}, {"1", "1", "1"}})) == 1);
  const PolyMatrix g43 = mat({{"111", "1", "0"}, {"001", "11", "001"}});
  const PolyMatrix gbar43 = mat({{"0111", "1", "0"}, {"0001", "11", "1"}});
  CHECK(matrix_degree(g43) == 4);
  CHECK(matrix_degree(gbar43) == 4);
  CHECK_THROWS_AS(matrix_degree(mat({{"1", "01"}, {"1", "01"}})), PreconditionError);

  CHECK(is_basic(mat({{"1", "0", "011"}, {"0", "1", "1"}})));
  CHECK_FALSE(is_basic(mat({{"01", "01"}})));
  CHECK(is_basic(mat({{"1", "01", "01", "11"}})));
  CHECK_FALSE(is_basic(mat({{"1", "1"}, {"1", "1"}})));

  CHECK(is_reduced(mat({{"1", "0"}, {"1", "1"}})));
  CHECK(is_reduced(g43));
  CHECK_FALSE(is_reduced(gbar43));
  CHECK(is_reduced(mat({{"11", "0", "01"}, {"1", "1", "1"}})));
  CHECK_THROWS_AS(is_reduced(PolyMatrix(f, 1, 2)), PreconditionError);
}

TEST_CASE("row reduction") {
  const PolyMatrix g43 = mat({{"111", "1", "0"}, {"001", "11", "001"}});
  auto fixed = reduce(g43);
  CHECK(fixed.reduced == g43);
  CHECK(fixed.transform == PolyMatrix::identity(F2(), 2));

  const PolyMatrix gbar43 = mat({{"0111", "1", "0"}, {"0001", "11", "1"}});
  auto r = reduce(gbar43);
  CHECK(is_reduced(r.reduced));
  CHECK(sorted_row_degrees(r.reduced) == std::vector<int>{2, 2});
  CHECK(r.transform * gbar43 == r.reduced);
  CHECK(determinant(r.transform).is_constant());
  CHECK_FALSE(determinant(r.transform).is_zero());
  CHECK(same_module(r.reduced, gbar43));
  CHECK_THROWS_AS(reduce(mat({{"01", "01"}})), PreconditionError);

  std::mt19937 rng(5);
  for (const Field* f : {&Field::get(2), &Field::get(3), &Field::get(2, 2)}) {
    for (int trial = 0; trial < 34; ++trial) {
      const std::size_t k = 1 + trial % 3;
      const PolyMatrix g = testing::random_reduced(*f, rng, k, k + 1 + trial % 2, 1 + trial % 2);
      const PolyMatrix u = testing::random_unimodular(*f, rng, k, 1 + trial % 3);
      const auto out = reduce(u * g);
      CHECK(is_reduced(out.reduced));
      CHECK(sorted_row_degrees(out.reduced) == sorted_row_degrees(g));
      CHECK(matrix_degree(u * g) == matrix_degree(g));
      CHECK(hermite_form(out.reduced) == hermite_form(g));
    }
  }
}

TEST_CASE("predictable degree property of reduced matrices") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Field& f = trial % 2 ? Field::get(2) : Field::get(3);
    const PolyMatrix g = testing::random_reduced(f, rng, 2, 3, 2);
    const PolyVector u = testing::random_vector(f, rng, 2, 3);
    if (is_zero(u)) continue;
    const auto nu = g.row_degrees();
    int expected = -1;
    for (std::size_t i = 0; i < 2; ++i)
      if (!u[i].is_zero()) expected = std::max(expected, u[i].degree() + nu[i]);
    CHECK(degree(g.left_mul(u)) == expected);
  }
}

TEST_CASE("hermite form") {
  const Field& f = F2();
  CHECK(hermite_form(PolyMatrix::identity(f, 3)) == PolyMatrix::identity(f, 3));
  CHECK(hermite_form(mat({{"1", "1", "1"}, {"01", "1", "0"}})) == mat({{"1", "1", "1"}, {"0", "11", "01"}}));
  CHECK_THROWS_AS(hermite_form(mat({{"01", "01"}})), PreconditionError);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Field& fld = trial % 3 == 0 ? Field::get(2, 2) : Field::get(2);
    const std::size_t k = 1 + trial % 3;
    const PolyMatrix g = testing::random_basic(fld, rng, k, k + 1, 2);
    const PolyMatrix u = testing::random_unimodular(fld, rng, k, 2);
    const auto h = hermite_decompose(g);
    CHECK(h.transform * g == h.form);
    CHECK(hermite_form(u * g) == h.form);
  }
}

TEST_CASE("membership solving") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Field& fld = trial % 2 ? Field::get(3) : Field::get(2);
    const PolyMatrix g = testing::random_basic(fld, rng, 2, 4, 2);
    const auto h = hermite_decompose(g);
    const PolyVector u = testing::random_vector(fld, rng, 2, 3);
    const auto got = solve_message(h, g.left_mul(u));
    REQUIRE(got.has_value());
    CHECK(*got == u);
  }
  const PolyMatrix g = mat({{"1", "01", "01", "11"}});
  CHECK_FALSE(solve_message(hermite_decompose(g), {bits("1"), Poly(F2()), Poly(F2()), Poly(F2())}).has_value());
}

TEST_CASE("right kernel") {
  const Field& f = F2();
  const PolyMatrix split = mat({{"1", "0", "0", "0"}, {"0", "1", "0", "0"}});
  CHECK(right_kernel_basis(split) == mat({{"0", "0", "1", "0"}, {"0", "0", "0", "1"}}));
  CHECK(same_module(right_kernel_basis(mat({{"1", "01", "11"}})), mat({{"1", "1", "1"}, {"01", "1", "0"}})));
  CHECK(same_module(right_kernel_basis(mat({{"01", "01", "11"}})), mat({{"1", "1", "0"}, {"01", "1", "01"}})));

  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Field& fld = trial % 4 == 0 ? Field::get(3) : Field::get(2);
    const std::size_t n = 2 + trial % 4;
    const std::size_t k = 1 + trial % (n - 1);
    const PolyMatrix g = testing::random_basic(fld, rng, k, n, 1 + trial % 2);
    const PolyMatrix h = right_kernel_basis(g);
    CHECK(h.rows() == n - k);
    const PolyMatrix prod = h * g.transpose();
    CHECK(prod == PolyMatrix(fld, n - k, k));
    CHECK(is_basic(h));
    CHECK(matrix_degree(h) == matrix_degree(g));
    CHECK(same_module(right_kernel_basis(h), g));
  }
  (void)f;
}
