#include <doctest.h>

#include "convcode/wenum.hpp"

using namespace convcode;

TEST_CASE("weight polynomials") {
  const WPoly a({1, 2, 0, 3});
  const WPoly b = WPoly::one() + WPoly::monomial(1);
  CHECK(a.to_string() == "1+2W+3W^3");
  CHECK(WPoly().to_string() == "0");
  CHECK(b * b == WPoly({1, 2, 1}));
  CHECK(a - a == WPoly());
  CHECK(a.at_one() == 6);
  CHECK(a.del() == InfInt{0});
  CHECK(WPoly::monomial(4, 7).del() == InfInt{4});
  CHECK(WPoly().del().is_inf());
}

TEST_CASE("weight enumerator of a set of vectors") {
  const std::vector<FVector> vs{{1, 1, 0}, {0, 2, 0}, {1, 2, 1}, {0, 0, 0}};
  CHECK(we_of_set(vs) == WPoly({1, 1, 1, 1}));
}

TEST_CASE("truncated series in L") {
  WSeries s(3);
  s[0] = WPoly::one();
  s[1] = -WPoly::monomial(1);
  const WSeries inv = s.inverse();
  for (std::size_t l = 0; l <= 3; ++l) CHECK(inv[l] == WPoly::monomial(l));
  WSeries one(3);
  one[0] = WPoly::one();
  CHECK(s * inv == one);
  CHECK(inv.to_string() == "(1) + (W)L + (W^2)L^2 + (W^3)L^3");

  WSeries bad(2);
  bad[0] = WPoly::monomial(1);
  CHECK_THROWS_AS(bad.inverse(), std::domain_error);
}
