#include "doctest.h"

#include "mukai/error.hpp"
#include "mukai/integer.hpp"
#include "mukai/normal_form.hpp"
#include "oracle.hpp"

using namespace mukai;

TEST_CASE("extended gcd satisfies Bezout") {
  for (long a = -30; a <= 30; ++a) {
    for (long b = -30; b <= 30; ++b) {
      auto g = extended_gcd(a, b);
      CHECK(g.gcd >= 0);
      CHECK(Int(a) * g.x + Int(b) * g.y == g.gcd);
      CHECK(g.gcd == gcd(Int(a), Int(b)));
    }
  }
}

TEST_CASE("floor and ceil division round toward the right side") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(mod_floor(-7, 3) == 2);
  CHECK_THROWS_AS(floor_div(1, 0), Error);
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(-1, 5) == 4);
  CHECK(mod_inverse(4, 1) == 0);
  try {
    mod_inverse(4, 6);
    FAIL("expected NotCoprime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCoprime);
  }
}

TEST_CASE("isqrt is exact on huge values") {
  Int big = Int("123456789012345678901234567890");
  Int root = isqrt(big * big + 17);
  CHECK(root == big);
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
}

TEST_CASE("rational parsing and printing round-trip") {
  for (const char* text : {"0", "-3", "7/2", "-5/12", "123456789012345678901234/7"}) {
    CHECK(to_string(parse_rational(text)) == text);
  }
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  CHECK_THROWS_AS(parse_int("12x"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK(floor(make_rational(-7, 2)) == -4);
  CHECK(ceil(make_rational(-7, 2)) == -3);
}

TEST_CASE("hermite normal form is canonical") {
  IntMatrix a{{2, 4, 6}, {1, 1, 1}};
  IntMatrix b{{1, 1, 1}, {3, 5, 7}};  // same lattice, other generators
  CHECK(hermite_normal_form(a) == hermite_normal_form(b));
  auto h = hermite_normal_form(a);
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] > 0);
  CHECK(hermite_normal_form({{0, 0}, {0, 0}}).empty());
}

TEST_CASE("integer kernel is saturated and annihilated") {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Int> c;
    for (int i = 0; i < 4; ++i) c.push_back(oracle::uniform(-9, 9));
    auto kernel = integer_kernel(c);
    bool zero = std::all_of(c.begin(), c.end(), [](const Int& x) { return x == 0; });
    CHECK(kernel.size() == (zero ? 4u : 3u));
    for (const auto& row : kernel) {
      Int s = 0;
      for (std::size_t i = 0; i < 4; ++i) s += row[i] * c[i];
      CHECK(s == 0);
    }
    // Saturation: a random kernel element, divided by its content, is still
    // an integer combination of the basis.
    std::vector<Int> y(4, 0);
    for (const auto& row : kernel) {
      Int m = oracle::uniform(-5, 5);
      for (std::size_t i = 0; i < 4; ++i) y[i] += m * row[i];
    }
    Int g = gcd_all(y);
    if (g != 0) {
      for (auto& x : y) x /= g;
      CHECK(solve_in_hnf(kernel, y).has_value());
    }
  }
}

TEST_CASE("solve_linear_form") {
  std::vector<Int> c{6, 10, 15};
  auto x = solve_linear_form(c, 7);
  REQUIRE(x.has_value());
  CHECK((*x)[0] * 6 + (*x)[1] * 10 + (*x)[2] * 15 == 7);
  std::vector<Int> even{4, 6};
  CHECK_FALSE(solve_linear_form(even, 3).has_value());
}
