#include "doctest.h"

#include "mukai/error.hpp"
#include "mukai/lattice.hpp"
#include "oracle.hpp"

using namespace mukai;

namespace {
const NSLattice h2 = NSLattice::rank_one(2);
const NSLattice ell = NSLattice::elliptic();
}  // namespace

TEST_CASE("lattice validation") {
  CHECK_THROWS_AS(NSLattice({{1}}, {"H"}), Error);
  CHECK_THROWS_AS(NSLattice({{2, 1}, {0, 2}}, {"a", "b"}), Error);
  CHECK_THROWS_AS(NSLattice({{2, 1}, {1, 2}}, {"a", "a"}), Error);
  CHECK_THROWS_AS(NSLattice({}, {}), Error);
  CHECK_NOTHROW(NSLattice({{-2, 1}, {1, 0}}, {"C", "f"}));
}

TEST_CASE("pairing examples") {
  CHECK(pair({1, {0}, 1}, {1, {0}, 1}, h2) == -2);
  CHECK(pair({0, {1}, 0}, {0, {1}, 0}, h2) == 2);
  CHECK(pair({2, {1}, -1}, {1, {0}, 1}, h2) == -1);
  CHECK(pair({1, {0, 0}, 1}, {1, {0, 0}, 1}, ell) == -2);
  CHECK_THROWS_AS(pair({1, {0}, 1}, {1, {0, 0}, 1}, h2), Error);
}

TEST_CASE("pairing agrees with the graded-ring oracle") {
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t rank = oracle::uniform(1, 3);
    auto g = oracle::random_even_gram(rank, 8);
    NSLattice L(g, [&] {
      std::vector<std::string> n;
      for (std::size_t i = 0; i < rank; ++i) n.push_back("e" + std::to_string(i));
      return n;
    }());
    auto x = oracle::random_vector(rank, 20);
    auto y = oracle::random_vector(rank, 20);
    CHECK(pair(x, y, L) == oracle::mukai_pairing(x, y, g));
    CHECK(pair(x, y, L) == pair(y, x, L));
    auto n = oracle::random_class(rank, 5);
    CHECK(twist(x, n, L) == oracle::twist(x, n, g));
  }
}

TEST_CASE("dualize") {
  CHECK(dualize({1, {0}, 1}) == MukaiVector{1, {0}, 1});
  CHECK(dualize({0, {1}, 0}) == MukaiVector{0, {-1}, 0});
  CHECK(dualize({3, {2}, 1}) == MukaiVector{3, {-2}, 1});
}

TEST_CASE("vector_from_chern") {
  CHECK(vector_from_chern(1, {0}, 0, h2) == MukaiVector{1, {0}, 1});
  for (int n = 0; n < 10; ++n) CHECK(vector_from_chern(1, {0}, n, h2) == MukaiVector{1, {0}, 1 - n});
  CHECK(vector_from_chern(2, {1}, 1, h2) == MukaiVector{2, {1}, 2});
  auto v = vector_from_chern(3, {2}, 5, h2);
  CHECK(second_chern_class(v, h2) == 5);
}

TEST_CASE("twist examples") {
  CHECK(twist({1, {0}, 1}, {1}, h2) == MukaiVector{1, {1}, 2});
  CHECK(twist({1, {0}, 1}, {1}, h2) == vector_from_chern(1, {1}, 0, h2));
  CHECK(twist({2, {2, 0}, -1}, {0, 3}, ell) == MukaiVector{2, {2, 6}, 5});
  MukaiVector x{4, {3}, -7};
  CHECK(twist(x, {0}, h2) == x);
  CHECK(twist(twist(x, {3}, h2), {-3}, h2) == x);
}

TEST_CASE("reflect examples") {
  MukaiVector v1{1, {0}, 1};
  CHECK(reflect(v1, v1, h2) == -v1);
  CHECK(reflect({0, {1}, 0}, v1, h2) == MukaiVector{0, {1}, 0});
  MukaiVector w = reflect({2, {1}, -1}, v1, h2);
  CHECK(w == MukaiVector{1, {1}, -2});
  CHECK(square(w, h2) == 6);
  try {
    reflect({2, {1}, -1}, {1, {0}, 0}, h2);
    FAIL("expected NotSpherical");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSpherical);
  }
}

TEST_CASE("classify") {
  auto c = classify({2, {0}, 2}, h2);
  CHECK_FALSE(c.primitive);
  c = classify({1, {0}, 1}, h2);
  CHECK(c.spherical);
  CHECK(c.square == -2);
  c = classify({1, {0}, 0}, h2);
  CHECK(c.isotropic);
  CHECK(c.primitive);
  CHECK(content({4, {6}, 10}) == 2);
}

TEST_CASE("orth_basis examples") {
  auto b = orth_basis({1, {0}, 1}, h2);
  REQUIRE(b.basis.size() == 2);
  for (const auto& x : b.basis) CHECK(pair(x, {1, {0}, 1}, h2) == 0);
  CHECK(b.coordinates_of({0, {1}, 0}).has_value());
  CHECK(b.coordinates_of({1, {0}, -1}).has_value());
  CHECK_FALSE(b.coordinates_of({1, {0}, 0}).has_value());

  auto c = orth_basis({0, {1}, 0}, h2);
  REQUIRE(c.basis.size() == 2);
  CHECK(c.coordinates_of({1, {0}, 0}).has_value());
  CHECK(c.coordinates_of({0, {0}, 1}).has_value());
  CHECK_FALSE(c.coordinates_of({0, {1}, 0}).has_value());

  CHECK_THROWS_AS(orth_basis({0, {0}, 0}, h2), Error);
}

TEST_CASE("orth_basis Gram matrix matches the pairing") {
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_even_gram(2, 6);
    NSLattice L(g, {"a", "b"});
    auto v = oracle::random_vector(2, 6);
    if (v.is_zero()) continue;
    auto b = orth_basis(v, L);
    CHECK(b.basis.size() == 3);
    for (std::size_t i = 0; i < b.basis.size(); ++i) {
      CHECK(oracle::mukai_pairing(b.basis[i], v, g) == 0);
      for (std::size_t j = 0; j < b.basis.size(); ++j) {
        CHECK(b.gram[i][j] == oracle::mukai_pairing(b.basis[i], b.basis[j], g));
      }
    }
  }
}
