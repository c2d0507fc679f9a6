#include "doctest.h"

#include "mukai/error.hpp"
#include "mukai/families.hpp"
#include "oracle.hpp"

using namespace mukai;

namespace {
ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}
}  // namespace

TEST_CASE("solve_bezout") {
  auto b = solve_bezout(3, 2);
  CHECK(b.r1 == 2);
  CHECK(b.d1 == 1);
  b = solve_bezout(2, 1);
  CHECK(b.r1 == 1);
  CHECK(b.d1 == 0);
  for (long d = 1; d < 10; ++d) {
    b = solve_bezout(1, d);
    CHECK(b.r1 == 1);
    CHECK(b.d1 == d - 1);
  }
  for (long r = 1; r <= 20; ++r) {
    for (long d = 1; d <= 20; ++d) {
      if (std::gcd(r, d) != 1) {
        CHECK(kind_of([&] { solve_bezout(r, d); }) == ErrorKind::NotCoprime);
        continue;
      }
      b = solve_bezout(r, d);
      CHECK(b.r1 * d - Int(r) * b.d1 == 1);
      CHECK(b.r1 > 0);
      CHECK(b.r1 <= r);
    }
  }
}

TEST_CASE("solve_pq") {
  auto pq = solve_pq(2, 1);
  CHECK(pq.p == 1);
  CHECK(pq.q == 1);
  pq = solve_pq(1, 5);
  CHECK(pq.p == 0);
  CHECK(pq.q == 1);
  pq = solve_pq(3, 2);
  CHECK(pq.p == 1);
  CHECK(pq.q == 1);
  CHECK(kind_of([] { solve_pq(4, 2); }) == ErrorKind::NotCoprime);
  for (long l = 1; l <= 12; ++l) {
    for (long r1 = 1; r1 <= 12; ++r1) {
      if (std::gcd(l, r1) != 1) continue;
      pq = solve_pq(l, r1);
      CHECK(pq.p * r1 - pq.q * l == -1);
      CHECK(pq.p >= 0);
      CHECK(pq.p < l);
    }
  }
}

TEST_CASE("family_coprime examples") {
  auto f = family_coprime(3, 2, 1);
  CHECK(f.lattice == NSLattice::rank_one(2));
  CHECK(f.v1 == MukaiVector{2, {1}, 1});
  CHECK(f.v == MukaiVector{3, {2}, 1});
  CHECK(f.identities.v1_square == -2);
  CHECK(f.identities.v_square == 2);
  CHECK(f.identities.v_dot_v1 == -1);

  f = family_coprime(2, 1, 3);
  CHECK(f.lattice == NSLattice::rank_one(2));
  CHECK(f.v1 == MukaiVector{1, {0}, 1});
  CHECK(f.v == MukaiVector{2, {1}, -1});
  CHECK(f.w() == MukaiVector{1, {1}, -2});

  CHECK(kind_of([] { family_coprime(2, 1, 2); }) == ErrorKind::NonPositiveK);
  CHECK(kind_of([] { family_coprime(4, 2, 5); }) == ErrorKind::NotCoprime);
}

TEST_CASE("family_general examples") {
  auto f = family_general(2, 1, 1, 1, 2);
  CHECK(f.lattice == NSLattice::rank_one(4));
  CHECK(f.v == MukaiVector{2, {2}, -1});
  CHECK(f.v1 == MukaiVector{1, {0}, 1});
  CHECK(f.p == 1);
  CHECK(f.q == 1);
  CHECK(f.identities.v_square == 20);

  f = family_general(2, 1, 1, 1, 1);
  CHECK(f.lattice == NSLattice::rank_one(2));
  CHECK(f.identities.v_square == 12);

  CHECK(kind_of([] { family_general(2, 1, 1, 2, 1); }) == ErrorKind::NotCoprime);
  CHECK(kind_of([] { family_general(2, 1, 1, 3, 1); }) == ErrorKind::RangeError);
  CHECK(kind_of([] { family_general(2, 0, 1, 1, 1); }) == ErrorKind::RangeError);
  CHECK(kind_of([] { family_general(2, 3, 3, 1, 1); }) == ErrorKind::NotCoprime);
  CHECK(kind_of([] { family_general(1, 3, 1, 2, 5); }) == ErrorKind::NoBezoutSolution);
}

TEST_CASE("general family with l = 1 reproduces the coprime family") {
  for (long r = 2; r <= 9; ++r) {
    for (long d = 1; d < r; ++d) {
      if (std::gcd(r, d) != 1) continue;
      for (long s = 1; s <= 6; ++s) {
        auto b = solve_bezout(r, d);
        if (k_coprime(r, b.r1, s) < 1) continue;
        auto c = family_coprime(r, d, s);
        auto g = family_general(1, r, d, b.r1, s);
        CHECK(c.v == g.v);
        CHECK(c.v1 == g.v1);
        CHECK(c.lattice == g.lattice);
      }
    }
  }
}

TEST_CASE("identities re-checked with the ring oracle") {
  for (long r = 2; r <= 8; ++r) {
    for (long d = 1; d < r; ++d) {
      if (std::gcd(r, d) != 1) continue;
      for (long s = -3; s <= 6; ++s) {
        auto b = solve_bezout(r, d);
        if (k_coprime(r, b.r1, s) < 1) continue;
        auto f = family_coprime(r, d, s);
        const auto& g = f.lattice.gram();
        CHECK(oracle::mukai_pairing(f.v1, f.v1, g) == -2);
        CHECK(oracle::mukai_pairing(f.v, f.v, g) == 2 * s);
        CHECK(oracle::mukai_pairing(f.v, f.v1, g) == -1);
      }
    }
  }
}

TEST_CASE("check_hypotheses examples") {
  auto rep = check_hypotheses(HypothesisKind::KCriterion, {{"r", 2}, {"r1", 1}, {"s", 3}});
  CHECK(rep.passed);
  CHECK(rep.derived.at("k") == 1);

  rep = check_hypotheses(HypothesisKind::DeformationBound, {{"l", 2}, {"r", 1}, {"square", 20}});
  CHECK(rep.passed);
  CHECK(rep.margin == 6);

  rep = check_hypotheses(HypothesisKind::MuBound, {{"l", 2}, {"square", 20}});
  CHECK(rep.passed);
  CHECK(rep.derived.at("codim_bound") == 4);

  rep = check_hypotheses(HypothesisKind::MuNonEmpty, {{"l", 2}, {"square", 8}});
  CHECK(rep.passed);
  rep = check_hypotheses(HypothesisKind::MuBound, {{"l", 2}, {"square", 8}});
  CHECK_FALSE(rep.passed);

  CHECK(kind_of([] { check_hypotheses(HypothesisKind::MuBound, {{"l", 2}}); }) ==
        ErrorKind::MissingParam);
}

TEST_CASE("k criterion is sufficient for k(s) > 0") {
  for (long r = 1; r <= 15; ++r) {
    for (long r1 = 1; r1 <= r; ++r1) {
      for (long s = -5; s <= 10; ++s) {
        auto rep = check_hypotheses(HypothesisKind::KCriterion, {{"r", r}, {"r1", r1}, {"s", s}});
        if (rep.passed) CHECK(k_coprime(r, r1, s) > 0);
        CHECK(rep.passed == (rep.margin >= 0));
      }
    }
  }
}

TEST_CASE("hypothesis kind names round-trip") {
  for (auto k : {HypothesisKind::KCriterion, HypothesisKind::DeformationBound, HypothesisKind::MuBound,
                 HypothesisKind::MuNonEmpty, HypothesisKind::KPositive}) {
    CHECK(parse_hypothesis_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_hypothesis_kind("lemma1"), Error);
}

TEST_CASE("family reports") {
  auto reports = family_reports(family_coprime(2, 1, 3));
  CHECK(reports.size() == 5);
  CHECK(reports.back().kind == HypothesisKind::KPositive);
  CHECK(reports.back().passed);
  reports = family_reports(family_general(2, 1, 1, 1, 2));
  CHECK(reports.size() == 4);
  for (const auto& r : reports) CHECK(r.passed);
}
