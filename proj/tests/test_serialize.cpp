#include "doctest.h"

#include "mukai/error.hpp"
#include "mukai/serialize.hpp"
#include "oracle.hpp"

using namespace mukai;

TEST_CASE("integers beyond 2^53 become strings") {
  Int small = (Int(1) << 53) - 1;
  Int big = Int(1) << 53;
  CHECK(to_json(small).is_number_integer());
  CHECK(to_json(big).is_string());
  CHECK(to_json(Int(-big)).get<std::string>() == "-9007199254740992");
  CHECK(int_from_json(to_json(big)) == big);
  CHECK(int_from_json(Json("-123456789012345678901234567890")) ==
        Int("-123456789012345678901234567890"));
  CHECK(rational_from_json(to_json(make_rational(-7, 3))) == make_rational(-7, 3));
  CHECK_THROWS_AS(int_from_json(Json(1.5)), Error);
}

TEST_CASE("lattice and vector round-trip") {
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rank = oracle::uniform(1, 3);
    auto g = oracle::random_even_gram(rank, 8);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rank; ++i) names.push_back("x" + std::to_string(i));
    NSLattice L(g, names);
    CHECK(lattice_from_json(parse_json(to_json(L).dump())) == L);
    auto v = oracle::random_vector(rank, 1000);
    v.a *= Int("1000000000000000000000");
    CHECK(vector_from_json(parse_json(to_json(v).dump())) == v);
  }
}

TEST_CASE("reports, cones and walls round-trip") {
  auto rep = check_hypotheses(HypothesisKind::KCriterion, {{"r", 5}, {"r1", 4}, {"s", 2}});
  CHECK(report_from_json(to_json(rep)) == rep);
  AmpleConeSpec cone{{{0, 1}, {1, 2}}, {make_rational(1, 2), 3}};
  CHECK(cone_from_json(to_json(cone)) == cone);
  Wall w{{1, -2}, {{{0, 1}, 3}, {{1, 1}, -2}}, -10};
  CHECK(wall_from_json(to_json(w)) == w);
  for (const auto& params : {FamilyParams{CoprimeParams{7, 3, 1}}, FamilyParams{GeneralParams{2, 1, 1, 1, 2}}}) {
    CHECK(family_params_from_json(to_json(params)) == params);
  }
}

TEST_CASE("certificates round-trip") {
  for (long r = 1; r <= 4; ++r) {
    for (long s = 1; s <= 4; ++s) {
      PlanRequest req;
      req.r = r;
      req.square = 2 * s;
      auto cert = plan_certificate(req);
      auto text = to_json(cert).dump();
      CHECK(certificate_from_json(parse_json(text)) == cert);
      CHECK(to_json(certificate_from_json(parse_json(text))).dump() == text);
    }
  }
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_json("{\"gram\": [[2]");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
  CHECK_THROWS_AS(lattice_from_json(parse_json("{\"gram\": [[3]]}")), Error);
  CHECK_THROWS_AS(vector_from_json(parse_json("{\"r\": 1, \"xi\": [0]}")), Error);
}
