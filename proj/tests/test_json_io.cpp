#include <catch2/catch.hpp>

#include "cnops/generators.hpp"
#include "cnops/json_io.hpp"

using namespace cnops;

namespace {
const Tolerance tol;
}

TEST_CASE("matrix json round-trip") {
  Rng rng(91);
  for (int trial = 0; trial < 10; ++trial) {
    const Index rows = 1 + trial % 4;
    const Index cols = 1 + (trial / 2) % 4;
    const ComplexMatrix m = gen::ginibre(rng, rows, cols);
    const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
    REQUIRE((back - m).norm() == 0.0);  // doubles survive json round-trip exactly
  }
}

TEST_CASE("matrix json validation") {
  Json j;
  j["rows"] = 2;
  j["cols"] = 2;
  j["data"] = Json::array({Json::array({1.0, 0.0})});
  REQUIRE_THROWS_AS(matrix_from_json(j), DomainError);  // wrong length

  Json bad_dims;
  bad_dims["rows"] = 0;
  bad_dims["cols"] = 2;
  bad_dims["data"] = Json::array();
  REQUIRE_THROWS_AS(matrix_from_json(bad_dims), DomainError);

  REQUIRE_THROWS_AS(matrix_from_json(Json::array()), DomainError);

  Json pair_shape;
  pair_shape["rows"] = 1;
  pair_shape["cols"] = 1;
  pair_shape["data"] = Json::array({Json::array({1.0})});
  REQUIRE_THROWS_AS(matrix_from_json(pair_shape), DomainError);
}

TEST_CASE("kind field") {
  Rng rng(92);
  const Conjugation c = random_conjugation(3, rng);
  const Json j = conjugation_to_json(c);
  REQUIRE(json_kind(j) == "conjugation");
  REQUIRE_NOTHROW(conjugation_from_json(j, tol));

  const Json plain = matrix_to_json(gen::ginibre(rng, 2, 2));
  REQUIRE(json_kind(plain) == "linear");
  // a generic matrix does not validate as a conjugation
  REQUIRE_THROWS_AS(conjugation_from_json(plain, tol), InvalidConjugation);
}

TEST_CASE("battery report serialization carries all ten conditions") {
  Rng rng(93);
  const gen::CjpInstance inst = gen::random_cnormal(rng, 3, tol);
  const CNormalReport rep = is_c_normal_battery(inst.t, inst.c, tol);
  const Json j = battery_report_to_json(rep);
  REQUIRE(j.at("conditions").size() == 10);
  REQUIRE(j.at("residuals").size() == 10);
  REQUIRE(j.at("verdict").get<bool>());
  REQUIRE(j.at("coherent").get<bool>());
}

TEST_CASE("inequality report serialization") {
  RealVector lhs(2), rhs(2);
  lhs << 1.0, 2.0;
  rhs << 3.0, 4.0;
  const InequalityReport rep = make_inequality_report("probe", lhs, rhs, tol);
  const Json j = inequality_report_to_json(rep);
  REQUIRE(j.at("name") == "probe");
  REQUIRE(j.at("slack").at(0).get<double>() == Approx(2.0));
  REQUIRE(j.at("passed").get<bool>());
}

TEST_CASE("json output is deterministic") {
  Rng rng(94);
  const ComplexMatrix m = gen::ginibre(rng, 3, 3);
  REQUIRE(matrix_to_json(m).dump() == matrix_to_json(m).dump());
}
