#include <doctest.h>

#include "crnkit/json_io.hpp"
#include "helpers.hpp"

using namespace crn;
using crn::testing::net;

TEST_SUITE_BEGIN("json formats");

TEST_CASE("network JSON round trip") {
  const Network a = net("X1 -> 2 X1 + X2\n3/2 X2 -> X1\n0 -> X1");
  const Network b = network_from_json(network_to_json(a));
  CHECK(a.species() == b.species());
  CHECK(a.complexes() == b.complexes());
  CHECK(a.reactions().size() == b.reactions().size());
}

TEST_CASE("network JSON validation errors") {
  Json bad = network_to_json(net("A -> B"));
  bad["reactions"].push_back(Json{{"reactant", 0}, {"product", 0}});
  CHECK_THROWS_AS(network_from_json(bad), ValidationError);
  Json negative = Json::parse(R"({
    "species": ["A", "B"],
    "complexes": [[[0, "-1"]], [[1, "1"]]],
    "reactions": [{"reactant": 0, "product": 1}]
  })");
  CHECK_THROWS(network_from_json(negative));
}

TEST_CASE("decomposition JSON resolves labels and indices") {
  Network n = net("A -> B\nB -> C\nC -> A");
  const Json j = Json::parse(R"({"blocks": [[0, 1], [2]]})");
  const Decomposition d = decomposition_from_json(j, n, false);
  CHECK(d.block_count() == 2);
  CHECK(decomposition_to_json(d)["blocks"].size() == 2);
  const Json overlapping = Json::parse(R"({"blocks": [[0, 1, 2], [2]]})");
  CHECK_THROWS_AS(decomposition_from_json(overlapping, n, false),
                  std::invalid_argument);
  const Decomposition cover = decomposition_from_json(
      Json::parse(R"({"blocks": [[0, 1, 2], [2]], "covering": true})"), n);
  CHECK(cover.covering_flag);
}

TEST_CASE("ssystem and kinetics round trips") {
  SSystemModel model;
  model.m = 2;
  model.dependent = {true, false};
  model.alpha = {1.0, 0.0};
  model.beta = {2.0, 0.0};
  model.g = {{0.0, 0.5}, {0.0, 0.0}};
  model.h = {{1.0, 0.0}, {0.0, 0.0}};
  const SSystemModel back = ssystem_from_json(ssystem_to_json(model));
  CHECK(back.m == model.m);
  CHECK(back.g == model.g);
  CHECK(back.dependent == model.dependent);

  const Network n = net("0 -> X\nX -> 0");
  PowerLawKinetics kin;
  kin.rates = {1.0, 2.0};
  kin.orders = {{0.0}, {1.5}};
  const PowerLawKinetics kback = kinetics_from_json(kinetics_to_json(kin), n);
  CHECK(kback.rates == kin.rates);
  CHECK(kback.orders == kin.orders);

  const Json ma = Json::parse(R"({"mass_action": true, "rates": [1.0, 2.0]})");
  const PowerLawKinetics derived = kinetics_from_json(ma, n);
  CHECK(derived.orders[1][0] == 1.0);  // reactant X has coefficient 1
  CHECK(derived.orders[0][0] == 0.0);  // zero-complex reactant
}

TEST_CASE("realization spec JSON") {
  const Json j = Json::parse(R"({
    "kind": "subnetwork",
    "choices": [
      {"rho": -1, "pi": 1, "R": [], "P": []},
      {"rho": 0, "pi": -1, "R": [0], "P": []}
    ]
  })");
  const RealizationSpec spec = realization_spec_from_json(j);
  CHECK(spec.kind == RealizationKind::Subnetwork);
  REQUIRE(spec.choices.size() == 2);
  CHECK(spec.choices[0].pi == 1);
  CHECK(spec.choices[1].inflow_regulators == std::vector<int>{0});
  CHECK_THROWS_AS(realization_spec_from_json(Json::parse(R"({"kind": "x"})")),
                  std::invalid_argument);
}

TEST_SUITE_END();
