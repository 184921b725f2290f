#include "crnkit/json_io.hpp"

#include <stdexcept>

namespace crn {

namespace {

Json complex_to_json(const Complex& c) {
  Json terms = Json::array();
  for (const auto& [s, coeff] : c.coefficients())
    terms.push_back(Json::array({s, to_string(coeff)}));
  return terms;
}

Complex complex_from_json(const Json& j) {
  std::map<int, Rational> coeffs;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw std::invalid_argument("complex term must be [species, coefficient]");
    int s = term[0].get<int>();
    Rational c = term[1].is_number()
                     ? Rational(term[1].get<long>())
                     : parse_rational(term[1].get<std::string>());
    coeffs[s] += c;
  }
  return Complex(std::move(coeffs));
}

}  // namespace

Json network_to_json(const Network& net) {
  Json j;
  j["species"] = net.species();
  Json complexes = Json::array();
  for (const Complex& c : net.complexes()) complexes.push_back(complex_to_json(c));
  j["complexes"] = std::move(complexes);
  Json reactions = Json::array();
  for (const Reaction& r : net.reactions()) {
    Json rj{{"reactant", r.reactant}, {"product", r.product}};
    if (r.label) rj["label"] = *r.label;
    reactions.push_back(std::move(rj));
  }
  j["reactions"] = std::move(reactions);
  return j;
}

Network network_from_json(const Json& j) {
  std::vector<std::string> species = j.at("species").get<std::vector<std::string>>();
  std::vector<Complex> complexes;
  for (const auto& c : j.at("complexes")) complexes.push_back(complex_from_json(c));
  std::vector<Reaction> reactions;
  for (const auto& r : j.at("reactions")) {
    Reaction rx{r.at("reactant").get<int>(), r.at("product").get<int>(),
                std::nullopt};
    if (r.contains("label")) rx.label = r.at("label").get<std::string>();
    reactions.push_back(std::move(rx));
  }
  return Network::create(std::move(species), std::move(complexes),
                         std::move(reactions));
}

Json structural_report_to_json(const StructuralReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["n_r"] = rep.n_r;
  j["l"] = rep.l;
  j["sl"] = rep.sl;
  j["t"] = rep.t;
  j["s"] = rep.s;
  j["q"] = rep.q;
  j["c"] = rep.c;
  j["delta"] = rep.delta;
  j["delta_p"] = rep.delta_p;
  j["weakly_reversible"] = rep.weakly_reversible;
  j["t_minimal"] = rep.t_minimal;
  j["linkage_classes"] = rep.linkage_classes;
  j["strong_classes"] = rep.strong_classes;
  j["terminal_strong_classes"] = rep.terminal_strong_classes;
  j["per_linkage_deficiency"] = rep.per_linkage_deficiency;
  j["network_class"] = to_string(rep.network_class);
  if (rep.rss_subclass != RssSubclass::None)
    j["rss_subclass"] = to_string(rep.rss_subclass);
  return j;
}

Json decomposition_to_json(const Decomposition& d) {
  Json j;
  j["blocks"] = d.blocks;
  if (d.covering_flag) j["covering"] = true;
  return j;
}

Decomposition decomposition_from_json(const Json& j, const Network& net,
                                      bool allow_overlap) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : j.at("blocks")) {
    std::vector<int> block;
    for (const auto& entry : b) {
      if (entry.is_number_integer()) {
        block.push_back(entry.get<int>());
      } else {
        const std::string label = entry.get<std::string>();
        int idx = net.find_label(label);
        if (idx < 0)
          throw std::invalid_argument("unknown reaction label: " + label);
        block.push_back(idx);
      }
    }
    blocks.push_back(std::move(block));
  }
  if (j.value("covering", false)) allow_overlap = true;
  return Decomposition::create(std::move(blocks), net.reaction_count(),
                               allow_overlap);
}

Json decomposition_report_to_json(const DecompositionReport& rep) {
  Json blocks = Json::array();
  for (const auto& st : rep.per_block)
    blocks.push_back(Json{{"n", st.n}, {"l", st.l}, {"s", st.s},
                          {"delta", st.delta}});
  Json j;
  j["k"] = rep.k;
  j["per_block"] = std::move(blocks);
  j["independent"] = rep.independent;
  j["incidence_independent"] = rep.incidence_independent;
  j["bi_independent"] = rep.bi_independent;
  j["is_C"] = rep.is_C;
  j["is_C_star"] = rep.is_C_star;
  j["k0"] = rep.k0;
  j["delta"] = rep.delta;
  j["delta_sum"] = rep.delta_sum;
  j["deficiency_slack_low"] = rep.deficiency_slack_low;
  j["deficiency_slack_high"] = rep.deficiency_slack_high;
  return j;
}

Json ssystem_to_json(const SSystemModel& model) {
  Json j;
  j["m"] = model.m;
  j["dependent"] = model.dependent;
  j["alpha"] = model.alpha;
  j["beta"] = model.beta;
  j["g"] = model.g;
  j["h"] = model.h;
  if (!model.names.empty()) j["names"] = model.names;
  return j;
}

SSystemModel ssystem_from_json(const Json& j) {
  SSystemModel model;
  model.m = j.at("m").get<int>();
  model.dependent = j.at("dependent").get<std::vector<bool>>();
  model.alpha = j.at("alpha").get<std::vector<double>>();
  model.beta = j.at("beta").get<std::vector<double>>();
  model.g = j.at("g").get<std::vector<std::vector<double>>>();
  model.h = j.at("h").get<std::vector<std::vector<double>>>();
  if (j.contains("names"))
    model.names = j.at("names").get<std::vector<std::string>>();
  model.validate();
  return model;
}

Json realization_spec_to_json(const RealizationSpec& spec) {
  Json j;
  j["kind"] = to_string(spec.kind);
  if (!spec.choices.empty()) {
    Json choices = Json::array();
    for (const auto& c : spec.choices)
      choices.push_back(Json{{"rho", c.rho},
                             {"pi", c.pi},
                             {"R", c.inflow_regulators},
                             {"P", c.outflow_regulators}});
    j["choices"] = std::move(choices);
  }
  return j;
}

RealizationSpec realization_spec_from_json(const Json& j) {
  RealizationSpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "independent")
    spec.kind = RealizationKind::Independent;
  else if (kind == "embedded")
    spec.kind = RealizationKind::Embedded;
  else if (kind == "subnetwork")
    spec.kind = RealizationKind::Subnetwork;
  else if (kind == "total")
    spec.kind = RealizationKind::Total;
  else
    throw std::invalid_argument("unknown realization kind: " + kind);

  if (j.contains("choices")) {
    for (const auto& c : j.at("choices")) {
      SpeciesChoice choice;
      choice.rho = c.value("rho", -1);
      choice.pi = c.value("pi", -1);
      if (c.contains("R"))
        choice.inflow_regulators = c.at("R").get<std::vector<int>>();
      if (c.contains("P"))
        choice.outflow_regulators = c.at("P").get<std::vector<int>>();
      spec.choices.push_back(std::move(choice));
    }
  }
  return spec;
}

Json kinetics_to_json(const PowerLawKinetics& kin) {
  return Json{{"rates", kin.rates}, {"orders", kin.orders}};
}

PowerLawKinetics kinetics_from_json(const Json& j, const Network& net) {
  if (j.value("mass_action", false)) {
    auto kin = PowerLawKinetics::mass_action(
        net, j.at("rates").get<std::vector<double>>());
    return kin;
  }
  PowerLawKinetics kin;
  kin.rates = j.at("rates").get<std::vector<double>>();
  kin.orders = j.at("orders").get<std::vector<std::vector<double>>>();
  kin.validate(net);
  return kin;
}

Json coverability_report_to_json(const CoverabilityReport& rep) {
  Json j;
  j["species_coverable"] = rep.species_coverable;
  j["is_decomposition"] = rep.is_decomposition;
  j["species_decomposable"] = rep.species_decomposable;
  j["m_rev"] = rep.m_rev;
  j["m_dep"] = rep.m_dep;
  j["delta"] = rep.delta;
  j["delta_bound"] = rep.delta_bound;
  j["bound_tight"] = rep.bound_tight;
  j["bi_independent"] = rep.bi_independent;
  Json covering = Json::array();
  for (const auto& e : rep.covering)
    covering.push_back(Json{{"in_reaction", e.in_reaction},
                            {"out_reaction", e.out_reaction},
                            {"rho", e.rho},
                            {"pi", e.pi},
                            {"R", e.inflow_regulators},
                            {"P", e.outflow_regulators},
                            {"reversible", e.reversible},
                            {"independent", e.independent}});
  j["covering"] = std::move(covering);
  return j;
}

Json equilibria_verification_to_json(const EquilibriaVerification& rep) {
  auto counts = [](const CheckCounts& c) {
    return Json{{"checked", c.checked}, {"violations", c.violations}};
  };
  Json j;
  j["incidence_independent"] = rep.incidence_independent;
  j["independent"] = rep.independent;
  j["is_C"] = rep.is_C;
  j["blocks_weakly_reversible"] = rep.blocks_weakly_reversible;
  j["whole_cb_witnesses"] = rep.whole_cb_witnesses;
  j["whole_cb_restricts_to_blocks"] = counts(rep.whole_cb_restricts_to_blocks);
  j["joint_cb_witnesses"] = rep.joint_cb_witnesses;
  j["joint_cb_is_whole_cb"] = counts(rep.joint_cb_is_whole_cb);
  j["joint_eq_witnesses"] = rep.joint_eq_witnesses;
  j["joint_eq_is_whole_eq"] = counts(rep.joint_eq_is_whole_eq);
  j["converse_applicable"] = rep.converse_applicable;
  j["converse_found_whole_witness"] = rep.converse_found_whole_witness;
  j["total_violations"] = rep.total_violations();
  return j;
}

}  // namespace crn
