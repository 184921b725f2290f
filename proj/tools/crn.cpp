#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "crnkit/generate.hpp"
#include "crnkit/json_io.hpp"
#include "crnkit/parser.hpp"
#include "crnkit/version.hpp"

namespace {

using crn::Json;

struct GlobalOptions {
  std::string format = "text";
  std::string out;
  unsigned long seed = 0;
  double tol = 1e-9;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

crn::Network load_network(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return crn::network_from_json(Json::parse(text));
  return crn::parse_network(text);
}

void render_text(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else if (value.is_array() && !value.empty() &&
                 (value.front().is_object() || value.front().is_array())) {
        out << pad << key << ":\n";
        for (const auto& item : value) {
          out << pad << "  -\n";
          render_text(item, out, indent + 4);
        }
      } else {
        out << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

/// Reports carry the tool version and resolved configuration so a run can be
/// reproduced from its own output.
void emit(const GlobalOptions& opts, const std::string& command,
          const Json& config, const Json& report) {
  Json doc;
  doc["tool"] = Json{{"name", "crn"}, {"version", crn::kVersion}};
  Json cfg = config;
  cfg["command"] = command;
  cfg["seed"] = opts.seed;
  cfg["tol"] = opts.tol;
  cfg["format"] = opts.format;
  doc["config"] = std::move(cfg);
  doc["report"] = report;

  std::ostringstream rendered;
  if (opts.format == "json") {
    rendered << doc.dump(2) << "\n";
  } else {
    render_text(doc, rendered);
  }
  if (opts.out.empty())
    std::cout << rendered.str();
  else
    write_file(opts.out, rendered.str());
}

crn::Decomposition resolve_blocks(const std::string& spec,
                                  const crn::Network& net,
                                  bool allow_overlap) {
  if (spec == "linkage") return crn::linkage_class_decomposition(net);
  if (spec == "finest") return crn::finest_independent_decomposition(net);
  if (spec == "s") return crn::s_decomposition(net).first;
  return crn::decomposition_from_json(Json::parse(read_file(spec)), net,
                                      allow_overlap);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chemical reaction network decomposition toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opts.out, "write the report here instead of stdout");
  app.add_option("--seed", opts.seed, "seed for randomized commands");
  app.add_option("--tol", opts.tol, "residual tolerance for equilibria checks");

  std::string net_path, blocks = "linkage", model_path, spec_path;
  std::string kinetics_path, kind = "independent";
  std::string out_network, out_kinetics, out_decomposition;
  bool exhaustive = false, verify_structure = false, mass_action = false;
  int samples = 24, species = 4, classes = 2, max_cycle = 4;

  CLI::App* analyze = app.add_subcommand("analyze", "structural report");
  analyze->add_option("network", net_path)->required();

  CLI::App* decompose =
      app.add_subcommand("decompose", "classify a decomposition");
  decompose->add_option("network", net_path)->required();
  decompose->add_option("--blocks", blocks,
                        "linkage | s | finest | decomposition JSON file");
  decompose->add_flag("--verify-structure", verify_structure,
                      "run the C/C* structure theorem checks");

  CLI::App* realize = app.add_subcommand("realize", "realize an S-system");
  realize->add_option("model", model_path)->required();
  realize->add_option("--kind", kind)
      ->check(CLI::IsMember({"independent", "embedded", "subnetwork", "total"}));
  realize->add_option("--spec", spec_path, "RealizationSpec JSON (subnetwork)");
  realize->add_option("--out-network", out_network)->required();
  realize->add_option("--out-kinetics", out_kinetics)->required();

  CLI::App* cover = app.add_subcommand("cover", "species coverability report");
  cover->add_option("network", net_path)->required();
  cover->add_flag("--exhaustive", exhaustive,
                  "backtracking search instead of first match");

  CLI::App* verify = app.add_subcommand(
      "verify-equilibria", "check the equilibria-set theorems numerically");
  verify->add_option("network", net_path)->required();
  verify->add_option("--kinetics", kinetics_path, "kinetics JSON file");
  verify->add_flag("--mass-action", mass_action,
                   "unit-rate mass action instead of a kinetics file");
  verify->add_option("--blocks", blocks,
                     "linkage | s | finest | decomposition JSON file");
  verify->add_option("--samples", samples, "multistart attempts");

  CLI::App* generate = app.add_subcommand("generate", "seeded fixture networks");
  generate->add_option("--kind", kind)
      ->check(CLI::IsMember(
          {"weakly-reversible", "species-decomposable", "c-decomposed"}))
      ->required();
  generate->add_option("--species", species);
  generate->add_option("--classes", classes, "linkage classes / cycles");
  generate->add_option("--max-cycle", max_cycle);
  generate->add_option("--out-decomposition", out_decomposition,
                       "write the generated decomposition here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      const crn::Network net = load_network(net_path);
      emit(opts, "analyze", Json{{"network", net_path}},
           crn::structural_report_to_json(crn::analyze(net)));
    } else if (*decompose) {
      const crn::Network net = load_network(net_path);
      const crn::Decomposition d = resolve_blocks(blocks, net, false);
      Json report = crn::decomposition_report_to_json(crn::classify(net, d));
      report["blocks"] = d.blocks;
      if (verify_structure) {
        report["C_structure_theorem"] = crn::verify_C_structure(net, d);
        if (crn::classify(net, d).is_C_star) {
          auto [ok, k0] = crn::verify_Cstar_structure(net, d);
          report["Cstar_structure_theorem"] = ok;
          report["Cstar_k0"] = k0;
        }
      }
      emit(opts, "decompose", Json{{"network", net_path}, {"blocks", blocks}},
           report);
    } else if (*realize) {
      const crn::SSystemModel model =
          crn::ssystem_from_json(Json::parse(read_file(model_path)));
      crn::RealizationSpec spec;
      if (!spec_path.empty())
        spec = crn::realization_spec_from_json(Json::parse(read_file(spec_path)));
      else if (kind == "independent")
        spec.kind = crn::RealizationKind::Independent;
      else if (kind == "embedded")
        spec.kind = crn::RealizationKind::Embedded;
      else if (kind == "total")
        spec.kind = crn::RealizationKind::Total;
      else
        throw std::runtime_error("subnetwork kind needs --spec");

      const crn::Realization real = crn::realize(model, spec);
      write_file(out_network, crn::serialize_network(real.network));
      write_file(out_kinetics, crn::kinetics_to_json(real.kinetics).dump(2) + "\n");

      Json report;
      report["kind"] = crn::to_string(spec.kind);
      report["species"] = real.network.species_count();
      report["complexes"] = real.network.complex_count();
      report["reactions"] = real.network.reaction_count();
      report["species_pairs"] = real.species_pairs;
      report["pairs_disjoint"] = real.pairs_disjoint;
      report["dynamically_equivalent"] = crn::dynamically_equivalent(model, real);
      emit(opts, "realize",
           Json{{"model", model_path},
                {"kind", kind},
                {"out_network", out_network},
                {"out_kinetics", out_kinetics}},
           report);
    } else if (*cover) {
      const crn::Network net = load_network(net_path);
      emit(opts, "cover",
           Json{{"network", net_path}, {"exhaustive", exhaustive}},
           crn::coverability_report_to_json(crn::coverability(net, exhaustive)));
    } else if (*verify) {
      const crn::Network net = load_network(net_path);
      crn::PowerLawKinetics kin =
          mass_action
              ? crn::PowerLawKinetics::mass_action(
                    net, std::vector<double>(net.reaction_count(), 1.0))
              : crn::kinetics_from_json(Json::parse(read_file(kinetics_path)),
                                        net);
      if (!crn::analyze(net).weakly_reversible)
        std::cerr << "warning: network is not weakly reversible; the set of "
                     "complex balanced equilibria may be empty\n";
      const crn::Decomposition d = resolve_blocks(blocks, net, false);
      crn::SolveOptions solver;
      solver.starts = samples;
      solver.seed = opts.seed;
      solver.tol = opts.tol;
      const crn::EquilibriaVerification rep =
          crn::verify_equilibria_theorems(net, kin, d, solver);
      emit(opts, "verify-equilibria",
           Json{{"network", net_path},
                {"blocks", blocks},
                {"samples", samples},
                {"mass_action", mass_action},
                {"kinetics", kinetics_path}},
           crn::equilibria_verification_to_json(rep));
      if (rep.total_violations() > 0) return 2;
    } else if (*generate) {
      crn::GeneratorParams params;
      params.species = species;
      params.linkage_classes = classes;
      params.max_cycle_length = max_cycle;
      params.seed = opts.seed;

      Json config{{"kind", kind},
                  {"species", species},
                  {"classes", classes},
                  {"max_cycle", max_cycle}};
      if (kind == "weakly-reversible") {
        const crn::Network net = crn::generate_weakly_reversible(params);
        emit(opts, "generate", config,
             Json{{"network", crn::serialize_network(net)},
                  {"sl_equals_l", crn::analyze(net).weakly_reversible}});
      } else if (kind == "species-decomposable") {
        const crn::Network net = crn::generate_species_decomposable(params);
        emit(opts, "generate", config,
             Json{{"network", crn::serialize_network(net)},
                  {"species_decomposable",
                   crn::coverability(net).species_decomposable}});
      } else {
        auto [net, d] = crn::generate_c_decomposed(params);
        if (!out_decomposition.empty())
          write_file(out_decomposition,
                     crn::decomposition_to_json(d).dump(2) + "\n");
        emit(opts, "generate", config,
             Json{{"network", crn::serialize_network(net)},
                  {"blocks", d.blocks},
                  {"C_structure_theorem", crn::verify_C_structure(net, d)}});
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
