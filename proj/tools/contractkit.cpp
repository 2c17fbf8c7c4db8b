// contractkit command-line front end.
//
// Exit codes: 0 verdict HOLDS (or command succeeded), 1 verdict FAILS,
// 2 input/validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contractkit/composition.hpp"
#include "contractkit/contracts.hpp"
#include "contractkit/io.hpp"
#include "contractkit/simulation.hpp"
#include "contractkit/trajectory.hpp"

namespace ck = contractkit;
using nlohmann::json;

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

struct Flags {
  bool witness = false;
  bool json = false;
};

std::vector<ck::Rational> parse_list(const std::string& text, const char* what) {
  std::vector<ck::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(ck::parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw ck::io::ParseError(std::string(what) + ": " + e.what());
    }
  }
  return out;
}

std::string verdict_line(const ck::SimulationVerdict& v) {
  if (v.holds) return "HOLDS";
  return "FAILS(" + std::string(ck::to_string(*v.failure_reason)) + ")";
}

void print_subspace(const ck::Subspace& v) {
  std::cout << "basis (columns):\n" << v.basis().str();
}

int report(const ck::SimulationVerdict& v, const Flags& flags) {
  if (flags.json) {
    json j = ck::io::verdict_to_json(v);
    if (!flags.witness) j.erase("witness");
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << verdict_line(v) << '\n';
    if (flags.witness) {
      if (v.witness) {
        std::cout << "witness dim " << v.witness->relation.dim() << " in " << v.witness->left_dim << "+"
                  << v.witness->right_dim << ", left projection dim "
                  << v.witness->left_projection().dim() << '\n';
        print_subspace(v.witness->relation);
      } else {
        std::cout << "no witness\n";
      }
    }
  }
  return v.holds ? kHolds : kFails;
}

void emit_json(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    ck::io::save_json(out, j);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and assume/guarantee contract checks for linear systems in driving-variable form"};
  app.require_subcommand(1);

  Flags flags;
  std::string file1, file2, out;

  auto add_flags = [&](CLI::App* sub) {
    sub->add_flag("--witness", flags.witness, "Print the witness relation");
    sub->add_flag("--json", flags.json, "Machine-readable output");
  };

  auto* consistent = app.add_subcommand("consistent", "Consistent subspace of a system");
  consistent->add_option("system", file1, "System JSON")->required();
  consistent->add_flag("--json", flags.json, "Machine-readable output");

  auto* compose = app.add_subcommand("compose", "Compose two systems by variable sharing");
  compose->add_option("first", file1, "System JSON")->required();
  compose->add_option("second", file2, "System JSON")->required();
  compose->add_option("--out", out, "Output file (default stdout)");

  auto* simulates = app.add_subcommand("simulates", "Decide first <= second (second simulates first)");
  simulates->add_option("first", file1, "Simulated system JSON")->required();
  simulates->add_option("second", file2, "Simulating system JSON")->required();
  add_flags(simulates);

  auto* implements = app.add_subcommand("implements", "Does a system implement a contract?");
  implements->add_option("system", file1, "System JSON")->required();
  implements->add_option("contract", file2, "Contract JSON")->required();
  add_flags(implements);

  auto* refines = app.add_subcommand("refines", "Does the first contract refine the second?");
  refines->add_option("refined", file1, "Refining contract JSON")->required();
  refines->add_option("base", file2, "Refined contract JSON")->required();
  add_flags(refines);

  auto* compatible = app.add_subcommand("compatible", "Is an environment compatible with a contract?");
  compatible->add_option("environment", file1, "Environment system JSON")->required();
  compatible->add_option("contract", file2, "Contract JSON")->required();
  add_flags(compatible);

  auto* saturate = app.add_subcommand("saturate", "Replace guarantees G by A o G");
  saturate->add_option("contract", file1, "Contract JSON")->required();
  saturate->add_option("--out", out, "Output file (default stdout)");

  std::string params = "1,0.25,0.5";
  std::string x0_text = "1,2,0,1";
  double dt = 0.001;
  double t_end = 15.0;
  auto* simulate = app.add_subcommand("simulate", "Integrate the two-vehicle closed loop, emit CSV t,v1,v2,e");
  simulate->add_option("--params", params, "h,k,c")->capture_default_str();
  simulate->add_option("--x0", x0_text, "s1,v1,s2,v2")->capture_default_str();
  simulate->add_option("--dt", dt, "Step size [s]")->capture_default_str();
  simulate->add_option("--t-end", t_end, "Horizon [s]")->capture_default_str();
  simulate->add_option("--out", out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (*consistent) {
      const ck::DVSystem sys = ck::io::load_system(file1);
      const ck::Subspace v = ck::consistent_subspace(sys);
      if (flags.json) {
        std::cout << ck::io::subspace_to_json(v).dump(2) << '\n';
      } else {
        std::cout << "dim " << v.dim() << '\n';
        print_subspace(v);
      }
      return 0;
    }
    if (*compose) {
      emit_json(ck::io::system_to_json(ck::compose(ck::io::load_system(file1), ck::io::load_system(file2))), out);
      return 0;
    }
    if (*simulates) {
      return report(ck::simulates(ck::io::load_system(file1), ck::io::load_system(file2)), flags);
    }
    if (*implements) {
      return report(ck::implements(ck::io::load_system(file1), ck::io::load_contract(file2)), flags);
    }
    if (*compatible) {
      return report(ck::is_compatible_environment(ck::io::load_system(file1), ck::io::load_contract(file2)),
                    flags);
    }
    if (*refines) {
      const auto v = ck::refines(ck::io::load_contract(file1), ck::io::load_contract(file2));
      if (flags.json) {
        json j = ck::io::refinement_to_json(v);
        if (!flags.witness) {
          j["env_part"].erase("witness");
          j["guar_part"].erase("witness");
        }
        std::cout << j.dump(2) << '\n';
      } else if (v.holds) {
        std::cout << "HOLDS\n";
      } else {
        const auto& failed = v.env_part.holds ? v.guar_part : v.env_part;
        std::cout << "FAILS(" << ck::to_string(*failed.failure_reason) << ")\n";
      }
      if (!flags.json) {
        std::cout << "assumptions leg: " << verdict_line(v.env_part) << '\n'
                  << "guarantees leg: " << verdict_line(v.guar_part) << '\n';
        if (flags.witness) {
          for (const auto* leg : {&v.env_part, &v.guar_part})
            if (leg->witness) print_subspace(leg->witness->relation);
        }
      }
      return v.holds ? kHolds : kFails;
    }
    if (*saturate) {
      emit_json(ck::io::contract_to_json(ck::saturate(ck::io::load_contract(file1))), out);
      return 0;
    }
    if (*simulate) {
      const auto p = parse_list(params, "--params");
      if (p.size() != 3) throw ck::io::ParseError("--params expects h,k,c");
      const auto x0r = parse_list(x0_text, "--x0");
      if (x0r.size() != 4) throw ck::io::ParseError("--x0 expects four values s1,v1,s2,v2");
      std::vector<double> x0;
      for (const auto& v : x0r) x0.push_back(v.get_d());
      const auto exp = ck::run_vehicle_experiment(ck::VehicleParams{p[0], p[1], p[2]}, x0,
                                                  ck::DrivingSignal::step_then_sine(), dt, t_end);
      if (out.empty()) {
        ck::write_csv(std::cout, exp);
      } else {
        std::ofstream f(out);
        if (!f) throw ck::io::ParseError("cannot write " + out);
        ck::write_csv(f, exp);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
