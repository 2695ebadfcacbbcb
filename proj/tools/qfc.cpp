// Copyright 2026 The qfc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qfc/circuit.hpp"
#include "qfc/gf2.hpp"
#include "qfc/layering.hpp"
#include "qfc/simulate.hpp"
#include "qfc/synthesis.hpp"
#include "qfc/typing.hpp"

namespace {

using nlohmann::json;

qfc::circuit::Circuit read_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return qfc::circuit::parse_circuit(in);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

json gate_json(const qfc::circuit::OneQubitGate& g) {
  return json{{"kind", g.kind}, {"qubit", g.qubit}, {"params", g.params}};
}

json cnot_json(const qfc::circuit::CnotGate& g) {
  return json{{"control", g.control}, {"target", g.target}};
}

json decomposition_json(const qfc::layering::LayerDecomposition& d) {
  qfc::layering::BoundsReport b = qfc::layering::bounds_report(d);
  json layers = json::array();
  for (std::size_t i = 0; i < d.layers.size(); ++i) {
    const auto& layer = d.layers[i];
    json cnots = json::array();
    for (const auto& g : layer.cnot_gates) cnots.push_back(cnot_json(g));
    json oneq = json::array();
    for (const auto& g : layer.oneq_gates) oneq.push_back(gate_json(g));
    layers.push_back(json{{"index", i + 1},
                          {"rows", qfc::gf2::to_bitstrings(layer.config)},
                          {"cnot", cnots},
                          {"oneq", oneq},
                          {"terminal", layer.terminal}});
  }
  return json{{"n", d.n},
              {"layer_count", d.layer_count},
              {"oneq_count", d.oneq_count},
              {"cnot_count", d.cnot_count},
              {"bounds",
               json{{"oneq_upper", b.oneq_upper},
                    {"cnot_upper", b.cnot_upper},
                    {"unitary_lower_violated", b.unitary_lower_violated},
                    {"unitary_upper_exceeded", b.unitary_upper_exceeded}}},
              {"warnings", d.warnings},
              {"layers", layers}};
}

std::string gates_line(const std::vector<qfc::circuit::CnotGate>& gates) {
  std::ostringstream out;
  for (std::size_t i = 0; i < gates.size(); ++i)
    out << (i ? " " : "") << gates[i].control << '>' << gates[i].target;
  return out.str();
}

qfc::gf2::Configuration parse_target(const std::string& spec) {
  std::vector<std::string> rows;
  std::string row;
  std::istringstream in(spec);
  while (std::getline(in, row, ',')) rows.push_back(row);
  return qfc::gf2::Configuration::from_rows(rows);
}

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analyze, classify, count, synthesize and verify quantum "
               "circuits through their wire-functional configurations"};
  app.require_subcommand(1);
  // Let --json / --seed appear after the subcommand as well.
  app.set_help_all_flag("--help-all");

  bool json_out = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", json_out, "emit one JSON document instead of text");
  app.add_option("--seed", seed, "seed for randomized commands");

  std::string file_a, file_b, out_path, target_spec, gen_kind, gen_arg;

  auto* analyze = app.add_subcommand(
      "analyze", "decompose a circuit into configuration layers");
  analyze->add_option("file", file_a, "circuit file")->required();

  auto* type_cmd =
      app.add_subcommand("type", "canonical digest of a circuit's type");
  type_cmd->add_option("file", file_a, "circuit file")->required();

  auto* equiv =
      app.add_subcommand("equiv", "compare the types of two circuits");
  equiv->add_option("a", file_a, "first circuit file")->required();
  equiv->add_option("b", file_b, "second circuit file")->required();

  int count_n = 0, count_k = 0, count_layers = 0;
  auto* count = app.add_subcommand("count", "configuration and type counts");
  count->add_option("-n", count_n, "wire count")->required();
  count->add_option("-k", count_k, "row index for the per-row count");
  count->add_option("-N", count_layers, "layer count for the type count");

  auto* synth = app.add_subcommand(
      "synth", "CNOT sequence realizing a target configuration");
  synth->add_option("--target", target_spec,
                    "comma-separated rows (bitstrings or q1^q2 form)")
      ->required();
  bool want_exact = false, want_gauss = false, want_ancilla = false;
  synth->add_flag("--exact", want_exact, "provably minimal sequence");
  synth->add_flag("--gauss", want_gauss, "elimination heuristic");
  synth->add_flag("--ancilla", want_ancilla, "ancilla-copy construction");

  auto* minimize =
      app.add_subcommand("minimize", "rebuild a circuit with minimal "
                         "CNOT runs per layer");
  minimize->add_option("file", file_a, "circuit file")->required();
  minimize->add_option("--out", out_path, "write the result here");

  int dict_n = 0;
  bool allow_large = false;
  auto* dict = app.add_subcommand(
      "dict", "dictionary of all configurations with minimal sequences");
  dict->add_option("-n", dict_n, "wire count")->required();
  dict->add_option("--out", out_path, "write the dictionary here");
  dict->add_flag("--allow-large", allow_large,
                 "acknowledge the table size for n = 5");

  int trials = 100;
  double tol = 1e-12;
  std::string dump_path;
  auto* verify = app.add_subcommand(
      "verify", "check pairing predictions against direct simulation");
  verify->add_option("file", file_a, "circuit file")->required();
  verify->add_option("--trials", trials, "random states per check");
  verify->add_option("--tol", tol, "pass threshold");
  verify->add_option("--dump", dump_path,
                     "also dump the final state for the all-zero input");

  auto* gen = app.add_subcommand("gen", "builtin example circuits");
  gen->add_option("kind", gen_kind, "qft | fixture")->required();
  gen->add_option("arg", gen_arg, "size for qft, name for fixture")
      ->required();
  gen->add_option("--out", out_path, "write the circuit here");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze) {
      auto d = qfc::layering::decompose(read_circuit(file_a));
      if (json_out)
        write_output(decomposition_json(d).dump(2) + "\n", "");
      else
        write_output(qfc::layering::format_report(d), "");
      return 0;
    }

    if (*type_cmd) {
      auto d = qfc::layering::decompose(read_circuit(file_a));
      auto canon = qfc::typing::canonicalize(qfc::typing::circuit_type(d));
      if (json_out) {
        json rows = json::array();
        for (const auto& c : canon.configs)
          rows.push_back(qfc::gf2::to_bitstrings(c));
        write_output(json{{"digest", canon.digest},
                          {"canonical", canon.canonical},
                          {"perm", canon.perm},
                          {"n", d.n},
                          {"layer_count", d.layer_count},
                          {"rows", rows}}
                             .dump(2) +
                         "\n",
                     "");
      } else {
        write_output(canon.digest + "\n", "");
      }
      return 0;
    }

    if (*equiv) {
      auto ta = qfc::typing::circuit_type(
          qfc::layering::decompose(read_circuit(file_a)));
      auto tb = qfc::typing::circuit_type(
          qfc::layering::decompose(read_circuit(file_b)));
      bool eq = qfc::typing::equivalent(ta, tb);
      if (json_out)
        write_output(json{{"equivalent", eq}}.dump(2) + "\n", "");
      else
        write_output(eq ? "equivalent\n" : "not-equivalent\n", "");
      return 0;
    }

    if (*count) {
      if (count_n < 1) throw CliError("wire count must be positive");
      auto nc = qfc::typing::count_nc(count_n);
      json doc{{"n", count_n}, {"N_c", nc.str()}};
      std::string text = nc.str();
      if (count->count("-k")) {
        auto nf = qfc::typing::count_nf(count_k, count_n);
        doc["k"] = count_k;
        doc["N_f"] = nf.str();
        text = nf.str();
      }
      if (count->count("-N")) {
        auto nt = qfc::typing::count_nt(count_n, count_layers);
        doc["layers"] = count_layers;
        doc["N_t"] = nt.str();
        text = nt.str();
      }
      write_output(json_out ? doc.dump(2) + "\n" : text + "\n", "");
      return 0;
    }

    if (*synth) {
      if (want_exact + want_gauss + want_ancilla > 1)
        throw CliError("pick at most one synthesis method");
      auto target = parse_target(target_spec);
      qfc::synthesis::SynthesisResult res;
      if (want_ancilla)
        res = qfc::synthesis::synth_ancilla(target);
      else if (want_gauss)
        res = qfc::synthesis::synth_gauss(target);
      else if (want_exact || target.n() <= 6)
        res = qfc::synthesis::synth_exact(target);
      else
        res = qfc::synthesis::synth_gauss(target);
      if (json_out) {
        json gates = json::array();
        for (const auto& g : res.gates) gates.push_back(cnot_json(g));
        write_output(json{{"rows", qfc::gf2::to_bitstrings(target)},
                          {"gates", gates},
                          {"length", res.length},
                          {"method", qfc::synthesis::method_name(res.method)},
                          {"optimal", res.optimal}}
                             .dump(2) +
                         "\n",
                     "");
      } else {
        std::ostringstream out;
        out << "gates: " << gates_line(res.gates) << "\n"
            << "length: " << res.length << "\n"
            << "method: " << qfc::synthesis::method_name(res.method) << "\n"
            << "optimal: " << (res.optimal ? "true" : "false") << "\n";
        write_output(out.str(), "");
      }
      return 0;
    }

    if (*minimize) {
      auto input = read_circuit(file_a);
      auto before = qfc::layering::decompose(input);
      auto res = qfc::synthesis::minimize_circuit(input);
      auto after = qfc::layering::decompose(res.circuit);
      std::string text = qfc::circuit::serialize_circuit(res.circuit);
      if (json_out) {
        write_output(json{{"circuit", text},
                          {"cnot_before", before.cnot_count},
                          {"cnot_after", after.cnot_count},
                          {"optimal", res.optimal}}
                             .dump(2) +
                         "\n",
                     out_path);
      } else {
        write_output(text, out_path);
      }
      return 0;
    }

    if (*dict) {
      auto entries = qfc::synthesis::build_dictionary(dict_n, allow_large);
      if (json_out) {
        json arr = json::array();
        for (const auto& e : entries) {
          json gates = json::array();
          for (const auto& g : e.gates) gates.push_back(cnot_json(g));
          arr.push_back(json{{"digest", e.digest},
                             {"rows", qfc::gf2::to_bitstrings(e.config)},
                             {"length", e.minimal_length},
                             {"gates", gates}});
        }
        write_output(
            json{{"n", dict_n}, {"entries", arr}}.dump(2) + "\n", out_path);
      } else {
        write_output(qfc::synthesis::format_dictionary(entries), out_path);
      }
      return 0;
    }

    if (*verify) {
      auto c = read_circuit(file_a);
      auto report = qfc::simulate::consistency_check(c, trials, tol, seed);
      if (!dump_path.empty()) {
        if (c.n > qfc::simulate::kMaxCliQubits)
          throw CliError("state dump is limited to n <= 12");
        auto final_state = qfc::simulate::run(
            c, qfc::simulate::basis_state(c.n, 0));
        std::ofstream dump(dump_path);
        if (!dump) throw CliError("cannot write '" + dump_path + "'");
        dump << qfc::simulate::dump_state(final_state);
      }
      char dev[32];
      std::snprintf(dev, sizeof(dev), "%.17g", report.max_deviation);
      if (json_out) {
        write_output(json{{"trials", report.trials},
                          {"gates_checked", report.gates_checked},
                          {"max_deviation", report.max_deviation},
                          {"tolerance", report.tolerance},
                          {"pass", report.pass}}
                             .dump(2) +
                         "\n",
                     "");
      } else {
        std::ostringstream out;
        out << "trials: " << report.trials << "\n"
            << "gates_checked: " << report.gates_checked << "\n"
            << "max_deviation: " << dev << "\n"
            << "result: " << (report.pass ? "PASS" : "FAIL") << "\n";
        write_output(out.str(), "");
      }
      return report.pass ? 0 : 1;
    }

    if (*gen) {
      qfc::circuit::Circuit c;
      if (gen_kind == "qft") {
        int n = 0;
        try {
          n = std::stoi(gen_arg);
        } catch (const std::exception&) {
          throw CliError("qft size must be a number");
        }
        c = qfc::circuit::gen_qft(n);
      } else if (gen_kind == "fixture") {
        c = qfc::circuit::gen_fixture(gen_arg);
      } else {
        throw CliError("gen kind must be 'qft' or 'fixture'");
      }
      write_output(qfc::circuit::serialize_circuit(c), out_path);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
