//  Copyright 2026 The predual authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.
//
// predual: batch front end for finite (S, <=, -<) structures, their
// spectra, finite spaces with union-bases, and relational morphisms.
//
// Exit codes: 0 = requested checks pass, 1 = a check failed (at least one
// axiom or law is named with a witness), 2 = usage, parse or validation
// error.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "predual/predual.hpp"

using namespace predual;

namespace {

struct Output {
  bool as_json = false;
  std::string dot_path;
};

std::string witness_text(const Structure& s, const Witness& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += s.label(w[i]);
  }
  return out + ")";
}

std::vector<Axiom> parse_bundle(const std::string& spec) {
  std::vector<Axiom> bundle;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto a = axiom_from_name(tok);
    if (!a) throw Error(Errc::BadInput, "unknown axiom name '" + tok + "'");
    bundle.push_back(*a);
  }
  if (bundle.empty()) throw Error(Errc::BadInput, "empty bundle");
  return bundle;
}

int cmd_check(const std::string& path, const std::string& bundle_spec,
              const Output& out) {
  Structure s = load_structure(path);
  AxiomReport rep = check_axioms(s);
  std::vector<Axiom> bundle = parse_bundle(bundle_spec);
  bool pass = true;
  for (Axiom a : bundle) pass = pass && rep.passes(a);

  if (out.as_json) {
    json j;
    json axioms = json::object();
    for (const auto& r : rep.results) {
      json e;
      e["pass"] = r.pass;
      if (!r.pass) e["witness"] = s.witness_labels(r.witness);
      axioms[axiom_name(r.axiom)] = e;
    }
    j["axioms"] = axioms;
    json names = json::array();
    for (Axiom a : bundle) names.push_back(axiom_name(a));
    j["bundle"] = names;
    j["bundle_pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "structure: " << s.size() << " elements, bottom "
              << s.label(s.bottom()) << "\n";
    for (const auto& r : rep.results) {
      std::cout << "  " << axiom_name(r.axiom);
      for (std::size_t pad = std::string(axiom_name(r.axiom)).size(); pad < 20;
           ++pad)
        std::cout << ' ';
      if (r.pass)
        std::cout << "pass\n";
      else
        std::cout << "FAIL  witness " << witness_text(s, r.witness) << "\n";
    }
    std::cout << "bundle [" << bundle_spec << "]: " << (pass ? "PASS" : "FAIL")
              << "\n";
  }
  if (!out.dot_path.empty()) write_text_file(out.dot_path, structure_dot(s));
  return pass ? 0 : 1;
}

int cmd_spectrum(const std::string& path, const Output& out) {
  Structure s = load_structure(path);
  SpectrumResult spec = enumerate_spectrum(s);
  if (out.as_json) {
    std::cout << spectrum_to_json(s, spec).dump(2) << "\n";
  } else {
    std::cout << "spectrum: " << spec.point_count() << " points\n";
    for (int i = 0; i < spec.point_count(); ++i)
      std::cout << "  point " << i << " = " << s.label_set(spec.points[i])
                << "\n";
    for (int p = 0; p < s.size(); ++p) {
      std::cout << "  S_" << s.label(p) << " = {";
      bool first = true;
      for_each_in(spec.basic_opens[p], [&](int i) {
        if (!first) std::cout << ",";
        std::cout << i;
        first = false;
      });
      std::cout << "}\n";
    }
  }
  if (!out.dot_path.empty())
    write_text_file(out.dot_path, spectrum_dot(s, spec));
  return 0;
}

int cmd_dualize(const std::string& path, const Output& out) {
  FiniteSpace x = load_space(path);
  Structure s = derive_structure(x);
  std::cout << structure_to_json(s).dump(2) << "\n";
  if (!out.dot_path.empty()) write_text_file(out.dot_path, structure_dot(s));
  return 0;
}

int cmd_roundtrip(const std::string& path) {
  FiniteSpace x = load_space(path);
  SpaceRecoveryReport recovery = verify_space_recovery(x);
  if (!recovery.precondition_failure.empty()) {
    std::cout << "roundtrip: FAIL (" << recovery.precondition_failure << ")\n";
    return 1;
  }
  SpaceAxiomReport ax = verify_derived_basis_axioms(x);
  std::cout << "basis-axioms: " << (ax.pass ? "pass" : "FAIL") << "\n";
  if (!ax.pass) {
    for (const auto& r : ax.axioms.results)
      if (!r.pass)
        std::cout << "  " << axiom_name(r.axiom) << " witness "
                  << witness_text(derive_structure(x), r.witness) << "\n";
    std::cout << "roundtrip: FAIL (basis-axioms)\n";
    return 1;
  }
  std::cout << "space-recovery: " << (recovery.pass() ? "pass" : "FAIL") << " ("
            << recovery.space_points << " points, " << recovery.spectrum_points
            << " spectrum points)\n";
  if (!recovery.pass()) {
    std::cout << "roundtrip: FAIL (space-recovery)\n";
    return 1;
  }
  RepresentationReport rep = verify_representation(derive_structure(x));
  bool rep_ok = rep.ok();
  std::cout << "representation: " << (rep_ok ? "pass" : "FAIL") << "\n";
  if (!rep_ok) {
    Structure s = derive_structure(x);
    for (auto [p, q] : rep.leq_violations)
      std::cout << "  order representation fails at (" << s.label(p) << "," << s.label(q)
                << ")\n";
    for (auto [p, q] : rep.prec_violations)
      std::cout << "  way-below representation fails at (" << s.label(p) << "," << s.label(q)
                << ")\n";
    std::cout << "roundtrip: FAIL (representation)\n";
    return 1;
  }
  std::cout << "roundtrip: PASS\n";
  return 0;
}

int cmd_morphism(const std::string& sub, const std::vector<std::string>& files,
                 const Output& out) {
  std::size_t need = sub == "compose" ? 2 : 1;
  if (files.size() != need)
    throw Error(Errc::BadInput, "morphism " + sub + " expects " +
                                    std::to_string(need) + " file argument" +
                                    (need == 1 ? "" : "s"));
  if (sub == "check") {
    LoadedMorphism m = load_morphism(files.at(0));
    MorphismReport rep = check_morphism(m.source, m.target, m.rel);
    if (out.as_json) {
      json j = json::object();
      for (const auto& r : rep.results) {
        json e;
        e["pass"] = r.pass;
        if (!r.pass) {
          json w = json::array();
          for (int i : r.witness) w.push_back(i);
          e["witness"] = w;
        }
        j[morphism_axiom_name(r.axiom)] = e;
      }
      j["morphism"] = rep.core_pass();
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& r : rep.results) {
        std::cout << "  " << morphism_axiom_name(r.axiom);
        for (std::size_t pad = std::string(morphism_axiom_name(r.axiom)).size();
             pad < 20; ++pad)
          std::cout << ' ';
        if (r.pass) {
          std::cout << "pass\n";
        } else {
          std::cout << "FAIL  witness (";
          for (std::size_t i = 0; i < r.witness.size(); ++i)
            std::cout << (i ? "," : "") << r.witness[i];
          std::cout << ")\n";
        }
      }
      std::cout << "morphism: " << (rep.core_pass() ? "PASS" : "FAIL") << "\n";
    }
    return rep.core_pass() ? 0 : 1;
  }
  if (sub == "compose") {
    LoadedMorphism m1 = load_morphism(files.at(0));
    LoadedMorphism m2 = load_morphism(files.at(1));
    if (!(m1.target == m2.source))
      throw Error(Errc::DimensionMismatch,
                  "target of the first morphism differs from source of the "
                  "second");
    RelMorphism comp =
        compose_checked(m1.source, m1.target, m2.target, m1.rel, m2.rel);
    std::cout << morphism_to_json(m1.source, m2.target, comp, m1.source_ref,
                                  m2.target_ref)
                     .dump(2)
              << "\n";
    return 0;
  }
  if (sub == "spectrum-map") {
    LoadedMorphism m = load_morphism(files.at(0));
    SpectrumMap phi = spectrum_map(m.source, m.target, m.rel);
    json j;
    json pts = json::array();
    for (Subset p : phi.source.points)
      pts.push_back(m.source.label_set(p));
    j["source_points"] = pts;
    json tpts = json::array();
    for (Subset p : phi.target.points)
      tpts.push_back(m.target.label_set(p));
    j["target_points"] = tpts;
    json map = json::array();
    for (int v : phi.map)
      if (v < 0)
        map.push_back(nullptr);
      else
        map.push_back(v);
    j["map"] = map;
    j["continuity"] = phi.continuity_ok;
    std::cout << j.dump(2) << "\n";
    return phi.continuity_ok ? 0 : 1;
  }
  if (sub == "vee") {
    LoadedMorphism m = load_morphism(files.at(0));
    RelMorphism v = vee_closure_checked(m.source, m.target, m.rel);
    std::cout << morphism_to_json(m.source, m.target, v, m.source_ref,
                                  m.target_ref)
                     .dump(2)
              << "\n";
    return 0;
  }
  throw Error(Errc::BadInput, "unknown morphism subcommand '" + sub + "'");
}

int cmd_search(const std::string& property, int max_size, std::uint64_t seed,
               std::uint64_t budget, const Output& out) {
  SearchOutcome res = search({property, max_size, seed, budget});
  if (out.as_json) {
    json j;
    j["property"] = property;
    j["outcome"] = search_outcome_name(res.kind);
    j["instances"] = res.instances;
    j["transcript"] = res.transcript;
    if (res.witness) {
      j["witness"] = structure_to_json(validate_structure(*res.witness));
      j["witness_note"] = res.witness_note;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << res.transcript;
    if (res.witness) {
      std::cout << "witness document:\n"
                << structure_to_json(validate_structure(*res.witness)).dump(2)
                << "\n";
      if (!res.witness_note.empty())
        std::cout << "note: " << res.witness_note << "\n";
    }
  }
  return res.kind == SearchOutcomeKind::Witness ? 1 : 0;
}

int cmd_exemplar(const std::string& name, int window, int den_cap,
                 int width_cap, const Output& out) {
  LazyStructure lazy;
  if (name == "omega-a")
    lazy = omega_plus_two(OmegaVariant::A);
  else if (name == "omega-b")
    lazy = omega_plus_two(OmegaVariant::B);
  else if (name == "rationals")
    lazy = rational_intervals(den_cap, width_cap);
  else
    throw Error(Errc::BadInput, "unknown exemplar '" + name + "'");

  Structure w = lazy.window(window);
  WindowReport rep = window_axiom_report(w);
  if (out.as_json) {
    json j;
    j["name"] = lazy.name;
    j["window"] = window;
    j["structure"] = structure_to_json(w);
    json verdicts = json::object();
    for (const auto& r : rep.results) {
      json e;
      e["verdict"] = window_verdict_name(r.verdict);
      if (!r.tuple.empty()) e["tuple"] = w.witness_labels(r.tuple);
      verdicts[axiom_name(r.axiom)] = e;
    }
    j["window_report"] = verdicts;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "exemplar " << lazy.name << ", window " << window << " -> "
              << w.size() << " elements\n";
    for (const auto& r : rep.results) {
      std::cout << "  " << axiom_name(r.axiom);
      for (std::size_t pad = std::string(axiom_name(r.axiom)).size(); pad < 20;
           ++pad)
        std::cout << ' ';
      std::cout << window_verdict_name(r.verdict);
      if (!r.tuple.empty() && r.verdict != WindowVerdict::Pass)
        std::cout << "  tuple " << witness_text(w, r.tuple);
      std::cout << "\n";
    }
    std::cout << structure_to_json(w).dump(2) << "\n";
  }
  if (!out.dot_path.empty()) write_text_file(out.dot_path, structure_dot(w));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Stone-duality toolkit for (S, <=, -<) structures"};
  app.require_subcommand(1);

  Output out;
  std::string input, input2, bundle = "predomain,distributive";
  std::string property, sub;
  std::vector<std::string> morphism_files;
  int max_size = 4, window = 4, den_cap = 1, width_cap = 2;
  std::uint64_t seed = 0, budget = 1000000;

  auto* check = app.add_subcommand("check", "axiom report for a structure");
  check->add_option("file", input)->required();
  check->add_option("--bundle", bundle, "comma-separated axioms for the exit code");
  check->add_flag("--json", out.as_json);
  check->add_option("--dot", out.dot_path);

  auto* spectrum = app.add_subcommand("spectrum", "round prime filter spectrum");
  spectrum->add_option("file", input)->required();
  spectrum->add_flag("--json", out.as_json);
  spectrum->add_option("--dot", out.dot_path);

  auto* dualize = app.add_subcommand("dualize", "derive (basis, subset, way-below)");
  dualize->add_option("file", input)->required();
  dualize->add_option("--dot", out.dot_path);

  auto* roundtrip = app.add_subcommand("roundtrip", "space -> structure -> spectrum checks");
  roundtrip->add_option("file", input)->required();

  auto* morphism = app.add_subcommand("morphism", "relational morphism tools");
  morphism->add_option("subcommand", sub, "check|compose|spectrum-map|vee")->required();
  morphism->add_option("files", morphism_files)->expected(1, 2);
  morphism->add_flag("--json", out.as_json);

  auto* search_cmd = app.add_subcommand("search", "counterexample search");
  search_cmd->add_option("property", property)->required();
  search_cmd->add_option("--max-size", max_size);
  search_cmd->add_option("--seed", seed);
  search_cmd->add_option("--budget", budget);
  search_cmd->add_flag("--json", out.as_json);

  auto* exemplar = app.add_subcommand("exemplar", "windowed infinite exemplars");
  exemplar->add_option("name", input, "omega-a|omega-b|rationals")->required();
  exemplar->add_option("--max-size", window, "window size");
  exemplar->add_option("--denominator-cap", den_cap);
  exemplar->add_option("--width-cap", width_cap);
  exemplar->add_flag("--json", out.as_json);
  exemplar->add_option("--dot", out.dot_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help is fine, usage errors are not
  }

  try {
    if (check->parsed()) return cmd_check(input, bundle, out);
    if (spectrum->parsed()) return cmd_spectrum(input, out);
    if (dualize->parsed()) return cmd_dualize(input, out);
    if (roundtrip->parsed()) return cmd_roundtrip(input);
    if (morphism->parsed()) return cmd_morphism(sub, morphism_files, out);
    if (search_cmd->parsed())
      return cmd_search(property, max_size, seed, budget, out);
    if (exemplar->parsed())
      return cmd_exemplar(input, window, den_cap, width_cap, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
