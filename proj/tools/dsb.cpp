/******************************************************************************
 * Copyright 2026 The dsbelief Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *****************************************************************************/
// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsbelief/dsbelief.h"

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

struct MassDeleter {
  void operator()(dsb_mass* m) const { dsb_mass_free(m); }
};
struct PopulationDeleter {
  void operator()(dsb_population* p) const { dsb_population_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { dsb_string_free(s); }
};
using MassPtr = std::unique_ptr<dsb_mass, MassDeleter>;
using PopulationPtr = std::unique_ptr<dsb_population, PopulationDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Carries the exit code out of a failed command.
struct CommandError {
  int exit_code;
  std::string message;
};

void Check(dsb_status status, const std::string& context) {
  if (status == DSB_OK) return;
  throw CommandError{dsb_status_is_domain_error(status) ? kExitDomain : kExitInput,
                     context + ": " + dsb_last_error()};
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError{kExitInput, "cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw CommandError{kExitInput, "cannot write '" + path + "'"};
}

struct DataOptions {
  std::string csv_path;
  std::vector<std::string> frame_decls;
  std::string frame_file;

  void Register(CLI::App* cmd) {
    cmd->add_option("data", csv_path, "Set-valued CSV file")->required();
    cmd->add_option("--frame", frame_decls,
                    "Attribute declaration name=atom,atom,... (repeatable)");
    cmd->add_option("--frame-file", frame_file,
                    "File with attribute declarations (JSON or name=... lines)");
  }

  std::string Declaration() const {
    if (!frame_file.empty()) {
      if (!frame_decls.empty()) {
        throw CommandError{kExitInput, "use either --frame or --frame-file, not both"};
      }
      return ReadFile(frame_file);
    }
    if (frame_decls.empty()) {
      throw CommandError{kExitInput, "no frame declared (--frame or --frame-file)"};
    }
    std::string joined;
    for (const auto& d : frame_decls) joined += d + ";";
    return joined;
  }

  PopulationPtr Load() const {
    const std::string csv = ReadFile(csv_path);
    const std::string decl = Declaration();
    dsb_population* p = nullptr;
    Check(dsb_population_from_csv(csv.c_str(), decl.c_str(), &p), csv_path);
    return PopulationPtr(p);
  }
};

MassPtr LoadMass(const std::string& path) {
  const std::string text = ReadFile(path);
  dsb_mass* m = nullptr;
  Check(dsb_mass_from_json(text.c_str(), &m), path);
  return MassPtr(m);
}

std::string MassJson(const dsb_mass* m) {
  char* out = nullptr;
  Check(dsb_mass_to_json(m, &out), "serialize");
  return StringPtr(out).get();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief functions over set-valued data"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dsb_version());

  // table
  DataOptions table_data;
  bool table_rational = false;
  std::string table_format = "table";
  std::string table_out;
  auto* table = app.add_subcommand("table", "Print m / Bel / Pl for every focal set of a CSV");
  table_data.Register(table);
  table->add_flag("--rational", table_rational, "Print exact fractions");
  table->add_option("--format", table_format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  table->add_option("-o,--output", table_out, "Output file (default stdout)");

  // combine
  std::vector<std::string> combine_inputs;
  std::string combine_out;
  auto* combine = app.add_subcommand("combine", "Combine mass JSON files by Dempster's rule");
  combine->add_option("masses", combine_inputs, "Mass JSON files (at least two)")
      ->required()
      ->expected(2, -1);
  combine->add_option("-o,--output", combine_out, "Output file (default stdout)");

  // relabel
  DataOptions relabel_data;
  std::vector<std::string> relabel_labels;
  bool relabel_exact = false;
  std::optional<std::uint64_t> relabel_draws;
  std::optional<std::uint64_t> relabel_seed;
  std::uint32_t relabel_chunks = 1;
  std::string relabel_out;
  std::string relabel_report;
  auto* relabel = app.add_subcommand("relabel", "Relabel a population with a label distribution");
  relabel_data.Register(relabel);
  relabel->add_option("--labels", relabel_labels,
                      "Label distribution (mass JSON); repeat for successive exact steps")
      ->required();
  auto* exact_flag = relabel->add_flag("--exact", relabel_exact, "Exact distribution");
  auto* simulate_opt =
      relabel->add_option("--simulate", relabel_draws, "Monte Carlo with this many draws")
          ->check(CLI::PositiveNumber);
  exact_flag->excludes(simulate_opt);
  relabel->add_option("--seed", relabel_seed, "64-bit seed (required with --simulate)");
  relabel->add_option("--chunks", relabel_chunks, "Parallel simulation streams")
      ->check(CLI::PositiveNumber);
  relabel->add_option("-o,--output", relabel_out, "Output file (default stdout)");
  relabel->add_option("--report", relabel_report,
                      "Simulation report file (default stderr)");

  // estimate
  DataOptions estimate_data;
  double estimate_alpha = 0.05;
  bool estimate_bonferroni = false;
  std::string estimate_out;
  auto* estimate = app.add_subcommand("estimate", "Confidence-bounded mass estimate");
  estimate_data.Register(estimate);
  estimate->add_option("--alpha", estimate_alpha, "One-sided significance level in (0, 1]")
      ->required();
  estimate->add_flag("--bonferroni", estimate_bonferroni,
                     "Divide alpha by the number of non-frame cells");
  estimate->add_option("-o,--output", estimate_out, "Output file (default stdout)");

  // casebook
  std::string case_name;
  bool case_all = false;
  bool case_list = false;
  std::string case_dir;
  auto* casebook = app.add_subcommand("casebook", "Run the golden worked examples");
  casebook->add_option("name", case_name, "Case to run");
  casebook->add_flag("--all", case_all, "Run every case");
  casebook->add_flag("--list", case_list, "List available cases");
  casebook->add_option("--dir", case_dir, "Case directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (const char* env = std::getenv("DSB_MAX_FRAME_SIZE"); env && *env) {
      char* end = nullptr;
      const unsigned long long n = std::strtoull(env, &end, 10);
      if (*end != '\0') throw CommandError{kExitInput, "DSB_MAX_FRAME_SIZE is not a number"};
      Check(dsb_set_max_frame_size(static_cast<size_t>(n)), "DSB_MAX_FRAME_SIZE");
    }

    if (table->parsed()) {
      auto p = table_data.Load();
      dsb_mass* m = nullptr;
      Check(dsb_population_freq_mass(p.get(), &m), "mass");
      MassPtr mass(m);
      char* text = nullptr;
      Check(dsb_mass_render_table(mass.get(), table_rational, table_format == "json", &text),
            "render");
      WriteOutput(table_out, StringPtr(text).get());
    } else if (combine->parsed()) {
      MassPtr acc = LoadMass(combine_inputs.front());
      for (std::size_t i = 1; i < combine_inputs.size(); ++i) {
        MassPtr next = LoadMass(combine_inputs[i]);
        dsb_mass* out = nullptr;
        double conflict = 0.0;
        char* conflict_text = nullptr;
        Check(dsb_combine(acc.get(), next.get(), &out, &conflict, &conflict_text),
              "combining " + combine_inputs[i]);
        StringPtr conflict_owner(conflict_text);
        std::cerr << "step " << i << ": conflict " << conflict_text << " (" << conflict
                  << ")\n";
        acc.reset(out);
      }
      WriteOutput(combine_out, MassJson(acc.get()));
    } else if (relabel->parsed()) {
      if (!relabel_exact && !relabel_draws) {
        throw CommandError{kExitInput, "choose --exact or --simulate N"};
      }
      if (relabel_draws && !relabel_seed) {
        throw CommandError{kExitInput, "--simulate requires --seed"};
      }
      auto p = relabel_data.Load();
      if (relabel_exact) {
        dsb_mass* m = nullptr;
        Check(dsb_population_freq_mass(p.get(), &m), "mass");
        MassPtr current(m);
        for (const auto& path : relabel_labels) {
          MassPtr labels = LoadMass(path);
          dsb_mass* out = nullptr;
          Check(dsb_relabel_exact(current.get(), labels.get(), &out), "relabel with " + path);
          current.reset(out);
        }
        WriteOutput(relabel_out, MassJson(current.get()));
      } else {
        if (relabel_labels.size() != 1) {
          throw CommandError{kExitInput, "--simulate takes exactly one --labels file"};
        }
        MassPtr labels = LoadMass(relabel_labels.front());
        dsb_mass* out = nullptr;
        char* report = nullptr;
        Check(dsb_relabel_simulate(p.get(), labels.get(), *relabel_draws, *relabel_seed,
                                   relabel_chunks, &out, &report),
              "simulate");
        MassPtr empirical(out);
        StringPtr report_owner(report);
        WriteOutput(relabel_out, MassJson(empirical.get()));
        if (relabel_report.empty()) {
          std::cerr << report;
        } else {
          WriteOutput(relabel_report, report);
        }
      }
    } else if (estimate->parsed()) {
      auto p = estimate_data.Load();
      dsb_mass* out = nullptr;
      Check(dsb_estimate(p.get(), estimate_alpha, estimate_bonferroni, &out), "estimate");
      MassPtr m(out);
      WriteOutput(estimate_out, MassJson(m.get()));
    } else if (casebook->parsed()) {
      const char* dir = case_dir.empty() ? nullptr : case_dir.c_str();
      char* names_text = nullptr;
      Check(dsb_casebook_list(dir, &names_text), "casebook");
      std::vector<std::string> names;
      {
        StringPtr owner(names_text);
        std::istringstream in(names_text);
        for (std::string line; std::getline(in, line);) names.push_back(line);
      }
      if (case_list) {
        for (const auto& n : names) std::cout << n << "\n";
        return 0;
      }
      if (case_all == !case_name.empty()) {
        throw CommandError{kExitInput, "give a case name or --all"};
      }
      if (!case_all) names = {case_name};
      std::size_t failed = 0;
      for (const auto& n : names) {
        char* report = nullptr;
        std::size_t failures = 0;
        Check(dsb_casebook_run(dir, n.c_str(), &report, &failures), "case " + n);
        std::cout << StringPtr(report).get();
        failed += failures;
      }
      if (failed) {
        std::cerr << failed << " golden check(s) failed\n";
        return kExitDomain;
      }
    }
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
  return 0;
}
