// Copyright 2026 The sicdet developers
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

// Command line front end: validate measurements, run the separability
// criteria on stored states, sweep parameter grids to CSV, and rerun the
// bundled case studies.
//
// Exit codes: 0 no entanglement found (or assertions passed), 2
// entanglement detected, 1 error or failed assertion.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "sicdet/sicdet.hpp"

namespace {

using namespace sicdet;

constexpr int kExitClean = 0;
constexpr int kExitError = 1;
constexpr int kExitEntangled = 2;

struct CommonOptions {
  std::string mode = "unfolding";
  std::string partition;
  std::vector<std::string> povm_specs;
  std::string conjugation;
  double tolerance = kDefaultVerdictTolerance;
  std::string out;
  std::string config;
};

void add_common(CLI::App* cmd, CommonOptions& opt,
                std::map<std::string, CLI::Option*>& handles) {
  handles["mode"] = cmd->add_option("--mode", opt.mode,
                                    "construction: blockdiag, marginal or unfolding");
  handles["partition"] =
      cmd->add_option("--partition", opt.partition,
                      "cut expression, e.g. \"B C|A\" (default: scan cuts)");
  handles["povm"] = cmd->add_option(
      "--povm", opt.povm_specs,
      "measurement per subsystem: sic2, gsic2:<t>, gsic3:<t>, file:<path>; "
      "one value is replicated");
  handles["conjugate-assignment"] = cmd->add_option(
      "--conjugate-assignment", opt.conjugation,
      "per-subsystem pattern of M (as given) and C (conjugated)");
  handles["tolerance"] = cmd->add_option(
      "--tolerance", opt.tolerance, "margin above the bound required to report ENTANGLED");
  handles["out"] = cmd->add_option("--out", opt.out, "output file path");
  handles["config"] = cmd->add_option(
      "--config", opt.config,
      "JSON config file; explicit flags take precedence over its keys");
}

// flags > config file > defaults
void apply_config(CommonOptions& opt,
                  const std::map<std::string, CLI::Option*>& handles) {
  if (opt.config.empty()) return;
  const json doc = load_json(opt.config);
  auto unset = [&](const char* key) {
    auto it = handles.find(key);
    return it != handles.end() && it->second->count() == 0;
  };
  if (doc.contains("mode") && unset("mode")) opt.mode = doc["mode"].get<std::string>();
  if (doc.contains("partition") && unset("partition"))
    opt.partition = doc["partition"].get<std::string>();
  if (doc.contains("povm") && unset("povm")) {
    if (doc["povm"].is_array())
      opt.povm_specs = doc["povm"].get<std::vector<std::string>>();
    else
      opt.povm_specs = {doc["povm"].get<std::string>()};
  }
  if (doc.contains("conjugate_assignment") && unset("conjugate-assignment"))
    opt.conjugation = doc["conjugate_assignment"].get<std::string>();
  if (doc.contains("tolerance") && unset("tolerance"))
    opt.tolerance = doc["tolerance"].get<double>();
  if (doc.contains("out") && unset("out")) opt.out = doc["out"].get<std::string>();
}

Povm parse_povm_spec(const std::string& spec) {
  if (spec == "sic2") return renormalize(build_sic_qubit());
  if (spec.rfind("gsic2:", 0) == 0)
    return build_gsic(2, std::stod(spec.substr(6)));
  if (spec.rfind("gsic3:", 0) == 0)
    return build_gsic(3, std::stod(spec.substr(6)));
  if (spec.rfind("file:", 0) == 0)
    return povm_from_json(load_json(spec.substr(5)));
  throw std::invalid_argument(
      "unknown --povm value '" + spec +
      "' (expected sic2, gsic2:<t>, gsic3:<t> or file:<path>)");
}

// One measurement per subsystem. A single spec is replicated across
// subsystems; by default qubits get the renormalized SIC.
std::vector<Povm> assemble_povms(const std::vector<std::size_t>& dims,
                                 const CommonOptions& opt) {
  std::vector<Povm> povms;
  if (opt.povm_specs.empty()) {
    for (std::size_t d : dims) {
      if (d != 2)
        throw std::invalid_argument(
            "subsystem of dimension " + std::to_string(d) +
            " has no default measurement; pass --povm per subsystem");
      povms.push_back(renormalize(build_sic_qubit()));
    }
  } else if (opt.povm_specs.size() == 1) {
    Povm p = parse_povm_spec(opt.povm_specs[0]);
    for (std::size_t d : dims) {
      if (p.dim != d)
        throw std::invalid_argument("measurement dimension " +
                                    std::to_string(p.dim) +
                                    " does not match subsystem dimension " +
                                    std::to_string(d));
      povms.push_back(p);
    }
  } else {
    if (opt.povm_specs.size() != dims.size())
      throw std::invalid_argument("got " + std::to_string(opt.povm_specs.size()) +
                                  " --povm values for " +
                                  std::to_string(dims.size()) + " subsystems");
    for (std::size_t s = 0; s < dims.size(); ++s) {
      povms.push_back(parse_povm_spec(opt.povm_specs[s]));
      if (povms.back().dim != dims[s])
        throw std::invalid_argument(
            "measurement " + std::to_string(s) + " has dimension " +
            std::to_string(povms.back().dim) + ", subsystem has " +
            std::to_string(dims[s]));
    }
  }
  if (!opt.conjugation.empty())
    povms = apply_conjugation_pattern(std::move(povms), opt.conjugation);
  return povms;
}

std::vector<Partition> default_cuts(std::size_t n, TripartiteMode mode) {
  std::vector<Partition> cuts;
  if (n == 2) {
    cuts.push_back(Partition::parse("A|B"));
    return cuts;
  }
  if (n == 3) {
    for (std::size_t dist = 0; dist < 3; ++dist)
      cuts.push_back(
          Partition::parse(examples::tripartite_partition_string(dist)));
    return cuts;
  }
  if (mode != TripartiteMode::Unfolding)
    throw std::invalid_argument(
        "no default cuts for this mode beyond three subsystems; pass --partition");
  for (std::size_t dist = 0; dist < n; ++dist) {
    std::string rest;
    for (std::size_t s = 0; s < n; ++s) {
      if (s == dist) continue;
      if (!rest.empty()) rest += " ";
      rest += static_cast<char>('A' + s);
    }
    cuts.push_back(
        Partition::parse(rest + "|" + std::string(1, static_cast<char>('A' + dist))));
  }
  return cuts;
}

int run_validate_povm(const CommonOptions& opt) {
  if (opt.povm_specs.size() != 1)
    throw std::invalid_argument("validate-povm expects exactly one --povm value");
  const Povm p = parse_povm_spec(opt.povm_specs[0]);
  const PovmValidationReport rep = validate(p);
  std::cout << "povm: " << p.descriptor() << "\n"
            << "dimension: " << rep.dim << "\n"
            << "elements: " << rep.element_count << "\n"
            << "completeness deviation: " << format_double(rep.completeness_deviation)
            << "\n"
            << "min eigenvalue: " << format_double(rep.min_eigenvalue) << "\n"
            << "hermiticity deviation: " << format_double(rep.hermiticity_deviation)
            << "\n"
            << "purity mean: " << format_double(rep.purity_mean)
            << " spread: " << format_double(rep.purity_spread) << "\n"
            << "overlap mean: " << format_double(rep.overlap_mean)
            << " spread: " << format_double(rep.overlap_spread)
            << " expected: " << format_double(rep.overlap_expected) << "\n"
            << "complete: " << (rep.complete ? "yes" : "no")
            << "  psd: " << (rep.all_psd ? "yes" : "no")
            << "  uniform purity: " << (rep.uniform_purity ? "yes" : "no")
            << "  uniform overlap: " << (rep.uniform_overlap ? "yes" : "no") << "\n"
            << "valid: " << (rep.valid ? "yes" : "no") << "\n";
  if (!opt.out.empty()) {
    json doc;
    doc["povm"] = p.descriptor();
    doc["dim"] = rep.dim;
    doc["element_count"] = rep.element_count;
    doc["completeness_deviation"] = rep.completeness_deviation;
    doc["min_eigenvalue"] = rep.min_eigenvalue;
    doc["hermiticity_deviation"] = rep.hermiticity_deviation;
    doc["purity_mean"] = rep.purity_mean;
    doc["purity_spread"] = rep.purity_spread;
    doc["overlap_mean"] = rep.overlap_mean;
    doc["overlap_spread"] = rep.overlap_spread;
    doc["overlap_expected"] = rep.overlap_expected;
    doc["valid"] = rep.valid;
    save_json(opt.out, doc);
  }
  return rep.valid ? kExitClean : kExitError;
}

int run_detect(const std::string& state_path, const CommonOptions& opt) {
  const DensityState st = state_from_json(load_json(state_path));
  const TripartiteMode mode = parse_mode(opt.mode);
  const std::vector<Povm> povms = assemble_povms(st.dims(), opt);

  std::vector<Partition> cuts;
  if (!opt.partition.empty())
    cuts.push_back(Partition::parse(opt.partition));
  else
    cuts = default_cuts(st.subsystem_count(), mode);

  bool entangled = false;
  json out_reports = json::array();
  for (const Partition& cut : cuts) {
    CriterionReport rep = evaluate(st, povms, cut, mode, opt.tolerance);
    rep.state = state_path;
    std::cout << format_report(rep) << "\n";
    out_reports.push_back(report_to_json(rep));
    entangled = entangled || rep.verdict == Verdict::Entangled;
  }
  if (!opt.out.empty()) save_json(opt.out, out_reports);
  return entangled ? kExitEntangled : kExitClean;
}

struct SweepAxis {
  std::string name;
  double lo = 0.0, hi = 0.0, step = 0.0;
  std::vector<double> values;
};

SweepAxis parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("--param expects name=lo:hi:step, got '" + text + "'");
  SweepAxis axis;
  axis.name = text.substr(0, eq);
  const std::string rest = text.substr(eq + 1);
  const auto c1 = rest.find(':');
  const auto c2 = rest.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::invalid_argument("--param expects name=lo:hi:step, got '" + text + "'");
  axis.lo = std::stod(rest.substr(0, c1));
  axis.hi = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
  axis.step = std::stod(rest.substr(c2 + 1));
  if (axis.step <= 0.0) throw std::invalid_argument("--param step must be positive");
  if (axis.hi < axis.lo) throw std::invalid_argument("--param range is empty");
  for (double v = axis.lo; v <= axis.hi + axis.step * 1e-9; v += axis.step) {
    if (axis.values.size() >= 1000000)
      throw std::invalid_argument("sweep grid exceeds the 10^6 point guard");
    axis.values.push_back(v);
  }
  return axis;
}

int run_sweep(const std::string& family, const std::vector<std::string>& axes_text,
              const std::vector<std::string>& fixed_text, const CommonOptions& opt,
              unsigned threads) {
  std::vector<SweepAxis> axes;
  std::size_t grid_size = 1;
  for (const std::string& t : axes_text) {
    axes.push_back(parse_axis(t));
    grid_size *= axes.back().values.size();
    if (grid_size > 1000000)
      throw std::invalid_argument("sweep grid exceeds the 10^6 point guard");
  }
  if (axes.empty()) throw std::invalid_argument("sweep needs at least one --param");

  std::map<std::string, double> fixed;
  for (const std::string& t : fixed_text) {
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--set expects name=value, got '" + t + "'");
    fixed[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
  }

  const TripartiteMode mode = parse_mode(opt.mode);
  std::optional<Partition> fixed_cut;
  if (!opt.partition.empty()) fixed_cut = Partition::parse(opt.partition);

  // Family parameters go to the state; t, t2, t3 select the measurement
  // family parameter for subsystems of the matching dimension.
  auto is_povm_param = [](const std::string& n) {
    return n == "t" || n == "t2" || n == "t3";
  };

  struct Row {
    std::vector<double> params;
    double trace_norm = 0.0, bound = 0.0, margin = 0.0;
    std::string partition;
    bool entangled = false;
  };
  std::vector<Row> rows(grid_size);

  auto point_values = [&](std::size_t flat) {
    std::vector<double> vals(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
      vals[k] = axes[k].values[flat % axes[k].values.size()];
      flat /= axes[k].values.size();
    }
    return vals;
  };

  auto evaluate_point = [&](std::size_t flat) {
    Row row;
    row.params = point_values(flat);
    std::map<std::string, double> params = fixed;
    std::map<std::string, double> povm_params;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      if (is_povm_param(axes[k].name))
        povm_params[axes[k].name] = row.params[k];
      else
        params[axes[k].name] = row.params[k];
    }
    const DensityState st = build_named_state(family, params);

    CommonOptions local = opt;
    std::vector<Povm> povms;
    if (povm_params.empty()) {
      povms = assemble_povms(st.dims(), local);
    } else {
      for (std::size_t d : st.dims()) {
        double t = 0.0;
        if (povm_params.count("t"))
          t = povm_params.at("t");
        else if (d == 2 && povm_params.count("t2"))
          t = povm_params.at("t2");
        else if (d == 3 && povm_params.count("t3"))
          t = povm_params.at("t3");
        else
          throw std::invalid_argument(
              "no swept measurement parameter for a subsystem of dimension " +
              std::to_string(d));
        povms.push_back(build_gsic(d, t));
      }
      if (!opt.conjugation.empty())
        povms = apply_conjugation_pattern(std::move(povms), opt.conjugation);
    }

    std::vector<Partition> cuts;
    if (fixed_cut)
      cuts.push_back(*fixed_cut);
    else
      cuts = default_cuts(st.subsystem_count(), mode);
    bool first = true;
    for (const Partition& cut : cuts) {
      CriterionReport rep = evaluate(st, povms, cut, mode, opt.tolerance);
      if (first || rep.margin > row.margin) {
        row.trace_norm = rep.trace_norm;
        row.bound = rep.bound;
        row.margin = rep.margin;
        row.partition = rep.partition;
        row.entangled = rep.verdict == Verdict::Entangled;
        first = false;
      }
    }
    return row;
  };

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(threads, std::thread::hardware_concurrency()));
  for (unsigned w = 0; w < n_threads; ++w)
    pool.emplace_back([&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= grid_size) break;
        try {
          rows[i] = evaluate_point(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<std::string> header;
  for (const auto& a : axes) header.push_back(a.name);
  header.insert(header.end(), {"trace_norm", "bound", "margin", "partition", "verdict"});
  CsvWriter csv(header);
  double min_margin = 1e300, max_margin = -1e300;
  bool any_entangled = false;
  for (const Row& row : rows) {
    std::vector<std::string> cells;
    for (double v : row.params) cells.push_back(format_double(v));
    cells.push_back(format_double(row.trace_norm));
    cells.push_back(format_double(row.bound));
    cells.push_back(format_double(row.margin));
    cells.push_back(row.partition);
    cells.push_back(row.entangled ? "ENTANGLED" : "INCONCLUSIVE");
    csv.row(cells);
    min_margin = std::min(min_margin, row.margin);
    max_margin = std::max(max_margin, row.margin);
    any_entangled = any_entangled || row.entangled;
  }
  const std::string out_path = opt.out.empty() ? "sweep.csv" : opt.out;
  csv.write(out_path);
  std::cout << "sweep: " << grid_size << " points -> " << out_path
            << "  margin range [" << format_double(min_margin) << ", "
            << format_double(max_margin) << "]\n";
  return any_entangled ? kExitEntangled : kExitClean;
}

int run_reproduce(int number, const CommonOptions& opt) {
  const examples::ExampleResult res = examples::run_example(number);
  std::cout << "case study " << res.number << ": " << res.title << "\n";
  const std::string out_path = opt.out.empty() ? res.csv_name : opt.out;
  save_text(out_path, res.csv);
  std::cout << "data written to " << out_path << "\n";
  for (const auto& a : res.assertions)
    std::cout << (a.ok ? "ASSERT ok   " : "ASSERT FAIL ") << a.text << "\n";
  return res.passed() ? kExitClean : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separability criteria toolkit for small multipartite states"};
  app.require_subcommand(1);

  CommonOptions vp_opt, det_opt, sw_opt, rep_opt;
  std::map<std::string, CLI::Option*> vp_h, det_h, sw_h, rep_h;

  CLI::App* vp = app.add_subcommand("validate-povm",
                                    "check completeness, positivity and uniformity");
  add_common(vp, vp_opt, vp_h);

  CLI::App* det = app.add_subcommand("detect", "run the criteria on a stored state");
  std::string state_path;
  det->add_option("state", state_path, "state JSON file")->required();
  add_common(det, det_opt, det_h);

  CLI::App* sw = app.add_subcommand("sweep", "evaluate over a parameter grid");
  std::string family;
  std::vector<std::string> axes_text, fixed_text;
  unsigned threads = std::thread::hardware_concurrency();
  sw->add_option("--family", family, "named state family")->required();
  sw->add_option("--param", axes_text, "swept axis, name=lo:hi:step (repeatable)");
  sw->add_option("--set", fixed_text, "fixed family parameter, name=value");
  sw->add_option("--threads", threads, "worker pool size");
  add_common(sw, sw_opt, sw_h);

  CLI::App* rep = app.add_subcommand("reproduce-example",
                                     "rerun a bundled case study and its checks");
  int example_number = 0;
  rep->add_option("number", example_number, "case study number, 1 to 4")->required();
  add_common(rep, rep_opt, rep_h);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitClean : kExitError;
  }

  try {
    if (vp->parsed()) {
      apply_config(vp_opt, vp_h);
      return run_validate_povm(vp_opt);
    }
    if (det->parsed()) {
      apply_config(det_opt, det_h);
      return run_detect(state_path, det_opt);
    }
    if (sw->parsed()) {
      apply_config(sw_opt, sw_h);
      return run_sweep(family, axes_text, fixed_text, sw_opt, threads);
    }
    apply_config(rep_opt, rep_h);
    return run_reproduce(example_number, rep_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
