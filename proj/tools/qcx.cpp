// Command-line surface for building Cayley-graph expander channels and
// certifying their spectral gaps. Subcommands:
//   gap          certify lambda2(channel) <= lambda2(walk) for one instance
//   sweep        batch over irreps and random generator sets, CSV or JSON
//   qft-check    verify the group Fourier transform block-diagonalizes
//                left translation
//   standard-gap matrix-free gap estimate for the N-dimensional standard
//                representation channel
//   irreps       list irrep labels and dimensions for an instance's group
//
// Exit codes: 0 success, 1 usage or computation error, 2 gap inequality
// violated (which would indicate an implementation bug, not a property of
// the construction).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qcx/cayley_walk.hpp"
#include "qcx/channel.hpp"
#include "qcx/group.hpp"
#include "qcx/instance.hpp"
#include "qcx/irreps.hpp"
#include "qcx/qft.hpp"
#include "qcx/standard_rep.hpp"

using nlohmann::json;
using namespace qcx;

namespace {

struct CommonOptions {
  double tol = 1e-8;
  std::uint64_t seed = 0;
  std::uint64_t cap = kDefaultEnumCap;
  int max_iter = 10000;
  int seeds = 3;
  std::string method = "auto";
};

GapOptions to_gap_options(const CommonOptions& c) {
  GapOptions opts;
  opts.tolerance = c.tol;
  opts.enum_cap = c.cap;
  opts.power.max_iter = c.max_iter;
  opts.power.seeds = c.seeds;
  opts.power.seed = c.seed;
  if (c.method == "dense") opts.method = GapOptions::Method::Dense;
  else if (c.method == "iter" || c.method == "iterative") opts.method = GapOptions::Method::Iterative;
  else if (c.method == "auto") opts.method = GapOptions::Method::Auto;
  else throw CLI::ValidationError("--method must be auto, dense, or iter");
  return opts;
}

json report_to_json(const SpectralReport& report, const json& instance_meta, std::uint64_t seed) {
  json j;
  j["schema"] = 1;
  j["instance"] = instance_meta;
  if (report.classical_lambda2) {
    j["classical_lambda2"] = *report.classical_lambda2;
    j["margin"] = *report.classical_lambda2 - report.quantum_lambda2;
  } else {
    j["classical_lambda2"] = nullptr;
    j["margin"] = nullptr;
    j["classical_note"] = report.classical_note;
  }
  j["quantum_lambda2"] = report.quantum_lambda2;
  if (report.inequality_holds) j["inequality_holds"] = *report.inequality_holds;
  else j["inequality_holds"] = nullptr;
  j["method"] = report.method;
  j["tolerance"] = report.tolerance;
  j["iterations"] = report.iterations;
  j["converged"] = report.converged;
  j["seed"] = seed;
  j["notes"] = report.notes;
  return j;
}

json instance_meta(const Instance& inst, const std::string& irrep_label) {
  json meta;
  meta["group"] = group_spec_to_json(inst.group);
  json gens = json::array();
  for (const auto& g : inst.generators.elements) gens.push_back(format_element(g));
  meta["generators"] = gens;
  meta["irrep"] = irrep_label;
  return meta;
}

IrrepHandle resolve_irrep(const Instance& inst, const std::string& flag_label, std::uint64_t cap) {
  std::string label_text = flag_label;
  if (label_text.empty() && inst.irrep) label_text = *inst.irrep;
  if (label_text.empty()) {
    auto irreps = list_irreps(inst.group, cap);
    std::vector<IrrepHandle> nontrivial;
    for (const auto& h : irreps)
      if (!h.is_trivial()) nontrivial.push_back(h);
    if (nontrivial.size() == 1) return nontrivial.front();
    throw std::invalid_argument("no irrep given (use --irrep or an \"irrep\" field) and the group "
                                "has " + std::to_string(nontrivial.size()) + " nontrivial irreps");
  }
  return IrrepHandle::make(inst.group, parse_irrep_label(inst.group, label_text));
}

int run_gap(const std::string& path, const std::string& irrep_flag, const CommonOptions& common,
            bool tol_from_flag, bool seed_from_flag) {
  Instance inst = load_instance(path);
  CommonOptions used = common;
  if (inst.seed && !seed_from_flag) used.seed = *inst.seed;
  if (inst.tol && !tol_from_flag) used.tol = *inst.tol;
  auto h = resolve_irrep(inst, irrep_flag, common.cap);
  auto report = verify_gap_inequality(inst.group, inst.generators, h, to_gap_options(used));
  std::cout << report_to_json(report, instance_meta(inst, h.label_string()), used.seed).dump(2)
            << "\n";
  return report.inequality_holds.value_or(true) ? 0 : 2;
}

int run_sweep(const std::string& path, const std::string& irrep_flag, int trials, int size,
              const std::string& format, const CommonOptions& common) {
  Instance inst = load_instance(path);
  auto irreps = list_irreps(inst.group, common.cap);
  std::vector<IrrepHandle> targets;
  for (const auto& h : irreps) {
    if (h.is_trivial()) continue;
    if (irrep_flag == "all" || irrep_flag.empty() || h.label_string() == irrep_flag)
      targets.push_back(h);
  }
  if (targets.empty()) throw std::invalid_argument("no matching nontrivial irrep: " + irrep_flag);

  auto elements = enumerate_elements(inst.group, common.cap);
  std::mt19937_64 rng(common.seed);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);

  struct Row {
    int trial = 0;
    std::string irrep;
    std::optional<double> classical, quantum, margin;
    std::optional<bool> holds;
    std::string error;
  };
  std::vector<Row> rows;

  const int n_trials = trials < 0 ? 1 : trials;
  for (int trial = 0; trial < n_trials; ++trial) {
    GeneratorSet gens = inst.generators;
    if (trials >= 0) {
      std::vector<GroupElement> sampled;
      for (int i = 0; i < size; ++i) sampled.push_back(elements[pick(rng)]);
      gens = make_generator_set(inst.group, std::move(sampled));
    }
    for (const auto& h : targets) {
      Row row;
      row.trial = trial;
      row.irrep = h.label_string();
      try {
        auto report = verify_gap_inequality(inst.group, gens, h, to_gap_options(common));
        row.classical = report.classical_lambda2;
        row.quantum = report.quantum_lambda2;
        if (report.classical_lambda2)
          row.margin = *report.classical_lambda2 - report.quantum_lambda2;
        row.holds = report.inequality_holds;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }

  if (format == "json") {
    json out = json::array();
    for (const auto& r : rows) {
      json j;
      j["trial"] = r.trial;
      j["irrep"] = r.irrep;
      j["classical_lambda2"] = r.classical ? json(*r.classical) : json(nullptr);
      j["quantum_lambda2"] = r.quantum ? json(*r.quantum) : json(nullptr);
      j["margin"] = r.margin ? json(*r.margin) : json(nullptr);
      j["inequality_holds"] = r.holds ? json(*r.holds) : json(nullptr);
      j["error"] = r.error;
      out.push_back(j);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "trial,irrep,classical_lambda2,quantum_lambda2,margin,inequality_holds,error\n";
    auto num = [](const std::optional<double>& v) {
      if (!v) return std::string();
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.12g", *v);
      return std::string(buf);
    };
    for (const auto& r : rows) {
      std::string err = r.error;
      std::replace(err.begin(), err.end(), '"', '\'');
      std::cout << r.trial << ",\"" << r.irrep << "\"," << num(r.classical) << "," << num(r.quantum)
                << "," << num(r.margin) << ","
                << (r.holds ? (*r.holds ? "true" : "false") : "") << ",\"" << err << "\"\n";
    }
  }
  for (const auto& r : rows) {
    if (r.holds && !*r.holds) return 2;
  }
  return 0;
}

int run_qft_check(const std::string& path, std::uint64_t cap) {
  Instance inst = load_instance(path);
  auto qft = qft_matrix(inst.group, cap);
  json j;
  j["schema"] = 1;
  j["group"] = group_spec_to_json(inst.group);
  j["order"] = inst.group.order().to_string();
  j["sum_squared_dims"] = sum_squared_dims(qft.irreps).to_string();
  j["completeness"] = sum_squared_dims(qft.irreps) == inst.group.order();
  j["unitarity_residual"] = unitarity_residual(qft);
  j["max_left_translation_residual"] = max_left_translation_residual(qft);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_standard_gap(std::int64_t n, int degree, const CommonOptions& common) {
  if (n < 2) throw std::invalid_argument("standard-gap requires --n >= 2");
  if (degree < 1) throw std::invalid_argument("standard-gap requires --degree >= 1");
  auto oracle = PermutationOracle::random(static_cast<std::uint32_t>(n),
                                          static_cast<std::size_t>(degree), common.seed);
  PowerIterOptions power;
  power.seed = common.seed;
  power.max_iter = common.max_iter;
  power.seeds = common.seeds;
  auto est = standard_channel_lambda2(oracle, power);

  SpectralReport report;
  report.quantum_lambda2 = est.value;
  report.method = "iterative";
  report.iterations = est.iterations;
  report.converged = est.converged;
  report.tolerance = common.tol;

  auto group = GroupSpec::symmetric(n + 1);
  if (group.order() <= BigUint(common.cap)) {
    auto gens = make_generator_set(group, oracle.as_group_elements());
    auto walk = build_walk(group, gens, common.cap);
    auto classical = classical_lambda2_report(walk, 1024, power);
    report.classical_lambda2 = classical.value;
    report.inequality_holds = est.value <= classical.value + common.tol;
  } else {
    report.classical_note = "group not enumerable: |S_" + std::to_string(n + 1) + "| = " +
                            group.order().to_string() + " exceeds cap " + std::to_string(common.cap);
  }

  json meta;
  meta["group"] = group_spec_to_json(group);
  meta["n"] = n;
  meta["degree"] = degree;
  meta["irrep"] = "(" + std::to_string(n) + ",1)";
  std::cout << report_to_json(report, meta, common.seed).dump(2) << "\n";
  return report.inequality_holds.value_or(true) ? 0 : 2;
}

int run_irreps(const std::string& path, std::uint64_t cap) {
  Instance inst = load_instance(path);
  auto irreps = list_irreps(inst.group, cap);
  json j;
  j["schema"] = 1;
  j["group"] = group_spec_to_json(inst.group);
  j["order"] = inst.group.order().to_string();
  json list = json::array();
  for (const auto& h : irreps) {
    json item;
    item["label"] = h.label_string();
    item["dim"] = h.dim();
    item["trivial"] = h.is_trivial();
    list.push_back(item);
  }
  j["irreps"] = list;
  j["sum_squared_dims"] = sum_squared_dims(irreps).to_string();
  j["completeness"] = irrep_completeness_check(inst.group, cap);
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum expander channels from Cayley graph walks"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string instance_path;
  std::string irrep_flag;

  auto add_common = [&common](CLI::App* cmd) {
    cmd->add_option("--tol", common.tol, "inequality slack / agreement tolerance");
    cmd->add_option("--seed", common.seed, "RNG seed for iterative paths and sampling");
    cmd->add_option("--cap", common.cap, "dense enumeration cap on |G|");
    cmd->add_option("--max-iter", common.max_iter, "power iteration cap per restart");
    cmd->add_option("--seeds", common.seeds, "power iteration restarts");
  };

  auto* gap = app.add_subcommand("gap", "certify the spectral gap inequality for one instance");
  gap->add_option("instance", instance_path, "instance JSON file")->required();
  gap->add_option("--irrep", irrep_flag, "irrep label, e.g. \"(3,1)\" or \"2\" or \"rot1\"");
  gap->add_option("--method", common.method, "auto|dense|iter");
  add_common(gap);

  int trials = -1;  // -1: use the instance's generators once
  int sweep_size = 3;
  std::string format = "csv";
  auto* sweep = app.add_subcommand("sweep", "batch gap certification, one row per (irrep, trial)");
  sweep->add_option("instance", instance_path, "instance JSON file")->required();
  sweep->add_option("--irrep", irrep_flag, "irrep label or \"all\"");
  sweep->add_option("--trials", trials, "number of random generator sets (omit: use instance's)");
  sweep->add_option("--size", sweep_size, "random generator set size");
  sweep->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  add_common(sweep);

  auto* qft = app.add_subcommand("qft-check", "verify QFT unitarity and block structure");
  qft->add_option("instance", instance_path, "instance JSON file")->required();
  std::uint64_t qft_cap = kDefaultQftCap;
  qft->add_option("--cap", qft_cap, "dense cap on |G|");

  std::int64_t std_n = 0;
  int std_degree = 8;
  auto* sgap = app.add_subcommand("standard-gap",
                                  "matrix-free gap estimate for the standard representation");
  sgap->add_option("--n", std_n, "dimension N of the channel (irrep (N,1) of S_{N+1})")->required();
  sgap->add_option("--degree", std_degree, "number of random generators");
  add_common(sgap);

  auto* irreps_cmd = app.add_subcommand("irreps", "list irrep labels, dimensions, completeness");
  irreps_cmd->add_option("instance", instance_path, "instance JSON file")->required();
  std::uint64_t irreps_cap = kDefaultEnumCap;
  irreps_cmd->add_option("--cap", irreps_cap, "enumeration cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gap->parsed())
      return run_gap(instance_path, irrep_flag, common, gap->count("--tol") > 0,
                     gap->count("--seed") > 0);
    if (sweep->parsed()) return run_sweep(instance_path, irrep_flag, trials, sweep_size, format, common);
    if (qft->parsed()) return run_qft_check(instance_path, qft_cap);
    if (sgap->parsed()) return run_standard_gap(std_n, std_degree, common);
    if (irreps_cmd->parsed()) return run_irreps(instance_path, irreps_cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
