/*
 * This code is part of fockchan.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fockchan/experiment.hpp"
#include "fockchan/protocol.hpp"
#include "fockchan/tomography.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace fockchan;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

// All serialized numbers carry 12 significant digits.
std::string format12(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(format12(x).c_str(), nullptr); }

json complex_json(const Complex &c) {
  return json{{"re", round12(c.real())}, {"im", round12(c.imag())}};
}

json choi_json(const ChoiMatrix &chi) {
  json basis = json::array();
  for (const char *label : kChoiBasisLabels) basis.push_back(label);
  json entries = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(complex_json(chi.entries()(r, c)));
    entries.push_back(row);
  }
  return json{{"basis", basis}, {"entries", entries}};
}

void write_output(const std::string &path, const std::string &content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot open output file: " + path);
  }
  out << content;
}

Probe parse_probe(const std::string &spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("probe must be given as c0,c1");
  }
  Probe probe;
  probe.c0 = std::strtod(spec.substr(0, comma).c_str(), nullptr);
  probe.c1 = std::strtod(spec.substr(comma + 1).c_str(), nullptr);
  probe.validate();
  return probe;
}

const char *kSweepSchema = R"({
  "type": "object",
  "properties": {
    "taus": {"type": "array", "items": {"type": "number", "exclusiveMinimum": 0, "maximum": 1}},
    "gain-min": {"type": "number", "minimum": 1},
    "gain-max": {"type": "number", "minimum": 1},
    "gain-points": {"type": "integer", "minimum": 1,
                    "description": "grid points across [gain-min, gain-max]; default 200 per decade"},
    "policy": {"enum": ["fig4", "fixed", "naive"]},
    "nu": {"type": "number", "exclusiveMinimum": 0, "maximum": 1,
           "description": "attenuation for the fixed policy"},
    "probe": {"type": "object", "properties": {"c0": {"type": "number"}, "c1": {"type": "number"}}},
    "truncation": {"type": "integer", "const": 1}
  },
  "required": ["taus", "gain-min", "gain-max", "policy"]
}
)";

SweepPlan plan_from_config(const json &cfg) {
  SweepPlan plan;
  plan.taus = cfg.at("taus").get<std::vector<double>>();
  const double g_min = cfg.at("gain-min").get<double>();
  const double g_max = cfg.at("gain-max").get<double>();
  if (cfg.contains("gain-points")) {
    const int n = cfg["gain-points"].get<int>();
    if (n < 1) throw std::invalid_argument("gain-points must be >= 1");
    if (n == 1 || g_max == g_min) {
      plan.gains = {g_min};
    } else {
      for (int i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / (n - 1);
        plan.gains.push_back(g_min * std::pow(g_max / g_min, f));
      }
      plan.gains.back() = g_max;
    }
  } else {
    plan.gains = gain_grid(g_min, g_max);
  }
  const std::string policy = cfg.at("policy").get<std::string>();
  if (policy == "fig4") {
    plan.policy = NuPolicy::fig4;
  } else if (policy == "fixed") {
    plan.policy = NuPolicy::fixed;
    plan.fixed_nu = cfg.at("nu").get<double>();
  } else if (policy == "naive") {
    plan.policy = NuPolicy::naive;
  } else {
    throw std::invalid_argument("unknown policy: " + policy);
  }
  if (cfg.contains("probe")) {
    plan.probe.c0 = cfg["probe"].at("c0").get<double>();
    plan.probe.c1 = cfg["probe"].at("c1").get<double>();
  }
  if (cfg.contains("truncation")) {
    plan.truncation = cfg["truncation"].get<int>();
  }
  return plan;
}

int cmd_choi(double tau, double nu, double g, const std::string &out,
             const std::string &format) {
  if (format != "json") {
    throw std::invalid_argument("choi output supports --format json only");
  }
  ChannelParams p{tau, nu, g, 1};
  const KrausChannel ch = suppressed_channel_direct(p);
  const ChoiMatrix chi = choi_of_channel(ch);
  const ChoiMatrix reported = chi.normalized().with_real_coherence();
  json doc = choi_json(reported);
  doc["fidelity"] = round12(channel_fidelity(reported));
  doc["t_eff"] = round12(effective_transmittance(ch));
  doc["p_succ"] = round12(chi.trace());
  write_output(out, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_sweep(const std::string &config_path, const std::string &out) {
  std::ifstream in(config_path);
  if (!in) {
    throw std::invalid_argument("cannot open config file: " + config_path);
  }
  const json cfg = json::parse(in);
  const SweepPlan plan = plan_from_config(cfg);
  const std::vector<SweepRecord> records = run_sweep(plan);
  std::ostringstream csv;
  csv << "strategy,tau,nu,g,fidelity,t_eff,p_succ,p_rel\n";
  for (const SweepRecord &rec : records) {
    csv << to_string(rec.strategy) << ',' << format12(rec.tau) << ','
        << format12(rec.nu) << ',' << format12(rec.g) << ','
        << format12(rec.fidelity) << ',' << format12(rec.t_eff) << ','
        << format12(rec.p_succ) << ',' << format12(rec.p_rel) << '\n';
  }
  write_output(out, csv.str());
  return kExitOk;
}

int cmd_tomo(double tau, double nu, double g, std::int64_t counts,
             std::uint64_t seed, bool ideal, const std::string &out) {
  if (counts < 1) {
    throw std::invalid_argument("counts must be >= 1");
  }
  ChannelParams p{tau, nu, g, 1};
  const KrausChannel ch = suppressed_channel_direct(p);
  const ChoiMatrix truth = choi_of_channel(ch).normalized();
  const std::vector<MeasurementSetting> settings = default_settings();

  json doc;
  doc["params"] = {{"tau", round12(tau)}, {"nu", round12(nu)},
                   {"g", round12(g)},     {"counts", counts},
                   {"seed", seed},        {"ideal", ideal}};
  doc["true_chi"] = choi_json(truth.with_real_coherence());

  ReconstructionResult rec;
  json count_list = json::array();
  if (ideal) {
    const std::vector<double> expected =
        expected_counts(truth, settings, static_cast<double>(counts));
    std::vector<double> exposures(settings.size(), 1.0);
    for (std::size_t k = 0; k < settings.size(); ++k) {
      count_list.push_back({{"setting", settings[k].label},
                            {"counts", round12(expected[k])},
                            {"exposure", 1.0}});
    }
    rec = reconstruct_choi_weighted(settings, expected, exposures);
  } else {
    const std::vector<CountRecord> data =
        simulate_counts(truth, settings, counts, seed);
    for (const CountRecord &r : data) {
      count_list.push_back({{"setting", r.setting.label},
                            {"counts", r.counts},
                            {"exposure", r.exposure}});
    }
    rec = reconstruct_choi(data);
  }
  doc["records"] = count_list;
  doc["reconstructed_chi"] = choi_json(ChoiMatrix(rec.chi));
  doc["iterations"] = rec.iterations;
  doc["converged"] = rec.converged;
  doc["reconstruction_fidelity"] =
      round12(state_fidelity(truth.entries(), rec.chi));
  write_output(out, doc.dump(2) + "\n");
  if (!rec.converged) {
    std::cerr << "fockchan tomo: reconstruction did not converge after "
              << rec.iterations << " iterations\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_optimize(double tau, double target, const std::string &probe_spec,
                 const std::string &out) {
  const Probe probe =
      probe_spec.empty() ? Probe::balanced() : parse_probe(probe_spec);
  const NuOptimum opt = optimize_nu(tau, target, probe);
  json doc = {{"tau", round12(tau)},
              {"target_fidelity", round12(target)},
              {"nu", round12(opt.nu)},
              {"g", round12(opt.g)},
              {"p_succ", round12(opt.p_succ)}};
  write_output(out, doc.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "fockchan: noiseless loss suppression on truncated Fock spaces "
      "(Choi matrices, gain sweeps, simulated tomography)"};
  app.require_subcommand(1);

  double tau = 1.0, nu = 1.0, gain = 1.0, target = 1.0;
  std::int64_t counts = 100000;
  std::uint64_t seed = 1;
  bool ideal = false, print_schema = false;
  std::string out, format = "json", config_path, probe_spec;

  CLI::App *choi = app.add_subcommand("choi", "Compute a channel Choi matrix");
  choi->add_option("--tau", tau, "channel amplitude transmittance")->required();
  choi->add_option("--nu", nu, "input attenuation")->default_val(1.0);
  choi->add_option("--gain", gain, "amplifier gain")->default_val(1.0);
  choi->add_option("--out", out, "output file (default stdout)");
  choi->add_option("--format", format, "output format")->default_val("json");

  CLI::App *sweep = app.add_subcommand("sweep", "Run a gain sweep to CSV");
  sweep->add_option("--config", config_path, "JSON sweep configuration");
  sweep->add_flag("--print-schema", print_schema,
                  "print the config JSON schema and exit");
  sweep->add_option("--out", out, "output CSV file (default stdout)");

  CLI::App *tomo =
      app.add_subcommand("tomo", "Simulate and reconstruct channel tomography");
  tomo->add_option("--tau", tau, "channel amplitude transmittance")->required();
  tomo->add_option("--nu", nu, "input attenuation")->default_val(1.0);
  tomo->add_option("--gain", gain, "amplifier gain")->default_val(1.0);
  tomo->add_option("--counts", counts, "total probe events")->required();
  tomo->add_option("--seed", seed, "RNG seed")->default_val(1);
  tomo->add_flag("--ideal", ideal, "use exact frequencies, no sampling");
  tomo->add_option("--out", out, "output JSON file (default stdout)");

  CLI::App *optimize = app.add_subcommand(
      "optimize", "Smallest attenuation strength reaching a target fidelity");
  optimize->add_option("--tau", tau, "channel amplitude transmittance")
      ->required();
  optimize->add_option("--target-fidelity", target, "fidelity target")
      ->required();
  optimize->add_option("--probe", probe_spec, "probe amplitudes c0,c1");
  optimize->add_option("--out", out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (choi->parsed()) return cmd_choi(tau, nu, gain, out, format);
    if (sweep->parsed()) {
      if (print_schema) {
        std::cout << kSweepSchema;
        return kExitOk;
      }
      if (config_path.empty()) {
        throw std::invalid_argument("sweep requires --config (or --print-schema)");
      }
      return cmd_sweep(config_path, out);
    }
    if (tomo->parsed()) return cmd_tomo(tau, nu, gain, counts, seed, ideal, out);
    if (optimize->parsed()) return cmd_optimize(tau, target, probe_spec, out);
  } catch (const std::domain_error &e) {
    std::cerr << "fockchan: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "fockchan: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception &e) {
    std::cerr << "fockchan: config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error &e) {
    std::cerr << "fockchan: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
