// Copyright 2026 The qunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qunc/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qunc/bounds.hpp"
#include "qunc/errors.hpp"
#include "qunc/instance.hpp"
#include "qunc/products.hpp"
#include "qunc/qubit.hpp"
#include "qunc/random.hpp"

namespace qunc::cli {

namespace {

constexpr double kSlackTol = 1e-9;
constexpr double kWitnessInflation = 1e-6;

std::string g12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// check

struct CheckOptions {
  std::string instance;
  std::vector<double> s_list;
  std::string format = "table";
};

nlohmann::ordered_json report_json(const std::string& name, const BoundReport& r) {
  nlohmann::ordered_json j;
  j["observable"] = name;
  j["s"] = r.s;
  j["variance"] = r.variance;
  j["classical_variance"] = r.classical_variance;
  j["comm_norm_sq"] = r.comm_norm_sq;
  j["coefficient"] = r.coefficient ? nlohmann::ordered_json(*r.coefficient) : nlohmann::ordered_json();
  j["maximally_mixed"] = !r.coefficient.has_value();
  j["luo_bound"] = r.luo_bound;
  j["luo_valid"] = r.luo_valid;
  j["optimal_bound"] = r.optimal_bound;
  j["sharp_bound"] = r.sharp_bound;
  j["slack"] = r.slack;
  return j;
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  const Instance inst = validate_instance(read_instance_file(opt.instance));
  std::vector<double> s_list = opt.s_list;
  if (s_list.empty()) s_list = inst.s_values;
  if (s_list.empty()) s_list = {0.5, 1.0};

  std::vector<std::pair<std::string, BoundReport>> reports;
  for (double s : s_list) {
    const BoundEvaluator eval(inst.rho, s);
    for (const auto& [name, a] : inst.observables) reports.emplace_back(name, eval.report(a));
  }

  bool violated = false;
  for (const auto& [name, r] : reports) violated = violated || r.slack < -kSlackTol;

  if (opt.format == "json") {
    nlohmann::ordered_json doc;
    doc["reports"] = nlohmann::ordered_json::array();
    for (const auto& [name, r] : reports) doc["reports"].push_back(report_json(name, r));
    doc["violation"] = violated;
    out << doc.dump(2) << "\n";
  } else {
    out << std::left << std::setw(12) << "observable" << std::setw(8) << "s" << std::setw(20)
        << "variance" << std::setw(20) << "classical" << std::setw(20) << "comm_norm_sq"
        << std::setw(20) << "coefficient" << std::setw(20) << "luo_bound" << std::setw(20)
        << "optimal_bound" << std::setw(20) << "sharp_bound" << "slack\n";
    for (const auto& [name, r] : reports) {
      out << std::setw(12) << name << std::setw(8) << g12(r.s) << std::setw(20) << g12(r.variance)
          << std::setw(20) << g12(r.classical_variance) << std::setw(20) << g12(r.comm_norm_sq)
          << std::setw(20) << (r.coefficient ? g12(*r.coefficient) : "maximally-mixed")
          << std::setw(20) << (g12(r.luo_bound) + (r.luo_valid ? "" : "*")) << std::setw(20)
          << g12(r.optimal_bound) << std::setw(20) << g12(r.sharp_bound) << g12(r.slack) << "\n";
    }
    out << "(* luo_bound is the skew-information bound only at s = 0.5)\n";
  }
  if (violated) {
    err << "violation: a slack fell below -1e-9\n";
    return kViolation;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOptions {
  double p_min = 0.5;
  double p_max = 1.0;
  int steps = 101;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 0;
  std::string out_csv;
  unsigned threads = 1;
};

constexpr const char* kSweepColumns[] = {"avg_robertson", "avg_schrodinger", "avg_luo",
                                         "avg_optimal",   "avg_sharp",       "avg_variance_product"};

std::array<double, 6> columns_of(const AveragedBounds& b) {
  return {b.avg_robertson, b.avg_schrodinger, b.avg_luo,
          b.avg_optimal,   b.avg_sharp,       b.avg_variance_product};
}

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  if (!(opt.p_min >= 0.5 && opt.p_min <= opt.p_max && opt.p_max <= 1.0)) {
    throw UsageError("sweep needs 0.5 <= p-min <= p-max <= 1");
  }
  if (opt.steps < 1) throw UsageError("sweep needs steps >= 1");
  if (opt.steps == 1 && opt.p_min != opt.p_max) {
    throw UsageError("a single-step sweep needs p-min == p-max");
  }

  std::ostringstream csv;
  csv << "purity";
  for (const char* c : kSweepColumns) csv << "," << c;
  if (opt.mc_samples > 0) {
    for (const char* c : kSweepColumns) csv << "," << c << "_mc," << c << "_se";
  }
  csv << "\n";

  bool all_agree = true;
  const RandomStream root(opt.seed);
  for (int k = 0; k < opt.steps; ++k) {
    double p = opt.p_min;
    if (opt.steps > 1) {
      p = k == opt.steps - 1 ? opt.p_max
                             : opt.p_min + (opt.p_max - opt.p_min) * k / (opt.steps - 1);
    }
    const AveragedBounds exact = averaged_bounds_analytic(p);
    csv << g12(p);
    for (double v : columns_of(exact)) csv << "," << g12(v);
    if (opt.mc_samples > 0) {
      const MonteCarloBounds mc = averaged_bounds_monte_carlo(
          p, opt.mc_samples, root.substream(static_cast<std::uint64_t>(k)).key(), 1.0,
          opt.threads);
      const auto means = columns_of(mc.mean);
      const auto errs = columns_of(mc.standard_error);
      for (std::size_t c = 0; c < means.size(); ++c) csv << "," << g12(means[c]) << "," << g12(errs[c]);
      if (!mc.agrees_with(exact)) {
        all_agree = false;
        err << "Monte Carlo disagrees with the closed form at purity " << g12(p) << "\n";
      }
    }
    csv << "\n";
  }

  if (opt.out_csv.empty() || opt.out_csv == "-") {
    out << csv.str();
  } else {
    std::ofstream f(opt.out_csv, std::ios::binary);
    if (!f) throw IoError("cannot open " + opt.out_csv + " for writing");
    f << csv.str();
    if (!f) throw IoError("failed writing " + opt.out_csv);
    out << "wrote " << opt.steps << " rows to " << opt.out_csv << "\n";
  }
  return all_agree ? kOk : kViolation;
}

// ---------------------------------------------------------------------------
// sample

struct SampleOptions {
  int dim = 2;
  int n = 1000;
  int rank = 0;  // 0: full rank
  std::vector<double> s_list{0.5, 1.0};
  std::uint64_t seed = 0;
};

struct MinTracker {
  std::map<std::string, double> min;
  void see(const std::string& key, double v) {
    auto [it, inserted] = min.emplace(key, v);
    if (!inserted) it->second = std::min(it->second, v);
  }
};

int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.dim < 2) throw UsageError("sample needs dim >= 2");
  if (opt.n < 1) throw UsageError("sample needs n >= 1");
  const int rank = opt.rank == 0 ? opt.dim : opt.rank;
  if (rank < 1 || rank > opt.dim) throw UsageError("sample needs 1 <= rank <= dim");
  for (double s : opt.s_list) {
    if (!(s >= 0.5)) throw UsageError("every s must be >= 0.5");
  }

  MinTracker single;
  MinTracker product;
  double max_abs_sharp = 0.0;
  const RandomStream root(opt.seed);
  for (int i = 0; i < opt.n; ++i) {
    RandomStream stream = root.substream(static_cast<std::uint64_t>(i));
    const DensityMatrix rho = random_density(opt.dim, rank, stream);
    const Observable a = random_observable(opt.dim, stream);
    const Observable b = random_observable(opt.dim, stream);

    const BoundEvaluator half(rho, 0.5);
    for (const Observable* obs : {&a, &b}) {
      const BoundReport r = half.report(*obs);
      single.see("luo", r.variance - r.luo_bound);
      single.see("optimal_minus_luo", r.optimal_bound - r.luo_bound);
    }
    for (double s : opt.s_list) {
      const ProductEvaluator pe(rho, s);
      const BoundEvaluator be(rho, s);
      const std::string tag = "@s=" + g12(s);
      for (const Observable* obs : {&a, &b}) {
        const BoundReport r = be.report(*obs);
        single.see("optimal" + tag, r.variance - r.optimal_bound);
        single.see("sharp" + tag, r.slack);
        max_abs_sharp = std::max(max_abs_sharp, std::abs(r.slack));
      }
      const ProductReport p = pe.report(a, b);
      product.see("robertson" + tag, p.variance_product - p.robertson);
      product.see("schrodinger" + tag, p.variance_product - p.schrodinger);
      product.see("luo_product" + tag, p.variance_product - p.luo_product);
      product.see("optimal_product" + tag, p.variance_product - p.optimal_product);
      product.see("sharp_product" + tag, p.variance_product - p.sharp_product);
    }
  }

  bool violated = false;
  out << "instances " << opt.n << " dim " << opt.dim << " rank " << rank << " seed " << opt.seed
      << "\n";
  out << std::left << std::setw(28) << "quantity" << "min_slack\n";
  for (const MinTracker* t : {&single, &product}) {
    for (const auto& [key, v] : t->min) {
      out << std::setw(28) << key << g12(v) << "\n";
      violated = violated || v < -kSlackTol;
    }
  }
  out << std::setw(28) << "max_abs_sharp_slack" << g12(max_abs_sharp) << "\n";
  if (violated) {
    err << "violation: a slack fell below -1e-9\n";
    return kViolation;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// witness

struct WitnessOptions {
  std::string instance;
  int dim = 0;
  int rank = 0;
  std::uint64_t seed = 0;
  std::vector<double> s_list{0.5, 1.0, 2.0};
};

int cmd_witness(const WitnessOptions& opt, std::ostream& out, std::ostream& err) {
  std::optional<DensityMatrix> rho;
  if (!opt.instance.empty()) {
    rho.emplace(validate_instance(read_instance_file(opt.instance)).rho);
  } else {
    if (opt.dim < 2) throw UsageError("witness needs --instance or --dim >= 2");
    const int rank = opt.rank == 0 ? opt.dim : opt.rank;
    if (rank < 1 || rank > opt.dim) throw UsageError("witness needs 1 <= rank <= dim");
    rho.emplace(random_density(opt.dim, rank, opt.seed));
  }
  for (double s : opt.s_list) {
    if (!(s >= 0.5)) throw UsageError("every s must be >= 0.5");
  }

  const Observable w = tight_witness(*rho);

  InstanceFile doc;
  doc.dim = static_cast<int>(rho->dim());
  doc.rho = rho->matrix();
  doc.observables.emplace_back("witness", w.matrix());
  doc.s_values = opt.s_list;
  out << dump_instance(doc);

  bool ok = true;
  out << std::left << std::setw(8) << "s" << std::setw(26) << "variance" << std::setw(26)
      << "sharp_bound" << std::setw(26) << "slack" << "inflated_slack\n";
  for (double s : opt.s_list) {
    const BoundEvaluator eval(*rho, s);
    const BoundReport r = eval.report(w);
    const double inflated =
        r.variance - (r.classical_variance + (1.0 + kWitnessInflation) * r.optimal_bound);
    out << std::setw(8) << g12(s) << std::setw(26) << g17(r.variance) << std::setw(26)
        << g17(r.sharp_bound) << std::setw(26) << g17(r.slack) << g17(inflated) << "\n";
    if (!(std::abs(r.slack) <= kSlackTol) || !(inflated < 0.0)) ok = false;
  }
  if (!ok) {
    err << "witness failed to certify tightness\n";
    return kViolation;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// lemma-scan

struct LemmaOptions {
  double m = 0.1;
  double big_m = 0.9;
  int grid = 200;
  std::vector<double> s_list{0.5, 0.75, 1.0, 2.0};
};

int cmd_lemma_scan(const LemmaOptions& opt, std::ostream& out, std::ostream&) {
  std::vector<LemmaScan> scans;
  for (double s : opt.s_list) {
    try {
      scans.push_back(lemma_scan(opt.m, opt.big_m, opt.grid, s));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  bool ok = true;
  out << std::left << std::setw(8) << "s" << std::setw(22) << "grid_max" << std::setw(22)
      << "argmax_x" << std::setw(22) << "argmax_y" << std::setw(22) << "corner_F(M,m)"
      << "holds\n";
  for (const LemmaScan& l : scans) {
    out << std::setw(8) << g12(l.s) << std::setw(22) << g17(l.grid_max) << std::setw(22)
        << g17(l.argmax_x) << std::setw(22) << g17(l.argmax_y) << std::setw(22)
        << g17(l.corner_value) << (l.holds ? "yes" : "NO") << "\n";
    ok = ok && l.holds;
  }
  return ok ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variance lower bounds: verification, sweeps and certificates"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* c = app.add_subcommand("check", "Evaluate every bound on an instance file");
  c->add_option("--instance,-i", check.instance, "Instance JSON file")->required();
  c->add_option("--s", check.s_list, "Values of s (default: file s_values, else 0.5 1)")
      ->delimiter(',');
  c->add_option("--format", check.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  SweepOptions sweep;
  auto* sw = app.add_subcommand("sweep", "Averaged product bounds versus purity as CSV");
  sw->add_option("--p-min", sweep.p_min, "Smallest purity");
  sw->add_option("--p-max", sweep.p_max, "Largest purity");
  sw->add_option("--steps", sweep.steps, "Number of purity grid points");
  sw->add_option("--mc-samples", sweep.mc_samples, "Monte Carlo samples per point (0: off)");
  sw->add_option("--seed", sweep.seed, "Random seed");
  sw->add_option("--out,-o", sweep.out_csv, "Output CSV path (default: stdout)");
  sw->add_option("--threads", sweep.threads, "Monte Carlo worker threads")
      ->check(CLI::PositiveNumber);

  SampleOptions sample;
  auto* sa = app.add_subcommand("sample", "Property sweep over random states and observables");
  sa->add_option("--dim", sample.dim, "Hilbert space dimension");
  sa->add_option("--n", sample.n, "Number of random instances");
  sa->add_option("--rank", sample.rank, "State rank (default: dim)");
  sa->add_option("--s", sample.s_list, "Values of s")->delimiter(',');
  sa->add_option("--seed", sample.seed, "Random seed");

  WitnessOptions witness;
  auto* wi = app.add_subcommand("witness", "Certify tightness with the extremal witness");
  wi->add_option("--instance,-i", witness.instance, "Instance JSON file (rho is used)");
  wi->add_option("--dim", witness.dim, "Dimension of a random state");
  wi->add_option("--rank", witness.rank, "Rank of the random state (default: dim)");
  wi->add_option("--seed", witness.seed, "Random seed");
  wi->add_option("--s", witness.s_list, "Values of s")->delimiter(',');

  LemmaOptions lemma;
  auto* le = app.add_subcommand("lemma-scan", "Grid scan of (x^s - y^s)^2 / (x + y)");
  le->add_option("--m", lemma.m, "Lower end of the interval");
  le->add_option("--M", lemma.big_m, "Upper end of the interval");
  le->add_option("--grid", lemma.grid, "Grid points per axis");
  le->add_option("--s", lemma.s_list, "Values of s")->delimiter(',');

  std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsageOrParse;
  }

  try {
    if (c->parsed()) return cmd_check(check, out, err);
    if (sw->parsed()) return cmd_sweep(sweep, out, err);
    if (sa->parsed()) return cmd_sample(sample, out, err);
    if (wi->parsed()) return cmd_witness(witness, out, err);
    if (le->parsed()) return cmd_lemma_scan(lemma, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageOrParse;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageOrParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MaximallyMixedState) {
      err << e.what() << "\n";
      return kMaximallyMixed;
    }
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsageOrParse;
}

}  // namespace qunc::cli
