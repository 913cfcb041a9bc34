// Command-line front-end: reproducible, seeded experiments over the
// local-optima landscape of the SK Hamiltonian, emitting CSV or JSON plus a
// manifest describing the run.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sklo/errors.hpp"
#include "sklo/estimators.hpp"
#include "sklo/gaussian.hpp"
#include "sklo/rate.hpp"
#include "sklo/rng.hpp"
#include "sklo/sk_model.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using json = nlohmann::ordered_json;
using namespace sklo;

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitCheckFailure = 3;
constexpr int kExitResource = 4;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

// A cell is a preformatted CSV string plus its JSON value; both emitters
// consume the same row data so the formats cannot drift apart.
struct Cell {
  std::string text;
  json value;
};

Cell cell(double v) { return {fmt(v), std::isfinite(v) ? json(v) : json()}; }
Cell cell(std::uint64_t v) { return {std::to_string(v), json(v)}; }
Cell cell(const std::string& v) { return {v, json(v)}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }

  std::string to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out += columns[c];
      out += c + 1 < columns.size() ? ',' : '\n';
    }
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out += row[c].text;
        out += c + 1 < row.size() ? ',' : '\n';
      }
    }
    return out;
  }

  std::string to_json() const {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < row.size(); ++c) {
        obj[columns[c]] = row[c].value;
      }
      arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
  }
};

struct CommonOptions {
  std::uint64_t seed = 1;
  int threads = 0;
  std::string output;
  std::string format = "csv";
  bool no_timestamp = false;
};

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing output file: " + path);
  }
}

// Emits the payload to stdout or to the configured file; file output gets a
// sibling <output>.manifest.json naming the command, options, and version.
// Thread count and wall time are deliberately excluded from the manifest so
// identical configurations produce identical bytes at any parallelism.
void emit(const CommonOptions& common, const std::string& command,
          const json& options, const Table& table) {
  const std::string payload =
      common.format == "json" ? table.to_json() : table.to_csv();
  if (common.output.empty()) {
    std::cout << payload;
    return;
  }
  write_file(common.output, payload);
  json manifest;
  manifest["command"] = command;
  manifest["version"] = kVersion;
  manifest["seed"] = common.seed;
  manifest["format"] = common.format;
  manifest["options"] = options;
  if (!common.no_timestamp) {
    manifest["timestamp"] = utc_timestamp();
  }
  write_file(common.output + ".manifest.json", manifest.dump(2) + "\n");
}

// "start:stop:step" inclusive of both ends (within a small slack).
std::vector<double> parse_grid(const std::string& spec) {
  double a = 0.0, b = 0.0, s = 0.0;
  char extra = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &a, &b, &s, &extra) != 3 ||
      !(s > 0.0) || b < a) {
    throw std::invalid_argument("bad range '" + spec +
                                "': expected start:stop:step with step > 0");
  }
  std::vector<double> out;
  for (std::size_t k = 0;; ++k) {
    const double x = a + static_cast<double>(k) * s;
    if (x > b + 1e-12) break;
    out.push_back(x);
  }
  return out;
}

sk::DescentRule parse_rule(const std::string& name) {
  if (name == "steepest") return sk::DescentRule::Steepest;
  if (name == "first") return sk::DescentRule::FirstImprovement;
  if (name == "random") return sk::DescentRule::RandomImprovement;
  throw std::invalid_argument("unknown rule '" + name +
                              "': expected steepest | first | random");
}

void apply_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

// ---------------------------------------------------------------------------
// Subcommand implementations.

int run_constants(const CommonOptions& common) {
  const auto& cc = rate::critical_constants();
  const double lo = 1.0 / (2.0 * M_PI);
  const double hi = 2.0 / (3.0 * M_PI);
  const bool ok = cc.alpha_star > lo && cc.alpha_star < hi;
  Table t;
  t.columns = {"name", "value"};
  t.add({cell(std::string("v_star")), cell(cc.v_star)});
  t.add({cell(std::string("v_star_half")), cell(0.5 * cc.v_star)});
  t.add({cell(std::string("alpha_star")), cell(cc.alpha_star)});
  t.add({cell(std::string("alpha_star_minus_log2")), cell(cc.exponent)});
  t.add({cell(std::string("lambda_at_v_star")), cell(cc.lambda_at_vstar)});
  t.add({cell(std::string("bracket_low")), cell(lo)});
  t.add({cell(std::string("bracket_high")), cell(hi)});
  t.add({cell(std::string("bracket_ok")),
         cell(static_cast<std::uint64_t>(ok ? 1 : 0))});
  emit(common, "constants", json::object(), t);
  return ok ? kExitOk : kExitCheckFailure;
}

int run_rate_table(const CommonOptions& common, const std::string& x_grid,
                   const std::vector<double>& x_list) {
  const std::vector<double> xs = x_list.empty() ? parse_grid(x_grid) : x_list;
  const double v_star = rate::critical_constants().v_star;
  Table t;
  t.columns = {"x", "lambda_star", "mu_star", "R", "theta"};
  for (double x : xs) {
    const bool near_vstar = std::abs(x - v_star) < 1e-6;
    t.add({cell(x), cell(rate::lambda_star(x)), cell(rate::mu_star(x)),
           cell(rate::R(x)),
           near_vstar ? Cell{"", json()} : cell(rate::theta_ratio(x))});
  }
  json opts;
  opts["x_grid"] = x_grid;
  opts["x_list"] = x_list;
  emit(common, "rate-table", opts, t);
  return kExitOk;
}

int run_prob(const CommonOptions& common, const std::vector<std::size_t>& ns,
             std::uint64_t mc_samples) {
  Table t;
  t.columns = {"n", "probability", "log_probability", "error", "method"};
  if (mc_samples > 0) {
    t.columns.push_back("mc_probability");
    t.columns.push_back("mc_error");
  }
  for (std::size_t n : ns) {
    const auto p = est::local_opt_probability(n);
    std::vector<Cell> row = {cell(n), cell(p.value), cell(p.log_value),
                             cell(p.error), cell(est::method_name(p.method))};
    if (mc_samples > 0) {
      const auto mc =
          est::mc_local_opt_probability(n, mc_samples, common.seed, common.threads);
      row.push_back(cell(mc.value));
      row.push_back(cell(mc.error));
    }
    t.add(std::move(row));
  }
  json opts;
  opts["n_list"] = ns;
  opts["mc_samples"] = mc_samples;
  emit(common, "prob", opts, t);
  return kExitOk;
}

int run_exponent(const CommonOptions& common, const std::vector<std::size_t>& ns) {
  Table t;
  t.columns = {"n", "log_count_over_n", "residual"};
  for (std::size_t n : ns) {
    const auto rep = est::expected_count(n);
    t.add({cell(n), cell(rep.log_count / static_cast<double>(n)),
           cell(rep.exponent_residual)});
  }
  json opts;
  opts["n_list"] = ns;
  emit(common, "exponent", opts, t);
  return kExitOk;
}

int run_tail(const CommonOptions& common, std::size_t n,
             const std::string& x_grid, const std::vector<double>& x_list) {
  const std::vector<double> xs = x_list.empty() ? parse_grid(x_grid) : x_list;
  Table t;
  t.columns = {"n", "x", "log_tail", "mu_star", "r_n"};
  for (double x : xs) {
    const auto rep = est::tail_probability(n, x);
    t.add({cell(n), cell(x), cell(rep.log_tail.log_value), cell(rep.mu_star),
           cell(rep.r_n)});
  }
  json opts;
  opts["n"] = n;
  opts["x_grid"] = x_grid;
  opts["x_list"] = x_list;
  emit(common, "tail", opts, t);
  return kExitOk;
}

int run_conditional(const CommonOptions& common, std::size_t n,
                    const std::string& delta_grid,
                    const std::vector<double>& delta_list) {
  const std::vector<double> deltas =
      delta_list.empty() ? parse_grid(delta_grid) : delta_list;
  const double mean = est::conditional_energy_mean(n).value;
  Table t;
  t.columns = {"n", "delta", "conditional_tail", "conditional_mean"};
  for (double delta : deltas) {
    t.add({cell(n), cell(delta), cell(est::conditional_energy_tail(n, delta).value),
           cell(mean)});
  }
  json opts;
  opts["n"] = n;
  opts["delta_grid"] = delta_grid;
  opts["delta_list"] = delta_list;
  emit(common, "conditional", opts, t);
  return kExitOk;
}

int run_simulate(const CommonOptions& common, std::size_t n,
                 std::uint64_t replicas, const std::string& rule_name) {
  const sk::DescentRule rule = parse_rule(rule_name);
  if (replicas == 0) {
    throw std::invalid_argument("simulate: --replicas must be >= 1");
  }
  if (static_cast<double>(n) * static_cast<double>(n) *
          static_cast<double>(replicas) >
      4e12) {
    throw ResourceError("simulate: n^2 * replicas budget exceeded");
  }
  struct Row {
    std::uint64_t flips = 0;
    double final_energy = 0.0;
    double normalized_energy = 0.0;
  };
  std::vector<Row> rows(replicas);
  // Each replica owns its instance and RNG substream, keyed by (seed,
  // replica); results are written into a preallocated slot so output order
  // is independent of scheduling.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t r = 0; r < static_cast<std::int64_t>(replicas); ++r) {
    const auto rep = static_cast<std::uint64_t>(r);
    const auto inst = sk::sample_instance(n, rng::hash2(common.seed, rep));
    const auto start =
        sk::random_configuration(n, rng::hash3(common.seed, rep, 1));
    const auto trace =
        sk::greedy_descent(inst, start, rule, rng::hash3(common.seed, rep, 2));
    rows[rep] = {trace.flips.size(),
                 trace.energies.empty() ? sk::energy(inst, start)
                                        : trace.energies.back(),
                 trace.normalized_energy};
  }
  Table t;
  t.columns = {"seed",  "replica",      "rule",
               "flips", "final_energy", "normalized_energy"};
  for (std::uint64_t r = 0; r < replicas; ++r) {
    t.add({cell(common.seed), cell(r), cell(rule_name), cell(rows[r].flips),
           cell(rows[r].final_energy), cell(rows[r].normalized_energy)});
  }
  json opts;
  opts["n"] = n;
  opts["replicas"] = replicas;
  opts["rule"] = rule_name;
  emit(common, "simulate", opts, t);
  return kExitOk;
}

int run_enumerate(const CommonOptions& common, std::size_t n,
                  std::uint64_t instances) {
  if (instances == 0) {
    throw std::invalid_argument("enumerate: --instances must be >= 1");
  }
  Table t;
  t.columns = {"seed", "count", "normalized_energy"};
  const double scale = std::pow(static_cast<double>(n), 1.5);
  for (std::uint64_t i = 0; i < instances; ++i) {
    const std::uint64_t inst_seed = common.seed + i;
    const auto inst = sk::sample_instance(n, inst_seed);
    const auto res = sk::enumerate_local_optima(inst, common.threads);
    for (double e : res.energies) {
      t.add({cell(inst_seed), cell(res.count), cell(e / scale)});
    }
  }
  json opts;
  opts["n"] = n;
  opts["instances"] = instances;
  emit(common, "enumerate", opts, t);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Self-check: every module's invariants, reported one JSON record per check.

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

void check_gaussian(std::vector<Check>& out) {
  bool sym = true;
  for (double x = -8.0; x <= 8.0; x += 0.05) {
    sym = sym && std::abs(gauss::cdf(x) + gauss::cdf(-x) - 1.0) < 1e-14;
  }
  out.push_back({"gaussian/cdf-symmetry", sym, "Phi(x) + Phi(-x) = 1"});

  bool fd = true;
  for (double lam = 0.1; lam <= 8.0; lam += 0.1) {
    const double h = 1e-5;
    const double d1 = (gauss::phi(lam + h) - gauss::phi(lam - h)) / (2.0 * h);
    fd = fd && std::abs(d1 - gauss::phi_prime(lam)) <
                   1e-6 * std::max(1.0, std::abs(d1));
  }
  out.push_back({"gaussian/phi-derivative", fd,
                 "phi_prime matches central differences at 1e-6"});

  const auto rep = gauss::verify_appendix_bound(0.005);
  out.push_back({"gaussian/envelope-bound", rep.holds && rep.sup_value < 0.95,
                 "sup = " + fmt(rep.sup_value)});
}

void check_rate(std::vector<Check>& out) {
  bool residual = true, theta = true, concave = true;
  for (double x = rate::kXMin + 0.01; x <= 4.0; x += 0.05) {
    const double l = rate::lambda_star(x);
    residual = residual && std::abs(l + gauss::phi_prime(l) - x) <= 1e-12;
    const double h = 1e-4;
    const double d2 =
        (rate::R(x + h) - 2.0 * rate::R(x) + rate::R(x - h)) / (h * h);
    concave = concave && d2 >= -20.0 - 1e-3 && d2 <= -0.5 + 1e-3;
    if (std::abs(x - rate::critical_constants().v_star) >= 1e-3) {
      const double th = rate::theta_ratio(x);
      theta = theta && th >= 0.25 && th <= 10.0;
    }
  }
  out.push_back({"rate/tilt-residual", residual, "lambda* solves its equation"});
  out.push_back({"rate/theta-interval", theta, "theta(x) in [1/4, 10]"});
  out.push_back({"rate/curvature-interval", concave, "R'' in [-20, -1/2]"});

  std::vector<double> grid;
  for (double x = rate::kXMin + 0.02; x <= 4.0; x += 0.02) grid.push_back(x);
  const auto drep = rate::lambda_star_derivative_check(grid);
  out.push_back({"rate/tilt-derivative", drep.ok,
                 "lambda*' in [" + fmt(drep.min_derivative) + ", " +
                     fmt(drep.max_derivative) + "]"});
}

void check_sk(std::vector<Check>& out, std::uint64_t seed) {
  bool flip = true, sum = true, sym = true;
  const auto inst = sk::sample_instance(24, seed);
  rng::CounterStream pick(seed, 99);
  for (int t = 0; t < 2000; ++t) {
    const auto sigma = sk::random_configuration(24, seed + 1000 + t);
    const auto lf = sk::local_fields(inst, sigma);
    const auto i = static_cast<std::size_t>(pick.next_below(24));
    auto flipped = sigma;
    flipped[i] = -flipped[i];
    const double hf = sk::energy(inst, flipped);
    flip = flip && std::abs(hf - (lf.energy + 2.0 * lf.z[i])) <
                       1e-9 * std::max(1.0, std::abs(hf));
    double zsum = 0.0;
    for (double z : lf.z) zsum += z;
    sum = sum && std::abs(zsum + 2.0 * lf.energy) <
                     1e-9 * std::max(1.0, std::abs(lf.energy));
    auto neg = sigma;
    for (auto& v : neg) v = -v;
    sym = sym && sk::is_local_min(inst, sigma) == sk::is_local_min(inst, neg);
  }
  out.push_back({"sk/flip-identity", flip, "H(flip i) = H + 2 z_i"});
  out.push_back({"sk/field-sum", sum, "sum z_i = -2 H"});
  out.push_back({"sk/sign-symmetry", sym, "verdicts match under global flip"});
}

void check_estimators(std::vector<Check>& out, bool full, std::uint64_t seed) {
  bool ident = true;
  double worst = 0.0;
  for (std::size_t n : {3, 8, 16, 32}) {
    const double nd = static_cast<double>(n);
    const double lhs = est::exp_moment_convolution(n).log_value;
    const double rhs = est::local_opt_probability(n).log_value +
                       nd * std::log(2.0) +
                       0.5 * std::log((2.0 * nd - 2.0) / (nd - 2.0));
    worst = std::max(worst, std::abs(lhs - rhs));
    ident = ident && std::abs(lhs - rhs) < 1e-7;
  }
  out.push_back({"estimators/representation-identity", ident,
                 "worst log gap " + fmt(worst)});

  bool chernoff = true;
  for (std::size_t n : {8, 32}) {
    for (double x : {1.0, 1.2, 1.5}) {
      chernoff = chernoff && est::tail_probability(n, x).r_n >= -1e-9;
    }
  }
  out.push_back({"estimators/chernoff-domination", chernoff, "r_n >= 0"});

  bool sandwich = true;
  for (std::size_t n : {4, 16, 64}) {
    const double nd = static_cast<double>(n);
    const double lam = 1.0 / (4.0 * (nd - 1.0));
    const double es2 = nd + nd * (nd - 1.0) * 2.0 / M_PI;
    const double logm = est::exp_moment_convolution(n).log_value;
    const double lower = lam * es2;
    const double upper = lam * es2 * (1.0 + nd * lam / (1.0 - nd * lam));
    sandwich = sandwich && logm >= lower - 1e-9 && logm <= upper + 1e-9;
  }
  out.push_back({"estimators/sandwich-bounds", sandwich,
                 "Jensen <= log moment <= log-Sobolev"});

  bool mono = true;
  double prev = 1.1;
  for (double delta = 0.0; delta <= 0.8001; delta += 0.05) {
    const double v = est::conditional_energy_tail(32, delta).value;
    mono = mono && v <= prev + 1e-12 && v >= 0.0 && v <= 1.0;
    prev = v;
  }
  out.push_back({"estimators/conditional-monotone", mono,
                 "tail nonincreasing in delta"});

  if (full) {
    const std::size_t n = 12;
    const std::size_t instances = 500;
    double count_sum = 0.0, count_sq = 0.0;
    for (std::size_t i = 0; i < instances; ++i) {
      const auto inst = sk::sample_instance(n, rng::hash2(seed, i));
      const auto c = static_cast<double>(sk::enumerate_local_optima(inst).count);
      count_sum += c;
      count_sq += c * c;
    }
    const double m = count_sum / instances;
    const double var = (count_sq - instances * m * m) / (instances - 1.0);
    const double se = std::sqrt(var / instances);
    const double predicted = std::exp(est::expected_count(n).log_count);
    const bool ok = std::abs(predicted - m) < 3.0 * se;
    out.push_back({"estimators/enumeration-cross-check", ok,
                   "mean count " + fmt(m) + " vs predicted " + fmt(predicted) +
                       " (se " + fmt(se) + ")"});
  }
}

int run_selfcheck(const CommonOptions& common, const std::string& level) {
  if (level != "quick" && level != "full") {
    throw std::invalid_argument("selfcheck: --level must be quick | full");
  }
  std::vector<Check> checks;
  check_gaussian(checks);
  check_rate(checks);
  check_sk(checks, common.seed);
  check_estimators(checks, level == "full", common.seed);

  json arr = json::array();
  bool all_ok = true;
  for (const auto& c : checks) {
    json obj;
    obj["name"] = c.name;
    obj["ok"] = c.ok;
    obj["detail"] = c.detail;
    arr.push_back(std::move(obj));
    all_ok = all_ok && c.ok;
  }
  const std::string payload = arr.dump(2) + "\n";
  if (common.output.empty()) {
    std::cout << payload;
  } else {
    write_file(common.output, payload);
  }
  return all_ok ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-optima landscape of the SK spin-glass Hamiltonian"};
  app.require_subcommand(1);

  CommonOptions common;
  // Common flags are registered on every subcommand so they can appear after
  // the subcommand name.
  auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Master RNG seed");
    sub->add_option("--threads", common.threads, "Worker threads (0 = auto)");
    sub->add_option("--output", common.output,
                    "Output file (default: stdout); file output also writes "
                    "<output>.manifest.json");
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--no-timestamp", common.no_timestamp,
                  "Omit the timestamp from the manifest");
  };

  auto* c_constants =
      app.add_subcommand("constants", "Critical landscape constants");
  add_common(c_constants);

  std::string x_grid = "0.8:4.0:0.05";
  std::vector<double> x_list;
  auto* c_rate = app.add_subcommand("rate-table",
                                    "Rate function and tilt over an x grid");
  add_common(c_rate);
  c_rate->add_option("--x-grid", x_grid, "Range start:stop:step");
  c_rate->add_option("--x-list", x_list, "Explicit x values")->delimiter(',');

  std::vector<std::size_t> prob_ns = {3, 4, 6, 8, 12, 16, 24, 32};
  std::uint64_t mc_samples = 0;
  auto* c_prob =
      app.add_subcommand("prob", "Local-optimality probability per n");
  add_common(c_prob);
  c_prob->add_option("--n-list", prob_ns, "Values of n")->delimiter(',');
  c_prob->add_option("--mc-samples", mc_samples,
                     "Also run naive Monte Carlo with this many instances");

  std::vector<std::size_t> exp_ns = {16, 64, 256, 1024};
  auto* c_exp =
      app.add_subcommand("exponent", "Expected-count growth exponent per n");
  add_common(c_exp);
  c_exp->add_option("--n-list", exp_ns, "Values of n")->delimiter(',');

  std::size_t tail_n = 64;
  std::string tail_grid = "0.8:2.0:0.05";
  std::vector<double> tail_list;
  auto* c_tail = app.add_subcommand("tail", "Large-deviation tail of ||N||_1");
  add_common(c_tail);
  c_tail->add_option("--n", tail_n, "Number of summands")->required();
  c_tail->add_option("--x-grid", tail_grid, "Range start:stop:step");
  c_tail->add_option("--x-list", tail_list, "Explicit x values")->delimiter(',');

  std::size_t cond_n = 64;
  std::string delta_grid = "0.3:0.7:0.01";
  std::vector<double> delta_list;
  auto* c_cond = app.add_subcommand(
      "conditional", "Conditional law of the normalized energy");
  add_common(c_cond);
  c_cond->add_option("--n", cond_n, "System size")->required();
  c_cond->add_option("--delta-grid", delta_grid, "Range start:stop:step");
  c_cond->add_option("--delta-list", delta_list, "Explicit delta values")
      ->delimiter(',');

  std::size_t sim_n = 64;
  std::uint64_t replicas = 100;
  std::string rule = "steepest";
  auto* c_sim =
      app.add_subcommand("simulate", "Greedy-descent ensemble statistics");
  add_common(c_sim);
  c_sim->add_option("--n", sim_n, "System size")->required();
  c_sim->add_option("--replicas", replicas, "Independent replicas");
  c_sim->add_option("--rule", rule, "Descent rule: steepest | first | random");

  std::size_t enum_n = 12;
  std::uint64_t instances = 1;
  auto* c_enum = app.add_subcommand(
      "enumerate", "Exhaustive local-optima enumeration per instance");
  add_common(c_enum);
  c_enum->add_option("--n", enum_n, "System size (<= 26)")->required();
  c_enum->add_option("--instances", instances, "Instances, seeds seed..seed+k-1");

  std::string level = "quick";
  auto* c_check = app.add_subcommand("selfcheck", "Invariant self-check suite");
  add_common(c_check);
  c_check->add_option("--level", level, "quick | full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    apply_threads(common.threads);
    if (c_constants->parsed()) return run_constants(common);
    if (c_rate->parsed()) return run_rate_table(common, x_grid, x_list);
    if (c_prob->parsed()) return run_prob(common, prob_ns, mc_samples);
    if (c_exp->parsed()) return run_exponent(common, exp_ns);
    if (c_tail->parsed()) return run_tail(common, tail_n, tail_grid, tail_list);
    if (c_cond->parsed())
      return run_conditional(common, cond_n, delta_grid, delta_list);
    if (c_sim->parsed()) return run_simulate(common, sim_n, replicas, rule);
    if (c_enum->parsed()) return run_enumerate(common, enum_n, instances);
    if (c_check->parsed()) return run_selfcheck(common, level);
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
