#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <mutex>
#include <fstream>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lehmer/algorithms.hpp"
#include "lehmer/benchmarks.hpp"
#include "lehmer/problems.hpp"
#include "lehmer/rng.hpp"
#include "lehmer/theory.hpp"

namespace lehmer {

struct AlgorithmSpec {
  std::string id;  // rls | ea-lehmer | ea-perm | ea-mv
  StepOp step = StepOp::Uniform;
  ProbVectorKind prob_vector = ProbVectorKind::Uniform;
  PermScheme scheme = PermScheme::Insertion;
  int poisson_offset = 0;

  std::string label() const {
    if (id == "rls") return id + "/" + step_op_name(step) + "/" + prob_vector_name(prob_vector);
    if (id == "ea-lehmer") return id + "/" + step_op_name(step);
    if (id == "ea-perm") return id + "/" + perm_scheme_name(scheme);
    return id;
  }
};

struct InstanceRef {
  std::string type;  // lop | qap
  std::string path;
};

struct ExperimentConfig {
  AlgorithmSpec algorithm;
  std::optional<BenchmarkId> benchmark;
  std::optional<InstanceRef> instance;
  int n = 0;                 // benchmark size; ignored for instances
  int subsample_to = 0;      // 0 = full instance
  std::uint64_t subsample_seed = 0;
  int runs = 1;
  std::uint64_t budget = 1;
  std::optional<long long> target;  // explicit scalar target
  std::uint64_t master_seed = 1;
  bool count_noop_evals = true;
  std::string mode = "fixed-target";  // fixed-target | fixed-budget
  std::string output;                 // path prefix for CSV + JSON summary
  int workers = 0;                    // 0 = hardware concurrency
  bool record_trajectory = false;
};

inline void to_json(nlohmann::ordered_json& j, const ExperimentConfig& cfg) {
  j = nlohmann::ordered_json{};
  j["algorithm"] = {{"id", cfg.algorithm.id},
                    {"step", step_op_name(cfg.algorithm.step)},
                    {"prob_vector", prob_vector_name(cfg.algorithm.prob_vector)},
                    {"scheme", perm_scheme_name(cfg.algorithm.scheme)},
                    {"poisson_offset", cfg.algorithm.poisson_offset}};
  if (cfg.benchmark) j["benchmark"] = benchmark_name(*cfg.benchmark);
  if (cfg.instance) j["instance"] = {{"type", cfg.instance->type}, {"path", cfg.instance->path}};
  j["n"] = cfg.n;
  j["subsample_to"] = cfg.subsample_to;
  j["subsample_seed"] = cfg.subsample_seed;
  j["runs"] = cfg.runs;
  j["budget"] = cfg.budget;
  if (cfg.target) j["target"] = *cfg.target;
  j["master_seed"] = cfg.master_seed;
  j["count_noop_evals"] = cfg.count_noop_evals;
  j["mode"] = cfg.mode;
  j["output"] = cfg.output;
  j["workers"] = cfg.workers;
  j["record_trajectory"] = cfg.record_trajectory;
}

inline ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  if (j.contains("algorithm")) {
    const auto& a = j.at("algorithm");
    cfg.algorithm.id = a.at("id").get<std::string>();
    if (a.contains("step")) cfg.algorithm.step = step_op_from_name(a.at("step").get<std::string>());
    if (a.contains("prob_vector"))
      cfg.algorithm.prob_vector = prob_vector_from_name(a.at("prob_vector").get<std::string>());
    if (a.contains("scheme"))
      cfg.algorithm.scheme = perm_scheme_from_name(a.at("scheme").get<std::string>());
    if (a.contains("poisson_offset")) cfg.algorithm.poisson_offset = a.at("poisson_offset").get<int>();
  } else {
    throw std::invalid_argument("experiment config: missing 'algorithm'");
  }
  if (j.contains("benchmark"))
    cfg.benchmark = benchmark_from_name(j.at("benchmark").get<std::string>());
  if (j.contains("instance")) {
    const auto& inst = j.at("instance");
    cfg.instance = InstanceRef{inst.at("type").get<std::string>(), inst.at("path").get<std::string>()};
  }
  if (j.contains("n")) cfg.n = j.at("n").get<int>();
  if (j.contains("subsample_to")) cfg.subsample_to = j.at("subsample_to").get<int>();
  if (j.contains("subsample_seed")) cfg.subsample_seed = j.at("subsample_seed").get<std::uint64_t>();
  if (j.contains("runs")) cfg.runs = j.at("runs").get<int>();
  if (j.contains("budget")) cfg.budget = j.at("budget").get<std::uint64_t>();
  if (j.contains("target")) cfg.target = j.at("target").get<long long>();
  if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
  if (j.contains("count_noop_evals")) cfg.count_noop_evals = j.at("count_noop_evals").get<bool>();
  if (j.contains("mode")) cfg.mode = j.at("mode").get<std::string>();
  if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
  if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
  if (j.contains("record_trajectory")) cfg.record_trajectory = j.at("record_trajectory").get<bool>();
  return cfg;
}

// FNV-1a over the canonical config serialization.
inline std::string config_hash(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  to_json(j, cfg);
  const std::string text = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

// A config with its instance loaded (and subsampled) and the target,
// direction, and effective size resolved.
struct PreparedExperiment {
  ExperimentConfig cfg;
  std::string hash;
  std::optional<LopInstance> lop;
  std::optional<QapInstance> qap;
  int n = 0;
  Direction dir = Direction::Minimize;
  std::optional<FitnessValue> target;
};

inline PreparedExperiment prepare_experiment(ExperimentConfig cfg) {
  if (cfg.runs < 1) throw std::invalid_argument("experiment: runs must be >= 1");
  if (cfg.budget < 1) throw std::invalid_argument("experiment: budget must be >= 1");
  if (cfg.mode != "fixed-target" && cfg.mode != "fixed-budget")
    throw std::invalid_argument("experiment: mode must be fixed-target or fixed-budget");
  if (cfg.benchmark.has_value() == cfg.instance.has_value())
    throw std::invalid_argument("experiment: exactly one of benchmark/instance required");

  PreparedExperiment prep;
  if (cfg.instance) {
    std::ifstream in(cfg.instance->path);
    if (!in) throw std::invalid_argument("experiment: cannot open " + cfg.instance->path);
    if (cfg.instance->type == "lop") {
      prep.lop = parse_lolib(in);
      prep.n = prep.lop->n;
    } else if (cfg.instance->type == "qap") {
      prep.qap = parse_qaplib(in);
      prep.n = prep.qap->n;
    } else {
      throw std::invalid_argument("experiment: instance type must be lop or qap");
    }
    if (cfg.subsample_to > 0 && cfg.subsample_to != prep.n) {
      Rng rng(derive_seed(cfg.subsample_seed, 0));
      if (prep.lop) prep.lop = subsample(*prep.lop, cfg.subsample_to, rng);
      if (prep.qap) prep.qap = subsample(*prep.qap, cfg.subsample_to, rng);
      prep.n = cfg.subsample_to;
    }
    prep.dir = Direction::Minimize;
  } else {
    if (cfg.n < 2) throw std::invalid_argument("experiment: n must be >= 2 for benchmarks");
    prep.n = cfg.n;
    prep.dir = benchmark_direction(*cfg.benchmark);
  }

  if (cfg.mode == "fixed-target") {
    if (cfg.target) {
      prep.target = FitnessValue::scalar(*cfg.target);
      if (cfg.benchmark) {
        const auto opt = benchmark_optimum(*cfg.benchmark, prep.n);
        if (opt.is_key())
          throw std::invalid_argument(
              "experiment: explicit scalar target unsupported for key-valued benchmarks");
      }
    } else if (cfg.benchmark) {
      prep.target = benchmark_optimum(*cfg.benchmark, prep.n);
    } else if (prep.n <= 11) {
      prep.target = prep.lop ? exhaustive_optimum(*prep.lop).first
                             : exhaustive_optimum(*prep.qap).first;
    } else {
      throw std::invalid_argument(
          "experiment: fixed-target on an instance with n > 11 needs an explicit target");
    }
  }

  prep.cfg = std::move(cfg);
  prep.hash = config_hash(prep.cfg);
  return prep;
}

namespace detail {

template <class Obj>
RunRecord dispatch_algorithm(const PreparedExperiment& prep, Obj&& objective,
                             std::uint64_t run_index) {
  const auto& cfg = prep.cfg;
  const std::uint64_t seed = derive_seed(cfg.master_seed, run_index);
  Rng rng(seed);
  StoppingCondition stop{prep.target, cfg.budget};
  if (cfg.mode == "fixed-budget") stop.target.reset();

  const auto& alg = cfg.algorithm;
  if (alg.id == "rls")
    return rls_run(prep.n, objective, prep.dir, alg.step, alg.prob_vector, stop, rng, seed,
                   nullptr, cfg.record_trajectory);
  if (alg.id == "ea-lehmer")
    return ea_lehmer_run(prep.n, objective, prep.dir, alg.step, stop, rng, seed, nullptr,
                         cfg.record_trajectory);
  if (alg.id == "ea-perm")
    return ea_perm_run(prep.n, objective, prep.dir, alg.scheme, stop, rng,
                       cfg.count_noop_evals, alg.poisson_offset, seed, nullptr,
                       cfg.record_trajectory);
  if (alg.id == "ea-mv")
    return ea_multivalued_run(prep.n, objective, prep.dir, stop, rng, seed, nullptr,
                              cfg.record_trajectory);
  throw std::invalid_argument("experiment: unknown algorithm id '" + alg.id + "'");
}

inline bool algorithm_searches_lehmer_space(const std::string& id) {
  return id == "rls" || id == "ea-lehmer";
}

}  // namespace detail

// One run, fully determined by (config, run_index).
inline RunRecord run_single(const PreparedExperiment& prep, std::uint64_t run_index) {
  const auto& cfg = prep.cfg;
  if (cfg.benchmark) {
    const BenchmarkId id = *cfg.benchmark;
    const SearchDomain dom = benchmark_domain(id);
    const std::string& alg = cfg.algorithm.id;
    const bool ok = (dom == SearchDomain::Lehmer && detail::algorithm_searches_lehmer_space(alg)) ||
                    (dom == SearchDomain::Perm && alg == "ea-perm") ||
                    (dom == SearchDomain::MultiValued && alg == "ea-mv");
    if (!ok)
      throw std::invalid_argument("experiment: benchmark " + benchmark_name(id) +
                                  " is not defined on the search space of algorithm " + alg);
    return detail::dispatch_algorithm(
        prep, [id](const std::vector<int>& s, FitnessValue& out) { benchmark_eval(id, s, out); },
        run_index);
  }

  // LOP/QAP. Lehmer-space algorithms evaluate through the bijection.
  const bool lehmer_space = detail::algorithm_searches_lehmer_space(cfg.algorithm.id);
  if (cfg.algorithm.id == "ea-mv")
    throw std::invalid_argument("experiment: ea-mv is not applicable to LOP/QAP instances");
  auto eval_perm = [&prep](const Permutation& p) {
    return prep.lop ? lop_eval(*prep.lop, p) : qap_eval(*prep.qap, p);
  };
  if (lehmer_space) {
    const int n = prep.n;
    return detail::dispatch_algorithm(
        prep,
        [&eval_perm, n](const std::vector<int>& entries, FitnessValue& out) {
          LehmerCode code(LehmerCode::unchecked_tag{}, n, entries);
          out = eval_perm(decode(code));
        },
        run_index);
  }
  return detail::dispatch_algorithm(
      prep,
      [&eval_perm](const std::vector<int>& values, FitnessValue& out) {
        out = eval_perm(Permutation(Permutation::unchecked_tag{}, values));
      },
      run_index);
}

namespace detail {

// Executes fn(i) for i in [0, count) on `workers` threads; results are
// stored by index, so aggregates are independent of execution order.
template <class Fn>
std::vector<RunRecord> run_indexed(int count, int workers, Fn&& fn) {
  std::vector<RunRecord> records(static_cast<std::size_t>(count));
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min(workers, count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) records[static_cast<std::size_t>(i)] = fn(i);
    return records;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        records[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return records;
}

}  // namespace detail

// Empirical expected runtime: mean runtime (failures at budget) divided
// by the success rate; infinite when nothing succeeded.
inline double ert(double mean_runtime, double success_rate) {
  if (success_rate < 0.0 || success_rate > 1.0)
    throw std::invalid_argument("ert: success rate outside [0, 1]");
  if (success_rate == 0.0) return std::numeric_limits<double>::infinity();
  return mean_runtime / success_rate;
}

struct AggregateResult {
  ExperimentConfig config;
  std::string hash;
  int n = 0;
  std::vector<RunRecord> records;
  double success_rate = 0.0;
  double mean_runtime = 0.0;  // failures counted at budget
  double runtime_sd = 0.0;
  double runtime_min = 0.0;
  double runtime_max = 0.0;
  double ert_value = std::numeric_limits<double>::infinity();
  FitnessValue best_found;
  double mean_rpd = std::numeric_limits<double>::quiet_NaN();
};

inline AggregateResult aggregate(const PreparedExperiment& prep, std::vector<RunRecord> records) {
  AggregateResult agg;
  agg.config = prep.cfg;
  agg.hash = prep.hash;
  agg.n = prep.n;
  agg.records = std::move(records);

  long long successes = 0;
  long double sum = 0.0L, sum_sq = 0.0L;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  bool have_best = false;
  for (const auto& r : agg.records) {
    const double runtime =
        r.success ? static_cast<double>(r.evaluations_used) : static_cast<double>(prep.cfg.budget);
    successes += r.success ? 1 : 0;
    sum += runtime;
    sum_sq += static_cast<long double>(runtime) * runtime;
    lo = std::min(lo, runtime);
    hi = std::max(hi, runtime);
    if (!have_best || strictly_better(r.best_fitness, agg.best_found, prep.dir)) {
      agg.best_found = r.best_fitness;
      have_best = true;
    }
  }
  const auto count = static_cast<long double>(agg.records.size());
  agg.success_rate = static_cast<double>(successes) / static_cast<double>(count);
  agg.mean_runtime = static_cast<double>(sum / count);
  const long double var = count > 1 ? (sum_sq - sum * sum / count) / (count - 1) : 0.0L;
  agg.runtime_sd = static_cast<double>(std::sqrt(std::max(var, 0.0L)));
  agg.runtime_min = lo;
  agg.runtime_max = hi;
  agg.ert_value = ert(agg.mean_runtime, agg.success_rate);
  return agg;
}

inline AggregateResult run_experiment(const ExperimentConfig& cfg) {
  PreparedExperiment prep = prepare_experiment(cfg);
  auto records = detail::run_indexed(cfg.runs, cfg.workers, [&prep](int i) {
    return run_single(prep, static_cast<std::uint64_t>(i));
  });
  return aggregate(prep, std::move(records));
}

inline AggregateResult run_fixed_target(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  c.mode = "fixed-target";
  return run_experiment(c);
}

inline AggregateResult run_fixed_budget(const ExperimentConfig& cfg) {
  ExperimentConfig c = cfg;
  c.mode = "fixed-budget";
  return run_experiment(c);
}

// Relative percentage deviation against the best value observed across
// the whole suite invocation. Only valid for scalar objectives.
inline void apply_rpd(std::vector<AggregateResult>& suite) {
  if (suite.empty()) return;
  long long best = 0;
  bool have = false;
  for (const auto& agg : suite)
    for (const auto& r : agg.records) {
      const long long v = r.best_fitness.scalar_value();
      if (!have || v < best) {
        best = v;
        have = true;
      }
    }
  for (auto& agg : suite) {
    long double sum = 0.0L;
    for (const auto& r : agg.records)
      sum += 100.0L * (static_cast<long double>(r.best_fitness.scalar_value()) - best) / best;
    agg.mean_rpd = static_cast<double>(sum / static_cast<long double>(agg.records.size()));
  }
}

// --- Serialization --------------------------------------------------------

inline std::string csv_rows(const AggregateResult& agg) {
  std::string out = "config_hash,seed,evaluations,best_fitness,success\n";
  for (const auto& r : agg.records) {
    out += agg.hash;
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += std::to_string(r.evaluations_used);
    out += ',';
    out += r.best_fitness.to_string();
    out += ',';
    out += r.success ? '1' : '0';
    out += '\n';
  }
  return out;
}

inline std::string format_fixed6(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return std::string(buf);
}

inline nlohmann::ordered_json summary_json(const AggregateResult& agg) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json cfg_json;
  to_json(cfg_json, agg.config);
  j["config"] = cfg_json;
  j["config_hash"] = agg.hash;
  j["n"] = agg.n;
  j["runs"] = agg.records.size();
  j["success_rate"] = format_fixed6(agg.success_rate);
  j["mean_runtime"] = format_fixed6(agg.mean_runtime);
  j["runtime_sd"] = format_fixed6(agg.runtime_sd);
  j["runtime_min"] = format_fixed6(agg.runtime_min);
  j["runtime_max"] = format_fixed6(agg.runtime_max);
  j["ert"] = format_fixed6(agg.ert_value);
  if (!std::isnan(agg.mean_rpd)) j["mean_rpd"] = format_fixed6(agg.mean_rpd);
  j["best_found"] = agg.best_found.to_string();
  return j;
}

inline void write_experiment_outputs(const AggregateResult& agg, const std::string& prefix) {
  {
    std::ofstream csv(prefix + ".csv", std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + prefix + ".csv");
    csv << csv_rows(agg);
  }
  {
    std::ofstream js(prefix + ".json", std::ios::binary);
    if (!js) throw std::runtime_error("cannot write " + prefix + ".json");
    js << summary_json(agg).dump(2) << '\n';
  }
}

// --- Theorem validation ---------------------------------------------------

struct ValidationReport {
  std::string theorem;
  int n = 0;
  int runs = 0;
  double empirical_mean = 0.0;  // optimization time: evaluations past initialization
  double standard_error = 0.0;
  double target_low = 0.0;
  double target_high = 0.0;
  double exact_reference = 0.0;  // finite-n series where one exists, else 0
  std::string description;
  bool pass = false;
  std::vector<std::pair<int, double>> per_size_means;  // slope validators
  double slope = 0.0;
};

namespace detail {

inline ExperimentConfig theorem_config(const std::string& theorem, int n, int runs,
                                       std::uint64_t master_seed) {
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.runs = runs;
  cfg.budget = std::numeric_limits<std::uint64_t>::max() / 2;
  cfg.master_seed = master_seed;
  cfg.mode = "fixed-target";
  if (theorem == "thm2") {
    cfg.algorithm = {"rls", StepOp::Uniform, ProbVectorKind::Uniform, PermScheme::Insertion, 0};
    cfg.benchmark = BenchmarkId::LLeadingZeros;
  } else if (theorem == "thm4") {
    cfg.algorithm = {"rls", StepOp::Uniform, ProbVectorKind::Proportional, PermScheme::Insertion, 0};
    cfg.benchmark = BenchmarkId::LLeadingZeros;
  } else if (theorem == "thm6") {
    cfg.algorithm = {"rls", StepOp::Unit, ProbVectorKind::Uniform, PermScheme::Insertion, 0};
    cfg.benchmark = BenchmarkId::LLeadingZeros;
  } else if (theorem == "thm1-band") {
    cfg.algorithm = {"rls", StepOp::Uniform, ProbVectorKind::Uniform, PermScheme::Insertion, 0};
    cfg.benchmark = BenchmarkId::LOneMax;
  } else if (theorem == "thm11-lead") {
    cfg.algorithm = {"ea-lehmer", StepOp::Uniform, ProbVectorKind::Uniform, PermScheme::Insertion, 0};
    cfg.benchmark = BenchmarkId::LLeadingZeros;
  } else if (theorem == "thm15-lead") {
    cfg.algorithm = {"ea-lehmer", StepOp::Unit, ProbVectorKind::Uniform, PermScheme::Insertion, 0};
    cfg.benchmark = BenchmarkId::LLeadingZeros;
  } else if (theorem == "slope-rls-unit-onemax") {
    cfg.algorithm = {"rls", StepOp::Unit, ProbVectorKind::Uniform, PermScheme::Insertion, 0};
    cfg.benchmark = BenchmarkId::LOneMax;
  } else if (theorem == "slope-ea-unit-onemax") {
    cfg.algorithm = {"ea-lehmer", StepOp::Unit, ProbVectorKind::Uniform, PermScheme::Insertion, 0};
    cfg.benchmark = BenchmarkId::LOneMax;
  } else if (theorem == "slope-ea-uniform-onemax") {
    cfg.algorithm = {"ea-lehmer", StepOp::Uniform, ProbVectorKind::Uniform, PermScheme::Insertion, 0};
    cfg.benchmark = BenchmarkId::LOneMax;
  } else if (theorem == "slope-ea-nval") {
    cfg.algorithm = {"ea-mv", StepOp::Uniform, ProbVectorKind::Uniform, PermScheme::Insertion, 0};
    cfg.benchmark = BenchmarkId::NVal;
  } else {
    throw std::invalid_argument("validate_theorem: unknown theorem id '" + theorem + "'");
  }
  return cfg;
}

// Mean and standard error of optimization time (evaluations past
// initialization) for a theorem configuration.
inline std::pair<double, double> optimization_time_stats(const ExperimentConfig& cfg) {
  const AggregateResult agg = run_experiment(cfg);
  long double sum = 0.0L, sum_sq = 0.0L;
  for (const auto& r : agg.records) {
    const auto t = static_cast<long double>(r.evaluations_used - 1);
    sum += t;
    sum_sq += t * t;
  }
  const auto count = static_cast<long double>(agg.records.size());
  const double mean = static_cast<double>(sum / count);
  const long double var = count > 1 ? (sum_sq - sum * sum / count) / (count - 1) : 0.0L;
  const double se = static_cast<double>(std::sqrt(std::max(var, 0.0L) / count));
  return {mean, se};
}

}  // namespace detail

inline bool is_slope_theorem(const std::string& theorem) {
  return theorem.rfind("slope-", 0) == 0;
}

// Runs the algorithm/benchmark pairing wired for the theorem and compares
// the empirical mean optimization time against the closed form, band, or
// log-log slope.
inline ValidationReport validate_theorem(const std::string& theorem, int n, int runs,
                                         double tolerance, std::uint64_t master_seed,
                                         int workers = 0) {
  ValidationReport rep;
  rep.theorem = theorem;
  rep.n = n;
  rep.runs = runs;

  if (is_slope_theorem(theorem)) {
    const std::vector<int> sizes = {50, 100, 150, 200};
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int size : sizes) {
      ExperimentConfig cfg = detail::theorem_config(theorem, size, runs, master_seed);
      cfg.workers = workers;
      const auto [mean, se] = detail::optimization_time_stats(cfg);
      (void)se;
      rep.per_size_means.emplace_back(size, mean);
      const long double x = std::log(static_cast<long double>(size));
      const long double y = std::log(static_cast<long double>(mean));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const auto m = static_cast<long double>(sizes.size());
    rep.slope = static_cast<double>((m * sxy - sx * sy) / (m * sxx - sx * sx));
    if (theorem == "slope-rls-unit-onemax" || theorem == "slope-ea-unit-onemax") {
      rep.target_low = 2.0 - tolerance;
      rep.target_high = 2.0 + tolerance;
      rep.description = "log-log slope of mean runtime in [2 - tol, 2 + tol]";
    } else {
      rep.target_low = 2.0;
      rep.target_high = 2.3;
      rep.description = "log-log slope of mean runtime in [2.0, 2.3] (quadratic plus log factor)";
    }
    rep.pass = rep.slope >= rep.target_low && rep.slope <= rep.target_high;
    return rep;
  }

  ExperimentConfig cfg = detail::theorem_config(theorem, n, runs, master_seed);
  cfg.workers = workers;
  const auto [mean, se] = detail::optimization_time_stats(cfg);
  rep.empirical_mean = mean;
  rep.standard_error = se;

  if (theorem == "thm1-band") {
    const double m1 = static_cast<double>(n - 1) * (n - 1);
    const double logn = std::log(static_cast<double>(n));
    rep.target_low = 0.8 * m1 * logn;
    rep.target_high = m1 * logn + m1;
    rep.description = "empirical mean within [0.8 (n-1)^2 ln n, (n-1)^2 ln n + (n-1)^2]";
    rep.pass = mean >= rep.target_low && mean <= rep.target_high;
  } else if (theorem == "thm11-lead") {
    const double cf = static_cast<double>(closed_form("thm11-lead", n));
    rep.target_low = cf;
    rep.target_high = (1.0 + tolerance) * cf;
    rep.exact_reference = static_cast<double>(exact_series("thm11-lead", n));
    rep.description = "empirical mean within [1, 1 + tol] x leading terms (remainder is positive)";
    rep.pass = mean >= rep.target_low && mean <= rep.target_high;
  } else {
    const double cf = static_cast<double>(closed_form(theorem, n));
    rep.target_low = (1.0 - tolerance) * cf;
    rep.target_high = (1.0 + tolerance) * cf;
    if (theorem == "thm15-lead")
      rep.exact_reference = static_cast<double>(exact_series("thm15-lead", n));
    rep.description = "empirical mean within tolerance of the closed form";
    rep.pass = mean >= rep.target_low && mean <= rep.target_high;
  }
  return rep;
}

inline nlohmann::ordered_json validation_json(const ValidationReport& rep) {
  nlohmann::ordered_json j;
  j["theorem"] = rep.theorem;
  j["n"] = rep.n;
  j["runs"] = rep.runs;
  if (is_slope_theorem(rep.theorem)) {
    j["slope"] = format_fixed6(rep.slope);
    nlohmann::ordered_json sizes = nlohmann::ordered_json::array();
    for (const auto& [size, mean] : rep.per_size_means)
      sizes.push_back({{"n", size}, {"mean_runtime", format_fixed6(mean)}});
    j["per_size"] = sizes;
  } else {
    j["empirical_mean"] = format_fixed6(rep.empirical_mean);
    j["standard_error"] = format_fixed6(rep.standard_error);
  }
  j["target_low"] = format_fixed6(rep.target_low);
  j["target_high"] = format_fixed6(rep.target_high);
  if (rep.exact_reference != 0.0) j["exact_series"] = format_fixed6(rep.exact_reference);
  j["description"] = rep.description;
  j["pass"] = rep.pass;
  return j;
}

}  // namespace lehmer
