// Command-line harness: permutation/Lehmer conversions, benchmark and
// instance evaluation, exhaustive search, single runs, experiments,
// theorem validation, and rank statistics.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lehmer/benchmarks.hpp"
#include "lehmer/experiments.hpp"
#include "lehmer/lehmer_code.hpp"
#include "lehmer/permutation.hpp"
#include "lehmer/problems.hpp"
#include "lehmer/stats.hpp"
#include "lehmer/theory.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lehmer::Permutation permutation_argument(const std::string& literal) {
  return lehmer::parse_permutation(literal);
}

nlohmann::ordered_json run_record_json(const lehmer::RunRecord& rec) {
  nlohmann::ordered_json j;
  j["seed"] = rec.seed;
  j["evaluations"] = rec.evaluations_used;
  j["best_fitness"] = rec.best_fitness.to_string();
  j["success"] = rec.success;
  if (!rec.trajectory.empty()) {
    nlohmann::ordered_json traj = nlohmann::ordered_json::array();
    for (const auto& [eval, fit] : rec.trajectory)
      traj.push_back({{"evaluation", eval}, {"fitness", fit.to_string()}});
    j["trajectory"] = traj;
  }
  return j;
}

// Metric CSV: header "instance,<alg>,<alg>,..."; one row per instance.
void run_stats(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty metric CSV");
  std::vector<std::string> algs;
  {
    std::stringstream header(line);
    std::string cell;
    bool first = true;
    while (std::getline(header, cell, ',')) {
      if (!first) algs.push_back(cell);
      first = false;
    }
  }
  std::vector<std::vector<double>> metric;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');  // instance name
    std::vector<double> values;
    while (std::getline(row, cell, ',')) values.push_back(std::stod(cell));
    if (values.size() != algs.size())
      throw std::runtime_error("metric CSV row has wrong column count");
    metric.push_back(std::move(values));
  }
  const auto summary = lehmer::wilcoxon_bh(algs, metric);
  std::cout << "algorithm,average_rank,p_adjusted,annotation\n";
  for (std::size_t a = 0; a < algs.size(); ++a) {
    std::cout << algs[a] << ',' << lehmer::format_fixed6(summary.average_rank[a]) << ','
              << (a == summary.best_index ? std::string("-")
                                          : lehmer::format_fixed6(summary.p_adjusted[a]))
              << ',' << summary.annotation[a] << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lehmer-code and permutation search heuristics harness"};
  app.require_subcommand(1);

  // encode
  std::string perm_literal;
  auto* encode_cmd = app.add_subcommand("encode", "Permutation literal -> Lehmer code literal");
  encode_cmd->add_option("permutation", perm_literal, "e.g. 3,5,4,1,2")->required();

  // decode
  std::string code_literal;
  auto* decode_cmd = app.add_subcommand("decode", "Lehmer code literal -> permutation literal");
  decode_cmd->add_option("code", code_literal, "entries from label n down to 2, e.g. 2,3,2,0")
      ->required();

  // eval
  std::string eval_benchmark, eval_lop, eval_qap, eval_perm, eval_code;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a benchmark or instance objective");
  eval_cmd->add_option("--benchmark", eval_benchmark,
                       "l-onemax|l-leadingzeros|facval|inv|pleadingones|lexval|nval");
  eval_cmd->add_option("--lop", eval_lop, "LOLIB instance file");
  eval_cmd->add_option("--qap", eval_qap, "QAPLIB instance file");
  eval_cmd->add_option("--permutation", eval_perm, "permutation literal");
  eval_cmd->add_option("--code", eval_code, "Lehmer code literal");

  // exhaustive
  std::string ex_lop, ex_qap;
  auto* ex_cmd = app.add_subcommand("exhaustive", "Exhaustive optimum of a small instance");
  ex_cmd->add_option("--lop", ex_lop, "LOLIB instance file");
  ex_cmd->add_option("--qap", ex_qap, "QAPLIB instance file");

  // run
  std::string run_config;
  std::uint64_t run_index = 0;
  auto* run_cmd = app.add_subcommand("run", "Single configured run; prints the run record");
  run_cmd->add_option("--config", run_config, "experiment config JSON file")->required();
  run_cmd->add_option("--run-index", run_index, "run index within the configured stream");

  // experiment
  std::string exp_config;
  auto* exp_cmd = app.add_subcommand("experiment", "Config file -> CSV + JSON summary");
  exp_cmd->add_option("--config", exp_config, "experiment config JSON file")->required();

  // validate
  std::string val_theorem;
  int val_n = 50;
  int val_runs = 1000;
  double val_tol = 0.03;
  std::uint64_t val_seed = 1;
  int val_workers = 0;
  auto* val_cmd = app.add_subcommand("validate", "Statistical theorem validation");
  val_cmd
      ->add_option("--theorem", val_theorem,
                   "thm2|thm4|thm6|thm1-band|thm11-lead|thm15-lead|slope-*")
      ->required();
  val_cmd->add_option("--n", val_n, "problem size");
  val_cmd->add_option("--runs", val_runs, "independent runs");
  val_cmd->add_option("--tolerance", val_tol, "relative tolerance");
  val_cmd->add_option("--seed", val_seed, "master seed");
  val_cmd->add_option("--workers", val_workers, "worker threads (0 = hardware)");

  // stats
  std::string stats_csv;
  auto* stats_cmd = app.add_subcommand("stats", "Metric CSV -> rank table with significance");
  stats_cmd->add_option("--metrics", stats_csv, "CSV: instance,<alg>,<alg>,...")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*encode_cmd) {
      std::cout << lehmer::format_code(lehmer::encode(permutation_argument(perm_literal))) << '\n';
    } else if (*decode_cmd) {
      std::cout << lehmer::format_permutation(lehmer::decode(lehmer::parse_code(code_literal)))
                << '\n';
    } else if (*eval_cmd) {
      if (!eval_lop.empty() || !eval_qap.empty()) {
        if (eval_perm.empty())
          throw std::runtime_error("eval: instance objectives need --permutation");
        const auto sigma = permutation_argument(eval_perm);
        if (!eval_lop.empty()) {
          const auto inst = lehmer::parse_lolib_text(read_file(eval_lop));
          std::cout << lehmer::lop_eval(inst, sigma).to_string() << '\n';
        } else {
          const auto inst = lehmer::parse_qaplib_text(read_file(eval_qap));
          std::cout << lehmer::qap_eval(inst, sigma).to_string() << '\n';
        }
      } else if (!eval_benchmark.empty()) {
        const auto id = lehmer::benchmark_from_name(eval_benchmark);
        lehmer::FitnessValue out;
        std::vector<int> state;
        switch (lehmer::benchmark_domain(id)) {
          case lehmer::SearchDomain::Lehmer:
            if (eval_code.empty()) throw std::runtime_error("eval: Lehmer benchmark needs --code");
            state = lehmer::parse_code(eval_code).entries();
            break;
          case lehmer::SearchDomain::Perm:
            if (eval_perm.empty())
              throw std::runtime_error("eval: permutation benchmark needs --permutation");
            state = permutation_argument(eval_perm).values();
            break;
          case lehmer::SearchDomain::MultiValued: {
            if (eval_code.empty())
              throw std::runtime_error("eval: nval takes --code with x_1..x_n entries");
            std::stringstream ss(eval_code);
            std::string tok;
            while (std::getline(ss, tok, ',')) state.push_back(std::stoi(tok));
            // Constructor validates the [0..n-1] bounds.
            lehmer::BoundedIntVector x(static_cast<int>(state.size()),
                                       static_cast<int>(state.size()), state);
            (void)x;
            break;
          }
        }
        lehmer::benchmark_eval(id, state, out);
        std::cout << out.to_string() << '\n';
      } else {
        throw std::runtime_error("eval: one of --benchmark/--lop/--qap is required");
      }
    } else if (*ex_cmd) {
      if (!ex_lop.empty()) {
        const auto inst = lehmer::parse_lolib_text(read_file(ex_lop));
        const auto [value, sigma] = lehmer::exhaustive_optimum(inst);
        std::cout << value.to_string() << ' ' << lehmer::format_permutation(sigma) << '\n';
      } else if (!ex_qap.empty()) {
        const auto inst = lehmer::parse_qaplib_text(read_file(ex_qap));
        const auto [value, sigma] = lehmer::exhaustive_optimum(inst);
        std::cout << value.to_string() << ' ' << lehmer::format_permutation(sigma) << '\n';
      } else {
        throw std::runtime_error("exhaustive: one of --lop/--qap is required");
      }
    } else if (*run_cmd) {
      const auto cfg =
          lehmer::experiment_config_from_json(nlohmann::json::parse(read_file(run_config)));
      const auto prep = lehmer::prepare_experiment(cfg);
      const auto rec = lehmer::run_single(prep, run_index);
      std::cout << run_record_json(rec).dump(2) << '\n';
    } else if (*exp_cmd) {
      const auto parsed = nlohmann::json::parse(read_file(exp_config));
      const auto cfg = lehmer::experiment_config_from_json(parsed);
      auto agg = lehmer::run_experiment(cfg);
      if (cfg.mode == "fixed-budget") {
        std::vector<lehmer::AggregateResult> suite;
        suite.push_back(std::move(agg));
        lehmer::apply_rpd(suite);
        agg = std::move(suite.front());
      }
      const std::string prefix = cfg.output.empty() ? "experiment" : cfg.output;
      lehmer::write_experiment_outputs(agg, prefix);
      std::cout << lehmer::summary_json(agg).dump(2) << '\n';
    } else if (*val_cmd) {
      const auto rep =
          lehmer::validate_theorem(val_theorem, val_n, val_runs, val_tol, val_seed, val_workers);
      std::cout << lehmer::validation_json(rep).dump(2) << '\n';
      return rep.pass ? 0 : 1;
    } else if (*stats_cmd) {
      run_stats(stats_csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
