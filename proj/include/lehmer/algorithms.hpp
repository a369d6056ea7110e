#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lehmer/fitness.hpp"
#include "lehmer/lehmer_code.hpp"
#include "lehmer/permutation.hpp"
#include "lehmer/rng.hpp"

namespace lehmer {

enum class StepOp { Uniform, Unit, Harmonic };

inline StepOp step_op_from_name(const std::string& name) {
  if (name == "uniform") return StepOp::Uniform;
  if (name == "unit") return StepOp::Unit;
  if (name == "harmonic") return StepOp::Harmonic;
  throw std::invalid_argument("unknown step operator: " + name);
}

inline std::string step_op_name(StepOp op) {
  switch (op) {
    case StepOp::Uniform: return "uniform";
    case StepOp::Unit: return "unit";
    case StepOp::Harmonic: return "harmonic";
  }
  return "";
}

struct StoppingCondition {
  std::optional<FitnessValue> target;  // stop when reached, per direction
  std::uint64_t budget = 1;            // maximum fitness evaluations
};

struct RunRecord {
  std::uint64_t seed = 0;
  std::uint64_t evaluations_used = 0;
  FitnessValue best_fitness;
  bool success = false;
  // Improvement events as (evaluation index, fitness); populated only on
  // request. The initial sample is event 1.
  std::vector<std::pair<std::uint64_t, FitnessValue>> trajectory;
};

namespace detail {

inline int apply_step(StepOp op, int label, int x, Rng& rng) {
  switch (op) {
    case StepOp::Uniform: return step_uniform(label, x, rng);
    case StepOp::Unit: return step_unit(label, x, rng);
    case StepOp::Harmonic: return step_harmonic(label, x, rng);
  }
  return x;
}

// Label sampled by the probability vector: uniform over [2..n], or
// proportional to label-1 (triangular inversion, integer-exact).
inline int sample_label(ProbVectorKind pv, int n, Rng& rng) {
  if (pv == ProbVectorKind::Uniform)
    return 2 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - 1)));
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t t = rng.bounded(total);
  // Smallest m with m(m+1)/2 > t; then label = m + 1.
  auto m = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(t) + 1.0) - 1.0) / 2.0);
  while (m * (m + 1) / 2 > t) --m;
  while ((m + 1) * (m + 2) / 2 <= t) ++m;
  return static_cast<int>(m) + 2;
}

}  // namespace detail

// Randomized local search over the Lehmer code space: one label mutated
// per iteration, elitist acceptance. The initial sample counts as
// evaluation 1; every iteration counts one evaluation.
template <class Obj>
RunRecord rls_run(int n, Obj&& objective, Direction dir, StepOp op, ProbVectorKind pv,
                  const StoppingCondition& stop, Rng& rng, std::uint64_t seed = 0,
                  const LehmerCode* initial = nullptr, bool record_trajectory = false) {
  if (n < 2) throw std::invalid_argument("rls_run: n must be >= 2");
  RunRecord rec;
  rec.seed = seed;

  std::vector<int> x =
      initial ? initial->entries() : sample_uniform_code(n, rng).entries();
  FitnessValue fx;
  objective(x, fx);
  rec.evaluations_used = 1;
  if (record_trajectory) rec.trajectory.emplace_back(1, fx);
  rec.success = stop.target && not_worse(fx, *stop.target, dir);

  FitnessValue fy;
  while (!rec.success && rec.evaluations_used < stop.budget) {
    const int label = detail::sample_label(pv, n, rng);
    const std::size_t idx = static_cast<std::size_t>(n - label);
    const int old = x[idx];
    x[idx] = detail::apply_step(op, label, old, rng);
    objective(x, fy);
    ++rec.evaluations_used;
    if (not_worse(fy, fx, dir)) {
      if (record_trajectory && strictly_better(fy, fx, dir))
        rec.trajectory.emplace_back(rec.evaluations_used, fy);
      std::swap(fx, fy);
      rec.success = stop.target && not_worse(fx, *stop.target, dir);
    } else {
      x[idx] = old;
    }
  }
  rec.best_fitness = fx;
  return rec;
}

// (1+1)-EA over the Lehmer code space: each label independently mutated
// with probability 1/(n-1); elitist acceptance; one evaluation per
// iteration (offspring identical to the parent still counts).
template <class Obj>
RunRecord ea_lehmer_run(int n, Obj&& objective, Direction dir, StepOp op,
                        const StoppingCondition& stop, Rng& rng, std::uint64_t seed = 0,
                        const LehmerCode* initial = nullptr, bool record_trajectory = false) {
  if (n < 2) throw std::invalid_argument("ea_lehmer_run: n must be >= 2");
  RunRecord rec;
  rec.seed = seed;

  std::vector<int> x =
      initial ? initial->entries() : sample_uniform_code(n, rng).entries();
  const std::size_t m = x.size();
  FitnessValue fx;
  objective(x, fx);
  rec.evaluations_used = 1;
  if (record_trajectory) rec.trajectory.emplace_back(1, fx);
  rec.success = stop.target && not_worse(fx, *stop.target, dir);

  const double p = 1.0 / (n - 1);
  FitnessValue fy;
  std::vector<std::pair<std::size_t, int>> undo;
  while (!rec.success && rec.evaluations_used < stop.budget) {
    undo.clear();
    // Geometric skips select exactly the positions a per-position
    // Bernoulli(1/(n-1)) sweep would.
    std::size_t idx = rng.geometric_failures(p);
    while (idx < m) {
      const int label = n - static_cast<int>(idx);
      const int old = x[idx];
      undo.emplace_back(idx, old);
      x[idx] = detail::apply_step(op, label, old, rng);
      idx += 1 + rng.geometric_failures(p);
    }
    objective(x, fy);
    ++rec.evaluations_used;
    if (not_worse(fy, fx, dir)) {
      if (record_trajectory && strictly_better(fy, fx, dir))
        rec.trajectory.emplace_back(rec.evaluations_used, fy);
      std::swap(fx, fy);
      rec.success = stop.target && not_worse(fx, *stop.target, dir);
    } else {
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) x[it->first] = it->second;
    }
  }
  rec.best_fitness = fx;
  return rec;
}

// Permutation-space (1+1)-EA: k ~ Poi(1) elementary moves per iteration.
// With count_noop_evals == false, iterations whose offspring equals the
// parent are not charged to the budget. poisson_offset = 1 reproduces the
// k = s + 1 convention of earlier analyses.
template <class Obj>
RunRecord ea_perm_run(int n, Obj&& objective, Direction dir, PermScheme scheme,
                      const StoppingCondition& stop, Rng& rng, bool count_noop_evals,
                      int poisson_offset = 0, std::uint64_t seed = 0,
                      const Permutation* initial = nullptr, bool record_trajectory = false) {
  if (n < 2) throw std::invalid_argument("ea_perm_run: n must be >= 2");
  RunRecord rec;
  rec.seed = seed;

  std::vector<int> x;
  if (initial) {
    x = initial->values();
  } else {
    x.resize(static_cast<std::size_t>(n));
    detail::fisher_yates(x, rng);
  }
  FitnessValue fx;
  objective(x, fx);
  rec.evaluations_used = 1;
  if (record_trajectory) rec.trajectory.emplace_back(1, fx);
  rec.success = stop.target && not_worse(fx, *stop.target, dir);

  FitnessValue fy;
  std::vector<int> y;
  while (!rec.success && rec.evaluations_used < stop.budget) {
    const int k = rng.poisson_one() + poisson_offset;
    y = x;
    if (k > 0) detail::mutate_inplace(y, scheme, k, rng);
    if (!count_noop_evals && y == x) continue;
    objective(y, fy);
    ++rec.evaluations_used;
    if (not_worse(fy, fx, dir)) {
      if (record_trajectory && strictly_better(fy, fx, dir))
        rec.trajectory.emplace_back(rec.evaluations_used, fy);
      std::swap(x, y);
      std::swap(fx, fy);
      rec.success = stop.target && not_worse(fx, *stop.target, dir);
    }
  }
  rec.best_fitness = fx;
  return rec;
}

// (1+1)-EA over [n]^n: each position independently mutated with
// probability 1/n using the uniform resample over [0..n-1] \ {x_i}.
template <class Obj>
RunRecord ea_multivalued_run(int n, Obj&& objective, Direction dir,
                             const StoppingCondition& stop, Rng& rng, std::uint64_t seed = 0,
                             const std::vector<int>* initial = nullptr,
                             bool record_trajectory = false) {
  if (n < 1) throw std::invalid_argument("ea_multivalued_run: n must be >= 1");
  RunRecord rec;
  rec.seed = seed;

  std::vector<int> x(static_cast<std::size_t>(n));
  if (initial) {
    x = *initial;
  } else {
    for (auto& e : x) e = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
  }
  FitnessValue fx;
  objective(x, fx);
  rec.evaluations_used = 1;
  if (record_trajectory) rec.trajectory.emplace_back(1, fx);
  rec.success = stop.target && not_worse(fx, *stop.target, dir);

  const double p = 1.0 / n;
  FitnessValue fy;
  std::vector<std::pair<std::size_t, int>> undo;
  while (!rec.success && rec.evaluations_used < stop.budget) {
    undo.clear();
    std::size_t idx = rng.geometric_failures(p);
    while (idx < x.size()) {
      const int old = x[idx];
      undo.emplace_back(idx, old);
      int v = n == 1 ? 0 : static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - 1)));
      if (v >= old) ++v;
      if (n == 1) v = old;
      x[idx] = v;
      idx += 1 + rng.geometric_failures(p);
    }
    objective(x, fy);
    ++rec.evaluations_used;
    if (not_worse(fy, fx, dir)) {
      if (record_trajectory && strictly_better(fy, fx, dir))
        rec.trajectory.emplace_back(rec.evaluations_used, fy);
      std::swap(fx, fy);
      rec.success = stop.target && not_worse(fx, *stop.target, dir);
    } else {
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) x[it->first] = it->second;
    }
  }
  rec.best_fitness = fx;
  return rec;
}

}  // namespace lehmer
