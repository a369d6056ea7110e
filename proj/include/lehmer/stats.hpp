#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lehmer/fitness.hpp"

namespace lehmer {

struct RankSummary {
  std::vector<std::string> algorithms;
  std::vector<double> average_rank;
  std::vector<double> p_value;     // vs the best-ranked algorithm; NaN for best
  std::vector<double> p_adjusted;  // Benjamini-Hochberg
  std::vector<std::string> annotation;  // best | not-significantly-different | significantly-worse
  std::size_t best_index = 0;
};

namespace detail {

// Ranks with ties averaged; smaller value = rank 1.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t m = values.size();
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(m, 0.0);
  std::size_t i = 0;
  while (i < m) {
    std::size_t j = i;
    while (j + 1 < m && values[order[j + 1]] == values[order[i]]) ++j;
    const double r = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

inline double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace detail

// Two-sided Wilcoxon signed-rank test on paired samples, normal
// approximation with tie correction; zero differences dropped. Returns
// the p-value, or 1.0 when no nonzero differences remain.
inline double wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("wilcoxon_signed_rank: length mismatch");
  std::vector<double> diff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d != 0.0) diff.push_back(d);
  }
  const std::size_t m = diff.size();
  if (m == 0) return 1.0;

  std::vector<double> absd(m);
  for (std::size_t i = 0; i < m; ++i) absd[i] = std::abs(diff[i]);
  const auto ranks = detail::average_ranks(absd);

  double w_plus = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (diff[i] > 0.0) w_plus += ranks[i];

  const double md = static_cast<double>(m);
  const double mean = md * (md + 1.0) / 4.0;
  double tie_term = 0.0;
  {
    std::vector<double> sorted(absd);
    std::sort(sorted.begin(), sorted.end());
    std::size_t i = 0;
    while (i < sorted.size()) {
      std::size_t j = i;
      while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
      const double t = static_cast<double>(j - i + 1);
      tie_term += t * t * t - t;
      i = j + 1;
    }
  }
  const double var = md * (md + 1.0) * (2.0 * md + 1.0) / 24.0 - tie_term / 48.0;
  if (var <= 0.0) return 1.0;
  // Continuity correction toward the mean.
  const double num = w_plus - mean;
  const double z = (num - (num > 0 ? 0.5 : num < 0 ? -0.5 : 0.0)) / std::sqrt(var);
  return std::min(1.0, 2.0 * detail::normal_sf(std::abs(z)));
}

// Benjamini-Hochberg adjusted p-values (monotone step-up).
inline std::vector<double> benjamini_hochberg(const std::vector<double>& p) {
  const std::size_t m = p.size();
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return p[a] < p[b]; });
  std::vector<double> adjusted(m, 0.0);
  double running = 1.0;
  for (std::size_t k = m; k-- > 0;) {
    const double candidate = p[order[k]] * static_cast<double>(m) / static_cast<double>(k + 1);
    running = std::min(running, candidate);
    adjusted[order[k]] = running;
  }
  return adjusted;
}

// Average ranks per algorithm over per-instance paired metric values
// (lower metric = better), pairwise Wilcoxon signed-rank tests of every
// algorithm against the best-ranked one, BH adjustment at 0.05.
// metric[instance][algorithm].
inline RankSummary wilcoxon_bh(const std::vector<std::string>& algorithms,
                               const std::vector<std::vector<double>>& metric,
                               double alpha = 0.05) {
  const std::size_t num_algs = algorithms.size();
  if (num_algs < 2) throw std::invalid_argument("wilcoxon_bh: need >= 2 algorithms");
  if (metric.size() < 6)
    throw std::domain_error("wilcoxon_bh: need >= 6 instances for the normal approximation");
  for (const auto& row : metric)
    if (row.size() != num_algs)
      throw std::invalid_argument("wilcoxon_bh: ragged metric table");

  RankSummary out;
  out.algorithms = algorithms;
  out.average_rank.assign(num_algs, 0.0);
  for (const auto& row : metric) {
    const auto ranks = detail::average_ranks(row);
    for (std::size_t a = 0; a < num_algs; ++a) out.average_rank[a] += ranks[a];
  }
  for (auto& r : out.average_rank) r /= static_cast<double>(metric.size());

  out.best_index = static_cast<std::size_t>(
      std::min_element(out.average_rank.begin(), out.average_rank.end()) -
      out.average_rank.begin());

  std::vector<double> best_col(metric.size());
  for (std::size_t i = 0; i < metric.size(); ++i) best_col[i] = metric[i][out.best_index];

  out.p_value.assign(num_algs, std::numeric_limits<double>::quiet_NaN());
  std::vector<double> tested;
  std::vector<std::size_t> tested_idx;
  for (std::size_t a = 0; a < num_algs; ++a) {
    if (a == out.best_index) continue;
    std::vector<double> col(metric.size());
    for (std::size_t i = 0; i < metric.size(); ++i) col[i] = metric[i][a];
    const double p = wilcoxon_signed_rank(col, best_col);
    out.p_value[a] = p;
    tested.push_back(p);
    tested_idx.push_back(a);
  }

  out.p_adjusted.assign(num_algs, std::numeric_limits<double>::quiet_NaN());
  const auto adjusted = benjamini_hochberg(tested);
  for (std::size_t k = 0; k < tested_idx.size(); ++k)
    out.p_adjusted[tested_idx[k]] = adjusted[k];

  out.annotation.assign(num_algs, "");
  for (std::size_t a = 0; a < num_algs; ++a) {
    if (a == out.best_index) {
      out.annotation[a] = "best";
    } else if (out.p_adjusted[a] <= alpha && out.average_rank[a] > out.average_rank[out.best_index]) {
      out.annotation[a] = "significantly-worse";
    } else {
      out.annotation[a] = "not-significantly-different";
    }
  }
  return out;
}

}  // namespace lehmer
