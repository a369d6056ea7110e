#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lehmer/permutation.hpp"
#include "lehmer/rng.hpp"

namespace lehmer {

enum class ProbVectorKind { Uniform, Proportional };

namespace detail {

// Fenwick tree over [1..n] used by encode (prefix counts) and decode
// (order-statistic selection).
class Fenwick {
 public:
  explicit Fenwick(int n) : n_(n), tree_(static_cast<std::size_t>(n) + 1, 0) {}

  void add(int pos, int delta) {
    for (; pos <= n_; pos += pos & -pos) tree_[static_cast<std::size_t>(pos)] += delta;
  }

  int prefix_sum(int pos) const {
    int s = 0;
    for (; pos > 0; pos -= pos & -pos) s += tree_[static_cast<std::size_t>(pos)];
    return s;
  }

  // Smallest pos with prefix_sum(pos) >= k, assuming k >= 1.
  int select(int k) const {
    int pos = 0;
    int mask = 1;
    while ((mask << 1) <= n_) mask <<= 1;
    for (; mask > 0; mask >>= 1) {
      const int next = pos + mask;
      if (next <= n_ && tree_[static_cast<std::size_t>(next)] < k) {
        pos = next;
        k -= tree_[static_cast<std::size_t>(next)];
      }
    }
    return pos + 1;
  }

 private:
  int n_;
  std::vector<int> tree_;
};

}  // namespace detail

// Lehmer code of size n: one entry per label i in [2..n], each in
// [0..i-1]; the label-1 entry is identically zero and not stored.
// Storage is label-descending: entries()[0] holds label n, entries()[k]
// holds label n-k. The entry at label n-i+1 corresponds to permutation
// position i, so entries()[i-1] belongs to position i. All label/index
// translation lives in entry_for_label/storage_index.
class LehmerCode {
 public:
  explicit LehmerCode(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("LehmerCode: n must be >= 1");
    entries_.assign(static_cast<std::size_t>(n - 1), 0);
  }

  // entries given label-descending (label n first).
  LehmerCode(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
    if (n < 1) throw std::invalid_argument("LehmerCode: n must be >= 1");
    if (entries_.size() != static_cast<std::size_t>(n - 1))
      throw std::invalid_argument("LehmerCode: expected n-1 entries");
    for (int label = n; label >= 2; --label) {
      const int e = entries_[storage_index(label)];
      if (e < 0 || e > label - 1)
        throw std::invalid_argument("LehmerCode: entry at label " + std::to_string(label) +
                                    " outside [0.." + std::to_string(label - 1) + "]");
    }
  }

  struct unchecked_tag {};
  LehmerCode(unchecked_tag, int n, std::vector<int> entries)
      : n_(n), entries_(std::move(entries)) {}

  int size() const { return n_; }

  std::size_t storage_index(int label) const { return static_cast<std::size_t>(n_ - label); }

  // label in [1..n]; label 1 is implicitly 0.
  int entry_for_label(int label) const {
    if (label < 1 || label > n_) throw std::invalid_argument("LehmerCode: label out of range");
    if (label == 1) return 0;
    return entries_[storage_index(label)];
  }

  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const LehmerCode& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
  }

 private:
  int n_;
  std::vector<int> entries_;  // label n first
};

// L(sigma)_{n-i+1} = #{j > i : sigma(j) < sigma(i)}. O(n log n) via a
// Fenwick tree scanned right to left.
inline LehmerCode encode(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> entries(static_cast<std::size_t>(n - 1), 0);
  detail::Fenwick seen(n);
  seen.add(sigma(n), 1);
  for (int i = n - 1; i >= 1; --i) {
    const int v = sigma(i);
    entries[static_cast<std::size_t>(i - 1)] = seen.prefix_sum(v - 1);
    seen.add(v, 1);
  }
  return LehmerCode(LehmerCode::unchecked_tag{}, n, std::move(entries));
}

// sigma(i) is the (c_i + 1)-th smallest value not yet used, where c_i is
// the entry at position i. Order-statistic selection over a Fenwick tree.
inline Permutation decode(const LehmerCode& code) {
  const int n = code.size();
  detail::Fenwick avail(n);
  for (int v = 1; v <= n; ++v) avail.add(v, 1);
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int c = i < n ? code.entries()[static_cast<std::size_t>(i - 1)] : 0;
    const int v = avail.select(c + 1);
    out[static_cast<std::size_t>(i - 1)] = v;
    avail.add(v, -1);
  }
  return Permutation(Permutation::unchecked_tag{}, std::move(out));
}

// Independent uniform draw per label; induces the uniform distribution
// on S_n through the bijection.
inline LehmerCode sample_uniform_code(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_uniform_code: n must be >= 1");
  std::vector<int> entries(static_cast<std::size_t>(n - 1));
  for (int label = n; label >= 2; --label)
    entries[static_cast<std::size_t>(n - label)] =
        static_cast<int>(rng.bounded(static_cast<std::uint64_t>(label)));
  return LehmerCode(LehmerCode::unchecked_tag{}, n, std::move(entries));
}

// --- Step operators -------------------------------------------------------

// Uniform resample over [0..label-1] \ {x}.
inline int step_uniform(int label, int x, Rng& rng) {
  if (label < 2) throw std::invalid_argument("step_uniform: label must be >= 2");
  int v = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(label - 1)));
  if (v >= x) ++v;
  return v;
}

// max{0, x-1} with probability 1/2, min{label-1, x+1} otherwise.
inline int step_unit(int label, int x, Rng& rng) {
  if (label < 2) throw std::invalid_argument("step_unit: label must be >= 2");
  if (rng.next_bool()) return x > 0 ? x - 1 : 0;
  return x < label - 1 ? x + 1 : label - 1;
}

// Step size j in [1..label-1] with probability proportional to 1/j,
// direction a fair coin; the result is clamped to [0, label-1].
inline int step_harmonic(int label, int x, Rng& rng) {
  if (label < 2) throw std::invalid_argument("step_harmonic: label must be >= 2");
  const int max_step = label - 1;
  double h = 0.0;
  for (int j = 1; j <= max_step; ++j) h += 1.0 / j;
  double u = rng.next_double() * h;
  int j = 1;
  while (j < max_step) {
    u -= 1.0 / j;
    if (u < 0.0) break;
    ++j;
  }
  const int target = rng.next_bool() ? x - j : x + j;
  return std::clamp(target, 0, label - 1);
}

// Entries indexed ascending by label: result[0] is p_2, result[n-2] is p_n.
inline std::vector<double> probability_vector(ProbVectorKind kind, int n) {
  if (n < 2) throw std::invalid_argument("probability_vector: n must be >= 2");
  std::vector<double> p(static_cast<std::size_t>(n - 1));
  for (int label = 2; label <= n; ++label) {
    const std::size_t idx = static_cast<std::size_t>(label - 2);
    p[idx] = kind == ProbVectorKind::Uniform
                 ? 1.0 / (n - 1)
                 : 2.0 * (label - 1) / (static_cast<double>(n) * (n - 1));
  }
  return p;
}

// Adjacent swap of permutation positions i, i+1 computed purely in code
// space: with A := (entry[label n-i+1] <= entry[label n-i]), the two
// entries swap and one of them changes by one.
inline LehmerCode adjacent_swap_effect(const LehmerCode& code, int i) {
  const int n = code.size();
  if (i < 1 || i >= n) throw std::invalid_argument("adjacent_swap_effect: index out of range");
  std::vector<int> e = code.entries();
  // Position i lives at storage index i-1 (label n-i+1); position i+1 at
  // index i (label n-i). For i = n-1 the second entry is the implicit
  // label-1 zero.
  const int hi = e[static_cast<std::size_t>(i - 1)];
  const int lo = i < n - 1 ? e[static_cast<std::size_t>(i)] : 0;
  const bool a = hi <= lo;
  e[static_cast<std::size_t>(i - 1)] = lo + (a ? 1 : 0);
  if (i < n - 1) e[static_cast<std::size_t>(i)] = hi - (a ? 0 : 1);
  return LehmerCode(LehmerCode::unchecked_tag{}, n, std::move(e));
}

// Comma-separated literal from label n down to label 2, e.g. "2,3,2,0".
inline std::string format_code(const LehmerCode& code) {
  std::string out;
  for (std::size_t i = 0; i < code.entries().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(code.entries()[i]);
  }
  return out;
}

inline LehmerCode parse_code(const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_code: bad token '" + token + "'");
    }
    if (pos != token.size())
      throw std::invalid_argument("parse_code: bad token '" + token + "'");
    entries.push_back(value);
  }
  const int n = static_cast<int>(entries.size()) + 1;
  return LehmerCode(n, std::move(entries));
}

inline ProbVectorKind prob_vector_from_name(const std::string& name) {
  if (name == "uniform") return ProbVectorKind::Uniform;
  if (name == "proportional") return ProbVectorKind::Proportional;
  throw std::invalid_argument("unknown probability vector: " + name);
}

inline std::string prob_vector_name(ProbVectorKind k) {
  return k == ProbVectorKind::Uniform ? "uniform" : "proportional";
}

}  // namespace lehmer
