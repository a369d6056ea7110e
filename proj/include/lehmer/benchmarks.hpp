#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lehmer/fitness.hpp"
#include "lehmer/lehmer_code.hpp"
#include "lehmer/permutation.hpp"

namespace lehmer {

// Element of the multi-valued search space [r]^n: `length` entries, each
// in [0..bound-1].
struct BoundedIntVector {
  int length;
  int bound;
  std::vector<int> entries;

  BoundedIntVector(int length_, int bound_, std::vector<int> entries_)
      : length(length_), bound(bound_), entries(std::move(entries_)) {
    if (length < 1 || bound < 1)
      throw std::invalid_argument("BoundedIntVector: length and bound must be positive");
    if (entries.size() != static_cast<std::size_t>(length))
      throw std::invalid_argument("BoundedIntVector: wrong entry count");
    for (int e : entries)
      if (e < 0 || e >= bound)
        throw std::invalid_argument("BoundedIntVector: entry outside [0..bound-1]");
  }
};

namespace detail {

// Raw-state evaluators used by the search loops. Lehmer states are entry
// vectors (label n first); multi-valued states are x_1..x_n.

inline void eval_l_onemax(const std::vector<int>& entries, FitnessValue& out) {
  long long s = 0;
  for (int e : entries) s += e;
  out.set_scalar(s);
}

inline void eval_l_leadingzeros(const std::vector<int>& entries, FitnessValue& out) {
  const std::size_t m = entries.size();
  std::size_t i = 0;
  while (i < m && entries[i] == 0) ++i;
  // All stored labels zero: the implicit label-1 zero joins the prefix.
  out.set_scalar(i == m ? static_cast<long long>(m) + 1 : static_cast<long long>(i));
}

inline void eval_facval_key(const std::vector<int>& entries, FitnessValue& out) {
  out.assign_key(entries.begin(), entries.end());
}

// x_1..x_n with weight n^{i-1}: position n is most significant.
inline void eval_nval_key(const std::vector<int>& x, FitnessValue& out) {
  out.assign_key(x.rbegin(), x.rend());
}

inline void eval_pleadingones(const std::vector<int>& perm, FitnessValue& out) {
  std::size_t i = 0;
  while (i < perm.size() && perm[i] == static_cast<int>(i) + 1) ++i;
  out.set_scalar(static_cast<long long>(i));
}

inline void eval_inv(const std::vector<int>& perm, FitnessValue& out) {
  std::vector<int> v = perm;
  std::vector<int> buf(v.size());
  out.set_scalar(merge_count(v, buf, 0, v.size()));
}

}  // namespace detail

// --- Lehmer-space benchmarks ---------------------------------------------

// Sum of the code entries. Minimize; 0 iff the code is all-zero.
inline FitnessValue l_onemax(const LehmerCode& code) {
  FitnessValue f;
  detail::eval_l_onemax(code.entries(), f);
  return f;
}

// Length of the maximal all-zero prefix from label n downward, with the
// implicit label-1 zero included. Maximize; range [0..n], n-1 unattainable.
inline FitnessValue l_leadingzeros(const LehmerCode& code) {
  FitnessValue f;
  detail::eval_l_leadingzeros(code.entries(), f);
  return f;
}

// Sum of (i-1)! * l_i as a lexicographic key (label n most significant).
// Key comparison equals comparing the factorial sums: one unit at label i
// outweighs the maximal contribution of all lower labels.
inline FitnessValue facval(const LehmerCode& code) {
  FitnessValue f;
  detail::eval_facval_key(code.entries(), f);
  return f;
}

// Exact scalar Sum (i-1)! * l_i; only representable in 64 bits for n <= 20.
inline long long facval_scalar(const LehmerCode& code) {
  if (code.size() > 20)
    throw std::domain_error("facval_scalar: exact 64-bit value requires n <= 20");
  long long factorial = 1;
  long long sum = 0;
  for (int label = 2; label <= code.size(); ++label) {
    // factorial == (label-1)! after this multiply
    factorial *= label - 1;
    sum += factorial * code.entry_for_label(label);
  }
  return sum;
}

// --- Permutation-space benchmarks ----------------------------------------

inline FitnessValue inv(const Permutation& sigma) {
  return FitnessValue::scalar(inversions(sigma));
}

// Longest prefix with sigma(j) = j. Maximize; n-1 unattainable.
inline FitnessValue pleadingones(const Permutation& sigma) {
  FitnessValue f;
  detail::eval_pleadingones(sigma.values(), f);
  return f;
}

// Rank of sigma in the lexicographic order of S_n, as a lexicographic key.
inline FitnessValue lexval(const Permutation& sigma) { return facval(encode(sigma)); }

inline long long lexval_scalar(const Permutation& sigma) { return facval_scalar(encode(sigma)); }

// --- Multi-valued benchmark ----------------------------------------------

// Sum of n^{i-1} * x_i as a lexicographic key (position n most significant).
inline FitnessValue nval(const BoundedIntVector& x) {
  if (x.bound != x.length)
    throw std::invalid_argument("nval: requires bound == length");
  FitnessValue f;
  detail::eval_nval_key(x.entries, f);
  return f;
}

inline long long nval_scalar(const BoundedIntVector& x) {
  if (x.bound != x.length)
    throw std::invalid_argument("nval_scalar: requires bound == length");
  if (x.length > 15)
    throw std::domain_error("nval_scalar: exact 64-bit value requires n <= 15");
  long long weight = 1;
  long long sum = 0;
  for (int i = 0; i < x.length; ++i) {
    sum += weight * x.entries[static_cast<std::size_t>(i)];
    weight *= x.length;
  }
  return sum;
}

// --- Registry -------------------------------------------------------------

enum class BenchmarkId { LOneMax, LLeadingZeros, FacVal, Inv, PLeadingOnes, LexVal, NVal };

enum class SearchDomain { Lehmer, Perm, MultiValued };

inline BenchmarkId benchmark_from_name(const std::string& name) {
  if (name == "l-onemax") return BenchmarkId::LOneMax;
  if (name == "l-leadingzeros") return BenchmarkId::LLeadingZeros;
  if (name == "facval") return BenchmarkId::FacVal;
  if (name == "inv") return BenchmarkId::Inv;
  if (name == "pleadingones") return BenchmarkId::PLeadingOnes;
  if (name == "lexval") return BenchmarkId::LexVal;
  if (name == "nval") return BenchmarkId::NVal;
  throw std::invalid_argument("unknown benchmark: " + name);
}

inline std::string benchmark_name(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::LOneMax: return "l-onemax";
    case BenchmarkId::LLeadingZeros: return "l-leadingzeros";
    case BenchmarkId::FacVal: return "facval";
    case BenchmarkId::Inv: return "inv";
    case BenchmarkId::PLeadingOnes: return "pleadingones";
    case BenchmarkId::LexVal: return "lexval";
    case BenchmarkId::NVal: return "nval";
  }
  throw std::invalid_argument("unknown benchmark id");
}

inline Direction benchmark_direction(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::LLeadingZeros:
    case BenchmarkId::PLeadingOnes:
      return Direction::Maximize;
    default:
      return Direction::Minimize;
  }
}

inline SearchDomain benchmark_domain(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::LOneMax:
    case BenchmarkId::LLeadingZeros:
    case BenchmarkId::FacVal:
      return SearchDomain::Lehmer;
    case BenchmarkId::Inv:
    case BenchmarkId::PLeadingOnes:
    case BenchmarkId::LexVal:
      return SearchDomain::Perm;
    case BenchmarkId::NVal:
      return SearchDomain::MultiValued;
  }
  throw std::invalid_argument("unknown benchmark id");
}

inline FitnessValue benchmark_optimum(BenchmarkId id, int n) {
  switch (id) {
    case BenchmarkId::LOneMax:
    case BenchmarkId::Inv:
      return FitnessValue::scalar(0);
    case BenchmarkId::LLeadingZeros:
    case BenchmarkId::PLeadingOnes:
      return FitnessValue::scalar(n);
    case BenchmarkId::FacVal:
    case BenchmarkId::LexVal:
      return FitnessValue::lex_key(std::vector<long long>(static_cast<std::size_t>(n - 1), 0));
    case BenchmarkId::NVal:
      return FitnessValue::lex_key(std::vector<long long>(static_cast<std::size_t>(n), 0));
  }
  throw std::invalid_argument("unknown benchmark id");
}

// Evaluates a raw search state (Lehmer entries, permutation values, or
// multi-valued entries, per benchmark_domain) against a benchmark.
inline void benchmark_eval(BenchmarkId id, const std::vector<int>& state, FitnessValue& out) {
  switch (id) {
    case BenchmarkId::LOneMax: detail::eval_l_onemax(state, out); return;
    case BenchmarkId::LLeadingZeros: detail::eval_l_leadingzeros(state, out); return;
    case BenchmarkId::FacVal: detail::eval_facval_key(state, out); return;
    case BenchmarkId::Inv: detail::eval_inv(state, out); return;
    case BenchmarkId::PLeadingOnes: detail::eval_pleadingones(state, out); return;
    case BenchmarkId::LexVal: {
      Permutation p(Permutation::unchecked_tag{}, state);
      out = lexval(p);
      return;
    }
    case BenchmarkId::NVal: detail::eval_nval_key(state, out); return;
  }
  throw std::invalid_argument("unknown benchmark id");
}

}  // namespace lehmer
