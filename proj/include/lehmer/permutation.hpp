#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lehmer/rng.hpp"

namespace lehmer {

enum class PermScheme { Transposition, AdjacentSwap, Insertion };

namespace detail {

// In-place elementary moves on the raw vector representation (0-based
// storage, 1-based indices in the API). No validation; callers check.

inline void adjacent_swap_inplace(std::vector<int>& v, int i) {
  std::swap(v[i - 1], v[i]);
}

inline void transposition_inplace(std::vector<int>& v, int i, int j) {
  std::swap(v[i - 1], v[j - 1]);
}

inline void jump_inplace(std::vector<int>& v, int i, int j) {
  const int moved = v[i - 1];
  if (j > i) {
    for (int k = i; k < j; ++k) v[k - 1] = v[k];
  } else {
    for (int k = i; k > j; --k) v[k - 1] = v[k - 2];
  }
  v[j - 1] = moved;
}

// Samples an unordered pair {i, j}, i != j, uniformly; writes i < j.
inline void sample_pair(int n, Rng& rng, int& i, int& j) {
  i = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
  j = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - 1)));
  if (j >= i) ++j;
  if (i > j) std::swap(i, j);
}

inline void mutate_inplace(std::vector<int>& v, PermScheme scheme, int k, Rng& rng) {
  const int n = static_cast<int>(v.size());
  for (int step = 0; step < k; ++step) {
    switch (scheme) {
      case PermScheme::Transposition: {
        int i, j;
        sample_pair(n, rng, i, j);
        transposition_inplace(v, i, j);
        break;
      }
      case PermScheme::AdjacentSwap: {
        const int i = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - 1)));
        adjacent_swap_inplace(v, i);
        break;
      }
      case PermScheme::Insertion: {
        // Ordered (i, j), i != j, uniform over the n(n-1) pairs.
        const int i = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
        int j = 1 + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - 1)));
        if (j >= i) ++j;
        jump_inplace(v, i, j);
        break;
      }
    }
  }
}

inline void fisher_yates(std::vector<int>& v, Rng& rng) {
  const int n = static_cast<int>(v.size());
  std::iota(v.begin(), v.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i + 1)));
    std::swap(v[i], v[j]);
  }
}

// Counts inversions of v[lo..hi) via merge sort; buf is scratch.
inline long long merge_count(std::vector<int>& v, std::vector<int>& buf,
                             std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  long long count = merge_count(v, buf, lo, mid) + merge_count(v, buf, mid, hi);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    if (v[a] <= v[b]) {
      buf[out++] = v[a++];
    } else {
      count += static_cast<long long>(mid - a);
      buf[out++] = v[b++];
    }
  }
  while (a < mid) buf[out++] = v[a++];
  while (b < hi) buf[out++] = v[b++];
  std::copy(buf.begin() + static_cast<long>(lo), buf.begin() + static_cast<long>(hi),
            v.begin() + static_cast<long>(lo));
  return count;
}

}  // namespace detail

// A permutation of [1..n] in vector form: values()[i-1] = sigma(i).
// Immutable after construction; every operation returns a new value.
class Permutation {
 public:
  explicit Permutation(std::vector<int> values) : v_(std::move(values)) {
    if (v_.empty()) throw std::invalid_argument("Permutation: n must be >= 1");
    std::vector<char> seen(v_.size(), 0);
    for (int x : v_) {
      if (x < 1 || x > static_cast<int>(v_.size()) || seen[static_cast<std::size_t>(x - 1)])
        throw std::invalid_argument("Permutation: values must be a bijection of [1..n]");
      seen[static_cast<std::size_t>(x - 1)] = 1;
    }
  }

  static Permutation identity(int n) {
    if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(unchecked_tag{}, std::move(v));
  }

  int size() const { return static_cast<int>(v_.size()); }

  // sigma(i), 1-indexed.
  int operator()(int i) const { return v_[static_cast<std::size_t>(i - 1)]; }

  const std::vector<int>& values() const { return v_; }

  bool operator==(const Permutation& other) const { return v_ == other.v_; }

  struct unchecked_tag {};
  Permutation(unchecked_tag, std::vector<int> values) : v_(std::move(values)) {}

 private:
  std::vector<int> v_;
};

// (tau o sigma)(i) = tau(sigma(i)).
inline Permutation compose(const Permutation& tau, const Permutation& sigma) {
  if (tau.size() != sigma.size())
    throw std::invalid_argument("compose: size mismatch");
  std::vector<int> out(static_cast<std::size_t>(tau.size()));
  for (int i = 1; i <= tau.size(); ++i)
    out[static_cast<std::size_t>(i - 1)] = tau(sigma(i));
  return Permutation(Permutation::unchecked_tag{}, std::move(out));
}

inline Permutation inverse(const Permutation& sigma) {
  std::vector<int> out(static_cast<std::size_t>(sigma.size()));
  for (int i = 1; i <= sigma.size(); ++i)
    out[static_cast<std::size_t>(sigma(i) - 1)] = i;
  return Permutation(Permutation::unchecked_tag{}, std::move(out));
}

// #{(i,j) : i < j, sigma(i) > sigma(j)}, via merge counting.
inline long long inversions(const Permutation& sigma) {
  std::vector<int> v = sigma.values();
  std::vector<int> buf(v.size());
  return detail::merge_count(v, buf, 0, v.size());
}

inline Permutation apply_adjacent_swap(const Permutation& sigma, int i) {
  if (i < 1 || i >= sigma.size())
    throw std::invalid_argument("apply_adjacent_swap: index out of range");
  std::vector<int> v = sigma.values();
  detail::adjacent_swap_inplace(v, i);
  return Permutation(Permutation::unchecked_tag{}, std::move(v));
}

// Moves the element at position i to position j, shifting the elements
// in between one position toward i.
inline Permutation apply_jump(const Permutation& sigma, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > sigma.size() || j > sigma.size())
    throw std::invalid_argument("apply_jump: invalid indices");
  std::vector<int> v = sigma.values();
  detail::jump_inplace(v, i, j);
  return Permutation(Permutation::unchecked_tag{}, std::move(v));
}

inline Permutation apply_transposition(const Permutation& sigma, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > sigma.size() || j > sigma.size())
    throw std::invalid_argument("apply_transposition: invalid indices");
  std::vector<int> v = sigma.values();
  detail::transposition_inplace(v, i, j);
  return Permutation(Permutation::unchecked_tag{}, std::move(v));
}

// k independent uniformly sampled elementary moves, applied sequentially.
inline Permutation mutate_permutation(const Permutation& sigma, PermScheme scheme,
                                      int k, Rng& rng) {
  if (k < 0) throw std::invalid_argument("mutate_permutation: k must be >= 0");
  std::vector<int> v = sigma.values();
  detail::mutate_inplace(v, scheme, k, rng);
  return Permutation(Permutation::unchecked_tag{}, std::move(v));
}

// Fisher-Yates shuffle; uniform over S_n.
inline Permutation sample_uniform_permutation(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_uniform_permutation: n must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  detail::fisher_yates(v, rng);
  return Permutation(Permutation::unchecked_tag{}, std::move(v));
}

// Comma-separated literal, e.g. "3,5,4,1,2".
inline std::string format_permutation(const Permutation& sigma) {
  std::string out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(sigma(i));
  }
  return out;
}

inline Permutation parse_permutation(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_permutation: bad token '" + token + "'");
    }
    if (pos != token.size())
      throw std::invalid_argument("parse_permutation: bad token '" + token + "'");
    v.push_back(value);
  }
  return Permutation(std::move(v));
}

inline PermScheme perm_scheme_from_name(const std::string& name) {
  if (name == "transposition") return PermScheme::Transposition;
  if (name == "adjacent-swap") return PermScheme::AdjacentSwap;
  if (name == "insertion") return PermScheme::Insertion;
  throw std::invalid_argument("unknown mutation scheme: " + name);
}

inline std::string perm_scheme_name(PermScheme s) {
  switch (s) {
    case PermScheme::Transposition: return "transposition";
    case PermScheme::AdjacentSwap: return "adjacent-swap";
    case PermScheme::Insertion: return "insertion";
  }
  return "";
}

}  // namespace lehmer
