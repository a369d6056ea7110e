#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lehmer {

enum class Direction { Minimize, Maximize };

// Exact, totally ordered objective value. Either a 64-bit scalar or a
// lexicographic key (most-significant entry first) for factorially or
// exponentially weighted functions where a scalar would overflow or
// round. Comparisons never go through floating point.
class FitnessValue {
 public:
  FitnessValue() = default;

  static FitnessValue scalar(long long v) {
    FitnessValue f;
    f.scalar_ = v;
    return f;
  }

  static FitnessValue lex_key(std::vector<long long> key) {
    FitnessValue f;
    f.key_ = std::move(key);
    return f;
  }

  bool is_key() const { return !key_.empty(); }

  long long scalar_value() const {
    if (is_key())
      throw std::domain_error("FitnessValue: scalar extraction from a lexicographic key");
    return scalar_;
  }

  const std::vector<long long>& key() const { return key_; }

  // Mutating setters so hot loops can reuse allocated capacity.
  void set_scalar(long long v) {
    scalar_ = v;
    key_.clear();
  }

  template <class It>
  void assign_key(It first, It last) {
    key_.assign(first, last);
    scalar_ = 0;
  }

  friend std::strong_ordering operator<=>(const FitnessValue& a, const FitnessValue& b) {
    if (!a.is_key() && !b.is_key()) return a.scalar_ <=> b.scalar_;
    if (a.key_.size() != b.key_.size())
      throw std::invalid_argument("FitnessValue: comparing incompatible values");
    for (std::size_t i = 0; i < a.key_.size(); ++i)
      if (a.key_[i] != b.key_[i]) return a.key_[i] <=> b.key_[i];
    return std::strong_ordering::equal;
  }

  friend bool operator==(const FitnessValue& a, const FitnessValue& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (!is_key()) return std::to_string(scalar_);
    std::string out;
    for (std::size_t i = 0; i < key_.size(); ++i) {
      if (i > 0) out += ';';
      out += std::to_string(key_[i]);
    }
    return out;
  }

 private:
  long long scalar_ = 0;
  std::vector<long long> key_;  // empty => scalar
};

// "a is not worse than b" under the given objective direction.
inline bool not_worse(const FitnessValue& a, const FitnessValue& b, Direction dir) {
  return dir == Direction::Minimize ? a <= b : a >= b;
}

inline bool strictly_better(const FitnessValue& a, const FitnessValue& b, Direction dir) {
  return dir == Direction::Minimize ? a < b : a > b;
}

}  // namespace lehmer
