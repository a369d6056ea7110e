#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lehmer/fitness.hpp"
#include "lehmer/permutation.hpp"
#include "lehmer/rng.hpp"

namespace lehmer {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

inline long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("objective accumulation overflows 64 bits");
  return out;
}

inline long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("objective accumulation overflows 64 bits");
  return out;
}

// Whitespace tokenizer that tracks line/column for parse errors.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  // Reads the next integer token; throws ParseError at end of input or on
  // a non-integer token.
  long long next_int(const char* what) {
    skip_ws();
    if (!has_char()) throw ParseError(std::string("expected ") + what + ", got end of input",
                                      line_, col_);
    const int tok_line = line_;
    const int tok_col = col_;
    std::string tok;
    while (has_char() && !std::isspace(static_cast<unsigned char>(peek()))) tok += get();
    std::size_t pos = 0;
    long long value = 0;
    try {
      value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", tok_line, tok_col);
    }
    if (pos != tok.size())
      throw ParseError(std::string("expected ") + what + ", got '" + tok + "'", tok_line, tok_col);
    return value;
  }

  bool at_end() {
    skip_ws();
    return !has_char();
  }

  int line() const { return line_; }
  int column() const { return col_; }

  // Consumes the remainder of the current line and returns it.
  std::string rest_of_line() {
    std::string out;
    while (has_char() && peek() != '\n') out += get();
    if (has_char()) get();
    return out;
  }

 private:
  bool has_char() {
    if (!buffered_) {
      int c = in_.get();
      if (c == std::char_traits<char>::eof()) return false;
      buf_ = static_cast<char>(c);
      buffered_ = true;
    }
    return true;
  }

  char peek() { return buf_; }

  char get() {
    buffered_ = false;
    if (buf_ == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return buf_;
  }

  void skip_ws() {
    while (has_char() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }

  std::istream& in_;
  char buf_ = 0;
  bool buffered_ = false;
  int line_ = 1;
  int col_ = 1;
};

inline std::vector<std::vector<long long>> read_matrix(TokenReader& tr, int n, const char* what) {
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = tr.next_int(what);
  return m;
}

}  // namespace detail

// Linear ordering problem instance: square integer weight matrix B.
struct LopInstance {
  int n;
  std::vector<std::vector<long long>> b;
};

// Quadratic assignment problem instance: square integer matrices A, B.
struct QapInstance {
  int n;
  std::vector<std::vector<long long>> a;
  std::vector<std::vector<long long>> b;
};

// Minimization form: f(sigma) = Sum_{i>j} b_{sigma(i), sigma(j)}.
inline FitnessValue lop_eval(const LopInstance& inst, const Permutation& sigma) {
  if (sigma.size() != inst.n) throw std::invalid_argument("lop_eval: size mismatch");
  long long sum = 0;
  for (int i = 2; i <= inst.n; ++i) {
    const auto& row = inst.b[static_cast<std::size_t>(sigma(i) - 1)];
    for (int j = 1; j < i; ++j)
      sum = detail::checked_add(sum, row[static_cast<std::size_t>(sigma(j) - 1)]);
  }
  return FitnessValue::scalar(sum);
}

// f(sigma) = Sum_{i,j} a_{i,j} b_{sigma(i), sigma(j)}, diagonal included.
inline FitnessValue qap_eval(const QapInstance& inst, const Permutation& sigma) {
  if (sigma.size() != inst.n) throw std::invalid_argument("qap_eval: size mismatch");
  long long sum = 0;
  for (int i = 1; i <= inst.n; ++i) {
    const auto& arow = inst.a[static_cast<std::size_t>(i - 1)];
    const auto& brow = inst.b[static_cast<std::size_t>(sigma(i) - 1)];
    for (int j = 1; j <= inst.n; ++j)
      sum = detail::checked_add(
          sum, detail::checked_mul(arow[static_cast<std::size_t>(j - 1)],
                                   brow[static_cast<std::size_t>(sigma(j) - 1)]));
  }
  return FitnessValue::scalar(sum);
}

namespace detail {

// True if the line consists of exactly one integer token.
inline bool is_single_int_line(const std::string& line, long long& value) {
  std::istringstream ss(line);
  std::string tok, extra;
  if (!(ss >> tok) || (ss >> extra)) return false;
  std::size_t pos = 0;
  try {
    value = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

}  // namespace detail

// LOLIB layout: optional name/comment line, a line with n, then n*n
// whitespace-separated integers in row-major order. The first line is
// treated as the instance name unless it is a bare integer.
inline LopInstance parse_lolib(std::istream& in) {
  std::string first_line;
  if (!std::getline(in, first_line)) throw ParseError("empty input", 1, 1);
  long long n = 0;
  int header_lines = 1;
  if (!detail::is_single_int_line(first_line, n)) {
    std::string size_line;
    if (!std::getline(in, size_line))
      throw ParseError("expected instance size after name line", 2, 1);
    if (!detail::is_single_int_line(size_line, n))
      throw ParseError("expected instance size, got '" + size_line + "'", 2, 1);
    header_lines = 2;
  }
  if (n <= 0 || n > std::numeric_limits<int>::max())
    throw ParseError("instance size must be positive", header_lines, 1);
  detail::TokenReader tr(in);
  std::vector<std::vector<long long>> b;
  try {
    b = detail::read_matrix(tr, static_cast<int>(n), "matrix entry");
  } catch (const ParseError& e) {
    const std::string msg(e.what());
    throw ParseError(msg.substr(0, msg.rfind(" (line")), header_lines + e.line(), e.column());
  }
  if (!tr.at_end())
    throw ParseError("trailing tokens after matrix", header_lines + tr.line(), tr.column());
  return LopInstance{static_cast<int>(n), std::move(b)};
}

inline LopInstance parse_lolib_text(const std::string& text) {
  std::istringstream in(text);
  return parse_lolib(in);
}

// QAPLIB layout: n, then matrix A, then matrix B; blank lines permitted.
inline QapInstance parse_qaplib(std::istream& in) {
  detail::TokenReader tr(in);
  const long long n = tr.next_int("instance size");
  if (n <= 0 || n > std::numeric_limits<int>::max())
    throw ParseError("instance size must be positive", tr.line(), tr.column());
  auto a = detail::read_matrix(tr, static_cast<int>(n), "matrix A entry");
  auto b = detail::read_matrix(tr, static_cast<int>(n), "matrix B entry");
  if (!tr.at_end())
    throw ParseError("trailing tokens after matrices", tr.line(), tr.column());
  return QapInstance{static_cast<int>(n), std::move(a), std::move(b)};
}

inline QapInstance parse_qaplib_text(const std::string& text) {
  std::istringstream in(text);
  return parse_qaplib(in);
}

// Canonical renderers (no comment line); parse(render(x)) == x.
inline std::string render_lolib(const LopInstance& inst) {
  std::ostringstream out;
  out << inst.n << '\n';
  for (const auto& row : inst.b) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

inline std::string render_qaplib(const QapInstance& inst) {
  std::ostringstream out;
  out << inst.n << '\n' << '\n';
  for (const auto* m : {&inst.a, &inst.b}) {
    for (const auto& row : *m) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << '\n';
    }
    if (m == &inst.a) out << '\n';
  }
  return out.str();
}

namespace detail {

// Uniformly random m-subset of [0..n), returned sorted ascending.
inline std::vector<int> sample_index_subset(int n, int m, Rng& rng) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  for (int i = 0; i < m; ++i) {
    const int j = i + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  idx.resize(static_cast<std::size_t>(m));
  std::sort(idx.begin(), idx.end());
  return idx;
}

inline std::vector<std::vector<long long>> principal_submatrix(
    const std::vector<std::vector<long long>>& m, const std::vector<int>& idx) {
  std::vector<std::vector<long long>> out(idx.size(), std::vector<long long>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      out[i][j] = m[static_cast<std::size_t>(idx[i])][static_cast<std::size_t>(idx[j])];
  return out;
}

}  // namespace detail

// Principal submatrix on a uniformly random m-subset of indices.
inline LopInstance subsample(const LopInstance& inst, int m, Rng& rng) {
  if (m < 1 || m > inst.n) throw std::invalid_argument("subsample: m out of range");
  const auto idx = detail::sample_index_subset(inst.n, m, rng);
  return LopInstance{m, detail::principal_submatrix(inst.b, idx)};
}

inline QapInstance subsample(const QapInstance& inst, int m, Rng& rng) {
  if (m < 1 || m > inst.n) throw std::invalid_argument("subsample: m out of range");
  const auto idx = detail::sample_index_subset(inst.n, m, rng);
  return QapInstance{m, detail::principal_submatrix(inst.a, idx),
                     detail::principal_submatrix(inst.b, idx)};
}

namespace detail {

template <class Eval>
std::pair<FitnessValue, Permutation> exhaustive_optimum_impl(int n, Eval&& eval) {
  if (n < 1 || n > 11)
    throw std::domain_error("exhaustive_optimum: supported only for 1 <= n <= 11");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  Permutation best(Permutation::unchecked_tag{}, v);
  FitnessValue best_value = eval(best);
  // Lexicographic enumeration with strict improvement keeps the
  // lexicographically smallest optimum.
  while (std::next_permutation(v.begin(), v.end())) {
    Permutation cand(Permutation::unchecked_tag{}, v);
    FitnessValue value = eval(cand);
    if (value < best_value) {
      best_value = std::move(value);
      best = std::move(cand);
    }
  }
  return {best_value, best};
}

}  // namespace detail

inline std::pair<FitnessValue, Permutation> exhaustive_optimum(const LopInstance& inst) {
  return detail::exhaustive_optimum_impl(
      inst.n, [&](const Permutation& p) { return lop_eval(inst, p); });
}

inline std::pair<FitnessValue, Permutation> exhaustive_optimum(const QapInstance& inst) {
  return detail::exhaustive_optimum_impl(
      inst.n, [&](const Permutation& p) { return qap_eval(inst, p); });
}

}  // namespace lehmer
