#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lehmer/rng.hpp"

namespace lehmer {

// Harmonic number H_n. Exact rational for n <= 30 (the reduced fraction
// fits 64 bits there); long-double summation beyond.
struct HarmonicNumber {
  long double value = 0.0L;
  bool exact = false;
  long long numerator = 0;
  long long denominator = 1;
};

inline HarmonicNumber harmonic_number(int n) {
  if (n < 0) throw std::invalid_argument("harmonic_number: n must be >= 0");
  HarmonicNumber h;
  if (n <= 30) {
    // H_n = num/den accumulated exactly; 30! and H_30 * 30! fit __int128.
    __int128 num = 0, den = 1;
    for (int i = 1; i <= n; ++i) {
      num = num * i + den;
      den *= i;
    }
    auto igcd = [](__int128 a, __int128 b) {
      while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
      }
      return a;
    };
    const __int128 g = igcd(num, den);
    num /= g;
    den /= g;
    h.exact = true;
    h.numerator = static_cast<long long>(num);
    h.denominator = static_cast<long long>(den);
    h.value = static_cast<long double>(h.numerator) / static_cast<long double>(h.denominator);
  } else {
    long double s = 0.0L;
    for (int i = 1; i <= n; ++i) s += 1.0L / i;
    h.value = s;
  }
  return h;
}

// Closed-form expected optimization times (extended precision).
//   thm2      : RLS, uniform step, uniform vector, L-LeadingZeros
//   thm4      : RLS, uniform step, proportional vector, L-LeadingZeros
//   thm6      : RLS, unit step, L-LeadingZeros
//   thm11-lead: (1+1)-EA, uniform step, L-LeadingZeros (leading terms)
//   thm15-lead: (1+1)-EA, unit step, L-LeadingZeros (leading terms)
inline long double closed_form(const std::string& theorem, int n) {
  if (n < 2) throw std::invalid_argument("closed_form: n must be >= 2");
  const long double nn = n;
  const long double h = harmonic_number(n).value;
  if (theorem == "thm2")
    return nn * nn * nn / 2.0L - 2.0L * nn * nn + nn * h + 1.5L * nn - h;
  if (theorem == "thm4")
    return nn * nn * nn / 2.0L - nn * nn * h / 2.0L - nn * nn / 2.0L + nn * h / 2.0L;
  if (theorem == "thm6")
    return 2.0L * nn * nn * nn * nn / 9.0L - 7.0L * nn * nn * nn / 18.0L + nn * nn / 9.0L +
           nn / 18.0L;
  const long double m = nn - 1.0L;
  const long double e = std::exp(1.0L);
  if (theorem == "thm11-lead") return (e - 2.0L) * m * m * m + (3.0L - 1.5L * e) * m * m;
  if (theorem == "thm15-lead") {
    const long double se = std::sqrt(e);
    return (32.0L * se - 52.0L) / 3.0L * m * m * m * m +
           (28.0L - 16.0L * se) / 3.0L * m * m * m;
  }
  throw std::invalid_argument("closed_form: unknown theorem id '" + theorem + "'");
}

// Exact finite-n series behind the leading-term closed forms above. The
// asymptotic expansions drop remainders that are positive but O(n log n);
// these sums keep every term:
//   thm11-lead: sum_{i=2}^n (n-1) (1 - 1/(n-1))^{i-n} (i-1)^2 / i
//   thm15-lead: sum_{i=2}^n (n-1) (1 - 1/(2(n-1)))^{i-n} (i-1)(2i-1) / 3
inline long double exact_series(const std::string& theorem, int n) {
  if (n < 2) throw std::invalid_argument("exact_series: n must be >= 2");
  const long double N = n - 1.0L;
  long double sum = 0.0L;
  if (theorem == "thm11-lead") {
    const long double q = 1.0L - 1.0L / N;
    for (int i = 2; i <= n; ++i)
      sum += N * std::pow(q, static_cast<long double>(i - n)) * (i - 1.0L) * (i - 1.0L) / i;
    return sum;
  }
  if (theorem == "thm15-lead") {
    const long double q = 1.0L - 1.0L / (2.0L * N);
    for (int i = 2; i <= n; ++i)
      sum += N * std::pow(q, static_cast<long double>(i - n)) * (i - 1.0L) * (2.0L * i - 1.0L) /
             3.0L;
    return sum;
  }
  throw std::invalid_argument("exact_series: no finite-n series for '" + theorem + "'");
}

struct HittingTimeCheck {
  int domain_size = 0;
  long long samples = 0;
  double empirical_mean = 0.0;
  double expected_mean = 0.0;
  double standard_error = 0.0;
  bool pass = false;
};

// Fair random walk on {0,...,i-1} with absorbing 0 and reflecting i-1,
// started uniformly: E[T] = E[X0(2i-1-X0)] = (i-1)(2i-1)/3. Compares the
// empirical mean over `samples` walks against the formula within three
// standard errors.
// forced_start >= 0 pins X0 instead of drawing it uniformly (the
// expected-mean/pass fields then refer to the uniform-start formula and
// are only meaningful for the uniform case).
inline HittingTimeCheck random_walk_hitting_check(int i, long long samples, Rng& rng,
                                                  int forced_start = -1) {
  if (i < 2) throw std::invalid_argument("random_walk_hitting_check: i must be >= 2");
  HittingTimeCheck out;
  out.domain_size = i;
  out.samples = samples;
  out.expected_mean = static_cast<double>(i - 1) * (2 * i - 1) / 3.0;
  long double sum = 0.0L, sum_sq = 0.0L;
  for (long long s = 0; s < samples; ++s) {
    int x = forced_start >= 0 ? forced_start
                              : static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i)));
    long long t = 0;
    while (x != 0) {
      if (rng.next_bool()) {
        --x;
      } else if (x < i - 1) {
        ++x;
      }
      ++t;
    }
    sum += t;
    sum_sq += static_cast<long double>(t) * t;
  }
  out.empirical_mean = static_cast<double>(sum / samples);
  const long double var =
      (sum_sq - sum * sum / samples) / std::max<long long>(samples - 1, 1);
  out.standard_error = static_cast<double>(std::sqrt(var / samples));
  out.pass = std::abs(out.empirical_mean - out.expected_mean) <= 3.0 * out.standard_error;
  return out;
}

}  // namespace lehmer
