#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "lehmer/lehmer_code.hpp"

using namespace lehmer;

namespace {

Permutation perm(std::initializer_list<int> v) { return Permutation(std::vector<int>(v)); }

// All codes of size n, via mixed-radix counting (label n first).
std::vector<LehmerCode> all_codes(int n) {
  std::vector<LehmerCode> out;
  std::vector<int> e(static_cast<std::size_t>(n - 1), 0);
  while (true) {
    out.emplace_back(n, e);
    int k = n - 2;
    while (k >= 0) {
      const int label = n - k;
      if (++e[static_cast<std::size_t>(k)] < label) break;
      e[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("LehmerCode validation") {
  CHECK_THROWS_AS(LehmerCode(0), std::invalid_argument);
  CHECK_THROWS_AS(LehmerCode(3, {1}), std::invalid_argument);
  CHECK_THROWS_AS(LehmerCode(3, {3, 0}), std::invalid_argument);   // label 3 entry > 2
  CHECK_THROWS_AS(LehmerCode(3, {0, 2}), std::invalid_argument);   // label 2 entry > 1
  CHECK_THROWS_AS(LehmerCode(3, {-1, 0}), std::invalid_argument);
  const LehmerCode c(5, {2, 3, 2, 0});
  CHECK(c.entry_for_label(5) == 2);
  CHECK(c.entry_for_label(4) == 3);
  CHECK(c.entry_for_label(2) == 0);
  CHECK(c.entry_for_label(1) == 0);
  CHECK_THROWS_AS(c.entry_for_label(0), std::invalid_argument);
  CHECK_THROWS_AS(c.entry_for_label(6), std::invalid_argument);
}

TEST_CASE("encode") {
  CHECK(encode(perm({3, 5, 4, 1, 2})) == LehmerCode(5, {2, 3, 2, 0}));
  CHECK(encode(Permutation::identity(7)) == LehmerCode(7));
  // Reversed permutation: entry at label i equals i-1.
  const auto rev = encode(perm({6, 5, 4, 3, 2, 1}));
  for (int label = 2; label <= 6; ++label) CHECK(rev.entry_for_label(label) == label - 1);
}

TEST_CASE("decode") {
  CHECK(decode(LehmerCode(5)) == Permutation::identity(5));
  CHECK(decode(LehmerCode(5, {2, 3, 2, 0})) == perm({3, 5, 4, 1, 2}));
}

TEST_CASE("encode/decode bijection") {
  // Exhaustive for n <= 6: decode is injective onto S_n and inverts encode.
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> images;
    for (const auto& c : all_codes(n)) {
      const auto sigma = decode(c);
      REQUIRE(encode(sigma) == c);
      images.insert(sigma.values());
    }
    long long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    REQUIRE(static_cast<long long>(images.size()) == fact);
  }
  // Random round-trips at larger sizes.
  Rng rng(41);
  for (int n : {50, 200}) {
    for (int t = 0; t < 50; ++t) {
      const auto sigma = sample_uniform_permutation(n, rng);
      REQUIRE(decode(encode(sigma)) == sigma);
      const auto code = sample_uniform_code(n, rng);
      REQUIRE(encode(decode(code)) == code);
    }
  }
}

TEST_CASE("entry sum equals inversion count") {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const auto sigma = sample_uniform_permutation(40, rng);
    const auto code = encode(sigma);
    const long long sum = std::accumulate(code.entries().begin(), code.entries().end(), 0LL);
    REQUIRE(sum == inversions(sigma));
  }
}

TEST_CASE("sample_uniform_code induces uniform permutations") {
  Rng rng(47);
  std::map<std::vector<int>, int> counts;
  const int samples = 120000;
  for (int t = 0; t < samples; ++t) ++counts[decode(sample_uniform_code(3, rng)).values()];
  REQUIRE(counts.size() == 6);
  for (const auto& [v, c] : counts)
    CHECK(std::abs(static_cast<double>(c) / samples - 1.0 / 6.0) < 0.01);

  for (int t = 0; t < 100; ++t) {
    const auto code = sample_uniform_code(50, rng);
    for (int label = 2; label <= 50; ++label) {
      REQUIRE(code.entry_for_label(label) >= 0);
      REQUIRE(code.entry_for_label(label) <= label - 1);
    }
  }
}

TEST_CASE("step_uniform") {
  Rng rng(53);
  CHECK_THROWS_AS(step_uniform(1, 0, rng), std::invalid_argument);
  for (int t = 0; t < 100; ++t) {
    CHECK(step_uniform(2, 0, rng) == 1);
    CHECK(step_uniform(2, 1, rng) == 0);
  }
  std::map<int, int> counts;
  const int samples = 100000;
  for (int t = 0; t < samples; ++t) ++counts[step_uniform(5, 2, rng)];
  REQUIRE(counts.size() == 4);
  CHECK(counts.count(2) == 0);
  for (int v : {0, 1, 3, 4})
    CHECK(std::abs(static_cast<double>(counts[v]) / samples - 0.25) < 0.01);
}

TEST_CASE("step_unit") {
  Rng rng(59);
  CHECK_THROWS_AS(step_unit(1, 0, rng), std::invalid_argument);
  const int samples = 100000;
  std::map<int, int> at0, at4, at2;
  for (int t = 0; t < samples; ++t) {
    ++at0[step_unit(5, 0, rng)];
    ++at4[step_unit(5, 4, rng)];
    ++at2[step_unit(5, 2, rng)];
  }
  REQUIRE(at0.size() == 2);
  CHECK(std::abs(static_cast<double>(at0[0]) / samples - 0.5) < 0.01);
  CHECK(std::abs(static_cast<double>(at0[1]) / samples - 0.5) < 0.01);
  REQUIRE(at4.size() == 2);
  CHECK(std::abs(static_cast<double>(at4[3]) / samples - 0.5) < 0.01);
  CHECK(std::abs(static_cast<double>(at4[4]) / samples - 0.5) < 0.01);
  REQUIRE(at2.size() == 2);
  CHECK(std::abs(static_cast<double>(at2[1]) / samples - 0.5) < 0.01);
  CHECK(std::abs(static_cast<double>(at2[3]) / samples - 0.5) < 0.01);
}

TEST_CASE("step_harmonic") {
  Rng rng(61);
  CHECK_THROWS_AS(step_harmonic(1, 0, rng), std::invalid_argument);
  const int samples = 100000;
  std::map<int, int> at2, at3;
  for (int t = 0; t < samples; ++t) {
    ++at2[step_harmonic(2, 0, rng)];
    ++at3[step_harmonic(3, 0, rng)];
  }
  // Label 2: single step size, direction coin, negative direction clamps.
  REQUIRE(at2.size() == 2);
  CHECK(std::abs(static_cast<double>(at2[0]) / samples - 0.5) < 0.01);
  CHECK(std::abs(static_cast<double>(at2[1]) / samples - 0.5) < 0.01);
  // Label 3 from 0: P[0]=1/2, P[1]=1/3, P[2]=1/6.
  CHECK(std::abs(static_cast<double>(at3[0]) / samples - 0.5) < 0.01);
  CHECK(std::abs(static_cast<double>(at3[1]) / samples - 1.0 / 3.0) < 0.01);
  CHECK(std::abs(static_cast<double>(at3[2]) / samples - 1.0 / 6.0) < 0.01);
  // Range invariant.
  for (int t = 0; t < 1000; ++t) {
    const int v = step_harmonic(7, 3, rng);
    REQUIRE(v >= 0);
    REQUIRE(v <= 6);
  }
}

TEST_CASE("probability_vector") {
  CHECK_THROWS_AS(probability_vector(ProbVectorKind::Uniform, 1), std::invalid_argument);
  const auto u5 = probability_vector(ProbVectorKind::Uniform, 5);
  REQUIRE(u5.size() == 4);
  for (double p : u5) CHECK(p == Catch::Approx(0.25));
  const auto p5 = probability_vector(ProbVectorKind::Proportional, 5);
  REQUIRE(p5.size() == 4);
  CHECK(p5[0] == Catch::Approx(0.1));
  CHECK(p5[1] == Catch::Approx(0.2));
  CHECK(p5[2] == Catch::Approx(0.3));
  CHECK(p5[3] == Catch::Approx(0.4));
  for (auto kind : {ProbVectorKind::Uniform, ProbVectorKind::Proportional}) {
    const auto p2 = probability_vector(kind, 2);
    REQUIRE(p2.size() == 1);
    CHECK(p2[0] == Catch::Approx(1.0));
    const auto p9 = probability_vector(kind, 9);
    CHECK(std::accumulate(p9.begin(), p9.end(), 0.0) == Catch::Approx(1.0));
  }
}

TEST_CASE("adjacent_swap_effect") {
  const auto c = encode(perm({3, 5, 4, 1, 2}));
  const auto swapped = adjacent_swap_effect(c, 1);
  CHECK(swapped.entry_for_label(5) == 4);
  CHECK(swapped.entry_for_label(4) == 2);
  CHECK(swapped.entry_for_label(3) == 2);
  CHECK(swapped.entry_for_label(2) == 0);
  CHECK(swapped == encode(perm({5, 3, 4, 1, 2})));

  const auto z = adjacent_swap_effect(LehmerCode(5), 1);
  CHECK(z.entry_for_label(5) == 1);
  CHECK(z == encode(perm({2, 1, 3, 4, 5})));

  CHECK_THROWS_AS(adjacent_swap_effect(LehmerCode(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(adjacent_swap_effect(LehmerCode(5), 5), std::invalid_argument);

  // Commutes with decode for every code and position, n = 6.
  for (const auto& code : all_codes(6)) {
    for (int i = 1; i <= 5; ++i) {
      REQUIRE(adjacent_swap_effect(code, i) ==
              encode(apply_adjacent_swap(decode(code), i)));
    }
  }
}

TEST_CASE("code literals") {
  CHECK(format_code(LehmerCode(5, {2, 3, 2, 0})) == "2,3,2,0");
  CHECK(parse_code("2,3,2,0") == LehmerCode(5, {2, 3, 2, 0}));
  CHECK(parse_code("") == LehmerCode(1));
  CHECK_THROWS_AS(parse_code("2,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_code("9,0"), std::invalid_argument);  // label-3 entry out of range
}

TEST_CASE("name registries") {
  CHECK(prob_vector_from_name("uniform") == ProbVectorKind::Uniform);
  CHECK(prob_vector_from_name("proportional") == ProbVectorKind::Proportional);
  CHECK(prob_vector_name(ProbVectorKind::Proportional) == "proportional");
  CHECK_THROWS_AS(prob_vector_from_name("bogus"), std::invalid_argument);
}
