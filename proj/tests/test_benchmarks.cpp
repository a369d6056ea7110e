#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "lehmer/benchmarks.hpp"

using namespace lehmer;

namespace {

Permutation perm(std::initializer_list<int> v) { return Permutation(std::vector<int>(v)); }

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

TEST_CASE("l_onemax") {
  CHECK(l_onemax(LehmerCode(10)) == FitnessValue::scalar(0));
  CHECK(l_onemax(encode(perm({3, 5, 4, 1, 2}))) == FitnessValue::scalar(7));
}

TEST_CASE("l_leadingzeros") {
  CHECK(l_leadingzeros(LehmerCode(5)) == FitnessValue::scalar(5));
  CHECK(l_leadingzeros(LehmerCode(5, {1, 0, 0, 0})) == FitnessValue::scalar(0));
  CHECK(l_leadingzeros(LehmerCode(5, {0, 0, 1, 0})) == FitnessValue::scalar(2));
  // n-1 is unattainable: a zero at every stored label except the last
  // means the implicit label-1 zero extends the prefix to n.
  for (int last = 0; last <= 1; ++last) {
    const auto f = l_leadingzeros(LehmerCode(5, {0, 0, 0, last}));
    CHECK(f != FitnessValue::scalar(4));
  }
}

TEST_CASE("facval") {
  CHECK(facval_scalar(LehmerCode(4)) == 0);
  CHECK(facval(LehmerCode(4)) == FitnessValue::lex_key({0, 0, 0}));
  const auto c132 = encode(perm({1, 3, 2}));
  CHECK(c132.entry_for_label(3) == 0);
  CHECK(c132.entry_for_label(2) == 1);
  CHECK(facval_scalar(c132) == 1);
  CHECK(facval_scalar(LehmerCode(5, {4, 3, 2, 1})) == 119);
  CHECK_THROWS_AS(facval_scalar(LehmerCode(21)), std::domain_error);
  // Key order agrees with the exact scalar wherever both exist.
  Rng rng(67);
  for (int t = 0; t < 500; ++t) {
    const auto a = sample_uniform_code(10, rng);
    const auto b = sample_uniform_code(10, rng);
    REQUIRE(((facval(a) < facval(b)) == (facval_scalar(a) < facval_scalar(b))));
  }
  // And keys stay comparable far beyond the scalar range.
  const auto big = sample_uniform_code(200, rng);
  CHECK(facval(big) >= facval(LehmerCode(200)));
}

TEST_CASE("inv") {
  CHECK(inv(Permutation::identity(4)) == FitnessValue::scalar(0));
  CHECK(inv(perm({3, 5, 4, 1, 2})) == FitnessValue::scalar(7));
  CHECK(inv(perm({6, 5, 4, 3, 2, 1})) == FitnessValue::scalar(15));
}

TEST_CASE("pleadingones") {
  CHECK(pleadingones(Permutation::identity(5)) == FitnessValue::scalar(5));
  CHECK(pleadingones(perm({2, 1, 3, 4})) == FitnessValue::scalar(0));
  CHECK(pleadingones(perm({1, 2, 4, 3})) == FitnessValue::scalar(2));
  // n-1 is unattainable.
  for (const auto& s : all_permutations(5))
    CHECK(pleadingones(s) != FitnessValue::scalar(4));
}

TEST_CASE("lexval is the lexicographic rank") {
  CHECK(lexval_scalar(Permutation::identity(6)) == 0);
  CHECK(lexval_scalar(perm({1, 3, 2})) == 1);
  // Sort-based oracle over all of S_6: next_permutation enumerates in
  // lexicographic order, so the enumeration index is the rank.
  const auto perms = all_permutations(6);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    REQUIRE(lexval_scalar(perms[r]) == static_cast<long long>(r));
    REQUIRE(lexval(perms[r]) == facval(encode(perms[r])));
  }
}

TEST_CASE("nval") {
  CHECK(nval(BoundedIntVector(3, 3, {0, 0, 0})) == FitnessValue::lex_key({0, 0, 0}));
  CHECK(nval_scalar(BoundedIntVector(3, 3, {2, 0, 1})) == 11);
  CHECK(nval(BoundedIntVector(3, 3, {2, 0, 1})) == FitnessValue::lex_key({1, 0, 2}));
  CHECK_THROWS_AS(nval(BoundedIntVector(3, 4, {0, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(nval_scalar(BoundedIntVector(16, 16, std::vector<int>(16, 0))),
                  std::domain_error);
  // Key order agrees with the exact scalar for n = 8.
  Rng rng(71);
  for (int t = 0; t < 500; ++t) {
    std::vector<int> av(8), bv(8);
    for (auto& e : av) e = static_cast<int>(rng.bounded(8));
    for (auto& e : bv) e = static_cast<int>(rng.bounded(8));
    const BoundedIntVector a(8, 8, av), b(8, 8, bv);
    REQUIRE(((nval(a) < nval(b)) == (nval_scalar(a) < nval_scalar(b))));
  }
}

TEST_CASE("BoundedIntVector validation") {
  CHECK_THROWS_AS(BoundedIntVector(0, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(BoundedIntVector(2, 3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(BoundedIntVector(2, 3, {0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(BoundedIntVector(2, 3, {-1, 0}), std::invalid_argument);
}

TEST_CASE("function equivalences through the encoding") {
  // Exhaustive n <= 6, random spot checks at n = 100.
  for (int n = 2; n <= 6; ++n) {
    for (const auto& s : all_permutations(n)) {
      const auto c = encode(s);
      REQUIRE(inv(s) == l_onemax(c));
      REQUIRE(pleadingones(s) == l_leadingzeros(c));
      REQUIRE(lexval(s) == facval(c));
    }
  }
  Rng rng(73);
  for (int t = 0; t < 200; ++t) {
    const auto s = sample_uniform_permutation(100, rng);
    const auto c = encode(s);
    REQUIRE(inv(s) == l_onemax(c));
    REQUIRE(pleadingones(s) == l_leadingzeros(c));
    REQUIRE(lexval(s) == facval(c));
  }
}

TEST_CASE("benchmark registry") {
  for (const char* name :
       {"l-onemax", "l-leadingzeros", "facval", "inv", "pleadingones", "lexval", "nval"}) {
    CHECK(benchmark_name(benchmark_from_name(name)) == name);
  }
  CHECK_THROWS_AS(benchmark_from_name("bogus"), std::invalid_argument);

  CHECK(benchmark_direction(BenchmarkId::LLeadingZeros) == Direction::Maximize);
  CHECK(benchmark_direction(BenchmarkId::PLeadingOnes) == Direction::Maximize);
  CHECK(benchmark_direction(BenchmarkId::LOneMax) == Direction::Minimize);
  CHECK(benchmark_direction(BenchmarkId::NVal) == Direction::Minimize);

  CHECK(benchmark_domain(BenchmarkId::FacVal) == SearchDomain::Lehmer);
  CHECK(benchmark_domain(BenchmarkId::LexVal) == SearchDomain::Perm);
  CHECK(benchmark_domain(BenchmarkId::NVal) == SearchDomain::MultiValued);

  CHECK(benchmark_optimum(BenchmarkId::LOneMax, 9) == FitnessValue::scalar(0));
  CHECK(benchmark_optimum(BenchmarkId::LLeadingZeros, 9) == FitnessValue::scalar(9));
  CHECK(benchmark_optimum(BenchmarkId::FacVal, 4) == FitnessValue::lex_key({0, 0, 0}));
  CHECK(benchmark_optimum(BenchmarkId::NVal, 3) == FitnessValue::lex_key({0, 0, 0}));

  // benchmark_eval matches the typed entry points on raw states.
  Rng rng(79);
  const auto s = sample_uniform_permutation(12, rng);
  const auto c = encode(s);
  FitnessValue out;
  benchmark_eval(BenchmarkId::LOneMax, c.entries(), out);
  CHECK(out == l_onemax(c));
  benchmark_eval(BenchmarkId::LLeadingZeros, c.entries(), out);
  CHECK(out == l_leadingzeros(c));
  benchmark_eval(BenchmarkId::FacVal, c.entries(), out);
  CHECK(out == facval(c));
  benchmark_eval(BenchmarkId::Inv, s.values(), out);
  CHECK(out == inv(s));
  benchmark_eval(BenchmarkId::PLeadingOnes, s.values(), out);
  CHECK(out == pleadingones(s));
  benchmark_eval(BenchmarkId::LexVal, s.values(), out);
  CHECK(out == lexval(s));
  const BoundedIntVector x(4, 4, {1, 0, 3, 2});
  benchmark_eval(BenchmarkId::NVal, x.entries, out);
  CHECK(out == nval(x));
}
