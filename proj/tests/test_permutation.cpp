#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <numeric>
#include <set>
#include <vector>

#include "lehmer/permutation.hpp"

using namespace lehmer;

namespace {

Permutation perm(std::initializer_list<int> v) { return Permutation(std::vector<int>(v)); }

// O(n^2) reference for inversion counting.
long long inversions_naive(const Permutation& s) {
  long long count = 0;
  for (int i = 1; i <= s.size(); ++i)
    for (int j = i + 1; j <= s.size(); ++j)
      if (s(i) > s(j)) ++count;
  return count;
}

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

TEST_CASE("permutation invariant validation") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(perm({1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(perm({0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(perm({1, 2, 4}), std::invalid_argument);
  CHECK(Permutation::identity(1).values() == std::vector<int>{1});
}

TEST_CASE("compose") {
  const auto sigma = perm({3, 1, 2});
  CHECK(compose(Permutation::identity(3), sigma) == sigma);
  CHECK(compose(perm({2, 3, 1}), perm({2, 3, 1})) == perm({3, 1, 2}));
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                  std::invalid_argument);

  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const auto s = sample_uniform_permutation(6, rng);
    CHECK(compose(s, inverse(s)) == Permutation::identity(6));
  }
}

TEST_CASE("inversions") {
  CHECK(inversions(Permutation::identity(5)) == 0);
  CHECK(inversions(perm({5, 4, 3, 2, 1})) == 10);
  CHECK(inversions(perm({3, 5, 4, 1, 2})) == 7);

  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + static_cast<int>(rng.bounded(199));
    const auto s = sample_uniform_permutation(n, rng);
    REQUIRE(inversions(s) == inversions_naive(s));
  }
}

TEST_CASE("apply_adjacent_swap") {
  CHECK(apply_adjacent_swap(perm({1, 2, 3}), 1) == perm({2, 1, 3}));
  CHECK(apply_adjacent_swap(perm({3, 5, 4, 1, 2}), 1) == perm({5, 3, 4, 1, 2}));
  CHECK_THROWS_AS(apply_adjacent_swap(perm({1, 2, 3}), 0), std::invalid_argument);
  CHECK_THROWS_AS(apply_adjacent_swap(perm({1, 2, 3}), 3), std::invalid_argument);

  // Changes the inversion count by exactly one, either way.
  Rng rng(3);
  for (int t = 0; t < 1000; ++t) {
    const auto s = sample_uniform_permutation(20, rng);
    const int i = 1 + static_cast<int>(rng.bounded(19));
    const long long delta = inversions(apply_adjacent_swap(s, i)) - inversions(s);
    REQUIRE(std::abs(delta) == 1);
  }
}

TEST_CASE("apply_jump") {
  CHECK(apply_jump(perm({1, 2, 3, 4}), 1, 3) == perm({2, 3, 1, 4}));
  CHECK(apply_jump(perm({1, 2, 3, 4}), 3, 1) == perm({3, 1, 2, 4}));
  CHECK_THROWS_AS(apply_jump(perm({1, 2, 3}), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(apply_jump(perm({1, 2, 3}), 0, 2), std::invalid_argument);
}

TEST_CASE("apply_transposition") {
  CHECK(apply_transposition(perm({1, 2, 3, 4}), 1, 4) == perm({4, 2, 3, 1}));
  CHECK_THROWS_AS(apply_transposition(perm({1, 2}), 1, 1), std::invalid_argument);

  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto s = sample_uniform_permutation(8, rng);
    const int i = 1 + static_cast<int>(rng.bounded(8));
    int j = 1 + static_cast<int>(rng.bounded(7));
    if (j >= i) ++j;
    CHECK(apply_transposition(apply_transposition(s, i, j), i, j) == s);
  }
}

TEST_CASE("decomposition identities, exhaustive n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& s : all_permutations(n)) {
      // jump(i,j) = s_i o s_{i+1} o ... o s_{j-1} for i < j
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto via_swaps = s;
          for (int k = i; k < j; ++k) via_swaps = apply_adjacent_swap(via_swaps, k);
          REQUIRE(apply_jump(s, i, j) == via_swaps);
        }
      // (i j) = jump(i,j) o jump(j-1,i) for i < j; at j = i+1 the second
      // jump is the disallowed degenerate jump(i,i), i.e. the identity.
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto via_jumps = apply_jump(s, i, j);
          if (j > i + 1) via_jumps = apply_jump(via_jumps, j - 1, i);
          REQUIRE(apply_transposition(s, i, j) == via_jumps);
        }
    }
  }
}

TEST_CASE("mutate_permutation") {
  Rng rng(17);
  const auto s = sample_uniform_permutation(9, rng);
  CHECK(mutate_permutation(s, PermScheme::Transposition, 0, rng) == s);
  CHECK(mutate_permutation(s, PermScheme::Insertion, 0, rng) == s);
  CHECK_THROWS_AS(mutate_permutation(s, PermScheme::Insertion, -1, rng), std::invalid_argument);

  // One adjacent swap from the identity leaves exactly one inversion.
  for (int t = 0; t < 200; ++t) {
    const auto m = mutate_permutation(Permutation::identity(12), PermScheme::AdjacentSwap, 1, rng);
    REQUIRE(inversions(m) == 1);
  }

  // All three schemes preserve the bijection invariant.
  for (int t = 0; t < 3000; ++t) {
    for (auto scheme :
         {PermScheme::Transposition, PermScheme::AdjacentSwap, PermScheme::Insertion}) {
      const auto m = mutate_permutation(s, scheme, 1 + static_cast<int>(rng.bounded(4)), rng);
      std::set<int> seen(m.values().begin(), m.values().end());
      REQUIRE(static_cast<int>(seen.size()) == m.size());
    }
  }
}

TEST_CASE("mutate_permutation transposition is uniform over the neighbors") {
  // S_3 has exactly 3 transposed neighbors of the identity.
  Rng rng(23);
  const auto id = Permutation::identity(3);
  std::map<std::vector<int>, int> counts;
  const int samples = 100000;
  for (int t = 0; t < samples; ++t)
    ++counts[mutate_permutation(id, PermScheme::Transposition, 1, rng).values()];
  REQUIRE(counts.size() == 3);
  for (const auto& [v, c] : counts)
    CHECK(std::abs(static_cast<double>(c) / samples - 1.0 / 3.0) < 0.02);
}

TEST_CASE("sample_uniform_permutation") {
  Rng rng(29);
  CHECK(sample_uniform_permutation(1, rng) == Permutation::identity(1));

  std::map<std::vector<int>, int> counts;
  const int samples = 100000;
  for (int t = 0; t < samples; ++t) ++counts[sample_uniform_permutation(3, rng).values()];
  REQUIRE(counts.size() == 6);
  for (const auto& [v, c] : counts)
    CHECK(std::abs(static_cast<double>(c) / samples - 1.0 / 6.0) < 0.01);

  for (int t = 0; t < 50; ++t) {
    const auto s = sample_uniform_permutation(100, rng);
    std::set<int> seen(s.values().begin(), s.values().end());
    REQUIRE(static_cast<int>(seen.size()) == 100);
  }
}

TEST_CASE("permutation literals") {
  CHECK(format_permutation(perm({3, 5, 4, 1, 2})) == "3,5,4,1,2");
  CHECK(parse_permutation("3,5,4,1,2") == perm({3, 5, 4, 1, 2}));
  CHECK_THROWS_AS(parse_permutation("3,x,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1,1,2"), std::invalid_argument);
}
