#include "greedy_spectra/construction.hpp"
#include "greedy_spectra/degree_sequence.hpp"
#include "greedy_spectra/error.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace greedy_spectra;

namespace {

// Every non-increasing list of n integers in [1, n-1] with sum 2(n-1), by
// direct search rather than by partitioning the surplus.
std::vector<std::vector<int>> brute_force_sequences(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int cap, int sum) {
    if (static_cast<int>(cur.size()) == n) {
      if (sum == 2 * (n - 1)) out.push_back(cur);
      return;
    }
    for (int d = cap; d >= 1; --d) {
      cur.push_back(d);
      rec(d, sum + d);
      cur.pop_back();
    }
  };
  rec(n - 1, 0);
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_SUITE("degree_sequences") {
  TEST_CASE("validate sorts and checks the handshake sum") {
    CHECK(DegreeSequence::validate({1, 2, 2, 1}).degrees() == std::vector<int>{2, 2, 1, 1});
    CHECK(DegreeSequence::validate({3, 1, 1, 1}).degrees() == std::vector<int>{3, 1, 1, 1});
    CHECK(code_of([] { DegreeSequence::validate({3, 3, 1, 1}); }) == ErrorCode::RejectNotRealizable);
    CHECK(code_of([] { DegreeSequence::validate({}); }) == ErrorCode::RejectEmpty);
    CHECK(code_of([] { DegreeSequence::validate({2, 2, 2, 0}); }) == ErrorCode::RejectNotRealizable);
    CHECK(code_of([] { DegreeSequence::validate({1}); }) == ErrorCode::RejectNotRealizable);
    const auto one = DegreeSequence::validate({0});
    CHECK(one.is_degenerate());
    CHECK(DegreeSequence::validate({1, 1}).degrees() == std::vector<int>{1, 1});
  }

  TEST_CASE("majorizes") {
    const std::vector<int> star{3, 1, 1, 1};
    const std::vector<int> path{2, 2, 1, 1};
    CHECK(majorizes(std::span<const int>(star), std::span<const int>(path)));
    CHECK_FALSE(majorizes(std::span<const int>(path), std::span<const int>(star)));
    CHECK(majorizes(std::span<const int>(path), std::span<const int>(path)));
    CHECK(majorizes(DegreeSequence::validate({3, 2, 2, 1, 1, 1}), DegreeSequence::validate({2, 2, 2, 2, 1, 1})));
    const std::vector<int> shorter{2, 1};
    CHECK(code_of([&] { majorizes(std::span<const int>(star), std::span<const int>(shorter)); }) ==
          ErrorCode::LengthMismatch);
  }

  TEST_CASE("sorted prefix sums decide majorization over all permutations") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(1, 6);
    std::uniform_int_distribution<int> entry(0, 6);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto n = static_cast<std::size_t>(len(rng));
      std::vector<int> a(n);
      std::vector<int> b(n);
      for (auto& x : a) x = entry(rng);
      for (auto& x : b) x = entry(rng);
      std::sort(a.begin(), a.end(), std::greater<>());
      std::sort(b.begin(), b.end(), std::greater<>());
      CHECK(majorizes(std::span<const int>(a), std::span<const int>(b)) == oracles::majorizes_all_permutations(a, b));
    }
  }

  TEST_CASE("majorization is a partial order on non-increasing sequences") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> entry(0, 5);
    auto draw = [&] {
      std::vector<int> v(4);
      for (auto& x : v) x = entry(rng);
      std::sort(v.begin(), v.end(), std::greater<>());
      return v;
    };
    for (int trial = 0; trial < 3000; ++trial) {
      const auto a = draw();
      const auto b = draw();
      const auto c = draw();
      auto m = [](const std::vector<int>& x, const std::vector<int>& y) {
        return majorizes(std::span<const int>(x), std::span<const int>(y));
      };
      CHECK(m(a, a));
      if (m(a, b) && m(b, a)) {
        // Equal prefix sums throughout force equality.
        CHECK(a == b);
      }
      if (m(a, b) && m(b, c)) CHECK(m(a, c));
    }
  }

  TEST_CASE("star product") {
    const std::vector<int> a{1, 3, 2};
    const std::vector<int> k{2, 3, 4};
    CHECK(star_product(a, k) == std::vector<int>{1, 1, 3, 3, 3, 2, 2, 2, 2});
    const std::vector<int> five{5};
    const std::vector<int> three{3};
    CHECK(star_product(five, three) == std::vector<int>{5, 5, 5});
    const std::vector<int> ones{1, 1, 1};
    CHECK(star_product(a, ones) == a);
    const std::vector<int> two{1, 2};
    CHECK(code_of([&] { star_product(a, two); }) == ErrorCode::LengthMismatch);
  }

  TEST_CASE("lemma: products of majorized pairs, summed") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> len(1, 8);
    for (int trial = 0; trial < 10000; ++trial) {
      const auto n = len(rng);
      const auto p = support::random_majorized_pair(rng, n, 10);
      const auto q = support::random_majorized_pair(rng, n, 10);
      long lhs = 0;
      long rhs = 0;
      for (std::size_t i = 0; i < n; ++i) {
        lhs += p.b[i] * q.b[i];
        rhs += p.a[i] * q.a[i];
      }
      REQUIRE(lhs <= rhs);
    }
  }

  TEST_CASE("lemma: products of majorized pairs, entrywise") {
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<std::size_t> len(1, 8);
    for (int trial = 0; trial < 10000; ++trial) {
      const auto n = len(rng);
      const auto p = support::random_majorized_pair(rng, n, 10);
      const auto q = support::random_majorized_pair(rng, n, 10);
      std::vector<std::int64_t> top(n);
      std::vector<std::int64_t> low(n);
      for (std::size_t i = 0; i < n; ++i) {
        top[i] = p.a[i] * q.a[i];
        low[i] = p.b[i] * q.b[i];
      }
      REQUIRE(majorizes(std::span<const std::int64_t>(top), std::span<const std::int64_t>(low)));
    }
  }

  TEST_CASE("lemma: star products with a permuted multiplier") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::size_t> len(1, 8);
    std::uniform_int_distribution<int> mult(1, 10);
    for (int trial = 0; trial < 10000; ++trial) {
      const auto n = len(rng);
      const auto p = support::random_majorized_pair(rng, n, 10);
      std::vector<int> c(n);
      for (auto& x : c) x = mult(rng);
      std::sort(c.begin(), c.end(), std::greater<>());
      std::vector<int> shuffled = c;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const std::vector<int> a(p.a.begin(), p.a.end());
      const std::vector<int> b(p.b.begin(), p.b.end());
      const auto top = star_product(a, c);
      const auto low = star_product(b, shuffled);
      REQUIRE(support::dominates_in_order(std::vector<long>(top.begin(), top.end()),
                                          support::sorted_desc(std::vector<long>(low.begin(), low.end()))));
    }
  }

  TEST_CASE("dominant sequence for a maximum degree") {
    CHECK(dominant_for_max_degree(15, 3).degrees() == std::vector<int>{3, 3, 3, 3, 3, 3, 2, 1, 1, 1, 1, 1, 1, 1, 1});
    CHECK(dominant_for_max_degree(8, 3).degrees() == std::vector<int>{3, 3, 3, 1, 1, 1, 1, 1});
    CHECK(dominant_for_max_degree(7, 3).degrees() == std::vector<int>{3, 3, 2, 1, 1, 1, 1});
    for (int n = 3; n <= 12; ++n) {
      std::vector<int> star(static_cast<std::size_t>(n), 1);
      star[0] = n - 1;
      CHECK(dominant_for_max_degree(n, n - 1).degrees() == star);
    }
    CHECK(code_of([] { dominant_for_max_degree(5, 1); }) == ErrorCode::InvalidBounds);
    CHECK(code_of([] { dominant_for_max_degree(5, 5); }) == ErrorCode::InvalidBounds);
  }

  TEST_CASE("Volkmann block count is the largest feasible one") {
    // Search all (m, r) with m entries equal to max degree, one entry r in
    // [1, max degree], and leaves filling the rest.
    for (int n = 3; n <= 14; ++n) {
      for (int delta = 2; delta <= n - 1; ++delta) {
        int best_m = -1;
        int best_r = -1;
        for (int m = 0; m <= n - 1; ++m) {
          for (int r = 1; r <= delta; ++r) {
            if (m * delta + r + (n - m - 1) == 2 * (n - 1) && m > best_m) {
              best_m = m;
              best_r = r;
            }
          }
        }
        REQUIRE(best_m >= 0);
        std::vector<int> expected(static_cast<std::size_t>(best_m), delta);
        expected.push_back(best_r);
        expected.resize(static_cast<std::size_t>(n), 1);
        std::sort(expected.begin(), expected.end(), std::greater<>());
        CHECK(dominant_for_max_degree(n, delta).degrees() == expected);
      }
    }
  }

  TEST_CASE("Volkmann sequence majorizes every sequence within the degree bound") {
    for (int n = 3; n <= 12; ++n) {
      const auto all = brute_force_sequences(n);
      for (int delta = 2; delta <= n - 1; ++delta) {
        const auto top = dominant_for_max_degree(n, delta);
        for (const auto& d : all) {
          if (d[0] > delta) continue;
          CHECK(majorizes(top.degrees(), d));
        }
      }
    }
  }

  TEST_CASE("dominant sequences for leaves and independence number") {
    CHECK(dominant_for_leaf_count(7, 3).degrees() == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
    CHECK(dominant_for_leaf_count(6, 5).degrees() == std::vector<int>{5, 1, 1, 1, 1, 1});
    CHECK(dominant_for_leaf_count(5, 2).degrees() == std::vector<int>{2, 2, 2, 1, 1});
    CHECK(dominant_for_independence_number(8, 5).degrees() == std::vector<int>{5, 2, 2, 1, 1, 1, 1, 1});
    const auto six = dominant_for_independence_number(6, 3);
    CHECK(six.degrees() == std::vector<int>{3, 2, 2, 1, 1, 1});
    CHECK(oracles::independence_number(build_greedy_tree(six)) == 3);
    for (int n = 3; n <= 12; ++n) {
      for (int alpha = (n + 1) / 2; alpha <= n - 1; ++alpha) {
        CHECK(oracles::independence_number(build_greedy_tree(dominant_for_independence_number(n, alpha))) == alpha);
      }
      for (int s = 2; s <= n - 1; ++s) {
        const auto d = dominant_for_leaf_count(n, s);
        CHECK(std::count(d.begin(), d.end(), 1) == s);
      }
    }
    CHECK(code_of([] { dominant_for_leaf_count(5, 1); }) == ErrorCode::InvalidBounds);
    CHECK(code_of([] { dominant_for_independence_number(8, 3); }) == ErrorCode::InvalidBounds);
  }

  TEST_CASE("all tree degree sequences") {
    CHECK(all_tree_degree_sequences(1).size() == 1);
    // Partition numbers p(n-2).
    const std::vector<std::size_t> partitions{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 2; n <= 12; ++n) {
      const auto all = all_tree_degree_sequences(n);
      CHECK(all.size() == partitions[static_cast<std::size_t>(n - 2)]);
      const auto brute = brute_force_sequences(n);
      REQUIRE(brute.size() == all.size());
      for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i].degrees() == brute[i]);
    }
  }
}
