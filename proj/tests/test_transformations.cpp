#include "greedy_spectra/canonical.hpp"
#include "greedy_spectra/construction.hpp"
#include "greedy_spectra/enumeration.hpp"
#include "greedy_spectra/error.hpp"
#include "greedy_spectra/transformations.hpp"
#include "greedy_spectra/walks.hpp"
#include "oracles/oracles.hpp"
#include "support.hpp"

#include <doctest.h>


using namespace greedy_spectra;

namespace {

DegreeSequence seq(std::vector<int> d) { return DegreeSequence::validate(std::move(d)); }

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

TEST_SUITE("transformations") {
  TEST_CASE("moving a leaf from the spider to a sibling") {
    const Tree g = build_greedy_tree(seq({3, 2, 2, 1, 1, 1}));
    const Vertex g22 = *g.vertex_with_label({2, 2});
    REQUIRE(g.degree(g22) == 2);
    const Vertex leaf = g.children(g22).front();
    const Tree t = move_branch(g, {{2, 2}, {2, 1}, leaf});
    CHECK(t.sorted_degrees() == std::vector<int>{3, 3, 1, 1, 1, 1});
    CHECK(is_isomorphic(t, support::double_star(2, 2)));
    CHECK(t.edges().size() == g.edges().size());
    CHECK(t.root() == g.root());
    CHECK(spectral_moment(g, 4) == 30);
    CHECK(spectral_moment(t, 4) == 34);
    CHECK(oracles::trace_of_power(t, 4) == 34);
  }

  TEST_CASE("invalid moves") {
    const Tree g = build_greedy_tree(seq({3, 2, 2, 1, 1, 1}));
    const Vertex g22 = *g.vertex_with_label({2, 2});
    const Vertex g21 = *g.vertex_with_label({2, 1});
    const Vertex leaf = g.children(g22).front();
    CHECK(code_of([&] { move_branch(g, {{2, 2}, {2, 2}, leaf}); }) == ErrorCode::InvalidMove);
    CHECK(code_of([&] { move_branch(g, {{2, 1}, {2, 2}, g.children(g21).front()}); }) == ErrorCode::InvalidMove);
    CHECK(code_of([&] { move_branch(g, {{2, 2}, {3, 1}, leaf}); }) == ErrorCode::InvalidMove);
    // A branch that is not hanging from the source.
    CHECK(code_of([&] { move_branch(g, {{2, 2}, {2, 1}, g.children(g21).front()}); }) == ErrorCode::InvalidMove);
    // Level 1 has only the root; the last level has nothing to move.
    CHECK(code_of([&] { move_branch(g, {{3, 2}, {3, 1}, 0}); }) == ErrorCode::InvalidMove);
    // Unlabelled input.
    CHECK(code_of([&] { move_branch(g.with_root(g.root()), {{2, 2}, {2, 1}, leaf}); }) == ErrorCode::InvalidMove);
    for (const auto& m : valid_branch_moves(g)) CHECK(m.target.index < m.source.index);
  }

  TEST_CASE("edge-rooted moves may act on the root level") {
    using K = LeveledDegreeSequence::RootKind;
    const Tree g = build_edge_rooted_level_greedy(LeveledDegreeSequence({{3, 2}, {1, 1, 1}}, K::Edge));
    const auto moves = valid_branch_moves(g);
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].source == GreedyLabel{1, 2});
    const Tree t = move_branch(g, moves[0]);
    CHECK(t.sorted_degrees() == std::vector<int>{4, 1, 1, 1, 1});
    CHECK(spectral_moment(t, 4) > spectral_moment(g, 4));
  }

  TEST_CASE("branch moves never lower closed walk counts") {
    std::size_t checked = 0;
    for (const Tree& g : support::all_level_greedy_trees(9)) {
      const auto before = spectral_moments_up_to(g, 12);
      for (const auto& m : valid_branch_moves(g)) {
        const Tree t = move_branch(g, m);
        CHECK(t.edges().size() == g.edges().size());
        CHECK(t.degree(*g.vertex_with_label(m.source)) == g.degree(*g.vertex_with_label(m.source)) - 1);
        CHECK(t.degree(*g.vertex_with_label(m.target)) == g.degree(*g.vertex_with_label(m.target)) + 1);
        const auto after = spectral_moments_up_to(t, 12);
        for (std::size_t k = 0; k <= 12; k += 2) {
          CHECK(after[k] >= before[k]);
          if (k >= 4) CHECK(after[k] > before[k]);
        }
        ++checked;
      }
    }
    MESSAGE("branch moves checked: " << checked);
    CHECK(checked > 0);
  }

  TEST_CASE("majorization steps") {
    CHECK(majorization_step(seq({2, 2, 1, 1}), seq({3, 1, 1, 1})) == seq({3, 1, 1, 1}));
    CHECK(majorization_step(seq({2, 2, 2, 2, 1, 1}), seq({3, 2, 2, 1, 1, 1})) == seq({3, 2, 2, 1, 1, 1}));
    CHECK(code_of([] { majorization_step(seq({2, 2, 1, 1}), seq({2, 2, 1, 1})); }) == ErrorCode::AlreadyEqual);
    CHECK(code_of([] { majorization_step(seq({3, 1, 1, 1}), seq({2, 2, 1, 1})); }) == ErrorCode::NotMajorized);
    CHECK(code_of([] { majorization_step(seq({2, 1, 1}), seq({3, 1, 1, 1})); }) == ErrorCode::LengthMismatch);
  }

  TEST_CASE("a step that would overshoot falls back to the first excess entry") {
    // Raising 4 -> 5 and lowering the last 2 gives (5,4,2,1^7), whose second
    // prefix sum 9 exceeds the 8 of d.
    const auto b = seq({4, 4, 2, 2, 1, 1, 1, 1, 1, 1});
    const auto d = seq({5, 3, 3, 1, 1, 1, 1, 1, 1, 1});
    REQUIRE(majorizes(d, b));
    const auto next = majorization_step(b, d);
    CHECK(next == seq({5, 3, 2, 2, 1, 1, 1, 1, 1, 1}));
    CHECK(majorizes(d, next));
    const auto chain = majorization_chain(b, d);
    CHECK(chain.back() == d);
  }

  TEST_CASE("majorization chains") {
    for (int n = 4; n <= 10; ++n) {
      std::vector<int> p(static_cast<std::size_t>(n), 2);
      p[static_cast<std::size_t>(n - 1)] = p[static_cast<std::size_t>(n - 2)] = 1;
      std::vector<int> s(static_cast<std::size_t>(n), 1);
      s[0] = n - 1;
      const auto chain = majorization_chain(seq(p), seq(s));
      CHECK(chain.size() == static_cast<std::size_t>(n - 2));  // n - 3 steps
      // Each step moves one unit from the last 2 onto the first entry.
      for (std::size_t i = 0; i < chain.size(); ++i) {
        CHECK(chain[i][0] == 2 + static_cast<int>(i));
        CHECK(std::count(chain[i].begin(), chain[i].end(), 2) == n - 3 - static_cast<int>(i) + (i == 0 ? 1 : 0));
      }
    }
    const auto single = majorization_chain(seq({2, 2, 1, 1}), seq({2, 2, 1, 1}));
    CHECK(single.size() == 1);

    const auto chain = majorization_chain(seq({2, 2, 2, 2, 1, 1}), seq({5, 1, 1, 1, 1, 1}));
    CHECK(chain.front() == seq({2, 2, 2, 2, 1, 1}));
    CHECK(chain.back() == seq({5, 1, 1, 1, 1, 1}));
    CHECK(std::find(chain.begin(), chain.end(), seq({3, 2, 2, 1, 1, 1})) != chain.end());
    for (std::size_t i = 1; i < chain.size(); ++i) {
      CHECK(majorizes(chain[i], chain[i - 1]));
      CHECK(majorizes(chain.back(), chain[i]));
    }
  }

  TEST_CASE("steps close the gap by two") {
    for (int n = 2; n <= 10; ++n) {
      const auto all = all_tree_degree_sequences(n);
      for (const auto& b : all) {
        for (const auto& d : all) {
          if (b == d || !majorizes(d, b)) continue;
          const auto next = majorization_step(b, d);
          CHECK(majorizes(next, b));
          CHECK(majorizes(d, next));
          int before = 0;
          int after = 0;
          for (std::size_t i = 0; i < b.size(); ++i) {
            before += std::abs(d[i] - b[i]);
            after += std::abs(d[i] - next[i]);
          }
          CHECK(after == before - 2);
        }
      }
    }
  }

  TEST_CASE("midpoint roots") {
    const Tree p5 = support::path(5);
    CHECK(midpoint_root(p5, 0, 4) == Root{VertexRoot{2}});
    const Root r = midpoint_root(p5, 0, 3);
    const auto e = std::get<EdgeRoot>(r);
    CHECK(std::minmax(e.u, e.v) == std::minmax(1, 2));
    const auto adjacent = std::get<EdgeRoot>(midpoint_root(p5, 1, 2));
    CHECK(std::minmax(adjacent.u, adjacent.v) == std::minmax(1, 2));
    CHECK(code_of([&] { midpoint_root(p5, 1, 1); }) == ErrorCode::InvalidBounds);
  }

  TEST_CASE("one transfer step sits between consecutive greedy trees") {
    for (int n = 3; n <= 9; ++n) {
      const auto all = all_tree_degree_sequences(n);
      for (const auto& b : all) {
        for (const auto& d : all) {
          if (b == d || !majorizes(d, b)) continue;
          const auto step = transfer_step(b, d);
          const auto next = majorization_step(b, d);
          CHECK(step.tree.sorted_degrees() == next.degrees());
          const auto low = spectral_moments_up_to(build_greedy_tree(b), 12);
          const auto mid = spectral_moments_up_to(step.tree, 12);
          const auto high = spectral_moments_up_to(build_greedy_tree(next), 12);
          for (std::size_t k = 0; k <= 12; k += 2) {
            CHECK(low[k] <= mid[k]);
            CHECK(mid[k] <= high[k]);
          }
          CHECK(low[4] < mid[4]);
        }
      }
    }
  }
}
