#pragma once

// Small tree builders and random instance generators shared by the unit
// tests and the acceptance binary.

#include "greedy_spectra/construction.hpp"
#include "greedy_spectra/enumeration.hpp"
#include "greedy_spectra/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace support {

using greedy_spectra::Edge;
using greedy_spectra::Tree;

inline Tree path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree(n, e);
}

inline Tree star(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Tree(n, e);
}

// Center 0 with legs of the given lengths.
inline Tree spider(const std::vector<int>& legs) {
  std::vector<Edge> e;
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree(next, e);
}

// Two adjacent centers 0 and 1 with a and b pendant leaves.
inline Tree double_star(int a, int b) {
  std::vector<Edge> e{{0, 1}};
  int next = 2;
  for (int i = 0; i < a; ++i) e.emplace_back(0, next++);
  for (int i = 0; i < b; ++i) e.emplace_back(1, next++);
  return Tree(next, e);
}

inline Tree relabel(const Tree& t, const std::vector<int>& perm) {
  std::vector<Edge> e;
  for (const auto& [u, v] : t.edges()) e.emplace_back(perm[static_cast<std::size_t>(v)], perm[static_cast<std::size_t>(u)]);
  std::reverse(e.begin(), e.end());
  return Tree(t.size(), e);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Random labelled tree on n vertices from a uniform Pruefer word.
inline Tree random_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return Tree();
  if (n == 2) return Tree(2, {{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> word(static_cast<std::size_t>(n - 2));
  for (auto& x : word) x = pick(rng);
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int x : word) ++deg[static_cast<std::size_t>(x)];
  std::vector<Edge> e;
  for (int x : word) {
    int leaf = 0;
    while (deg[static_cast<std::size_t>(leaf)] != 1) ++leaf;
    e.emplace_back(leaf, x);
    --deg[static_cast<std::size_t>(leaf)];
    --deg[static_cast<std::size_t>(x)];
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] == 1) last.push_back(v);
  }
  e.emplace_back(last[0], last[1]);
  return Tree(n, e);
}

// Plain prefix-sum majorization of two sequences taken in the given order.
inline bool dominates_in_order(const std::vector<long>& a, const std::vector<long>& b) {
  long pa = 0;
  long pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pb > pa) return false;
  }
  return true;
}

inline std::vector<long> sorted_desc(std::vector<long> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

// A non-increasing A and a shuffled B with B majorized by A, entries in
// [0, max_entry]. Half the draws keep equal sums (Robin Hood transfers), the
// rest lower B below A entrywise.
struct MajorizedPair {
  std::vector<long> a;
  std::vector<long> b;
};

inline MajorizedPair random_majorized_pair(std::mt19937_64& rng, std::size_t n, long max_entry) {
  std::uniform_int_distribution<long> entry(0, max_entry);
  MajorizedPair p;
  p.a.resize(n);
  for (auto& x : p.a) x = entry(rng);
  std::sort(p.a.begin(), p.a.end(), std::greater<>());
  p.b = p.a;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  if (rng() & 1u) {
    for (int step = 0; step < 8; ++step) {
      const std::size_t i = idx(rng);
      const std::size_t j = idx(rng);
      if (p.b[i] - p.b[j] < 2) continue;
      const long amount = std::uniform_int_distribution<long>(1, (p.b[i] - p.b[j]) / 2)(rng);
      p.b[i] -= amount;
      p.b[j] += amount;
    }
  } else {
    for (auto& x : p.b) x -= std::uniform_int_distribution<long>(0, x)(rng);
  }
  std::shuffle(p.b.begin(), p.b.end(), rng);
  return p;
}

// Level greedy trees for every leveled degree sequence realised by a rooted
// tree on at most max_n vertices.
inline std::vector<Tree> all_level_greedy_trees(int max_n) {
  using namespace greedy_spectra;
  std::set<std::pair<int, std::vector<std::vector<int>>>> seen;
  std::vector<Tree> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& t : enumerate_all_trees(n)) {
      for (const auto& root : all_roots(t)) {
        const auto ld = leveled_degree_sequence(t, root);
        if (seen.emplace(static_cast<int>(ld.root_kind()), ld.levels()).second) out.push_back(build_level_greedy(ld));
      }
    }
  }
  return out;
}

}  // namespace support
