#include "greedy_spectra/degree_sequence.hpp"

#include "greedy_spectra/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace greedy_spectra {

DegreeSequence DegreeSequence::validate(std::vector<int> raw) {
  if (raw.empty()) throw Error(ErrorCode::RejectEmpty, "degree sequence is empty");
  std::sort(raw.begin(), raw.end(), std::greater<>());
  const auto n = static_cast<std::int64_t>(raw.size());
  if (n == 1) {
    if (raw[0] != 0) {
      throw Error(ErrorCode::RejectNotRealizable, "a one-vertex tree has degree sequence (0)");
    }
    return DegreeSequence(std::move(raw));
  }
  if (raw.back() < 1) {
    throw Error(ErrorCode::RejectNotRealizable, "every vertex of a tree with n >= 2 has degree >= 1");
  }
  const std::int64_t sum = std::accumulate(raw.begin(), raw.end(), std::int64_t{0});
  if (sum != 2 * (n - 1)) {
    throw Error(ErrorCode::RejectNotRealizable,
                "degree sum " + std::to_string(sum) + " differs from 2(n-1) = " + std::to_string(2 * (n - 1)));
  }
  return DegreeSequence(std::move(raw));
}

LeveledDegreeSequence::LeveledDegreeSequence(std::vector<std::vector<int>> levels, RootKind kind)
    : levels_(std::move(levels)), kind_(kind) {
  if (levels_.empty()) throw Error(ErrorCode::Unrealizable, "no levels");
  if (kind_ == RootKind::Edge && levels_[0].size() != 2) {
    throw Error(ErrorCode::Unrealizable, "an edge root has exactly two first-level vertices");
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const auto& lv = levels_[i];
    if (lv.empty()) throw Error(ErrorCode::Unrealizable, "level " + std::to_string(i) + " is empty");
    if (!std::is_sorted(lv.begin(), lv.end(), std::greater<>())) {
      throw Error(ErrorCode::Unrealizable, "level " + std::to_string(i) + " is not non-increasing");
    }
    // Non-root vertices (and edge-root endpoints) have a parent edge.
    const int min_degree = (i == 0 && kind_ == RootKind::Vertex) ? 0 : 1;
    if (lv.back() < min_degree) {
      throw Error(ErrorCode::Unrealizable, "level " + std::to_string(i) + " has a degree below " +
                                               std::to_string(min_degree));
    }
    std::int64_t children = 0;
    for (int d : lv) children += child_count(i, d);
    const std::int64_t expected = i + 1 < levels_.size() ? static_cast<std::int64_t>(levels_[i + 1].size()) : 0;
    if (children != expected) {
      throw Error(ErrorCode::Unrealizable, "level " + std::to_string(i) + " has " + std::to_string(children) +
                                               " child slots but the next level has " +
                                               std::to_string(expected) + " vertices");
    }
  }
}

std::size_t LeveledDegreeSequence::vertex_count() const noexcept {
  std::size_t n = 0;
  for (const auto& lv : levels_) n += lv.size();
  return n;
}

namespace {

template <class T>
bool majorizes_impl(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "sequences of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  std::vector<T> sa(a.begin(), a.end());
  std::vector<T> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end(), std::greater<>());
  std::sort(sb.begin(), sb.end(), std::greater<>());
  std::int64_t pa = 0;
  std::int64_t pb = 0;
  for (std::size_t i = 0; i < sa.size(); ++i) {
    pa += static_cast<std::int64_t>(sa[i]);
    pb += static_cast<std::int64_t>(sb[i]);
    if (pb > pa) return false;
  }
  return true;
}

}  // namespace

bool majorizes(std::span<const int> a, std::span<const int> b) { return majorizes_impl(a, b); }

bool majorizes(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  return majorizes_impl(a, b);
}

std::vector<int> star_product(std::span<const int> a, std::span<const int> k) {
  if (a.size() != k.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "sequences of length " + std::to_string(a.size()) + " and " + std::to_string(k.size()));
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k[i] < 0) throw Error(ErrorCode::InvalidBounds, "negative repetition count");
    out.insert(out.end(), static_cast<std::size_t>(k[i]), a[i]);
  }
  return out;
}

DegreeSequence dominant_for_max_degree(int n, int max_degree) {
  if (n < 2 || max_degree < 2 || max_degree > n - 1) {
    throw Error(ErrorCode::InvalidBounds, "need n >= 2 and 2 <= max degree <= n-1");
  }
  const int m = (n - 2) / (max_degree - 1);
  const int r = n - 1 - m * (max_degree - 1);
  std::vector<int> d(static_cast<std::size_t>(m), max_degree);
  d.push_back(r);
  d.insert(d.end(), static_cast<std::size_t>(n - m - 1), 1);
  return DegreeSequence::validate(std::move(d));
}

DegreeSequence dominant_for_leaf_count(int n, int leaves) {
  if (leaves < 2 || leaves > n - 1) throw Error(ErrorCode::InvalidBounds, "need 2 <= s <= n-1");
  std::vector<int> d{leaves};
  d.insert(d.end(), static_cast<std::size_t>(n - leaves - 1), 2);
  d.insert(d.end(), static_cast<std::size_t>(leaves), 1);
  return DegreeSequence::validate(std::move(d));
}

DegreeSequence dominant_for_independence_number(int n, int alpha) {
  if (n < 2 || 2 * alpha < n || alpha > n - 1) {
    throw Error(ErrorCode::InvalidBounds, "need n/2 <= alpha <= n-1");
  }
  std::vector<int> d{alpha};
  d.insert(d.end(), static_cast<std::size_t>(n - alpha - 1), 2);
  d.insert(d.end(), static_cast<std::size_t>(alpha), 1);
  return DegreeSequence::validate(std::move(d));
}

std::vector<DegreeSequence> all_tree_degree_sequences(int n) {
  std::vector<DegreeSequence> out;
  if (n < 1) return out;
  if (n == 1) {
    out.push_back(DegreeSequence::validate({0}));
    return out;
  }
  // Distribute the n-2 surplus units (degree minus one) as a partition with at
  // most n parts, largest part first.
  std::vector<int> excess;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      std::vector<int> d(static_cast<std::size_t>(n), 1);
      for (std::size_t i = 0; i < excess.size(); ++i) d[i] += excess[i];
      out.push_back(DegreeSequence::validate(std::move(d)));
      return;
    }
    if (static_cast<int>(excess.size()) == n) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      excess.push_back(part);
      rec(remaining - part, part);
      excess.pop_back();
    }
  };
  rec(n - 2, n - 2);
  return out;
}

std::string to_string(const DegreeSequence& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  return s;
}

}  // namespace greedy_spectra
