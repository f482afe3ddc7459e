#include "greedy_spectra/enumeration.hpp"

#include "greedy_spectra/canonical.hpp"
#include "greedy_spectra/error.hpp"

#include <map>
#include <string>

namespace greedy_spectra {

namespace {

class Assembler {
 public:
  explicit Assembler(const DegreeSequence& d) : n_(static_cast<int>(d.size())) {
    for (int x : d) {
      if (static_cast<std::size_t>(x) >= available_.size()) available_.resize(static_cast<std::size_t>(x) + 1, 0);
      ++available_[static_cast<std::size_t>(x)];
    }
  }

  std::map<std::string, Tree> run() {
    const int root_degree = static_cast<int>(available_.size()) - 1;
    take(root_degree);
    queue_.push_back({0, root_degree});
    open_slots_ = root_degree;
    expand(0);
    return std::move(found_);
  }

 private:
  struct Pending {
    Vertex vertex;
    int children;
  };

  void take(int degree) {
    --available_[static_cast<std::size_t>(degree)];
    --remaining_;
  }
  void give_back(int degree) {
    ++available_[static_cast<std::size_t>(degree)];
    ++remaining_;
  }

  void expand(std::size_t next) {
    if (remaining_ == 0) {
      Tree t(n_, edges_);
      auto code = canonical_code(t);
      found_.try_emplace(std::move(code), std::move(t));
      return;
    }
    if (next >= queue_.size() || open_slots_ == 0 || open_slots_ > remaining_) return;
    const Pending p = queue_[next];
    choose_children(next, p.vertex, p.children, static_cast<int>(available_.size()) - 1);
  }

  // Picks `left` child degrees for `parent`, each at most `max_degree`.
  void choose_children(std::size_t next, Vertex parent, int left, int max_degree) {
    if (left == 0) {
      expand(next + 1);
      return;
    }
    for (int deg = max_degree; deg >= 1; --deg) {
      if (available_[static_cast<std::size_t>(deg)] == 0) continue;
      const Vertex child = static_cast<Vertex>(n_ - remaining_);
      take(deg);
      edges_.emplace_back(parent, child);
      queue_.push_back({child, deg - 1});
      open_slots_ += deg - 2;  // one slot filled, deg-1 opened
      choose_children(next, parent, left - 1, deg);
      open_slots_ -= deg - 2;
      queue_.pop_back();
      edges_.pop_back();
      give_back(deg);
    }
  }

  int n_;
  int remaining_ = n_;
  int open_slots_ = 0;
  std::vector<int> available_;
  std::vector<Pending> queue_;
  std::vector<Edge> edges_;
  std::map<std::string, Tree> found_;
};

void check_cap(int n, int cap) {
  if (n > cap) {
    throw Error(ErrorCode::CapExceeded,
                "n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  }
}

}  // namespace

std::vector<Tree> enumerate_trees(const DegreeSequence& d, int cap) {
  check_cap(static_cast<int>(d.size()), cap);
  if (d.is_degenerate()) return {Tree()};
  auto found = Assembler(d).run();
  std::vector<Tree> out;
  out.reserve(found.size());
  for (auto& [code, t] : found) out.push_back(std::move(t));
  return out;
}

std::vector<Tree> enumerate_all_trees(int n, int cap) {
  check_cap(n, cap);
  std::map<std::string, Tree> all;
  for (const auto& d : all_tree_degree_sequences(n)) {
    for (auto& t : enumerate_trees(d, cap)) {
      auto code = canonical_code(t);
      all.try_emplace(std::move(code), std::move(t));
    }
  }
  std::vector<Tree> out;
  for (auto& [code, t] : all) out.push_back(std::move(t));
  return out;
}

std::vector<Tree> enumerate_trees_with_max_degree(int n, int max_degree, bool exact, int cap) {
  check_cap(n, cap);
  std::map<std::string, Tree> all;
  for (const auto& d : all_tree_degree_sequences(n)) {
    if (d.max_degree() > max_degree || (exact && d.max_degree() != max_degree)) continue;
    for (auto& t : enumerate_trees(d, cap)) {
      auto code = canonical_code(t);
      all.try_emplace(std::move(code), std::move(t));
    }
  }
  std::vector<Tree> out;
  for (auto& [code, t] : all) out.push_back(std::move(t));
  return out;
}

}  // namespace greedy_spectra
