#include "greedy_spectra/verification.hpp"

#include "greedy_spectra/canonical.hpp"
#include "greedy_spectra/construction.hpp"
#include "greedy_spectra/error.hpp"
#include "greedy_spectra/spectral.hpp"
#include "greedy_spectra/walks.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <map>

namespace greedy_spectra {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::PassWithTies: return "pass-with-ties";
  }
  return "unknown";
}

Json VerificationReport::to_json(bool include_timing) const {
  Json j;
  j["claim"] = claim;
  j["instance"] = instance;
  j["status"] = std::string(to_string(status));
  j["witness"] = witness;
  if (counterexample) {
    Json c;
    c["tree"] = tree_to_json(counterexample->tree);
    c["k"] = counterexample->k >= 0 ? Json(counterexample->k) : Json(nullptr);
    c["detail"] = counterexample->detail;
    j["counterexample"] = std::move(c);
  } else {
    j["counterexample"] = nullptr;
  }
  Json stats;
  stats["trees_enumerated"] = trees_enumerated;
  for (const auto& [key, value] : details.items()) stats[key] = value;
  if (include_timing) stats["elapsed_ms"] = elapsed_ms;
  j["stats"] = std::move(stats);
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  double elapsed_ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_ = Clock::now();
};

void check_limits(int n, int k_max, const VerifyConfig& cfg) {
  if (n > cfg.enumeration_cap) {
    throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                            std::to_string(cfg.enumeration_cap));
  }
  if (k_max > cfg.moment_cap) {
    throw Error(ErrorCode::CapExceeded, "k = " + std::to_string(k_max) + " exceeds the moment cap " +
                                            std::to_string(cfg.moment_cap));
  }
  if (k_max < 0) throw Error(ErrorCode::InvalidBounds, "k must be non-negative");
}

void fail(VerificationReport& report, const Tree& tree, int k, std::string detail) {
  if (report.counterexample) return;
  report.status = Status::Fail;
  report.counterexample = Counterexample{tree, k, std::move(detail)};
}

Json histogram_to_json(const std::map<int, std::size_t>& h) {
  Json j = Json::object();
  for (const auto& [k, count] : h) j[std::to_string(k)] = count;
  return j;
}

}  // namespace

VerificationReport verify_greedy_maximality(const DegreeSequence& d, int k_max, const VerifyConfig& cfg) {
  check_limits(static_cast<int>(d.size()), k_max, cfg);
  const Stopwatch clock;
  VerificationReport report;
  report.claim = "greedy-maximality";
  report.instance["degree_sequence"] = to_string(d);
  report.instance["k_max"] = k_max;

  const Tree greedy = build_greedy_tree(d);
  const std::string greedy_code = canonical_code(greedy);
  report.witness = greedy_code;
  const MomentVector greedy_moments = spectral_moments_up_to(greedy, k_max);

  std::map<int, std::size_t> first_strict;
  std::size_t ties = 0;
  bool greedy_seen = false;
  for (const Tree& t : enumerate_trees(d, cfg.enumeration_cap)) {
    ++report.trees_enumerated;
    if (canonical_code(t) == greedy_code) {
      greedy_seen = true;
      continue;
    }
    const MomentVector m = spectral_moments_up_to(t, k_max);
    for (int k = 0; k <= k_max; ++k) {
      if (m[static_cast<std::size_t>(k)] > greedy_moments[static_cast<std::size_t>(k)]) {
        fail(report, t, k, "M_k(T) = " + to_decimal(m[static_cast<std::size_t>(k)]) + " exceeds M_k(G) = " +
                               to_decimal(greedy_moments[static_cast<std::size_t>(k)]));
      }
    }
    if (const auto k0 = first_strict_difference(m, greedy_moments)) {
      ++first_strict[*k0];
    } else {
      ++ties;
    }
  }
  if (!greedy_seen) fail(report, greedy, -1, "the greedy tree is missing from the enumeration");
  if (report.status != Status::Fail && ties > 0) report.status = Status::PassWithTies;
  report.details["first_strict_k"] = histogram_to_json(first_strict);
  report.details["ties"] = ties;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_majorization_monotonicity(const DegreeSequence& b, const DegreeSequence& d, int k_max,
                                                    const VerifyConfig& cfg) {
  if (b.size() != d.size()) throw Error(ErrorCode::LengthMismatch, "degree sequences differ in length");
  if (!majorizes(d, b)) throw Error(ErrorCode::NotMajorized, to_string(d) + " does not majorize " + to_string(b));
  check_limits(static_cast<int>(d.size()), k_max, cfg);
  const Stopwatch clock;
  VerificationReport report;
  report.claim = "majorization-monotonicity";
  report.instance["lower"] = to_string(b);
  report.instance["upper"] = to_string(d);
  report.instance["k_max"] = k_max;

  const Tree lower = build_greedy_tree(b);
  const Tree upper = build_greedy_tree(d);
  report.witness = canonical_code(upper);
  report.trees_enumerated = 2;
  const MomentVector ml = spectral_moments_up_to(lower, k_max);
  const MomentVector mu = spectral_moments_up_to(upper, k_max);
  Json strict = Json::array();
  for (int k = 0; k <= k_max; ++k) {
    const auto& lo = ml[static_cast<std::size_t>(k)];
    const auto& hi = mu[static_cast<std::size_t>(k)];
    if (lo > hi) {
      fail(report, lower, k, "M_k(G(b)) = " + to_decimal(lo) + " exceeds M_k(G(d)) = " + to_decimal(hi));
    } else if (!(b == d) && k % 2 == 0 && k >= 4 && lo == hi) {
      fail(report, lower, k, "M_k(G(b)) = M_k(G(d)) = " + to_decimal(lo) + " although b != d");
    }
    if (lo < hi) strict.push_back(k);
  }
  report.details["strict_k"] = std::move(strict);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_volkmann_conjecture(int n, int max_degree, int k_max, const VerifyConfig& cfg) {
  check_limits(n, k_max, cfg);
  const Stopwatch clock;
  VerificationReport report;
  report.claim = "volkmann-maximality";
  report.instance["n"] = n;
  report.instance["max_degree"] = max_degree;
  report.instance["k_max"] = k_max;

  const Tree volkmann = build_volkmann_tree(n, max_degree);
  const std::string volkmann_code = canonical_code(volkmann);
  report.witness = volkmann_code;
  const MomentVector mv = spectral_moments_up_to(volkmann, k_max);

  struct Reading {
    Status status = Status::Pass;
    std::size_t trees = 0;
    std::size_t ties = 0;
  };
  Reading at_most;
  Reading exactly;
  for (const Tree& t : enumerate_trees_with_max_degree(n, max_degree, false, cfg.enumeration_cap)) {
    ++report.trees_enumerated;
    const bool exact = t.max_degree() == max_degree;
    ++at_most.trees;
    if (exact) ++exactly.trees;
    if (canonical_code(t) == volkmann_code) continue;
    const MomentVector m = spectral_moments_up_to(t, k_max);
    bool tie = true;
    for (int k = 0; k <= k_max; k += 2) {
      const auto& mt = m[static_cast<std::size_t>(k)];
      const auto& mvk = mv[static_cast<std::size_t>(k)];
      if (mt > mvk) {
        at_most.status = Status::Fail;
        if (exact) exactly.status = Status::Fail;
        fail(report, t, k, "M_k(T) = " + to_decimal(mt) + " exceeds M_k(Volkmann) = " + to_decimal(mvk));
      }
      if (mt != mvk) tie = false;
    }
    if (tie) {
      ++at_most.ties;
      if (exact) ++exactly.ties;
    }
  }
  auto finish = [](Reading& r) {
    if (r.status != Status::Fail && r.ties > 0) r.status = Status::PassWithTies;
    Json j;
    j["status"] = std::string(to_string(r.status));
    j["trees"] = r.trees;
    j["ties"] = r.ties;
    return j;
  };
  report.details["at_most"] = finish(at_most);
  report.details["exactly"] = finish(exactly);
  if (report.status != Status::Fail && (at_most.ties > 0 || exactly.ties > 0)) report.status = Status::PassWithTies;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_spectral_corollaries(const DegreeSequence& d, double x_margin, const VerifyConfig& cfg) {
  check_limits(static_cast<int>(d.size()), 0, cfg);
  const Stopwatch clock;
  VerificationReport report;
  report.claim = "spectral-corollaries";
  report.instance["degree_sequence"] = to_string(d);
  report.instance["x_margin"] = x_margin;

  const Tree greedy = build_greedy_tree(d);
  const std::string greedy_code = canonical_code(greedy);
  report.witness = greedy_code;
  const double rho_g = spectral_radius(greedy, cfg.tol * 1e-3);
  const long double x = static_cast<long double>(rho_g) + x_margin;
  const long double p_g = evaluate_char_poly(characteristic_polynomial(greedy), x);
  const double ee_g = estrada_index(greedy, cfg.tol);

  double min_ee_gap = std::numeric_limits<double>::infinity();
  long double min_poly_gap = std::numeric_limits<long double>::infinity();
  for (const Tree& t : enumerate_trees(d, cfg.enumeration_cap)) {
    ++report.trees_enumerated;
    if (canonical_code(t) == greedy_code) continue;
    const double rho = spectral_radius(t, cfg.tol * 1e-3);
    if (rho > rho_g + cfg.tol) {
      fail(report, t, -1, "spectral radius " + std::to_string(rho) + " exceeds " + std::to_string(rho_g));
    }
    const long double p = evaluate_char_poly(characteristic_polynomial(t), x);
    if (p < p_g - cfg.tol) {
      fail(report, t, -1, "characteristic polynomial falls below the greedy tree's at x = " +
                              std::to_string(static_cast<double>(x)));
    } else if (!(p > p_g)) {
      fail(report, t, -1, "characteristic polynomial ties the greedy tree's for a non-isomorphic tree");
    }
    min_poly_gap = std::min(min_poly_gap, p - p_g);
    const double ee = estrada_index(t, cfg.tol);
    if (ee > ee_g + cfg.tol) {
      fail(report, t, -1, "Estrada index " + std::to_string(ee) + " exceeds " + std::to_string(ee_g));
    } else if (ee_g - ee < cfg.strict_margin) {
      fail(report, t, -1, "Estrada index gap below the strictness margin");
    }
    min_ee_gap = std::min(min_ee_gap, ee_g - ee);
  }
  report.details["spectral_radius"] = rho_g;
  report.details["estrada_index"] = ee_g;
  report.details["x"] = static_cast<double>(x);
  report.details["min_estrada_gap"] = std::isfinite(min_ee_gap) ? Json(min_ee_gap) : Json(nullptr);
  report.details["min_char_poly_gap"] =
      std::isfinite(min_poly_gap) ? Json(static_cast<double>(min_poly_gap)) : Json(nullptr);
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

std::pair<Tree, Tree> build_remark_pair(int r) {
  if (r < 1) throw Error(ErrorCode::InvalidBounds, "r must be at least 1");
  std::vector<int> raw{3, 3};
  raw.insert(raw.end(), static_cast<std::size_t>(4 * r - 2), 2);
  raw.insert(raw.end(), 4, 1);
  const Tree g = build_greedy_tree(DegreeSequence::validate(raw));

  // Vertices 0 and 1 are the adjacent degree-3 vertices; each gets one path
  // of r and one of r+1 further vertices.
  std::vector<Edge> edges{{0, 1}};
  int next = 2;
  auto attach_path = [&](Vertex at, int length) {
    Vertex prev = at;
    for (int i = 0; i < length; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  };
  attach_path(0, r);
  attach_path(0, r + 1);
  attach_path(1, r);
  attach_path(1, r + 1);
  Tree t(next, std::move(edges));
  return {g, std::move(t)};
}

}  // namespace greedy_spectra
