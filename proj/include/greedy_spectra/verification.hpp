#pragma once

#include "greedy_spectra/degree_sequence.hpp"
#include "greedy_spectra/enumeration.hpp"
#include "greedy_spectra/io.hpp"
#include "greedy_spectra/tree.hpp"

#include <optional>
#include <string>
#include <utility>

namespace greedy_spectra {

struct VerifyConfig {
  int enumeration_cap = kDefaultEnumerationCap;
  int moment_cap = 16;
  double tol = 1e-9;
  double strict_margin = 1e-12;
};

enum class Status { Pass, Fail, PassWithTies };
std::string_view to_string(Status s) noexcept;

struct Counterexample {
  Tree tree;
  int k = -1;  // walk length, or -1 when the failure is not indexed by k
  std::string detail;
};

struct VerificationReport {
  std::string claim;
  Json instance = Json::object();
  Status status = Status::Pass;
  std::string witness;  // canonical code of the extremal tree
  std::optional<Counterexample> counterexample;
  std::size_t trees_enumerated = 0;
  Json details = Json::object();  // claim-specific statistics
  double elapsed_ms = 0.0;

  /// Fields in fixed order. Timing is omitted unless requested so that equal
  /// inputs serialise to identical bytes.
  Json to_json(bool include_timing = false) const;
};

/// M_k(T) <= M_k(G(d)) for all T with degree sequence d and k <= k_max; records
/// the first even k with strict inequality for each non-greedy T.
VerificationReport verify_greedy_maximality(const DegreeSequence& d, int k_max, const VerifyConfig& cfg = {});

/// M_k(G(b)) <= M_k(G(d)) for k <= k_max, strict for even k >= 4 when b != d.
/// Throws Error{NotMajorized}.
VerificationReport verify_majorization_monotonicity(const DegreeSequence& b, const DegreeSequence& d, int k_max,
                                                    const VerifyConfig& cfg = {});

/// The Volkmann tree maximises every M_2k, 2k <= k_max, among trees with
/// maximum degree <= Δ, and separately among those with maximum degree == Δ.
VerificationReport verify_volkmann_conjecture(int n, int max_degree, int k_max, const VerifyConfig& cfg = {});

/// Over all T with degree sequence d: ρ(T) <= ρ(G), P_T(x) >= P_G(x) at
/// x = ρ(G) + x_margin, and EE(T) < EE(G) for non-isomorphic T.
VerificationReport verify_spectral_corollaries(const DegreeSequence& d, double x_margin,
                                               const VerifyConfig& cfg = {});

/// (G, T) for D = (3, 3, 2^(4r-2), 1^4): G = G(D) is the greedy tree, and T
/// swaps one path of r vertices with one of r+1 vertices between the two
/// degree-3 vertices. Throws Error{InvalidBounds} for r < 1.
std::pair<Tree, Tree> build_remark_pair(int r);

}  // namespace greedy_spectra
