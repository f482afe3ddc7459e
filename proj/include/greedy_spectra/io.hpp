#pragma once

#include "greedy_spectra/degree_sequence.hpp"
#include "greedy_spectra/spectral.hpp"
#include "greedy_spectra/tree.hpp"
#include "greedy_spectra/walks.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace greedy_spectra {

using Json = nlohmann::ordered_json;

/// Comma-separated integers with optional run-length `d^k` ("3^6,2,1^8").
/// Returns the raw values in input order. Throws Error{ParseError}.
std::vector<int> parse_degree_list(std::string_view text);

/// parse_degree_list followed by DegreeSequence::validate.
DegreeSequence parse_degree_sequence(std::string_view text);

/// Shortest run-length form, e.g. "3^6,2,1^8".
std::string format_degree_sequence(const DegreeSequence& d);

/// {"n", "edges", "root_vertex", "root_edge"}; unused root fields are null.
Json tree_to_json(const Tree& t);
/// Throws Error{ParseError} on a malformed document, Error{InvalidTree} when
/// the edges are not a tree.
Tree tree_from_json(const Json& j);
Tree parse_tree_json(std::string_view text);

/// Graphviz with one `rank=same` group per level when rooted.
std::string tree_to_dot(const Tree& t);

/// Exact integers as decimal strings.
Json moments_to_json(const MomentVector& m);
Json polynomial_to_json(const IntPolynomial& p);
Json chain_to_json(const std::vector<DegreeSequence>& chain);

}  // namespace greedy_spectra
