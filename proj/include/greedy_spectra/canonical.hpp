#pragma once

#include "greedy_spectra/tree.hpp"

#include <string>

namespace greedy_spectra {

enum class IsoMode {
  Unrooted,     // plain tree isomorphism
  RespectRoot,  // root vertex/edge must map to root vertex/edge
};

/// AHU-style code: a subtree is "(" + sorted child codes + ")". Unrooted trees
/// are coded from their center, or from their central edge when bicentral.
/// Codes carry a one-byte prefix for the root kind, so rooted and unrooted
/// codes never collide. Lexicographic byte order is the total order used for
/// enumeration output.
std::string canonical_code(const Tree& t, IsoMode mode = IsoMode::Unrooted);

bool is_isomorphic(const Tree& a, const Tree& b, IsoMode mode = IsoMode::Unrooted);

/// Code of the subtree hanging from `v` away from `excluded` (-1: none).
std::string subtree_code(const Tree& t, Vertex v, Vertex excluded);

/// One or two central vertices.
std::vector<Vertex> centers(const Tree& t);

}  // namespace greedy_spectra
