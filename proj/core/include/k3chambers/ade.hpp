#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "k3chambers/exact_linalg.hpp"

namespace k3chambers {

enum class AdeFamily { A, D, E };

struct AdeType {
  AdeFamily family = AdeFamily::A;
  std::size_t rank = 0;

  /// "A2", "D5", "E8".
  std::string name() const;

  friend bool operator==(const AdeType&, const AdeType&) = default;
};

/// Classifies the connected components of the simply-laced graph whose
/// adjacency is the off-diagonal part of `gram` (entries must be 0 or 1).
/// Components are reported in order of their lowest node index. Throws
/// UnrecognizedDiagram for graphs that are not A_n, D_n (n >= 4), E_6,
/// E_7 or E_8, and for entries outside {0, 1}.
std::vector<AdeType> classify_simply_laced(const RatMatrix& gram);

/// -2 I + adjacency of the named Dynkin diagram, with the standard
/// labelling (chain first, branch node attached at the end for D, at the
/// third node for E).
RatMatrix dynkin_gram(const AdeType& type);

}  // namespace k3chambers
