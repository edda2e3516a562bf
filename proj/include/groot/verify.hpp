#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace groot {

/// Tally of one exhaustive uniqueness check at a fixed order.
struct UniquenessReport {
  std::size_t n = 0;
  std::size_t graphs = 0;       // connected girth >= 6 graphs checked
  std::size_t roots = 0;        // labelled roots found across their squares
  std::size_t equal_roots = 0;  // ordered root pairs reported equal
  std::size_t involutions = 0;  // ordered root pairs joined by an involution
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// For every connected girth >= 6 graph h on n vertices: both square
/// observations hold, h is among enumerate_roots(h², 6), and every ordered
/// pair of those roots gets a verified report from build_isomorphism, with
/// (A) and (B) holding and the same involution in both directions.
UniquenessReport verify_uniqueness(std::size_t n);

}  // namespace groot
