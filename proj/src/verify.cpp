#include "groot/verify.hpp"

#include "groot/enumerate.hpp"
#include "groot/graph6.hpp"
#include "groot/metrics.hpp"
#include "groot/reconstruct.hpp"
#include "groot/root_isomorphism.hpp"

#include <algorithm>

namespace groot {
namespace {

void check_pair(const Graph& a, const Graph& b, const Graph& g, UniquenessReport& report,
                const std::string& where) {
  const auto forward = build_isomorphism(a, b, g);
  if (std::holds_alternative<EqualRoots>(forward)) {
    if (a != b) report.failures.push_back(where + ": EqualRoots for different roots");
    ++report.equal_roots;
    return;
  }
  const auto& f = std::get<Involution>(forward);
  if (!f.verified || !f.map.is_involution() || !f.map.is_isomorphism(a, b)) {
    report.failures.push_back(where + ": involution failed verification");
  }
  if (!check_property_A(a, b, g)) report.failures.push_back(where + ": property (A) fails");
  if (!check_property_B(a, b, g)) report.failures.push_back(where + ": property (B) fails");
  const auto backward = build_isomorphism(b, a, g);
  if (!std::holds_alternative<Involution>(backward) ||
      std::get<Involution>(backward).map != f.map) {
    report.failures.push_back(where + ": involution is not symmetric in the two roots");
  }
  ++report.involutions;
}

}  // namespace

UniquenessReport verify_uniqueness(std::size_t n) {
  UniquenessReport report;
  report.n = n;
  enumerate_graphs(SearchConstraints{n, Girth::finite(6), 0, true}, [&](const Graph& h) {
    ++report.graphs;
    const std::string name = emit_graph6(h);
    try {
      if (!obs_star_holds(h)) report.failures.push_back(name + ": observation (*) fails");
      if (!obs_doublestar_holds(h)) report.failures.push_back(name + ": observation (**) fails");
      const Graph g = square(h);
      const auto roots = enumerate_roots(g, 6);
      report.roots += roots.size();
      if (std::find(roots.begin(), roots.end(), h) == roots.end()) {
        report.failures.push_back(name + ": not recovered from its own square");
      }
      for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = 0; j < roots.size(); ++j) {
          check_pair(roots[i], roots[j], g, report,
                     name + " roots " + emit_graph6(roots[i]) + "," + emit_graph6(roots[j]));
        }
      }
    } catch (const std::exception& e) {
      report.failures.push_back(name + ": " + e.what());
    }
    return true;
  });
  return report;
}

}  // namespace groot
