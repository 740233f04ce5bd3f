#ifndef OTRANK_DIGRAPH_HPP
#define OTRANK_DIGRAPH_HPP

#include <cstdint>
#include <set>
#include <utility>

#include "otrank/errors.hpp"

namespace ot {

// Directed graph on vertices 1..order.  Self-loops are representable (they
// are simply never useful for Hamilton paths).
struct Digraph {
  std::uint32_t order = 0;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges;

  bool has_edge(std::uint32_t from, std::uint32_t to) const {
    return edges.count({from, to}) != 0;
  }

  void validate() const {
    for (const auto& [from, to] : edges) {
      if (from < 1 || from > order || to < 1 || to > order)
        throw InputError("digraph: edge endpoint out of range");
    }
  }

  bool operator==(const Digraph& o) const {
    return order == o.order && edges == o.edges;
  }
};

}  // namespace ot

#endif  // OTRANK_DIGRAPH_HPP
