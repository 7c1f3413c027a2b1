#ifndef BINSYS_GRAPHS_HPP_
#define BINSYS_GRAPHS_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <set>      // for set
#include <utility>  // for pair

#include "binsys/groupoid.hpp"

namespace binsys {

  using Edge = std::pair<element_type, element_type>;

  // Undirected, no loops. Edges are stored with first < second.
  class SimpleGraph {
   public:
    explicit SimpleGraph(std::size_t order);

    // Throws bad_shape for loops or endpoints out of range.
    SimpleGraph& add_edge(element_type x, element_type y);

    [[nodiscard]] bool adjacent(element_type x, element_type y) const;

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] std::set<Edge> const& edges() const noexcept {
      return _edges;
    }

    bool operator==(SimpleGraph const&) const = default;

   private:
    std::size_t    _order;
    std::set<Edge> _edges;
  };

  // Directed, no loops.
  class Digraph {
   public:
    explicit Digraph(std::size_t order);

    Digraph& add_arc(element_type x, element_type y);

    [[nodiscard]] bool has_arc(element_type x, element_type y) const;

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] std::set<Edge> const& arcs() const noexcept {
      return _arcs;
    }

    bool operator==(Digraph const&) const = default;

   private:
    std::size_t    _order;
    std::set<Edge> _arcs;
  };

  SimpleGraph complete_graph(std::size_t order);

  // The graph on {0, ..., n - 1} whose edges are the bits of mask, with pairs
  // (x, y), x < y, numbered in lexicographic order.
  SimpleGraph graph_from_mask(std::size_t order, std::uint64_t mask);

  // {x, y} is an edge iff x ≠ y, x•y = x and y•x = y.
  SimpleGraph to_graph(Groupoid const& g);

  // Idempotent diagonal; an edge gives a left-zero pair, a non-edge a
  // right-zero pair. Always locally-zero.
  Groupoid from_graph(SimpleGraph const& graph);

  // Arc x → y iff x ≠ y and x•y = x. Throws not_orientation unless g has
  // the orientation property.
  Digraph to_digraph(Groupoid const& g);

}  // namespace binsys

#endif  // BINSYS_GRAPHS_HPP_
