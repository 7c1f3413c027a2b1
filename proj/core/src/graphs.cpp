#include "binsys/graphs.hpp"

#include <string>   // for to_string
#include <utility>  // for move, swap
#include <vector>   // for vector

namespace binsys {

  namespace {
    void check_endpoints(std::size_t n, element_type x, element_type y) {
      if (x >= n || y >= n) {
        throw BinsysError(error_kind::bad_shape,
                          "vertex out of range for a graph of order "
                              + std::to_string(n));
      }
      if (x == y) {
        throw BinsysError(error_kind::bad_shape,
                          "loop at vertex " + std::to_string(x));
      }
    }
  }  // namespace

  SimpleGraph::SimpleGraph(std::size_t order) : _order(order), _edges() {}

  SimpleGraph& SimpleGraph::add_edge(element_type x, element_type y) {
    check_endpoints(_order, x, y);
    if (x > y) {
      std::swap(x, y);
    }
    _edges.emplace(x, y);
    return *this;
  }

  bool SimpleGraph::adjacent(element_type x, element_type y) const {
    if (x > y) {
      std::swap(x, y);
    }
    return _edges.count({x, y}) != 0;
  }

  Digraph::Digraph(std::size_t order) : _order(order), _arcs() {}

  Digraph& Digraph::add_arc(element_type x, element_type y) {
    check_endpoints(_order, x, y);
    _arcs.emplace(x, y);
    return *this;
  }

  bool Digraph::has_arc(element_type x, element_type y) const {
    return _arcs.count({x, y}) != 0;
  }

  SimpleGraph complete_graph(std::size_t order) {
    SimpleGraph out(order);
    for (element_type x = 0; x < order; ++x) {
      for (element_type y = x + 1; y < order; ++y) {
        out.add_edge(x, y);
      }
    }
    return out;
  }

  SimpleGraph graph_from_mask(std::size_t order, std::uint64_t mask) {
    SimpleGraph out(order);
    std::size_t bit = 0;
    for (element_type x = 0; x < order; ++x) {
      for (element_type y = x + 1; y < order; ++y, ++bit) {
        if ((mask >> bit) & 1) {
          out.add_edge(x, y);
        }
      }
    }
    return out;
  }

  SimpleGraph to_graph(Groupoid const& g) {
    SimpleGraph out(g.order());
    for (element_type x = 0; x < g.order(); ++x) {
      for (element_type y = x + 1; y < g.order(); ++y) {
        if (g(x, y) == x && g(y, x) == y) {
          out.add_edge(x, y);
        }
      }
    }
    return out;
  }

  Groupoid from_graph(SimpleGraph const& graph) {
    auto const                n = graph.order();
    std::vector<element_type> cells(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        cells[x * n + y] = (x == y || graph.adjacent(x, y)) ? x : y;
      }
    }
    return Groupoid(n, std::move(cells));
  }

  Digraph to_digraph(Groupoid const& g) {
    if (!is_orientation(g)) {
      throw BinsysError(error_kind::not_orientation,
                        "digraphs are defined for groupoids with the "
                        "orientation property only");
    }
    Digraph out(g.order());
    for (element_type x = 0; x < g.order(); ++x) {
      for (element_type y = 0; y < g.order(); ++y) {
        if (x != y && g(x, y) == x) {
          out.add_arc(x, y);
        }
      }
    }
    return out;
  }

}  // namespace binsys
