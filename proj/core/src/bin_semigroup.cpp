#include "binsys/bin_semigroup.hpp"

#include <string>   // for to_string
#include <utility>  // for move

#include "binsys/enumeration.hpp"

namespace binsys {

  namespace {
    void check_orders(Groupoid const& g, Groupoid const& h) {
      if (g.order() != h.order()) {
        throw BinsysError(error_kind::order_mismatch,
                          "groupoids have different orders ("
                              + std::to_string(g.order()) + " and "
                              + std::to_string(h.order()) + ")");
      }
    }

    void check_exhaustive(Groupoid const& g, char const* what) {
      if (g.order() > exhaustive_order_limit) {
        throw BinsysError(error_kind::order_too_large,
                          std::string(what) + " needs order at most "
                              + std::to_string(exhaustive_order_limit)
                              + ", got " + std::to_string(g.order()));
      }
    }
  }  // namespace

  void product_into(Groupoid const&            g,
                    Groupoid const&            h,
                    std::vector<element_type>& out) {
    check_orders(g, h);
    auto const n = g.order();
    out.resize(n * n);
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        out[x * n + y] = h(g(x, y), g(y, x));
      }
    }
  }

  Groupoid product(Groupoid const& g, Groupoid const& h) {
    std::vector<element_type> cells;
    product_into(g, h, cells);

    std::vector<std::string> labels;
    if (g.labels() == h.labels() || !h.has_labels()) {
      labels = g.labels();
    } else if (!g.has_labels()) {
      labels = h.labels();
    }
    std::optional<element_type> zero;
    if (g.zero() == h.zero()) {
      zero = g.zero();
    }
    return Groupoid(g.order(), std::move(cells), std::move(labels), zero);
  }

  bool product_is(Groupoid const& g,
                  Groupoid const& h,
                  Groupoid const& target) {
    check_orders(g, h);
    check_orders(g, target);
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (h(g(x, y), g(y, x)) != target(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool commutes(Groupoid const& g, Groupoid const& h) {
    check_orders(g, h);
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (h(g(x, y), g(y, x)) != g(h(x, y), h(y, x))) {
          return false;
        }
      }
    }
    return true;
  }

  bool in_center(Groupoid const& g, center_mode mode) {
    if (mode == center_mode::fast) {
      return is_locally_zero(g);
    }
    check_exhaustive(g, "exhaustive center test");
    bool central = true;
    for_each_groupoid(g.order(),
                      0,
                      number_of_groupoids(g.order()),
                      [&](Groupoid const& h) {
                        central = commutes(g, h);
                        return central;
                      });
    return central;
  }

  std::optional<Groupoid> find_inverse(Groupoid const& g) {
    if (is_locally_zero(g)) {
      return g;
    }
    check_exhaustive(g, "inverse search");
    auto const              id = left_zero(g.order());
    std::optional<Groupoid> found;
    for_each_groupoid(g.order(),
                      0,
                      number_of_groupoids(g.order()),
                      [&](Groupoid const& h) {
                        if (product_is(g, h, id) && product_is(h, g, id)) {
                          found = h;
                          return false;
                        }
                        return true;
                      });
    return found;
  }

}  // namespace binsys
