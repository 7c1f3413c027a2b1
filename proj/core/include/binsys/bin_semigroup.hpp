#ifndef BINSYS_BIN_SEMIGROUP_HPP_
#define BINSYS_BIN_SEMIGROUP_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "binsys/groupoid.hpp"

namespace binsys {

  // (g ⋄ h)(x, y) = h(g(x, y), g(y, x)).
  //
  // Labels survive when the operands carry the same labels (or only one of
  // them is labelled); the zero survives only when both operands share it.
  Groupoid product(Groupoid const& g, Groupoid const& h);

  // Writes the table of g ⋄ h into out (resized to n * n). No validation
  // beyond the order check.
  void product_into(Groupoid const&            g,
                    Groupoid const&            h,
                    std::vector<element_type>& out);

  // true iff g ⋄ h equals target cell-by-cell, without building the product.
  bool product_is(Groupoid const& g,
                  Groupoid const& h,
                  Groupoid const& target);

  bool commutes(Groupoid const& g, Groupoid const& h);

  enum class center_mode { fast, exhaustive };

  // Highest order for which the exhaustive paths below will enumerate.
  inline constexpr std::size_t exhaustive_order_limit = 3;

  // fast: locally-zero test. exhaustive: commutes with every groupoid of the
  // same order (order ≤ 3).
  bool in_center(Groupoid const& g, center_mode mode = center_mode::fast);

  // A two-sided ⋄-inverse of g. Locally-zero groupoids are returned as
  // themselves; otherwise the lexicographically least inverse is searched
  // for (order ≤ 3).
  std::optional<Groupoid> find_inverse(Groupoid const& g);

}  // namespace binsys

#endif  // BINSYS_BIN_SEMIGROUP_HPP_
