#ifndef BINSYS_SRC_GROUPOID_ACCESS_HPP_
#define BINSYS_SRC_GROUPOID_ACCESS_HPP_

#include <vector>  // for vector

#include "binsys/groupoid.hpp"

namespace binsys::detail {

  // In-place table access for the enumeration hot loops. Callers keep every
  // entry below the order.
  struct GroupoidAccess {
    static std::vector<element_type>& cells(Groupoid& g) noexcept {
      return g._cells;
    }
  };

}  // namespace binsys::detail

#endif  // BINSYS_SRC_GROUPOID_ACCESS_HPP_
