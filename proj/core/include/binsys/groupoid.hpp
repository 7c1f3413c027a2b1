#ifndef BINSYS_GROUPOID_HPP_
#define BINSYS_GROUPOID_HPP_

#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t
#include <initializer_list>  // for initializer_list
#include <optional>          // for optional
#include <span>              // for span
#include <string>            // for string
#include <string_view>       // for string_view
#include <vector>            // for vector

#include "binsys/errors.hpp"

namespace binsys {

  using element_type = std::uint32_t;

  namespace detail {
    struct GroupoidAccess;
  }

  // A finite groupoid (X, •) stored as its Cayley table.
  //
  // Elements are the dense indices 0, ..., n - 1 in declaration order; row is
  // the left operand and column the right operand. Labels and the optional
  // distinguished zero are metadata: equality compares the order and the
  // table only.
  class Groupoid {
   public:
    // Validates closure, labels and zero; throws BinsysError.
    Groupoid(std::size_t                    order,
             std::vector<element_type>      cells,
             std::vector<std::string>       labels = {},
             std::optional<element_type>    zero   = std::nullopt);

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] element_type operator()(element_type x,
                                          element_type y) const noexcept {
      return _cells[x * _order + y];
    }

    // Bounds-checked version of operator().
    [[nodiscard]] element_type at(element_type x, element_type y) const;

    // Row-major table, length order() * order().
    [[nodiscard]] std::span<element_type const> cells() const noexcept {
      return _cells;
    }

    [[nodiscard]] std::vector<std::vector<element_type>> rows() const;

    [[nodiscard]] std::optional<element_type> zero() const noexcept {
      return _zero;
    }

    [[nodiscard]] bool has_labels() const noexcept {
      return !_labels.empty();
    }

    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    // The display label of x, or its decimal index when unlabeled.
    [[nodiscard]] std::string label(element_type x) const;

    // Index of the element displayed as `lbl`, if any.
    [[nodiscard]] std::optional<element_type> find_label(
        std::string_view lbl) const;

    [[nodiscard]] Groupoid with_zero(std::optional<element_type> z) const;
    [[nodiscard]] Groupoid with_labels(std::vector<std::string> labels) const;
    // Same labels and zero as `other` (whose order must match).
    [[nodiscard]] Groupoid with_metadata_of(Groupoid const& other) const;

    friend bool operator==(Groupoid const& a, Groupoid const& b) noexcept {
      return a._order == b._order && a._cells == b._cells;
    }

    // Lexicographic comparison of the row-major tables (orders first).
    friend bool operator<(Groupoid const& a, Groupoid const& b) noexcept;

   private:
    friend struct detail::GroupoidAccess;

    std::size_t                 _order;
    std::vector<element_type>   _cells;
    std::vector<std::string>    _labels;
    std::optional<element_type> _zero;
  };

  // Checked construction from nested rows.
  Groupoid make_groupoid(std::size_t                                   order,
                         std::vector<std::vector<element_type>> const& table,
                         std::vector<std::string> labels = {},
                         std::optional<element_type> zero = std::nullopt);

  Groupoid make_groupoid(
      std::initializer_list<std::initializer_list<element_type>> rows);

  enum class zero_kind { left, right };

  // Left: x•y = x (the identity of (Bin(X), ⋄)); right: x•y = y.
  Groupoid zero_semigroup(zero_kind kind, std::size_t order);

  inline Groupoid left_zero(std::size_t order) {
    return zero_semigroup(zero_kind::left, order);
  }

  inline Groupoid right_zero(std::size_t order) {
    return zero_semigroup(zero_kind::right, order);
  }

  Groupoid constant(std::size_t order, element_type value);

  // Index of the anti-diagonal partner: x_i pairs with x_j where i + j = n + 1
  // in 1-based terms.
  inline element_type partner(std::size_t order, element_type i) noexcept {
    return static_cast<element_type>(order - 1 - i);
  }

  struct DiagonalProfile {
    std::vector<element_type> main;     // x_i • x_i
    std::vector<element_type> anti;     // x_i • x_j
    std::vector<element_type> reverse;  // x_j • x_j
    std::vector<element_type> skew;     // x_j • x_i

    bool operator==(DiagonalProfile const&) const = default;
  };

  DiagonalProfile diagonal_profile(Groupoid const& g);

  enum class predicate {
    idempotent,
    strong,
    abelian,
    orientation,
    twisted_orientation,
    locally_zero,
    bi_diagonal,
    semi_neutral
  };

  inline constexpr predicate all_predicates[] = {predicate::idempotent,
                                                 predicate::strong,
                                                 predicate::abelian,
                                                 predicate::orientation,
                                                 predicate::twisted_orientation,
                                                 predicate::locally_zero,
                                                 predicate::bi_diagonal,
                                                 predicate::semi_neutral};

  char const*              predicate_name(predicate p) noexcept;
  std::optional<predicate> parse_predicate(std::string_view name);

  // Throws missing_zero for predicate::semi_neutral on an unpointed groupoid.
  bool check_predicate(Groupoid const& g, predicate p);

  bool is_idempotent(Groupoid const& g) noexcept;
  // x•y = y•x implies x = y, checked over x ≠ y
  bool is_strong(Groupoid const& g) noexcept;
  // x•y = y•x for all x, y
  bool is_commutative(Groupoid const& g) noexcept;
  bool is_orientation(Groupoid const& g) noexcept;
  bool is_twisted_orientation(Groupoid const& g) noexcept;
  bool is_locally_zero(Groupoid const& g) noexcept;
  bool is_bi_diagonal(Groupoid const& g) noexcept;
  // x•x = zero for all x and x•y = x for x ≠ y
  bool is_semi_neutral(Groupoid const& g, element_type zero) noexcept;
  bool is_left_zero(Groupoid const& g) noexcept;
  bool is_right_zero(Groupoid const& g) noexcept;
  bool is_associative(Groupoid const& g) noexcept;
  // Commutative group (associative, two-sided identity, inverses).
  bool is_abelian_group(Groupoid const& g) noexcept;

}  // namespace binsys

#endif  // BINSYS_GROUPOID_HPP_
