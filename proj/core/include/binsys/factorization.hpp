#ifndef BINSYS_FACTORIZATION_HPP_
#define BINSYS_FACTORIZATION_HPP_

#include <cstddef>      // for size_t
#include <functional>   // for function
#include <optional>     // for optional
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

#include "binsys/groupoid.hpp"

namespace binsys {

  // U(g): identity diagonal, off-diagonal of g.
  Groupoid signature_factor(Groupoid const& g);
  // A(g): diagonal of g, left-zero off-diagonal.
  Groupoid similar_factor(Groupoid const& g);
  // O: left-zero except that (i, n-1-i) holds n-1-i. Depends on the order
  // only; the argument supplies order and metadata.
  Groupoid orient_factor(Groupoid const& g);
  Groupoid orient_factor(std::size_t order);
  // J(g): g with its anti-diagonal transposed.
  Groupoid skew_factor(Groupoid const& g);

  enum class method { ua, au, oj, jo };

  inline constexpr method all_methods[] = {method::ua,
                                           method::au,
                                           method::oj,
                                           method::jo};

  // "UA", "AU", "OJ", "JO"
  char const*           method_name(method m) noexcept;
  // Case-insensitive.
  std::optional<method> parse_method(std::string_view name);

  enum class method_family { psi, tau };

  char const* method_family_name(method_family f) noexcept;

  using GroupoidTransform = std::function<Groupoid(Groupoid const&)>;
  // Selects a set of cells of an order-n table.
  using CellSet
      = std::function<bool(std::size_t n, element_type x, element_type y)>;

  // One side of a factorization: how the factor is derived from the target,
  // and which of its cells are pinned to the factor derived from the
  // left-zero groupoid. The remaining cells are free; uniqueness searches
  // range over them.
  struct FactorSpec {
    GroupoidTransform derive;
    CellSet           fixed;
  };

  class FactorizationMethod {
   public:
    FactorizationMethod(std::string   name,
                        method_family family,
                        FactorSpec    left,
                        FactorSpec    right);

    // Ψ-type: the left factor takes the cells in `from_identity` from the
    // left-zero groupoid and the rest from the target; the right factor
    // does the opposite.
    static FactorizationMethod psi(std::string name, CellSet from_identity);

    // τ-type: one factor is θ(left-zero), the other θ(target); which side
    // gets θ(left-zero) is chosen by identity_on_left.
    static FactorizationMethod tau(std::string       name,
                                   GroupoidTransform theta,
                                   bool              identity_on_left);

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }

    [[nodiscard]] method_family family() const noexcept {
      return _family;
    }

    [[nodiscard]] FactorSpec const& left() const noexcept {
      return _left;
    }

    [[nodiscard]] FactorSpec const& right() const noexcept {
      return _right;
    }

    [[nodiscard]] Groupoid derive_left(Groupoid const& target) const;
    [[nodiscard]] Groupoid derive_right(Groupoid const& target) const;

    // candidate agrees with the derived factor of left-zero on every fixed
    // cell.
    [[nodiscard]] bool left_shape(Groupoid const& candidate,
                                  Groupoid const& target) const;
    [[nodiscard]] bool right_shape(Groupoid const& candidate,
                                   Groupoid const& target) const;

   private:
    std::string   _name;
    method_family _family;
    FactorSpec    _left;
    FactorSpec    _right;
  };

  FactorizationMethod const& factorization_method(method m);

  struct FactorPair {
    std::string method;
    Groupoid    left;
    Groupoid    right;
    bool        reproduces_target;
  };

  FactorPair factor(Groupoid const& g, FactorizationMethod const& m);
  FactorPair factor(Groupoid const& g, method m);

  struct ClassificationReport {
    bool signature_prime;
    bool similar_prime;
    bool orient_prime;
    bool skew_prime;

    bool ua_holds;
    bool au_holds;
    bool oj_holds;
    bool jo_holds;

    bool ua_composite;
    bool au_composite;
    bool u_composite;
    bool u_normal;
    bool oj_composite;
    bool jo_composite;
    bool j_composite;
    bool j_normal;

    // Empty when the groupoid has no zero.
    std::optional<bool> semi_neutral;
    std::optional<bool> semi_normal;
    std::optional<bool> semi_composite;

    bool idempotent;
    bool strong;
    bool abelian;
    bool orientation;
    bool twisted_orientation;
    bool locally_zero;
    bool bi_diagonal;
  };

  ClassificationReport classify(Groupoid const& g);

  struct UniquenessReport {
    FactorPair derived_pair;
    // Shape-conforming pairs other than the derived one whose product is the
    // target, in search order.
    std::vector<std::pair<Groupoid, Groupoid>> other_solutions;
    // The search stopped at the solution cap; more may exist.
    bool truncated = false;
  };

  inline constexpr std::size_t uniqueness_order_limit = 6;

  // Every (ℓ, r) with ℓ in the left shape, r in the right shape and
  // ℓ ⋄ r = g, by backtracking over the cells of ℓ. At most max_solutions
  // other solutions are collected.
  UniquenessReport uniqueness_search(Groupoid const&            g,
                                     FactorizationMethod const& m,
                                     std::size_t max_solutions = 64);

  enum class side { left, right };

  // side::right: g ⋄ h = g; side::left: h ⋄ g = g; in both cases g and h
  // differ from each other and from the left-zero groupoid.
  bool is_partially_prime(Groupoid const& g, Groupoid const& h, side s);

  // A witness w with w ⋄ a = b and w ⋄ b = a. The supplied witness is tried
  // first, then left-zero and the orient factor, then (order ≤ 3) every
  // groupoid in lexicographic order.
  std::optional<Groupoid> binary_equivalent(
      Groupoid const&                a,
      Groupoid const&                b,
      std::optional<Groupoid> const& witness = std::nullopt);

}  // namespace binsys

#endif  // BINSYS_FACTORIZATION_HPP_
