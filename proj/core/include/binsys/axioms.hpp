#ifndef BINSYS_AXIOMS_HPP_
#define BINSYS_AXIOMS_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <optional>     // for optional
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "binsys/groupoid.hpp"

namespace binsys {

  enum class axiom {
    b1,   // x•x = 0
    b2,   // x•0 = x
    b,    // (x•y)•z = x•(z•(0•y))
    bg,   // x = (x•y)•(0•y)
    bm,   // (z•x)•(z•y) = y•x
    bh,   // x•y = 0 and y•x = 0 imply x = y
    bf,   // 0•(x•y) = y•x
    bn,   // (x•y)•z = (0•z)•(y•x)
    bo,   // x•(y•z) = (x•y)•(0•z)
    bp1,  // x•(x•y) = y
    bp2,  // (x•z)•(y•z) = x•y
    q,    // (x•y)•z = (x•z)•y
    co,   // (x•y)•z = x•(y•z)
    bz,   // ((x•z)•(y•z))•(x•y) = 0
    k,    // 0•x = 0
    i,    // ((x•y)•(x•z))•(z•y) = 0
    bi,   // x•(y•x) = x
    d3    // x•y = y•x implies x = y
  };

  inline constexpr std::size_t number_of_axioms = 18;

  inline constexpr std::array<axiom, number_of_axioms> all_axioms
      = {axiom::b1,
         axiom::b2,
         axiom::b,
         axiom::bg,
         axiom::bm,
         axiom::bh,
         axiom::bf,
         axiom::bn,
         axiom::bo,
         axiom::bp1,
         axiom::bp2,
         axiom::q,
         axiom::co,
         axiom::bz,
         axiom::k,
         axiom::i,
         axiom::bi,
         axiom::d3};

  // "B1", ..., "BI", "d3'"
  char const*          axiom_name(axiom a) noexcept;
  std::optional<axiom> parse_axiom(std::string_view name);

  // false for CO, Q, BP1, BP2, BM, BI and d3'.
  bool mentions_zero(axiom a) noexcept;

  // Throws missing_zero when the axiom mentions 0 and g has no zero.
  bool axiom_holds(Groupoid const& g, axiom a);

  // One entry per axiom, indexed like all_axioms. Entries for axioms that
  // mention 0 are empty when g has no zero.
  struct AxiomVector {
    std::array<std::optional<bool>, number_of_axioms> values;

    [[nodiscard]] std::optional<bool> operator[](axiom a) const noexcept {
      return values[static_cast<std::size_t>(a)];
    }

    // Absent values count as false.
    [[nodiscard]] bool holds(axiom a) const noexcept {
      return (*this)[a].value_or(false);
    }
  };

  AxiomVector axiom_vector(Groupoid const& g);

  enum class algebra_class {
    b,
    bg,
    bci,
    bck,
    d,
    strong_d,
    bh,
    bi,
    q,
    strong_b1,
    semi_neutral_b1,
    strong_q
  };

  inline constexpr algebra_class all_algebra_classes[]
      = {algebra_class::b,
         algebra_class::bg,
         algebra_class::bci,
         algebra_class::bck,
         algebra_class::d,
         algebra_class::strong_d,
         algebra_class::bh,
         algebra_class::bi,
         algebra_class::q,
         algebra_class::strong_b1,
         algebra_class::semi_neutral_b1,
         algebra_class::strong_q};

  // "B-algebra", "BCK-algebra", "strong d-algebra", ...
  char const* algebra_class_name(algebra_class c) noexcept;

  // Classes whose definition is a reading rather than a stated definition;
  // reports list them as assumptions.
  bool is_assumed_definition(algebra_class c) noexcept;

  bool in_class(AxiomVector const& v, Groupoid const& g, algebra_class c);

  // Throws missing_zero when g has no zero.
  std::vector<algebra_class> algebra_classes(Groupoid const& g);

}  // namespace binsys

#endif  // BINSYS_AXIOMS_HPP_
