#include "binsys/axioms.hpp"

#include <string>  // for string

namespace binsys {

  namespace {
    template <typename F>
    bool for_all_2(std::size_t n, F&& f) {
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          if (!f(x, y)) {
            return false;
          }
        }
      }
      return true;
    }

    template <typename F>
    bool for_all_3(std::size_t n, F&& f) {
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          for (element_type z = 0; z < n; ++z) {
            if (!f(x, y, z)) {
              return false;
            }
          }
        }
      }
      return true;
    }
  }  // namespace

  char const* axiom_name(axiom a) noexcept {
    switch (a) {
      case axiom::b1:
        return "B1";
      case axiom::b2:
        return "B2";
      case axiom::b:
        return "B";
      case axiom::bg:
        return "BG";
      case axiom::bm:
        return "BM";
      case axiom::bh:
        return "BH";
      case axiom::bf:
        return "BF";
      case axiom::bn:
        return "BN";
      case axiom::bo:
        return "BO";
      case axiom::bp1:
        return "BP1";
      case axiom::bp2:
        return "BP2";
      case axiom::q:
        return "Q";
      case axiom::co:
        return "CO";
      case axiom::bz:
        return "BZ";
      case axiom::k:
        return "K";
      case axiom::i:
        return "I";
      case axiom::bi:
        return "BI";
      case axiom::d3:
        return "d3'";
    }
    return "unknown";
  }

  std::optional<axiom> parse_axiom(std::string_view name) {
    for (auto a : all_axioms) {
      if (name == axiom_name(a)) {
        return a;
      }
    }
    return std::nullopt;
  }

  bool mentions_zero(axiom a) noexcept {
    switch (a) {
      case axiom::co:
      case axiom::q:
      case axiom::bp1:
      case axiom::bp2:
      case axiom::bm:
      case axiom::bi:
      case axiom::d3:
        return false;
      default:
        return true;
    }
  }

  bool axiom_holds(Groupoid const& g, axiom a) {
    if (mentions_zero(a) && !g.zero()) {
      throw BinsysError(error_kind::missing_zero,
                        std::string("axiom ") + axiom_name(a)
                            + " needs a distinguished zero");
    }
    auto const   n = g.order();
    element_type z = g.zero().value_or(0);
    switch (a) {
      case axiom::b1:
        return for_all_2(n, [&](auto x, auto) { return g(x, x) == z; });
      case axiom::b2:
        return for_all_2(n, [&](auto x, auto) { return g(x, z) == x; });
      case axiom::b:
        return for_all_3(n, [&](auto x, auto y, auto w) {
          return g(g(x, y), w) == g(x, g(w, g(z, y)));
        });
      case axiom::bg:
        return for_all_2(
            n, [&](auto x, auto y) { return x == g(g(x, y), g(z, y)); });
      case axiom::bm:
        return for_all_3(n, [&](auto x, auto y, auto w) {
          return g(g(w, x), g(w, y)) == g(y, x);
        });
      case axiom::bh:
        return for_all_2(n, [&](auto x, auto y) {
          return !(g(x, y) == z && g(y, x) == z) || x == y;
        });
      case axiom::bf:
        return for_all_2(
            n, [&](auto x, auto y) { return g(z, g(x, y)) == g(y, x); });
      case axiom::bn:
        return for_all_3(n, [&](auto x, auto y, auto w) {
          return g(g(x, y), w) == g(g(z, w), g(y, x));
        });
      case axiom::bo:
        return for_all_3(n, [&](auto x, auto y, auto w) {
          return g(x, g(y, w)) == g(g(x, y), g(z, w));
        });
      case axiom::bp1:
        return for_all_2(n, [&](auto x, auto y) { return g(x, g(x, y)) == y; });
      case axiom::bp2:
        return for_all_3(n, [&](auto x, auto y, auto w) {
          return g(g(x, w), g(y, w)) == g(x, y);
        });
      case axiom::q:
        return for_all_3(n, [&](auto x, auto y, auto w) {
          return g(g(x, y), w) == g(g(x, w), y);
        });
      case axiom::co:
        return for_all_3(n, [&](auto x, auto y, auto w) {
          return g(g(x, y), w) == g(x, g(y, w));
        });
      case axiom::bz:
        return for_all_3(n, [&](auto x, auto y, auto w) {
          return g(g(g(x, w), g(y, w)), g(x, y)) == z;
        });
      case axiom::k:
        return for_all_2(n, [&](auto x, auto) { return g(z, x) == z; });
      case axiom::i:
        return for_all_3(n, [&](auto x, auto y, auto w) {
          return g(g(g(x, y), g(x, w)), g(w, y)) == z;
        });
      case axiom::bi:
        return for_all_2(n, [&](auto x, auto y) { return g(x, g(y, x)) == x; });
      case axiom::d3:
        return is_strong(g);
    }
    throw BinsysError(error_kind::internal, "unknown axiom");
  }

  AxiomVector axiom_vector(Groupoid const& g) {
    AxiomVector v;
    for (std::size_t i = 0; i < number_of_axioms; ++i) {
      auto const a = all_axioms[i];
      if (!mentions_zero(a) || g.zero()) {
        v.values[i] = axiom_holds(g, a);
      }
    }
    return v;
  }

  char const* algebra_class_name(algebra_class c) noexcept {
    switch (c) {
      case algebra_class::b:
        return "B-algebra";
      case algebra_class::bg:
        return "BG-algebra";
      case algebra_class::bci:
        return "BCI-algebra";
      case algebra_class::bck:
        return "BCK-algebra";
      case algebra_class::d:
        return "d-algebra";
      case algebra_class::strong_d:
        return "strong d-algebra";
      case algebra_class::bh:
        return "BH-algebra";
      case algebra_class::bi:
        return "BI-algebra";
      case algebra_class::q:
        return "Q-algebra";
      case algebra_class::strong_b1:
        return "strong B1-algebra";
      case algebra_class::semi_neutral_b1:
        return "semi-neutral B1-algebra";
      case algebra_class::strong_q:
        return "strong Q-algebra";
    }
    return "unknown";
  }

  bool is_assumed_definition(algebra_class c) noexcept {
    return c == algebra_class::q || c == algebra_class::strong_q;
  }

  bool in_class(AxiomVector const& v, Groupoid const& g, algebra_class c) {
    using enum axiom;
    switch (c) {
      case algebra_class::b:
        return v.holds(b1) && v.holds(b2) && v.holds(b);
      case algebra_class::bg:
        return v.holds(b1) && v.holds(b2) && v.holds(bg);
      case algebra_class::bci:
        return v.holds(b2) && v.holds(i) && v.holds(bh);
      case algebra_class::bck:
        return in_class(v, g, algebra_class::bci) && v.holds(k);
      case algebra_class::d:
        return v.holds(b1) && v.holds(k) && v.holds(bh);
      case algebra_class::strong_d:
        return in_class(v, g, algebra_class::d) && v.holds(d3);
      case algebra_class::bh:
        return v.holds(b1) && v.holds(b2) && v.holds(bh);
      case algebra_class::bi:
        return v.holds(b1) && v.holds(bi);
      case algebra_class::q:
        return v.holds(b1) && v.holds(b2) && v.holds(q);
      case algebra_class::strong_b1:
        return v.holds(b1) && v.holds(d3);
      case algebra_class::semi_neutral_b1:
        return v.holds(b1) && g.zero() && is_semi_neutral(g, *g.zero());
      case algebra_class::strong_q:
        return in_class(v, g, algebra_class::q) && v.holds(d3);
    }
    return false;
  }

  std::vector<algebra_class> algebra_classes(Groupoid const& g) {
    if (!g.zero()) {
      throw BinsysError(error_kind::missing_zero,
                        "algebra classes need a distinguished zero");
    }
    auto const                 v = axiom_vector(g);
    std::vector<algebra_class> out;
    for (auto c : all_algebra_classes) {
      if (in_class(v, g, c)) {
        out.push_back(c);
      }
    }
    return out;
  }

}  // namespace binsys
