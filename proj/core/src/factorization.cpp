#include "binsys/factorization.hpp"

#include <algorithm>  // for transform
#include <cctype>     // for toupper
#include <string>     // for string
#include <utility>    // for move

#include "binsys/bin_semigroup.hpp"
#include "binsys/enumeration.hpp"

namespace binsys {

  namespace {
    // Copies the cells of `from` selected by `cells` over `onto`.
    Groupoid splice(Groupoid const& onto,
                    Groupoid const& from,
                    CellSet const&  cells) {
      auto const                n = onto.order();
      std::vector<element_type> out(onto.cells().begin(), onto.cells().end());
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          if (cells(n, x, y)) {
            out[x * n + y] = from(x, y);
          }
        }
      }
      return Groupoid(n, std::move(out), onto.labels(), onto.zero());
    }

    bool on_diagonal(std::size_t, element_type x, element_type y) {
      return x == y;
    }

    bool off_diagonal(std::size_t, element_type x, element_type y) {
      return x != y;
    }

    bool everywhere(std::size_t, element_type, element_type) {
      return true;
    }

    bool nowhere(std::size_t, element_type, element_type) {
      return false;
    }

    bool conforms(Groupoid const&   candidate,
                  FactorSpec const& spec,
                  Groupoid const&   target) {
      auto const n = target.order();
      if (candidate.order() != n) {
        return false;
      }
      auto const pinned = spec.derive(left_zero(n));
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          if (spec.fixed(n, x, y) && candidate(x, y) != pinned(x, y)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  Groupoid signature_factor(Groupoid const& g) {
    return splice(g, left_zero(g.order()), on_diagonal);
  }

  Groupoid similar_factor(Groupoid const& g) {
    return splice(g, left_zero(g.order()), off_diagonal);
  }

  Groupoid orient_factor(std::size_t order) {
    return skew_factor(left_zero(order));
  }

  Groupoid orient_factor(Groupoid const& g) {
    return orient_factor(g.order()).with_metadata_of(g);
  }

  Groupoid skew_factor(Groupoid const& g) {
    auto const                n = g.order();
    std::vector<element_type> out(g.cells().begin(), g.cells().end());
    for (element_type i = 0; i < n; ++i) {
      auto const j  = partner(n, i);
      out[i * n + j] = g(j, i);
    }
    return Groupoid(n, std::move(out), g.labels(), g.zero());
  }

  char const* method_name(method m) noexcept {
    switch (m) {
      case method::ua:
        return "UA";
      case method::au:
        return "AU";
      case method::oj:
        return "OJ";
      case method::jo:
        return "JO";
    }
    return "unknown";
  }

  std::optional<method> parse_method(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(), [](char c) {
      return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    });
    for (auto m : all_methods) {
      if (upper == method_name(m)) {
        return m;
      }
    }
    return std::nullopt;
  }

  char const* method_family_name(method_family f) noexcept {
    return f == method_family::psi ? "psi" : "tau";
  }

  ////////////////////////////////////////////////////////////////////////
  // FactorizationMethod
  ////////////////////////////////////////////////////////////////////////

  FactorizationMethod::FactorizationMethod(std::string   name,
                                           method_family family,
                                           FactorSpec    left,
                                           FactorSpec    right)
      : _name(std::move(name)),
        _family(family),
        _left(std::move(left)),
        _right(std::move(right)) {}

  FactorizationMethod FactorizationMethod::psi(std::string name,
                                               CellSet     from_identity) {
    CellSet complement = [from_identity](std::size_t  n,
                                         element_type x,
                                         element_type y) {
      return !from_identity(n, x, y);
    };
    FactorSpec left{[from_identity](Groupoid const& g) {
                      return splice(g, left_zero(g.order()), from_identity);
                    },
                    from_identity};
    FactorSpec right{[complement](Groupoid const& g) {
                       return splice(g, left_zero(g.order()), complement);
                     },
                     complement};
    return FactorizationMethod(
        std::move(name), method_family::psi, std::move(left), std::move(right));
  }

  FactorizationMethod FactorizationMethod::tau(std::string       name,
                                               GroupoidTransform theta,
                                               bool identity_on_left) {
    FactorSpec of_identity{[theta](Groupoid const& g) {
                             return theta(left_zero(g.order()))
                                 .with_metadata_of(g);
                           },
                           everywhere};
    FactorSpec of_target{theta, nowhere};
    if (identity_on_left) {
      return FactorizationMethod(std::move(name),
                                 method_family::tau,
                                 std::move(of_identity),
                                 std::move(of_target));
    }
    return FactorizationMethod(std::move(name),
                               method_family::tau,
                               std::move(of_target),
                               std::move(of_identity));
  }

  Groupoid FactorizationMethod::derive_left(Groupoid const& target) const {
    return _left.derive(target);
  }

  Groupoid FactorizationMethod::derive_right(Groupoid const& target) const {
    return _right.derive(target);
  }

  bool FactorizationMethod::left_shape(Groupoid const& candidate,
                                       Groupoid const& target) const {
    return conforms(candidate, _left, target);
  }

  bool FactorizationMethod::right_shape(Groupoid const& candidate,
                                        Groupoid const& target) const {
    return conforms(candidate, _right, target);
  }

  FactorizationMethod const& factorization_method(method m) {
    static FactorizationMethod const ua
        = FactorizationMethod::psi("UA", on_diagonal);
    static FactorizationMethod const au
        = FactorizationMethod::psi("AU", off_diagonal);
    static FactorizationMethod const oj = FactorizationMethod::tau(
        "OJ", [](Groupoid const& g) { return skew_factor(g); }, true);
    static FactorizationMethod const jo = FactorizationMethod::tau(
        "JO", [](Groupoid const& g) { return skew_factor(g); }, false);
    switch (m) {
      case method::ua:
        return ua;
      case method::au:
        return au;
      case method::oj:
        return oj;
      case method::jo:
        return jo;
    }
    throw BinsysError(error_kind::internal, "unknown factorization method");
  }

  FactorPair factor(Groupoid const& g, FactorizationMethod const& m) {
    auto left  = m.derive_left(g);
    auto right = m.derive_right(g);
    bool ok    = product_is(left, right, g);
    return FactorPair{m.name(), std::move(left), std::move(right), ok};
  }

  FactorPair factor(Groupoid const& g, method m) {
    return factor(g, factorization_method(m));
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  ClassificationReport classify(Groupoid const& g) {
    auto const n  = g.order();
    auto const id = left_zero(n);
    auto const u  = signature_factor(g);
    auto const a  = similar_factor(g);
    auto const o  = orient_factor(n);
    auto const j  = skew_factor(g);

    ClassificationReport r{};
    r.signature_prime = u == id;
    r.similar_prime   = a == id;
    r.orient_prime    = o == id;
    r.skew_prime      = j == id;

    r.ua_holds = product_is(u, a, g);
    r.au_holds = product_is(a, u, g);
    r.oj_holds = product_is(o, j, g);
    r.jo_holds = product_is(j, o, g);

    bool const u_split = !r.signature_prime && !r.similar_prime;
    bool const j_split = !r.orient_prime && !r.skew_prime;
    r.ua_composite     = r.ua_holds && u_split;
    r.au_composite     = r.au_holds && u_split;
    r.u_composite      = r.ua_composite && r.au_composite;
    r.u_normal         = r.ua_holds && r.au_holds;
    r.oj_composite     = r.oj_holds && j_split;
    r.jo_composite     = r.jo_holds && j_split;
    r.j_composite      = r.oj_composite && r.jo_composite;
    r.j_normal         = r.oj_holds && r.jo_holds;

    if (auto z = g.zero()) {
      r.semi_neutral = is_semi_neutral(g, *z);
      bool const u_semi
          = is_semi_neutral(u, *z) != is_semi_neutral(a, *z);
      bool const j_semi
          = is_semi_neutral(o, *z) != is_semi_neutral(j, *z);
      r.semi_normal = (r.u_normal && u_semi) || (r.j_normal && j_semi);
      r.semi_composite = ((r.ua_composite || r.au_composite) && u_semi)
                         || ((r.oj_composite || r.jo_composite) && j_semi);
    }

    r.idempotent          = is_idempotent(g);
    r.strong              = is_strong(g);
    r.abelian             = is_commutative(g);
    r.orientation         = is_orientation(g);
    r.twisted_orientation = is_twisted_orientation(g);
    r.locally_zero        = is_locally_zero(g);
    r.bi_diagonal         = is_bi_diagonal(g);
    return r;
  }

  bool is_partially_prime(Groupoid const& g, Groupoid const& h, side s) {
    if (g.order() != h.order()) {
      throw BinsysError(error_kind::order_mismatch,
                        "groupoids have different orders ("
                            + std::to_string(g.order()) + " and "
                            + std::to_string(h.order()) + ")");
    }
    if (is_left_zero(g) || is_left_zero(h) || g == h) {
      return false;
    }
    return s == side::right ? product_is(g, h, g) : product_is(h, g, g);
  }

  std::optional<Groupoid> binary_equivalent(
      Groupoid const&                a,
      Groupoid const&                b,
      std::optional<Groupoid> const& witness) {
    if (a.order() != b.order()
        || (witness && witness->order() != a.order())) {
      throw BinsysError(error_kind::order_mismatch,
                        "binary equivalence needs groupoids of one order");
    }
    auto works = [&](Groupoid const& w) {
      return product_is(w, a, b) && product_is(w, b, a);
    };
    if (witness && works(*witness)) {
      return *witness;
    }
    for (auto const& w : {left_zero(a.order()), orient_factor(a.order())}) {
      if (works(w)) {
        return w;
      }
    }
    if (a.order() > exhaustive_order_limit) {
      throw BinsysError(error_kind::order_too_large,
                        "witness search needs order at most "
                            + std::to_string(exhaustive_order_limit)
                            + ", got " + std::to_string(a.order()));
    }
    std::optional<Groupoid> found;
    for_each_groupoid(a.order(),
                      0,
                      number_of_groupoids(a.order()),
                      [&](Groupoid const& w) {
                        if (works(w)) {
                          found = w;
                          return false;
                        }
                        return true;
                      });
    return found;
  }

}  // namespace binsys
