// The theorem-verification registry behind verify_claims.
//
// Each claim quantifies over a domain of groupoids (or pairs / triples of
// them). Exhaustive runs filter every groupoid of the order through the
// domain's membership test; sampled runs draw from a constructive sampler so
// that sparse domains (orientation, strong B1, ...) are still hit at orders
// 4 and 5.

#include <algorithm>         // for find, none_of
#include <functional>        // for function
#include <initializer_list>  // for initializer_list
#include <optional>          // for optional
#include <random>      // for mt19937_64, seed_seq
#include <span>        // for span
#include <string>      // for string
#include <vector>      // for vector

#include "binsys/axioms.hpp"
#include "binsys/bin_semigroup.hpp"
#include "binsys/enumeration.hpp"
#include "binsys/factorization.hpp"
#include "binsys/graphs.hpp"
#include "parallel.hpp"

namespace binsys {

  namespace {

    ////////////////////////////////////////////////////////////////////////
    // Domains
    ////////////////////////////////////////////////////////////////////////

    enum class domain {
      all,
      pointed,
      strong,
      orientation,
      locally_zero,
      bi_diagonal,
      semi_neutral,  // pointed
      b1,            // pointed
      strong_b1,     // pointed
      right_zero,
      commutative,
      abelian_group,
      avoids_operands  // strong, x•y ∉ {x, y} for all x, y
    };

    bool is_pointed(domain d) {
      return d == domain::pointed || d == domain::semi_neutral
             || d == domain::b1 || d == domain::strong_b1;
    }

    bool diagonal_is(Groupoid const& g, element_type z) {
      for (element_type x = 0; x < g.order(); ++x) {
        if (g(x, x) != z) {
          return false;
        }
      }
      return true;
    }

    bool avoids_operands(Groupoid const& g) {
      for (element_type x = 0; x < g.order(); ++x) {
        for (element_type y = 0; y < g.order(); ++y) {
          if (g(x, y) == x || g(x, y) == y) {
            return false;
          }
        }
      }
      return is_strong(g);
    }

    // g carries its zero already for pointed domains.
    bool member(domain d, Groupoid const& g) {
      switch (d) {
        case domain::all:
        case domain::pointed:
          return true;
        case domain::strong:
          return is_strong(g);
        case domain::orientation:
          return is_orientation(g);
        case domain::locally_zero:
          return is_locally_zero(g);
        case domain::bi_diagonal:
          return is_bi_diagonal(g);
        case domain::semi_neutral:
          return is_semi_neutral(g, *g.zero());
        case domain::b1:
          return diagonal_is(g, *g.zero());
        case domain::strong_b1:
          return diagonal_is(g, *g.zero()) && is_strong(g);
        case domain::right_zero:
          return is_right_zero(g);
        case domain::commutative:
          return is_commutative(g);
        case domain::abelian_group:
          return is_abelian_group(g);
        case domain::avoids_operands:
          return avoids_operands(g);
      }
      return false;
    }

    Groupoid cyclic_group(std::size_t n) {
      std::vector<element_type> cells(n * n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          cells[x * n + y] = static_cast<element_type>((x + y) % n);
        }
      }
      return Groupoid(n, std::move(cells));
    }

    Groupoid klein_group() {
      std::vector<element_type> cells(16);
      for (element_type x = 0; x < 4; ++x) {
        for (element_type y = 0; y < 4; ++y) {
          cells[x * 4 + y] = x ^ y;
        }
      }
      return Groupoid(4, std::move(cells));
    }

    class Sampler {
     public:
      Sampler(std::size_t n, std::mt19937_64& rng) : _n(n), _rng(rng) {}

      element_type uniform() {
        return below(static_cast<element_type>(_n));
      }

      element_type below(element_type bound) {
        return std::uniform_int_distribution<element_type>(0, bound - 1)(_rng);
      }

      // Uniform over [0, n) minus the listed values (which must leave at
      // least one choice).
      element_type avoiding(std::initializer_list<element_type> banned) {
        while (true) {
          auto const v = uniform();
          if (std::find(banned.begin(), banned.end(), v) == banned.end()) {
            return v;
          }
        }
      }

      std::optional<Groupoid> draw(domain d) {
        auto const n = _n;
        auto       t = std::vector<element_type>(n * n);
        auto at = [&](element_type x, element_type y) -> element_type& {
          return t[x * n + y];
        };
        auto fill_uniform = [&] {
          for (auto& c : t) {
            c = uniform();
          }
        };
        // off-diagonal pairs with x•y ≠ y•x
        auto fill_strong_pairs = [&] {
          for (element_type x = 0; x < n; ++x) {
            for (element_type y = x + 1; y < n; ++y) {
              at(x, y) = uniform();
              at(y, x) = avoiding({at(x, y)});
            }
          }
        };
        std::optional<element_type> zero;
        switch (d) {
          case domain::all:
            fill_uniform();
            break;
          case domain::pointed:
            fill_uniform();
            zero = uniform();
            break;
          case domain::strong:
            fill_uniform();
            fill_strong_pairs();
            break;
          case domain::orientation:
            for (element_type x = 0; x < n; ++x) {
              for (element_type y = 0; y < n; ++y) {
                at(x, y) = below(2) == 0 ? x : y;
              }
            }
            break;
          case domain::locally_zero: {
            std::uint64_t mask = 0;
            for (std::size_t b = 0; b < n * (n - 1) / 2; ++b) {
              mask |= std::uint64_t(below(2)) << b;
            }
            return from_graph(graph_from_mask(n, mask));
          }
          case domain::bi_diagonal:
            fill_uniform();
            for (element_type i = 0; i < n; ++i) {
              at(i, partner(n, i)) = at(partner(n, i), i);
            }
            break;
          case domain::semi_neutral:
            zero = uniform();
            for (element_type x = 0; x < n; ++x) {
              for (element_type y = 0; y < n; ++y) {
                at(x, y) = x == y ? *zero : x;
              }
            }
            break;
          case domain::b1:
            fill_uniform();
            zero = uniform();
            for (element_type x = 0; x < n; ++x) {
              at(x, x) = *zero;
            }
            break;
          case domain::strong_b1:
            zero = uniform();
            fill_strong_pairs();
            for (element_type x = 0; x < n; ++x) {
              at(x, x) = *zero;
            }
            break;
          case domain::right_zero:
            return binsys::right_zero(n);
          case domain::commutative:
            fill_uniform();
            for (element_type x = 0; x < n; ++x) {
              for (element_type y = x + 1; y < n; ++y) {
                at(y, x) = at(x, y);
              }
            }
            break;
          case domain::abelian_group:
            if (n == 4 && below(2) == 0) {
              return klein_group();
            }
            return cyclic_group(n);
          case domain::avoids_operands:
            if (n < 4) {
              return std::nullopt;
            }
            for (element_type x = 0; x < n; ++x) {
              at(x, x) = avoiding({x});
              for (element_type y = x + 1; y < n; ++y) {
                at(x, y) = avoiding({x, y});
                at(y, x) = avoiding({x, y, at(x, y)});
              }
            }
            break;
        }
        return Groupoid(n, std::move(t), {}, zero);
      }

     private:
      std::size_t      _n;
      std::mt19937_64& _rng;
    };

    ////////////////////////////////////////////////////////////////////////
    // Claims
    ////////////////////////////////////////////////////////////////////////

    enum class verdict { skip, pass, fail };

    verdict holds(bool b) {
      return b ? verdict::pass : verdict::fail;
    }

    using Args  = std::span<Groupoid const>;
    using Check = std::function<verdict(Args)>;

    struct Claim {
      std::string id;
      std::string statement;
      domain      dom;
      std::size_t arity;
      // Orders below this satisfy the claim vacuously (the domain's
      // composite/prime conclusions need two distinct elements).
      std::size_t min_order;
      Check       check;
      std::string notes;
      // Needs the exhaustive center test, so only runs at order ≤ 3.
      bool small_orders_only = false;
    };

    Groupoid const& id_of(Groupoid const& g) {
      thread_local std::vector<Groupoid> cache;
      while (cache.size() < g.order()) {
        cache.push_back(left_zero(cache.size() + 1));
      }
      return cache[g.order() - 1];
    }

    bool unique_factorization(Groupoid const& g, method m) {
      auto const r = uniqueness_search(g, factorization_method(m), 1);
      return r.derived_pair.reproduces_target && r.other_solutions.empty();
    }

    std::vector<Claim> build_registry() {
      std::vector<Claim> c;
      auto add = [&c](std::string id,
                      std::string statement,
                      domain      dom,
                      std::size_t arity,
                      std::size_t min_order,
                      Check       check,
                      std::string notes = "") {
        c.push_back(Claim{std::move(id),
                          std::move(statement),
                          dom,
                          arity,
                          min_order,
                          std::move(check),
                          std::move(notes)});
      };

      add("Thm-2.4-identity",
          "the left-zero groupoid is a two-sided identity for the product",
          domain::all,
          1,
          1,
          [](Args a) {
            auto const& g = a[0];
            return holds(product_is(id_of(g), g, g)
                         && product_is(g, id_of(g), g));
          });
      add("Thm-2.4-associativity",
          "the product is associative",
          domain::all,
          3,
          1,
          [](Args a) {
            return holds(product(product(a[0], a[1]), a[2])
                         == product(a[0], product(a[1], a[2])));
          });
      add("Cor-2.7",
          "the product of locally-zero groupoids is locally-zero",
          domain::locally_zero,
          2,
          1,
          [](Args a) { return holds(is_locally_zero(product(a[0], a[1]))); });
      add("Prop-2.8",
          "a locally-zero groupoid squares to the left-zero groupoid",
          domain::locally_zero,
          1,
          1,
          [](Args a) { return holds(product_is(a[0], a[0], id_of(a[0]))); });
      add("Prop-2.6",
          "the left- and right-zero semigroups are central",
          domain::right_zero,
          1,
          1,
          [](Args a) {
            return holds(in_center(a[0]) && in_center(id_of(a[0])));
          });
      c.push_back(Claim{
          "center-agreement",
          "a groupoid commutes with every groupoid iff it is locally-zero",
          domain::all,
          1,
          1,
          [](Args a) {
            return holds(in_center(a[0], center_mode::fast)
                         == in_center(a[0], center_mode::exhaustive));
          },
          "the cited characterization; at order 3 the mixed locally-zero "
          "groupoids are not central, so counterexamples are expected there",
          true});
      add("Prop-2.5",
          "the right-zero semigroup is strong",
          domain::right_zero,
          1,
          1,
          [](Args a) { return holds(is_strong(a[0])); });

      add("Thm-3.1.3",
          "a strong groupoid has a UA-factorization",
          domain::strong,
          1,
          1,
          [](Args a) { return holds(factor(a[0], method::ua).reproduces_target); });
      add("Thm-3.2.3",
          "every groupoid has an AU-factorization",
          domain::all,
          1,
          1,
          [](Args a) { return holds(factor(a[0], method::au).reproduces_target); });
      add("Cor-3.2.5",
          "a strong groupoid is u-normal",
          domain::strong,
          1,
          1,
          [](Args a) { return holds(classify(a[0]).u_normal); });
      add("Prop-3.2",
          "the similar factor is strong",
          domain::all,
          1,
          1,
          [](Args a) { return holds(is_strong(similar_factor(a[0]))); });
      add("Thm-3.3.1",
          "the signature factor is similar-prime and the similar factor is "
          "signature-prime",
          domain::all,
          1,
          1,
          [](Args a) {
            auto const& g = a[0];
            return holds(similar_factor(signature_factor(g)) == id_of(g)
                         && signature_factor(similar_factor(g)) == id_of(g));
          },
          "checked for every groupoid, not only strong ones");
      add("Cor-3.3.2",
          "a UA-factorization re-factors as U(U(g)) ⋄ A(A(g))",
          domain::all,
          1,
          1,
          [](Args a) {
            auto const& g = a[0];
            if (!factor(g, method::ua).reproduces_target) {
              return verdict::skip;
            }
            return holds(product_is(signature_factor(signature_factor(g)),
                                    similar_factor(similar_factor(g)),
                                    g));
          });
      add("Cor-3.3.3",
          "an AU-factorization re-factors as A(A(g)) ⋄ U(U(g))",
          domain::all,
          1,
          1,
          [](Args a) {
            auto const& g = a[0];
            if (!factor(g, method::au).reproduces_target) {
              return verdict::skip;
            }
            return holds(product_is(similar_factor(similar_factor(g)),
                                    signature_factor(signature_factor(g)),
                                    g));
          });
      add("Cor-3.3.4",
          "a strong groupoid re-factors both ways through U(U(g)), A(A(g))",
          domain::strong,
          1,
          1,
          [](Args a) {
            auto const& g  = a[0];
            auto const  uu = signature_factor(signature_factor(g));
            auto const  aa = similar_factor(similar_factor(g));
            return holds(product_is(uu, aa, g) && product_is(aa, uu, g));
          });
      add("Prop-3.2.7",
          "a signature- or similar-prime groupoid is u-normal",
          domain::all,
          1,
          1,
          [](Args a) {
            auto const r = classify(a[0]);
            if (!r.signature_prime && !r.similar_prime) {
              return verdict::skip;
            }
            return holds(r.u_normal);
          });
      add("Prop-3.2.8",
          "the right-zero semigroup is similar-prime",
          domain::right_zero,
          1,
          1,
          [](Args a) { return holds(classify(a[0]).similar_prime); });
      add("Prop-3.2.10-statement",
          "a strong groupoid that is not locally-zero is u-composite",
          domain::strong,
          1,
          1,
          [](Args a) {
            auto const r = classify(a[0]);
            if (r.locally_zero) {
              return verdict::skip;
            }
            return holds(r.u_composite);
          },
          "statement as written; a strong groupoid with left-zero "
          "off-diagonal and non-idempotent diagonal is signature-prime, so "
          "counterexamples are expected");
      add("Prop-3.2.10-proof",
          "a strong groupoid with x•y outside {x, y} for all x, y is "
          "u-composite",
          domain::avoids_operands,
          1,
          1,
          [](Args a) { return holds(classify(a[0]).u_composite); },
          "hypothesis used by the proof; the domain is empty below order 4");

      add("Prop-4.4",
          "the orient factor is locally-zero",
          domain::all,
          1,
          1,
          [](Args a) { return holds(is_locally_zero(orient_factor(a[0]))); });
      add("Cor-4.5",
          "the orient factor squares to the left-zero groupoid",
          domain::all,
          1,
          1,
          [](Args a) {
            auto const o = orient_factor(a[0]);
            return holds(product_is(o, o, id_of(a[0])));
          });
      add("orient-depends-on-order",
          "the orient factor of g equals the orient factor of left-zero",
          domain::all,
          1,
          1,
          [](Args a) {
            return holds(orient_factor(a[0]) == orient_factor(id_of(a[0])));
          });
      add("Thm-4.1.2",
          "every groupoid has an OJ-factorization",
          domain::all,
          1,
          1,
          [](Args a) { return holds(factor(a[0], method::oj).reproduces_target); });
      add("Thm-4.2.3",
          "a groupoid with the orientation property has a JO-factorization",
          domain::orientation,
          1,
          1,
          [](Args a) { return holds(factor(a[0], method::jo).reproduces_target); });
      add("Prop-4.2.5",
          "a groupoid with the orientation property is j-normal",
          domain::orientation,
          1,
          1,
          [](Args a) { return holds(classify(a[0]).j_normal); });
      add("Thm-4.3.1",
          "the orient factor is skew-prime and the skew factor is "
          "binary-equivalent to g with witness the orient factor",
          domain::all,
          1,
          1,
          [](Args a) {
            auto const& g = a[0];
            auto const  o = orient_factor(g);
            auto const  j = skew_factor(g);
            return holds(skew_factor(o) == id_of(g) && product_is(o, j, g)
                         && product_is(o, g, j));
          });
      add("Thm-4.3.3",
          "the right-zero semigroup is j-composite",
          domain::right_zero,
          1,
          2,
          [](Args a) { return holds(classify(a[0]).j_composite); },
          "at order 2 the whole off-diagonal is the anti-diagonal, so the "
          "skew factor of right-zero is left-zero");
      add("Prop-4.3.5",
          "a bi-diagonal groupoid other than left-zero is partially-left-"
          "prime with witness its orient factor",
          domain::bi_diagonal,
          1,
          2,
          [](Args a) {
            auto const& g = a[0];
            if (g == id_of(g)) {
              return verdict::skip;
            }
            return holds(is_partially_prime(g, orient_factor(g), side::left));
          });
      add("skew-involution",
          "the skew factor is an involution fixing exactly the bi-diagonal "
          "groupoids",
          domain::all,
          1,
          1,
          [](Args a) {
            auto const& g = a[0];
            auto const  j = skew_factor(g);
            return holds(skew_factor(j) == g && (is_bi_diagonal(g) == (j == g)));
          });
      add("OP-subsemigroup",
          "the product of groupoids with the orientation property has it",
          domain::orientation,
          2,
          1,
          [](Args a) { return holds(is_orientation(product(a[0], a[1]))); });

      add("Prop-5.1",
          "a semi-neutral groupoid is signature-prime and OJ-composite",
          domain::semi_neutral,
          1,
          2,
          [](Args a) {
            auto const r = classify(a[0]);
            return holds(r.signature_prime && r.oj_composite);
          });
      add("Cor-5.2",
          "a semi-neutral groupoid is semi-normal",
          domain::semi_neutral,
          1,
          2,
          [](Args a) { return holds(classify(a[0]).semi_normal == true); });
      add("Prop-5.3",
          "the product of semi-neutral groupoids with one zero is "
          "semi-neutral",
          domain::semi_neutral,
          2,
          1,
          [](Args a) {
            if (a[0].zero() != a[1].zero()) {
              return verdict::skip;
            }
            return holds(is_semi_neutral(product(a[0], a[1]), *a[0].zero()));
          });
      add("Prop-5.4",
          "the similar factor of a pointed groupoid satisfying B1 is "
          "semi-neutral",
          domain::b1,
          1,
          1,
          [](Args a) {
            return holds(is_semi_neutral(similar_factor(a[0]), *a[0].zero()));
          });
      add("Cor-5.5",
          "a strong B1-algebra is semi-normal",
          domain::strong_b1,
          1,
          2,
          [](Args a) { return holds(classify(a[0]).semi_normal == true); });
      add("Cor-5.6",
          "a strong B1-algebra with x•y ≠ x for all x ≠ y is semi-composite",
          domain::strong_b1,
          1,
          2,
          [](Args a) {
            auto const& g = a[0];
            for (element_type x = 0; x < g.order(); ++x) {
              for (element_type y = 0; y < g.order(); ++y) {
                if (x != y && g(x, y) == x) {
                  return verdict::skip;
                }
              }
            }
            return holds(classify(g).semi_composite == true);
          });
      add("Prop-5.9-group",
          "no abelian group of order at least 2 is u-normal",
          domain::abelian_group,
          1,
          1,
          [](Args a) {
            return holds(a[0].order() == 1 || !classify(a[0]).u_normal);
          },
          "abelian-group reading");
      add("Prop-5.9-magma",
          "no commutative groupoid of order at least 2 is u-normal",
          domain::commutative,
          1,
          1,
          [](Args a) {
            return holds(a[0].order() == 1 || !classify(a[0]).u_normal);
          },
          "commutative-magma reading; counterexamples are expected "
          "(constant groupoids are commutative and u-normal)");

      add("Cor-3.1.4",
          "the UA-factorization of a strong groupoid is the only one of its "
          "shape",
          domain::strong,
          1,
          1,
          [](Args a) { return holds(unique_factorization(a[0], method::ua)); });
      add("UA-uniqueness-all",
          "whenever the UA product reproduces g, it is the only UA-shaped "
          "factorization",
          domain::all,
          1,
          1,
          [](Args a) {
            if (!factor(a[0], method::ua).reproduces_target) {
              return verdict::skip;
            }
            return holds(unique_factorization(a[0], method::ua));
          },
          "uniqueness beyond the strong hypothesis; counterexamples are "
          "expected");
      add("Cor-3.2.4",
          "the AU-factorization is the only one of its shape",
          domain::all,
          1,
          1,
          [](Args a) { return holds(unique_factorization(a[0], method::au)); });
      add("Cor-4.1.3",
          "the OJ-factorization is the only one of its shape",
          domain::all,
          1,
          1,
          [](Args a) { return holds(unique_factorization(a[0], method::oj)); });
      add("Cor-4.2.4",
          "the JO-factorization of a groupoid with the orientation property "
          "is the only one of its shape",
          domain::orientation,
          1,
          1,
          [](Args a) { return holds(unique_factorization(a[0], method::jo)); });
      return c;
    }

    std::vector<Claim> const& registry() {
      static std::vector<Claim> const claims = build_registry();
      return claims;
    }

    ////////////////////////////////////////////////////////////////////////
    // Running
    ////////////////////////////////////////////////////////////////////////

    // Largest number of tuples an exhaustive run will enumerate before it
    // falls back to seeded random tuples.
    constexpr std::uint64_t tuple_budget  = 1u << 22;
    constexpr std::size_t   tuple_samples = 100000;

    class Recorder {
     public:
      explicit Recorder(ClaimReport& report) : _report(report) {}

      void operator()(Claim const& claim, Args args) {
        switch (claim.check(args)) {
          case verdict::skip:
            return;
          case verdict::pass:
            ++_report.checked;
            return;
          case verdict::fail:
            ++_report.checked;
            ++_report.counterexample_count;
            if (_report.counterexamples.size() < stored_counterexamples) {
              _report.counterexamples.emplace_back(args.begin(), args.end());
            }
        }
      }

     private:
      ClaimReport& _report;
    };

    std::vector<Groupoid> members(domain d, std::size_t n) {
      std::vector<Groupoid> out;
      for_each_groupoid(n, 0, number_of_groupoids(n), [&](Groupoid const& g) {
        if (is_pointed(d)) {
          for (element_type z = 0; z < n; ++z) {
            auto p = g.with_zero(z);
            if (member(d, p)) {
              out.push_back(std::move(p));
            }
          }
        } else if (member(d, g)) {
          out.push_back(g);
        }
        return true;
      });
      return out;
    }

    std::uint64_t power(std::uint64_t base, std::size_t exp) {
      std::uint64_t out = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        out *= base;
        if (out > tuple_budget) {
          return tuple_budget + 1;
        }
      }
      return out;
    }

    void run_exhaustive(Claim const&     claim,
                        std::size_t      n,
                        std::mt19937_64& rng,
                        ClaimReport&     report) {
      Recorder record(report);
      auto const pool = members(claim.dom, n);
      if (pool.empty()) {
        return;
      }
      if (claim.arity == 1) {
        for (auto const& g : pool) {
          record(claim, Args(&g, 1));
        }
        return;
      }
      std::vector<Groupoid> tuple;
      auto const            total = power(pool.size(), claim.arity);
      if (total <= tuple_budget) {
        for (std::uint64_t k = 0; k < total; ++k) {
          tuple.clear();
          auto rest = k;
          for (std::size_t i = 0; i < claim.arity; ++i) {
            tuple.push_back(pool[rest % pool.size()]);
            rest /= pool.size();
          }
          record(claim, tuple);
        }
        return;
      }
      report.mode = claim_mode::sampled;
      report.notes += std::string(report.notes.empty() ? "" : "; ")
                      + std::to_string(tuple_samples)
                      + " uniform random tuples (exhaustive tuple count "
                        "exceeds budget)";
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      for (std::size_t s = 0; s < tuple_samples; ++s) {
        tuple.clear();
        for (std::size_t i = 0; i < claim.arity; ++i) {
          tuple.push_back(pool[pick(rng)]);
        }
        record(claim, tuple);
      }
    }

    void run_sampled(Claim const&     claim,
                     std::size_t      n,
                     std::size_t      count,
                     std::mt19937_64& rng,
                     ClaimReport&     report) {
      Recorder              record(report);
      Sampler               sampler(n, rng);
      std::vector<Groupoid> tuple;
      for (std::size_t s = 0; s < count; ++s) {
        tuple.clear();
        for (std::size_t i = 0; i < claim.arity; ++i) {
          auto g = sampler.draw(claim.dom);
          if (!g) {
            return;
          }
          tuple.push_back(std::move(*g));
        }
        record(claim, tuple);
      }
    }

    ClaimReport run_claim(std::size_t               index,
                          std::size_t               n,
                          std::optional<SampleSpec> sample) {
      auto const& claim = registry()[index];
      ClaimReport report;
      report.id        = claim.id;
      report.statement = claim.statement;
      report.order     = n;
      report.mode = sample ? claim_mode::sampled : claim_mode::exhaustive;
      report.notes     = claim.notes;

      std::uint64_t const seed = sample ? sample->seed : 0;
      std::seed_seq       seq{static_cast<std::uint32_t>(seed),
                        static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(index)};
      std::mt19937_64     rng(seq);

      auto note = [&report](std::string const& s) {
        report.notes += (report.notes.empty() ? "" : "; ") + s;
      };
      if (n < claim.min_order) {
        note("vacuous below order " + std::to_string(claim.min_order));
        return report;
      }
      if (claim.small_orders_only && n > exhaustive_order_limit) {
        note("not run: needs the exhaustive center test (order at most "
             + std::to_string(exhaustive_order_limit) + ")");
        return report;
      }
      if (sample) {
        run_sampled(claim, n, sample->count, rng, report);
      } else {
        run_exhaustive(claim, n, rng, report);
      }
      return report;
    }
  }  // namespace

  std::vector<std::string> claim_ids() {
    std::vector<std::string> out;
    for (auto const& c : registry()) {
      out.push_back(c.id);
    }
    return out;
  }

  std::vector<ClaimReport> verify_claims(std::size_t               order,
                                         std::optional<SampleSpec> sample,
                                         std::size_t               threads,
                                         std::vector<std::string> const& only) {
    if (order == 0) {
      throw BinsysError(error_kind::bad_shape, "order must be positive");
    }
    if (!sample && order > exhaustive_order_limit) {
      throw BinsysError(error_kind::order_too_large,
                        "exhaustive verification needs order at most "
                            + std::to_string(exhaustive_order_limit)
                            + ", got " + std::to_string(order)
                            + "; use a sample");
    }
    if (sample) {
      number_of_groupoids(order);  // rejects orders whose tables overflow
    }
    auto const&              claims = registry();
    std::vector<std::size_t> selected;
    for (std::size_t i = 0; i < claims.size(); ++i) {
      if (only.empty()
          || std::find(only.begin(), only.end(), claims[i].id) != only.end()) {
        selected.push_back(i);
      }
    }
    for (auto const& id : only) {
      if (std::none_of(claims.begin(), claims.end(), [&](Claim const& c) {
            return c.id == id;
          })) {
        throw BinsysError(error_kind::parse_error, "unknown claim " + id);
      }
    }
    // One shard per worker; each shard runs a contiguous block of claims with
    // per-claim seeds, so the output does not depend on the worker count.
    auto shards = detail::run_sharded<std::vector<ClaimReport>>(
        selected.size(),
        resolve_threads(threads),
        [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
          std::vector<ClaimReport> out;
          for (auto k = begin; k < end; ++k) {
            out.push_back(run_claim(selected[k], order, sample));
          }
          return out;
        });
    std::vector<ClaimReport> out;
    for (auto& s : shards) {
      for (auto& r : s) {
        out.push_back(std::move(r));
      }
    }
    return out;
  }

}  // namespace binsys
