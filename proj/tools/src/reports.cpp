#include "binsys/cli/reports.hpp"

#include <string>  // for string

#include "binsys/axioms.hpp"
#include "binsys/cli/formats.hpp"

namespace binsys::cli {

  namespace {
    json optional_json(std::optional<bool> v) {
      return v ? json(*v) : json(nullptr);
    }

    std::string assumed_reading(algebra_class c) {
      if (c == algebra_class::strong_q) {
        return "strong Q-algebra taken as Q-algebra and d3'";
      }
      return std::string(algebra_class_name(c)) + " taken as B1, B2 and Q";
    }
  }  // namespace

  json table_json(Groupoid const& g) {
    auto const labels = display_labels(g);
    json       rows   = json::array();
    for (element_type x = 0; x < g.order(); ++x) {
      json row = json::array();
      for (element_type y = 0; y < g.order(); ++y) {
        row.push_back(labels[g(x, y)]);
      }
      rows.push_back(std::move(row));
    }
    json out;
    out["elements"] = labels;
    out["zero"]     = g.zero() ? json(labels[*g.zero()]) : json(nullptr);
    out["table"]    = std::move(rows);
    return out;
  }

  json classification_json(Groupoid const&             g,
                           ClassificationReport const& r) {
    json out;
    out["schema"]              = schema_version;
    out["order"]               = g.order();
    out["signature_prime"]     = r.signature_prime;
    out["similar_prime"]       = r.similar_prime;
    out["orient_prime"]        = r.orient_prime;
    out["skew_prime"]          = r.skew_prime;
    out["ua_holds"]            = r.ua_holds;
    out["au_holds"]            = r.au_holds;
    out["oj_holds"]            = r.oj_holds;
    out["jo_holds"]            = r.jo_holds;
    out["ua_composite"]        = r.ua_composite;
    out["au_composite"]        = r.au_composite;
    out["u_composite"]         = r.u_composite;
    out["u_normal"]            = r.u_normal;
    out["oj_composite"]        = r.oj_composite;
    out["jo_composite"]        = r.jo_composite;
    out["j_composite"]         = r.j_composite;
    out["j_normal"]            = r.j_normal;
    out["semi_neutral"]        = optional_json(r.semi_neutral);
    out["semi_normal"]         = optional_json(r.semi_normal);
    out["semi_composite"]      = optional_json(r.semi_composite);
    out["idempotent"]          = r.idempotent;
    out["strong"]              = r.strong;
    out["abelian"]             = r.abelian;
    out["orientation"]         = r.orientation;
    out["twisted_orientation"] = r.twisted_orientation;
    out["locally_zero"]        = r.locally_zero;
    out["bi_diagonal"]         = r.bi_diagonal;
    return out;
  }

  json axioms_json(Groupoid const& g) {
    auto const classes = algebra_classes(g);  // throws without a zero
    auto const v       = axiom_vector(g);

    json axioms;
    for (auto a : all_axioms) {
      axioms[axiom_name(a)] = optional_json(v[a]);
    }
    json names       = json::array();
    json assumptions = json::array();
    for (auto c : classes) {
      names.push_back(algebra_class_name(c));
      if (is_assumed_definition(c)) {
        assumptions.push_back(assumed_reading(c));
      }
    }
    json out;
    out["schema"]      = schema_version;
    out["order"]       = g.order();
    out["zero"]        = g.label(*g.zero());
    out["axioms"]      = std::move(axioms);
    out["classes"]     = std::move(names);
    out["assumptions"] = std::move(assumptions);
    return out;
  }

  json census_json(CensusReport const& c) {
    json out;
    out["schema"]              = schema_version;
    out["order"]               = c.order;
    out["total"]               = c.total;
    out["strong"]              = c.strong;
    out["idempotent"]          = c.idempotent;
    out["locally_zero"]        = c.locally_zero;
    out["orientation"]         = c.orientation;
    out["twisted_orientation"] = c.twisted_orientation;
    out["bi_diagonal"]         = c.bi_diagonal;
    out["abelian"]             = c.abelian;
    out["signature_prime"]     = c.signature_prime;
    out["similar_prime"]       = c.similar_prime;
    out["ua_holds"]            = c.ua_holds;
    out["au_holds"]            = c.au_holds;
    out["oj_holds"]            = c.oj_holds;
    out["jo_holds"]            = c.jo_holds;
    out["u_normal"]            = c.u_normal;
    out["j_normal"]            = c.j_normal;
    out["u_composite"]         = c.u_composite;
    out["j_composite"]         = c.j_composite;
    return out;
  }

  json claims_json(std::size_t                     order,
                   std::vector<ClaimReport> const& reports) {
    json claims = json::array();
    bool all    = true;
    for (auto const& r : reports) {
      json examples = json::array();
      for (auto const& tuple : r.counterexamples) {
        json t = json::array();
        for (auto const& g : tuple) {
          t.push_back(table_json(g));
        }
        examples.push_back(std::move(t));
      }
      json c;
      c["id"]                   = r.id;
      c["statement"]            = r.statement;
      c["mode"]                 = claim_mode_name(r.mode);
      c["checked"]              = r.checked;
      c["counterexample_count"] = r.counterexample_count;
      c["passed"]               = r.passed();
      c["counterexamples"]      = std::move(examples);
      c["notes"]                = r.notes;
      claims.push_back(std::move(c));
      all = all && r.passed();
    }
    json out;
    out["schema"]     = schema_version;
    out["order"]      = order;
    out["all_passed"] = all;
    out["claims"]     = std::move(claims);
    return out;
  }

}  // namespace binsys::cli
