#include "binsys/cli/run.hpp"

#include <algorithm>  // for reverse
#include <cstdlib>    // for getenv
#include <exception>  // for exception
#include <istream>    // for istream
#include <ostream>    // for ostream
#include <string>     // for string, stoull

#include <CLI11.hpp>

#include "binsys/bin_semigroup.hpp"
#include "binsys/cli/formats.hpp"
#include "binsys/cli/reports.hpp"
#include "binsys/enumeration.hpp"
#include "binsys/factorization.hpp"
#include "binsys/graphs.hpp"

namespace binsys::cli {

  namespace {
    std::size_t threads_from_environment() {
      char const* value = std::getenv("BINSYS_THREADS");
      if (value == nullptr || *value == '\0') {
        return 0;
      }
      std::size_t used = 0;
      unsigned long long n = 0;
      try {
        n = std::stoull(value, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used == 0 || value[used] != '\0') {
        throw BinsysError(error_kind::parse_error,
                          std::string("BINSYS_THREADS is not a number: ")
                              + value);
      }
      return static_cast<std::size_t>(n);
    }

    struct Options {
      std::string              a;
      std::string              b;
      std::string              method = "ua";
      std::string              action;
      std::size_t              order = 0;
      bool                     census_only = false;
      std::size_t              sample = 0;
      std::uint64_t            seed   = 1;
      std::vector<std::string> only;
    };
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Finite binary systems: the ⋄ product, factorizations, "
                 "axioms and graphs"};
    app.name("binsys");
    app.require_subcommand(1);
    Options o;

    auto* product_cmd = app.add_subcommand("product", "write A ⋄ B");
    product_cmd->add_option("A", o.a, "left operand")->required();
    product_cmd->add_option("B", o.b, "right operand")->required();

    auto* derive_cmd
        = app.add_subcommand("derive", "derive both factors and check them");
    derive_cmd->add_option("--method", o.method, "ua, au, oj or jo")
        ->required()
        ->check(CLI::IsMember({"ua", "au", "oj", "jo"}, CLI::ignore_case));
    derive_cmd->add_option("G", o.a, "target groupoid")->required();

    auto* classify_cmd
        = app.add_subcommand("classify", "JSON classification report");
    classify_cmd->add_option("G", o.a)->required();

    auto* axioms_cmd = app.add_subcommand(
        "axioms", "JSON axiom vector and algebra classes (needs a zero)");
    axioms_cmd->add_option("G", o.a)->required();

    auto* graph_cmd = app.add_subcommand("graph", "graph bridge");
    graph_cmd->add_option("action", o.action)
        ->required()
        ->check(CLI::IsMember({"to-dot", "from-dot", "to-digraph"}));
    graph_cmd->add_option("FILE", o.b)->required();

    auto* enumerate_cmd = app.add_subcommand(
        "enumerate", "list every groupoid of an order, or count them");
    enumerate_cmd->add_option("--order", o.order)->required();
    enumerate_cmd->add_flag("--census", o.census_only, "JSON counts only");

    auto* verify_cmd
        = app.add_subcommand("verify", "check the claim registry");
    verify_cmd->add_option("--order", o.order)->required();
    auto* sample_opt = verify_cmd->add_option(
        "--sample", o.sample, "random instances per claim");
    verify_cmd->add_option("--seed", o.seed, "sampler seed")
        ->needs(sample_opt);
    verify_cmd->add_option("--only", o.only, "claim ids to run");

    auto* inverse_cmd
        = app.add_subcommand("inverse", "a two-sided ⋄-inverse, or none");
    inverse_cmd->add_option("G", o.a)->required();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err) == 0 ? exit_ok : exit_invalid;
    }

    auto load = [&in](std::string const& path) {
      return parse_groupoid(read_text(path, in));
    };

    try {
      auto const threads = threads_from_environment();

      if (*product_cmd) {
        out << serialize(product(load(o.a), load(o.b)));
      } else if (*derive_cmd) {
        auto const g    = load(o.a);
        auto const pair = factor(g, *parse_method(o.method));
        out << "# " << pair.method << " left factor\n"
            << serialize(pair.left) << "---\n"
            << "# " << pair.method << " right factor\n"
            << serialize(pair.right) << "---\n"
            << "reproduces_target: "
            << (pair.reproduces_target ? "true" : "false") << '\n';
      } else if (*classify_cmd) {
        auto const g = load(o.a);
        out << classification_json(g, classify(g)).dump(2) << '\n';
      } else if (*axioms_cmd) {
        out << axioms_json(load(o.a)).dump(2) << '\n';
      } else if (*graph_cmd) {
        if (o.action == "from-dot") {
          auto lg = parse_dot(read_text(o.b, in));
          out << serialize(from_graph(lg.graph).with_labels(lg.labels));
        } else {
          auto const g = load(o.b);
          if (o.action == "to-dot") {
            if (!is_locally_zero(g)) {
              err << "warning: " << o.b
                  << " is not locally-zero; the graph does not determine "
                     "it\n";
            }
            out << to_dot(to_graph(g), display_labels(g));
          } else {
            out << to_dot(to_digraph(g), display_labels(g));
          }
        }
      } else if (*enumerate_cmd) {
        if (o.census_only) {
          out << census_json(census(o.order, threads)).dump(2) << '\n';
        } else {
          bool first = true;
          for (auto const& g : enumerate(o.order)) {
            out << (first ? "" : "---\n") << serialize(g);
            first = false;
          }
        }
      } else if (*verify_cmd) {
        std::optional<SampleSpec> sample;
        if (*sample_opt) {
          sample = SampleSpec{o.sample, o.seed};
        }
        auto const reports = verify_claims(o.order, sample, threads, o.only);
        out << claims_json(o.order, reports).dump(2) << '\n';
      } else if (*inverse_cmd) {
        auto const inv = find_inverse(load(o.a));
        out << (inv ? serialize(*inv) : std::string("none\n"));
      }
    } catch (BinsysError const& e) {
      err << "error: " << error_kind_name(e.kind()) << ": " << e.what()
          << '\n';
      if (e.kind() == error_kind::internal) {
        return exit_internal;
      }
      return is_precondition(e.kind()) ? exit_precondition : exit_invalid;
    } catch (std::exception const& e) {
      err << "error: Internal: " << e.what() << '\n';
      return exit_internal;
    }
    return exit_ok;
  }

}  // namespace binsys::cli
