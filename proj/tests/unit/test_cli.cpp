#include <catch_amalgamated.hpp>

#include <cstdlib>  // for setenv, unsetenv
#include <sstream>  // for istringstream, ostringstream

#include <nlohmann/json.hpp>

#include "binsys/cli/formats.hpp"
#include "binsys/cli/run.hpp"
#include "binsys/factorization.hpp"
#include "fixtures.hpp"

using namespace binsys;
using namespace binsys::cli;
namespace golden = binsys::test::golden;
using test::fixture;
using test::fixture_path;

namespace {
  struct Result {
    int         status;
    std::string out;
    std::string err;
  };

  Result call(std::vector<std::string> args, std::string const& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int status = run(args, in, out, err);
    return {status, out.str(), err.str()};
  }

  error_kind parse_kind(std::string const& text) {
    try {
      parse_groupoid(text);
    } catch (BinsysError const& e) {
      return e.kind();
    }
    FAIL("parsed without error:\n" << text);
    return error_kind::internal;
  }

  // Splits derive output on its "---" separators.
  std::vector<std::string> sections(std::string const& text) {
    std::vector<std::string> out(1);
    std::istringstream       is(text);
    for (std::string line; std::getline(is, line);) {
      if (line == "---") {
        out.emplace_back();
      } else {
        out.back() += line + "\n";
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("every fixture round-trips through the serializer", "[cli]") {
  for (auto const& name : test::fixture_names()) {
    auto const g    = fixture(name);
    auto const text = serialize(g);
    auto const back = parse_groupoid(text);
    CHECK(back == g);
    CHECK(back.labels() == g.labels());
    CHECK(back.zero() == g.zero());
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("serialized form", "[cli]") {
  CHECK(serialize(fixture("example-2.9"))
        == "elements: 0 1 a b\nzero: 0\ntable:\n"
           "0 0 a a\n1 0 a a\na a 0 0\nb a 1 0\n");
  CHECK(serialize(right_zero(2)) == "elements: 0 1\ntable:\n0 1\n0 1\n");
  CHECK_FALSE(parse_groupoid(serialize(right_zero(2))).has_labels());
}

TEST_CASE("parse errors", "[cli]") {
  CHECK(parse_kind("elements: a b\ntable:\na c\nb b\n")
        == error_kind::parse_error);
  CHECK(parse_kind("elements: a b\n") == error_kind::parse_error);
  CHECK(parse_kind("table:\na\n") == error_kind::parse_error);
  CHECK(parse_kind("elements: a b\ntable:\na b\n") == error_kind::bad_shape);
  CHECK(parse_kind("elements: a b\ntable:\na b b\nb b\n")
        == error_kind::bad_shape);
  CHECK(parse_kind("elements: a b\ntable:\na b\nb b\na a\n")
        == error_kind::parse_error);
  CHECK(parse_kind("elements: a a\ntable:\na a\na a\n")
        == error_kind::bad_labels);
  CHECK(parse_kind("elements: a b\nzero: c\ntable:\na a\nb b\n")
        == error_kind::bad_zero);
  CHECK(parse_kind("elements: a b\nweird\ntable:\na a\nb b\n")
        == error_kind::parse_error);
  CHECK(parse_groupoid("# c\n\nelements: a b\n  # c\ntable:\n a  a \nb b\n")
        == left_zero(2));
}

TEST_CASE("DOT", "[cli]") {
  auto const g     = fixture("example-5.10");
  auto const graph = to_graph(g);
  auto const dot   = to_dot(graph, display_labels(g));
  CHECK(dot == "graph {\n  a;\n  b;\n  c;\n  d;\n  a -- b;\n  b -- c;\n"
               "  b -- d;\n}\n");
  auto const back = parse_dot(dot);
  CHECK(back.graph == graph);
  CHECK(back.labels == display_labels(g));

  auto chained = parse_dot(
      "strict graph G { // comment\n node [shape=circle];\n"
      " \"x y\" -- b -- c [color=red]; rankdir=LR; }");
  CHECK(chained.labels == std::vector<std::string>{"x y", "b", "c"});
  CHECK(chained.graph.edges() == std::set<Edge>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(parse_dot("digraph { a -> b; }"), BinsysError);
  CHECK_THROWS_AS(parse_dot("graph { a -> b; }"), BinsysError);
  CHECK_THROWS_AS(parse_dot("graph { a -- b; "), BinsysError);
  CHECK_THROWS_AS(parse_dot("graph { a -- a; }"), BinsysError);

  auto const arcs = to_dot(to_digraph(fixture("example-4.2")),
                           display_labels(fixture("example-4.2")));
  CHECK(arcs == "digraph {\n  a;\n  b;\n  c;\n  b -> a;\n  c -> a;\n}\n");
}

TEST_CASE("derive", "[cli]") {
  auto r = call({"derive", "--method", "ua", fixture_path("example-3.1.5")});
  REQUIRE(r.status == exit_ok);
  auto s = sections(r.out);
  REQUIRE(s.size() == 3);
  CHECK(parse_groupoid(s[0]) == test::table(golden::d_u));
  CHECK(parse_groupoid(s[1]) == test::table(golden::d_a));
  CHECK(s[2] == "reproduces_target: true\n");

  auto bad = call({"derive", "--method", "UA", fixture_path("example-3.1.2")});
  REQUIRE(bad.status == exit_ok);
  CHECK(sections(bad.out)[2] == "reproduces_target: false\n");

  CHECK(call({"derive", "--method", "xy", fixture_path("example-3.1.2")})
            .status
        == exit_invalid);
}

TEST_CASE("classify and axioms", "[cli]") {
  auto r = call({"classify", fixture_path("example-3.2.6")});
  REQUIRE(r.status == exit_ok);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["au_holds"] == true);
  CHECK(j["ua_holds"] == false);
  CHECK(j["semi_neutral"].is_null());
  CHECK(r.out.find("\"signature_prime\"") < r.out.find("\"ua_holds\""));

  auto a = call({"axioms", fixture_path("example-2.9")});
  REQUIRE(a.status == exit_ok);
  auto ja = nlohmann::json::parse(a.out);
  CHECK(ja["axioms"]["I"] == true);
  CHECK(ja["axioms"]["K"] == false);
  auto classes = ja["classes"].get<std::vector<std::string>>();
  CHECK(std::find(classes.begin(), classes.end(), "BCI-algebra")
        != classes.end());
  CHECK(std::find(classes.begin(), classes.end(), "BCK-algebra")
        == classes.end());
  CHECK(ja["assumptions"].is_array());

  auto nz = call({"axioms", fixture_path("example-2.3")});
  CHECK(nz.status == exit_precondition);
  CHECK(nz.err.find("MissingZero") != std::string::npos);
}

TEST_CASE("product and inverse", "[cli]") {
  auto r = call({"product", fixture_path("example-2.3"),
                 fixture_path("example-2.3")});
  REQUIRE(r.status == exit_ok);
  CHECK(parse_groupoid(r.out) == left_zero(3));

  CHECK(call({"product", fixture_path("example-2.3"),
              fixture_path("example-2.9")})
            .status
        == exit_precondition);
  CHECK(call({"product", "/nonexistent.gpd", fixture_path("example-2.3")})
            .status
        == exit_invalid);

  auto stdin_product = call({"product", "-", fixture_path("example-2.3")},
                            serialize(left_zero(3)));
  CHECK(parse_groupoid(stdin_product.out) == fixture("example-2.3"));

  auto inv = call({"inverse", fixture_path("example-2.3")});
  CHECK(parse_groupoid(inv.out) == fixture("example-2.3"));
  auto none = call({"inverse", "-"}, serialize(constant(2, 0)));
  CHECK(none.status == exit_ok);
  CHECK(none.out == "none\n");
  CHECK(call({"inverse", fixture_path("example-2.9")}).status
        == exit_precondition);
}

TEST_CASE("graph commands", "[cli]") {
  auto to = call({"graph", "to-dot", fixture_path("example-5.10")});
  REQUIRE(to.status == exit_ok);
  CHECK(to.err.empty());
  auto from = call({"graph", "from-dot", "-"}, to.out);
  REQUIRE(from.status == exit_ok);
  CHECK(parse_groupoid(from.out) == fixture("example-5.10"));
  CHECK(parse_groupoid(from.out).labels() == fixture("example-5.10").labels());

  auto warned = call({"graph", "to-dot", fixture_path("example-2.9")});
  CHECK(warned.status == exit_ok);
  CHECK(warned.err.find("warning") != std::string::npos);

  CHECK(call({"graph", "to-digraph", fixture_path("example-2.9")}).status
        == exit_precondition);
  CHECK(call({"graph", "to-digraph", fixture_path("example-4.2")}).out
        == "digraph {\n  a;\n  b;\n  c;\n  b -> a;\n  c -> a;\n}\n");
  CHECK(call({"graph", "sideways", fixture_path("example-4.2")}).status
        == exit_invalid);
}

TEST_CASE("enumerate and verify", "[cli]") {
  auto c = call({"enumerate", "--order", "2", "--census"});
  REQUIRE(c.status == exit_ok);
  auto jc = nlohmann::json::parse(c.out);
  CHECK(jc["strong"] == 8);
  CHECK(jc["locally_zero"] == 2);
  CHECK(jc["orientation"] == 4);
  CHECK(jc["au_holds"] == 16);

  auto e = call({"enumerate", "--order", "2"});
  REQUIRE(e.status == exit_ok);
  auto tables = sections(e.out);
  REQUIRE(tables.size() == 16);
  CHECK(parse_groupoid(tables[0]) == constant(2, 0));

  CHECK(call({"enumerate", "--order", "4"}).status == exit_precondition);

  auto v = call({"verify", "--order", "1"});
  REQUIRE(v.status == exit_ok);
  auto jv = nlohmann::json::parse(v.out);
  CHECK(jv["schema"] == 1);
  CHECK(jv["all_passed"] == true);

  auto s = call({"verify", "--order", "5", "--sample", "50", "--seed", "3",
                 "--only", "Thm-3.2.3", "--only", "Thm-4.1.2"});
  REQUIRE(s.status == exit_ok);
  auto js = nlohmann::json::parse(s.out);
  CHECK(js["claims"].size() == 2);
  CHECK(js["claims"][0]["mode"] == "sampled");
  CHECK(js["claims"][0]["checked"] == 50);

  CHECK(call({"verify", "--order", "4"}).status == exit_precondition);
  CHECK(call({"verify", "--order", "2", "--seed", "3"}).status
        == exit_invalid);
  CHECK(call({"verify", "--order", "2", "--only", "nope"}).status
        == exit_invalid);
}

TEST_CASE("usage", "[cli]") {
  CHECK(call({}).status == exit_invalid);
  CHECK(call({"frobnicate"}).status == exit_invalid);
  auto help = call({"--help"});
  CHECK(help.status == exit_ok);
  CHECK(help.out.find("derive") != std::string::npos);

  ::setenv("BINSYS_THREADS", "many", 1);
  CHECK(call({"enumerate", "--order", "1", "--census"}).status
        == exit_invalid);
  ::setenv("BINSYS_THREADS", "2", 1);
  CHECK(call({"enumerate", "--order", "2", "--census"}).status == exit_ok);
  ::unsetenv("BINSYS_THREADS");
}
