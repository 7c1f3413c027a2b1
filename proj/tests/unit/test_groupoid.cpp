#include <catch_amalgamated.hpp>

#include "binsys/groupoid.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace binsys;

TEST_CASE("construction validates closure, labels and zero", "[groupoid]") {
  auto lz = make_groupoid(2, {{0, 0}, {1, 1}});
  CHECK(lz == left_zero(2));

  try {
    make_groupoid(2, {{0, 2}, {1, 1}});
    FAIL("expected a closure violation");
  } catch (BinsysError const& e) {
    CHECK(e.kind() == error_kind::closure_violation);
  }

  auto expect_kind = [](auto&& f, error_kind k) {
    try {
      f();
      FAIL("no exception");
    } catch (BinsysError const& e) {
      CHECK(e.kind() == k);
    }
  };
  expect_kind([] { Groupoid(0, {}); }, error_kind::bad_shape);
  expect_kind([] { Groupoid(2, {0, 0, 1}); }, error_kind::bad_shape);
  expect_kind([] { Groupoid(2, {0, 0, 1, 1}, {"a", "a"}); },
              error_kind::bad_labels);
  expect_kind([] { Groupoid(2, {0, 0, 1, 1}, {"a"}); },
              error_kind::bad_labels);
  expect_kind([] { Groupoid(2, {0, 0, 1, 1}, {}, 2); }, error_kind::bad_zero);
  expect_kind([] { (void) left_zero(2).at(0, 2); },
              error_kind::closure_violation);
}

TEST_CASE("the labelled BCI table keeps its labels and zero", "[groupoid]") {
  auto g = test::fixture("example-2.9");
  REQUIRE(g.order() == 4);
  CHECK(g.labels() == std::vector<std::string>{"0", "1", "a", "b"});
  REQUIRE(g.zero());
  CHECK(g.label(*g.zero()) == "0");
  CHECK(g(3, 0) == 3);
  CHECK(g.label(g(3, 2)) == "1");
  CHECK(g.find_label("a") == element_type{2});
  CHECK_FALSE(g.find_label("z"));
}

TEST_CASE("equality compares tables only", "[groupoid]") {
  auto a = left_zero(3);
  auto b = a.with_labels({"x", "y", "z"}).with_zero(1);
  CHECK(a == b);
  CHECK(b.label(1) == "y");
  CHECK(a.label(1) == "1");
  CHECK(left_zero(2) != left_zero(3));
  CHECK(left_zero(2) < right_zero(2));
  CHECK_FALSE(right_zero(2) < left_zero(2));
  CHECK(left_zero(2) < left_zero(3));
}

TEST_CASE("zero semigroups", "[groupoid]") {
  CHECK(zero_semigroup(zero_kind::left, 2) == test::table({{0, 0}, {1, 1}}));
  CHECK(zero_semigroup(zero_kind::right, 2) == test::table({{0, 1}, {0, 1}}));
  CHECK(zero_semigroup(zero_kind::left, 3)
        == test::table({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}));
  CHECK(constant(2, 1) == test::table({{1, 1}, {1, 1}}));
}

TEST_CASE("diagonal profile", "[groupoid]") {
  using V = std::vector<element_type>;
  auto p  = diagonal_profile(test::fixture("example-4.3"));
  CHECK(p.main == V{0, 1, 2, 3});
  CHECK(p.anti == V{3, 1, 2, 0});
  CHECK(p.reverse == V{3, 2, 1, 0});
  CHECK(p.skew == V{0, 2, 1, 3});

  auto lz = diagonal_profile(left_zero(2));
  CHECK(lz.main == V{0, 1});
  CHECK(lz.anti == V{0, 1});
  CHECK(lz.reverse == V{1, 0});
  CHECK(lz.skew == V{1, 0});

  auto c = diagonal_profile(constant(2, 0));
  CHECK(c.main == V{0, 0});
  CHECK(c.anti == V{0, 0});
  CHECK(c.reverse == V{0, 0});
  CHECK(c.skew == V{0, 0});
}

TEST_CASE("predicates on the golden tables", "[groupoid]") {
  CHECK(check_predicate(right_zero(3), predicate::strong));
  CHECK(check_predicate(test::fixture("example-2.3"), predicate::locally_zero));
  CHECK(check_predicate(test::fixture("example-4.2"),
                        predicate::twisted_orientation));
  CHECK_FALSE(check_predicate(test::fixture("example-2.9"), predicate::strong));
  CHECK(check_predicate(test::fixture("example-5.7"), predicate::semi_neutral));
  CHECK(is_bi_diagonal(test::fixture("example-4.6")));
  CHECK(is_abelian_group(test::fixture("example-3.2.6")));
  CHECK(is_abelian_group(test::fixture("example-4.6")));
  CHECK_FALSE(is_abelian_group(test::fixture("example-2.9")));

  CHECK_THROWS_AS(check_predicate(left_zero(2), predicate::semi_neutral),
                  BinsysError);
}

TEST_CASE("predicate names parse back", "[groupoid]") {
  for (auto p : all_predicates) {
    CHECK(parse_predicate(predicate_name(p)) == p);
  }
  CHECK(parse_predicate("OP") == predicate::orientation);
  CHECK(parse_predicate("TOP") == predicate::twisted_orientation);
  CHECK_FALSE(parse_predicate("nonsense"));
}

TEST_CASE("predicates agree with the oracle at orders 1 to 3",
          "[groupoid][oracle]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& t : oracle::all_tables(n)) {
      auto const g = oracle::to(t);
      REQUIRE(is_idempotent(g) == oracle::idempotent(t));
      REQUIRE(is_strong(g) == oracle::strong(t));
      REQUIRE(is_locally_zero(g) == oracle::locally_zero(t));
      REQUIRE(is_orientation(g) == oracle::orientation(t));
      REQUIRE(is_twisted_orientation(g) == oracle::twisted_orientation(t));
    }
  }
}

TEST_CASE("predicate implications", "[groupoid][property]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& t : oracle::all_tables(n)) {
      auto const g = oracle::to(t);
      if (is_locally_zero(g) || is_orientation(g)) {
        REQUIRE(is_idempotent(g));
      }
      bool symmetric_anti = true;
      for (element_type i = 0; i < n; ++i) {
        auto j = partner(n, i);
        symmetric_anti = symmetric_anti && g(i, j) == g(j, i);
      }
      REQUIRE(is_bi_diagonal(g) == symmetric_anti);
    }
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(is_strong(right_zero(n)));
  }
}

TEST_CASE("order 2 counts", "[groupoid][oracle]") {
  std::size_t strong = 0, lz = 0, op = 0;
  for (auto const& t : oracle::all_tables(2)) {
    auto g = oracle::to(t);
    strong += is_strong(g);
    lz += is_locally_zero(g);
    op += is_orientation(g);
  }
  CHECK(strong == 8);
  CHECK(lz == 2);
  CHECK(op == 4);
}
