#ifndef BINSYS_TESTS_FIXTURES_HPP_
#define BINSYS_TESTS_FIXTURES_HPP_

// Golden tables. Targets are read from data/fixtures; the expected factor
// and product tables are written here as element indices in the order of
// each fixture's `elements:` line.

#include <fstream>   // for ifstream
#include <sstream>   // for stringstream
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "binsys/cli/formats.hpp"
#include "binsys/groupoid.hpp"

namespace binsys::test {

  inline std::string fixture_path(std::string const& name) {
    return std::string(BINSYS_FIXTURE_DIR) + "/" + name + ".gpd";
  }

  inline Groupoid fixture(std::string const& name) {
    std::ifstream     file(fixture_path(name));
    std::stringstream text;
    text << file.rdbuf();
    return cli::parse_groupoid(text.str());
  }

  inline std::vector<std::string> const& fixture_names() {
    static std::vector<std::string> const names
        = {"example-2.3",   "example-2.9",   "example-2.10", "example-3.1.2",
           "example-3.1.5", "example-3.2.6", "example-3.2.9", "example-3.4",
           "example-4.1.4", "example-4.2",   "example-4.3",  "example-4.3.2",
           "example-4.6",   "example-5.7",   "example-5.8",  "example-5.10"};
    return names;
  }

  using Rows = std::vector<std::vector<element_type>>;

  inline Groupoid table(Rows const& rows) {
    return make_groupoid(rows.size(), rows);
  }

  namespace golden {
    // BCI-algebra on {0, 1, a, b}: its signature and similar factors.
    inline Rows const bci_u
        = {{0, 0, 2, 2}, {1, 1, 2, 2}, {2, 2, 2, 0}, {3, 2, 1, 3}};
    inline Rows const bci_a
        = {{0, 0, 0, 0}, {1, 0, 1, 1}, {2, 2, 0, 2}, {3, 3, 3, 0}};

    // Non-strong table on Z5: U, A and U ⋄ A (the ∇ table).
    inline Rows const z5_u = {{0, 2, 2, 1, 1},
                              {1, 1, 3, 2, 3},
                              {3, 3, 2, 3, 0},
                              {1, 0, 1, 3, 2},
                              {1, 1, 2, 4, 4}};
    inline Rows const z5_a = {{3, 0, 0, 0, 0},
                              {1, 3, 1, 1, 1},
                              {2, 2, 0, 2, 2},
                              {3, 3, 3, 1, 3},
                              {4, 4, 4, 4, 2}};
    inline Rows const z5_nabla = {{3, 2, 2, 3, 3},
                                  {1, 3, 1, 2, 3},
                                  {3, 1, 0, 3, 0},
                                  {3, 0, 1, 1, 2},
                                  {3, 1, 2, 4, 2}};

    // Strong d-algebra on Z5.
    inline Rows const d_u = {{0, 0, 0, 0, 0},
                             {1, 1, 1, 0, 1},
                             {2, 2, 2, 3, 0},
                             {3, 3, 2, 3, 3},
                             {4, 4, 1, 1, 4}};
    inline Rows const d_a = {{0, 0, 0, 0, 0},
                             {1, 0, 1, 1, 1},
                             {2, 2, 0, 2, 2},
                             {3, 3, 3, 0, 3},
                             {4, 4, 4, 4, 0}};

    // Z3 under addition.
    inline Rows const z3_a     = {{0, 0, 0}, {1, 2, 1}, {2, 2, 1}};
    inline Rows const z3_u     = {{0, 1, 2}, {1, 1, 0}, {2, 0, 2}};
    inline Rows const z3_nabla = {{0, 2, 1}, {2, 2, 0}, {1, 0, 1}};

    // Order 4 on {1, 2, 3, 4}.
    inline Rows const four_o
        = {{0, 0, 0, 3}, {1, 1, 2, 1}, {2, 1, 2, 2}, {0, 3, 3, 3}};
    inline Rows const four_j
        = {{0, 0, 2, 3}, {1, 1, 1, 1}, {0, 2, 2, 3}, {0, 3, 2, 3}};

    // Order 6 locally-zero table.
    inline Rows const six_o = {{0, 0, 0, 0, 0, 5},
                               {1, 1, 1, 1, 4, 1},
                               {2, 2, 2, 3, 2, 2},
                               {3, 3, 2, 3, 3, 3},
                               {4, 1, 4, 4, 4, 4},
                               {0, 5, 5, 5, 5, 5}};
    inline Rows const six_j = {{0, 1, 0, 0, 4, 5},
                               {0, 1, 2, 3, 4, 5},
                               {2, 1, 2, 2, 4, 2},
                               {3, 1, 3, 3, 3, 3},
                               {0, 1, 2, 4, 4, 4},
                               {0, 1, 5, 5, 5, 5}};
    using EdgeList = std::vector<std::pair<element_type, element_type>>;
    inline EdgeList const six_graph
        = {{0, 2}, {0, 3}, {0, 5}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    inline EdgeList const six_o_graph
        = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
           {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};
    inline EdgeList const six_j_graph
        = {{0, 2}, {0, 3}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}};

    // Klein four-group on {e, a, b, c}: its orient factor.
    inline Rows const klein_o
        = {{0, 0, 0, 3}, {1, 1, 2, 1}, {2, 1, 2, 2}, {0, 3, 3, 3}};

    // Strong BCK-algebra of order 3.
    inline Rows const bck_o = {{0, 0, 2}, {1, 1, 1}, {0, 2, 2}};
    inline Rows const bck_j = {{0, 0, 2}, {1, 0, 1}, {0, 2, 0}};

    // Strong Q-algebra of order 3.
    inline Rows const q_u = {{0, 2, 1}, {1, 1, 2}, {2, 1, 2}};
    inline Rows const q_a = {{0, 0, 0}, {1, 0, 1}, {2, 2, 0}};

    // Graph groupoid on {a, b, c, d} and its factor graphs.
    inline EdgeList const abcd_graph   = {{0, 1}, {1, 2}, {1, 3}};
    inline EdgeList const abcd_o_graph = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
    inline EdgeList const abcd_j_graph = {{0, 1}, {0, 3}, {1, 3}};
  }  // namespace golden

}  // namespace binsys::test

#endif  // BINSYS_TESTS_FIXTURES_HPP_
