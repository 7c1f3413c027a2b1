#ifndef BINSYS_TESTS_ORACLE_HPP_
#define BINSYS_TESTS_ORACLE_HPP_

// Deliberately naive reference implementations, written from the defining
// formulas on nested vectors. Nothing here calls into the library except to
// convert to and from Groupoid.

#include <cstddef>  // for size_t
#include <utility>  // for pair
#include <vector>   // for vector

#include "binsys/groupoid.hpp"

namespace binsys::oracle {

  using Table = std::vector<std::vector<unsigned>>;

  inline Table from(Groupoid const& g) {
    Table t(g.order(), std::vector<unsigned>(g.order()));
    for (unsigned x = 0; x < g.order(); ++x) {
      for (unsigned y = 0; y < g.order(); ++y) {
        t[x][y] = g(x, y);
      }
    }
    return t;
  }

  inline Groupoid to(Table const& t) {
    std::vector<std::vector<element_type>> rows(t.begin(), t.end());
    return make_groupoid(t.size(), rows);
  }

  // All n^(n^2) tables, counting in base n with the last cell fastest.
  inline std::vector<Table> all_tables(std::size_t n) {
    std::vector<Table> out;
    std::vector<unsigned> digits(n * n, 0);
    while (true) {
      Table t(n, std::vector<unsigned>(n));
      for (std::size_t c = 0; c < n * n; ++c) {
        t[c / n][c % n] = digits[c];
      }
      out.push_back(t);
      std::size_t c = n * n;
      while (c > 0 && ++digits[c - 1] == n) {
        digits[--c] = 0;
      }
      if (c == 0) {
        return out;
      }
    }
  }

  inline Table left_zero(std::size_t n) {
    Table t(n, std::vector<unsigned>(n));
    for (unsigned x = 0; x < n; ++x) {
      for (unsigned y = 0; y < n; ++y) {
        t[x][y] = x;
      }
    }
    return t;
  }

  // (g ⋄ h)(x, y) = h(g(x, y), g(y, x))
  inline Table product(Table const& g, Table const& h) {
    auto n = g.size();
    Table out(n, std::vector<unsigned>(n));
    for (unsigned x = 0; x < n; ++x) {
      for (unsigned y = 0; y < n; ++y) {
        out[x][y] = h[g[x][y]][g[y][x]];
      }
    }
    return out;
  }

  inline bool strong(Table const& g) {
    for (unsigned x = 0; x < g.size(); ++x) {
      for (unsigned y = 0; y < g.size(); ++y) {
        if (x != y && g[x][y] == g[y][x]) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool idempotent(Table const& g) {
    for (unsigned x = 0; x < g.size(); ++x) {
      if (g[x][x] != x) {
        return false;
      }
    }
    return true;
  }

  // Idempotent and every two-element subset is a left-zero or a right-zero
  // subsemigroup.
  inline bool locally_zero(Table const& g) {
    if (!idempotent(g)) {
      return false;
    }
    for (unsigned x = 0; x < g.size(); ++x) {
      for (unsigned y = x + 1; y < g.size(); ++y) {
        bool lz = g[x][y] == x && g[y][x] == y;
        bool rz = g[x][y] == y && g[y][x] == x;
        if (!lz && !rz) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool orientation(Table const& g) {
    for (unsigned x = 0; x < g.size(); ++x) {
      for (unsigned y = 0; y < g.size(); ++y) {
        if (g[x][y] != x && g[x][y] != y) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool twisted_orientation(Table const& g) {
    for (unsigned x = 0; x < g.size(); ++x) {
      for (unsigned y = 0; y < g.size(); ++y) {
        if (g[x][y] == x && g[y][x] != x) {
          return false;
        }
      }
    }
    return true;
  }

  // U: identity diagonal, g elsewhere.
  inline Table signature(Table g) {
    for (unsigned x = 0; x < g.size(); ++x) {
      g[x][x] = x;
    }
    return g;
  }

  // A: g on the diagonal, x•y = x elsewhere.
  inline Table similar(Table const& g) {
    auto t = left_zero(g.size());
    for (unsigned x = 0; x < g.size(); ++x) {
      t[x][x] = g[x][x];
    }
    return t;
  }

  // J: the anti-diagonal transposed.
  inline Table skew(Table g) {
    auto const n    = g.size();
    auto       copy = g;
    for (unsigned i = 0; i < n; ++i) {
      g[i][n - 1 - i] = copy[n - 1 - i][i];
    }
    return g;
  }

  inline Table orient(std::size_t n) {
    return skew(left_zero(n));
  }

  // Every table that agrees with left-zero on the cells where pinned(x, y)
  // holds; the remaining cells range over all values.
  template <typename CellSet>
  std::vector<Table> shaped_tables(std::size_t n, CellSet pinned) {
    std::vector<std::pair<unsigned, unsigned>> free;
    for (unsigned x = 0; x < n; ++x) {
      for (unsigned y = 0; y < n; ++y) {
        if (!pinned(x, y)) {
          free.emplace_back(x, y);
        }
      }
    }
    std::vector<Table>    out;
    std::vector<unsigned> digits(free.size(), 0);
    while (true) {
      auto t = left_zero(n);
      for (std::size_t i = 0; i < free.size(); ++i) {
        t[free[i].first][free[i].second] = digits[i];
      }
      out.push_back(t);
      std::size_t c = digits.size();
      while (c > 0 && ++digits[c - 1] == n) {
        digits[--c] = 0;
      }
      if (c == 0) {
        return out;
      }
    }
  }

  // Number of pairs (l, r) with l ⋄ r = g, where l agrees with left-zero on
  // the cells in from_id_left and r agrees with left-zero everywhere else.
  template <typename CellSet>
  std::size_t count_psi_solutions(Table const& g, CellSet from_id_left) {
    auto const n     = g.size();
    auto const lefts = shaped_tables(n, from_id_left);
    auto const rights
        = shaped_tables(n, [&](unsigned x, unsigned y) {
            return !from_id_left(x, y);
          });
    std::size_t count = 0;
    for (auto const& l : lefts) {
      for (auto const& r : rights) {
        if (product(l, r) == g) {
          ++count;
        }
      }
    }
    return count;
  }

  // Number of r with orient(n) ⋄ r = g (identity_on_left) or r ⋄ orient(n)
  // = g, over all tables r.
  inline std::size_t count_tau_solutions(Table const& g,
                                         bool         identity_on_left) {
    auto const o     = orient(g.size());
    std::size_t count = 0;
    for (auto const& r : all_tables(g.size())) {
      auto const p = identity_on_left ? product(o, r) : product(r, o);
      count += p == g;
    }
    return count;
  }

  // Members of the ⋄-center by brute force over every table of order n.
  inline bool central(Table const& g) {
    for (auto const& h : all_tables(g.size())) {
      if (product(g, h) != product(h, g)) {
        return false;
      }
    }
    return true;
  }

}  // namespace binsys::oracle

#endif  // BINSYS_TESTS_ORACLE_HPP_
