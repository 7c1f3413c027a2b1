#include <string>   // for to_string
#include <utility>  // for move
#include <vector>   // for vector

#include "binsys/bin_semigroup.hpp"
#include "binsys/factorization.hpp"

namespace binsys {

  namespace {
    // Backtracking solver for ℓ ⋄ r = g over the free cells of ℓ and r.
    //
    // The cells of ℓ are grouped into units: each diagonal cell on its own
    // and each off-diagonal pair {(x, y), (y, x)}, since (ℓ ⋄ r)(x, y) reads
    // exactly ℓ(x, y) and ℓ(y, x). Choosing a unit pins one or two cells of
    // r; a conflict with a fixed or already pinned cell prunes the branch.
    class Solver {
     public:
      Solver(Groupoid const&            g,
             FactorizationMethod const& m,
             std::size_t                cap,
             UniquenessReport&          report)
          : _g(g),
            _n(g.order()),
            _cap(cap),
            _report(report),
            _derived_left(report.derived_pair.left),
            _derived_right(report.derived_pair.right) {
        auto const id      = left_zero(_n);
        auto const l_image = m.derive_left(id);
        auto const r_image = m.derive_right(id);
        _l_fixed.resize(_n * _n);
        _r_fixed.resize(_n * _n);
        _l.resize(_n * _n);
        _r.resize(_n * _n);
        _r_pins.assign(_n * _n, 0);
        for (element_type x = 0; x < _n; ++x) {
          for (element_type y = 0; y < _n; ++y) {
            auto const c = x * _n + y;
            _l_fixed[c]  = m.left().fixed(_n, x, y);
            _r_fixed[c]  = m.right().fixed(_n, x, y);
            if (_l_fixed[c]) {
              _l[c] = l_image(x, y);
            }
            if (_r_fixed[c]) {
              _r[c] = r_image(x, y);
            }
          }
        }
        for (element_type x = 0; x < _n; ++x) {
          _units.push_back({x, x});
          for (element_type y = x + 1; y < _n; ++y) {
            _units.push_back({x, y});
          }
        }
      }

      void run() {
        unit(0);
      }

     private:
      struct Unit {
        element_type x;
        element_type y;
      };

      bool stop() const noexcept {
        return _report.truncated;
      }

      // Pins r(a, b) = v; false on conflict (nothing pinned then).
      bool pin(element_type a, element_type b, element_type v) {
        auto const c = a * _n + b;
        if (_r_fixed[c]) {
          return _r[c] == v;
        }
        if (_r_pins[c] > 0) {
          if (_r[c] != v) {
            return false;
          }
        } else {
          _r[c] = v;
        }
        ++_r_pins[c];
        return true;
      }

      void unpin(element_type a, element_type b) {
        auto const c = a * _n + b;
        if (!_r_fixed[c]) {
          --_r_pins[c];
        }
      }

      void unit(std::size_t k) {
        if (stop()) {
          return;
        }
        if (k == _units.size()) {
          complete();
          return;
        }
        auto const [x, y] = _units[k];
        auto const cxy    = x * _n + y;
        auto const cyx    = y * _n + x;
        if (x == y) {
          each_value(cxy, [&] {
            auto const a = _l[cxy];
            if (pin(a, a, _g(x, x))) {
              unit(k + 1);
              unpin(a, a);
            }
          });
          return;
        }
        each_value(cxy, [&] {
          each_value(cyx, [&] {
            auto const a = _l[cxy];
            auto const b = _l[cyx];
            if (!pin(a, b, _g(x, y))) {
              return;
            }
            if (pin(b, a, _g(y, x))) {
              unit(k + 1);
              unpin(b, a);
            }
            unpin(a, b);
          });
        });
      }

      // Runs f once per admissible value of ℓ at cell c.
      template <typename F>
      void each_value(std::size_t c, F&& f) {
        if (_l_fixed[c]) {
          f();
          return;
        }
        for (element_type v = 0; v < _n && !stop(); ++v) {
          _l[c] = v;
          f();
        }
      }

      // ℓ is complete; every unpinned free cell of r is unconstrained.
      void complete() {
        std::vector<std::size_t> open;
        for (std::size_t c = 0; c < _n * _n; ++c) {
          if (!_r_fixed[c] && _r_pins[c] == 0) {
            open.push_back(c);
            _r[c] = 0;
          }
        }
        while (true) {
          record();
          if (stop()) {
            return;
          }
          std::size_t i         = open.size();
          bool        exhausted = true;
          while (i > 0) {
            --i;
            if (++_r[open[i]] < _n) {
              exhausted = false;
              break;
            }
            _r[open[i]] = 0;
          }
          if (exhausted) {
            return;
          }
        }
      }

      void record() {
        Groupoid l(_n, _l, _derived_left.labels(), _derived_left.zero());
        Groupoid r(_n, _r, _derived_right.labels(), _derived_right.zero());
        if (l == _derived_left && r == _derived_right) {
          return;
        }
        if (_report.other_solutions.size() == _cap) {
          _report.truncated = true;
          return;
        }
        _report.other_solutions.emplace_back(std::move(l), std::move(r));
      }

      Groupoid const&           _g;
      std::size_t               _n;
      std::size_t               _cap;
      UniquenessReport&         _report;
      Groupoid const&           _derived_left;
      Groupoid const&           _derived_right;
      std::vector<bool>         _l_fixed;
      std::vector<bool>         _r_fixed;
      std::vector<element_type> _l;
      std::vector<element_type> _r;
      std::vector<std::size_t>  _r_pins;
      std::vector<Unit>         _units;
    };
  }  // namespace

  UniquenessReport uniqueness_search(Groupoid const&            g,
                                     FactorizationMethod const& m,
                                     std::size_t max_solutions) {
    if (g.order() > uniqueness_order_limit) {
      throw BinsysError(error_kind::order_too_large,
                        "uniqueness search needs order at most "
                            + std::to_string(uniqueness_order_limit)
                            + ", got " + std::to_string(g.order()));
    }
    UniquenessReport report{factor(g, m), {}, false};
    Solver(g, m, max_solutions, report).run();
    return report;
  }

}  // namespace binsys
