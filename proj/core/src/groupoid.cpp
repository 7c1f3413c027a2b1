#include "binsys/groupoid.hpp"

#include <algorithm>  // for lexicographical_compare
#include <set>        // for set
#include <string>     // for to_string
#include <utility>    // for move

namespace binsys {

  char const* error_kind_name(error_kind kind) noexcept {
    switch (kind) {
      case error_kind::closure_violation:
        return "ClosureViolation";
      case error_kind::bad_labels:
        return "BadLabels";
      case error_kind::bad_zero:
        return "BadZero";
      case error_kind::bad_shape:
        return "BadShape";
      case error_kind::parse_error:
        return "ParseError";
      case error_kind::order_mismatch:
        return "OrderMismatch";
      case error_kind::order_too_large:
        return "OrderTooLarge";
      case error_kind::missing_zero:
        return "MissingZero";
      case error_kind::not_orientation:
        return "NotOP";
      case error_kind::internal:
        return "Internal";
    }
    return "Unknown";
  }

  bool is_precondition(error_kind kind) noexcept {
    return kind == error_kind::order_mismatch
           || kind == error_kind::order_too_large
           || kind == error_kind::missing_zero
           || kind == error_kind::not_orientation;
  }

  ////////////////////////////////////////////////////////////////////////
  // Groupoid
  ////////////////////////////////////////////////////////////////////////

  Groupoid::Groupoid(std::size_t                 order,
                     std::vector<element_type>   cells,
                     std::vector<std::string>    labels,
                     std::optional<element_type> zero)
      : _order(order),
        _cells(std::move(cells)),
        _labels(std::move(labels)),
        _zero(zero) {
    if (_order == 0) {
      throw BinsysError(error_kind::bad_shape,
                        "a groupoid must have at least one element");
    }
    if (_cells.size() != _order * _order) {
      throw BinsysError(error_kind::bad_shape,
                        "expected " + std::to_string(_order * _order)
                            + " table entries, found "
                            + std::to_string(_cells.size()));
    }
    for (std::size_t i = 0; i < _cells.size(); ++i) {
      if (_cells[i] >= _order) {
        throw BinsysError(error_kind::closure_violation,
                          "entry " + std::to_string(_cells[i]) + " at ("
                              + std::to_string(i / _order) + ", "
                              + std::to_string(i % _order)
                              + ") is not an element of a groupoid of order "
                              + std::to_string(_order));
      }
    }
    if (!_labels.empty()) {
      if (_labels.size() != _order) {
        throw BinsysError(error_kind::bad_labels,
                          "expected " + std::to_string(_order)
                              + " labels, found "
                              + std::to_string(_labels.size()));
      }
      std::set<std::string> seen;
      for (auto const& lbl : _labels) {
        if (lbl.empty()) {
          throw BinsysError(error_kind::bad_labels, "empty label");
        }
        if (!seen.insert(lbl).second) {
          throw BinsysError(error_kind::bad_labels,
                            "duplicate label \"" + lbl + "\"");
        }
      }
    }
    if (_zero && *_zero >= _order) {
      throw BinsysError(error_kind::bad_zero,
                        "zero " + std::to_string(*_zero)
                            + " is not an element of a groupoid of order "
                            + std::to_string(_order));
    }
  }

  element_type Groupoid::at(element_type x, element_type y) const {
    if (x >= _order || y >= _order) {
      throw BinsysError(error_kind::closure_violation,
                        "index out of range in Groupoid::at");
    }
    return (*this)(x, y);
  }

  std::vector<std::vector<element_type>> Groupoid::rows() const {
    std::vector<std::vector<element_type>> out(_order);
    for (std::size_t x = 0; x < _order; ++x) {
      out[x].assign(_cells.begin() + x * _order,
                    _cells.begin() + (x + 1) * _order);
    }
    return out;
  }

  std::string Groupoid::label(element_type x) const {
    return _labels.empty() ? std::to_string(x) : _labels.at(x);
  }

  std::optional<element_type> Groupoid::find_label(std::string_view lbl) const {
    for (element_type x = 0; x < _order; ++x) {
      if (label(x) == lbl) {
        return x;
      }
    }
    return std::nullopt;
  }

  Groupoid Groupoid::with_zero(std::optional<element_type> z) const {
    return Groupoid(_order, _cells, _labels, z);
  }

  Groupoid Groupoid::with_labels(std::vector<std::string> labels) const {
    return Groupoid(_order, _cells, std::move(labels), _zero);
  }

  Groupoid Groupoid::with_metadata_of(Groupoid const& other) const {
    if (other._order != _order) {
      throw BinsysError(error_kind::order_mismatch,
                        "cannot copy metadata between groupoids of orders "
                            + std::to_string(_order) + " and "
                            + std::to_string(other._order));
    }
    return Groupoid(_order, _cells, other._labels, other._zero);
  }

  bool operator<(Groupoid const& a, Groupoid const& b) noexcept {
    if (a._order != b._order) {
      return a._order < b._order;
    }
    return std::lexicographical_compare(
        a._cells.begin(), a._cells.end(), b._cells.begin(), b._cells.end());
  }

  Groupoid make_groupoid(std::size_t                                   order,
                         std::vector<std::vector<element_type>> const& table,
                         std::vector<std::string>                      labels,
                         std::optional<element_type>                   zero) {
    if (table.size() != order) {
      throw BinsysError(error_kind::bad_shape,
                        "expected " + std::to_string(order) + " rows, found "
                            + std::to_string(table.size()));
    }
    std::vector<element_type> cells;
    cells.reserve(order * order);
    for (auto const& row : table) {
      if (row.size() != order) {
        throw BinsysError(error_kind::bad_shape,
                          "expected rows of length " + std::to_string(order)
                              + ", found one of length "
                              + std::to_string(row.size()));
      }
      cells.insert(cells.end(), row.begin(), row.end());
    }
    return Groupoid(order, std::move(cells), std::move(labels), zero);
  }

  Groupoid make_groupoid(
      std::initializer_list<std::initializer_list<element_type>> rows) {
    std::vector<std::vector<element_type>> table;
    for (auto const& row : rows) {
      table.emplace_back(row);
    }
    return make_groupoid(table.size(), table);
  }

  Groupoid zero_semigroup(zero_kind kind, std::size_t order) {
    std::vector<element_type> cells(order * order);
    for (std::size_t x = 0; x < order; ++x) {
      for (std::size_t y = 0; y < order; ++y) {
        cells[x * order + y]
            = static_cast<element_type>(kind == zero_kind::left ? x : y);
      }
    }
    return Groupoid(order, std::move(cells));
  }

  Groupoid constant(std::size_t order, element_type value) {
    return Groupoid(order, std::vector<element_type>(order * order, value));
  }

  DiagonalProfile diagonal_profile(Groupoid const& g) {
    auto const      n = g.order();
    DiagonalProfile p;
    p.main.resize(n);
    p.anti.resize(n);
    p.reverse.resize(n);
    p.skew.resize(n);
    for (element_type i = 0; i < n; ++i) {
      auto const j = partner(n, i);
      p.main[i]    = g(i, i);
      p.anti[i]    = g(i, j);
      p.reverse[i] = g(j, j);
      p.skew[i]    = g(j, i);
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates
  ////////////////////////////////////////////////////////////////////////

  char const* predicate_name(predicate p) noexcept {
    switch (p) {
      case predicate::idempotent:
        return "idempotent";
      case predicate::strong:
        return "strong";
      case predicate::abelian:
        return "abelian";
      case predicate::orientation:
        return "orientation";
      case predicate::twisted_orientation:
        return "twisted-orientation";
      case predicate::locally_zero:
        return "locally-zero";
      case predicate::bi_diagonal:
        return "bi-diagonal";
      case predicate::semi_neutral:
        return "semi-neutral";
    }
    return "unknown";
  }

  std::optional<predicate> parse_predicate(std::string_view name) {
    for (auto p : all_predicates) {
      if (name == predicate_name(p)) {
        return p;
      }
    }
    if (name == "OP") {
      return predicate::orientation;
    }
    if (name == "TOP") {
      return predicate::twisted_orientation;
    }
    return std::nullopt;
  }

  bool check_predicate(Groupoid const& g, predicate p) {
    switch (p) {
      case predicate::idempotent:
        return is_idempotent(g);
      case predicate::strong:
        return is_strong(g);
      case predicate::abelian:
        return is_commutative(g);
      case predicate::orientation:
        return is_orientation(g);
      case predicate::twisted_orientation:
        return is_twisted_orientation(g);
      case predicate::locally_zero:
        return is_locally_zero(g);
      case predicate::bi_diagonal:
        return is_bi_diagonal(g);
      case predicate::semi_neutral:
        if (!g.zero()) {
          throw BinsysError(error_kind::missing_zero,
                            "semi-neutral requires a distinguished zero");
        }
        return is_semi_neutral(g, *g.zero());
    }
    throw BinsysError(error_kind::internal, "unknown predicate");
  }

  bool is_idempotent(Groupoid const& g) noexcept {
    for (element_type x = 0; x < g.order(); ++x) {
      if (g(x, x) != x) {
        return false;
      }
    }
    return true;
  }

  bool is_strong(Groupoid const& g) noexcept {
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = x + 1; y < n; ++y) {
        if (g(x, y) == g(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_commutative(Groupoid const& g) noexcept {
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = x + 1; y < n; ++y) {
        if (g(x, y) != g(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_orientation(Groupoid const& g) noexcept {
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        auto const v = g(x, y);
        if (v != x && v != y) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_twisted_orientation(Groupoid const& g) noexcept {
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (g(x, y) == x && g(y, x) != x) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_locally_zero(Groupoid const& g) noexcept {
    if (!is_idempotent(g)) {
      return false;
    }
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = x + 1; y < n; ++y) {
        bool const left  = g(x, y) == x && g(y, x) == y;
        bool const right = g(x, y) == y && g(y, x) == x;
        if (!left && !right) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_bi_diagonal(Groupoid const& g) noexcept {
    auto const n = g.order();
    for (element_type i = 0; i < n; ++i) {
      auto const j = partner(n, i);
      if (g(i, j) != g(j, i)) {
        return false;
      }
    }
    return true;
  }

  bool is_semi_neutral(Groupoid const& g, element_type zero) noexcept {
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (g(x, y) != (x == y ? zero : x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_left_zero(Groupoid const& g) noexcept {
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (g(x, y) != x) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_right_zero(Groupoid const& g) noexcept {
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        if (g(x, y) != y) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_associative(Groupoid const& g) noexcept {
    auto const n = g.order();
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        for (element_type z = 0; z < n; ++z) {
          if (g(g(x, y), z) != g(x, g(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool is_abelian_group(Groupoid const& g) noexcept {
    if (!is_commutative(g) || !is_associative(g)) {
      return false;
    }
    auto const                  n = g.order();
    std::optional<element_type> e;
    for (element_type c = 0; c < n && !e; ++c) {
      bool ok = true;
      for (element_type x = 0; x < n && ok; ++x) {
        ok = g(c, x) == x;
      }
      if (ok) {
        e = c;
      }
    }
    if (!e) {
      return false;
    }
    for (element_type x = 0; x < n; ++x) {
      bool has_inverse = false;
      for (element_type y = 0; y < n && !has_inverse; ++y) {
        has_inverse = g(x, y) == *e;
      }
      if (!has_inverse) {
        return false;
      }
    }
    return true;
  }

}  // namespace binsys
