#include "binsys/enumeration.hpp"

#include <limits>  // for numeric_limits
#include <string>  // for to_string
#include <thread>  // for thread

#include "binsys/bin_semigroup.hpp"
#include "binsys/factorization.hpp"
#include "groupoid_access.hpp"
#include "parallel.hpp"

namespace binsys {

  namespace {
    void check_enumerable(std::size_t order) {
      if (order == 0) {
        throw BinsysError(error_kind::bad_shape, "order must be positive");
      }
      if (order > exhaustive_order_limit) {
        throw BinsysError(error_kind::order_too_large,
                          "exhaustive enumeration needs order at most "
                              + std::to_string(exhaustive_order_limit)
                              + ", got " + std::to_string(order));
      }
    }
  }  // namespace

  std::uint64_t number_of_groupoids(std::size_t order) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < order * order; ++i) {
      if (total > std::numeric_limits<std::uint64_t>::max() / order) {
        throw BinsysError(error_kind::order_too_large,
                          "too many groupoids of order "
                              + std::to_string(order) + " to count");
      }
      total *= order;
    }
    return total;
  }

  Groupoid groupoid_at(std::size_t order, std::uint64_t index) {
    if (index >= number_of_groupoids(order)) {
      throw BinsysError(error_kind::bad_shape,
                        "groupoid index " + std::to_string(index)
                            + " out of range for order "
                            + std::to_string(order));
    }
    std::vector<element_type> cells(order * order);
    for (std::size_t c = cells.size(); c > 0; --c) {
      cells[c - 1] = static_cast<element_type>(index % order);
      index /= order;
    }
    return Groupoid(order, std::move(cells));
  }

  std::vector<Groupoid> enumerate(std::size_t order) {
    check_enumerable(order);
    std::vector<Groupoid> out;
    out.reserve(number_of_groupoids(order));
    for_each_groupoid(order, 0, number_of_groupoids(order), [&](auto& g) {
      out.push_back(g);
      return true;
    });
    return out;
  }

  void for_each_groupoid(std::size_t                                 order,
                         std::uint64_t                               first,
                         std::uint64_t                               last,
                         std::function<bool(Groupoid const&)> const& f) {
    if (first >= last) {
      return;
    }
    auto  g     = groupoid_at(order, first);
    auto& cells = detail::GroupoidAccess::cells(g);
    for (std::uint64_t k = first; k < last; ++k) {
      if (!f(g)) {
        return;
      }
      for (std::size_t c = cells.size(); c > 0; --c) {
        if (++cells[c - 1] < order) {
          break;
        }
        cells[c - 1] = 0;
      }
    }
  }

  GroupoidSampler::GroupoidSampler(std::size_t order, std::uint64_t seed)
      : _order(order),
        _rng(seed),
        _cell(0, static_cast<element_type>(order == 0 ? 0 : order - 1)) {
    if (order == 0) {
      throw BinsysError(error_kind::bad_shape, "order must be positive");
    }
  }

  Groupoid GroupoidSampler::next() {
    std::vector<element_type> cells(_order * _order);
    for (auto& c : cells) {
      c = _cell(_rng);
    }
    return Groupoid(_order, std::move(cells));
  }

  std::vector<Groupoid> random_groupoids(std::size_t   order,
                                         std::size_t   count,
                                         std::uint64_t seed) {
    GroupoidSampler       sampler(order, seed);
    std::vector<Groupoid> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(sampler.next());
    }
    return out;
  }

  std::size_t resolve_threads(std::size_t threads) noexcept {
    if (threads != 0) {
      return threads;
    }
    auto const hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }

  CensusReport& CensusReport::operator+=(CensusReport const& o) noexcept {
    total += o.total;
    strong += o.strong;
    idempotent += o.idempotent;
    locally_zero += o.locally_zero;
    orientation += o.orientation;
    twisted_orientation += o.twisted_orientation;
    bi_diagonal += o.bi_diagonal;
    abelian += o.abelian;
    signature_prime += o.signature_prime;
    similar_prime += o.similar_prime;
    ua_holds += o.ua_holds;
    au_holds += o.au_holds;
    oj_holds += o.oj_holds;
    jo_holds += o.jo_holds;
    u_normal += o.u_normal;
    j_normal += o.j_normal;
    u_composite += o.u_composite;
    j_composite += o.j_composite;
    return *this;
  }

  CensusReport census(std::size_t order, std::size_t threads) {
    check_enumerable(order);
    auto shards = detail::run_sharded<CensusReport>(
        number_of_groupoids(order),
        resolve_threads(threads),
        [order](std::size_t, std::uint64_t begin, std::uint64_t end) {
          CensusReport c;
          for_each_groupoid(order, begin, end, [&c](Groupoid const& g) {
            auto const r = classify(g);
            ++c.total;
            c.strong += r.strong;
            c.idempotent += r.idempotent;
            c.locally_zero += r.locally_zero;
            c.orientation += r.orientation;
            c.twisted_orientation += r.twisted_orientation;
            c.bi_diagonal += r.bi_diagonal;
            c.abelian += r.abelian;
            c.signature_prime += r.signature_prime;
            c.similar_prime += r.similar_prime;
            c.ua_holds += r.ua_holds;
            c.au_holds += r.au_holds;
            c.oj_holds += r.oj_holds;
            c.jo_holds += r.jo_holds;
            c.u_normal += r.u_normal;
            c.j_normal += r.j_normal;
            c.u_composite += r.u_composite;
            c.j_composite += r.j_composite;
            return true;
          });
          return c;
        });
    CensusReport out;
    out.order = order;
    for (auto const& s : shards) {
      out += s;
    }
    return out;
  }

  char const* claim_mode_name(claim_mode m) noexcept {
    return m == claim_mode::exhaustive ? "exhaustive" : "sampled";
  }

}  // namespace binsys
