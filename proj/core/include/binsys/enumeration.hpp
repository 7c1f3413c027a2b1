#ifndef BINSYS_ENUMERATION_HPP_
#define BINSYS_ENUMERATION_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <optional>    // for optional
#include <random>      // for mt19937_64
#include <string>      // for string
#include <vector>      // for vector

#include "binsys/groupoid.hpp"

namespace binsys {

  // n^(n^2); throws order_too_large when this does not fit in 64 bits.
  std::uint64_t number_of_groupoids(std::size_t order);

  // The groupoid with the given position in lexicographic order of row-major
  // tables (cell (0, 0) most significant).
  Groupoid groupoid_at(std::size_t order, std::uint64_t index);

  // All n^(n^2) groupoids in lexicographic order; order ≤ 3.
  std::vector<Groupoid> enumerate(std::size_t order);

  // Calls f on the groupoids with indices in [first, last) in order, reusing
  // one table buffer. Stops early when f returns false.
  void for_each_groupoid(std::size_t                           order,
                         std::uint64_t                         first,
                         std::uint64_t                         last,
                         std::function<bool(Groupoid const&)> const& f);

  // Deterministic i.i.d. uniform tables.
  class GroupoidSampler {
   public:
    GroupoidSampler(std::size_t order, std::uint64_t seed);

    Groupoid next();

   private:
    std::size_t                                 _order;
    std::mt19937_64                             _rng;
    std::uniform_int_distribution<element_type> _cell;
  };

  std::vector<Groupoid> random_groupoids(std::size_t   order,
                                         std::size_t   count,
                                         std::uint64_t seed);

  // 0 means one worker per hardware thread.
  std::size_t resolve_threads(std::size_t threads) noexcept;

  struct CensusReport {
    std::size_t   order = 0;
    std::uint64_t total = 0;

    std::uint64_t strong              = 0;
    std::uint64_t idempotent          = 0;
    std::uint64_t locally_zero        = 0;
    std::uint64_t orientation         = 0;
    std::uint64_t twisted_orientation = 0;
    std::uint64_t bi_diagonal         = 0;
    std::uint64_t abelian             = 0;

    std::uint64_t signature_prime = 0;
    std::uint64_t similar_prime   = 0;
    std::uint64_t ua_holds        = 0;
    std::uint64_t au_holds        = 0;
    std::uint64_t oj_holds        = 0;
    std::uint64_t jo_holds        = 0;
    std::uint64_t u_normal        = 0;
    std::uint64_t j_normal        = 0;
    std::uint64_t u_composite     = 0;
    std::uint64_t j_composite     = 0;

    CensusReport& operator+=(CensusReport const& other) noexcept;
    bool          operator==(CensusReport const&) const = default;
  };

  // Exhaustive; order ≤ 3.
  CensusReport census(std::size_t order, std::size_t threads = 0);

  enum class claim_mode { exhaustive, sampled };

  char const* claim_mode_name(claim_mode m) noexcept;

  struct SampleSpec {
    std::size_t   count;
    std::uint64_t seed;
  };

  struct ClaimReport {
    std::string   id;
    std::string   statement;
    std::size_t   order = 0;
    claim_mode    mode  = claim_mode::exhaustive;
    std::uint64_t checked = 0;  // instances satisfying the hypothesis
    std::uint64_t counterexample_count = 0;
    // The first few counterexamples; each is the tuple of groupoids the
    // claim quantifies over.
    std::vector<std::vector<Groupoid>> counterexamples;
    std::string                        notes;

    [[nodiscard]] bool passed() const noexcept {
      return counterexample_count == 0;
    }
  };

  inline constexpr std::size_t stored_counterexamples = 16;

  // Ids of every registered claim, in report order.
  std::vector<std::string> claim_ids();

  // Exhaustive when sample is absent (order ≤ 3); otherwise each claim sees
  // sample->count seeded random instances of its hypothesis domain. When
  // only is non-empty, just the claims with those ids run.
  std::vector<ClaimReport> verify_claims(
      std::size_t                     order,
      std::optional<SampleSpec>       sample  = std::nullopt,
      std::size_t                     threads = 0,
      std::vector<std::string> const& only    = {});

}  // namespace binsys

#endif  // BINSYS_ENUMERATION_HPP_
