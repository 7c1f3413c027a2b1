#ifndef BINSYS_CLI_REPORTS_HPP_
#define BINSYS_CLI_REPORTS_HPP_

#include <vector>  // for vector

#include <nlohmann/json.hpp>

#include "binsys/enumeration.hpp"
#include "binsys/factorization.hpp"
#include "binsys/groupoid.hpp"

namespace binsys::cli {

  using json = nlohmann::ordered_json;

  inline constexpr int schema_version = 1;

  json table_json(Groupoid const& g);
  json classification_json(Groupoid const& g, ClassificationReport const& r);
  // Throws missing_zero when g has no zero.
  json axioms_json(Groupoid const& g);
  json census_json(CensusReport const& c);
  json claims_json(std::size_t                     order,
                   std::vector<ClaimReport> const& reports);

}  // namespace binsys::cli

#endif  // BINSYS_CLI_REPORTS_HPP_
