#ifndef BINSYS_CLI_RUN_HPP_
#define BINSYS_CLI_RUN_HPP_

#include <iosfwd>  // for istream, ostream
#include <string>  // for string
#include <vector>  // for vector

namespace binsys::cli {

  // Exit statuses.
  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_invalid      = 1;
  inline constexpr int exit_precondition = 2;
  inline constexpr int exit_internal     = 3;

  // args excludes the program name. Files named "-" are read from in.
  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace binsys::cli

#endif  // BINSYS_CLI_RUN_HPP_
