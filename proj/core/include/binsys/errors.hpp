#ifndef BINSYS_ERRORS_HPP_
#define BINSYS_ERRORS_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace binsys {

  // Every failure raised by the library carries one of these kinds; the CLI
  // maps them onto exit statuses.
  enum class error_kind {
    closure_violation,
    bad_labels,
    bad_zero,
    bad_shape,
    parse_error,
    order_mismatch,
    order_too_large,
    missing_zero,
    not_orientation,
    internal
  };

  char const* error_kind_name(error_kind kind) noexcept;

  // true for kinds that signal a violated precondition rather than malformed
  // input
  bool is_precondition(error_kind kind) noexcept;

  class BinsysError : public std::runtime_error {
   public:
    BinsysError(error_kind kind, std::string const& what)
        : std::runtime_error(what), _kind(kind) {}

    [[nodiscard]] error_kind kind() const noexcept {
      return _kind;
    }

   private:
    error_kind _kind;
  };

}  // namespace binsys

#endif  // BINSYS_ERRORS_HPP_
