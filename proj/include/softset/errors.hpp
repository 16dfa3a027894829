#ifndef SOFTSET_ERRORS_HPP
#define SOFTSET_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace softset {

/// Everything a validating constructor or operation can reject.
enum class Errc {
  unknown_parameter,
  unknown_object,
  unknown_name,
  central_not_subset,
  context_mismatch,
  target_not_subset_of_central,
  coverage_violation,
  syntax_error,
  duplicate_name,
  too_large_for_oracle,
  enumeration_too_large,
  unknown_law,
  no_upper_bound,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::unknown_parameter: return "UnknownParameter";
    case Errc::unknown_object: return "UnknownObject";
    case Errc::unknown_name: return "UnknownName";
    case Errc::central_not_subset: return "CentralNotSubsetOfE";
    case Errc::context_mismatch: return "ContextMismatch";
    case Errc::target_not_subset_of_central: return "TargetNotSubsetOfCentral";
    case Errc::coverage_violation: return "CoverageViolation";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::duplicate_name: return "DuplicateName";
    case Errc::too_large_for_oracle: return "TooLargeForOracle";
    case Errc::enumeration_too_large: return "EnumerationTooLarge";
    case Errc::unknown_law: return "UnknownLaw";
    case Errc::no_upper_bound: return "NoUpperBound";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace softset

#endif  // SOFTSET_ERRORS_HPP
