#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schurkit {

enum class Errc {
    InputNotWeaklyDecreasing,
    NegativePart,
    NotRemovable,
    FirstPartExceedsBound,
    LengthExceedsN,
    DegreeMismatch,
    NotRestricted,
    PrimeTooSmall,
    NotRegular,
    NoCriticalAncestor,
    VariableCountMismatch,
    DegreeMixed,
    Overflow,
    ParseError,
    ResourceBudgetExceeded,
    NegativeResidual,
    InvalidArgument,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace schurkit
