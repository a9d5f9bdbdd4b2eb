#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qtr {

// Domain-level failure with a stable machine-readable code, e.g. "NotAssociative",
// "NotUniqueFactorization", "NotInvertible".  The message names the violating witness.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace qtr
