#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace udom {

/* Every failure the toolkit can signal carries a stable machine-readable
 * code (used by the CLI to pick exit status and by tests to assert on the
 * failure kind) plus a human-readable message. */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct NotPrimeError : Error {
    explicit NotPrimeError(const std::string& what) : Error("NotPrime", what) {}
};

struct InvalidRelationError : Error {
    explicit InvalidRelationError(const std::string& what) : Error("InvalidRelation", what) {}
};

struct NotAdmissibleError : Error {
    explicit NotAdmissibleError(const std::string& what) : Error("NotAdmissible", what) {}
};

struct NotBalancedError : Error {
    explicit NotBalancedError(const std::string& what) : Error("NotBalanced", what) {}
};

struct NotSelforthogonalError : Error {
    explicit NotSelforthogonalError(const std::string& what) : Error("NotSelforthogonal", what) {}
};

struct NotInjectiveError : Error {
    explicit NotInjectiveError(const std::string& what) : Error("NotInjective", what) {}
};

struct NoSolutionError : Error {
    explicit NoSolutionError(const std::string& what) : Error("NoSolution", what) {}
};

/* Raised when an algebra given only by a multiplication table has a simple
 * block that is not split over the prime field, so no complete set of
 * primitive idempotents with scalar endomorphism rings exists. */
struct NoRadicalRuleError : Error {
    explicit NoRadicalRuleError(const std::string& what) : Error("NoRadicalRule", what) {}
};

struct InputError : Error {
    explicit InputError(const std::string& what) : Error("InputError", what) {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("Internal", what) {}
};

} // namespace udom
