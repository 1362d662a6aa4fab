#ifndef HIGGS_ERRORS_HPP
#define HIGGS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace higgs {

/**
 * Base class of all typed domain errors.  Each carries a stable
 * machine-readable code alongside the human-readable message; the CLI maps
 * any DomainError to exit status 1 and a JSON error object {code, message}.
 */
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Genus outside the domain of the requested operation.
struct UnsupportedGenus : DomainError {
    explicit UnsupportedGenus(const std::string& m) : DomainError("UnsupportedGenus", m) {}
};

/// Rank outside the implemented range (Poincare assembly stops at rank 2).
struct UnsupportedRank : DomainError {
    explicit UnsupportedRank(const std::string& m) : DomainError("UnsupportedRank", m) {}
};

/// Determinant degree other than the normalized value accepted by the
/// rank-2 fixed-point enumeration.
struct UnsupportedDegree : DomainError {
    explicit UnsupportedDegree(const std::string& m) : DomainError("UnsupportedDegree", m) {}
};

/// Chain type whose stability analysis is not implemented (some step of
/// rank greater than one).
struct UnsupportedType : DomainError {
    explicit UnsupportedType(const std::string& m) : DomainError("UnsupportedType", m) {}
};

/// Group flavor for which the requested quantity is not computed.
struct UnsupportedFlavor : DomainError {
    explicit UnsupportedFlavor(const std::string& m) : DomainError("UnsupportedFlavor", m) {}
};

/// gcd(rank, degree) != 1; the moduli space is singular and the Betti
/// machinery here does not apply.
struct NonCoprime : DomainError {
    explicit NonCoprime(const std::string& m) : DomainError("NonCoprime", m) {}
};

/// Polynomial division left a remainder where an exact quotient was
/// required.  Surfacing this instead of truncating is deliberate: a nonzero
/// remainder in the closed forms used here indicates a transcription bug.
struct InexactDivision : DomainError {
    explicit InexactDivision(const std::string& m) : DomainError("InexactDivision", m) {}
};

/// A value does not fit the 64-bit integers JSON consumers can parse
/// losslessly.  text/csv output is unaffected.
struct JsonIntegerRange : DomainError {
    explicit JsonIntegerRange(const std::string& m) : DomainError("JsonIntegerRange", m) {}
};

}  // namespace higgs

#endif
