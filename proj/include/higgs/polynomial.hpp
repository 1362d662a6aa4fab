#ifndef HIGGS_POLYNOMIAL_HPP
#define HIGGS_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "higgs/bigint.hpp"

namespace higgs {

/**
 * Exact univariate polynomial over arbitrary-precision integers in the
 * Betti variable y.
 *
 * Coefficients are stored in ascending order of exponent: coeff(i) holds
 * the coefficient of y^i.  The zero polynomial is the empty coefficient
 * list; a nonzero polynomial never carries trailing zero coefficients, so
 * degree() == coeffs().size() - 1.  The degree of the zero polynomial is
 * undefined and degree() refuses to answer it.
 *
 * Values are immutable after construction; all arithmetic returns fresh
 * values, so instances are safe to share across threads.
 */
class IntPolynomial {
public:
    /// The zero polynomial.
    IntPolynomial() = default;

    /// Builds from ascending coefficients, stripping trailing zeros.
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<BigInt> coefficients);

    static IntPolynomial constant(BigInt value);

    /// value * y^exponent
    static IntPolynomial monomial(BigInt value, std::size_t exponent);

    static const IntPolynomial& one();

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of a nonzero polynomial; throws std::logic_error on zero.
    std::size_t degree() const;

    /// Coefficient of y^i; zero beyond the stored range.
    const BigInt& coeff(std::size_t i) const noexcept;

    /// Leading coefficient; throws std::logic_error on the zero polynomial.
    const BigInt& leading() const;

    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    void normalize();

    std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

/// a^k by repeated squaring, with a^0 = 1.
IntPolynomial pow(const IntPolynomial& a, unsigned k);

/**
 * Exact quotient num / den over the integers.  Throws InexactDivision when
 * den does not divide num (either a coefficient fails to divide during long
 * division or a nonzero remainder is left), and std::invalid_argument when
 * den is the zero polynomial.
 */
IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den);

/// True when the coefficient vector reads the same in both directions.
/// The zero polynomial counts as palindromic.
bool is_palindromic(const IntPolynomial& p);

/// Renders with ascending exponents, e.g. "1 + 4y^3 + y^6"; zero is "0".
std::string to_string(const IntPolynomial& p);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace higgs

#endif
