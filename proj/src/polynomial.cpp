#include "higgs/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "higgs/errors.hpp"

namespace higgs {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<BigInt> coefficients)
    : coeffs_(coefficients) {
    normalize();
}

IntPolynomial IntPolynomial::constant(BigInt value) {
    IntPolynomial p;
    if (value != 0) p.coeffs_.push_back(std::move(value));
    return p;
}

IntPolynomial IntPolynomial::monomial(BigInt value, std::size_t exponent) {
    IntPolynomial p;
    if (value != 0) {
        p.coeffs_.assign(exponent + 1, BigInt(0));
        p.coeffs_[exponent] = std::move(value);
    }
    return p;
}

const IntPolynomial& IntPolynomial::one() {
    static const IntPolynomial unit = IntPolynomial::constant(1);
    return unit;
}

std::size_t IntPolynomial::degree() const {
    if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

const BigInt& IntPolynomial::coeff(std::size_t i) const noexcept {
    static const BigInt zero(0);
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

const BigInt& IntPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial is undefined");
    return coeffs_.back();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<BigInt> sum(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) sum[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(sum));
}

IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<BigInt> neg(a.coeffs().size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -a.coeffs()[i];
    return IntPolynomial(std::move(neg));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
    std::vector<BigInt> diff(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) diff[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(diff));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<BigInt> prod(a.coeffs().size() + b.coeffs().size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            prod[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return IntPolynomial(std::move(prod));
}

IntPolynomial pow(const IntPolynomial& a, unsigned k) {
    IntPolynomial result = IntPolynomial::one();
    IntPolynomial base = a;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

IntPolynomial exact_div(const IntPolynomial& num, const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_div: division by the zero polynomial");
    if (num.is_zero()) return IntPolynomial();
    if (num.degree() < den.degree())
        throw InexactDivision("exact_div: numerator degree " + std::to_string(num.degree()) +
                              " below denominator degree " + std::to_string(den.degree()));

    const std::size_t dd = den.degree();
    std::vector<BigInt> rem = num.coeffs();
    std::vector<BigInt> quot(num.degree() - dd + 1, BigInt(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt& lead = rem[k + dd];
        if (lead == 0) continue;
        if (lead % den.leading() != 0)
            throw InexactDivision("exact_div: leading coefficient " + lead.str() +
                                  " not divisible by " + den.leading().str());
        quot[k] = lead / den.leading();
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= quot[k] * den.coeff(j);
    }
    for (const BigInt& c : rem)
        if (c != 0) throw InexactDivision("exact_div: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

bool is_palindromic(const IntPolynomial& p) {
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size() / 2; ++i)
        if (c[i] != c[c.size() - 1 - i]) return false;
    return true;
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        const BigInt& c = p.coeffs()[i];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0) out << mag.str();
        if (i == 1)
            out << "y";
        else if (i > 1)
            out << "y^" << i;
    }
    return out.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << to_string(p); }

}  // namespace higgs
