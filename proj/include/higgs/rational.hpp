#ifndef HIGGS_RATIONAL_HPP
#define HIGGS_RATIONAL_HPP

#include <stdexcept>
#include <string>

#include "higgs/bigint.hpp"

namespace higgs {

/**
 * Exact rational number over BigInt, kept normalized: denominator positive,
 * gcd(|num|, den) == 1, zero represented as 0/1.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(BigInt numerator, BigInt denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    // Denominators are positive, so cross-multiplication preserves order.
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    BigInt num_;
    BigInt den_;
};

inline std::string to_string(const Rational& q) {
    if (q.den() == 1) return q.num().str();
    return q.num().str() + "/" + q.den().str();
}

}  // namespace higgs

#endif
