#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "higgs/errors.hpp"
#include "higgs/polynomial.hpp"

using higgs::BigInt;
using higgs::IntPolynomial;

namespace {

// Independent convolution oracle: straight double loop, no reuse of the
// library's multiplication.
std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<BigInt> c(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

IntPolynomial random_poly(std::mt19937& gen, int max_degree = 20) {
    std::uniform_int_distribution<int> deg(-1, max_degree);  // -1 encodes the zero polynomial
    std::uniform_int_distribution<long long> coeff(-1000000, 1000000);
    const int d = deg(gen);
    if (d < 0) return IntPolynomial();
    std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = coeff(gen);
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("zero polynomial and normalization") {
    const IntPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(IntPolynomial({0, 0, 0}).is_zero());
    CHECK_THROWS_AS(zero.degree(), std::logic_error);
    CHECK_THROWS_AS(zero.leading(), std::logic_error);

    const IntPolynomial p{1, 2, 0, 0};
    CHECK(p.degree() == 1);
    CHECK(p.coeffs().size() == 2);
    CHECK(p.coeff(7) == 0);
    CHECK(IntPolynomial::constant(0).is_zero());
    CHECK(IntPolynomial::monomial(0, 5).is_zero());
    CHECK(IntPolynomial::monomial(3, 2) == IntPolynomial{0, 0, 3});
}

TEST_CASE("addition") {
    CHECK(IntPolynomial{1, 1} + IntPolynomial{1, -1} == IntPolynomial{2});
    const IntPolynomial p{3, 0, -5, 7};
    CHECK(IntPolynomial() + p == p);
    CHECK(p + IntPolynomial() == p);

    // 1 + y^2 + 4y^3 + y^4 + y^6 plus y^4 (1 + 4y + y^2)
    const IntPolynomial stable{1, 0, 1, 4, 1, 0, 1};
    const IntPolynomial shifted = IntPolynomial::monomial(1, 4) * IntPolynomial{1, 4, 1};
    CHECK(stable + shifted == IntPolynomial{1, 0, 1, 4, 2, 4, 2});
}

TEST_CASE("multiplication") {
    CHECK(IntPolynomial{1, 1} * IntPolynomial{1, 1} == IntPolynomial{1, 2, 1});
    const IntPolynomial p{2, 0, -3, 1};
    CHECK(p * IntPolynomial::one() == p);
    CHECK(p * IntPolynomial() == IntPolynomial());

    // (1+y)^4 times 1 + y^2 + 4y^3 + 2y^4 + 4y^5 + 2y^6, expanded by the
    // convolution oracle and frozen.
    const std::vector<BigInt> a{1, 4, 6, 4, 1};
    const std::vector<BigInt> b{1, 0, 1, 4, 2, 4, 2};
    const IntPolynomial product = IntPolynomial(a) * IntPolynomial(b);
    CHECK(product == IntPolynomial(convolve(a, b)));
    CHECK(product == IntPolynomial{1, 4, 7, 12, 25, 40, 47, 44, 30, 12, 2});
    CHECK(product.degree() == 10);
}

TEST_CASE("pow") {
    const IntPolynomial one_plus_y{1, 1};
    CHECK(higgs::pow(one_plus_y, 0) == IntPolynomial::one());
    CHECK(higgs::pow(IntPolynomial(), 0) == IntPolynomial::one());
    CHECK(higgs::pow(one_plus_y, 4) == IntPolynomial{1, 4, 6, 4, 1});

    // binomial expansion oracle via Pascal's triangle
    std::vector<BigInt> row{1};
    for (int n = 1; n <= 12; ++n) {
        std::vector<BigInt> next(row.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < row.size(); ++i) {
            next[i] += row[i];
            next[i + 1] += row[i];
        }
        row = std::move(next);
        CHECK(higgs::pow(one_plus_y, static_cast<unsigned>(n)) == IntPolynomial(row));
    }
}

TEST_CASE("exact division") {
    CHECK(higgs::exact_div(IntPolynomial{1, 2, 1}, IntPolynomial{1, 1}) == IntPolynomial{1, 1});

    // ((1+y^3)^4 - y^4 (1+y)^4) / ((1-y^2)(1-y^4)) = 1 + y^2 + 4y^3 + y^4 + y^6
    const IntPolynomial numerator = higgs::pow(IntPolynomial{1, 0, 0, 1}, 4) -
                                    IntPolynomial::monomial(1, 4) * higgs::pow(IntPolynomial{1, 1}, 4);
    CHECK(numerator == IntPolynomial{1, 0, 0, 4, -1, -4, 0, -4, -1, 4, 0, 0, 1});
    const IntPolynomial denominator = IntPolynomial{1, 0, -1} * IntPolynomial{1, 0, 0, 0, -1};
    CHECK(higgs::exact_div(numerator, denominator) == IntPolynomial{1, 0, 1, 4, 1, 0, 1});

    CHECK_THROWS_AS(higgs::exact_div(IntPolynomial{1, 1}, IntPolynomial{1, 0, 1}),
                    higgs::InexactDivision);
    CHECK_THROWS_AS(higgs::exact_div(IntPolynomial{1, 1, 1}, IntPolynomial{1, 1}),
                    higgs::InexactDivision);
    CHECK_THROWS_AS(higgs::exact_div(IntPolynomial{1, 1}, IntPolynomial()), std::invalid_argument);
    CHECK(higgs::exact_div(IntPolynomial(), IntPolynomial{1, 1}) == IntPolynomial());
}

TEST_CASE("ring laws on random inputs") {
    std::mt19937 gen(20240817);
    for (int iter = 0; iter < 60; ++iter) {
        const IntPolynomial a = random_poly(gen);
        const IntPolynomial b = random_poly(gen);
        const IntPolynomial c = random_poly(gen);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == IntPolynomial());
    }
}

TEST_CASE("division inverts multiplication on random inputs") {
    std::mt19937 gen(424242);
    for (int iter = 0; iter < 60; ++iter) {
        const IntPolynomial a = random_poly(gen);
        IntPolynomial b = random_poly(gen);
        if (b.is_zero()) b = IntPolynomial{1, 7};
        CHECK(higgs::exact_div(a * b, b) == a);
        if (!a.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("rendering") {
    CHECK(higgs::to_string(IntPolynomial()) == "0");
    CHECK(higgs::to_string(IntPolynomial{7}) == "7");
    CHECK(higgs::to_string(IntPolynomial{1, 0, 0, 4}) == "1 + 4y^3");
    CHECK(higgs::to_string(IntPolynomial{0, 1}) == "y");
    CHECK(higgs::to_string(IntPolynomial{0, 0, 2}) == "2y^2");
    CHECK(higgs::to_string(IntPolynomial{-1, -2}) == "-1 - 2y");
    CHECK(higgs::to_string(IntPolynomial{1, -1}) == "1 - y");
    CHECK(higgs::to_string(IntPolynomial{1, 0, 1, 4, 1, 0, 1}) == "1 + y^2 + 4y^3 + y^4 + y^6");
}

TEST_CASE("palindromicity check") {
    CHECK(higgs::is_palindromic(IntPolynomial()));
    CHECK(higgs::is_palindromic(IntPolynomial{1, 4, 1}));
    CHECK(higgs::is_palindromic(IntPolynomial{1, 4, 7, 4, 1}));
    CHECK(!higgs::is_palindromic(IntPolynomial{1, 2}));
}
