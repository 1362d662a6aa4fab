#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "higgs/betti.hpp"
#include "higgs/errors.hpp"
#include "higgs/symmetric_product.hpp"

using higgs::BettiReport;
using higgs::BigInt;
using higgs::CurveContext;
using higgs::Flavor;
using higgs::IntPolynomial;
using higgs::ModuliSpec;

namespace {

// Pascal-triangle expansion of (1+y)^n, independent of higgs::pow.
IntPolynomial binomial_poly(unsigned n) {
    std::vector<BigInt> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<BigInt> next(row.size() + 1, BigInt(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return IntPolynomial(row);
}

}  // namespace

TEST_CASE("Jacobian Poincare polynomial") {
    CHECK(higgs::jacobian_poincare(CurveContext(1)) == IntPolynomial{1, 2, 1});
    CHECK(higgs::jacobian_poincare(CurveContext(2)) == IntPolynomial{1, 4, 6, 4, 1});
    for (int g = 1; g <= 8; ++g) {
        const IntPolynomial jac = higgs::jacobian_poincare(CurveContext(g));
        CHECK(jac == binomial_poly(2u * static_cast<unsigned>(g)));
        CHECK(jac.degree() == 2u * static_cast<unsigned>(g));
    }
}

TEST_CASE("stable rank-2 fixed-determinant Poincare polynomial") {
    CHECK(higgs::stable_rank2_fixed_det_poincare(CurveContext(2)) ==
          IntPolynomial{1, 0, 1, 4, 1, 0, 1});
    CHECK_THROWS_AS(higgs::stable_rank2_fixed_det_poincare(CurveContext(1)),
                    higgs::UnsupportedGenus);

    for (int g = 2; g <= 8; ++g) {
        const unsigned tg = 2u * static_cast<unsigned>(g);
        const IntPolynomial p = higgs::stable_rank2_fixed_det_poincare(CurveContext(g));
        CHECK(p.coeff(0) == 1);
        CHECK(p.degree() == 6u * static_cast<unsigned>(g) - 6);
        for (const BigInt& c : p.coeffs()) CHECK(c >= 0);

        // reconstruct the closed form independently and verify q * den == num
        const IntPolynomial pascal_row = binomial_poly(tg);
        std::vector<BigInt> c(3u * tg + 1, BigInt(0));
        for (unsigned k = 0; k <= tg; ++k) c[3 * k] = pascal_row.coeff(k);
        const IntPolynomial one_plus_y3 = IntPolynomial(c);
        const IntPolynomial numerator =
            one_plus_y3 - IntPolynomial::monomial(1, tg) * binomial_poly(tg);
        const IntPolynomial denominator = IntPolynomial{1, 0, -1} * IntPolynomial{1, 0, 0, 0, -1};
        CHECK(p * denominator == numerator);
    }
}

TEST_CASE("rank 1: the Higgs moduli space of a line bundle") {
    for (int g = 1; g <= 8; ++g) {
        for (long long d = -3; d <= 3; ++d) {
            for (Flavor f : {Flavor::GL, Flavor::SLFixedDet, Flavor::PGLQuotient}) {
                const BettiReport report = higgs::higgs_poincare(ModuliSpec{g, 1, d, f});
                CHECK(report.total == binomial_poly(2u * static_cast<unsigned>(g)));
                REQUIRE(report.components.size() == 1);
                CHECK(report.components[0].type.length() == 1);
                CHECK(report.components[0].morse_index == 0);
                CHECK(report.provenance == higgs::Provenance::PaperVerified);
            }
        }
    }
}

TEST_CASE("rank 2 at genus 2: the headline values") {
    const BettiReport pgl = higgs::higgs_poincare(ModuliSpec{2, 2, 1, Flavor::PGLQuotient});
    CHECK(pgl.total == IntPolynomial{1, 0, 1, 4, 2, 4, 2});
    CHECK(!pgl.factorization.has_value());
    CHECK(pgl.provenance == higgs::Provenance::PaperVerified);
    REQUIRE(pgl.components.size() == 2);
    CHECK(*pgl.components[0].component_poly == IntPolynomial{1, 0, 1, 4, 1, 0, 1});
    CHECK(pgl.components[0].morse_index == 0);
    CHECK(*pgl.components[1].component_poly == IntPolynomial{1, 4, 1});
    CHECK(pgl.components[1].morse_index == 4);

    const BettiReport gl = higgs::higgs_poincare(ModuliSpec{2, 2, 1, Flavor::GL});
    CHECK(gl.total == IntPolynomial{1, 4, 7, 12, 25, 40, 47, 44, 30, 12, 2});
    CHECK(gl.total == IntPolynomial{1, 4, 6, 4, 1} * IntPolynomial{1, 0, 1, 4, 2, 4, 2});
    REQUIRE(gl.factorization.has_value());
    CHECK(gl.factorization->first == IntPolynomial{1, 4, 6, 4, 1});
    CHECK(gl.factorization->second == pgl.total);
    CHECK(gl.provenance == higgs::Provenance::PaperVerified);
}

TEST_CASE("rank 2 beyond genus 2 composes the component data") {
    const BettiReport pgl = higgs::higgs_poincare(ModuliSpec{3, 2, 1, Flavor::PGLQuotient});
    // indices 2(g + 2m - 2): 6 at m = 1, 10 at m = 2
    const IntPolynomial expected =
        higgs::stable_rank2_fixed_det_poincare(CurveContext(3)) +
        IntPolynomial::monomial(1, 6) * higgs::sym_series_coeff(3, 3) +
        IntPolynomial::monomial(1, 10) * higgs::sym_series_coeff(3, 1);
    CHECK(pgl.total == expected);
    CHECK(pgl.provenance == higgs::Provenance::Extrapolated);
    for (const auto& component : pgl.components)
        CHECK(component.provenance == higgs::Provenance::Extrapolated);
}

TEST_CASE("rank-2 assembly invariants across genera") {
    for (int g = 2; g <= 6; ++g) {
        const BettiReport report = higgs::higgs_poincare(ModuliSpec{g, 2, 1, Flavor::GL});
        // one type-(2) component plus g-1 type-(1,1) components
        CHECK(report.components.size() == static_cast<std::size_t>(g));
        CHECK(report.total.coeff(0) == 1);
        for (const BigInt& c : report.total.coeffs()) CHECK(c >= 0);

        // localization linearity: the total is exactly the sum of the
        // component contributions (times the Jacobian factor for GL)
        IntPolynomial sum;
        for (const auto& component : report.components) {
            const std::size_t beta =
                component.morse_index.convert_to<unsigned long long>();
            sum = sum + IntPolynomial::monomial(1, beta) * *component.component_poly;
        }
        REQUIRE(report.factorization.has_value());
        CHECK(report.factorization->second == sum);
        CHECK(report.total == report.factorization->first * sum);
        CHECK(higgs::jacobian_poincare(CurveContext(g)) == report.factorization->first);
    }
}

TEST_CASE("degree normalization at rank 2") {
    const BettiReport d1 = higgs::higgs_poincare(ModuliSpec{2, 2, 1, Flavor::GL});
    for (long long d : {-3LL, -1LL, 3LL, 5LL}) {
        const BettiReport dd = higgs::higgs_poincare(ModuliSpec{2, 2, d, Flavor::GL});
        CHECK(dd.total == d1.total);
        CHECK(dd.spec.degree == d);
    }
}

TEST_CASE("typed errors") {
    CHECK_THROWS_AS(higgs::higgs_poincare(ModuliSpec{2, 3, 1, Flavor::GL}),
                    higgs::UnsupportedRank);
    CHECK_THROWS_AS(higgs::higgs_poincare(ModuliSpec{2, 0, 1, Flavor::GL}),
                    higgs::UnsupportedRank);
    CHECK_THROWS_AS(higgs::higgs_poincare(ModuliSpec{2, 2, 2, Flavor::GL}), higgs::NonCoprime);
    CHECK_THROWS_AS(higgs::higgs_poincare(ModuliSpec{2, 2, 0, Flavor::GL}), higgs::NonCoprime);
    CHECK_THROWS_AS(higgs::higgs_poincare(ModuliSpec{1, 2, 1, Flavor::GL}),
                    higgs::UnsupportedGenus);
    CHECK_THROWS_AS(higgs::higgs_poincare(ModuliSpec{0, 1, 1, Flavor::GL}),
                    higgs::UnsupportedGenus);
    CHECK_THROWS_AS(higgs::higgs_poincare(ModuliSpec{2, 2, 1, Flavor::SLFixedDet}),
                    higgs::UnsupportedFlavor);
    // gcd(1, 0) = 1: degree 0 is fine at rank 1
    CHECK(higgs::higgs_poincare(ModuliSpec{2, 1, 0, Flavor::GL}).total ==
          IntPolynomial{1, 4, 6, 4, 1});
}
