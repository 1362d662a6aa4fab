#include "higgs/betti.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

#include "higgs/errors.hpp"
#include "higgs/symmetric_product.hpp"

namespace higgs {

namespace {

std::size_t exponent_from_index(const BigInt& beta) {
    if (beta < 0 || beta % 2 != 0)
        throw std::logic_error("Morse index of an admissible component must be even and >= 0, got " +
                               beta.str());
    return static_cast<std::size_t>(beta.convert_to<unsigned long long>());
}

BettiReport rank1_report(const ModuliSpec& spec, const CurveContext& ctx) {
    const IntPolynomial jac = jacobian_poincare(ctx);
    FixedComponentReport component{
        VHSType({1}, {spec.degree}),
        BigInt(0),
        jac,
        "Jac^" + std::to_string(spec.degree) + "(X), the zero-Higgs locus",
        Provenance::PaperVerified,
    };
    BettiReport report;
    report.spec = spec;
    report.components.push_back(std::move(component));
    report.total = jac;
    report.factorization = std::make_pair(jac, IntPolynomial::one());
    report.provenance = Provenance::PaperVerified;
    return report;
}

}  // namespace

std::string to_string(Flavor f) {
    switch (f) {
        case Flavor::GL: return "GL";
        case Flavor::SLFixedDet: return "SL_fixed_det";
        case Flavor::PGLQuotient: return "PGL_quotient";
    }
    throw std::logic_error("unknown flavor");
}

IntPolynomial jacobian_poincare(const CurveContext& ctx) {
    return pow(IntPolynomial{1, 1}, 2u * static_cast<unsigned>(ctx.genus()));
}

IntPolynomial stable_rank2_fixed_det_poincare(const CurveContext& ctx) {
    if (ctx.genus() < 2)
        throw UnsupportedGenus("stable_rank2_fixed_det_poincare requires genus >= 2, got " +
                               std::to_string(ctx.genus()));
    const unsigned tg = 2u * static_cast<unsigned>(ctx.genus());
    const IntPolynomial numerator =
        pow(IntPolynomial{1, 0, 0, 1}, tg) - IntPolynomial::monomial(1, tg) * pow(IntPolynomial{1, 1}, tg);
    const IntPolynomial denominator = IntPolynomial{1, 0, -1} * IntPolynomial{1, 0, 0, 0, -1};
    return exact_div(numerator, denominator);
}

BettiReport higgs_poincare(const ModuliSpec& spec) {
    if (spec.rank < 1 || spec.rank > 2)
        throw UnsupportedRank("Poincare polynomials are assembled for ranks 1 and 2 only; rank " +
                              std::to_string(spec.rank) +
                              " fixed loci involve holomorphic-triple moduli, which are not "
                              "implemented");
    CurveContext ctx(spec.genus);
    if (std::gcd(static_cast<long long>(spec.rank), spec.degree) != 1)
        throw NonCoprime("gcd(rank, degree) must be 1 for a smooth moduli space; got rank " +
                         std::to_string(spec.rank) + ", degree " + std::to_string(spec.degree));

    if (spec.rank == 1) return rank1_report(spec, ctx);

    // rank 2, odd degree
    if (ctx.genus() < 2)
        throw UnsupportedGenus("rank-2 Poincare polynomials require genus >= 2, got " +
                               std::to_string(ctx.genus()));
    if (spec.flavor == Flavor::SLFixedDet)
        throw UnsupportedFlavor(
            "the SL (fixed-determinant) space needs the variant part of the cohomology, which is "
            "not computed; use PGL_quotient for the invariant part or GL for the full space");

    const int g = ctx.genus();
    const Provenance provenance = g == 2 ? Provenance::PaperVerified : Provenance::Extrapolated;

    BettiReport report;
    report.spec = spec;
    report.provenance = provenance;

    // Betti numbers are independent of the (odd) degree; assemble at d = 1.
    IntPolynomial invariant_total;
    for (const VHSType& type : enumerate_rank2_fixed_types(ctx, 1)) {
        FixedComponentReport component{type, morse_index(ctx, type), std::nullopt, "", provenance};
        if (type.length() == 1) {
            component.component_poly = stable_rank2_fixed_det_poincare(ctx);
            component.description = "U_X(2, W), stable bundles with fixed determinant of degree 1";
        } else {
            const unsigned k = static_cast<unsigned>(2 * g - 2 * type.degrees()[0] - 1);
            component.component_poly = sym_series_coeff(g, k);
            std::ostringstream desc;
            desc << "degree 2^" << 2 * g << " cover of Sym^" << k << "(X); invariant part Sym^"
                 << k << "(X)";
            component.description = desc.str();
        }
        invariant_total =
            invariant_total + IntPolynomial::monomial(1, exponent_from_index(component.morse_index)) *
                                  *component.component_poly;
        report.components.push_back(std::move(component));
    }

    if (spec.flavor == Flavor::PGLQuotient) {
        report.total = invariant_total;
    } else {  // GL: the full space factors through the quotient
        const IntPolynomial jac = jacobian_poincare(ctx);
        report.total = jac * invariant_total;
        report.factorization = std::make_pair(jac, invariant_total);
    }
    return report;
}

}  // namespace higgs
