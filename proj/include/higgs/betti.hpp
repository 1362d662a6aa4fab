#ifndef HIGGS_BETTI_HPP
#define HIGGS_BETTI_HPP

#include <optional>
#include <utility>
#include <vector>

#include "higgs/curve.hpp"
#include "higgs/polynomial.hpp"
#include "higgs/vhs.hpp"

namespace higgs {

/// Which group the moduli problem is taken for.  GL is the full space;
/// SL_fixed_det fixes the determinant; PGL_quotient is the quotient of the
/// fixed-determinant space by the 2-torsion Jacobian action.
enum class Flavor { GL, SLFixedDet, PGLQuotient };

/// "GL", "SL_fixed_det" or "PGL_quotient".
std::string to_string(Flavor f);

/// One moduli problem.  Poincare-polynomial operations require
/// gcd(rank, degree) = 1, where the space is smooth.
struct ModuliSpec {
    int genus = 0;
    int rank = 0;
    long long degree = 0;
    Flavor flavor = Flavor::GL;
};

/**
 * Assembled localization output: the list of fixed-point components with
 * their Morse indices and Poincare polynomials, the total
 *
 *     P_y = sum over components of y^beta * P_y(component),
 *
 * further multiplied by (1+y)^{2g} when flavor = GL at rank 2, in which
 * case `factorization` records the ((1+y)^{2g}, remaining factor) split.
 */
struct BettiReport {
    ModuliSpec spec;
    std::vector<FixedComponentReport> components;
    IntPolynomial total;
    std::optional<std::pair<IntPolynomial, IntPolynomial>> factorization;
    Provenance provenance = Provenance::Extrapolated;
};

/// (1+y)^{2g}, the Poincare polynomial of Jac^d(X).  Requires g >= 1.
IntPolynomial jacobian_poincare(const CurveContext& ctx);

/**
 * Poincare polynomial of the moduli of stable rank-2 bundles with fixed
 * determinant of odd degree, via the closed form
 *
 *     ( (1+y^3)^{2g} - y^{2g} (1+y)^{2g} ) / ( (1-y^2)(1-y^4) ),
 *
 * which reproduces the Atiyah-Bott value 1 + y^2 + 4y^3 + y^4 + y^6 at
 * g = 2.  The division must be exact; a nonzero remainder propagates as
 * InexactDivision (it would mean the closed form was transcribed wrong).
 * Requires g >= 2.
 */
IntPolynomial stable_rank2_fixed_det_poincare(const CurveContext& ctx);

/**
 * Poincare polynomial of the Higgs moduli space by Morse-Bott
 * localization over the circle-fixed components.
 *
 * - rank 1, any flavor: the single type-(1) component Jac^d(X), total
 *   (1+y)^{2g}, for any g >= 1.
 * - rank 2, PGL_quotient: the type-(2) component (stable bundles, index 0)
 *   plus one type-(1,1) component per m = 1..g-1 with index 2(g + 2m - 2)
 *   and polynomial P_y(Sym^{2g-2m-1} X).
 * - rank 2, GL: the PGL total multiplied by (1+y)^{2g}.
 * - rank 2, SL_fixed_det: raises UnsupportedFlavor; the variant part of
 *   the fixed-determinant cohomology is not computed here.
 *
 * Odd degrees at rank 2 are normalized to 1 (Betti numbers are degree
 * independent).  Errors: UnsupportedRank (rank not 1 or 2), NonCoprime,
 * UnsupportedGenus, UnsupportedFlavor.
 *
 * provenance is paper-verified for rank 1 and for rank 2 at g = 2, where
 * the output matches published values exactly; extrapolated otherwise.
 */
BettiReport higgs_poincare(const ModuliSpec& spec);

}  // namespace higgs

#endif
