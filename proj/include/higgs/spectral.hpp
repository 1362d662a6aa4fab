#ifndef HIGGS_SPECTRAL_HPP
#define HIGGS_SPECTRAL_HPP

#include "higgs/curve.hpp"

namespace higgs {

/**
 * Invariants of a generic (smooth) spectral curve of the rank-r Hitchin
 * fibration over a genus-g curve.  The generic Hitchin fibre is the
 * Jacobian Jac^{d'}(X_rho) of the spectral curve, so fibre_dim equals
 * spectral_genus, and the Lagrangian structure of the fibration forces
 * fibre_dim == base_dim.
 */
struct SpectralData {
    int rank;
    int genus;
    long long spectral_genus;
    long long line_degree;
    long long base_dim;
    long long fibre_dim;
};

/// Genus of a generic spectral curve, r^2(g - 1) + 1 (Riemann-Hurwitz for
/// the r:1 cover branched over the discriminant divisor of degree
/// r(r-1)(2g-2)).  Requires g >= 2.
long long spectral_genus(const CurveContext& ctx, int rank);

/// Degree d' = d - (1 - g~) + r(1 - g) of the eigen-line bundle on the
/// spectral curve pushing forward to a rank-r degree-d bundle downstairs.
/// Requires g >= 2.
long long spectral_line_degree(const CurveContext& ctx, int rank, long long degree);

/// All of the above for one (g, r, d).  Requires g >= 2.
SpectralData spectral_report(const CurveContext& ctx, int rank, long long degree);

}  // namespace higgs

#endif
