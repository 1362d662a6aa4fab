#ifndef HIGGS_CURVE_HPP
#define HIGGS_CURVE_HPP

namespace higgs {

/**
 * The base curve, reduced to the one datum every formula here consumes:
 * its genus g >= 1.  Operations that rest on the higher-rank dimension
 * counts additionally require g >= 2 and reject g = 1 with a typed error.
 */
class CurveContext {
public:
    /// Throws UnsupportedGenus if genus < 1.
    explicit CurveContext(int genus);

    int genus() const noexcept { return genus_; }

private:
    int genus_;
};

/**
 * h^0(X, omega_X^i), the dimension of the space of i-pluricanonical
 * sections: 1 for i = 0, g for i = 1, and (2i - 1)(g - 1) for i >= 2
 * by Riemann-Roch.  Requires g >= 2.
 */
long long pluricanonical_dim(const CurveContext& ctx, int power);

/// dim B_r = 1 + r^2(g - 1), the dimension of the Hitchin base
/// (equivalently, the sum of the pluricanonical dimensions for i = 1..r).
/// Requires g >= 2 when r >= 2; rank 1 is allowed for every g >= 1.
long long hitchin_base_dim(const CurveContext& ctx, int rank);

/// dim M_X(r, d) = 2 + 2 r^2(g - 1), twice the Hitchin base dimension.
long long moduli_dim(const CurveContext& ctx, int rank);

/// dim U_X(r, d) = 1 + r^2(g - 1), the moduli of stable bundles.
/// Requires g >= 2.
long long stable_bundles_dim(const CurveContext& ctx, int rank);

}  // namespace higgs

#endif
