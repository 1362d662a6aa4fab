#include "higgs/spectral.hpp"

#include <stdexcept>
#include <string>

#include "higgs/errors.hpp"

namespace higgs {

namespace {

void check_args(const CurveContext& ctx, int rank, const char* what) {
    if (rank < 1)
        throw std::invalid_argument(std::string(what) + ": rank must be positive, got " +
                                    std::to_string(rank));
    if (ctx.genus() < 2)
        throw UnsupportedGenus(std::string(what) + " requires genus >= 2, got " +
                               std::to_string(ctx.genus()));
}

}  // namespace

long long spectral_genus(const CurveContext& ctx, int rank) {
    check_args(ctx, rank, "spectral_genus");
    return static_cast<long long>(rank) * rank * (ctx.genus() - 1) + 1;
}

long long spectral_line_degree(const CurveContext& ctx, int rank, long long degree) {
    check_args(ctx, rank, "spectral_line_degree");
    const long long tilde_g = spectral_genus(ctx, rank);
    return degree - (1 - tilde_g) + static_cast<long long>(rank) * (1 - ctx.genus());
}

SpectralData spectral_report(const CurveContext& ctx, int rank, long long degree) {
    check_args(ctx, rank, "spectral_report");
    const long long tilde_g = spectral_genus(ctx, rank);
    SpectralData data;
    data.rank = rank;
    data.genus = ctx.genus();
    data.spectral_genus = tilde_g;
    data.line_degree = spectral_line_degree(ctx, rank, degree);
    data.base_dim = hitchin_base_dim(ctx, rank);
    data.fibre_dim = tilde_g;  // the fibre is the Jacobian of the spectral curve
    return data;
}

}  // namespace higgs
