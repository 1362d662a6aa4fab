#include "higgs/curve.hpp"

#include <stdexcept>
#include <string>

#include "higgs/errors.hpp"

namespace higgs {

namespace {

void require_genus_at_least_2(const CurveContext& ctx, const char* what) {
    if (ctx.genus() < 2)
        throw UnsupportedGenus(std::string(what) + " requires genus >= 2, got " +
                               std::to_string(ctx.genus()));
}

void require_positive_rank(int rank, const char* what) {
    if (rank < 1)
        throw std::invalid_argument(std::string(what) + ": rank must be positive, got " +
                                    std::to_string(rank));
}

}  // namespace

CurveContext::CurveContext(int genus) : genus_(genus) {
    if (genus < 1)
        throw UnsupportedGenus("curve genus must be at least 1, got " + std::to_string(genus));
}

long long pluricanonical_dim(const CurveContext& ctx, int power) {
    if (power < 0) throw std::invalid_argument("pluricanonical_dim: power must be nonnegative");
    require_genus_at_least_2(ctx, "pluricanonical_dim");
    if (power == 0) return 1;
    if (power == 1) return ctx.genus();
    return (2LL * power - 1) * (ctx.genus() - 1);
}

long long hitchin_base_dim(const CurveContext& ctx, int rank) {
    require_positive_rank(rank, "hitchin_base_dim");
    if (rank >= 2) require_genus_at_least_2(ctx, "hitchin_base_dim at rank >= 2");
    return 1 + static_cast<long long>(rank) * rank * (ctx.genus() - 1);
}

long long moduli_dim(const CurveContext& ctx, int rank) {
    return 2 * hitchin_base_dim(ctx, rank);
}

long long stable_bundles_dim(const CurveContext& ctx, int rank) {
    require_positive_rank(rank, "stable_bundles_dim");
    require_genus_at_least_2(ctx, "stable_bundles_dim");
    return 1 + static_cast<long long>(rank) * rank * (ctx.genus() - 1);
}

}  // namespace higgs
