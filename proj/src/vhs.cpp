#include "higgs/vhs.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "higgs/errors.hpp"

namespace higgs {

VHSType::VHSType(std::vector<int> ranks, std::vector<long long> degrees)
    : ranks_(std::move(ranks)), degrees_(std::move(degrees)) {
    if (ranks_.empty()) throw std::invalid_argument("VHSType: chain must have at least one summand");
    if (ranks_.size() != degrees_.size())
        throw std::invalid_argument("VHSType: ranks and degrees must have equal length");
    for (int r : ranks_)
        if (r < 1) throw std::invalid_argument("VHSType: every rank must be positive");
}

long long VHSType::total_rank() const noexcept {
    return std::accumulate(ranks_.begin(), ranks_.end(), 0LL);
}

long long VHSType::total_degree() const noexcept {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
}

std::string to_string(const VHSType& t) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < t.length(); ++i) out << (i ? "," : "") << t.ranks()[i];
    out << "; ";
    for (std::size_t i = 0; i < t.length(); ++i) out << (i ? "," : "") << t.degrees()[i];
    out << ")";
    return out.str();
}

std::string to_string(Provenance p) {
    return p == Provenance::PaperVerified ? "paper-verified" : "extrapolated";
}

Rational slope(long long rank, long long degree) {
    if (rank < 1) throw std::invalid_argument("slope: rank must be positive");
    return Rational(BigInt(degree), BigInt(rank));
}

bool is_admissible_chain(const CurveContext& ctx, const VHSType& t) {
    if (ctx.genus() < 2)
        throw UnsupportedGenus("is_admissible_chain requires genus >= 2, got " +
                               std::to_string(ctx.genus()));
    const std::size_t n = t.length();
    // A single summand is the zero-Higgs locus: stability of the underlying
    // bundle is assumed, not checked.
    if (n == 1) return true;
    for (int r : t.ranks())
        if (r != 1)
            throw UnsupportedType("stability of chains with a step of rank > 1 is not implemented "
                                  "(holomorphic-triples territory); got type " + to_string(t));

    const auto& d = t.degrees();
    // Every link must admit a nonzero Higgs map:
    // deg Hom(Lambda_i, Lambda_{i+1} (x) omega_X) >= 0.
    const long long canonical_degree = 2LL * ctx.genus() - 2;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (d[i + 1] - d[i] + canonical_degree < 0) return false;

    // Tails Lambda_k + ... + Lambda_n are the phi-invariant subbundles of a
    // chain with nonzero links; none may reach the total slope.
    const Rational total = slope(static_cast<long long>(n), t.total_degree());
    long long tail_degree = 0;
    for (std::size_t k = n; k-- > 1;) {
        tail_degree += d[k];
        if (!(slope(static_cast<long long>(n - k), tail_degree) < total)) return false;
    }
    return true;
}

std::vector<VHSType> enumerate_rank2_fixed_types(const CurveContext& ctx, long long degree) {
    if (ctx.genus() < 2)
        throw UnsupportedGenus("enumerate_rank2_fixed_types requires genus >= 2, got " +
                               std::to_string(ctx.genus()));
    if (degree != 1)
        throw UnsupportedDegree("enumerate_rank2_fixed_types accepts the normalized degree 1 only; "
                                "got " + std::to_string(degree) +
                                " (odd degrees normalize to 1 by tensoring)");
    std::vector<VHSType> types;
    types.emplace_back(std::vector<int>{2}, std::vector<long long>{1});
    for (long long m = 1; m <= ctx.genus() - 1; ++m)
        types.emplace_back(std::vector<int>{1, 1}, std::vector<long long>{m, 1 - m});
    return types;
}

BigInt morse_index(const CurveContext& ctx, const VHSType& t) {
    if (ctx.genus() < 2)
        throw UnsupportedGenus("morse_index requires genus >= 2, got " +
                               std::to_string(ctx.genus()));
    const std::size_t n = t.length();
    const auto& r = t.ranks();
    const auto& d = t.degrees();
    const BigInt g = ctx.genus();

    BigInt first = 0;
    if (n > 2) {
        for (std::size_t i = 0; i + 2 < n; ++i)
            for (std::size_t j = i + 2; j < n; ++j) first += BigInt(r[i]) * r[j];
        first *= 4 * g - 4;
    }
    BigInt second = 0;
    if (n > 1) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const BigInt hom_degree = -BigInt(r[i + 1]) * d[i] + BigInt(r[i]) * d[i + 1];
            second += hom_degree + (1 - g) * r[i] * r[i + 1];
        }
    }
    return first - 2 * second;
}

}  // namespace higgs
