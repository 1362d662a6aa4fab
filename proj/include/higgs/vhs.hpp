#ifndef HIGGS_VHS_HPP
#define HIGGS_VHS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "higgs/bigint.hpp"
#include "higgs/curve.hpp"
#include "higgs/polynomial.hpp"
#include "higgs/rational.hpp"

namespace higgs {

/**
 * The type of a circle-action fixed point: a variation of Hodge structure
 * E = Lambda_1 + ... + Lambda_n with the Higgs field shifting the summands
 * one step, phi: Lambda_i -> Lambda_{i+1} (x) omega_X.  Only the ranks and
 * degrees of the summands carry topological information, and both are
 * constant on connected components of the fixed-point set.
 */
class VHSType {
public:
    /// Requires equally long, nonempty lists with every rank positive;
    /// throws std::invalid_argument otherwise.
    VHSType(std::vector<int> ranks, std::vector<long long> degrees);

    const std::vector<int>& ranks() const noexcept { return ranks_; }
    const std::vector<long long>& degrees() const noexcept { return degrees_; }

    /// Number n of summands in the chain.
    std::size_t length() const noexcept { return ranks_.size(); }

    long long total_rank() const noexcept;
    long long total_degree() const noexcept;

    friend bool operator==(const VHSType&, const VHSType&) = default;

private:
    std::vector<int> ranks_;
    std::vector<long long> degrees_;
};

/// Renders "(1,1; 1,0)" style: ranks, then degrees.
std::string to_string(const VHSType& t);

/// Whether a component's numbers were checked against published
/// calculations or extrapolated beyond them.
enum class Provenance { PaperVerified, Extrapolated };

/// "paper-verified" or "extrapolated" (the stable tokens used in output).
std::string to_string(Provenance p);

/**
 * One connected component of the fixed-point set: its chain type, Morse
 * index, Poincare polynomial when computed, and a short description of
 * the variety it is.
 */
struct FixedComponentReport {
    VHSType type;
    BigInt morse_index;
    std::optional<IntPolynomial> component_poly;
    std::string description;
    Provenance provenance = Provenance::Extrapolated;
};

/// Exact slope degree/rank.  Requires rank >= 1.
Rational slope(long long rank, long long degree);

/**
 * Stability of a line-bundle chain (all ranks 1): true iff every link can
 * carry a nonzero Higgs map, i.e. deg Hom(Lambda_i, Lambda_{i+1} (x) omega)
 * = d_{i+1} - d_i + (2g - 2) >= 0 for every i, and every phi-invariant
 * tail Lambda_k + ... + Lambda_n (2 <= k <= n) has slope strictly below
 * the total slope.
 *
 * A chain of length one is the zero-Higgs locus of stable bundles and is
 * admissible by convention.  Chains of length >= 2 with a step of rank
 * above one raise UnsupportedType: their stability needs the theory of
 * holomorphic triples, which is not implemented here.  Requires g >= 2.
 */
bool is_admissible_chain(const CurveContext& ctx, const VHSType& t);

/**
 * All fixed-point types of the rank-2 moduli with fixed determinant of
 * degree 1: the type-(2) locus of stable bundles first, then the type
 * (1,1) chains with degrees (m, 1 - m) for m = 1..g-1.  Every returned
 * type satisfies is_admissible_chain.  Requires g >= 2 and d = 1 (other
 * odd degrees normalize to 1 by tensoring; UnsupportedDegree otherwise).
 */
std::vector<VHSType> enumerate_rank2_fixed_types(const CurveContext& ctx, long long degree);

/**
 * Morse index beta of the moment map at a fixed point of the given type:
 *
 *   beta = (4g-4) [n>2] sum_{i=1}^{n-2} sum_{j=i+2}^{n} r_i r_j
 *          - 2 [n>1] sum_{i=1}^{n-1} ( deg(Lambda_i^* (x) Lambda_{i+1})
 *                                      + (1-g) r_i r_{i+1} ),
 *
 * with deg(Lambda_i^* (x) Lambda_{i+1}) = -r_{i+1} d_i + r_i d_{i+1}.
 * On admissible types the value is even and nonnegative; length-1 types
 * always give 0.  Requires g >= 2.
 */
BigInt morse_index(const CurveContext& ctx, const VHSType& t);

}  // namespace higgs

#endif
