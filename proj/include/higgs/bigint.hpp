#ifndef HIGGS_BIGINT_HPP
#define HIGGS_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace higgs {

/// Arbitrary-precision signed integer.  Every quantity in this library is
/// exact; no floating point appears anywhere.
using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k).
inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned j = 1; j <= k; ++j) {
        result *= n - k + j;
        result /= j;  // exact at every step: result is C(n-k+j, j)
    }
    return result;
}

}  // namespace higgs

#endif
