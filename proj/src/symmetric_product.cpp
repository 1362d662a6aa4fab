#include "higgs/symmetric_product.hpp"

#include <stdexcept>
#include <vector>

namespace higgs {

IntPolynomial sym_series_coeff(int genus, unsigned n) {
    if (genus < 1) throw std::invalid_argument("sym_series_coeff: genus must be at least 1");
    const unsigned tg = 2u * static_cast<unsigned>(genus);

    // Denominator in x:  (1 - x)(1 - x y^2) = 1 - (1 + y^2) x + y^2 x^2.
    // Series division c = numerator / denominator becomes the recurrence
    //   c[j] = num[j] + (1 + y^2) c[j-1] - y^2 c[j-2],
    // where num[j] = C(2g, j) y^j is the x^j coefficient of (1 + x y)^{2g}.
    const IntPolynomial d1{1, 0, 1};
    const IntPolynomial d2 = IntPolynomial::monomial(1, 2);

    std::vector<IntPolynomial> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        IntPolynomial term =
            j <= tg ? IntPolynomial::monomial(binomial(tg, j), j) : IntPolynomial();
        if (j >= 1) term = term + d1 * c[j - 1];
        if (j >= 2) term = term - d2 * c[j - 2];
        c[j] = std::move(term);
    }
    return c[n];
}

}  // namespace higgs
