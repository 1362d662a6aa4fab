#ifndef HIGGS_SYMMETRIC_PRODUCT_HPP
#define HIGGS_SYMMETRIC_PRODUCT_HPP

#include "higgs/polynomial.hpp"

namespace higgs {

/**
 * Poincare polynomial of the n-fold symmetric product Sym^n(X) of a smooth
 * curve X of genus g, read off as the x^n coefficient of Macdonald's
 * generating series
 *
 *     sum_n P_y(Sym^n X) x^n = (1 + xy)^{2g} / ((1 - x)(1 - xy^2)),
 *
 * evaluated by truncated power-series division in x with IntPolynomial
 * coefficients in y.  The result has degree exactly 2n, constant term 1,
 * and a palindromic coefficient vector.
 *
 * Requires g >= 1 (throws std::invalid_argument otherwise).
 */
IntPolynomial sym_series_coeff(int genus, unsigned n);

}  // namespace higgs

#endif
