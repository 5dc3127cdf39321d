#ifndef NCHO_CONSTANTS_HPP
#define NCHO_CONSTANTS_HPP

#include "ncho/bigfloat.hpp"

namespace ncho {

// pi at the given precision (cached per precision).
BigFloat const_pi(mpfr_prec_t prec);

// Riemann zeta(m) for integer m >= 2 by Euler-Maclaurin summation with an
// explicit tail bound below the last retained term. Cached per (m, prec);
// if NCHO_CACHE_DIR is set, values persist across runs.
BigFloat const_zeta(int m, mpfr_prec_t prec);

// Hurwitz zeta(s, a) for integer s >= 2 and rational a > 0, Euler-Maclaurin.
BigFloat hurwitz_zeta(int s, const Rat& a, mpfr_prec_t prec);

}  // namespace ncho

#endif
