#ifndef AITKEN_DOBINSKI_HPP
#define AITKEN_DOBINSKI_HPP

#include <gmpxx.h>

#include "aitken/identities.hpp"

namespace aitken::identities {

struct RatInterval {
    mpq_class lo, hi;  // lo <= hi

    bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }
};

enum class DobinskiVerdict { pass, fail, inconclusive };

struct DobinskiResult {
    unsigned n = 0, k = 0;
    RatInterval series;  // encloses e * A_{n+k,k}
    RatInterval e;       // encloses Euler's number
    mpz_class isolated;  // meaningful only when a unique integer exists
    bool unique = false;
    DobinskiVerdict verdict = DobinskiVerdict::inconclusive;
};

// Encloses sum_{m>=0} m^k (m-1)^n / m! by an exact rational partial sum plus
// a proven tail bound, encloses e the same way, and checks that exactly one
// integer A satisfies A*[e_lo,e_hi] intersecting the series interval — and
// that this A equals A_{n+k,k}. Never passes on a widened enclosure: if no
// unique integer is isolated the verdict is inconclusive.
DobinskiResult dobinski_enclosure(const Tables& t, unsigned n, unsigned k);

}  // namespace aitken::identities

#endif
