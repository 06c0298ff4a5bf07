#include "aitken/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace aitken::modular {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n, u64 a) {
    if (a % n == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // This base set is deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                  29ull, 31ull, 37ull})
        if (!miller_rabin(n, a)) return false;
    return true;
}

bool is_prime(const mpz_class& n) {
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64)
        return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

// Pollard-Brent cycle finding; n must be odd composite, not a prime power
// caught earlier. Returns a nontrivial factor.
mpz_class pollard_brent(const mpz_class& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        mpz_class y = 2, g = 1, q = 1, x, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long j = 0; j < r && g == 1; j += m) {
                ys = y;
                unsigned long lim = std::min(m, r - j);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x > y ? x - y : y - x) % n;
                }
                g = gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(mpz_class(x > ys ? x - ys : ys - x), n);
            }
        }
        if (g != n) return g;
        // cycle degenerated for this c; retry with the next polynomial
    }
}

void factor_rec(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::map<mpz_class, unsigned> factorize(mpz_class n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::map<mpz_class, unsigned> out;
    for (unsigned long p = 2; p < 100000 && mpz_class(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    factor_rec(n, out);
    return out;
}

}  // namespace aitken::modular
