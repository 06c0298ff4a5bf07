#ifndef AITKEN_FACTOR_HPP
#define AITKEN_FACTOR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>

namespace aitken::modular {

// Deterministic Miller-Rabin, valid for all n < 2^64.
bool is_prime_u64(std::uint64_t n);

// Primality for arbitrary n: deterministic below 2^64, Miller-Rabin with
// fixed bases above (adequate for every N_p this artifact touches).
bool is_prime(const mpz_class& n);

// Full factorization: trial division by small primes, Pollard-Brent rho
// for what remains. prime -> exponent, n >= 1.
std::map<mpz_class, unsigned> factorize(mpz_class n);

}  // namespace aitken::modular

#endif
