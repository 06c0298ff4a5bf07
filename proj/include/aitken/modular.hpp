#ifndef AITKEN_MODULAR_HPP
#define AITKEN_MODULAR_HPP

#include <cstdint>
#include <vector>

#include "aitken/exact_core.hpp"
#include "aitken/factor.hpp"

namespace aitken::modular {

// A prime modulus, validated at construction.
class Prime {
  public:
    explicit Prime(std::uint32_t p);
    std::uint32_t value() const { return p_; }

  private:
    std::uint32_t p_;
};

enum class Direction {
    n_dir,  // t -> A_{t + fixed_k, fixed_k}, fixed column
    k_dir,  // t -> A_{fixed_n + t, t}, fixed diagonal offset
};

// N_p = (p^p - 1)/(p - 1), the proven period of both directions mod p.
mpz_class period_bound(Prime p);

// Residue stream along one direction of the triangle. After the first p
// exactly-seeded terms every value obeys x_{t+p} = x_{t+1} + x_t (mod p).
struct ModSeq {
    std::uint32_t p = 0;
    Direction direction = Direction::n_dir;
    std::uint32_t fixed_index = 0;
    std::vector<std::uint8_t> values;
};

// Seeds p terms from the exact triangle, streams the rest by the order-p
// recurrence, and self-checks the first min(length, 200) terms against the
// exact triangle reduced mod p. The triangle must cover rows up to
// fixed_index + min(length, 200) + p. Throws std::logic_error on a
// self-check mismatch.
ModSeq seed_and_stream(const core::TriangleA& tri, Prime p, Direction dir,
                       std::uint32_t fixed_index, std::uint64_t length);

enum class PeriodMethod {
    stream_compare,  // generate d + p terms, compare state windows
    powmod,          // x^d mod (x^p - x - 1) over GF(p), applied to the seed
};

// True iff shifting the stream by d maps the state vector to itself.
bool period_test(const core::TriangleA& tri, Prime p, Direction dir,
                 std::uint32_t fixed_index, const mpz_class& d,
                 PeriodMethod method);

struct PeriodReport {
    std::uint32_t p = 0;
    Direction direction = Direction::n_dir;
    std::uint32_t fixed_index = 0;
    mpz_class N_p;
    bool claimed_period_holds = false;
    bool minimal_known = false;
    mpz_class minimal_period;
    std::vector<std::pair<mpz_class, bool>> divisors_tested;
    PeriodMethod method = PeriodMethod::stream_compare;
};

struct PeriodOptions {
    // stream_compare is used for d below this bound, powmod above.
    std::uint64_t stream_limit = 1'000'000;
};

// Verifies N_p is a period, then descends its divisor lattice to the true
// minimum. Factorizations of N_p are computed, never hard-coded.
PeriodReport minimal_period(const core::TriangleA& tri, Prime p, Direction dir,
                            std::uint32_t fixed_index,
                            const PeriodOptions& opts = {});

struct ZeroStringReport {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    Direction direction = Direction::n_dir;
    mpz_class N_p;
    std::uint64_t start = 0;         // first index of the located run
    std::uint64_t length_found = 0;  // maximal run length at that start
    std::uint64_t predicted_start_residue = 0;  // M_{p,k} or U_{p,k} mod N_p
    std::uint64_t runs_in_period = 0;  // maximal runs of length >= p-1 seen
    bool pass = false;  // run exists and start matches the predicted residue
};

// Scans one full period for a run of >= p-1 consecutive zeros and checks
// its start against the closed-form residue (M_{p,k} for the n-direction,
// U_{p,k} for the k-direction).
ZeroStringReport zero_string(const core::TriangleA& tri, Prime p,
                             std::uint32_t k, Direction dir);

struct CongruenceFailure {
    std::uint32_t p = 0;
    long n = -1, m = -1, k = -1;
    const char* relation = "";
    std::uint32_t lhs = 0, rhs = 0;
};

// Theorem: A_{n+pm+k,k} = A_{n+m+k,m+k} (mod p), over the full grid.
std::vector<CongruenceFailure> verify_thm41(const core::TriangleA& tri,
                                            Prime p, unsigned n_max,
                                            unsigned m_max, unsigned k_max);

// The four specializations: A_{n+pm,m} vs B-values, Touchard and Comtet.
std::vector<CongruenceFailure> verify_cor42(const core::TriangleA& tri,
                                            Prime p, unsigned n_max,
                                            unsigned m_max);

// A_{n+p^m+k,k} = m A_{n+k,k} + A_{n+k+1,k} (mod p).
std::vector<CongruenceFailure> verify_thm43(const core::TriangleA& tri,
                                            Prime p, unsigned m_max,
                                            unsigned n_max, unsigned k_max);

// Biconditional at (n,k): p-1 zeros from position n in the n-direction
// stream iff the stream agrees with its p-fold dilation there.
bool verify_thm47(const core::TriangleA& tri, Prime p, std::uint64_t n,
                  std::uint32_t k);

// k-direction analogue of the biconditional. No proof is relied upon;
// this is an empirical check with the same machinery.
bool verify_thm49(const core::TriangleA& tri, Prime p, std::uint64_t n,
                  std::uint32_t k);

}  // namespace aitken::modular

#endif
