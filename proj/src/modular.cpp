#include "aitken/modular.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace aitken::modular {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Exact A-entry along a stream direction, reduced mod p.
u32 exact_term(const core::TriangleA& tri, Direction dir, u32 idx, u64 t,
               u32 p) {
    const std::size_t n = (dir == Direction::n_dir) ? t + idx : idx + t;
    const std::size_t k = (dir == Direction::n_dir) ? idx : t;
    if (n > tri.max_n())
        throw std::invalid_argument(
            "modular: exact triangle too small for requested stream");
    return static_cast<u32>(mpz_fdiv_ui(tri.at(n, k).get_mpz_t(), p));
}

}  // namespace

Prime::Prime(u32 p) : p_(p) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("Prime: " + std::to_string(p) +
                                    " is not prime");
}

mpz_class period_bound(Prime p) {
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), p.value(), p.value());
    return (num - 1) / (p.value() - 1);
}

ModSeq seed_and_stream(const core::TriangleA& tri, Prime pr, Direction dir,
                       u32 fixed_index, u64 length) {
    const u32 p = pr.value();
    if (length < p)
        throw std::invalid_argument("seed_and_stream: length must be >= p");

    ModSeq seq;
    seq.p = p;
    seq.direction = dir;
    seq.fixed_index = fixed_index;
    seq.values.resize(length);

    for (u32 t = 0; t < p; ++t)
        seq.values[t] = static_cast<std::uint8_t>(
            exact_term(tri, dir, fixed_index, t, p));
    for (u64 t = p; t < length; ++t)
        seq.values[t] = static_cast<std::uint8_t>(
            (seq.values[t - p + 1] + seq.values[t - p]) % p);

    // The order-p recurrence is a derived fact, not a quoted one: every
    // stream re-validates its first min(length, 200) terms exactly.
    const u64 check = std::min<u64>(length, 200);
    for (u64 t = 0; t < check; ++t) {
        u32 want = exact_term(tri, dir, fixed_index, t, p);
        if (seq.values[t] != want) {
            std::ostringstream msg;
            msg << "seed_and_stream self-check failed: p=" << p
                << " fixed_index=" << fixed_index << " t=" << t << " stream="
                << unsigned(seq.values[t]) << " exact=" << want;
            throw std::logic_error(msg.str());
        }
    }
    return seq;
}

namespace {

// Polynomials of degree < p over GF(p), reduced mod x^p - x - 1.
using Poly = std::vector<u32>;

Poly poly_mul(const Poly& a, const Poly& b, u32 p) {
    std::vector<u64> conv(2 * p - 1, 0);
    for (u32 i = 0; i < p; ++i) {
        if (!a[i]) continue;
        for (u32 j = 0; j < p; ++j) conv[i + j] += u64(a[i]) * b[j] % p;
    }
    // x^{p+i} = x^{i+1} + x^i
    for (u32 i = 2 * p - 2; i >= p; --i) {
        conv[i - p + 1] += conv[i];
        conv[i - p] += conv[i];
        conv[i] = 0;
    }
    Poly r(p);
    for (u32 i = 0; i < p; ++i) r[i] = static_cast<u32>(conv[i] % p);
    return r;
}

Poly poly_xpow(const mpz_class& d, u32 p) {
    Poly base(p, 0), result(p, 0);
    result[0] = 1;
    base[1] = 1;
    mpz_class e = d;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = poly_mul(result, base, p);
        base = poly_mul(base, base, p);
        e >>= 1;
    }
    return result;
}

}  // namespace

bool period_test(const core::TriangleA& tri, Prime pr, Direction dir,
                 u32 fixed_index, const mpz_class& d, PeriodMethod method) {
    const u32 p = pr.value();
    if (d < 1) throw std::invalid_argument("period_test: d must be >= 1");

    if (method == PeriodMethod::stream_compare) {
        if (!d.fits_ulong_p())
            throw std::invalid_argument(
                "period_test: d too large for stream_compare");
        const u64 du = d.get_ui();
        ModSeq s = seed_and_stream(tri, pr, dir, fixed_index, du + p);
        for (u32 t = 0; t < p; ++t)
            if (s.values[t] != s.values[du + t]) return false;
        return true;
    }

    // powmod: x^d mod (x^p - x - 1) gives the shift-by-d map as a linear
    // combination of window entries.
    Poly c = poly_xpow(d, p);
    ModSeq s = seed_and_stream(tri, pr, dir, fixed_index, 2 * p);
    for (u32 t = 0; t < p; ++t) {
        u64 acc = 0;
        for (u32 i = 0; i < p; ++i) acc += u64(c[i]) * s.values[t + i];
        if (acc % p != s.values[t]) return false;
    }
    return true;
}

PeriodReport minimal_period(const core::TriangleA& tri, Prime pr,
                            Direction dir, u32 fixed_index,
                            const PeriodOptions& opts) {
    PeriodReport rep;
    rep.p = pr.value();
    rep.direction = dir;
    rep.fixed_index = fixed_index;
    rep.N_p = period_bound(pr);

    bool used_powmod = false;
    auto test = [&](const mpz_class& d) {
        PeriodMethod m = (d.fits_ulong_p() && d.get_ui() <= opts.stream_limit)
                             ? PeriodMethod::stream_compare
                             : PeriodMethod::powmod;
        if (m == PeriodMethod::powmod) used_powmod = true;
        bool ok = period_test(tri, pr, dir, fixed_index, d, m);
        rep.divisors_tested.emplace_back(d, ok);
        return ok;
    };

    rep.claimed_period_holds = test(rep.N_p);
    if (!rep.claimed_period_holds) {
        rep.method = used_powmod ? PeriodMethod::powmod
                                 : PeriodMethod::stream_compare;
        return rep;
    }

    // The minimal period divides N_p: walk down the divisor lattice,
    // dividing out one prime at a time while the result stays a period.
    auto factors = factorize(rep.N_p);
    mpz_class cur = rep.N_p;
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (auto& [q, e] : factors) {
            if (e == 0) continue;
            mpz_class cand = cur / q;
            if (test(cand)) {
                cur = cand;
                --e;
                reduced = true;
                break;
            }
        }
    }
    rep.minimal_period = cur;
    rep.minimal_known = true;
    rep.method =
        used_powmod ? PeriodMethod::powmod : PeriodMethod::stream_compare;
    return rep;
}

ZeroStringReport zero_string(const core::TriangleA& tri, Prime pr, u32 k,
                             Direction dir) {
    const u32 p = pr.value();
    ZeroStringReport rep;
    rep.p = p;
    rep.k = k;
    rep.direction = dir;
    rep.N_p = period_bound(pr);
    if (!rep.N_p.fits_ulong_p())
        throw std::invalid_argument("zero_string: period too long to scan");
    const u64 N = rep.N_p.get_ui();

    // Closed-form start residue; both fractions are exact integers
    // (asserted, since the formulas are stated over the integers).
    mpz_class ppow;  // p^p
    mpz_ui_pow_ui(ppow.get_mpz_t(), p, p);
    mpz_class psq = mpz_class(p - 1) * (p - 1);
    mpz_class frac = ppow - p;
    if (frac % psq != 0)
        throw std::logic_error("zero_string: (p^p - p)/(p-1)^2 not integral");
    frac /= psq;

    mpz_class predicted;
    if (dir == Direction::n_dir) {
        predicted = 1 - (mpz_class(k) - 1) * p - frac;
    } else {
        mpz_class ppm1;  // p^{p-1}
        mpz_ui_pow_ui(ppm1.get_mpz_t(), p, p - 1);
        mpz_class lin = (ppm1 - 1) * k;
        if (lin % (p - 1) != 0)
            throw std::logic_error(
                "zero_string: (p^{p-1}-1)k/(p-1) not integral");
        predicted = 1 + lin / (p - 1) - frac;
    }
    predicted %= rep.N_p;
    if (predicted < 0) predicted += rep.N_p;
    rep.predicted_start_residue = predicted.get_ui();

    // One full period plus wrap margin, scanned with a rolling zero-run
    // counter. Runs are attributed to their start position in [0, N).
    ModSeq s = seed_and_stream(tri, pr, dir, k, N + 2ull * p);
    const u64 want = p - 1;
    u64 run_start = 0, run_len = 0;
    bool prev_zero = false;
    for (u64 t = 0; t < s.values.size(); ++t) {
        if (s.values[t] == 0) {
            if (!prev_zero) {
                run_start = t;
                run_len = 0;
            }
            ++run_len;
            prev_zero = true;
        } else {
            if (prev_zero && run_len >= want && run_start < N) {
                ++rep.runs_in_period;
                if (run_start == rep.predicted_start_residue) {
                    rep.start = run_start;
                    rep.length_found = run_len;
                    rep.pass = true;
                }
            }
            prev_zero = false;
        }
    }
    if (prev_zero && run_len >= want && run_start < N) {
        ++rep.runs_in_period;
        if (run_start == rep.predicted_start_residue) {
            rep.start = run_start;
            rep.length_found = run_len;
            rep.pass = true;
        }
    }
    return rep;
}

std::vector<CongruenceFailure> verify_thm41(const core::TriangleA& tri,
                                            Prime pr, unsigned n_max,
                                            unsigned m_max, unsigned k_max) {
    const u32 p = pr.value();
    if (n_max + std::size_t(p) * m_max + k_max > tri.max_n())
        throw std::invalid_argument("verify_thm41: triangle too small");
    std::vector<CongruenceFailure> fails;
    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned m = 0; m <= m_max; ++m)
            for (unsigned k = 0; k <= k_max; ++k) {
                u32 lhs = static_cast<u32>(
                    mpz_fdiv_ui(tri.at(n + p * m + k, k).get_mpz_t(), p));
                u32 rhs = static_cast<u32>(
                    mpz_fdiv_ui(tri.at(n + m + k, m + k).get_mpz_t(), p));
                if (lhs != rhs)
                    fails.push_back({p, (long)n, (long)m, (long)k,
                                     "A_{n+pm+k,k} = A_{n+m+k,m+k}", lhs,
                                     rhs});
            }
    return fails;
}

std::vector<CongruenceFailure> verify_cor42(const core::TriangleA& tri,
                                            Prime pr, unsigned n_max,
                                            unsigned m_max) {
    const u32 p = pr.value();
    if ((n_max + 1) * std::size_t(p) > tri.max_n() ||
        n_max + m_max + 1 > tri.max_n())
        throw std::invalid_argument("verify_cor42: triangle too small");
    core::SeqTable bell =
        core::bell_table(std::max<unsigned>(n_max + p * m_max, (n_max + 1) * p) + 1);
    auto bmod = [&](unsigned i) {
        return static_cast<u32>(mpz_fdiv_ui(bell[i].get_mpz_t(), p));
    };
    auto amod = [&](unsigned n, unsigned k) {
        return static_cast<u32>(mpz_fdiv_ui(tri.at(n, k).get_mpz_t(), p));
    };
    std::vector<CongruenceFailure> fails;
    auto expect = [&](u32 lhs, u32 rhs, long n, long m, const char* rel) {
        if (lhs != rhs) fails.push_back({p, n, m, -1, rel, lhs, rhs});
    };
    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned m = 0; m <= m_max; ++m)
            expect(bmod(n + p * m), amod(n + m + 1, m + 1), n, m,
                   "B_{n+pm} = A_{n+m+1,m+1}");
        expect(bmod(n + p), (bmod(n) + bmod(n + 1)) % p, n, -1,
               "B_{n+p} = B_n + B_{n+1}");
        expect(amod((n + 1) * p, p), (bmod(n) + bmod(n + 1)) % p, n, -1,
               "A_{(n+1)p,p} = B_n + B_{n+1}");
        expect(bmod(n * p), bmod(n + 1), n, -1, "B_{np} = B_{n+1}");
    }
    return fails;
}

std::vector<CongruenceFailure> verify_thm43(const core::TriangleA& tri,
                                            Prime pr, unsigned m_max,
                                            unsigned n_max, unsigned k_max) {
    const u32 p = pr.value();
    std::vector<CongruenceFailure> fails;
    for (unsigned m = 0; m <= m_max; ++m) {
        mpz_class pm;
        mpz_ui_pow_ui(pm.get_mpz_t(), p, m);
        unsigned pmu = static_cast<unsigned>(pm.get_ui());
        if (n_max + pmu + k_max > tri.max_n())
            throw std::invalid_argument("verify_thm43: triangle too small");
        for (unsigned n = 0; n <= n_max; ++n)
            for (unsigned k = 0; k <= k_max; ++k) {
                u32 lhs = static_cast<u32>(
                    mpz_fdiv_ui(tri.at(n + pmu + k, k).get_mpz_t(), p));
                u32 a0 = static_cast<u32>(
                    mpz_fdiv_ui(tri.at(n + k, k).get_mpz_t(), p));
                u32 a1 = static_cast<u32>(
                    mpz_fdiv_ui(tri.at(n + k + 1, k).get_mpz_t(), p));
                u32 rhs = static_cast<u32>((u64(m % p) * a0 + a1) % p);
                if (lhs != rhs)
                    fails.push_back({p, (long)n, (long)m, (long)k,
                                     "A_{n+p^m+k,k} = m A_{n+k,k} + A_{n+k+1,k}",
                                     lhs, rhs});
            }
    }
    return fails;
}

namespace {

bool biconditional_at(const core::TriangleA& tri, Prime pr, Direction dir,
                      u64 n, u32 k) {
    const u32 p = pr.value();
    ModSeq s = seed_and_stream(tri, pr, dir, k, n + u64(p) * (p - 1) + 2);
    bool left = true;
    for (u32 m = 0; m + 1 <= p - 1 && left; ++m)  // m = 0 .. p-2
        left = (s.values[n + m] == 0);
    bool right = true;
    for (u32 m = 1; m <= p - 1 && right; ++m)
        right = (s.values[n + m] == s.values[n + u64(p) * m]);
    return left == right;
}

}  // namespace

bool verify_thm47(const core::TriangleA& tri, Prime pr, u64 n, u32 k) {
    return biconditional_at(tri, pr, Direction::n_dir, n, k);
}

bool verify_thm49(const core::TriangleA& tri, Prime pr, u64 n, u32 k) {
    return biconditional_at(tri, pr, Direction::k_dir, n, k);
}

}  // namespace aitken::modular
