#include "aitken/dobinski.hpp"

#include <algorithm>

namespace aitken::identities {

namespace {

mpz_class mpq_floor(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class mpq_ceil(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

mpz_class zpow(const mpz_class& b, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

DobinskiResult dobinski_enclosure(const Tables& t, unsigned n, unsigned k) {
    DobinskiResult res;
    res.n = n;
    res.k = k;
    const unsigned nk = n + k;

    // Cutoff M: beyond m >= max(4, 2(n+k)) the majorant m^{n+k}/m! at least
    // halves each step, so the tail past M is <= 2 (M+1)^{n+k}/(M+1)!.
    // Grow M further until that bound drops below 1/8.
    unsigned M = std::max(4u, 2 * nk);
    mpz_class mfact;  // (M+1)!
    mpq_class tail;
    for (;;) {
        mpz_fac_ui(mfact.get_mpz_t(), M + 1);
        tail = mpq_class(2 * zpow(M + 1, nk), mfact);
        tail.canonicalize();
        if (tail <= mpq_class(1, 8)) break;
        ++M;
    }

    // Exact partial sum S = sum_{m=0}^{M} m^k (m-1)^n / m!.
    // The m = 0 term is 0^k (-1)^n, nonzero only for k = 0 (0^0 = 1).
    mpq_class S(0);
    if (k == 0) S = (n % 2 == 0) ? 1 : -1;
    mpz_class fact(1);
    for (unsigned m = 1; m <= M; ++m) {
        fact *= m;
        mpq_class term(zpow(m, k) * zpow(mpz_class(m) - 1, n), fact);
        term.canonicalize();
        S += term;
    }
    res.series = {S, S + tail};

    // Enclose e by partial sums of sum 1/j!; tail past J is <= 2/(J+1)!.
    // J grows until the e-interval, scaled by any candidate A, is narrow.
    mpq_class abound = std::max(mpq_class(abs(mpq_ceil(res.series.hi))),
                                mpq_class(1));
    unsigned J = 3;
    mpz_class jfact;
    for (;;) {
        mpz_fac_ui(jfact.get_mpz_t(), J + 1);
        if (abound * mpq_class(2, jfact) <= mpq_class(1, 8)) break;
        ++J;
    }
    mpq_class e_lo(0);
    mpz_class f(1);
    for (unsigned j = 0; j <= J; ++j) {
        if (j > 0) f *= j;
        mpq_class term(1, f);
        term.canonicalize();
        e_lo += term;
    }
    res.e = {e_lo, e_lo + mpq_class(2, jfact)};

    // Unique-integer isolation: which A have A*[e_lo,e_hi] meeting the
    // series interval?
    mpz_class amin = mpq_floor(std::min(res.series.lo / res.e.lo,
                                        res.series.lo / res.e.hi)) - 1;
    mpz_class amax = mpq_ceil(std::max(res.series.hi / res.e.lo,
                                       res.series.hi / res.e.hi)) + 1;
    std::vector<mpz_class> hits;
    for (mpz_class a = amin; a <= amax; ++a) {
        mpq_class lo = a * res.e.lo, hi = a * res.e.hi;
        if (lo > hi) std::swap(lo, hi);
        if (hi >= res.series.lo && lo <= res.series.hi) hits.push_back(a);
    }
    if (hits.size() != 1) {
        res.verdict = DobinskiVerdict::inconclusive;
        return res;
    }
    res.unique = true;
    res.isolated = hits[0];
    if (nk > t.tri.max_n())
        throw std::invalid_argument("dobinski_enclosure: triangle too small");
    res.verdict = (res.isolated == t.tri.at(nk, k)) ? DobinskiVerdict::pass
                                                    : DobinskiVerdict::fail;
    return res;
}

}  // namespace aitken::identities
