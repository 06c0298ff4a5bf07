#include "aitken/identities.hpp"

#include <sstream>
#include <stdexcept>

namespace aitken::identities {

using core::Int;
using core::Nat;
using core::binomial;

Tables Tables::build(unsigned max_n) {
    Tables t;
    t.tri = core::a_triangle(max_n);
    t.bell = core::bell_table(max_n + 1);
    t.v = core::v_table(max_n + 3);
    t.der = core::derangement_table(max_n);
    t.stirling = core::stirling_tables(max_n);
    return t;
}

namespace {

// x^e with the 0^0 = 1 convention; x may be negative.
mpz_class ipow(long x, long e) {
    if (e < 0) throw std::invalid_argument("ipow: negative exponent");
    mpz_class b(x), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

int par(long e) { return (e % 2 == 0) ? 1 : -1; }

const Nat& A(const Tables& t, long n, long k) {
    if (n < 0 || k < 0 || k > n ||
        static_cast<std::size_t>(n) > t.tri.max_n())
        throw std::invalid_argument("identity check: A-index out of range");
    return t.tri.at(n, k);
}

const Nat& seq(const core::SeqTable& s, long i) {
    if (i < 0 || static_cast<std::size_t>(i) >= s.values.size())
        throw std::invalid_argument("identity check: sequence index out of range");
    return s.values[i];
}

const Nat& S2(const Tables& t, long n, long k) {
    if (n < 0 || k < 0 || k > n ||
        static_cast<std::size_t>(n) > t.stirling.max_n())
        throw std::invalid_argument("identity check: S(n,k) out of range");
    return t.stirling.second[n][k];
}

const Int& S1(const Tables& t, long n, long k) {
    if (n < 0 || k < 0 || k > n ||
        static_cast<std::size_t>(n) > t.stirling.max_n())
        throw std::invalid_argument("identity check: s(n,k) out of range");
    return t.stirling.first_signed[n][k];
}

mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

const std::vector<IdentityInfo> kCatalog = {
    {IdentityId::I_1_2, "I-1.2", "n", false},
    {IdentityId::I_BV, "I-BV", "n", false},
    {IdentityId::I_VINV, "I-VINV", "n", false},
    {IdentityId::I_1_5, "I-1.5", "n,k", false},
    {IdentityId::I_2_4, "I-2.4", "n,m", false},
    {IdentityId::I_2_5, "I-2.5", "n,m,k", false},
    {IdentityId::I_2_3, "I-2.3", "n,m", false},
    {IdentityId::I_2_3K0, "I-2.3k0", "n,m", false},
    {IdentityId::I_R2_6, "I-R2.6", "n,m", false},
    {IdentityId::I_2_6, "I-2.6", "n,k", false},
    {IdentityId::I_2_7, "I-2.7", "n,k", false},
    {IdentityId::I_3_1, "I-3.1", "n", true},
    {IdentityId::I_3_2, "I-3.2", "n", true},
    {IdentityId::I_3_3, "I-3.3", "n", false},
    {IdentityId::I_3_4, "I-3.4", "n", false},
    {IdentityId::I_3_5, "I-3.5", "n", true},
    {IdentityId::I_3_6, "I-3.6", "n", true},
    {IdentityId::I_3_4A, "I-3.4a", "n", true},
    {IdentityId::I_3_4B, "I-3.4b", "n", true},
    {IdentityId::I_3_5A, "I-3.5a", "n,m", false},
    {IdentityId::I_3_5B, "I-3.5b", "n,m", false},
    {IdentityId::I_3_7, "I-3.7", "n,k", true},
    {IdentityId::I_3_8, "I-3.8", "n,k", true},
    {IdentityId::I_3_9, "I-3.9", "n,k", true},
    {IdentityId::I_C3_7A, "I-C3.7a", "n,k", false},
    {IdentityId::I_C3_7B, "I-C3.7b", "n,k", false},
    {IdentityId::I_3_10, "I-3.10", "n,k", false},
    {IdentityId::I_3_11, "I-3.11", "n,k,m,i", false},
    {IdentityId::I_3_12, "I-3.12", "n,m,k", false},
    {IdentityId::I_3_13, "I-3.13", "n,m,k", false},
    {IdentityId::I_3_14, "I-3.14", "n,m,k", false},
    {IdentityId::I_3_16, "I-3.16", "n", false},
    {IdentityId::I_3_17, "I-3.17", "n", false},
};

void require_params(const IdentityInfo& inf, const Params& p) {
    std::string missing;
    for (const char* c = inf.param_list; *c; ++c) {
        if (*c == ',') continue;
        int v = -1;
        switch (*c) {
            case 'n': v = p.n; break;
            case 'm': v = p.m; break;
            case 'k': v = p.k; break;
            case 'i': v = p.i; break;
        }
        if (v < 0) missing += *c;
    }
    if (!missing.empty())
        throw std::invalid_argument(std::string("identity ") + inf.name +
                                    ": missing parameter(s) " + missing);
}

IdentityCase make_case(IdentityId id, const Params& p, const mpz_class& lhs,
                       const mpz_class& rhs) {
    return {id, p, lhs == rhs, lhs.get_str(), rhs.get_str()};
}

IdentityCase make_case(IdentityId id, const Params& p, const RatPoly& lhs,
                       const RatPoly& rhs) {
    return {id, p, lhs == rhs, lhs.str(), rhs.str()};
}

}  // namespace

const std::vector<IdentityInfo>& catalog() { return kCatalog; }

const IdentityInfo& info(IdentityId id) {
    for (const auto& e : kCatalog)
        if (e.id == id) return e;
    throw std::logic_error("identity missing from catalog");
}

std::optional<IdentityId> id_from_string(const std::string& name) {
    for (const auto& e : kCatalog)
        if (name == e.name) return e.id;
    return std::nullopt;
}

std::string Params::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    auto put = [&](const char* nm, int v) {
        if (v < 0) return;
        if (!first) os << ",";
        os << nm << ":" << v;
        first = false;
    };
    put("n", n);
    put("m", m);
    put("k", k);
    put("i", i);
    os << "}";
    return os.str();
}

RatPoly bell_poly(const Tables& t, unsigned k) {
    std::vector<mpq_class> c(k + 1, mpq_class(0));
    for (unsigned j = 0; j <= k; ++j) c[j] = mpq_class(S2(t, k, j));
    return RatPoly(std::move(c));
}

RatPoly binom_poly(unsigned k) {
    RatPoly r{mpq_class(1)};
    for (unsigned j = 0; j < k; ++j)
        r = r * RatPoly(std::vector<mpq_class>{mpq_class(-static_cast<long>(j)),
                                               mpq_class(1)});
    return r * mpq_class(mpz_class(1), factorial(k));
}

IdentityCase check(const Tables& t, IdentityId id, const Params& p) {
    const IdentityInfo& inf = info(id);
    require_params(inf, p);
    const long n = p.n, m = p.m, k = p.k, i = p.i;
    const RatPoly yplus1(std::vector<mpq_class>{1, 1});
    const RatPoly y = RatPoly::y();

    switch (id) {
        case IdentityId::I_1_2: {
            mpz_class rhs = 0;
            for (long j = 0; j <= n; ++j) rhs += binomial(n, j) * seq(t.bell, j);
            return make_case(id, p, seq(t.bell, n + 1), rhs);
        }
        case IdentityId::I_BV:
            return make_case(id, p, seq(t.bell, n),
                             mpz_class(seq(t.v, n) + seq(t.v, n + 1)));
        case IdentityId::I_VINV: {
            mpz_class b = 0, v = 0;
            for (long j = 0; j <= n; ++j) {
                b += binomial(n, j) * seq(t.v, j);
                v += par(n - j) * binomial(n, j) * seq(t.bell, j);
            }
            IdentityCase c{id, p,
                           b == seq(t.bell, n) && v == seq(t.v, n),
                           seq(t.bell, n).get_str() + ";" + seq(t.v, n).get_str(),
                           b.get_str() + ";" + v.get_str()};
            return c;
        }
        case IdentityId::I_1_5: {
            if (k > n)
                throw std::invalid_argument("I-1.5 requires k <= n");
            mpz_class rhs = seq(t.v, n);
            for (long j = 0; j < k; ++j) rhs += A(t, n - 1, j);
            return make_case(id, p, A(t, n, k), rhs);
        }
        case IdentityId::I_2_4: {
            mpz_class rhs = 0;
            for (long j = 0; j <= n; ++j)
                rhs += par(n - j) * binomial(n, j) * seq(t.bell, m + j);
            return make_case(id, p, A(t, n + m, m), rhs);
        }
        case IdentityId::I_2_5: {
            mpz_class rhs = 0;
            for (long j = 0; j <= m; ++j)
                rhs += binomial(m, j) * A(t, n + k + j, k);
            return make_case(id, p, A(t, n + m + k, m + k), rhs);
        }
        case IdentityId::I_2_3: {
            mpz_class rhs = 0;
            for (long j = 0; j <= m; ++j)
                rhs += binomial(m, j) * seq(t.bell, n + j);
            return make_case(id, p, A(t, n + m + 1, m + 1), rhs);
        }
        case IdentityId::I_2_3K0: {
            mpz_class rhs = 0;
            for (long j = 0; j <= m; ++j)
                rhs += binomial(m, j) * seq(t.v, n + j);
            return make_case(id, p, A(t, n + m, m), rhs);
        }
        case IdentityId::I_R2_6: {
            mpz_class lhs = 0, rhs = 0;
            for (long j = 0; j <= n; ++j)
                lhs += par(n - j) * binomial(n, j) * seq(t.bell, m + j + 1);
            for (long j = 0; j <= m; ++j)
                rhs += binomial(m, j) * seq(t.bell, n + j);
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_2_6: {
            mpz_class rhs = 0;
            for (long r = 0; r <= n; ++r)
                for (long j = 0; j <= k; ++j)
                    rhs += binomial(n, r) * seq(t.v, r) * S2(t, k, j) *
                           ipow(j, n - r);
            return make_case(id, p, A(t, n + k, k), rhs);
        }
        case IdentityId::I_2_7: {
            mpz_class rhs = 0;
            for (long r = 0; r <= n; ++r)
                for (long j = 0; j <= k; ++j)
                    rhs += binomial(n, r) * seq(t.bell, r) * S2(t, k, j) *
                           ipow(j - 1, n - r);
            return make_case(id, p, A(t, n + k, k), rhs);
        }
        case IdentityId::I_3_1: {
            RatPoly lhs, rhs;
            for (long j = 0; j <= n; ++j) {
                mpq_class cl(par(n - j) * binomial(n, j) * A(t, n, j));
                lhs += yplus1.pow(j) * cl;
                rhs += y.pow(j) * mpq_class(binomial(n, j) * seq(t.bell, j));
            }
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_2: {
            RatPoly lhs, rhs;
            for (long j = 0; j <= n; ++j) {
                lhs += y.pow(j) * mpq_class(binomial(n, j) * A(t, n, j));
                mpq_class cr(par(n - j) * binomial(n, j) * seq(t.bell, j));
                rhs += yplus1.pow(j) * cr;
            }
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_3: {
            mpz_class lhs = 0;
            for (long j = 0; j <= n; ++j)
                lhs += par(n - j) * binomial(n, j) * A(t, n, j);
            return make_case(id, p, lhs, mpz_class(1));
        }
        case IdentityId::I_3_4: {
            mpz_class lhs = 0;
            for (long j = 0; j <= n; ++j)
                lhs += par(n - j) * binomial(n, j) * ipow(2, j) * A(t, n, j);
            return make_case(id, p, lhs, seq(t.bell, n + 1));
        }
        case IdentityId::I_3_5: {
            RatPoly lhs, rhs;
            for (long j = 0; j <= n; ++j) {
                lhs += bell_poly(t, j + 1) *
                       mpq_class(par(n - j) * binomial(n, j) * A(t, n, j));
                rhs += bell_poly(t, j) *
                       mpq_class(binomial(n, j) * seq(t.bell, j));
            }
            return make_case(id, p, lhs, y * rhs);
        }
        case IdentityId::I_3_6: {
            RatPoly lhs, rhs;
            for (long j = 0; j <= n; ++j) {
                lhs += bell_poly(t, j + 1) *
                       mpq_class(par(n - j) * binomial(n, j) * seq(t.bell, j));
                rhs += bell_poly(t, j) * mpq_class(binomial(n, j) * A(t, n, j));
            }
            return make_case(id, p, lhs, y * rhs);
        }
        case IdentityId::I_3_4A: {
            RatPoly lhs, rhs;
            for (long j = 0; j <= n; ++j) {
                lhs += binom_poly(j).shift(j) *
                       mpq_class(par(n - j) * binomial(n, j) * A(t, n, j));
                rhs += binom_poly(j) *
                       mpq_class(binomial(n, j) * seq(t.bell, j));
            }
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_4B: {
            RatPoly lhs, rhs;
            for (long j = 0; j <= n; ++j) {
                lhs += binom_poly(j).shift(j) *
                       mpq_class(par(n - j) * binomial(n, j) * seq(t.bell, j));
                rhs += binom_poly(j) * mpq_class(binomial(n, j) * A(t, n, j));
            }
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_5A: {
            mpz_class lhs = 0, rhs = 0;
            for (long j = 0; j <= n; ++j) {
                lhs += par(n - j) * binomial(n, j) * A(t, n + m, m + j) *
                       seq(t.bell, j);
                rhs += binomial(n, j) * A(t, n + m - j, m) * A(t, n, j);
            }
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_5B: {
            mpz_class lhs = 0, rhs = 0;
            for (long j = 0; j <= n; ++j) {
                lhs += par(n - j) * binomial(n, j) * A(t, n + m, m + j) *
                       A(t, n, j);
                rhs += binomial(n, j) * A(t, n + m - j, m) * seq(t.bell, j);
            }
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_7: {
            RatPoly lhs, rhs;
            for (long j = 0; j <= n; ++j) {
                lhs += yplus1.pow(n - j) *
                       mpq_class(binomial(n, j) * A(t, k + j, k));
                rhs += y.pow(n - j) *
                       mpq_class(binomial(n, j) * seq(t.bell, k + j));
            }
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_8: {
            RatPoly lhs, rhs;
            for (long j = 0; j <= n; ++j) {
                lhs += bell_poly(t, n - j + 1) *
                       mpq_class(binomial(n, j) * A(t, k + j, k));
                rhs += bell_poly(t, n - j) *
                       mpq_class(binomial(n, j) * seq(t.bell, k + j));
            }
            return make_case(id, p, lhs, y * rhs);
        }
        case IdentityId::I_3_9: {
            RatPoly lhs, rhs;
            for (long j = 0; j <= n; ++j) {
                lhs += binom_poly(n - j).shift(n - j) *
                       mpq_class(binomial(n, j) * A(t, k + j, k));
                rhs += binom_poly(n - j) *
                       mpq_class(binomial(n, j) * seq(t.bell, k + j));
            }
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_C3_7A: {
            mpz_class rhs = 0;
            for (long j = 0; j <= n; ++j)
                rhs += binomial(n, j) * A(t, k + j, k);
            return make_case(id, p, seq(t.bell, n + k), rhs);
        }
        case IdentityId::I_C3_7B: {
            mpz_class rhs = 0;
            for (long j = 0; j <= n; ++j)
                rhs += binomial(n, j) * A(t, k + j, k) * ipow(2, n - j);
            return make_case(id, p, A(t, n + k + 1, n + 1), rhs);
        }
        case IdentityId::I_3_10: {
            mpz_class lhs = 0, rhs = 0;
            for (long j = 0; j <= n; ++j) {
                lhs += binomial(n, j) * A(t, k + j, k) * factorial(n - j);
                rhs += binomial(n, j) * seq(t.bell, k + j) * seq(t.der, n - j);
            }
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_11: {
            mpz_class lhs = 0, rhs = 0;
            for (long j = 0; j <= n; ++j) {
                lhs += par(n - j) * binomial(n, j) * A(t, k + j, k) *
                       A(t, m + i + j, m);
                rhs += par(n - j) * binomial(n, j) * A(t, n + m + i, n + m - j) *
                       seq(t.bell, k + j);
            }
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_12: {
            mpz_class lhs = 0, rhs = 0;
            for (long j = 0; j <= m; ++j)
                lhs += S1(t, m, j) * A(t, n + k + j, k + j);
            for (long ii = 0; ii <= k; ++ii)
                for (long r = 0; r <= n; ++r)
                    rhs += binomial(k, ii) * binomial(n, r) *
                           ipow(m, n + k - ii - r) * A(t, r + ii, ii);
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_13: {
            mpz_class lhs = 0, rhs = 0;
            for (long j = 0; j <= m; ++j)
                lhs += S1(t, m, j) * A(t, n + k + j, k + j);
            for (long ii = 0; ii <= k; ++ii)
                for (long r = 0; r <= n; ++r)
                    rhs += binomial(k, ii) * binomial(n, r) * ipow(m, k - ii) *
                           ipow(m - 1, n - r) * seq(t.bell, r + ii);
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_14: {
            mpz_class lhs = 0, rhs = 0;
            for (long j = 0; j <= m; ++j)
                lhs += S1(t, m, j) * A(t, n + k + j + 1, n + 1);
            for (long ii = 0; ii <= k; ++ii)
                for (long r = 0; r <= n; ++r)
                    rhs += binomial(k, ii) * binomial(n, r) * ipow(m, k - ii) *
                           ipow(m + 1, n - r) * seq(t.bell, r + ii);
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_16: {
            mpz_class lhs = 0;
            for (long j = 0; j <= n; ++j) lhs += (j + 1) * A(t, n, j);
            mpz_class rhs = (n + 2) * seq(t.bell, n + 1) - seq(t.v, n + 3);
            return make_case(id, p, lhs, rhs);
        }
        case IdentityId::I_3_17: {
            mpz_class lhs = 0;
            for (long j = 0; j <= n; ++j) lhs += (n - j + 1) * A(t, n, j);
            mpz_class rhs = seq(t.v, n + 3) - (n + 2) * seq(t.v, n + 1);
            return make_case(id, p, lhs, rhs);
        }
    }
    throw std::invalid_argument("unknown identity id");
}

CheckAllResult check_all(const Tables& t, int grid_max, int poly_grid_max) {
    CheckAllResult res;
    auto run = [&](IdentityId id, const Params& p) {
        IdentityCase c = check(t, id, p);
        ++res.cases_run;
        if (!c.pass) res.failures.push_back(std::move(c));
    };
    for (const auto& inf : kCatalog) {
        const int g = inf.polynomial ? poly_grid_max : grid_max;
        const std::string pl = inf.param_list;
        if (pl == "n") {
            for (int n = 0; n <= g; ++n) run(inf.id, {.n = n});
        } else if (pl == "n,k") {
            for (int n = 0; n <= g; ++n)
                for (int k = 0; k <= g; ++k) {
                    if (inf.id == IdentityId::I_1_5 && k > n) continue;
                    run(inf.id, {.n = n, .k = k});
                }
        } else if (pl == "n,m") {
            for (int n = 0; n <= g; ++n)
                for (int m = 0; m <= g; ++m) run(inf.id, {.n = n, .m = m});
        } else if (pl == "n,m,k") {
            for (int n = 0; n <= g; ++n)
                for (int m = 0; m <= g; ++m)
                    for (int k = 0; k <= g; ++k)
                        run(inf.id, {.n = n, .m = m, .k = k});
        } else if (pl == "n,k,m,i") {
            for (int n = 0; n <= g; ++n)
                for (int k = 0; k <= g; ++k)
                    for (int m = 0; m <= g; ++m)
                        for (int i = 0; i <= g; ++i)
                            run(inf.id, {.n = n, .m = m, .k = k, .i = i});
        } else {
            throw std::logic_error("unhandled parameter list");
        }
    }
    return res;
}

}  // namespace aitken::identities
