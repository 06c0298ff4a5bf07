#include "aitken/exact_core.hpp"

#include <sstream>
#include <stdexcept>

namespace aitken::core {

Nat binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
    Nat r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

SeqTable bell_table(unsigned N) {
    std::vector<Nat> b(N + 1);
    b[0] = 1;
    for (unsigned n = 0; n < N; ++n) {
        Nat sum = 0;
        for (unsigned k = 0; k <= n; ++k) sum += binomial(n, k) * b[k];
        b[n + 1] = sum;
    }
    return {SeqKind::Bell, std::move(b)};
}

SeqTable v_table(unsigned N) {
    SeqTable bell = bell_table(N);
    std::vector<Nat> v(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        Nat sum = 0;
        for (unsigned j = 0; j <= n; ++j) {
            Nat term = binomial(n, j) * bell[j];
            if ((n - j) % 2 == 0)
                sum += term;
            else
                sum -= term;
        }
        v[n] = std::move(sum);
    }
    return {SeqKind::V, std::move(v)};
}

SeqTable derangement_table(unsigned N) {
    std::vector<Nat> d(N + 1);
    d[0] = 1;
    for (unsigned n = 1; n <= N; ++n) {
        d[n] = n * d[n - 1];
        if (n % 2 == 0)
            d[n] += 1;
        else
            d[n] -= 1;
    }
    return {SeqKind::Derangement, std::move(d)};
}

TriangleA a_triangle(unsigned N) {
    SeqTable v = v_table(N + 1);

    // First pass: A_{n,0} = V_n, then A_{n,k} = A_{n,k-1} + A_{n-1,k-1}.
    TriangleA tri;
    tri.rows.resize(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        tri.rows[n].resize(n + 1);
        tri.rows[n][0] = v[n];
        for (unsigned k = 1; k <= n; ++k)
            tri.rows[n][k] = tri.rows[n][k - 1] + tri.rows[n - 1][k - 1];
    }

    // Second pass: A_{n,k} = V_n + sum_{j<k} A_{n-1,j}. Disagreement means
    // one of the recurrences is implemented wrong; never return such a table.
    for (unsigned n = 0; n <= N; ++n) {
        Nat acc = v[n];
        for (unsigned k = 0; k <= n; ++k) {
            if (k > 0) acc += tri.rows[n - 1][k - 1];
            if (acc != tri.rows[n][k]) {
                std::ostringstream msg;
                msg << "a_triangle: recurrence disagreement at (" << n << ","
                    << k << "): " << tri.rows[n][k] << " vs " << acc;
                throw std::logic_error(msg.str());
            }
        }
    }
    return tri;
}

StirlingTables stirling_tables(unsigned N) {
    StirlingTables t;
    t.second.resize(N + 1);
    t.first_signed.resize(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        t.second[n].resize(n + 1);
        t.first_signed[n].resize(n + 1);
        t.second[n][0] = (n == 0) ? 1 : 0;
        t.first_signed[n][0] = (n == 0) ? 1 : 0;
        for (unsigned k = 1; k <= n; ++k) {
            t.second[n][k] = t.second[n - 1][k - 1];
            if (k < n) t.second[n][k] += k * t.second[n - 1][k];
            // s(n,k) = s(n-1,k-1) - (n-1) s(n-1,k)
            t.first_signed[n][k] = t.first_signed[n - 1][k - 1];
            if (k < n)
                t.first_signed[n][k] -=
                    static_cast<long>(n - 1) * t.first_signed[n - 1][k];
        }
    }
    return t;
}

}  // namespace aitken::core
