#ifndef AITKEN_EXACT_CORE_HPP
#define AITKEN_EXACT_CORE_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace aitken::core {

// Arbitrary-precision integers. Nat values are kept nonnegative by
// construction in every table below.
using Nat = mpz_class;
using Int = mpz_class;

enum class SeqKind { Bell, V, Derangement };

struct SeqTable {
    SeqKind name;
    std::vector<Nat> values;  // index = n

    std::size_t max_index() const { return values.size() - 1; }
    const Nat& operator[](std::size_t n) const { return values[n]; }
};

// Lower-triangular table of A_{n,k}: partitions of [n+1] whose largest
// singleton is {k+1}. Row n holds A_{n,0..n}.
struct TriangleA {
    std::vector<std::vector<Nat>> rows;

    std::size_t max_n() const { return rows.size() - 1; }
    const Nat& at(std::size_t n, std::size_t k) const { return rows[n][k]; }
};

struct StirlingTables {
    std::vector<std::vector<Nat>> second;        // S(n,k)
    std::vector<std::vector<Int>> first_signed;  // s(n,k)

    std::size_t max_n() const { return second.size() - 1; }
};

// B_0..B_N via B_{n+1} = sum_k C(n,k) B_k.
SeqTable bell_table(unsigned N);

// V_0..V_N via the alternating inversion V_n = sum_j (-1)^{n-j} C(n,j) B_j.
SeqTable v_table(unsigned N);

// D_0..D_N via D_n = n D_{n-1} + (-1)^n.
SeqTable derangement_table(unsigned N);

// Rows 0..N. Built twice, by two independent recurrences; throws
// std::logic_error if they ever disagree.
TriangleA a_triangle(unsigned N);

// Both Stirling triangles to row N.
StirlingTables stirling_tables(unsigned N);

// C(n,k); 0 outside 0 <= k <= n.
Nat binomial(unsigned long n, long k);

}  // namespace aitken::core

#endif
