#ifndef AITKEN_IDENTITIES_HPP
#define AITKEN_IDENTITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "aitken/exact_core.hpp"
#include "aitken/rat_poly.hpp"

namespace aitken::identities {

// All base tables an identity check may draw from. The A-triangle is the
// dual-recurrence-verified one from exact_core; everything on the right-hand
// side of a check comes from the base sequences unless the identity itself
// relates A-entries to A-entries.
struct Tables {
    core::TriangleA tri;
    core::SeqTable bell;
    core::SeqTable v;
    core::SeqTable der;
    core::StirlingTables stirling;

    static Tables build(unsigned max_n);
};

enum class IdentityId {
    I_1_2,    // B_{n+1} = sum C(n,k) B_k
    I_BV,     // B_n = V_n + V_{n+1}
    I_VINV,   // the B<->V inversion pair
    I_1_5,    // A_{n,k} = V_n + sum_{j<k} A_{n-1,j}
    I_2_4,    // A_{n+m,m} = sum (-1)^{n-j} C(n,j) B_{m+j}
    I_2_5,    // A_{n+m+k,m+k} = sum C(m,j) A_{n+k+j,k}
    I_2_3,    // A_{n+m+1,m+1} = sum C(m,j) B_{n+j}
    I_2_3K0,  // A_{n+m,m} = sum C(m,j) V_{n+j}
    I_R2_6,   // sum (-1)^{n-j} C(n,j) B_{m+j+1} = sum C(m,j) B_{n+j}
    I_2_6,    // A_{n+k,k} = sum_r sum_j C(n,r) V_r S(k,j) j^{n-r}
    I_2_7,    // A_{n+k,k} = sum_r sum_j C(n,r) B_r S(k,j) (j-1)^{n-r}
    I_3_1,    // polynomial, params n
    I_3_2,    // polynomial, params n
    I_3_3,    // sum (-1)^{n-k} C(n,k) A_{n,k} = 1
    I_3_4,    // sum (-1)^{n-k} C(n,k) 2^k A_{n,k} = B_{n+1}
    I_3_5,    // polynomial, params n
    I_3_6,    // polynomial, params n
    I_3_4A,   // polynomial (binomial transform), params n
    I_3_4B,   // polynomial (binomial transform), params n
    I_3_5A,   // umbral consequence, params n,m
    I_3_5B,   // umbral consequence, params n,m
    I_3_7,    // polynomial, params n,k
    I_3_8,    // polynomial, params n,k
    I_3_9,    // polynomial, params n,k
    I_C3_7A,  // B_{n+k} = sum C(n,j) A_{k+j,k}
    I_C3_7B,  // A_{n+k+1,n+1} = sum C(n,j) A_{k+j,k} 2^{n-j}
    I_3_10,   // derangement convolution, params n,k
    I_3_11,   // params n,k,m,i
    I_3_12,   // Stirling-1 transform, params n,m,k
    I_3_13,
    I_3_14,
    I_3_16,  // sum (k+1) A_{n,k} = (n+2) B_{n+1} - V_{n+3}
    I_3_17,  // sum (n-k+1) A_{n,k} = V_{n+3} - (n+2) V_{n+1}
};

struct IdentityInfo {
    IdentityId id;
    const char* name;        // stable string form, e.g. "I-3.16"
    const char* param_list;  // e.g. "n,m"
    bool polynomial;         // checked as an exact RatPoly equality
};

const std::vector<IdentityInfo>& catalog();
const IdentityInfo& info(IdentityId id);
std::optional<IdentityId> id_from_string(const std::string& name);

// Free integer parameters of one identity instance. -1 = not supplied.
struct Params {
    int n = -1;
    int m = -1;
    int k = -1;
    int i = -1;

    std::string str() const;
};

struct IdentityCase {
    IdentityId id;
    Params params;
    bool pass = false;
    std::string lhs;  // decimal value or polynomial rendering
    std::string rhs;
};

// Evaluates both sides by independent code paths and compares exactly.
// Throws std::invalid_argument if a required parameter is missing or the
// tables are too small for the requested indices.
IdentityCase check(const Tables& t, IdentityId id, const Params& p);

struct CheckAllResult {
    std::size_t cases_run = 0;
    std::vector<IdentityCase> failures;  // sorted by identity then params
};

// Runs every catalog identity over its full parameter grid:
// integer identities over [0, grid_max] per parameter, polynomial ones
// over [0, poly_grid_max]. Tables must cover the implied index range
// (3 * grid_max + 3 rows is always enough).
CheckAllResult check_all(const Tables& t, int grid_max, int poly_grid_max);

// B_k(y) = sum_j S(k,j) y^j.
RatPoly bell_poly(const Tables& t, unsigned k);

// C(y,k) = y(y-1)...(y-k+1)/k!.
RatPoly binom_poly(unsigned k);

}  // namespace aitken::identities

#endif
