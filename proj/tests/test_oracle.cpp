#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "aitken/exact_core.hpp"
#include "aitken/oracle.hpp"

using namespace aitken;

TEST_CASE("enumerate small cases") {
    std::vector<std::string> seen;
    oracle::enumerate(3, [&](std::span<const unsigned> codes) {
        std::string s;
        for (unsigned c : codes) s += char('0' + c);
        seen.push_back(s);
    });
    CHECK(seen == std::vector<std::string>{"000", "001", "010", "011", "012"});

    unsigned count0 = 0;
    oracle::enumerate(0, [&](std::span<const unsigned> codes) {
        CHECK(codes.empty());
        ++count0;
    });
    CHECK(count0 == 1);
}

TEST_CASE("every visited string satisfies restricted growth") {
    for (unsigned n = 1; n <= 8; ++n) {
        long count = 0;
        bool ok = true;
        oracle::enumerate(n, [&](std::span<const unsigned> codes) {
            ++count;
            if (codes[0] != 0) ok = false;
            unsigned mx = 0;
            for (std::size_t i = 1; i < codes.size(); ++i) {
                mx = std::max(mx, codes[i - 1]);
                if (codes[i] > mx + 1) ok = false;
            }
        });
        CHECK(ok);
        CHECK(count == core::bell_table(n)[n]);
    }
}

TEST_CASE("stats against the exact tables") {
    const unsigned N = 10;
    auto bell = core::bell_table(N);
    auto v = core::v_table(N);
    auto st = core::stirling_tables(N);
    auto tri = core::a_triangle(N);
    for (unsigned n = 0; n <= N; ++n) {
        auto s = oracle::stats(n);
        CHECK(s.total == bell[n]);
        CHECK(s.singleton_free == v[n]);
        for (unsigned j = 0; j <= n; ++j) {
            core::Nat got = 0;
            if (auto it = s.by_block_count.find(j);
                it != s.by_block_count.end())
                got = it->second;
            CHECK(got == st.second[n][j]);
        }
        if (n >= 1) {
            // A_{n-1,k} counts partitions of [n] with largest singleton k+1
            core::Nat covered = 0;
            for (unsigned k = 0; k < n; ++k) {
                core::Nat got = 0;
                if (auto it = s.by_largest_singleton.find(k + 1);
                    it != s.by_largest_singleton.end())
                    got = it->second;
                CHECK(got == tri.at(n - 1, k));
                covered += got;
            }
            CHECK(covered + s.singleton_free == s.total);
        }
    }
}

TEST_CASE("stats n=3 and n=5 match the reference rows") {
    auto s3 = oracle::stats(3);
    CHECK(s3.by_largest_singleton ==
          std::map<unsigned, core::Nat>{{1, 1}, {2, 1}, {3, 2}});
    auto s5 = oracle::stats(5);
    CHECK(s5.by_largest_singleton ==
          std::map<unsigned, core::Nat>{{1, 4}, {2, 5}, {3, 7}, {4, 10}, {5, 15}});
    auto s4 = oracle::stats(4);
    CHECK(s4.by_block_count ==
          std::map<unsigned, core::Nat>{{1, 1}, {2, 7}, {3, 6}, {4, 1}});
}

TEST_CASE("average largest singleton agrees with the closed form") {
    CHECK(oracle::avg_largest_singleton(1) == 1);
    CHECK(oracle::avg_largest_singleton(3) == mpq_class(9, 5));
    CHECK(oracle::avg_largest_singleton(4) == mpq_class(34, 15));
    auto bell = core::bell_table(9);
    auto v = core::v_table(11);
    for (unsigned n = 1; n <= 9; ++n) {
        // ((n+1) B_n - V_{n+2}) / B_n over partitions of [n]
        mpq_class closed(mpz_class((n + 1) * bell[n] - v[n + 2]), bell[n]);
        closed.canonicalize();
        CHECK(oracle::avg_largest_singleton(n) == closed);
    }
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS((void)oracle::stats(13), std::invalid_argument);
    CHECK_NOTHROW((void)oracle::stats(5, true));
}
