#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aitken/dobinski.hpp"
#include "aitken/identities.hpp"
#include "aitken/oracle.hpp"
#include "aitken/rat_poly.hpp"

using namespace aitken;
using identities::IdentityId;
using identities::RatPoly;

namespace {
const identities::Tables& tables() {
    static identities::Tables t = identities::Tables::build(39);
    return t;
}
}  // namespace

TEST_CASE("rational polynomial arithmetic") {
    RatPoly y = RatPoly::y();
    RatPoly p = (y + RatPoly(mpq_class(1))).pow(3);
    CHECK(p.coeffs() == std::vector<mpq_class>{1, 3, 3, 1});
    CHECK(p.shift(-1) == y.pow(3));
    CHECK(p.eval(2) == 27);
    CHECK((p - p).is_zero());
    CHECK(p.degree() == 3);
    CHECK((y * RatPoly(mpq_class(0))).degree() == -1);
}

TEST_CASE("bell polynomials") {
    const auto& t = tables();
    CHECK(identities::bell_poly(t, 0).coeffs() == std::vector<mpq_class>{1});
    CHECK(identities::bell_poly(t, 3).coeffs() ==
          std::vector<mpq_class>{0, 1, 3, 1});  // y + 3y^2 + y^3
    auto bell = core::bell_table(12);
    for (unsigned k = 0; k <= 12; ++k)
        CHECK(identities::bell_poly(t, k).eval(1) == mpq_class(bell[k]));
}

TEST_CASE("binomial polynomials") {
    CHECK(identities::binom_poly(0).coeffs() == std::vector<mpq_class>{1});
    CHECK(identities::binom_poly(2).coeffs() ==
          std::vector<mpq_class>{0, mpq_class(-1, 2), mpq_class(1, 2)});
    CHECK(identities::binom_poly(3).eval(5) == 10);
    for (unsigned k = 0; k <= 6; ++k)
        for (unsigned long y = 0; y <= 8; ++y)
            CHECK(identities::binom_poly(k).eval(y) ==
                  mpq_class(core::binomial(y, k)));
}

TEST_CASE("single identity checks match worked examples") {
    const auto& t = tables();
    auto c = identities::check(t, IdentityId::I_3_3, {.n = 3});
    CHECK(c.pass);
    CHECK(c.lhs == "1");

    c = identities::check(t, IdentityId::I_2_4, {.n = 2, .m = 1});
    CHECK(c.pass);
    CHECK(c.lhs == "2");

    c = identities::check(t, IdentityId::I_3_4, {.n = 2});
    CHECK(c.pass);
    CHECK(c.lhs == "5");

    c = identities::check(t, IdentityId::I_3_16, {.n = 2});
    CHECK(c.pass);
    CHECK(c.lhs == "9");

    c = identities::check(t, IdentityId::I_3_1, {.n = 1});
    CHECK(c.pass);
    CHECK(c.lhs == "1 + 1*y");  // both sides reduce to y + 1
}

TEST_CASE("polynomial identities hold coefficientwise") {
    const auto& t = tables();
    for (int n = 0; n <= 6; ++n) {
        for (auto id : {IdentityId::I_3_1, IdentityId::I_3_2,
                        IdentityId::I_3_5, IdentityId::I_3_6,
                        IdentityId::I_3_4A, IdentityId::I_3_4B})
            CHECK(identities::check(t, id, {.n = n}).pass);
        for (int k = 0; k <= 6; ++k)
            for (auto id :
                 {IdentityId::I_3_7, IdentityId::I_3_8, IdentityId::I_3_9})
                CHECK(identities::check(t, id, {.n = n, .k = k}).pass);
    }
}

TEST_CASE("check_all over the default grid") {
    const auto& t = tables();
    auto res = identities::check_all(t, 8, 5);
    CHECK(res.failures.empty());
    CHECK(res.cases_run > 0);
    auto res0 = identities::check_all(t, 0, 0);
    CHECK(res0.failures.empty());
}

TEST_CASE("fault injection is reported with witnesses") {
    identities::Tables t = identities::Tables::build(20);
    t.tri.rows[5][2] += 1;
    auto res = identities::check_all(t, 6, 3);
    REQUIRE(!res.failures.empty());
    for (const auto& f : res.failures) CHECK(!f.params.str().empty());
}

TEST_CASE("parameter and catalog errors") {
    const auto& t = tables();
    CHECK_THROWS_AS(
        (void)identities::check(t, IdentityId::I_2_4, {.n = 2}),
        std::invalid_argument);
    CHECK(identities::id_from_string("I-3.16").has_value());
    CHECK(!identities::id_from_string("I-9.99").has_value());
}

TEST_CASE("closed-form average agrees with the oracle") {
    const auto& t = tables();
    for (int n = 0; n <= 8; ++n) {
        auto c = identities::check(t, IdentityId::I_3_16, {.n = n});
        REQUIRE(c.pass);
        mpq_class avg(mpz_class(c.lhs), t.bell[n + 1]);
        avg.canonicalize();
        CHECK(avg == oracle::avg_largest_singleton(n + 1));
    }
}

TEST_CASE("dobinski enclosure isolates the table entries") {
    const auto& t = tables();
    auto r = identities::dobinski_enclosure(t, 0, 0);
    CHECK(r.verdict == identities::DobinskiVerdict::pass);
    CHECK(r.isolated == 1);

    r = identities::dobinski_enclosure(t, 1, 0);  // telescoping series
    CHECK(r.verdict == identities::DobinskiVerdict::pass);
    CHECK(r.isolated == 0);

    r = identities::dobinski_enclosure(t, 3, 2);
    CHECK(r.verdict == identities::DobinskiVerdict::pass);
    CHECK(r.isolated == 20);
    CHECK(r.series.lo <= r.series.hi);
    CHECK(r.e.lo <= mpq_class(2718281829L, 1000000000L));
    CHECK(r.e.hi >= mpq_class(2718281828L, 1000000000L));
}

TEST_CASE("dobinski never passes against a corrupted entry") {
    identities::Tables t = identities::Tables::build(10);
    t.tri.rows[5][2] += 1;
    auto r = identities::dobinski_enclosure(t, 3, 2);
    CHECK(r.verdict == identities::DobinskiVerdict::fail);
    CHECK(r.isolated == 20);
}
