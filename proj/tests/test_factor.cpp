#include <doctest.h>

#include <random>

#include "fset/error.hpp"
#include "fset/factor.hpp"
#include "oracle.hpp"

using namespace fset;

namespace {

Errc error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::InvalidArgument;
}

bool matches_oracle(const FactorizationResult& got, const oracle::TrialFactorization& want) {
    if (got.unit.value != want.unit || got.factors.size() != want.factors.size()) return false;
    auto it = want.factors.begin();
    for (const auto& [poly, mult] : got.factors) {
        if (!(poly == it->first) || mult != it->second) return false;
        ++it;
    }
    return true;
}

}  // namespace

TEST_CASE("is_irreducible examples") {
    CHECK(is_irreducible(parse_poly("x^3+x+1", FieldSpec(2))));
    CHECK_FALSE(is_irreducible(parse_poly("x^2+x+1", FieldSpec(7))));
    CHECK_FALSE(is_irreducible(parse_poly("x^2+x+1", FieldSpec(3))));
    CHECK(is_irreducible(parse_poly("x^2+x+1", FieldSpec(5))));
    CHECK(is_irreducible(parse_poly("3x+1", FieldSpec(5))));
    CHECK(error_of([] { return is_irreducible(Polynomial::constant(FieldSpec(5), 2)); }) == Errc::ConstantInput);
}

TEST_CASE("is_irreducible agrees with the sieve") {
    for (auto [p, maxd] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 10}, {3, 6}, {5, 4}, {7, 3}}) {
        FieldSpec F(p);
        const auto irr = oracle::irreducibles_up_to(F, maxd);
        const std::size_t expected = irr.size();
        std::size_t found = 0;
        for (std::size_t d = 1; d <= maxd; ++d)
            for (const auto& m : oracle::monic_of_degree(F, d)) found += is_irreducible(m) ? 1 : 0;
        CAPTURE(p);
        CHECK(found == expected);
        for (const auto& q : irr) REQUIRE(is_irreducible(q));
    }
}

TEST_CASE("factorize examples") {
    FieldSpec F2(2), F5(5), F17(17);
    auto r = factorize(parse_poly("x^6+x^3", F2));
    CHECK(r.unit.value == 1);
    REQUIRE(r.factors.size() == 3);
    CHECK(r.factors[0] == FactorPower{parse_poly("x", F2), 3});
    CHECK(r.factors[1] == FactorPower{parse_poly("x+1", F2), 1});
    CHECK(r.factors[2] == FactorPower{parse_poly("x^2+x+1", F2), 1});
    CHECK(format_factorization(r) == "x^3 * (x+1) * (x^2+x+1)");

    auto s = factorize(parse_poly("x^2+x", F5));
    CHECK(s.factors == std::vector<FactorPower>{{parse_poly("x", F5), 1}, {parse_poly("x+1", F5), 1}});

    const Polynomial f1 = parse_poly("x^6+x^3+1", F17);
    auto t = factorize(f1);
    CHECK(t.factors.size() >= 2);
    CHECK(t.expand(F17) == f1);
    for (const auto& fp : t.factors) CHECK(is_irreducible(fp.poly));

    CHECK(error_of([&] { return factorize(Polynomial::one(F5)); }) == Errc::ConstantInput);
}

TEST_CASE("factorize keeps the leading coefficient as unit") {
    FieldSpec F(7);
    auto f = parse_poly("3x^4+2x+5", F);
    auto r = factorize(f);
    CHECK(r.unit.value == 3);
    CHECK(r.expand(F) == f);
    CHECK(format_factorization(r).starts_with("3 * "));
}

TEST_CASE("factorize matches trial division on small exhaustive ranges") {
    for (auto [p, maxd] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 5}, {3, 3}, {5, 2}}) {
        FieldSpec F(p);
        const auto irr = oracle::irreducibles_up_to(F, maxd);
        for (std::size_t d = 1; d <= maxd; ++d)
            for (const auto& f : oracle::all_of_degree(F, d)) {
                CAPTURE(format_poly(f));
                REQUIRE(matches_oracle(factorize(f), oracle::trial_factor(f, irr)));
            }
    }
}

TEST_CASE("equal-degree splitting in characteristic 2 and odd characteristic") {
    // x^(p^k) - x is the product of all monic irreducibles of degree dividing k
    FieldSpec F2(2);
    auto r2 = factorize(Polynomial::monomial(F2, 16) - Polynomial::monomial(F2, 1));
    CHECK(r2.factors.size() == 2 + 1 + 3);
    for (const auto& fp : r2.factors) CHECK(fp.multiplicity == 1);

    FieldSpec F2b(2);
    auto r64 = factorize(Polynomial::monomial(F2b, 64) - Polynomial::monomial(F2b, 1));
    CHECK(r64.factors.size() == 2 + 1 + 2 + 9);  // degrees 1, 2, 3, 6

    FieldSpec F3(3);
    auto r3 = factorize(Polynomial::monomial(F3, 9) - Polynomial::monomial(F3, 1));
    CHECK(r3.factors.size() == 3 + 3);

    FieldSpec F11(11);
    auto r11 = factorize(Polynomial::monomial(F11, 121) - Polynomial::monomial(F11, 1));
    CHECK(r11.factors.size() == 11 + 55);
}

TEST_CASE("repeated factors and p-th powers") {
    FieldSpec F3(3);
    auto base = parse_poly("x^2+1", F3) * parse_poly("x+2", F3);
    auto f = base * base * base * parse_poly("x^2+1", F3) * parse_poly("x", F3);
    auto r = factorize(f);
    CHECK(r.expand(F3) == f);
    CHECK(r.factors == std::vector<FactorPower>{{parse_poly("x", F3), 1},
                                                {parse_poly("x+2", F3), 3},
                                                {parse_poly("x^2+1", F3), 4}});
}

TEST_CASE("factorization is deterministic and seed-independent") {
    std::mt19937_64 rng(23);
    FieldSpec F(5);
    for (int i = 0; i < 50; ++i) {
        auto f = oracle::random_monic(F, rng() % 30 + 1, rng);
        auto a = factorize(f);
        auto b = factorize(f);
        auto c = factorize(f, FactorOptions{12345});
        REQUIRE(a.factors == b.factors);
        REQUIRE(a.factors == c.factors);
        REQUIRE(a.expand(F) == f);
    }
}

TEST_CASE("irreducible iff a single simple factor") {
    std::mt19937_64 rng(29);
    for (std::uint64_t p : {2, 3, 5, 13}) {
        FieldSpec F(p);
        for (int i = 0; i < 150; ++i) {
            auto f = oracle::random_poly(F, 12, rng);
            if (f.degree() < 1) continue;
            auto r = factorize(f);
            const bool single = r.factors.size() == 1 && r.factors[0].multiplicity == 1 && r.factors[0].poly == monic(f);
            REQUIRE(is_irreducible(f) == single);
        }
    }
}

TEST_CASE("poly_order examples") {
    CHECK(poly_order(parse_poly("x^2+x+1", FieldSpec(2))).e == 3);
    CHECK(poly_order(parse_poly("x^2-x+1", FieldSpec(5))).e == 6);
    CHECK(poly_order(parse_poly("x+1", FieldSpec(2))).e == 1);
    CHECK(poly_order(parse_poly("x^2-x+1", FieldSpec(5))).m == 2);

    FieldSpec F(5);
    CHECK(error_of([&] { return poly_order(parse_poly("x^2-1", F)); }) == Errc::NotIrreducible);
    CHECK(error_of([&] { return poly_order(parse_poly("x", F)); }) == Errc::ZeroConstantTerm);
    CHECK(error_of([&] { return poly_order(Polynomial::one(F)); }) == Errc::ConstantInput);
}

TEST_CASE("poly_order budget") {
    // degree 486 over F_2: the cofactor of 2^486-1 left by trial division has 341 bits
    FieldSpec F(2);
    auto f = substitute_power(parse_poly("x^2+x+1", F), 243);
    CHECK(error_of([&] { return poly_order(f); }) == Errc::OrderBudgetExceeded);
}

TEST_CASE("poly_order matches stepping through powers of x") {
    for (auto [p, maxd] : std::vector<std::pair<std::uint64_t, std::size_t>>{{2, 8}, {3, 5}, {5, 3}, {7, 3}}) {
        FieldSpec F(p);
        for (const auto& f : oracle::irreducibles_up_to(F, maxd)) {
            if (f[0] == 0) continue;
            const auto got = poly_order(f);
            const BigInt group = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(f.degree())) - 1;
            CAPTURE(format_poly(f));
            REQUIRE(got.e == oracle::brute_order(f, static_cast<std::uint64_t>(group)));
            REQUIRE(group % got.e == 0);
        }
    }
}

TEST_CASE("poly_order minimality on larger degrees") {
    std::mt19937_64 rng(31);
    FieldSpec F(3);
    const Polynomial x = Polynomial::monomial(F, 1);
    int checked = 0;
    while (checked < 20) {
        auto f = oracle::random_monic(F, rng() % 20 + 6, rng);
        if (f[0] == 0 || !is_irreducible(f)) continue;
        const auto e = poly_order(f).e;
        REQUIRE(powmod(x, e, f).is_one());
        for (const auto& pf : int_factorize(e)) REQUIRE_FALSE(powmod(x, e / pf.prime, f).is_one());
        ++checked;
    }
}
