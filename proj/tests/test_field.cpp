#include <doctest.h>

#include <random>

#include "fset/error.hpp"
#include "fset/field.hpp"

using namespace fset;

namespace {

const std::vector<std::uint64_t> kSmallPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};

BigInt recombine(const std::vector<IntFactor>& fs) {
    BigInt n = 1;
    for (const auto& f : fs) n *= boost::multiprecision::pow(f.prime, f.multiplicity);
    return n;
}

}  // namespace

TEST_CASE("field spec caches residues and rejects composites") {
    FieldSpec F(23);
    CHECK(F.residue3() == 2);
    CHECK(F.residue9() == 5);
    CHECK(F.residue9() % 3 == F.residue3());
    CHECK_THROWS_AS(FieldSpec(1), Error);
    CHECK_THROWS_AS(FieldSpec(9), Error);
    try {
        FieldSpec bad(91);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPrime);
    }
    CHECK(FieldSpec(18446744073709551557ULL).p() == 18446744073709551557ULL);  // largest 64-bit prime
}

TEST_CASE("fe_add") {
    FieldSpec F5(5), F2(2);
    CHECK(fe_add({3}, {4}, F5).value == 2);
    CHECK(fe_add({0}, {0}, F5).value == 0);
    CHECK(fe_add({1}, {1}, F2).value == 0);

    FieldSpec big(18446744073709551557ULL);
    CHECK(fe_add({big.p() - 1}, {big.p() - 1}, big).value == big.p() - 2);
}

TEST_CASE("fe_mul_inv") {
    CHECK(fe_mul_inv({2}, FieldSpec(5)).value == 3);
    CHECK(fe_mul_inv({1}, FieldSpec(7)).value == 1);
    CHECK(fe_mul_inv({1}, FieldSpec(2)).value == 1);
    try {
        fe_mul_inv({0}, FieldSpec(7));
        FAIL("expected ZeroInverse");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroInverse);
    }
}

TEST_CASE("inverse is exact for every unit, p <= 59") {
    for (auto p : kSmallPrimes) {
        FieldSpec F(p);
        for (std::uint64_t a = 1; a < p; ++a) REQUIRE(F.mul(F.inv(a), a) == 1);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (std::uint64_t p : {2, 3, 5, 17, 59}) {
        FieldSpec F(p);
        for (int i = 0; i < 2000; ++i) {
            FieldElement a{rng() % p}, b{rng() % p}, c{rng() % p};
            CHECK(fe_add(a, b, F) == fe_add(b, a, F));
            CHECK(fe_mul(a, b, F) == fe_mul(b, a, F));
            CHECK(fe_add(fe_add(a, b, F), c, F) == fe_add(a, fe_add(b, c, F), F));
            CHECK(fe_mul(fe_mul(a, b, F), c, F) == fe_mul(a, fe_mul(b, c, F), F));
            CHECK(fe_mul(a, fe_add(b, c, F), F) == fe_add(fe_mul(a, b, F), fe_mul(a, c, F), F));
            CHECK(fe_sub(fe_add(a, b, F), b, F) == a);
        }
    }
}

TEST_CASE("negative integers reduce into [0, p)") {
    FieldSpec F(5);
    CHECK(F.element(-1).value == 4);
    CHECK(F.element(-10).value == 0);
    CHECK(F.element(std::numeric_limits<std::int64_t>::min()).value < 5);
}

TEST_CASE("Miller-Rabin agrees with a sieve below 10^5") {
    const std::uint64_t N = 100'000;
    std::vector<bool> composite(N, false);
    composite[0] = composite[1] = true;
    for (std::uint64_t i = 2; i * i < N; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j < N; j += i) composite[j] = true;
    for (std::uint64_t n = 0; n < N; ++n) REQUIRE(is_prime_u64(n) == !composite[n]);
}

TEST_CASE("Miller-Rabin on pseudoprimes and large primes") {
    CHECK_FALSE(is_prime_u64(561));
    CHECK_FALSE(is_prime_u64(3215031751ULL));        // strong pseudoprime to bases 2,3,5,7
    CHECK_FALSE(is_prime_u64(3825123056546413051ULL));  // strong pseudoprime to bases up to 23
    CHECK(is_prime_u64((1ULL << 61) - 1));
    CHECK(is_prime(BigInt("1180591620717411303449")));  // next prime after 2^70
    CHECK(is_prime(BigInt("67280421310721")));
    CHECK_FALSE(is_prime(BigInt("2000000000081000000000117")));
}

TEST_CASE("int_factorize examples") {
    CHECK(int_factorize(24) == std::vector<IntFactor>{{2, 3}, {3, 1}});
    CHECK(int_factorize(1).empty());
    CHECK(int_factorize(288) == std::vector<IntFactor>{{2, 5}, {3, 2}});
    CHECK_THROWS_AS(int_factorize(0), Error);
}

TEST_CASE("int_factorize beyond trial division") {
    // frozen from sympy.factorint
    auto f64 = int_factorize(BigInt("18446744073709551615"));
    CHECK(f64 == std::vector<IntFactor>{{3, 1}, {5, 1}, {17, 1}, {257, 1}, {641, 1}, {65537, 1}, {6700417, 1}});

    auto f128 = int_factorize((BigInt(1) << 128) - 1);
    CHECK(f128.size() == 9);
    CHECK(f128.back().prime == BigInt("67280421310721"));
    CHECK(recombine(f128) == (BigInt(1) << 128) - 1);

    auto semi = int_factorize(BigInt("2000000000081000000000117"));
    CHECK(semi == std::vector<IntFactor>{{BigInt("1000000000039"), 1}, {BigInt("2000000000003"), 1}});

    auto q = int_factorize(BigInt(59) * 59 * 59 * 59 * 59 * 59 - 1);
    CHECK(q == std::vector<IntFactor>{{2, 3}, {3, 2}, {5, 1}, {7, 1}, {29, 1}, {163, 1}, {3541, 1}});
}

TEST_CASE("int_factorize budget") {
    FactorBudget tight;
    tight.rho_iterations = 10;
    try {
        int_factorize(BigInt("2000000000081000000000117"), tight);
        FAIL("expected timeout");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::FactorizationTimeout);
    }
    FactorBudget narrow;
    narrow.max_cofactor_bits = 64;
    CHECK_THROWS_AS(int_factorize(BigInt("2000000000081000000000117"), narrow), Error);
}

TEST_CASE("int_factorize recombines on random inputs up to 10^6") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10'000; ++i) {
        const std::uint64_t n = rng() % 1'000'000 + 1;
        auto fs = int_factorize(n);
        REQUIRE(recombine(fs) == n);
        for (std::size_t k = 0; k < fs.size(); ++k) {
            REQUIRE(is_prime(fs[k].prime));
            if (k > 0) REQUIRE(fs[k - 1].prime < fs[k].prime);
        }
    }
}
