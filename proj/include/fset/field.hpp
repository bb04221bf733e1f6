#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fset {

using BigInt = boost::multiprecision::cpp_int;

/// An element of F_p, always held in reduced form 0 <= value < p.
struct FieldElement {
    std::uint64_t value = 0;

    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// The prime field F_p together with the residues of p that the tower
/// construction keys on.
class FieldSpec {
public:
    /// Throws Error(NotPrime) unless p is prime.
    explicit FieldSpec(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }
    unsigned residue3() const noexcept { return residue3_; }
    unsigned residue9() const noexcept { return residue9_; }

    FieldElement element(std::int64_t value) const noexcept;

    // Raw residue arithmetic; inputs must already be reduced.
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return (s >= p_ || s < a) ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + (p_ - b);
    }
    std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    /// Extended Euclid; throws Error(ZeroInverse) for a == 0.
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
    unsigned residue3_;
    unsigned residue9_;
};

FieldElement fe_add(FieldElement a, FieldElement b, const FieldSpec& F) noexcept;
FieldElement fe_sub(FieldElement a, FieldElement b, const FieldSpec& F) noexcept;
FieldElement fe_mul(FieldElement a, FieldElement b, const FieldSpec& F) noexcept;
FieldElement fe_mul_inv(FieldElement a, const FieldSpec& F);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

/// Deterministic Miller-Rabin with the first twelve prime bases, exact for all
/// 64-bit inputs.
bool is_prime_u64(std::uint64_t n) noexcept;

/// Miller-Rabin on arbitrary size. Exact below 3.18e23; beyond that it is a
/// strong-probable-prime test to the same twelve bases plus eight more.
bool is_prime(const BigInt& n);

struct IntFactor {
    BigInt prime;
    unsigned multiplicity = 0;

    friend bool operator==(const IntFactor&, const IntFactor&) = default;
};

/// Effort limits for integer factorization.
struct FactorBudget {
    // Cofactor left over after trial division must be below 2^max_cofactor_bits.
    unsigned max_cofactor_bits = 128;
    // Total Pollard-Brent iterations over the whole factorization.
    std::uint64_t rho_iterations = std::uint64_t{1} << 24;
};

/// Prime factorization with primes strictly increasing. Trial division to 10^6,
/// then Brent's rho with a fixed parameter schedule. Throws
/// Error(FactorizationTimeout) when the budget is exhausted.
std::vector<IntFactor> int_factorize(const BigInt& n, const FactorBudget& budget = {});

}  // namespace fset
