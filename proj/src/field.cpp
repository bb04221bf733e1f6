#include "fset/field.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <map>

#include "fset/error.hpp"

namespace fset {

namespace {

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::array<std::uint64_t, 8> kExtraWitnesses = {41, 43, 47, 53, 59, 61, 67, 71};
constexpr std::uint64_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint64_t i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

BigInt powmod_big(BigInt base, BigInt e, const BigInt& m) {
    BigInt result = 1;
    base %= m;
    while (e > 0) {
        if ((e & 1) != 0) result = result * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return result;
}

template <class Int, class MulMod, class PowMod>
bool miller_rabin(const Int& n, MulMod mulmod, PowMod powmod, bool extra) {
    if (n < 2) return false;
    for (std::uint64_t w : kWitnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    Int d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto witness_passes = [&](std::uint64_t a) {
        Int x = powmod(Int(a), d, n);
        if (x == 1 || x == n - 1) return true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) return true;
        }
        return false;
    };
    for (std::uint64_t a : kWitnesses)
        if (!witness_passes(a)) return false;
    if (extra)
        for (std::uint64_t a : kExtraWitnesses)
            if (!witness_passes(a)) return false;
    return true;
}

class RhoBudget {
public:
    explicit RhoBudget(std::uint64_t limit) : remaining_(limit) {}
    void spend(std::uint64_t n) {
        if (n > remaining_) throw Error(Errc::FactorizationTimeout, "Pollard-Brent iteration budget exhausted");
        remaining_ -= n;
    }

private:
    std::uint64_t remaining_;
};

// Brent's cycle-finding variant of Pollard rho. Polynomial x^2 + c with
// c = 1, 2, ... and starting point 2; batches of 128 products per gcd.
template <class Int, class MulMod, class Gcd>
Int brent_rho(const Int& n, MulMod mulmod, Gcd gcd, RhoBudget& budget) {
    if ((n & 1) == 0) return Int(2);
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](const Int& v) {
            Int r = mulmod(v, v, n);
            Int gap = n - c;
            return r >= gap ? Int(r - gap) : Int(r + c);
        };
        Int y = 2, x = 2, ys = 2, q = 1, g = 1;
        std::uint64_t r = 1;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = step(y);
            budget.spend(r);
            std::uint64_t k = 0;
            do {
                ys = y;
                std::uint64_t lim = std::min(kBatch, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = step(y);
                    Int diff = x > y ? Int(x - y) : Int(y - x);
                    q = mulmod(q, diff, n);
                }
                budget.spend(lim);
                g = gcd(q, n);
                k += kBatch;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                Int diff = x > ys ? Int(x - ys) : Int(ys - x);
                g = gcd(diff, n);
                budget.spend(1);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void rho_factor(const BigInt& n, std::map<BigInt, unsigned>& out, RhoBudget& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d;
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        auto n64 = static_cast<std::uint64_t>(n);
        d = brent_rho<std::uint64_t>(
            n64, mulmod_u64, [](std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }, budget);
    } else {
        d = brent_rho<BigInt>(
            n, [](const BigInt& a, const BigInt& b, const BigInt& m) -> BigInt { return a * b % m; },
            [](const BigInt& a, const BigInt& b) -> BigInt { return boost::multiprecision::gcd(a, b); },
            budget);
    }
    rho_factor(d, out, budget);
    rho_factor(n / d, out, budget);
}

}  // namespace

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    a %= m;
    while (e != 0) {
        if (e & 1) result = mulmod_u64(result, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return result;
}

bool is_prime_u64(std::uint64_t n) noexcept {
    return miller_rabin<std::uint64_t>(n, mulmod_u64, powmod_u64, false);
}

bool is_prime(const BigInt& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) return is_prime_u64(static_cast<std::uint64_t>(n));
    static const BigInt kExactBound("318665857834031151167461");
    return miller_rabin<BigInt>(
        n, [](const BigInt& a, const BigInt& b, const BigInt& m) -> BigInt { return a * b % m; },
        [](const BigInt& a, const BigInt& e, const BigInt& m) { return powmod_big(a, e, m); },
        n >= kExactBound);
}

FieldSpec::FieldSpec(std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    residue3_ = static_cast<unsigned>(p % 3);
    residue9_ = static_cast<unsigned>(p % 9);
}

FieldElement FieldSpec::element(std::int64_t value) const noexcept {
    if (value >= 0) return {static_cast<std::uint64_t>(value) % p_};
    // -(value+1) avoids overflow at INT64_MIN
    std::uint64_t mag = static_cast<std::uint64_t>(-(value + 1)) + 1;
    return {neg(mag % p_)};
}

std::uint64_t FieldSpec::inv(std::uint64_t a) const {
    if (a == 0) throw Error(Errc::ZeroInverse, "0 has no inverse mod " + std::to_string(p_));
    // Extended Euclid tracking only the coefficient of a, as signed 128-bit.
    __int128 r0 = p_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        __int128 q = r0 / r1;
        __int128 t = r0 - q * r1;
        r0 = r1;
        r1 = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    __int128 m = static_cast<__int128>(p_);
    s0 %= m;
    if (s0 < 0) s0 += m;
    return static_cast<std::uint64_t>(s0);
}

std::uint64_t FieldSpec::pow(std::uint64_t a, std::uint64_t e) const noexcept { return powmod_u64(a, e, p_); }

FieldElement fe_add(FieldElement a, FieldElement b, const FieldSpec& F) noexcept { return {F.add(a.value, b.value)}; }
FieldElement fe_sub(FieldElement a, FieldElement b, const FieldSpec& F) noexcept { return {F.sub(a.value, b.value)}; }
FieldElement fe_mul(FieldElement a, FieldElement b, const FieldSpec& F) noexcept { return {F.mul(a.value, b.value)}; }
FieldElement fe_mul_inv(FieldElement a, const FieldSpec& F) { return {F.inv(a.value)}; }

std::vector<IntFactor> int_factorize(const BigInt& n, const FactorBudget& budget) {
    if (n < 1) throw Error(Errc::InvalidArgument, "int_factorize requires n >= 1");
    std::map<BigInt, unsigned> found;
    BigInt rest = n;
    for (std::uint32_t q : small_primes()) {
        if (BigInt(q) * q > rest) break;
        while (rest % q == 0) {
            ++found[BigInt(q)];
            rest /= q;
        }
    }
    if (rest > 1) {
        if (BigInt(kTrialLimit) * kTrialLimit > rest) {
            // no factor below 10^6 and rest < 10^12, so rest is prime
            ++found[rest];
        } else {
            if (boost::multiprecision::msb(rest) + 1 > budget.max_cofactor_bits)
                throw Error(Errc::FactorizationTimeout,
                            "cofactor after trial division exceeds " + std::to_string(budget.max_cofactor_bits) + " bits");
            RhoBudget rho(budget.rho_iterations);
            rho_factor(rest, found, rho);
        }
    }
    std::vector<IntFactor> out;
    out.reserve(found.size());
    for (auto& [prime, mult] : found) out.push_back({prime, mult});
    return out;
}

}  // namespace fset
