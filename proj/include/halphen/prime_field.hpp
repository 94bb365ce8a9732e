// Prime field arithmetic on machine words.  Default modulus is the Mersenne
// prime 2^61 - 1; any odd prime below 2^62 is accepted.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace halphen {

inline constexpr std::uint64_t kDefaultPrime = (std::uint64_t(1) << 61) - 1;

class PrimeField {
public:
    explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
        if (p < 2 || p >= (std::uint64_t(1) << 62) || !probable_prime(p))
            throw std::domain_error("PrimeField: modulus must be a prime < 2^62");
    }

    std::uint64_t modulus() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? p_ - a : 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return std::uint64_t((unsigned __int128)a * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        for (a %= p_; e; e >>= 1) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p_ - 2);
    }
    std::uint64_t from_int(long long v) const {
        long long r = v % (long long)p_;
        return r < 0 ? r + p_ : r;
    }
    std::uint64_t random(std::mt19937_64& rng) const {
        std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
        return d(rng);
    }
    std::uint64_t random_nonzero(std::mt19937_64& rng) const {
        std::uniform_int_distribution<std::uint64_t> d(1, p_ - 1);
        return d(rng);
    }

    /* Miller-Rabin with a base set deterministic for all 64-bit inputs */
    static bool probable_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            if (n == q) return true;
            if (n % q == 0) return false;
        }
        std::uint64_t d = n - 1;
        int r = 0;
        while ((d & 1) == 0) { d >>= 1; ++r; }
        auto mulm = [n](std::uint64_t a, std::uint64_t b) {
            return std::uint64_t((unsigned __int128)a * b % n);
        };
        for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
            std::uint64_t x = 1, e = d, base = a % n;
            for (; e; e >>= 1) {
                if (e & 1) x = mulm(x, base);
                base = mulm(base, base);
            }
            if (x == 1 || x == n - 1) continue;
            bool witness = true;
            for (int i = 1; i < r; ++i) {
                x = mulm(x, x);
                if (x == n - 1) { witness = false; break; }
            }
            if (witness) return false;
        }
        return true;
    }

private:
    std::uint64_t p_;
};

}  // namespace halphen
