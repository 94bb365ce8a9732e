// Arbitrary-precision integer helpers shared by all modules.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace halphen {

using Int = mpz_class;
using Rat = mpq_class;

/* binomial(n, 3), zero for n < 3 */
inline Int binom3(const Int& n) {
    if (n < 3) return 0;
    return n * (n - 1) * (n - 2) / 6;
}

inline Int binom3(long n) { return binom3(Int(n)); }

/* floor division; GMP's fdiv, defined for negative numerators too */
inline Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline void fdiv_qr(const Int& a, const Int& b, Int& q, Int& r) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

/* exact division; throws if b does not divide a */
inline Int exact_div(const Int& a, const Int& b, const char* what) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::domain_error(std::string("exact_div: ") + what);
    return a / b;
}

inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("to_long: value out of range");
    return a.get_si();
}

}  // namespace halphen
