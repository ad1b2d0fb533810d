#pragma once

// Exact integer and rational arithmetic helpers shared by every other
// module: floor square roots, perfect-square detection with residue
// prefilters, factorization, squarefree decompositions and divisor
// enumeration, sums of two squares.

#include <gmp.h>
#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace congruent {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize; this does, and fixes den > 0.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline const Integer numerator(const Rational& r) { return r.get_num(); }
inline const Integer denominator(const Rational& r) { return r.get_den(); }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer rat_floor(const Rational& r) {
    return floor_div(r.get_num(), r.get_den());
}

inline Integer rat_ceil(const Rational& r) {
    return ceil_div(r.get_num(), r.get_den());
}

// ln |n| for arbitrary-size n (0 maps to 0).
inline double ln_integer(const Integer& n) {
    if (n == 0) return 0.0;
    signed long exp2;
    double m = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(exp2) * std::log(2.0);
}

// --- squares ---------------------------------------------------------------

inline Integer integer_sqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("integer_sqrt: negative input");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Quadratic-residue bitmasks modulo 64, 63, 65 and 11. A value failing any
// of them cannot be a square; survivors get an exact sqrt check. The inner
// loops of every search funnel through here.
struct SquareFilter {
    std::array<bool, 64> q64{};
    std::array<bool, 63> q63{};
    std::array<bool, 65> q65{};
    std::array<bool, 11> q11{};

    SquareFilter() {
        for (int i = 0; i < 64; ++i) q64[(i * i) & 63] = true;
        for (int i = 0; i < 63; ++i) q63[(i * i) % 63] = true;
        for (int i = 0; i < 65; ++i) q65[(i * i) % 65] = true;
        for (int i = 0; i < 11; ++i) q11[(i * i) % 11] = true;
    }

    bool may_be_square(const Integer& n) const {
        return q64[mpz_fdiv_ui(n.get_mpz_t(), 64)] &&
               q63[mpz_fdiv_ui(n.get_mpz_t(), 63)] &&
               q65[mpz_fdiv_ui(n.get_mpz_t(), 65)] &&
               q11[mpz_fdiv_ui(n.get_mpz_t(), 11)];
    }
};

inline const SquareFilter& square_filter() {
    static const SquareFilter f;
    return f;
}

// Returns r >= 0 with r^2 = n, or nothing.
inline std::optional<Integer> is_perfect_square(const Integer& n) {
    if (n < 0) return std::nullopt;
    if (!square_filter().may_be_square(n)) return std::nullopt;
    Integer r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) return std::nullopt;
    return r;
}

// Exact square root of a nonnegative rational, if it is one.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    auto sn = is_perfect_square(r.get_num());
    if (!sn) return std::nullopt;
    auto sd = is_perfect_square(r.get_den());
    if (!sd) return std::nullopt;
    return make_rational(*sn, *sd);
}

// --- primality -------------------------------------------------------------

namespace detail {

inline bool miller_rabin_witness(const Integer& n, const Integer& base,
                                 const Integer& d, unsigned long s) {
    if (base % n == 0) return false;
    Integer x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

}  // namespace detail

// Deterministic below 2^64 (the 12 first prime bases suffice there);
// a strong probable-prime test with the same bases above.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                       23, 29, 31, 37, 41, 43, 47};
    for (int p : small_primes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (int b : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (detail::miller_rabin_witness(n, Integer(b), d, s)) return false;
    }
    return true;
}

// --- factorization ----------------------------------------------------------

struct Factorization {
    int sign = 1;  // ±1
    std::vector<std::pair<Integer, unsigned>> factors;  // (prime, exponent), primes increasing

    Integer reconstruct() const {
        Integer v = sign;
        for (const auto& [p, e] : factors) {
            for (unsigned i = 0; i < e; ++i) v *= p;
        }
        return v;
    }
};

namespace detail {

inline Integer pollard_rho(const Integer& n) {
    // Brent cycle detection with gcds batched over 128 steps.
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, ys, q = 1, d = 1;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += batch) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * (x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time from the saved point
            do {
                ys = (ys * ys + c) % n;
                Integer diff = x - ys;
                if (diff == 0) break;
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (d == 1);
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_into(Integer n, std::vector<Integer>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    // perfect powers first so rho always sees a genuine composite
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer r = integer_sqrt(n);
        factor_into(r, primes);
        factor_into(r, primes);
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace detail

inline Factorization factorize(const Integer& n) {
    if (n == 0) throw std::domain_error("factorize: zero input");
    Factorization f;
    Integer m = n;
    if (m < 0) {
        f.sign = -1;
        m = -m;
    }
    std::vector<Integer> primes;
    // trial division up to 10^6 knocks out everything desk-scale
    for (unsigned long p = 2; p <= 1000000 && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                primes.push_back(Integer(p));
                m /= p;
            }
        }
        Integer psq = Integer(p) * p;
        if (psq > m) break;
    }
    if (m > 1) detail::factor_into(m, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
        i = j;
    }
    return f;
}

inline bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factorize(n).factors) {
        (void)p;
        if (e > 1) return false;
    }
    return true;
}

// n = s * f^2 with s squarefree, f >= 1, sign(s) = sign(n).
inline std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
    if (n == 0) throw std::domain_error("squarefree_decompose: zero input");
    Factorization fac = factorize(n);
    Integer s = fac.sign, f = 1;
    for (const auto& [p, e] : fac.factors) {
        if (e & 1u) s *= p;
        for (unsigned i = 0; i < e / 2; ++i) f *= p;
    }
    return {s, f};
}

// All squarefree d | n, both signs, sorted by (|d|, + before -). Includes ±1.
inline std::vector<Integer> signed_squarefree_divisors(const Integer& n) {
    if (n == 0) throw std::domain_error("signed_squarefree_divisors: zero input");
    Factorization fac = factorize(n);
    std::vector<Integer> mags{1};
    for (const auto& [p, e] : fac.factors) {
        (void)e;
        std::size_t sz = mags.size();
        for (std::size_t i = 0; i < sz; ++i) mags.push_back(mags[i] * p);
    }
    std::sort(mags.begin(), mags.end());
    std::vector<Integer> out;
    out.reserve(mags.size() * 2);
    for (const Integer& m : mags) {
        out.push_back(m);
        out.push_back(-m);
    }
    return out;
}

// All ordered pairs (c, d), c,d >= 1, c^2 + d^2 = n, sorted by c descending.
inline std::vector<std::pair<Integer, Integer>> sum_of_two_squares(const Integer& n) {
    if (n <= 0) throw std::domain_error("sum_of_two_squares: input must be positive");
    std::vector<std::pair<Integer, Integer>> out;
    for (Integer c = integer_sqrt(n - 1); c >= 1; --c) {
        Integer rest = n - c * c;
        if (rest < 1) continue;
        if (auto d = is_perfect_square(rest); d && *d >= 1) {
            out.emplace_back(c, *d);
        }
    }
    return out;
}

}  // namespace congruent
