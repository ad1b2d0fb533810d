#pragma once

// Rational right triangles with integer area, the correspondence with
// three squares in arithmetic progression, and Pythagorean-parameterization
// searches.

#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "congruent/numth.hpp"

namespace congruent {

// Legs a, b and hypotenuse h; area = a*b/2 is the integer `area_n`.
// The legs keep the order their construction produced; canonicalized()
// sorts them ascending when a deterministic orientation is wanted.
struct Triangle {
    Rational a, b, h;
    Integer area_n;

    Triangle canonicalized() const {
        if (a <= b) return *this;
        return {b, a, h, area_n};
    }

    bool operator==(const Triangle&) const = default;
};

inline bool verify_triangle(const Triangle& t) {
    if (t.a <= 0 || t.b <= 0 || t.h <= 0) return false;
    if (t.a * t.a + t.b * t.b != t.h * t.h) return false;
    if (t.a * t.b != 2 * Rational(t.area_n)) return false;
    return true;
}

// Three squares p^2, q^2, r^2 in arithmetic progression with common
// difference n. p may be signed; only its square matters.
struct ApTriple {
    Rational p, q, r;
    Integer n;

    bool valid() const {
        return q * q - p * p == Rational(n) && r * r - q * q == Rational(n);
    }
};

inline ApTriple ap_from_triangle(const Triangle& t) {
    return {(t.a - t.b) / 2, t.h / 2, (t.a + t.b) / 2, t.area_n};
}

inline Triangle triangle_from_ap(const ApTriple& ap) {
    if (!ap.valid()) throw std::invalid_argument("triangle_from_ap: not an AP of squares");
    Rational r = abs(ap.r), q = abs(ap.q);
    Rational a = r + ap.p, b = r - ap.p;
    if (a <= 0 || b <= 0)
        throw std::invalid_argument("triangle_from_ap: non-positive side");
    return {a, b, 2 * q, ap.n};
}

// Scale a triangle with integer area M = s*f^2 down to squarefree area s.
inline std::pair<Triangle, Integer> normalize_area(const Triangle& t) {
    auto [s, f] = squarefree_decompose(t.area_n);
    if (f == 1) return {t, Integer(1)};
    Rational fr(f);
    return {Triangle{t.a / fr, t.b / fr, t.h / fr, s}, f};
}

// p > q > 0, coprime, opposite parity.
struct PythParams {
    Integer p, q;

    bool valid() const {
        if (!(p > q && q > 0)) return false;
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        if (g != 1) return false;
        return ((p + q) % 2) != 0;
    }
};

// (p^2-q^2, 2pq, p^2+q^2) with legs sorted ascending; area p q (p^2-q^2).
inline Triangle pyth_triangle(const PythParams& params) {
    if (!params.valid()) throw std::invalid_argument("pyth_triangle: invalid parameters");
    const Integer &p = params.p, &q = params.q;
    Integer a = p * p - q * q, b = 2 * p * q, h = p * p + q * q;
    Integer area = p * q * (p * p - q * q);
    Triangle t{Rational(a), Rational(b), Rational(h), area};
    return t.canonicalized();
}

// All triangles of squarefree area n reachable from primitive parameters
// with p + q <= limit via p q (p^2 - q^2) = n D^2, scaled down by D.
// Deduplicated on canonical legs, sorted by denominator of the short leg.
inline std::vector<Triangle> pyth_search(const Integer& n, long limit, int workers = 1) {
    if (n < 1) throw std::domain_error("pyth_search: need n >= 1");
    if (limit < 3) throw std::domain_error("pyth_search: need limit >= 3");

    workers = std::max(1, workers);
    std::vector<std::map<std::pair<Rational, Rational>, Triangle>> partial(workers);
    auto run = [&](int w) {
        Integer area, d2;
        for (long p = 2 + w; p + 1 <= limit; p += workers) {
            for (long q = 1 + (p % 2 == 1 ? 1 : 0); q < p && p + q <= limit; q += 2) {
                if (std::gcd(p, q) != 1) continue;
                PythParams params{Integer(p), Integer(q)};
                area = params.p * params.q * (params.p * params.p - params.q * params.q);
                if (!mpz_divisible_p(area.get_mpz_t(), n.get_mpz_t())) continue;
                d2 = area / n;
                auto d = is_perfect_square(d2);
                if (!d) continue;
                Triangle t = pyth_triangle(params);
                Rational dr(*d);
                Triangle scaled{t.a / dr, t.b / dr, t.h / dr, n};
                partial[w].emplace(std::make_pair(scaled.a, scaled.b), scaled);
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::map<std::pair<Rational, Rational>, Triangle> dedup;
    for (auto& m : partial) dedup.merge(m);
    std::vector<Triangle> out;
    out.reserve(dedup.size());
    for (auto& [key, t] : dedup) out.push_back(t);
    std::sort(out.begin(), out.end(), [](const Triangle& x, const Triangle& y) {
        Integer dx = denominator(x.a), dy = denominator(y.a);
        if (dx != dy) return dx < dy;
        return x.a < y.a;
    });
    return out;
}

}  // namespace congruent
