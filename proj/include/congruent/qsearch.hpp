#pragma once

// Rational-point search on w^2 = q(x) for integer quartics q: exact Sturm
// root isolation for positivity bounds, residue-table sieving of the
// homogeneous form, and the product-of-two-quadratics descent that turns a
// hard quartic into a second, hopefully easier, one.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "congruent/numth.hpp"

namespace congruent {

// q(x) = c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, integer coefficients.
struct QuarticCurve {
    Integer c4, c3, c2, c1, c0;

    bool is_zero() const { return c4 == 0 && c3 == 0 && c2 == 0 && c1 == 0 && c0 == 0; }

    Rational eval(const Rational& x) const {
        Rational v(c4);
        v = v * x + Rational(c3);
        v = v * x + Rational(c2);
        v = v * x + Rational(c1);
        v = v * x + Rational(c0);
        return v;
    }

    // P(p,q) = c4 p^4 + c3 p^3 q + c2 p^2 q^2 + c1 p q^3 + c0 q^4 = q^4 * q(p/q)
    Integer eval_homogeneous(const Integer& p, const Integer& q) const {
        Integer q2 = q * q, q3 = q2 * q, q4 = q3 * q;
        Integer v = c4 * p + c3 * q;
        v = v * p + c2 * q2;
        v = v * p + c1 * q3;
        v = v * p + c0 * q4;
        return v;
    }

    // divide all coefficients by their gcd (sign of the leading term kept)
    QuarticCurve primitive_part() const {
        Integer g = 0;
        for (const Integer* c : {&c4, &c3, &c2, &c1, &c0}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c->get_mpz_t());
        if (g == 0 || g == 1) return *this;
        return {c4 / g, c3 / g, c2 / g, c1 / g, c0 / g};
    }

    bool operator==(const QuarticCurve&) const = default;
};

struct QuarticHit {
    Rational x;
    Rational w;  // w >= 0; w^2 = q(x) (or m*w^2 = q(x) for scaled searches)

    bool operator==(const QuarticHit&) const = default;
};

// --- exact polynomial machinery (Sturm sequences) ---------------------------

namespace poly {

// dense coefficients, index = degree
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Rational eval(const Poly& p, const Rational& x) {
    Rational v(0);
    for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

inline Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
    trim(d);
    return d;
}

// remainder of a / b, b nonzero
inline Poly rem(Poly a, const Poly& b) {
    trim(a);
    while (degree(a) >= degree(b) && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    Poly a = p;
    trim(a);
    if (a.empty()) return chain;
    chain.push_back(a);
    Poly b = derivative(a);
    while (!b.empty()) {
        chain.push_back(b);
        Poly r = rem(chain[chain.size() - 2], b);
        for (Rational& c : r) c = -c;
        b = std::move(r);
    }
    return chain;
}

inline int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline int sign_changes_at(const std::vector<Poly>& chain, const Rational& x) {
    int changes = 0, last = 0;
    for (const Poly& p : chain) {
        int s = sign_of(eval(p, x));
        if (s != 0) {
            if (last != 0 && s != last) ++changes;
            last = s;
        }
    }
    return changes;
}

inline int sign_changes_at_inf(const std::vector<Poly>& chain, bool plus) {
    int changes = 0, last = 0;
    for (const Poly& p : chain) {
        int s = sign_of(p.back());
        if (!plus && (degree(p) & 1)) s = -s;
        if (s != 0) {
            if (last != 0 && s != last) ++changes;
            last = s;
        }
    }
    return changes;
}

}  // namespace poly

// Half-open or unbounded rational interval; no endpoint means infinite.
struct RatInterval {
    std::optional<Rational> lo, hi;

    bool contains(const Rational& x) const {
        if (lo && x < *lo) return false;
        if (hi && x > *hi) return false;
        return true;
    }
};

// Intervals whose union covers {x : q(x) >= 0}. Boundary roots are isolated
// by exact Sturm sequences and refined by bisection to width <= 1/64, so the
// cover overshoots each sign change by at most that much.
inline std::vector<RatInterval> positivity_intervals(const QuarticCurve& q) {
    if (q.is_zero()) throw std::domain_error("positivity_intervals: zero quartic");
    poly::Poly p;
    for (const Integer* c : {&q.c0, &q.c1, &q.c2, &q.c3, &q.c4}) p.push_back(Rational(*c));
    poly::trim(p);

    if (poly::degree(p) == 0) {
        if (p[0] >= 0) return {RatInterval{}};
        return {};
    }

    // squarefree part, so Sturm isolation is clean at multiple roots
    poly::Poly g = poly::gcd(p, poly::derivative(p));
    poly::Poly sf = p;
    if (poly::degree(g) >= 1) {
        // exact division p / g
        poly::Poly quo(p.size() - g.size() + 1, Rational(0));
        poly::Poly restp = p;
        for (std::size_t i = quo.size(); i-- > 0;) {
            if (restp.size() < g.size() + i) continue;
            Rational f = restp[g.size() - 1 + i] / g.back();
            quo[i] = f;
            for (std::size_t j = 0; j < g.size(); ++j) restp[i + j] -= f * g[j];
        }
        sf = quo;
        poly::trim(sf);
    }

    auto chain = poly::sturm_chain(sf);

    // Cauchy bound on root magnitudes
    Rational bound(1);
    for (std::size_t i = 0; i + 1 < sf.size(); ++i) {
        Rational c = abs(sf[i] / sf.back());
        if (c > bound) bound = c;
    }
    bound += 1;

    int total = poly::sign_changes_at(chain, -bound) - poly::sign_changes_at(chain, bound);

    // isolate, then refine to width <= 1/64
    struct Span {
        Rational lo, hi;
        int count;
    };
    std::vector<Span> work{{-bound, bound, total}};
    std::vector<std::pair<Rational, Rational>> roots;
    const Rational min_width = make_rational(1, 64);
    while (!work.empty()) {
        Span s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1 && s.hi - s.lo <= min_width) {
            roots.emplace_back(s.lo, s.hi);
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (poly::eval(sf, mid) == 0) {
            // exact rational root at the midpoint: bracket it tightly
            Rational eps = (s.hi - s.lo) / 1024;
            Rational l = mid - eps, r = mid + eps;
            int inner = poly::sign_changes_at(chain, l) - poly::sign_changes_at(chain, r);
            int left = poly::sign_changes_at(chain, s.lo) - poly::sign_changes_at(chain, l);
            int right = s.count - inner - left;
            if (inner > 0) {
                if (inner == 1 && r - l <= min_width)
                    roots.emplace_back(l, r);
                else
                    work.push_back({l, r, inner});
            }
            if (left > 0) work.push_back({s.lo, l, left});
            if (right > 0) work.push_back({r, s.hi, right});
            continue;
        }
        int left = poly::sign_changes_at(chain, s.lo) - poly::sign_changes_at(chain, mid);
        int right = s.count - left;
        if (left > 0) work.push_back({s.lo, mid, left});
        if (right > 0) work.push_back({mid, s.hi, right});
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // assemble sign intervals; sample strictly between root brackets
    std::vector<RatInterval> out;
    auto sample_sign = [&](const Rational& x) { return poly::sign_of(poly::eval(p, x)); };

    std::optional<Rational> open_lo;
    bool in_pos = false;
    // region left of all roots
    Rational probe = roots.empty() ? Rational(0) : roots.front().first - 1;
    if (sample_sign(probe) >= 0) {
        in_pos = true;
        open_lo = std::nullopt;  // -inf
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto& [rlo, rhi] = roots[i];
        Rational next_probe = (i + 1 < roots.size())
                                  ? Rational((rhi + roots[i + 1].first) / 2)
                                  : Rational(rhi + 1);
        int s_after = sample_sign(next_probe);
        if (in_pos && s_after < 0) {
            out.push_back({open_lo, rhi});  // overshoot into the root bracket
            in_pos = false;
        } else if (!in_pos && s_after >= 0) {
            open_lo = rlo;
            in_pos = true;
        }
        // sign unchanged across a root (even multiplicity): interval continues
    }
    if (in_pos) out.push_back({open_lo, std::nullopt});
    return out;
}

// --- sieve ------------------------------------------------------------------

// For modulus M, accepts (p mod M, q mod M) iff P(p,q) = m * s^2 (mod M) has a
// solution s. Never rejects a genuine hit.
class QuarticSieve {
  public:
    QuarticSieve(const QuarticCurve& q, const Integer& m) {
        for (std::size_t t = 0; t < kModuli.size(); ++t) {
            const unsigned M = kModuli[t];
            std::vector<uint8_t> scaled(M, 0);
            for (unsigned s = 0; s < M; ++s) {
                unsigned long v = mpz_fdiv_ui(Integer(m * s * s).get_mpz_t(), M);
                scaled[v] = 1;
            }
            std::array<unsigned long, 5> c{};
            c[0] = mpz_fdiv_ui(q.c4.get_mpz_t(), M);
            c[1] = mpz_fdiv_ui(q.c3.get_mpz_t(), M);
            c[2] = mpz_fdiv_ui(q.c2.get_mpz_t(), M);
            c[3] = mpz_fdiv_ui(q.c1.get_mpz_t(), M);
            c[4] = mpz_fdiv_ui(q.c0.get_mpz_t(), M);
            auto& table = tables_[t];
            table.assign(static_cast<std::size_t>(M) * M, 0);
            for (unsigned pp = 0; pp < M; ++pp) {
                for (unsigned qq = 0; qq < M; ++qq) {
                    unsigned long q2 = (qq * qq) % M;
                    unsigned long q3 = (q2 * qq) % M;
                    unsigned long q4 = (q3 * qq) % M;
                    unsigned long v = (c[0] * pp + c[1] * qq) % M;
                    v = (v * pp + c[2] * q2) % M;
                    v = (v * pp + c[3] * q3) % M;
                    v = (v * pp + c[4] * q4) % M;
                    table[static_cast<std::size_t>(pp) * M + qq] = scaled[v];
                }
            }
        }
    }

    bool passes(long p, long q) const {
        for (std::size_t t = 0; t < kModuli.size(); ++t) {
            const long M = kModuli[t];
            long pr = p % M;
            if (pr < 0) pr += M;
            long qr = q % M;
            if (qr < 0) qr += M;
            if (!tables_[t][static_cast<std::size_t>(pr) * M + qr]) return false;
        }
        return true;
    }

    static constexpr std::array<unsigned, 4> kModuli{64, 63, 65, 11};

  private:
    std::array<std::vector<uint8_t>, 4> tables_;
};

// --- searches ---------------------------------------------------------------

struct SearchOptions {
    long limit = 9999;          // |p| + q <= limit
    int workers = 1;            // full-listing searches only
    bool positive_only = false; // restrict numerators to p >= 1
    bool skip_zero = false;     // drop hits with value 0
    std::chrono::steady_clock::time_point deadline{std::chrono::steady_clock::time_point::max()};
};

struct HomogeneousHit {
    Integer p, q;     // x = p/q in lowest terms, q >= 1
    Integer root;     // root^2 = P(p,q) / m, root >= 0
};

namespace detail {

struct RowRange {
    long lo, hi;  // inclusive numerator range
};

// numerator ranges for denominator q, clipped by the positivity cover
inline std::vector<RowRange> row_ranges(const std::vector<RatInterval>& intervals,
                                        long q, long limit, bool positive_only) {
    long span = limit - q;
    std::vector<RowRange> rows;
    for (const RatInterval& iv : intervals) {
        long lo = positive_only ? 1 : -span;
        long hi = span;
        if (iv.lo) {
            Integer c = rat_ceil(*iv.lo * q);
            if (c > hi) continue;
            if (c > lo) lo = c.get_si();
        }
        if (iv.hi) {
            Integer f = rat_floor(*iv.hi * q);
            if (f < lo) continue;
            if (f < hi) hi = f.get_si();
        }
        if (lo <= hi) rows.push_back({lo, hi});
    }
    return rows;
}

inline bool search_row(const QuarticCurve& quartic, const Integer& m,
                       const QuarticSieve& sieve,
                       const std::vector<RowRange>& rows, long q, bool skip_zero,
                       const std::function<bool(HomogeneousHit)>& emit) {
    Integer qi(q);
    Integer value, scaled;
    for (const RowRange& r : rows) {
        for (long p = r.lo; p <= r.hi; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            if (!sieve.passes(p, q)) continue;
            value = quartic.eval_homogeneous(Integer(p), qi);
            if (value == 0) {
                if (skip_zero) continue;
                if (emit({Integer(p), qi, Integer(0)})) return true;
                continue;
            }
            if (!mpz_divisible_p(value.get_mpz_t(), m.get_mpz_t())) continue;
            scaled = value / m;
            if (scaled < 0) continue;
            if (auto root = is_perfect_square(scaled)) {
                if (emit({Integer(p), qi, *root})) return true;
            }
        }
    }
    return false;
}

}  // namespace detail

// All hits of q(x) = m * w^2 over x = p/q', |p| + q' <= limit, sorted by
// (q', p). Workers partition denominators round-robin; the merged result is
// identical for any worker count.
inline std::vector<HomogeneousHit> scaled_search_all(const QuarticCurve& quartic,
                                                     const Integer& m,
                                                     const SearchOptions& opt) {
    if (m == 0) throw std::domain_error("scaled search: zero multiplier");
    QuarticCurve oriented = quartic;
    if (m < 0) {
        oriented = {-quartic.c4, -quartic.c3, -quartic.c2, -quartic.c1, -quartic.c0};
    }
    auto intervals = positivity_intervals(oriented);
    QuarticSieve sieve(quartic, m);

    int workers = std::max(1, opt.workers);
    std::vector<std::vector<HomogeneousHit>> partial(workers);
    auto run = [&](int w) {
        for (long q = 1 + w; q < opt.limit; q += workers) {
            auto rows = detail::row_ranges(intervals, q, opt.limit, opt.positive_only);
            detail::search_row(quartic, m, sieve, rows, q, opt.skip_zero,
                               [&](HomogeneousHit h) {
                                   partial[w].push_back(std::move(h));
                                   return false;
                               });
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    std::vector<HomogeneousHit> hits;
    for (auto& v : partial)
        for (auto& h : v) hits.push_back(std::move(h));
    std::sort(hits.begin(), hits.end(), [](const HomogeneousHit& a, const HomogeneousHit& b) {
        if (a.q != b.q) return a.q < b.q;
        return a.p < b.p;
    });
    return hits;
}

// First hit in (q', p) order, or nothing. Single-threaded by construction so
// "first" is well defined; honors the deadline between denominator rows.
inline std::optional<HomogeneousHit> scaled_search_first(const QuarticCurve& quartic,
                                                         const Integer& m,
                                                         const SearchOptions& opt) {
    if (m == 0) throw std::domain_error("scaled search: zero multiplier");
    QuarticCurve oriented = quartic;
    if (m < 0) {
        oriented = {-quartic.c4, -quartic.c3, -quartic.c2, -quartic.c1, -quartic.c0};
    }
    auto intervals = positivity_intervals(oriented);
    QuarticSieve sieve(quartic, m);
    std::optional<HomogeneousHit> found;
    for (long q = 1; q < opt.limit; ++q) {
        if (std::chrono::steady_clock::now() > opt.deadline) break;
        auto rows = detail::row_ranges(intervals, q, opt.limit, opt.positive_only);
        if (detail::search_row(quartic, m, sieve, rows, q, opt.skip_zero,
                               [&](HomogeneousHit h) {
                                   found = std::move(h);
                                   return true;
                               }))
            break;
    }
    return found;
}

inline std::vector<QuarticHit> quartic_search_scaled(const QuarticCurve& q, const Integer& m,
                                                     long limit, int workers = 1) {
    SearchOptions opt;
    opt.limit = limit;
    opt.workers = workers;
    std::vector<QuarticHit> out;
    for (const HomogeneousHit& h : scaled_search_all(q, m, opt)) {
        out.push_back({make_rational(h.p, h.q), make_rational(h.root, h.q * h.q)});
    }
    return out;
}

inline std::vector<QuarticHit> quartic_search(const QuarticCurve& q, long limit,
                                              int workers = 1) {
    return quartic_search_scaled(q, Integer(1), limit, workers);
}

// --- rational roots ---------------------------------------------------------

// Minimal-denominator rational in [a, b]; continued-fraction recursion.
inline Rational simplest_rational_between(const Rational& a, const Rational& b) {
    if (a > b) throw std::invalid_argument("simplest_rational_between: empty interval");
    Integer ca = rat_ceil(a);
    if (Rational(ca) <= b) return Rational(ca);
    Integer ia = rat_floor(a);  // == floor(b), no integer inside
    Rational fa = a - Rational(ia), fb = b - Rational(ia);
    Rational inner = simplest_rational_between(1 / fb, 1 / fa);
    return Rational(ia) + 1 / inner;
}

// Exact rational roots of an integer quartic: isolate real roots, shrink each
// bracket until continued-fraction reconstruction with denominator bound |c4|
// is unambiguous, then confirm by substitution.
inline std::vector<Rational> rational_roots(const QuarticCurve& q) {
    QuarticCurve prim = q.primitive_part();
    if (prim.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    poly::Poly p;
    for (const Integer* c : {&prim.c0, &prim.c1, &prim.c2, &prim.c3, &prim.c4})
        p.push_back(Rational(*c));
    poly::trim(p);
    if (poly::degree(p) < 1) return {};

    Integer lead = numerator(p.back());
    Rational den_bound(abs(lead));
    // interval width below 1/(2 B^2) pins a unique rational with denominator <= B
    Rational target = make_rational(Integer(1), 2 * abs(lead) * abs(lead) + 1);

    poly::Poly g = poly::gcd(p, poly::derivative(p));
    poly::Poly sf = p;
    if (poly::degree(g) >= 1) {
        poly::Poly quo(p.size() - g.size() + 1, Rational(0));
        poly::Poly restp = p;
        for (std::size_t i = quo.size(); i-- > 0;) {
            Rational f = restp[g.size() - 1 + i] / g.back();
            quo[i] = f;
            for (std::size_t j = 0; j < g.size(); ++j) restp[i + j] -= f * g[j];
        }
        sf = quo;
        poly::trim(sf);
    }
    auto chain = poly::sturm_chain(sf);
    Rational bound(1);
    for (std::size_t i = 0; i + 1 < sf.size(); ++i) {
        Rational c = abs(sf[i] / sf.back());
        if (c > bound) bound = c;
    }
    bound += 1;

    std::vector<Rational> out;
    struct Span {
        Rational lo, hi;
        int count;
    };
    int total = poly::sign_changes_at(chain, -bound) - poly::sign_changes_at(chain, bound);
    std::vector<Span> work{{-bound, bound, total}};
    while (!work.empty()) {
        Span s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        Rational mid = (s.lo + s.hi) / 2;
        if (poly::eval(sf, mid) == 0) {
            out.push_back(mid);
            // split around the found root
            Rational eps = (s.hi - s.lo) / 1024;
            int left = poly::sign_changes_at(chain, s.lo) -
                       poly::sign_changes_at(chain, mid - eps);
            int right = poly::sign_changes_at(chain, mid + eps) -
                        poly::sign_changes_at(chain, s.hi);
            if (left > 0) work.push_back({s.lo, mid - eps, left});
            if (right > 0) work.push_back({mid + eps, s.hi, right});
            continue;
        }
        if (s.count == 1 && s.hi - s.lo < target) {
            Rational cand = simplest_rational_between(s.lo, s.hi);
            if (poly::eval(p, cand) == 0) out.push_back(cand);
            continue;
        }
        int left = poly::sign_changes_at(chain, s.lo) - poly::sign_changes_at(chain, mid);
        int right = s.count - left;
        if (left > 0) work.push_back({s.lo, mid, left});
        if (right > 0) work.push_back({mid, s.hi, right});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- conics and descent -----------------------------------------------------

// a x^2 + b x + c, considered against k y^2.
struct Conic {
    Integer a, b, c;

    Integer discriminant() const { return b * b - 4 * a * c; }

    Rational eval(const Rational& x) const {
        return Rational(a) * x * x + Rational(b) * x + Rational(c);
    }

    Integer eval_homogeneous(const Integer& p, const Integer& q) const {
        return a * p * p + b * p * q + c * q * q;
    }
};

// Sylvester resultant of two quadratics, via the 4x4 determinant.
inline Integer resultant(const Conic& f, const Conic& g) {
    const Integer m[4][4] = {{f.a, f.b, f.c, 0},
                             {0, f.a, f.b, f.c},
                             {g.a, g.b, g.c, 0},
                             {0, g.a, g.b, g.c}};
    Integer det = 0;
    // 24 permutations, expanded directly
    std::function<void(int, int, Integer)> go = [&](int depth, int used, Integer prod) {
        if (depth == 4) {
            det += prod;
            return;
        }
        for (int col = 0; col < 4; ++col) {
            if (used & (1 << col)) continue;
            int inversions = 0;
            for (int c2 = 0; c2 < col; ++c2)
                if (!(used & (1 << c2))) ++inversions;
            Integer next = prod * m[depth][col];
            if (inversions & 1) next = -next;
            go(depth + 1, used | (1 << col), next);
        }
    };
    go(0, 0, Integer(1));
    return det;
}

struct QuadricPair {
    Conic first, second;
    std::vector<Integer> k_candidates;
};

// Signed squarefree divisors of the resultant; the only k for which
// first = k y^2, second = k z^2 can hold simultaneously.
inline std::vector<Integer> resultant_k_candidates(const Conic& f, const Conic& g) {
    Integer res = resultant(f, g);
    if (res == 0) throw std::domain_error("resultant_k_candidates: quadratics share a root");
    return signed_squarefree_divisors(res);
}

inline QuadricPair make_quadric_pair(const Conic& f, const Conic& g) {
    return {f, g, resultant_k_candidates(f, g)};
}

// Second intersection of the line of slope t through (x0, y0) with
// a x^2 + b x + c = k y^2. Exactness of the input point is verified.
inline std::pair<Rational, Rational> conic_second_point(const Conic& conic, const Integer& k,
                                                        const Rational& x0, const Rational& y0,
                                                        const Rational& t) {
    if (conic.eval(x0) != Rational(k) * y0 * y0)
        throw std::invalid_argument("conic_second_point: known point not on conic");
    Rational denom = Rational(k) * t * t - Rational(conic.a);
    if (denom == 0) throw std::domain_error("conic_second_point: asymptotic slope");
    Rational x =
        (Rational(conic.a) * x0 + Rational(conic.b) + Rational(k) * t * (t * x0 - 2 * y0)) /
        denom;
    Rational y = y0 + t * (x - x0);
    if (conic.eval(x) != Rational(k) * y * y)
        throw std::logic_error("conic_second_point: result not on conic");
    return {x, y};
}

// The descent quartic in the line slope t: given first = k y^2 with known
// homogeneous point (p0, w0, q0), sliding the chord and substituting into
// second = k z^2 forces this integer quartic to be a square.
inline QuarticCurve product_descent(const QuadricPair& pair, const Integer& k,
                                    const Integer& p0, const Integer& w0, const Integer& q0) {
    const Integer &a = pair.first.a, &b = pair.first.b;
    const Integer &d = pair.second.a, &e = pair.second.b, &f = pair.second.c;
    if (q0 <= 0) throw std::invalid_argument("product_descent: need q0 > 0");
    if (pair.first.eval_homogeneous(p0, q0) != k * w0 * w0)
        throw std::invalid_argument("product_descent: seed not on first conic");
    Integer k2 = k * k, k3 = k2 * k;
    QuarticCurve q;
    q.c4 = k3 * (d * p0 * p0 + e * p0 * q0 + f * q0 * q0);
    q.c3 = -2 * k3 * w0 * (2 * d * p0 + e * q0);
    q.c2 = k2 * (2 * a * (d * p0 * p0 - f * q0 * q0) + b * q0 * (2 * d * p0 + e * q0) +
                 4 * d * k * w0 * w0);
    q.c1 = -2 * k2 * w0 * (a * (2 * d * p0 - e * q0) + 2 * b * d * q0);
    q.c0 = k * (a * a * (d * p0 * p0 - e * p0 * q0 + f * q0 * q0) +
                a * b * q0 * (2 * d * p0 - e * q0) + b * b * d * q0 * q0);
    return q;
}

}  // namespace congruent
