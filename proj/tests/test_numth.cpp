#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "congruent/numth.hpp"

using namespace congruent;

namespace {

// Trial-division oracle for squarefree decomposition, independent of factorize().
std::pair<Integer, Integer> squarefree_decompose_naive(Integer n) {
    Integer s = n < 0 ? -1 : 1, f = 1;
    Integer m = abs(n);
    for (Integer p = 2; p * p <= m; ++p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e & 1u) s *= p;
        for (unsigned i = 0; i < e / 2; ++i) f *= p;
    }
    s *= m;
    return {s, f};
}

}  // namespace

TEST_CASE("integer_sqrt basics") {
    CHECK(integer_sqrt(Integer(0)) == 0);
    CHECK(integer_sqrt(Integer(1764)) == 42);
    // 368^2 <= 136160 < 369^2
    CHECK(integer_sqrt(Integer(136160)) == 368);
    CHECK(Integer(368) * 368 <= 136160);
    CHECK(Integer(369) * 369 > 136160);
    CHECK_THROWS_AS(integer_sqrt(Integer(-1)), std::domain_error);
}

TEST_CASE("is_perfect_square") {
    auto r = is_perfect_square(Integer(136161));
    REQUIRE(r.has_value());
    CHECK(*r == 369);
    CHECK(!is_perfect_square(Integer(2)).has_value());
    CHECK(!is_perfect_square(Integer(-4)).has_value());
    CHECK(*is_perfect_square(Integer(0)) == 0);
}

TEST_CASE("is_perfect_square agrees with integer_sqrt on [1, 10^6] sample") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 20000; ++i) {
        Integer n(static_cast<unsigned long>(rng() % 1000000 + 1));
        Integer r = integer_sqrt(n);
        bool square = (r * r == n);
        CHECK(is_perfect_square(n).has_value() == square);
    }
}

TEST_CASE("squarefree_decompose") {
    auto [s1, f1] = squarefree_decompose(Integer(45));
    CHECK(s1 == 5);
    CHECK(f1 == 3);
    auto [s2, f2] = squarefree_decompose(Integer(6));
    CHECK(s2 == 6);
    CHECK(f2 == 1);
    auto [s3, f3] = squarefree_decompose(Integer(-18));
    CHECK(s3 == -2);
    CHECK(f3 == 3);
    CHECK_THROWS_AS(squarefree_decompose(Integer(0)), std::domain_error);
}

TEST_CASE("squarefree_decompose recomposes and is squarefree (randomized)") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        long v = static_cast<long>(rng() % 2000000) - 1000000;
        if (v == 0) continue;
        Integer n(v);
        auto [s, f] = squarefree_decompose(n);
        CHECK(s * f * f == n);
        CHECK(f >= 1);
        auto [so, fo] = squarefree_decompose_naive(n);
        CHECK(s == so);
        CHECK(f == fo);
        for (const auto& [p, e] : factorize(s).factors) {
            (void)p;
            CHECK(e == 1);
        }
    }
}

TEST_CASE("factorize") {
    Factorization f = factorize(Integer(1254));
    REQUIRE(f.factors.size() == 4);
    CHECK(f.factors[0].first == 2);
    CHECK(f.factors[1].first == 3);
    CHECK(f.factors[2].first == 11);
    CHECK(f.factors[3].first == 19);
    CHECK(f.reconstruct() == 1254);

    Factorization g = factorize(Integer(1000001));
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].first == 101);
    CHECK(g.factors[1].first == 9901);

    Factorization unit = factorize(Integer(1));
    CHECK(unit.factors.empty());
    CHECK(unit.sign == 1);

    CHECK_THROWS_AS(factorize(Integer(0)), std::domain_error);
}

TEST_CASE("factorize certifies primes") {
    for (const auto& [p, e] : factorize(Integer(29274)).factors) {
        (void)e;
        CHECK(is_prime(p));
    }
    // a semiprime beyond the trial-division bound to exercise rho
    Integer p1("2147483659"), p2("4294967311");
    Integer big = p1 * p2;
    Factorization f = factorize(big);
    CHECK(f.reconstruct() == big);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == p1);
    CHECK(f.factors[1].first == p2);
    for (const auto& [p, e] : f.factors) {
        (void)e;
        CHECK(is_prime(p));
    }
}

TEST_CASE("signed_squarefree_divisors") {
    std::vector<Integer> d6 = signed_squarefree_divisors(Integer(6));
    std::vector<Integer> want{1, -1, 2, -2, 3, -3, 6, -6};
    CHECK(d6 == want);

    std::vector<Integer> dp = signed_squarefree_divisors(Integer(41));
    std::vector<Integer> wantp{1, -1, 41, -41};
    CHECK(dp == wantp);

    // brute-force oracle for 12: divisors, squarefree filter
    std::vector<Integer> d12 = signed_squarefree_divisors(Integer(12));
    std::set<Integer> got(d12.begin(), d12.end());
    std::set<Integer> expect;
    for (long k = 1; k <= 12; ++k) {
        if (12 % k != 0) continue;
        bool sf = true;
        for (long p = 2; p * p <= k; ++p)
            if (k % (p * p) == 0) sf = false;
        if (sf) {
            expect.insert(Integer(k));
            expect.insert(Integer(-k));
        }
    }
    CHECK(got == expect);
}

TEST_CASE("sum_of_two_squares") {
    auto r157 = sum_of_two_squares(Integer(157));
    REQUIRE(r157.size() == 2);
    CHECK(r157[0] == std::pair<Integer, Integer>(11, 6));
    CHECK(r157[1] == std::pair<Integer, Integer>(6, 11));

    auto r37 = sum_of_two_squares(Integer(37));
    REQUIRE(r37.size() == 2);
    CHECK(r37[0] == std::pair<Integer, Integer>(6, 1));
    CHECK(r37[1] == std::pair<Integer, Integer>(1, 6));

    CHECK(sum_of_two_squares(Integer(3)).empty());
}

TEST_CASE("sum_of_two_squares exhaustive against double loop, n <= 10^4") {
    for (long n = 1; n <= 10000; ++n) {
        auto fast = sum_of_two_squares(Integer(n));
        std::set<std::pair<long, long>> brute;
        for (long c = 1; c * c < n; ++c)
            for (long d = 1; c * c + d * d <= n; ++d)
                if (c * c + d * d == n) brute.insert({c, d});
        std::set<std::pair<long, long>> got;
        for (const auto& [c, d] : fast) {
            CHECK(c * c + d * d == n);
            got.insert({c.get_si(), d.get_si()});
        }
        REQUIRE(got == brute);
    }
}

TEST_CASE("rational arithmetic is exact on 200-digit operands") {
    std::mt19937_64 rng(99);
    auto random_digits = [&](int len) {
        std::string s = "1";
        for (int i = 1; i < len; ++i) s += static_cast<char>('0' + rng() % 10);
        return Integer(s);
    };
    for (int i = 0; i < 50; ++i) {
        Integer a = random_digits(200), b = random_digits(199);
        Integer c = random_digits(200), d = random_digits(198);
        Rational x = make_rational(a, b), y = make_rational(c, d);
        // (a/b + c/d) * (b*d) = a*d + c*b
        Rational lhs = (x + y) * Rational(b * d);
        CHECK(lhs == Rational(a * d + c * b));
        CHECK((x * y) * (make_rational(b, a) * make_rational(d, c)) == 1);
        CHECK(denominator(x) > 0);
    }
}

TEST_CASE("rational helpers") {
    Rational r = make_rational(Integer(6), Integer(-4));
    CHECK(numerator(r) == -3);
    CHECK(denominator(r) == 2);
    CHECK(rat_floor(r) == -2);
    CHECK(rat_ceil(r) == -1);
    CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), std::domain_error);
    auto s = rational_sqrt(make_rational(9, 4));
    REQUIRE(s.has_value());
    CHECK(*s == make_rational(3, 2));
    CHECK(!rational_sqrt(make_rational(2, 1)).has_value());
}
