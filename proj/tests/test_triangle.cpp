#include <catch2/catch_amalgamated.hpp>

#include "congruent/triangle.hpp"

using namespace congruent;

namespace {

Rational rat(const char* s) {
    Rational r;
    r.set_str(s, 10);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("verify_triangle") {
    CHECK(verify_triangle({Rational(3), Rational(4), Rational(5), Integer(6)}));
    CHECK(verify_triangle({rat("3/2"), rat("20/3"), rat("41/6"), Integer(5)}));
    CHECK(!verify_triangle({Rational(3), Rational(4), Rational(6), Integer(6)}));
    CHECK(!verify_triangle({Rational(-3), Rational(-4), Rational(5), Integer(6)}));
}

TEST_CASE("ap_from_triangle") {
    ApTriple ap = ap_from_triangle({Rational(3), Rational(4), Rational(5), Integer(6)});
    CHECK(ap.p == rat("-1/2"));
    CHECK(ap.q == rat("5/2"));
    CHECK(ap.r == rat("7/2"));
    CHECK(ap.q * ap.q - ap.p * ap.p == 6);
    CHECK(ap.r * ap.r - ap.q * ap.q == 6);

    ApTriple ap5 = ap_from_triangle({rat("3/2"), rat("20/3"), rat("41/6"), Integer(5)});
    CHECK(ap5.p == rat("-31/12"));
    CHECK(ap5.q == rat("41/12"));
    CHECK(ap5.r == rat("49/12"));
    CHECK(ap5.valid());
}

TEST_CASE("triangle_from_ap") {
    Triangle t = triangle_from_ap({rat("-1/2"), rat("5/2"), rat("7/2"), Integer(6)});
    CHECK(t.a == 3);
    CHECK(t.b == 4);
    CHECK(t.h == 5);
    CHECK(verify_triangle(t));

    // malformed AP
    CHECK_THROWS_AS(triangle_from_ap({Rational(2), Rational(1), Rational(1), Integer(3)}),
                    std::invalid_argument);
}

TEST_CASE("triangle_from_ap round trips") {
    for (Triangle t : {Triangle{Rational(3), Rational(4), Rational(5), Integer(6)},
                       Triangle{rat("3/2"), rat("20/3"), rat("41/6"), Integer(5)},
                       Triangle{rat("20/3"), rat("3/2"), rat("41/6"), Integer(5)},
                       Triangle{rat("7/10"), rat("120/7"), rat("1201/70"), Integer(6)}}) {
        CHECK(triangle_from_ap(ap_from_triangle(t)) == t);
    }
}

TEST_CASE("hartley N=37 chain feeds the lemma to the published triangle") {
    // x, y, z from the worked chain; AP is (yz - x, x, x + y)
    Rational x = rat("605170417321/9475102140");
    Rational y = rat("37002/128035");
    Rational z = rat("777925/1764");
    ApTriple ap{y * z - x, x, x + y, Integer(37)};
    REQUIRE(ap.valid());
    Triangle t = triangle_from_ap(ap);
    CHECK(t.a == rat("777923/6090"));
    CHECK(t.b == rat("450660/777923"));
    CHECK(verify_triangle(t));
}

TEST_CASE("normalize_area") {
    auto [t1, f1] = normalize_area({Rational(15), Rational(8), Rational(17), Integer(60)});
    CHECK(f1 == 2);
    CHECK(t1.a == rat("15/2"));
    CHECK(t1.b == Rational(4));
    CHECK(t1.h == rat("17/2"));
    CHECK(t1.area_n == 15);

    auto [t2, f2] = normalize_area({Rational(7), Rational(24), Rational(25), Integer(84)});
    CHECK(f2 == 2);
    CHECK(t2.a == rat("7/2"));
    CHECK(t2.b == Rational(12));
    CHECK(t2.h == rat("25/2"));
    CHECK(t2.area_n == 21);

    Triangle sf{Rational(3), Rational(4), Rational(5), Integer(6)};
    auto [t3, f3] = normalize_area(sf);
    CHECK(f3 == 1);
    CHECK(t3 == sf);
}

TEST_CASE("pyth_triangle basic areas") {
    Triangle t1 = pyth_triangle({Integer(2), Integer(1)});
    CHECK(t1 == Triangle{Rational(3), Rational(4), Rational(5), Integer(6)});
    Triangle t2 = pyth_triangle({Integer(3), Integer(2)});
    CHECK(t2 == Triangle{Rational(5), Rational(12), Rational(13), Integer(30)});
    Triangle t3 = pyth_triangle({Integer(5), Integer(2)});
    CHECK(t3 == Triangle{Rational(20), Rational(21), Rational(29), Integer(210)});
    CHECK_THROWS_AS(pyth_triangle({Integer(3), Integer(1)}), std::invalid_argument);
    CHECK_THROWS_AS(pyth_triangle({Integer(4), Integer(2)}), std::invalid_argument);
}

TEST_CASE("pyth_triangle sides are a primitive triple with odd/even legs") {
    for (long p = 2; p <= 12; ++p) {
        for (long q = 1; q < p; ++q) {
            PythParams params{Integer(p), Integer(q)};
            if (!params.valid()) continue;
            Triangle t = pyth_triangle(params);
            Integer a = numerator(t.a), b = numerator(t.b), h = numerator(t.h);
            CHECK(denominator(t.a) == 1);
            CHECK(denominator(t.b) == 1);
            CHECK(denominator(t.h) == 1);
            Integer g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
            CHECK(g == 1);
            CHECK(((a % 2 == 0) != (b % 2 == 0)));
        }
    }
}

TEST_CASE("pyth_search finds (3,4,5) for n=6") {
    auto res = pyth_search(Integer(6), 10);
    bool found = false;
    for (const Triangle& t : res) {
        CHECK(verify_triangle(t));
        if (t.a == 3 && t.b == 4) found = true;
    }
    CHECK(found);
}

TEST_CASE("pyth_search worker partitioning is invariant") {
    auto r1 = pyth_search(Integer(210), 120, 1);
    auto r2 = pyth_search(Integer(210), 120, 2);
    auto r8 = pyth_search(Integer(210), 120, 8);
    CHECK(!r1.empty());
    CHECK(r1 == r2);
    CHECK(r1 == r8);
}

TEST_CASE("pyth_search scales non-primitive areas down") {
    // p q (p^2 - q^2) = 60 at (4,1) has area 60 = 15 * 2^2 -> n=15, D=2
    auto res = pyth_search(Integer(15), 10);
    bool found = false;
    for (const Triangle& t : res)
        if (t.a == 4 && t.b == rat("15/2")) found = true;
    CHECK(found);
}
