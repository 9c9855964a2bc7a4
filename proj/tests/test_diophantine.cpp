#include <doctest.h>

#include <cmath>
#include <random>

#include "beattykit/diophantine.hpp"
#include "beattykit/errors.hpp"
#include "beattykit/real.hpp"

using namespace beattykit;
using dio::RationalApprox;

TEST_CASE("continued fractions of the standard quadratics") {
    auto sqrt2 = Real::sqrt_of(2);
    auto cf = dio::continued_fraction(sqrt2, 5);
    REQUIRE(cf.size() == 5);
    CHECK(cf[0] == 1);
    for (int i = 1; i < 5; ++i) CHECK(cf[i] == 2);

    auto phi = Real::golden_ratio();
    cf = dio::continued_fraction(phi, 5);
    REQUIRE(cf.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(cf[i] == 1);
}

TEST_CASE("continued fraction of a rational terminates exactly") {
    auto cf = dio::continued_fraction(Real::rational(mpq_class(7, 5)), 10);
    REQUIRE(cf.size() == 3);
    CHECK(cf[0] == 1);
    CHECK(cf[1] == 2);
    CHECK(cf[2] == 2);
}

TEST_CASE("convergents by the standard recurrence") {
    auto cs = dio::convergents(Real::sqrt_of(2), 5);
    REQUIRE(cs.size() == 5);
    long expect_a[] = {1, 3, 7, 17, 41};
    long expect_q[] = {1, 2, 5, 12, 29};
    for (int i = 0; i < 5; ++i) {
        CHECK(cs[i].a == expect_a[i]);
        CHECK(cs[i].q == expect_q[i]);
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), cs[i].a.get_mpz_t(), cs[i].q.get_mpz_t());
        CHECK(g == 1);
    }

    auto fib = dio::convergents(Real::golden_ratio(), 4);
    REQUIRE(fib.size() == 4);
    CHECK(fib[0].a == 1);
    CHECK(fib[1].a == 2);
    CHECK(fib[2].a == 3);
    CHECK(fib[2].q == 2);
    CHECK(fib[3].a == 5);
    CHECK(fib[3].q == 3);

    auto rat = dio::convergents(Real::rational(mpq_class(7, 5)), 10);
    REQUIRE(rat.size() == 3);
    CHECK(rat[2].a == 7);
    CHECK(rat[2].q == 5);
}

TEST_CASE("convergents alternate around the target") {
    for (auto x : {Real::sqrt_of(2), Real::golden_ratio(), Real::sqrt_of(7)}) {
        auto cs = dio::convergents(x, 12);
        int prev = 0;
        for (const auto& ap : cs) {
            mpq_class v(ap.a, ap.q);
            v.canonicalize();
            int s = -x.cmp_q(v);  // sign of a/q - x
            CHECK(s != 0);
            if (prev != 0) CHECK(s == -prev);
            prev = s;
        }
    }
}

TEST_CASE("best-approximation property ||q_i x|| < 1/q_{i+1}") {
    auto x = Real::sqrt_of(3);
    auto cs = dio::convergents(x, 14);
    for (size_t i = 0; i + 1 < cs.size(); ++i) {
        double dist =
            dio::dist_nearest_integer(x.mul_q(mpq_class(cs[i].q)));
        CHECK(dist < 1.0 / cs[i + 1].q.get_d());
    }
}

TEST_CASE("dist_nearest_integer") {
    CHECK(dio::dist_nearest_integer(2.5) == doctest::Approx(0.5));
    CHECK(dio::dist_nearest_integer(-0.25) == doctest::Approx(0.25));
    // 5*sqrt(2) = 7.07106...
    Real five_sqrt2 = Real::sqrt_of(2).mul_q(5);
    CHECK(dio::dist_nearest_integer(five_sqrt2) == doctest::Approx(0.0710678).epsilon(1e-5));
}

TEST_CASE("dirichlet_approx picks the largest convergent below K") {
    auto ap = dio::dirichlet_approx(Real::sqrt_of(2), 1, 10);
    CHECK(ap.a == 7);
    CHECK(ap.q == 5);
    CHECK(ap.err == doctest::Approx(0.0142136).epsilon(1e-4));
    CHECK(ap.err <= 1.0 / 50);

    // convergents of phi: 1/1, 2/1, 3/2, 5/3, 8/5 -- largest q <= 3 is 5/3
    ap = dio::dirichlet_approx(Real::golden_ratio(), 1, 3);
    CHECK(ap.a == 5);
    CHECK(ap.q == 3);
    CHECK(ap.err <= 1.0 / 9);

    // target 2*sqrt(2); 17/6 is the last convergent with q <= 20
    ap = dio::dirichlet_approx(Real::sqrt_of(2), 2, 20);
    CHECK(ap.a == 17);
    CHECK(ap.q == 6);
    CHECK(ap.err == doctest::Approx(std::abs(2.0 * std::sqrt(2.0) - 17.0 / 6.0)).epsilon(1e-6));
}

TEST_CASE("dirichlet_approx_mod") {
    auto base = dio::dirichlet_approx(Real::sqrt_of(2), 1, 10);
    auto mod1 = dio::dirichlet_approx_mod(Real::sqrt_of(2), 1, 1, 10);
    CHECK(base.a == mod1.a);
    CHECK(base.q == mod1.q);

    // target sqrt(2)/2: compare against an independent convergent scan
    auto target = Real::sqrt_of(2).mul_q(mpq_class(1, 2));
    auto cs = dio::convergents(target, 30);
    RationalApprox expect;
    for (const auto& c : cs)
        if (c.q <= 10) expect = c;
    auto got = dio::dirichlet_approx_mod(Real::sqrt_of(2), 1, 2, 10);
    CHECK(got.a == expect.a);
    CHECK(got.q == expect.q);
    CHECK(dio::approx_within(target, got, 10));

    // 3*phi/2 with K = 50
    auto t2 = Real::golden_ratio().mul_q(mpq_class(3, 2));
    auto got2 = dio::dirichlet_approx_mod(Real::golden_ratio(), 3, 2, 50);
    CHECK(got2.q <= 50);
    CHECK(dio::approx_within(t2, got2, 50));
}

TEST_CASE("approximation inequality holds exactly on random (w, K)") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<unsigned long> wd(1, 200);
    std::uniform_int_distribution<long> kd(2, 100000);
    for (auto alpha : {Real::sqrt_of(2), Real::golden_ratio()}) {
        for (int it = 0; it < 100; ++it) {
            unsigned long w = wd(rng);
            mpz_class K(kd(rng));
            auto ap = dio::dirichlet_approx(alpha, w, K);
            CHECK(ap.q <= K);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), ap.a.get_mpz_t(), ap.q.get_mpz_t());
            CHECK(g == 1);
            CHECK(dio::approx_within(alpha.mul_q(mpq_class(w)), ap, K));
        }
    }
}

TEST_CASE("estimate_type") {
    auto phi = dio::estimate_type(Real::golden_ratio(), 50);
    CHECK(phi.tau_hat == 1.0);
    CHECK(phi.exact);
    auto s2 = dio::estimate_type(Real::sqrt_of(2), 50);
    CHECK(s2.tau_hat == 1.0);
    CHECK(s2.exact);

    // phi to 200 decimal digits
    const char* phi200 =
        "1.6180339887498948482045868343656381177203091798057628621354486227052604628189"
        "02449707207204189391137484754088075386891752126633862223536931793180060766726354"
        "43338908659593958290563832266131992829026788";
    auto est = dio::estimate_type(Real::decimal(phi200), 50);
    CHECK(!est.exact);
    CHECK(est.tau_hat >= 1.0);
    CHECK(est.tau_hat <= 1.1);
}

TEST_CASE("estimate_type rejects rationals") {
    CHECK_THROWS_AS(dio::estimate_type(Real::rational(mpq_class(3, 2)), 10),
                    std::domain_error);
}

TEST_CASE("decimal literal runs out of certified quotients") {
    // ~6 significant digits cannot certify 50 partial quotients
    CHECK_THROWS_AS(dio::continued_fraction(Real::decimal("1.414213"), 50),
                    precision_exhausted);
}
