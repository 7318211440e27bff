#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unimodal/bessel.hpp"

using namespace unimodal;

namespace {
BallScalar mpq_ball(long num, long den, Prec p = 320) {
    mpq_class q(num, den);
    q.canonicalize();
    return BallScalar::from_mpq(q, p);
}
}  // namespace

TEST_CASE("value at y=1: 2/(e sqrt(2 pi))") {
    // frozen from the series oracle at 45 digits
    BallScalar v = bessel_i32(BallScalar::one(320), BesselMode::Series, 320);
    BallScalar ref = div(BallScalar::from_si(2, 320),
                         mul(b_exp(BallScalar::one(320), 320),
                             b_sqrt(mul_si(const_pi(320), 2, 320), 320), 320), 320);
    CHECK(consistent(v, ref));
    CHECK(definitely_positive(sub(v, BallScalar::from_double(0.2935253263474797), 320)));
    CHECK(definitely_negative(sub(v, BallScalar::from_double(0.2935253263474799), 320)));
}

TEST_CASE("closed form equals series across the range") {
    for (long num : {1L, 2L, 4L, 10L, 20L, 80L}) {
        BallScalar y = mpq_ball(num, 2);  // 0.5, 1, 2, 5, 10, 40
        BallScalar a = bessel_i32(y, BesselMode::ClosedForm, 256);
        BallScalar b = bessel_i32(y, BesselMode::Series, 256);
        CHECK(consistent(a, b));
        // both enclosures are tight
        CHECK(a.rad_double_upper() < 1e-40);
        CHECK(b.rad_double_upper() < 1e-40);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_i32(BallScalar::zero(), BesselMode::ClosedForm, 128), BallDomainError);
    CHECK_THROWS_AS(bessel_i32(BallScalar::from_si(-1), BesselMode::Series, 128), BallDomainError);
    CHECK(mpfr_zero_p(bessel_i32(BallScalar::zero(), BesselMode::Series, 128).mid()));
}

TEST_CASE("upper bounds at the two reference points") {
    // y=1: value 0.293525... <= sqrt(2/pi) e = 2.168875...
    BallScalar v1 = bessel_i32(BallScalar::one(320), BesselMode::ClosedForm, 320);
    BallScalar b1 = bessel_i32_upper_bound(BallScalar::one(320), true, 320);
    CHECK(definitely_le(v1, b1));
    CHECK(definitely_positive(sub(b1, BallScalar::from_double(2.168875), 320)));
    CHECK(definitely_negative(sub(b1, BallScalar::from_double(2.168876), 320)));

    // y=0.5: value 0.0964034738... <= (2 sqrt2/(3 sqrt pi)) 0.5^(3/2) = 0.18806319...
    BallScalar vh = bessel_i32(mpq_ball(1, 2), BesselMode::Series, 320);
    BallScalar bh = bessel_i32_upper_bound(mpq_ball(1, 2), false, 320);
    CHECK(definitely_le(vh, bh));
    CHECK(definitely_positive(sub(vh, BallScalar::from_double(0.096403473), 320)));
    CHECK(definitely_negative(sub(vh, BallScalar::from_double(0.096403474), 320)));
    CHECK(definitely_positive(sub(bh, BallScalar::from_double(0.188063), 320)));
    CHECK(definitely_negative(sub(bh, BallScalar::from_double(0.188064), 320)));
}

TEST_CASE("leading order near zero matches the y^(3/2) scaling") {
    // value/bound -> (sqrt2/(3 sqrt pi)) / (2 sqrt2/(3 sqrt pi)) = 1/2 as y -> 0+
    BallScalar y = mpq_ball(1, 100000);
    BallScalar v = bessel_i32(y, BesselMode::Series, 256);
    BallScalar b = bessel_i32_upper_bound(y, false, 256);
    BallScalar ratio = div(v, b, 256);
    CHECK(definitely_positive(sub(ratio, BallScalar::from_double(0.4999), 256)));
    CHECK(definitely_negative(sub(ratio, BallScalar::from_double(0.5001), 256)));
}

TEST_CASE("monotonicity on a sampled grid") {
    BallScalar prev = bessel_i32(mpq_ball(1, 100), BesselMode::Series, 256);
    for (long j = 2; j <= 60; ++j) {
        BallScalar y = mpq_ball(j, 2);  // up to 30 in steps of 1/2... start at 1
        BallScalar cur = bessel_i32(y, j >= 2 ? BesselMode::ClosedForm : BesselMode::Series, 256);
        CHECK(definitely_lt(prev, cur));
        prev = cur;
    }
}

TEST_CASE("grid certificate on a coarse grid") {
    auto grid = bessel_grid(mpq_class(1, 100), mpq_class(50));  // 5000 points
    Certificate cert = check_bessel_bounds(grid, 192);
    CHECK(cert.verdict == Verdict::Verified);
    CHECK(*cert.find("violations") == "0");
    CHECK(*cert.find("points_checked") == "5000");
}
