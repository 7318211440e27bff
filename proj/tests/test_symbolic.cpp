#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unimodal/expansion.hpp"

using namespace unimodal;
using AC = AlgebraicConstant;

TEST_CASE("ring reduction t^4 = 3 and canonical form") {
    AC t = AC::monomial(1, 0, 1);
    AC t4 = t * t * t * t;
    CHECK(t4 == AC::from_si(3));
    AC tm3 = AC::monomial(1, 0, -3);  // t^-3 = t/3
    CHECK(tm3 == AC::monomial(mpq_class(1, 3), 0, 1));
    AC z = t - t;
    CHECK(z.is_zero());
    CHECK((t * AC::zero()).is_zero());
}

TEST_CASE("ring laws on randomized triples") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coef(-6, 6), piexp(-2, 2), texp(0, 3);
    auto rnd = [&] {
        AC a;
        for (int i = 0; i < 3; ++i)
            a = a + AC::monomial(mpq_class(coef(rng), 1 + texp(rng)), piexp(rng), texp(rng));
        return a;
    };
    for (int i = 0; i < 60; ++i) {
        AC a = rnd(), b = rnd(), c = rnd();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("eval_algebraic: t^4/3 contains 1; A and B terms match decimals") {
    AC t4over3 = AC::monomial(mpq_class(1, 3), 0, 4);
    CHECK(contains_si(eval_algebraic(t4over3, 128), 1));

    BallScalar a = eval_algebraic(reference_A(), 256);
    // 1/(8*3^(3/4)) = 0.05483637252...
    BallScalar ref = div(BallScalar::one(),
                         mul_si(pow_quarters(BallScalar::from_si(3), 3, 320), 8, 320), 320);
    CHECK(consistent(a, ref));
    CHECK(definitely_positive(sub(a, BallScalar::from_double(0.05483641), 256)));
    CHECK(definitely_negative(sub(a, BallScalar::from_double(0.05483642), 256)));

    // first term of B: pi/(144*3^(1/4))
    AC b1 = AC::monomial(mpq_class(1, 432), 1, 3);
    BallScalar v = eval_algebraic(b1, 256);
    BallScalar ref2 = div(const_pi(320),
                          mul_si(pow_quarters(BallScalar::from_si(3), 1, 320), 144, 320), 320);
    CHECK(consistent(v, ref2));
}

TEST_CASE("gaussian moments") {
    CHECK(gaussian_moment(0).value == 1);
    CHECK(gaussian_moment(2).value == mpq_class(1, 2));
    CHECK(gaussian_moment(4).value == mpq_class(3, 4));
    CHECK(gaussian_moment(16).value == mpq_class(2027025, 256));
    CHECK(gaussian_moment(0).sqrt_pi);
    CHECK_THROWS_AS(gaussian_moment(3), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_moment(18), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_moment(-2), std::invalid_argument);
}

TEST_CASE("integrand layers reproduce the reference polynomials") {
    IntegrandLayers L = build_integrand_layers();
    REQUIRE(L.main.size() == 5);

    auto& l0 = L.main[0];
    CHECK(l0.lambda_neg_pow == 0);
    CHECK(l0.x_coeffs[0] == AC::one());

    auto& l2 = L.main[1];
    CHECK(l2.lambda_neg_pow == 2);
    CHECK(l2.x_coeffs[0] == AC::from_mpq(mpq_class(-1, 2)));
    // (pi^2 - 6)/12
    CHECK(l2.x_coeffs[2] == AC::monomial(mpq_class(1, 12), 2, 0) + AC::from_mpq(mpq_class(-1, 2)));
    CHECK(l2.x_coeffs[4] == AC::from_mpq(mpq_class(-1, 4)));

    auto& l4 = L.main[2];
    CHECK(l4.lambda_neg_pow == 4);
    CHECK(l4.x_coeffs[2] == AC::monomial(mpq_class(-1, 24), 2, 0));
    // (5 pi^4 - 36 pi^2)/864
    CHECK(l4.x_coeffs[4] ==
          AC::monomial(mpq_class(5, 864), 4, 0) + AC::monomial(mpq_class(-36, 864), 2, 0));
    CHECK(l4.x_coeffs[6] == AC::monomial(mpq_class(-1, 48), 2, 0));
    CHECK(l4.x_coeffs[8] == AC::from_mpq(mpq_class(1, 32)));

    auto& l6 = L.main[3];
    CHECK(l6.lambda_neg_pow == 6);
    CHECK(l6.x_coeffs[4] == AC::monomial(mpq_class(-5, 1728), 4, 0));
    // (61 pi^6 - 450 pi^4)/155520
    CHECK(l6.x_coeffs[6] == AC::monomial(mpq_class(61, 155520), 6, 0) +
                                AC::monomial(mpq_class(-450, 155520), 4, 0));
    CHECK(l6.x_coeffs[8] == AC::monomial(mpq_class(-5, 3456), 4, 0));
    // (405 pi^2 + 2430)/155520
    CHECK(l6.x_coeffs[10] == AC::monomial(mpq_class(405, 155520), 2, 0) +
                                 AC::from_mpq(mpq_class(2430, 155520)));
    CHECK(l6.x_coeffs[12] == AC::from_mpq(mpq_class(-1, 384)));

    auto& l8 = L.main[4];
    CHECK(l8.lambda_neg_pow == 8);
    CHECK(l8.x_coeffs[6] == AC::monomial(mpq_class(-61, 311040), 6, 0));
    CHECK(l8.x_coeffs[8] == AC::monomial(mpq_class(277, 10450944), 8, 0) +
                                AC::monomial(mpq_class(-61, 311040), 6, 0));
    CHECK(l8.x_coeffs[10] == AC::monomial(mpq_class(-61, 622080), 6, 0));
    CHECK(l8.x_coeffs[12] == AC::monomial(mpq_class(5, 27648), 4, 0) +
                                 AC::monomial(mpq_class(1, 768), 2, 0) +
                                 AC::from_mpq(mpq_class(7, 768)));
    CHECK(l8.x_coeffs[14] == AC::monomial(mpq_class(-1, 4608), 2, 0) +
                                 AC::from_mpq(mpq_class(-1, 384)));
    CHECK(l8.x_coeffs[16] == AC::from_mpq(mpq_class(1, 6144)));

    CHECK(!L.tail.empty());
    CHECK(L.tail.front().lambda_neg_pow == 10);
}

TEST_CASE("termwise integration reproduces the reference fractions") {
    IntegrandLayers layers = build_integrand_layers();
    LambdaSeries s = integrate_layers(layers.main);
    CHECK(s.sqrt_pi);
    auto ref = reference_integral_coefficients();
    REQUIRE(s.coeff.size() == 5);
    for (const auto& [pow, coef] : ref) {
        REQUIRE(s.coeff.count(pow) == 1);
        CHECK(s.coeff.at(pow) == coef);
    }
    // the lambda^-2 coefficient also equals pi^2/24 - 15/16 as a ring identity
    CHECK(s.coeff.at(2) ==
          AC::monomial(mpq_class(1, 24), 2, 0) + AC::from_mpq(mpq_class(-15, 16)));
}

TEST_CASE("prefactor expansions match the displayed coefficients") {
    PrefactorExpansions pf = prefactor_expansions();

    // e^delta: 1 + pi/(24 sqrt3) s + pi^2/3456 s^2 + ...
    CHECK(pf.exp_correction.at(0) == AC::one());
    CHECK(pf.exp_correction.at(1) == AC::monomial(mpq_class(1, 72), 1, 2));
    CHECK(pf.exp_correction.at(2) == AC::monomial(mpq_class(1, 3456), 2, 0));
    // s^3: pi^3/(248832 sqrt3) - pi/(2304 sqrt3)
    CHECK(pf.exp_correction.at(3) == AC::monomial(mpq_class(1, 746496), 3, 2) +
                                         AC::monomial(mpq_class(-1, 6912), 1, 2));
    // s^4: pi^4/71663616 - pi^2/165888
    CHECK(pf.exp_correction.at(4) == AC::monomial(mpq_class(1, 71663616), 4, 0) +
                                         AC::monomial(mpq_class(-1, 165888), 2, 0));

    // (1 + s^2/24)^(-5/4) = 1 - 5/(96 n) + 5/(2048 n^2) + ...
    CHECK(pf.norm_correction.at(0) == AC::one());
    CHECK(pf.norm_correction.at(2) == AC::from_mpq(mpq_class(-5, 96)));
    CHECK(pf.norm_correction.at(4) == AC::from_mpq(mpq_class(5, 2048)));

    // lambda^-2 = sqrt3/pi s - 1/(16 sqrt3 pi) s^3 + ...
    CHECK(pf.lambda_neg[0].at(1) == AC::monomial(1, -1, 2));
    CHECK(pf.lambda_neg[0].at(3) == AC::monomial(mpq_class(-1, 48), -1, 2));
    // lambda^-4 = 3/(pi^2 n) - 1/(8 pi^2 n^2)
    CHECK(pf.lambda_neg[1].at(2) == AC::monomial(3, -2, 0));
    CHECK(pf.lambda_neg[1].at(4) == AC::monomial(mpq_class(-1, 8), -2, 0));
    // lambda^-6 = 3 sqrt3/(pi^3 n^(3/2)), lambda^-8 = 9/(pi^4 n^2)
    CHECK(pf.lambda_neg[2].at(3) == AC::monomial(3, -3, 2));
    CHECK(pf.lambda_neg[3].at(4) == AC::monomial(9, -4, 0));
}

TEST_CASE("derived constants match the reference closed forms") {
    ExpansionConstants k = derive_constants();
    CHECK(k.A == reference_A());
    CHECK(k.B == reference_B());
    CHECK(k.C == reference_C());
    CHECK(k.D == reference_D());
    // E matches the corrected denominator 35831808 = 8*4478976, not the
    // printed 35831803
    CHECK(k.E == reference_E(false));
    CHECK(k.E != reference_E(true));
    CHECK(k.E_reference == reference_E(true));

    // consistency of the two closed forms of B:
    // (pi^(3/2)/(6 sqrt3) - 15 sqrt3/(16 sqrt pi)) / (8*3^(3/4) sqrt pi)
    //   = pi/(48*3^(5/4)) - 15/(128*3^(1/4) pi) = B
    AC bracket = AC::monomial(mpq_class(1, 18), 1, 2) +    // pi/(6 sqrt3), sqrt(pi) marker
                 AC::monomial(mpq_class(-15, 16), -1, 2);  // -15 sqrt3/(16 pi)
    AC b = bracket.div_monomial(8, 0, 3);
    CHECK(b == k.B);
}

TEST_CASE("delta expansion composed from the main term") {
    ExpansionConstants k = derive_constants();
    DeltaComposition w = delta_composition(k);
    CHECK(w.W.at(0).is_zero());
    CHECK(w.W.at(1).is_zero());
    CHECK(w.W.at(2).is_zero());
    CHECK(w.c0 == k.c0);                  // pi A^2/(2 sqrt3)
    CHECK(w.c1 == k.c1_derived);          // pi A B/sqrt3 - 5 A^2/4
    CHECK(w.c1 != k.c1_reference);        // reference formula carries an extra -B^2
    CHECK(k.c1_reference - k.c1_derived == -(k.B * k.B));

    // numeric spot checks: c0 ~ 0.0027, c1 ~ -0.00507 (reference) / -0.00493
    BallScalar c0 = eval_algebraic(k.c0, 192);
    CHECK(definitely_positive(c0));
    CHECK(definitely_positive(sub(c0, BallScalar::from_double(0.00272), 192)));
    CHECK(definitely_negative(sub(c0, BallScalar::from_double(0.00273), 192)));
    BallScalar c1r = eval_algebraic(k.c1_reference, 192);
    CHECK(definitely_negative(c1r));
    CHECK(definitely_positive(sub(c1r, BallScalar::from_double(-0.0051), 192)));
    BallScalar c1d = eval_algebraic(k.c1_derived, 192);
    CHECK(definitely_positive(sub(c1d, c1r, 192)));
}

TEST_CASE("series utilities") {
    // exp of zero series is 1
    TruncatedSeries z = TruncatedSeries::zero_to(4);
    TruncatedSeries e = ts_exp(z);
    CHECK(e.at(0) == AC::one());
    CHECK(e.at(1).is_zero());
    // (1+s^2)^(-1/2) * (1+s^2)^(1/2) = 1 + O(s^5)
    TruncatedSeries a = ts_binomial(mpq_class(-1, 2), 1, 2, 4);
    TruncatedSeries b = ts_binomial(mpq_class(1, 2), 1, 2, 4);
    TruncatedSeries prod = ts_mul(a, b);
    CHECK(prod.at(0) == AC::one());
    CHECK(prod.at(2).is_zero());
    CHECK(prod.at(4).is_zero());
    CHECK(prod.rem.order == 5);
    // composition precondition
    TruncatedSeries bad = TruncatedSeries::zero_to(3);
    bad.c[0] = AC::one();
    CHECK_THROWS_AS(ts_compose(a, bad), std::invalid_argument);
    CHECK_THROWS_AS(ts_exp(bad), std::invalid_argument);
}
