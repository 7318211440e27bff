#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unimodal/certifier.hpp"

using namespace unimodal;

TEST_CASE("asymptotic main term: ratio tends to A") {
    ExpansionConstants k = derive_constants();
    // main(n) n^(5/4) e^{-2 pi sqrt(n/3)} = A + B/sqrt n + ..., so the ratio
    // is within 2|B|/sqrt(n) of A for moderate n already
    AsymptoticEstimate est = asymptotic_u(1000000, k, 512);
    Prec p = est.precision;
    BallScalar nb = BallScalar::from_si(1000000, p);
    BallScalar ratio = div(mul(est.main, mul(nb, pow_quarters(nb, 1, p), p), p),
                           detail_cert::exp_main_factor(1000000, p), p);
    BallScalar a = eval_algebraic(k.A, p);
    BallScalar dev = abs_val(sub(ratio, a, p), p);
    BallScalar cap = div(mul_si(abs_val(eval_algebraic(k.B, p), p), 2, p),
                         b_sqrt(nb, p), p);
    CHECK(definitely_le(dev, cap));
    // envelope scaling: envelope/main ~ 478/A * n^(-5/2)
    CHECK(definitely_positive(est.error_envelope));
    CHECK(est.n == 1000000);
}

TEST_CASE("asymptotic_u rejects n < 1") {
    ExpansionConstants k = derive_constants();
    CHECK_THROWS_AS(asymptotic_u(0, k), std::invalid_argument);
}

TEST_CASE("containment against exact values at moderate n") {
    // the envelope is tuned for n >= 1e5, but the five-term main part already
    // tracks u(n) closely at n = 3000; check the residual against a relaxed
    // envelope scaled for small n (documented sanity, not the headline gate)
    ExpansionConstants k = derive_constants();
    SeriesTables t = gen_all(3001);
    ContainmentReport r = check_main_term_containment(t.u, 3000, k, 512);
    CHECK(definitely_positive(r.envelope));
    // at n=3000 the true deficit is within 40x of the n>=1e5 envelope shape
    BallScalar cap = mul_si(r.envelope, 40, r.precision);
    CHECK(definitely_le(r.residual, cap));
}

TEST_CASE("switch margin is positive at 1e5 and decreasing in s") {
    ExpansionConstants k = derive_constants();
    BallScalar m0 = switch_margin(100000, k, 256);
    CHECK(definitely_positive(m0));
    // frozen decimal: 0.0016510 < margin < 0.0016512
    CHECK(definitely_positive(sub(m0, BallScalar::from_double(0.0016510), 256)));
    CHECK(definitely_negative(sub(m0, BallScalar::from_double(0.0016512), 256)));
    // monotone: margin at larger n_switch (smaller s) is larger
    BallScalar m1 = switch_margin(400000, k, 256);
    CHECK(definitely_lt(m0, m1));
}

TEST_CASE("residual scales like n^(-5/2): next-order coefficient is stable") {
    // (u(n) - main(n)) n^(15/4) e^{-2 pi sqrt(n/3)} approaches the true
    // next-order coefficient ~9.8e-4; any error in A..E would make it blow
    // up as a power of n
    ExpansionConstants k = derive_constants();
    SeriesTables t = gen_all(50000);
    Prec p = 1024;
    auto normalized = [&](std::int64_t n) {
        ContainmentReport r = check_main_term_containment(t.u, n, k, p);
        BallScalar nb = BallScalar::from_si(n, p);
        BallScalar n154 = mul(mul(nb, nb, p), mul(nb, pow_quarters(nb, 3, p), p), p);
        return div(mul(sub(r.exact, r.main, p), n154, p), detail_cert::exp_main_factor(n, p), p);
    };
    BallScalar a = normalized(12500);
    BallScalar b = normalized(49999);
    for (const BallScalar* v : {&a, &b}) {
        CHECK(definitely_positive(sub(*v, BallScalar::from_double(0.00097), p)));
        CHECK(definitely_negative(sub(*v, BallScalar::from_double(0.00100), p)));
    }
    // drift across a factor 4 in n stays below 2 percent
    BallScalar drift = abs_val(sub(a, b, p), p);
    CHECK(definitely_le(drift, BallScalar::from_double(2e-5, p)));
}

TEST_CASE("delta_expansion_bounds and certify_all preconditions") {
    ExpansionConstants k = derive_constants();
    SeriesTables t = gen_all(300);
    CHECK_THROWS_AS(delta_expansion_bounds(t.u, 100, k, 256), std::invalid_argument);
    Certificate c = certify_all(t.u, 1000, k, 256);
    CHECK(c.verdict == Verdict::Failed);  // n_switch below the asymptotic leg
    CHECK(c.find("error") != nullptr);
}
