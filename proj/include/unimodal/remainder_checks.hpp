#pragma once

// Grid falsification suites for the explicit remainder constants of the
// saddle-point analysis: the exp-polynomial window, the cot/sqrt/F Taylor
// tails, the lambda_n bounds, the truncated-Gaussian-moment factor
// 2.8 w^m e^{-w^2}, the moment-window constants M_{k,m}, and the bound
// 5362 n^{-5/2} on the integrated tail-layer polynomial E_n.  These are
// numeric checks at stated grids, not proofs; any violating sample becomes
// certificate content.

#include <cstdint>
#include <string>
#include <vector>

#include "unimodal/ball.hpp"
#include "unimodal/certificate.hpp"
#include "unimodal/expansion.hpp"
#include "unimodal/quadrature.hpp"

namespace unimodal {

namespace detail_rem {

// ball containment: inner ⊆ outer iff |mid_i - mid_o| + rad_i <= rad_o
inline bool ball_contained_in(const BallScalar& inner, const BallScalar& outer, Prec) {
    detail::Scratch md(kBoundPrec);
    mpfr_sub(md.v, inner.mid(), outer.mid(), MPFR_RNDA);
    mpfr_abs(md.v, md.v, MPFR_RNDU);
    mpfr_add(md.v, md.v, inner.rad(), MPFR_RNDU);
    return mpfr_cmp(md.v, outer.rad()) <= 0;
}

// lambda_n = sqrt((pi/(6 sqrt2)) sqrt(24n+1))
inline BallScalar lambda_n(std::int64_t n, Prec p) {
    BallScalar pi = const_pi(p);
    BallScalar m = BallScalar::from_si(24 * n + 1, p);
    BallScalar l2 = div(mul(pi, b_sqrt(m, p), p),
                        mul_si(b_sqrt(BallScalar::from_si(2, p), p), 6, p), p);
    return b_sqrt(l2, p);
}

// y_n(x) = (pi/(3 sqrt2)) sqrt(24n+1) * sum_{m=2..11} binom(1/2,m)(-1)^m x^(2m)
inline BallScalar y_n(std::int64_t n, const BallScalar& x, Prec p) {
    BallScalar pi = const_pi(p);
    BallScalar m = BallScalar::from_si(24 * n + 1, p);
    BallScalar c = div(mul(pi, b_sqrt(m, p), p),
                       mul_si(b_sqrt(BallScalar::from_si(2, p), p), 3, p), p);
    BallScalar x2 = mul(x, x, p);
    BallScalar acc = BallScalar::zero(p);
    BallScalar x2m = mul(x2, x2, p);  // x^4
    for (unsigned j = 2; j <= 11; ++j) {
        mpq_class coef = binom_mpq(mpq_class(1, 2), j);
        if (j % 2 != 0) coef = -coef;
        acc = add(acc, mul(BallScalar::from_mpq(coef, p), x2m, p), p);
        x2m = mul(x2m, x2, p);
    }
    return mul(c, acc, p);
}

// int_{-w}^{w} x^m e^{-x^2} dx for even m = 0..mmax
inline std::vector<BallScalar> truncated_gauss_integrals(const BallScalar& w, int mmax, Prec p) {
    std::vector<BallScalar> out;
    BallScalar spi = b_sqrt(const_pi(p), p);
    BallScalar i0 = mul(spi, b_erf(w, p), p);
    out.push_back(i0);
    BallScalar ew2 = b_exp(neg(mul(w, w, p), p), p);
    BallScalar wpow = w;  // w^(m-1)
    for (int m = 2; m <= mmax; m += 2) {
        BallScalar boundary = mul(wpow, ew2, p);  // w^(m-1) e^{-w^2}
        BallScalar im = sub(div_si(mul_si(out.back(), m - 1, p), 2, p), boundary, p);
        out.push_back(im);
        wpow = mul(wpow, mul(w, w, p), p);
    }
    return out;
}

struct SuiteState {
    long checked = 0;
    long violations = 0;
    std::string first;
    void fail(const std::string& what) {
        ++violations;
        if (first.empty()) first = what;
    }
};

}  // namespace detail_rem

struct RemainderGrid {
    std::vector<std::int64_t> n_values{100000, 200000, 1000000, 10000000};
    int x_steps = 50;        // x = ±(j/x_steps) n^(-1/8), j = 0..x_steps
    int w_hundredths_lo = 100, w_hundredths_hi = 600, w_step = 1;  // w in [1,6] step 0.01
    Prec prec = 256;
};

// --- lambda bounds: 1.3 n^(1/4) <= lambda_n <= 1.4 n^(1/4) ------------------
inline Certificate check_lambda_bounds(const RemainderGrid& g) {
    Certificate c;
    c.statement = "lambda-n-bounds";
    c.precision_bits = g.prec;
    detail_rem::SuiteState st;
    Prec p = g.prec;
    std::string lam0;
    for (std::int64_t n : g.n_values) {
        BallScalar lam = detail_rem::lambda_n(n, p);
        if (n == 100000) lam0 = lam.str(20);
        BallScalar n14 = pow_quarters(BallScalar::from_si(n, p), 1, p);
        ++st.checked;
        if (!definitely_le(mul(BallScalar::from_mpq(mpq_class(13, 10), p), n14, p), lam) ||
            !definitely_le(lam, mul(BallScalar::from_mpq(mpq_class(14, 10), p), n14, p)))
            st.fail("n=" + std::to_string(n));
    }
    c.range = "n in {1e5, 2e5, 1e6, 1e7}";
    c.put("lambda_at_1e5", lam0);
    c.put("checked", std::to_string(st.checked));
    c.put("violations", std::to_string(st.violations));
    if (!st.first.empty()) c.put("first_violation", st.first);
    c.verdict = st.violations == 0 ? Verdict::Verified : Verdict::Failed;
    return c;
}

// --- exp window (two-constant containment), |y| bound, sqrt tail -----------
inline Certificate check_exp_window(const RemainderGrid& g) {
    Certificate c;
    c.statement = "exp-window-remainders";
    c.precision_bits = g.prec;
    detail_rem::SuiteState st;
    Prec p = g.prec;
    for (std::int64_t n : g.n_values) {
        BallScalar nb = BallScalar::from_si(n, p);
        BallScalar n18 = b_sqrt(b_sqrt(b_sqrt(nb, p), p), p);
        BallScalar n52 = mul(mul(nb, nb, p), b_sqrt(nb, p), p);
        BallScalar pi = const_pi(p);
        BallScalar m24 = BallScalar::from_si(24 * n + 1, p);
        BallScalar cexp = div(mul(pi, b_sqrt(m24, p), p),
                              mul_si(b_sqrt(BallScalar::from_si(2, p), p), 3, p), p);
        for (int j = -g.x_steps; j <= g.x_steps; ++j) {
            if (j == 0) continue;  // x=0 is trivially exact on every clause
            BallScalar x = div_si(mul_si(div(BallScalar::one(p), n18, p), j, p), g.x_steps, p);
            BallScalar x2 = mul(x, x, p);
            BallScalar x4 = mul(x2, x2, p);
            ++st.checked;

            // |y| <= 1.3 sqrt(n) x^4
            BallScalar y = detail_rem::y_n(n, x, p);
            BallScalar ybound = mul(mul(BallScalar::from_mpq(mpq_class(13, 10), p),
                                        b_sqrt(nb, p), p), x4, p);
            if (!definitely_le(abs_val(y, p), ybound))
                st.fail("ybound n=" + std::to_string(n) + " j=" + std::to_string(j));

            // sqrt tail: |sqrt(1-x^2) - sum_{m<=11} binom(1/2,m)(-x^2)^m| <= 0.1 x^24
            BallScalar r = b_sqrt(sub(BallScalar::one(p), x2, p), p);
            BallScalar partial = BallScalar::zero(p);
            BallScalar x2m = BallScalar::one(p);
            for (unsigned mm = 0; mm <= 11; ++mm) {
                mpq_class coef = binom_mpq(mpq_class(1, 2), mm);
                if (mm % 2 != 0) coef = -coef;
                partial = add(partial, mul(BallScalar::from_mpq(coef, p), x2m, p), p);
                x2m = mul(x2m, x2, p);
            }
            BallScalar x24 = pow_si(x, 24, p);
            if (!definitely_le(abs_val(sub(r, partial, p), p),
                               mul(BallScalar::from_mpq(mpq_class(1, 10), p), abs_val(x24, p), p)))
                st.fail("sqrt24 n=" + std::to_string(n) + " j=" + std::to_string(j));

            // window: e^{c sqrt(1-x^2)} in e^{c(1-x^2/2)} (P ± 0.34 n^(5/2) x^20)(1 ± 0.73 n^(-5/2))
            BallScalar expo_diff = mul(cexp, sub(r, sub(BallScalar::one(p), div_si(x2, 2, p), p), p), p);
            BallScalar lhs_over_m = b_exp(expo_diff, p);
            BallScalar poly = BallScalar::one(p);
            BallScalar ypow = BallScalar::one(p);
            mpq_class fact = 1;
            for (int jj = 1; jj <= 4; ++jj) {
                ypow = mul(ypow, y, p);
                fact *= jj;
                poly = add(poly, mul(BallScalar::from_mpq(mpq_class(1) / fact, p), ypow, p), p);
            }
            BallScalar x20 = pow_si(x, 20, p);
            BallScalar w1 = poly;
            {
                detail::Scratch rr(kBoundPrec);
                BallScalar slack = mul(mul(BallScalar::from_mpq(mpq_class(34, 100), p), n52, p),
                                       abs_val(x20, p), p);
                slack.upper(rr);
                w1.rad_accum(rr);
            }
            BallScalar w2 = BallScalar::one(p);
            {
                detail::Scratch rr(kBoundPrec);
                BallScalar slack = div(BallScalar::from_mpq(mpq_class(73, 100), p), n52, p);
                slack.upper(rr);
                w2.rad_accum(rr);
            }
            BallScalar window = mul(w1, w2, p);
            if (!detail_rem::ball_contained_in(lhs_over_m, window, p))
                st.fail("window n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
    }
    c.range = "x = ±(j/50) n^(-1/8), n in {1e5,2e5,1e6,1e7}";
    c.put("points_checked", std::to_string(st.checked));
    c.put("violations", std::to_string(st.violations));
    if (!st.first.empty()) c.put("first_violation", st.first);
    c.verdict = st.violations == 0 ? Verdict::Verified : Verdict::Failed;
    return c;
}

// --- cot, sqrt and F Taylor tails on fixed grids ----------------------------
inline Certificate check_taylor_tails(const RemainderGrid& g) {
    Certificate c;
    c.statement = "cot-sqrt-F-taylor-tails";
    c.precision_bits = g.prec;
    detail_rem::SuiteState st;
    Prec p = g.prec;
    BallScalar pi = const_pi(p);
    BallScalar sqrt6 = b_sqrt(BallScalar::from_si(6, p), p);

    // cot((pi/2)(x/sqrt6+1/2)) minus its full degree-9 Taylor polynomial:
    // even part 1 + pi^2 x^2/12 + 5 pi^4 x^4/864 + 61 pi^6 x^6/155520
    //   + 277 pi^8 x^8/10450944, odd part -tan(pi x/sqrt6) through z^9
    auto cot_check = [&](const BallScalar& x) {
        BallScalar arg = add(div_si(div(mul(pi, x, p), sqrt6, p), 2, p), div_si(pi, 4, p), p);
        BallScalar cot = b_cot(arg, p);
        BallScalar x2 = mul(x, x, p);
        BallScalar even = BallScalar::one(p);
        const long nums[4] = {1, 5, 61, 277};
        const long dens[4] = {12, 864, 155520, 10450944};
        BallScalar pi2 = mul(pi, pi, p);
        BallScalar pipow = BallScalar::one(p);
        BallScalar xpow = BallScalar::one(p);
        for (int i = 0; i < 4; ++i) {
            pipow = mul(pipow, pi2, p);
            xpow = mul(xpow, x2, p);
            even = add(even, mul(div_si(mul_si(mul(pipow, xpow, p), nums[i], p), dens[i], p),
                                 BallScalar::one(p), p), p);
        }
        BallScalar z = div(mul(pi, x, p), sqrt6, p);
        BallScalar z2 = mul(z, z, p);
        // tan z = z + z^3/3 + 2z^5/15 + 17z^7/315 + 62z^9/2835
        BallScalar tanz = z;
        BallScalar zp = mul(z, z2, p);
        tanz = add(tanz, div_si(zp, 3, p), p);
        zp = mul(zp, z2, p);
        tanz = add(tanz, div_si(mul_si(zp, 2, p), 15, p), p);
        zp = mul(zp, z2, p);
        tanz = add(tanz, div_si(mul_si(zp, 17, p), 315, p), p);
        zp = mul(zp, z2, p);
        tanz = add(tanz, div_si(mul_si(zp, 62, p), 2835, p), p);
        BallScalar approx = sub(even, tanz, p);
        BallScalar x10 = pow_si(abs_val(x, p), 10, p);
        return definitely_le(abs_val(sub(cot, approx, p), p),
                             mul(BallScalar::from_mpq(mpq_class(6, 10), p), x10, p));
    };

    // sqrt(1-x^2) minus its degree-8 polynomial <= 0.3 x^10
    auto sqrt_check = [&](const BallScalar& x) {
        BallScalar x2 = mul(x, x, p);
        BallScalar r = b_sqrt(sub(BallScalar::one(p), x2, p), p);
        auto sc = sqrt_trunc_coefficients();
        BallScalar approx = BallScalar::zero(p);
        BallScalar xp = BallScalar::one(p);
        for (int i = 0; i <= 4; ++i) {
            approx = add(approx, mul(BallScalar::from_mpq(sc[static_cast<std::size_t>(i)], p), xp, p), p);
            xp = mul(xp, x2, p);
        }
        BallScalar x10 = pow_si(abs_val(x, p), 10, p);
        return definitely_le(abs_val(sub(r, approx, p), p),
                             mul(BallScalar::from_mpq(mpq_class(3, 10), p), x10, p));
    };

    // F(X) = sum_{m=5..10} binom(1/2,m+1)(-1)^m X^(2m), |F| <= 0.03 X^10 on |X|<=1/2
    auto f_check = [&](const BallScalar& X) {
        BallScalar X2 = mul(X, X, p);
        BallScalar acc = BallScalar::zero(p);
        BallScalar Xp = pow_si(X2, 5, p);
        for (unsigned mm = 5; mm <= 10; ++mm) {
            mpq_class coef = binom_mpq(mpq_class(1, 2), mm + 1);
            if (mm % 2 != 0) coef = -coef;
            acc = add(acc, mul(BallScalar::from_mpq(coef, p), Xp, p), p);
            Xp = mul(Xp, X2, p);
        }
        BallScalar X10 = pow_si(abs_val(X, p), 10, p);
        return definitely_le(abs_val(acc, p),
                             mul(BallScalar::from_mpq(mpq_class(3, 100), p), X10, p));
    };

    // fixed grid x = j/100, |x| <= 1/2 (covers every n-scaled grid point)
    for (int j = -50; j <= 50; ++j) {
        if (j == 0) continue;
        BallScalar x = BallScalar::from_mpq(mpq_class(j, 100), p);
        ++st.checked;
        if (!cot_check(x)) st.fail("cot j=" + std::to_string(j));
        if (!sqrt_check(x)) st.fail("sqrt j=" + std::to_string(j));
        if (!f_check(x)) st.fail("F j=" + std::to_string(j));
    }
    // the sqrt tail constant also holds out to |x| = 0.99
    for (int j = 51; j <= 99; j += 4) {
        BallScalar x = BallScalar::from_mpq(mpq_class(j, 100), p);
        ++st.checked;
        if (!sqrt_check(x)) st.fail("sqrt-wide j=" + std::to_string(j));
    }
    // per-n saddle grids
    for (std::int64_t n : g.n_values) {
        BallScalar n18 = b_sqrt(b_sqrt(b_sqrt(BallScalar::from_si(n, p), p), p), p);
        for (int j = 1; j <= g.x_steps; ++j) {
            BallScalar x = div_si(mul_si(div(BallScalar::one(p), n18, p), j, p), g.x_steps, p);
            ++st.checked;
            if (!cot_check(x)) st.fail("cot n=" + std::to_string(n) + " j=" + std::to_string(j));
            if (!sqrt_check(x)) st.fail("sqrt n=" + std::to_string(n) + " j=" + std::to_string(j));
        }
    }
    c.range = "|x| <= 1/2 fixed grid plus n-scaled saddle grids";
    c.put("points_checked", std::to_string(st.checked));
    c.put("violations", std::to_string(st.violations));
    if (!st.first.empty()) c.put("first_violation", st.first);
    c.verdict = st.violations == 0 ? Verdict::Verified : Verdict::Failed;
    return c;
}

// --- Gaussian truncation factor 2.8 w^m e^{-w^2} ----------------------------
inline Certificate check_gaussian_truncation(const RemainderGrid& g) {
    Certificate c;
    c.statement = "gaussian-truncation-factor";
    c.precision_bits = g.prec;
    detail_rem::SuiteState st;
    Prec p = g.prec;
    BallScalar spi = b_sqrt(const_pi(p), p);
    for (int wh = g.w_hundredths_lo; wh <= g.w_hundredths_hi; wh += g.w_step) {
        BallScalar w = BallScalar::from_mpq(mpq_class(wh, 100), p);
        auto ints = detail_rem::truncated_gauss_integrals(w, 16, p);
        BallScalar ew2 = b_exp(neg(mul(w, w, p), p), p);
        for (int m = 0; m <= 16; m += 2) {
            ++st.checked;
            BallScalar full = mul(BallScalar::from_mpq(
                                      detail_expansion::gauss_moment_any(m), p), spi, p);
            BallScalar diff = abs_val(sub(full, ints[static_cast<std::size_t>(m / 2)], p), p);
            BallScalar wb = mul(mul(BallScalar::from_mpq(mpq_class(28, 10), p),
                                    pow_si(w, m, p), p), mul(ew2, full, p), p);
            if (!definitely_le(diff, wb))
                st.fail("w=" + std::to_string(wh) + "/100 m=" + std::to_string(m));
        }
    }
    c.range = "w in [1,6] step 0.01, m even 0..16";
    c.put("points_checked", std::to_string(st.checked));
    c.put("violations", std::to_string(st.violations));
    if (!st.first.empty()) c.put("first_violation", st.first);
    c.verdict = st.violations == 0 ? Verdict::Verified : Verdict::Failed;
    return c;
}

// --- moment-window constants M_{k,m} ----------------------------------------
inline Certificate check_moment_window(const RemainderGrid& g) {
    Certificate c;
    c.statement = "moment-window-constants";
    c.precision_bits = g.prec;
    detail_rem::SuiteState st;
    Prec p = g.prec;
    BallScalar spi = b_sqrt(const_pi(p), p);
    const std::int64_t n0 = kNZero;

    // sup over n >= n0 of n^alpha e^{-1.69 n^(1/4)} is attained at n0 when
    // alpha < 0.4225 n0^(1/4); alpha = m/8 - k/4 + 5/2 <= 4 < 7.5 for all
    // (k,m) used, checked here exactly
    for (int k = 2; k <= 8; k += 2)
        for (int m = 0; m <= 16; m += 2) {
            ++st.checked;
            mpq_class alpha = mpq_class(m, 8) - mpq_class(k, 4) + mpq_class(5, 2);
            BallScalar lhs = BallScalar::from_mpq(alpha, p);
            BallScalar rhs = mul(BallScalar::from_mpq(mpq_class(4225, 10000), p),
                                 pow_quarters(BallScalar::from_si(n0, p), 1, p), p);
            if (!definitely_lt(lhs, rhs)) st.fail("sup-location k,m=" +
                                                  std::to_string(k) + "," + std::to_string(m));
        }

    // end-to-end window inequality at each grid n:
    //   lambda^-k |I_m(full) - I_m(w)| <= M_{k,m} n^(-5/2),  w = lambda_n n^(-1/8)
    // with M_{k,m} evaluated at its sup location n0
    std::vector<BallScalar> M(4 * 9, BallScalar(p));
    {
        BallScalar n0b = BallScalar::from_si(n0, p);
        BallScalar e169 = b_exp(neg(mul(BallScalar::from_mpq(mpq_class(169, 100), p),
                                        pow_quarters(n0b, 1, p), p), p), p);
        for (int k = 2; k <= 8; k += 2)
            for (int m = 0; m <= 16; m += 2) {
                BallScalar factor = div(pow_si(BallScalar::from_mpq(mpq_class(14, 10), p), m, p),
                                        pow_si(BallScalar::from_mpq(mpq_class(13, 10), p), k, p), p);
                BallScalar mom = mul(BallScalar::from_mpq(
                                         detail_expansion::gauss_moment_any(m), p), spi, p);
                // n0^(m/8 - k/4 + 5/2) = n0^((m - 2k + 20)/8)
                long eighth = m - 2 * k + 20;
                BallScalar npow = b_sqrt(pow_quarters(n0b, eighth, p), p);
                BallScalar Mk = mul(mul(mul(mul(BallScalar::from_mpq(mpq_class(28, 10), p),
                                                factor, p), mom, p), npow, p), e169, p);
                M[static_cast<std::size_t>((k / 2 - 1) * 9 + m / 2)] = Mk;
            }
    }
    for (std::int64_t n : g.n_values) {
        BallScalar nb = BallScalar::from_si(n, p);
        BallScalar lam = detail_rem::lambda_n(n, p);
        BallScalar n18 = b_sqrt(b_sqrt(b_sqrt(nb, p), p), p);
        BallScalar w = div(lam, n18, p);
        auto ints = detail_rem::truncated_gauss_integrals(w, 16, p);
        BallScalar n52 = mul(mul(nb, nb, p), b_sqrt(nb, p), p);
        for (int k = 2; k <= 8; k += 2) {
            BallScalar lamk = pow_si(lam, -k, p);
            for (int m = 0; m <= 16; m += 2) {
                ++st.checked;
                BallScalar full = mul(BallScalar::from_mpq(
                                          detail_expansion::gauss_moment_any(m), p), spi, p);
                BallScalar err = mul(lamk, abs_val(sub(full, ints[static_cast<std::size_t>(m / 2)], p), p), p);
                BallScalar bound = div(M[static_cast<std::size_t>((k / 2 - 1) * 9 + m / 2)], n52, p);
                if (!definitely_le(err, bound))
                    st.fail("window n=" + std::to_string(n) + " k=" + std::to_string(k) +
                            " m=" + std::to_string(m));
            }
        }
    }
    c.range = "k in {2,4,6,8}, m even 0..16, n in {1e5,2e5,1e6,1e7}";
    c.put("points_checked", std::to_string(st.checked));
    c.put("violations", std::to_string(st.violations));
    if (!st.first.empty()) c.put("first_violation", st.first);
    c.verdict = st.violations == 0 ? Verdict::Verified : Verdict::Failed;
    return c;
}

// --- integrated tail-layer bound 5362 n^(-5/2) -------------------------------
// E_n(x) collects the lambda^-L layers with L >= 10 of the integrand product.
// int e^{-x^2} |E_n| <= sum_L lambda^-L * min( sum_j |c_{L,j}| mom_j,
// Cauchy-Schwarz ) and lambda^-L <= (1.3 n^(1/4))^-L, so n^(5/2) times the
// bound is maximized at n = n0 (every term has n-exponent (10-L)/4 <= 0).
inline Certificate check_en_bound(const RemainderGrid& g) {
    Certificate c;
    c.statement = "tail-layer-integral-bound";
    c.precision_bits = g.prec;
    Prec p = g.prec;
    IntegrandLayers layers = build_integrand_layers();
    BallScalar spi = b_sqrt(const_pi(p), p);
    BallScalar pi14 = b_sqrt(spi, p);  // pi^(1/4)

    BallScalar total = BallScalar::zero(p);  // at n = n0, upper bound
    const std::int64_t n0 = kNZero;
    BallScalar n0b = BallScalar::from_si(n0, p);
    BallScalar scale = mul(BallScalar::from_mpq(mpq_class(13, 10), p),
                           pow_quarters(n0b, 1, p), p);  // lower bound for lambda
    for (const auto& layer : layers.tail) {
        // L1-of-coefficients bound
        BallScalar l1 = BallScalar::zero(p);
        for (std::size_t j = 0; j < layer.x_coeffs.size(); j += 2) {
            if (layer.x_coeffs[j].is_zero()) continue;
            BallScalar cj = abs_val(layer.x_coeffs[j].eval(p), p);
            BallScalar mom = mul(BallScalar::from_mpq(
                                     detail_expansion::gauss_moment_any(static_cast<long>(j)), p),
                                 spi, p);
            l1 = add(l1, mul(cj, mom, p), p);
        }
        // Cauchy-Schwarz: (int e^{-x^2} poly^2)^(1/2) pi^(1/4), exactly via moments
        AlgebraicConstant sq_int;
        for (std::size_t a = 0; a < layer.x_coeffs.size(); a += 2)
            for (std::size_t b = 0; b < layer.x_coeffs.size(); b += 2) {
                if (layer.x_coeffs[a].is_zero() || layer.x_coeffs[b].is_zero()) continue;
                sq_int = sq_int + (layer.x_coeffs[a] * layer.x_coeffs[b])
                                      .mul_mpq(detail_expansion::gauss_moment_any(
                                          static_cast<long>(a + b)));
            }
        BallScalar cs = mul(b_sqrt(mul(sq_int.eval(p), spi, p), p), pi14, p);
        BallScalar gl = definitely_le(cs, l1) ? cs : l1;
        // contribution: G_L * (1.3 n0^(1/4))^-L * n0^(5/2) ... n-dependence
        // (10-L)/4 <= 0 keeps n0 the maximizer
        BallScalar contrib = mul(gl, pow_si(scale, -layer.lambda_neg_pow, p), p);
        total = add(total, contrib, p);
    }
    BallScalar n52 = mul(mul(n0b, n0b, p), b_sqrt(n0b, p), p);
    BallScalar scaled = mul(total, n52, p);
    bool ok = definitely_le(scaled, BallScalar::from_si(5362, p));
    c.range = "sup over n >= 1e5 (attained at 1e5), all layers L >= 10";
    c.put("layers", std::to_string(layers.tail.size()));
    c.put("n_times_bound", scaled.str(25));
    c.put("reference_constant", "5362");
    c.verdict = ok ? Verdict::Verified : Verdict::Failed;
    return c;
}

inline std::vector<Certificate> run_remainder_suite(const RemainderGrid& g) {
    std::vector<Certificate> out;
    out.push_back(check_lambda_bounds(g));
    out.push_back(check_exp_window(g));
    out.push_back(check_taylor_tails(g));
    out.push_back(check_gaussian_truncation(g));
    out.push_back(check_moment_window(g));
    out.push_back(check_en_bound(g));
    return out;
}

// single-certificate roll-up of the whole suite
inline Certificate check_remainder_constants(const RemainderGrid& g) {
    Certificate all;
    all.statement = "saddle-remainder-constants";
    all.precision_bits = g.prec;
    all.range = "combined grid suites";
    bool ok = true;
    for (const Certificate& c : run_remainder_suite(g)) {
        all.put(c.statement, verdict_name(c.verdict));
        if (const std::string* v = c.find("violations"))
            if (*v != "0") all.put(c.statement + ".violations", *v);
        ok = ok && c.verdict == Verdict::Verified;
    }
    all.verdict = ok ? Verdict::Verified : Verdict::Failed;
    return all;
}

}  // namespace unimodal
