#pragma once

// The I-Bessel kernel of order 3/2 in its elementary closed form
//   I_{3/2}(y) = (1/sqrt(2 pi y)) * ((1 - 1/y) e^y + (1 + 1/y) e^-y),
// a power-series oracle for it, and grid verification of the two-sided
// upper bounds
//   I_{3/2}(y) <= sqrt(2/(pi y)) e^y            (y >= 1)
//   I_{3/2}(y) <= (2 sqrt2/(3 sqrt pi)) y^(3/2) (0 <= y < 1).

#include <cstdint>
#include <string>
#include <vector>

#include "unimodal/ball.hpp"
#include "unimodal/certificate.hpp"
#include "unimodal/util.hpp"

namespace unimodal {

enum class BesselMode { ClosedForm, Series };

inline BallScalar bessel_i32(const BallScalar& y, BesselMode mode, Prec p = kDefaultPrec) {
    Prec pw = p + 32;
    if (mode == BesselMode::ClosedForm) {
        if (y.contains_zero())
            throw BallDomainError("bessel_i32 closed form: y ball must exclude 0");
        BallScalar inv = div(BallScalar::one(pw), y, pw);
        BallScalar ey = b_exp(y, pw);
        BallScalar emy = div(BallScalar::one(pw), ey, pw);
        BallScalar big = mul(sub(BallScalar::one(pw), inv, pw), ey, pw);
        BallScalar small = mul(add(BallScalar::one(pw), inv, pw), emy, pw);
        BallScalar two_pi_y = mul(mul_si(const_pi(pw), 2, pw), y, pw);
        return div(add(big, small, pw), b_sqrt(two_pi_y, pw), p);
    }
    // series: sum_{m>=0} (y/2)^(2m+3/2) / (m! Gamma(m+5/2)), with the
    // truncation tail folded into the radius via a geometric bound
    if (mpfr_zero_p(y.mid()) && y.is_exact()) return BallScalar::zero(p);
    detail::Scratch ylo(kBoundPrec);
    y.lower(ylo);
    if (mpfr_sgn(ylo.v) < 0)
        throw BallDomainError("bessel_i32 series: y must be nonnegative");
    if (mpfr_sgn(ylo.v) == 0)
        throw BallDomainError("bessel_i32 series: y ball straddles 0; shrink the radius");

    BallScalar half_y = div_si(y, 2, pw);
    // t0 = (y/2)^(3/2) * 4/(3 sqrt pi)
    BallScalar t = mul(half_y, b_sqrt(half_y, pw), pw);
    t = div(mul_si(t, 4, pw), mul_si(b_sqrt(const_pi(pw), pw), 3, pw), pw);
    BallScalar acc = t;
    BallScalar y2 = mul(y, y, pw);
    for (long m = 0;; ++m) {
        // t_{m+1} = t_m * y^2 / (2 (m+1)(2m+5))
        t = div_si(mul(t, y2, pw), 2 * (m + 1) * (2 * m + 5), pw);
        detail::Scratch th(kBoundPrec), ah(kBoundPrec);
        t.upper_abs(th);
        acc.upper_abs(ah);
        // stop once the term ratio is certainly below 1/2 and the term is
        // negligible at the working precision
        bool ratio_small = false;
        {
            detail::Scratch q(kBoundPrec);
            y2.upper_abs(q);
            mpfr_div_ui(q, q, static_cast<unsigned long>(2 * (m + 2) * (2 * m + 7)), MPFR_RNDU);
            ratio_small = mpfr_cmp_d(q, 0.5) < 0;
        }
        bool term_negligible =
            mpfr_zero_p(th.v) ||
            (!mpfr_zero_p(ah.v) && mpfr_get_exp(th.v) < mpfr_get_exp(ah.v) - (pw + 16));
        acc = add(acc, t, pw);
        if (ratio_small && term_negligible) {
            // geometric tail: sum_{j>=1} t*q^j <= t * q/(1-q) <= t
            detail::Scratch tail(kBoundPrec);
            t.upper_abs(tail);
            acc.rad_accum(tail);
            break;
        }
        if (m > 100000)
            throw BallOverflowError("bessel_i32 series did not truncate");
    }
    return add(acc, BallScalar::zero(p), p);
}

// two-branch upper bound: sqrt(2/(pi y)) e^y for y >= 1, (2 sqrt2/(3 sqrt pi)) y^(3/2) below
inline BallScalar bessel_i32_upper_bound(const BallScalar& y, bool large_branch,
                                         Prec p = kDefaultPrec) {
    Prec pw = p + 32;
    if (large_branch) {
        BallScalar q = div(BallScalar::from_si(2, pw), mul(const_pi(pw), y, pw), pw);
        return mul(b_sqrt(q, pw), b_exp(y, pw), p);
    }
    BallScalar c = div(mul_si(b_sqrt(BallScalar::from_si(2, pw), pw), 2, pw),
                       mul_si(b_sqrt(const_pi(pw), pw), 3, pw), pw);
    return mul(c, mul(y, b_sqrt(y, pw), pw), p);
}

// Verify the bound at every grid point; failures become certificate content.
inline Certificate check_bessel_bounds(const std::vector<mpq_class>& grid,
                                       Prec p = kDefaultPrec, unsigned threads = 0) {
    Certificate cert;
    cert.statement = "bessel-i32-upper-bounds";
    cert.precision_bits = p;
    cert.range = "grid of " + std::to_string(grid.size()) + " points";
    std::vector<std::uint8_t> ok(grid.size(), 0);
    std::vector<std::string> note(grid.size());
    parallel_for(0, static_cast<std::int64_t>(grid.size()), [&](std::int64_t i) {
        const mpq_class& q = grid[static_cast<std::size_t>(i)];
        BallScalar y = BallScalar::from_mpq(q, p);
        bool large = q >= 1;
        BallScalar v = bessel_i32(y, large ? BesselMode::ClosedForm : BesselMode::Series, p);
        BallScalar bound = bessel_i32_upper_bound(y, large, p);
        if (definitely_le(v, bound)) {
            ok[static_cast<std::size_t>(i)] = 1;
        } else {
            note[static_cast<std::size_t>(i)] =
                "y=" + q.get_str() + " value=" + v.str(20) + " bound=" + bound.str(20);
        }
    }, threads);
    std::size_t failures = 0;
    for (std::size_t i = 0; i < ok.size(); ++i) {
        if (!ok[i]) {
            ++failures;
            if (failures <= 8) cert.put("violation_" + std::to_string(failures), note[i]);
        }
    }
    cert.put("points_checked", std::to_string(grid.size()));
    cert.put("violations", std::to_string(failures));
    cert.verdict = failures == 0 ? Verdict::Verified : Verdict::Failed;
    return cert;
}

// y = step, 2*step, ..., hi (exact rationals)
inline std::vector<mpq_class> bessel_grid(const mpq_class& step, const mpq_class& hi) {
    std::vector<mpq_class> g;
    for (mpq_class y = step; y <= hi; y += step) g.push_back(y);
    return g;
}

}  // namespace unimodal
