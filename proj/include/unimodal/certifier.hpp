#pragma once

// End-to-end certification: numeric evaluation of the five-term asymptotic
// main term with its explicit error envelope, containment checks against the
// exact counts, the scaled log-concavity delta interval, and the combined
// log-concavity certificate (exact scan below the switch point, positivity
// of c0 - |c1| s - 106 s^2 above it).

#include <cstdint>
#include <stdexcept>
#include <string>

#include "unimodal/ball.hpp"
#include "unimodal/certificate.hpp"
#include "unimodal/expansion.hpp"
#include "unimodal/quadrature.hpp"  // kNZero
#include "unimodal/series.hpp"

namespace unimodal {

inline constexpr long kMainEnvelopeConstant = 478;   // O_{<=478}(n^(-5/2))
inline constexpr long kDeltaEnvelopeConstant = 106; // O_{<=106}(n^(-1))

struct AsymptoticEstimate {
    std::int64_t n = 0;
    Prec precision = 0;
    BallScalar main;            // e^{2 pi sqrt(n/3)} n^(-5/4) (A + B/sqrt n + ... + E/n^2)
    BallScalar error_envelope;  // 478 e^{2 pi sqrt(n/3)} n^(-15/4)
};

namespace detail_cert {
inline BallScalar exp_main_factor(std::int64_t n, Prec p) {
    BallScalar nb = BallScalar::from_si(n, p);
    return b_exp(mul_si(mul(const_pi(p), b_sqrt(div_si(nb, 3, p), p), p), 2, p), p);
}
}  // namespace detail_cert

inline AsymptoticEstimate asymptotic_u(std::int64_t n, const ExpansionConstants& k,
                                       Prec p = 2048) {
    if (n < 1) throw std::invalid_argument("asymptotic_u: n >= 1");
    for (int attempt = 0;; ++attempt) {
        AsymptoticEstimate est;
        est.n = n;
        est.precision = p;
        BallScalar nb = BallScalar::from_si(n, p);
        BallScalar s = div(BallScalar::one(p), b_sqrt(nb, p), p);
        BallScalar bracket = eval_algebraic(k.E, p);
        bracket = add(mul(bracket, s, p), eval_algebraic(k.D, p), p);
        bracket = add(mul(bracket, s, p), eval_algebraic(k.C, p), p);
        bracket = add(mul(bracket, s, p), eval_algebraic(k.B, p), p);
        bracket = add(mul(bracket, s, p), eval_algebraic(k.A, p), p);
        BallScalar efac = detail_cert::exp_main_factor(n, p);
        BallScalar n54 = mul(nb, pow_quarters(nb, 1, p), p);  // n^(5/4)
        est.main = div(mul(efac, bracket, p), n54, p);
        BallScalar n154 = mul(mul(nb, nb, p), mul(nb, pow_quarters(nb, 3, p), p), p);  // n^(15/4)
        est.error_envelope = div(mul_si(efac, kMainEnvelopeConstant, p), n154, p);
        // post: radii below 1e-6 of the envelope
        BallScalar tol = div(est.error_envelope, BallScalar::from_si(1000000, p), p);
        detail::Scratch rr(kBoundPrec), tl(kBoundPrec);
        mpfr_add(rr.v, est.main.rad(), est.error_envelope.rad(), MPFR_RNDU);
        tol.lower(tl.v);
        if (mpfr_cmp(rr.v, tl.v) < 0) return est;
        if (attempt >= 4) throw BallOverflowError("asymptotic_u: precision exhaustion");
        p *= 2;
    }
}

struct ContainmentReport {
    std::int64_t n = 0;
    Prec precision = 0;
    BallScalar exact;      // u(n) as a ball (exact integer, rounding radius)
    BallScalar main;
    BallScalar envelope;
    BallScalar residual;   // |u(n) - main|
    bool contained = false;
    // residual/envelope upper bound, for margin reporting
    BallScalar margin_ratio;
};

inline ContainmentReport check_main_term_containment(const NatSeries& u, std::int64_t n,
                                                   const ExpansionConstants& k, Prec p = 2048) {
    if (u.kind != SeriesKind::U || u.n_max() < n)
        throw std::invalid_argument("check_main_term_containment: u table must cover n");
    AsymptoticEstimate est = asymptotic_u(n, k, p);
    ContainmentReport r;
    r.n = n;
    r.precision = est.precision;
    r.exact = BallScalar::from_mpz(u.at(n), est.precision);
    r.main = est.main;
    r.envelope = est.error_envelope;
    r.residual = abs_val(sub(r.exact, est.main, est.precision), est.precision);
    r.contained = definitely_le(r.residual, est.error_envelope);
    r.margin_ratio = div(r.residual, est.error_envelope, 64);
    return r;
}

// scaled delta interval of the log-concavity expansion:
//   [c0 - |c1| s - 106 s^2, c0 + |c1| s + 106 s^2] at s = n^(-1/2)
struct DeltaExpansionBounds {
    std::int64_t n = 0;
    Prec precision = 0;
    BallScalar lower, upper;
    BallScalar scaled_exact;   // (u(n)^2 - u(n-1)u(n+1)) n^4 e^{-4 pi sqrt(n/3)}
    bool contained = false;
};

inline DeltaExpansionBounds delta_expansion_bounds(const NatSeries& u, std::int64_t n,
                                      const ExpansionConstants& k, Prec p = 2048) {
    if (n < kNZero) throw std::invalid_argument("delta_expansion_bounds: n >= 100000 required");
    if (u.kind != SeriesKind::U || u.n_max() < n + 1)
        throw std::invalid_argument("delta_expansion_bounds: u table must cover n+1");
    DeltaExpansionBounds r;
    r.n = n;
    r.precision = p;
    BallScalar nb = BallScalar::from_si(n, p);
    BallScalar s = div(BallScalar::one(p), b_sqrt(nb, p), p);
    BallScalar c0 = eval_algebraic(k.c0, p);
    BallScalar c1abs = abs_val(eval_algebraic(k.c1_reference, p), p);
    BallScalar width = add(mul(c1abs, s, p),
                           mul_si(mul(s, s, p), kDeltaEnvelopeConstant, p), p);
    r.lower = sub(c0, width, p);
    r.upper = add(c0, width, p);

    mpz_class delta = u.at(n) * u.at(n) - u.at(n - 1) * u.at(n + 1);
    BallScalar d = BallScalar::from_mpz(delta, p);
    BallScalar e4 = b_exp(mul_si(mul(const_pi(p), b_sqrt(div_si(nb, 3, p), p), p), 4, p), p);
    BallScalar n4 = pow_si(nb, 4, p);
    r.scaled_exact = div(mul(d, n4, p), e4, p);
    r.contained = definitely_le(r.lower, r.scaled_exact) && definitely_le(r.scaled_exact, r.upper);
    return r;
}

// positivity margin c0 - |c1| s - 106 s^2 at s = n_switch^(-1/2); decreasing
// in s, so a strict sign at the switch point certifies every n >= n_switch
inline BallScalar switch_margin(std::int64_t n_switch, const ExpansionConstants& k, Prec p) {
    BallScalar s = div(BallScalar::one(p), b_sqrt(BallScalar::from_si(n_switch, p), p), p);
    BallScalar c0 = eval_algebraic(k.c0, p);
    BallScalar c1abs = abs_val(eval_algebraic(k.c1_reference, p), p);
    return sub(sub(c0, mul(c1abs, s, p), p),
               mul_si(mul(s, s, p), kDeltaEnvelopeConstant, p), p);
}

inline Certificate certify_all(const NatSeries& u, std::int64_t n_switch,
                               const ExpansionConstants& k, Prec p = kDefaultPrec,
                               unsigned threads = 0) {
    Certificate cert;
    cert.statement = "log-concavity-certificate";
    if (n_switch < kNZero) {
        cert.verdict = Verdict::Failed;
        cert.range = "n_switch=" + std::to_string(n_switch);
        cert.put("error", "n_switch below 100000 rejected (asymptotic leg unavailable)");
        return cert;
    }
    if (u.kind != SeriesKind::U || u.n_max() < n_switch + 1)
        throw std::invalid_argument("certify_all: u table must cover n_switch+1");

    // leg 1: exact scan on [1, n_switch]
    ScanResult scan = logconcavity_scan(u, 1, n_switch, threads);
    std::string exc;
    for (std::size_t i = 0; i < scan.exceptions.size(); ++i)
        exc += (i ? "," : "") + std::to_string(scan.exceptions[i]);
    bool exceptions_small = scan.exceptions.empty() || scan.exceptions.back() <= 7;

    // leg 2: strict positivity at the switch point, escalating precision on a
    // straddle
    Prec pp = p;
    int sign = 0;
    BallScalar margin;
    for (int attempt = 0; attempt < 4; ++attempt) {
        margin = switch_margin(n_switch, k, pp);
        sign = margin.definite_sign();
        if (sign != 0) break;
        pp *= 2;
    }

    cert.range = "scan [1," + std::to_string(n_switch) + "], asymptotic n >= " +
                 std::to_string(n_switch);
    cert.precision_bits = pp;
    cert.put("exception_set", "{" + exc + "}");
    cert.put("reference_exception_set", "{1,5,7}");
    for (std::int64_t sn : {2, 3, 4, 6})
        if (sn <= n_switch)
            cert.put("delta_" + std::to_string(sn), scan.delta_at(sn).get_str());
    for (std::int64_t e : scan.exceptions)
        cert.put("delta_" + std::to_string(e), scan.delta_at(e).get_str());
    cert.put("positive_count", std::to_string(scan.positive));
    cert.put("zero_count", std::to_string(scan.zero));
    cert.put("negative_count", std::to_string(scan.negative));
    cert.put("switch_margin", margin.str(20));
    cert.put("switch_margin_positive", sign > 0 ? "true" : "false");
    cert.put("exceptions_all_below_8", exceptions_small ? "true" : "false");
    cert.put("u_table_checksum", table_checksum(u));

    if (sign == 0)
        cert.verdict = Verdict::Inconclusive;
    else if (sign > 0)
        cert.verdict = Verdict::Verified;
    else
        cert.verdict = Verdict::Failed;
    return cert;
}

}  // namespace unimodal
