#pragma once

// Numerical evaluation of the k=1 term of the exact formula
//
//   (1/(24n+1)) * Int_{-1}^{1} cot((pi/2)(x/sqrt6 + 1/2))
//       * [ (sqrt(1-x^2) - 3 sqrt2/(pi sqrt(24n+1))) e^{ (pi/(3 sqrt2)) sqrt((1-x^2)(24n+1)) }
//         + (sqrt(1-x^2) + 3 sqrt2/(pi sqrt(24n+1))) e^{ -(pi/(3 sqrt2)) sqrt((1-x^2)(24n+1)) } ] dx
//
// by Gauss-Legendre quadrature in ball arithmetic at two successive degrees
// (d, 2d), with the inter-degree difference as the (non-rigorous) error
// budget, plus the k >= 2 tail envelope e^{pi sqrt(n/3)} and its components.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "unimodal/ball.hpp"
#include "unimodal/bessel.hpp"
#include "unimodal/certificate.hpp"
#include "unimodal/util.hpp"

namespace unimodal {

inline constexpr std::int64_t kNZero = 100000;  // n_0 of the tail envelope

// ---------------------------------------------------------------------------
// Gauss-Legendre rules
// ---------------------------------------------------------------------------

struct QuadratureRule {
    int degree = 0;
    std::vector<BallScalar> nodes;    // ascending
    std::vector<BallScalar> weights;
};

namespace detail_quad {

// P_d(x) and P_{d-1}(x) by the three-term recurrence, plain mpfr
inline void legendre_pair(int d, const mpfr_t x, mpfr_t pd, mpfr_t pdm1, mpfr_t t1, mpfr_t t2) {
    mpfr_set_ui(pdm1, 1, MPFR_RNDN);      // P_0
    mpfr_set(pd, x, MPFR_RNDN);           // P_1
    for (int k = 1; k < d; ++k) {
        // P_{k+1} = ((2k+1) x P_k - k P_{k-1})/(k+1)
        mpfr_mul(t1, x, pd, MPFR_RNDN);
        mpfr_mul_ui(t1, t1, static_cast<unsigned long>(2 * k + 1), MPFR_RNDN);
        mpfr_mul_ui(t2, pdm1, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_sub(t1, t1, t2, MPFR_RNDN);
        mpfr_div_ui(t1, t1, static_cast<unsigned long>(k + 1), MPFR_RNDN);
        mpfr_set(pdm1, pd, MPFR_RNDN);
        mpfr_set(pd, t1, MPFR_RNDN);
    }
}

}  // namespace detail_quad

inline QuadratureRule gauss_legendre(int degree, Prec p = kDefaultPrec, unsigned threads = 0) {
    if (degree < 1) throw std::invalid_argument("gauss_legendre: degree >= 1");
    QuadratureRule rule;
    rule.degree = degree;
    rule.nodes.assign(static_cast<std::size_t>(degree), BallScalar(p));
    rule.weights.assign(static_cast<std::size_t>(degree), BallScalar(p));

    const Prec pw = p + 32;
    int half = degree / 2;
    bool odd = degree % 2 != 0;

    parallel_for(0, half, [&](std::int64_t idx) {
        int i = static_cast<int>(idx) + 1;  // node index from the right
        mpfr_t x, pd, pdm1, t1, t2, dx;
        mpfr_init2(x, pw);
        mpfr_init2(pd, pw);
        mpfr_init2(pdm1, pw);
        mpfr_init2(t1, pw);
        mpfr_init2(t2, pw);
        mpfr_init2(dx, pw);
        double seed = std::cos(M_PI * (i - 0.25) / (degree + 0.5));
        mpfr_set_d(x, seed, MPFR_RNDN);
        for (int it = 0; it < 64; ++it) {
            detail_quad::legendre_pair(degree, x, pd, pdm1, t1, t2);
            // dx = P_d (x^2-1) / (d (x P_d - P_{d-1}))
            mpfr_mul(t1, x, pd, MPFR_RNDN);
            mpfr_sub(t1, t1, pdm1, MPFR_RNDN);
            mpfr_mul_ui(t1, t1, static_cast<unsigned long>(degree), MPFR_RNDN);
            mpfr_mul(t2, x, x, MPFR_RNDN);
            mpfr_sub_ui(t2, t2, 1, MPFR_RNDN);
            mpfr_mul(t2, t2, pd, MPFR_RNDN);
            mpfr_div(dx, t2, t1, MPFR_RNDN);
            mpfr_sub(x, x, dx, MPFR_RNDN);
            if (mpfr_zero_p(dx) || mpfr_get_exp(dx) < -(pw - 8)) break;
        }
        // enclose the node
        BallScalar node(p);
        mpfr_set(node.mid_mut(), x, MPFR_RNDN);
        {
            detail::Scratch r(kRadiusPrec);
            mpfr_abs(r, dx, MPFR_RNDU);
            mpfr_mul_ui(r, r, 4, MPFR_RNDU);
            node.rad_accum(r);
            mpfr_set_ui_2exp(r, 1, -(p + 8), MPFR_RNDU);
            node.rad_accum(r);
        }
        // weight w = 2/((1-x^2) P_d'(x)^2) via the stable plain recurrence.
        // A ball recurrence wraps here (radius growth ~2^d near |x|=1); the
        // plain evaluation loses only O(d) ulps, covered by the slop radius.
        detail_quad::legendre_pair(degree, x, pd, pdm1, t1, t2);
        mpfr_mul(t1, x, pd, MPFR_RNDN);
        mpfr_sub(t1, t1, pdm1, MPFR_RNDN);
        mpfr_mul_ui(t1, t1, static_cast<unsigned long>(degree), MPFR_RNDN);  // d(xP_d - P_{d-1})
        mpfr_mul(t2, x, x, MPFR_RNDN);
        mpfr_ui_sub(t2, 1, t2, MPFR_RNDN);                                   // 1 - x^2
        mpfr_mul(dx, t1, t1, MPFR_RNDN);
        mpfr_div(dx, dx, t2, MPFR_RNDN);  // (1-x^2) P'^2 = (d(xP_d-P_{d-1}))^2/(1-x^2)
        BallScalar w(p);
        mpfr_ui_div(w.mid_mut(), 2, dx, MPFR_RNDN);
        {
            detail::Scratch r(kRadiusPrec);
            w.upper_abs(r);
            mpfr_mul_2si(r, r, -(p - 8), MPFR_RNDU);
            w.rad_accum(r);
        }

        std::size_t hi_pos = static_cast<std::size_t>(degree - i);
        std::size_t lo_pos = static_cast<std::size_t>(i - 1);
        rule.nodes[hi_pos] = node;
        rule.weights[hi_pos] = w;
        rule.nodes[lo_pos] = neg(node, p);
        rule.weights[lo_pos] = w;
        mpfr_clear(x);
        mpfr_clear(pd);
        mpfr_clear(pdm1);
        mpfr_clear(t1);
        mpfr_clear(t2);
        mpfr_clear(dx);
    }, threads);

    if (odd) {
        std::size_t mid = static_cast<std::size_t>(half);
        rule.nodes[mid] = BallScalar::zero(p);
        // P'_d(0) = d P_{d-1}(0); w = 2/P'_d(0)^2
        mpfr_t x, pd, pdm1, t1, t2;
        mpfr_init2(x, pw);
        mpfr_init2(pd, pw);
        mpfr_init2(pdm1, pw);
        mpfr_init2(t1, pw);
        mpfr_init2(t2, pw);
        mpfr_set_ui(x, 0, MPFR_RNDN);
        detail_quad::legendre_pair(degree, x, pd, pdm1, t1, t2);
        mpfr_mul(t1, pdm1, pdm1, MPFR_RNDN);
        mpfr_mul_ui(t1, t1, static_cast<unsigned long>(degree) * static_cast<unsigned long>(degree),
                    MPFR_RNDN);
        BallScalar w(p);
        mpfr_ui_div(w.mid_mut(), 2, t1, MPFR_RNDN);
        {
            detail::Scratch r(kRadiusPrec);
            w.upper_abs(r);
            mpfr_mul_2si(r, r, -(p - 8), MPFR_RNDU);
            w.rad_accum(r);
        }
        rule.weights[mid] = w;
        mpfr_clear(x);
        mpfr_clear(pd);
        mpfr_clear(pdm1);
        mpfr_clear(t1);
        mpfr_clear(t2);
    }
    return rule;
}

// ---------------------------------------------------------------------------
// the k = 1 integrand
// ---------------------------------------------------------------------------

// per-n evaluation context (all balls at the working precision)
struct K1Context {
    std::int64_t n = 0;
    Prec prec = kDefaultPrec;
    BallScalar c_exp;     // (pi/(3 sqrt2)) sqrt(24n+1)
    BallScalar sub_term;  // 3 sqrt2/(pi sqrt(24n+1)) = 1/(2 lambda_n^2)
    BallScalar prefac;    // 1/(24n+1)
    BallScalar cot_a1;    // pi/(2 sqrt6)
    BallScalar cot_a0;    // pi/4
};

inline K1Context make_k1_context(std::int64_t n, Prec p) {
    if (n < 1) throw std::invalid_argument("k1: n >= 1");
    K1Context c;
    c.n = n;
    c.prec = p;
    BallScalar pi = const_pi(p);
    BallScalar m = BallScalar::from_si(24 * n + 1, p);
    BallScalar sq2 = b_sqrt(BallScalar::from_si(2, p), p);
    c.c_exp = div(mul(pi, b_sqrt(m, p), p), mul_si(sq2, 3, p), p);
    c.sub_term = div(mul_si(sq2, 3, p), mul(pi, b_sqrt(m, p), p), p);
    c.prefac = div(BallScalar::one(p), m, p);
    c.cot_a1 = div(pi, mul_si(b_sqrt(BallScalar::from_si(6, p), p), 2, p), p);
    c.cot_a0 = div_si(pi, 4, p);
    return c;
}

// both exponential pieces; set secondary_only to integrate just the e^{-...} part
inline BallScalar k1_integrand(const K1Context& c, const BallScalar& x, bool secondary_only) {
    Prec p = c.prec;
    BallScalar r2 = sub(BallScalar::one(p), mul(x, x, p), p);
    BallScalar r = b_sqrt(r2, p);
    BallScalar cot = b_cot(add(mul(c.cot_a1, x, p), c.cot_a0, p), p);
    BallScalar e = b_exp(mul(c.c_exp, r, p), p);
    BallScalar secondary =
        mul(add(r, c.sub_term, p), div(BallScalar::one(p), e, p), p);
    if (secondary_only) return mul(mul(cot, secondary, p), c.prefac, p);
    BallScalar primary = mul(sub(r, c.sub_term, p), e, p);
    return mul(mul(cot, add(primary, secondary, p), p), c.prefac, p);
}

// quadrature of the integrand over [-a, a] (a = 1 gives the full integral)
inline BallScalar k1_quadrature(const K1Context& c, const QuadratureRule& rule,
                                const BallScalar& a, bool secondary_only, unsigned threads = 0) {
    Prec p = c.prec;
    bool full = contains_si(a, 1) && a.is_exact();
    std::size_t m = rule.nodes.size();
    std::vector<BallScalar> terms(m, BallScalar(p));
    parallel_for(0, static_cast<std::int64_t>(m), [&](std::int64_t i) {
        std::size_t k = static_cast<std::size_t>(i);
        BallScalar x = full ? rule.nodes[k] : mul(a, rule.nodes[k], p);
        terms[k] = mul(rule.weights[k], k1_integrand(c, x, secondary_only), p);
    }, threads);
    BallScalar acc = BallScalar::zero(p);
    for (std::size_t k = 0; k < m; ++k) acc = add(acc, terms[k], p);  // fixed order
    if (!full) acc = mul(acc, a, p);
    return acc;
}

// ---------------------------------------------------------------------------
// k1_term: evaluation at degrees (d, 2d) with split report
// ---------------------------------------------------------------------------

struct K1Evaluation {
    std::int64_t n = 0;
    int quadrature_degree = 0;      // the higher degree actually used
    Prec precision = 0;
    BallScalar value;               // quadrature at degree 2d over [-1,1]
    BallScalar inter_degree_diff;   // |I_d - I_2d|, empirical budget
    bool converged = true;
    // split report
    BallScalar inner_region_value;  // quadrature over |x| <= n^(-1/8)
    BallScalar outer_region_bound;  // rigorous bound on the |x| > n^(-1/8) part
    BallScalar outer_region_ref;    // (14/(24n+1)) e^{2 pi sqrt(n/3) - pi n^(1/4)/sqrt3}
    BallScalar secondary_value;     // quadrature of the e^{-...} term alone
    BallScalar secondary_bound;     // rigorous bound on it
};

inline int suggested_degree(std::int64_t n) {
    double lam = M_PI / (3.0 * std::sqrt(2.0)) * std::sqrt(24.0 * static_cast<double>(n) + 1.0);
    double target = lam - M_PI * std::sqrt(static_cast<double>(n) / 3.0) + 8.0;
    if (target < 8.0) target = 8.0;
    int d = static_cast<int>(std::ceil(std::sqrt(lam * target / 2.0))) + 16;
    return d < 64 ? 64 : d;
}

inline Prec suggested_precision(std::int64_t n) {
    double lam = M_PI / (3.0 * std::sqrt(2.0)) * std::sqrt(24.0 * static_cast<double>(n) + 1.0);
    double gap = lam - M_PI * std::sqrt(static_cast<double>(n) / 3.0);
    Prec bits = static_cast<Prec>(std::ceil(1.4427 * (gap > 0 ? gap : 0))) + 192;
    return bits < kDefaultPrec ? kDefaultPrec : bits;
}

inline K1Evaluation k1_term(std::int64_t n, int degree, Prec prec = 0, unsigned threads = 0) {
    if (n < 1) throw std::invalid_argument("k1_term: n >= 1");
    if (degree != 0 && degree < 16) throw std::invalid_argument("k1_term: degree >= 16");
    int d = degree == 0 ? suggested_degree(n) : degree;
    Prec p = prec == 0 ? suggested_precision(n) : std::max<Prec>(prec, 64);

    K1Context c = make_k1_context(n, p);
    QuadratureRule lo = gauss_legendre(d, p, threads);
    QuadratureRule hi = gauss_legendre(2 * d, p, threads);
    BallScalar one = BallScalar::one(p);
    BallScalar i_lo = k1_quadrature(c, lo, one, false, threads);
    BallScalar i_hi = k1_quadrature(c, hi, one, false, threads);

    K1Evaluation out;
    out.n = n;
    out.quadrature_degree = 2 * d;
    out.precision = p;
    out.value = i_hi;
    out.inter_degree_diff = abs_val(sub(i_lo, i_hi, p), p);
    {
        // converged if the inter-degree difference is far below the value
        detail::Scratch dv(kBoundPrec), vv(kBoundPrec);
        out.inter_degree_diff.upper(dv);
        out.value.lower_abs(vv);
        out.converged = mpfr_zero_p(dv.v) ||
                        (mpfr_sgn(vv.v) > 0 && mpfr_get_exp(dv.v) < mpfr_get_exp(vv.v) - 24);
    }

    // inner region |x| <= a = n^(-1/8)
    BallScalar nball = BallScalar::from_si(n, p);
    BallScalar a = div(one, b_sqrt(b_sqrt(b_sqrt(nball, p), p), p), p);
    out.inner_region_value = k1_quadrature(c, hi, a, false, threads);

    // rigorous outer bound: |cot| peaks at x = -1; on |x| >= a the sqrt factor
    // is at most sqrt(1-a^2)
    BallScalar cot_max = abs_val(b_cot(sub(c.cot_a0, mul(c.cot_a1, one, p), p), p), p);
    BallScalar ra = b_sqrt(sub(one, mul(a, a, p), p), p);
    BallScalar first_part = mul(ra, b_exp(mul(c.c_exp, ra, p), p), p);
    BallScalar second_part = add(one, c.sub_term, p);
    BallScalar len = mul_si(sub(one, a, p), 2, p);
    out.outer_region_bound =
        mul(mul(mul(len, cot_max, p), add(first_part, second_part, p), p), c.prefac, p);

    // reference form of the same bound
    {
        BallScalar pi = const_pi(p);
        BallScalar n14 = b_sqrt(b_sqrt(nball, p), p);
        BallScalar sqrt3 = b_sqrt(BallScalar::from_si(3, p), p);
        BallScalar expo = sub(mul_si(mul(pi, b_sqrt(div(nball, BallScalar::from_si(3, p), p), p), p), 2, p),
                              div(mul(pi, n14, p), sqrt3, p), p);
        out.outer_region_ref = mul(mul_si(c.prefac, 14, p), b_exp(expo, p), p);
    }

    out.secondary_value = k1_quadrature(c, hi, one, true, threads);
    out.secondary_bound = mul(mul_si(mul(cot_max, add(one, c.sub_term, p), p), 2, p), c.prefac, p);
    return out;
}

// ---------------------------------------------------------------------------
// tail budget for the k >= 2 terms
// ---------------------------------------------------------------------------

struct TailBudget {
    std::int64_t n = 0;
    BallScalar bound;                  // e^{pi sqrt(n/3)}, the unit-factor envelope
    BallScalar sum_component;          // (pi^2/18) sum_{k>=2} (log k + 14)/k^(3/2), enclosure
    BallScalar exp_component;          // the exponential component at this n
    bool sum_component_le_10_3 = false;   // the displayed 10.3 comparison
    bool exp_component_le_0_9 = false;    // <= 0.9 e^{pi sqrt(n/3)}
    bool total_le_envelope = false;       // sum + exp <= e^{pi sqrt(n/3)}
};

// enclosure of (pi^2/18) * sum_{k>=2} (log k + 14)/k^(3/2) via partial sums
// plus the integral tail bound (2 log K + 32)/sqrt(K)
inline BallScalar tail_sum_component(Prec p = 192, long K = 20000) {
    BallScalar acc = BallScalar::zero(p);
    for (long k = 2; k <= K; ++k) {
        BallScalar kk = BallScalar::from_si(k, p);
        BallScalar num = add(b_log(kk, p), BallScalar::from_si(14, p), p);
        BallScalar den = mul(kk, b_sqrt(kk, p), p);
        acc = add(acc, div(num, den, p), p);
    }
    BallScalar sqrtK = b_sqrt(BallScalar::from_si(K, p), p);
    BallScalar tail_hi = div(add(mul_si(b_log(BallScalar::from_si(K, p), p), 2, p),
                                 BallScalar::from_si(32, p), p),
                             sqrtK, p);
    // acc + [0, tail_hi]
    BallScalar half_tail = div_si(tail_hi, 2, p);
    acc = add(acc, half_tail, p);
    {
        detail::Scratch h(kBoundPrec);
        half_tail.upper(h);
        acc.rad_accum(h);
    }
    BallScalar pi = const_pi(p);
    return div_si(mul(mul(pi, pi, p), acc, p), 18, p);
}

inline TailBudget tail_budget(std::int64_t n, Prec p = kDefaultPrec) {
    if (n < kNZero)
        throw std::invalid_argument("tail_budget: n >= 100000 required");
    TailBudget t;
    t.n = n;
    BallScalar pi = const_pi(p);
    BallScalar nball = BallScalar::from_si(n, p);
    t.bound = b_exp(mul(pi, b_sqrt(div_si(nball, 3, p), p), p), p);
    t.sum_component = tail_sum_component(std::min<Prec>(p, 192));
    // X = pi sqrt(24n+1)/(3 sqrt2); component = (8/pi) X^(3/2) (log X + 14) e^(X/2)/(24n+1)
    BallScalar m = BallScalar::from_si(24 * n + 1, p);
    BallScalar X = div(mul(pi, b_sqrt(m, p), p),
                       mul_si(b_sqrt(BallScalar::from_si(2, p), p), 3, p), p);
    BallScalar x32 = mul(X, b_sqrt(X, p), p);
    BallScalar logX = add(b_log(X, p), BallScalar::from_si(14, p), p);
    BallScalar eX2 = b_exp(div_si(X, 2, p), p);
    t.exp_component = div(mul(mul(mul(div(BallScalar::from_si(8, p), pi, p), x32, p), logX, p),
                              eX2, p),
                          m, p);
    t.sum_component_le_10_3 =
        definitely_le(t.sum_component, div_si(BallScalar::from_si(103, p), 10, p));
    t.exp_component_le_0_9 =
        definitely_le(t.exp_component, div_si(mul_si(t.bound, 9, p), 10, p));
    t.total_le_envelope = definitely_le(add(t.sum_component, t.exp_component, p), t.bound);
    return t;
}

inline Certificate tail_budget_certificate(const TailBudget& t) {
    Certificate c;
    c.statement = "k-tail-envelope";
    c.range = "n=" + std::to_string(t.n);
    c.precision_bits = t.bound.precision();
    c.put("envelope", t.bound.str(30));
    c.put("sum_component", t.sum_component.str(30));
    c.put("exp_component", t.exp_component.str(30));
    c.put("sum_component_le_10.3", t.sum_component_le_10_3 ? "true" : "false");
    c.put("exp_component_le_0.9*envelope", t.exp_component_le_0_9 ? "true" : "false");
    c.put("total_le_envelope", t.total_le_envelope ? "true" : "false");
    // the envelope statement itself is what downstream bounds consume
    c.verdict = t.total_le_envelope && t.exp_component_le_0_9 ? Verdict::Verified : Verdict::Failed;
    return c;
}

// ---------------------------------------------------------------------------
// ingredients of the cot-sum bound for k >= 2
// ---------------------------------------------------------------------------

// checks, on sampled (k, r, x):
//  (i)   |cot y| <= 1/min(y, pi-y) at y = (pi/2k)(-x/sqrt6 + r + 1/2)
//  (ii)  min(y, pi-y) >= (pi/2k)(r + 0.09)          for 0   <= r <= k-1
//        min(y, pi-y) >= (pi/2k)(2k - r - 0.91)     for k   <= r <= 2k-1
//  (iii) sum_{r=0}^{k-1} 1/(r+0.09) <= log k + 14   for k = 2..k_scan
inline Certificate check_rbound_ingredients(const std::vector<long>& ks, int x_points,
                                            long k_scan, Prec p = 192) {
    Certificate cert;
    cert.statement = "cot-sum-bound-ingredients";
    cert.precision_bits = p;
    cert.range = "k in {...}, x grid of " + std::to_string(x_points) + ", k_scan to " +
                 std::to_string(k_scan);
    long violations = 0;
    std::string first_violation;
    BallScalar pi = const_pi(p);
    BallScalar sqrt6 = b_sqrt(BallScalar::from_si(6, p), p);
    long triples = 0;
    for (long k : ks) {
        if (k < 2) throw std::invalid_argument("check_rbound_ingredients: k >= 2");
        BallScalar pk = div_si(pi, 2 * k, p);
        std::vector<long> rs;
        if (k <= 64) {
            for (long r = 0; r < 2 * k; ++r) rs.push_back(r);
        } else {
            rs = {0, 1, 2, k - 2, k - 1, k, k + 1, 2 * k - 2, 2 * k - 1};
        }
        for (long r : rs) {
            for (int ix = 0; ix <= x_points; ++ix) {
                ++triples;
                mpq_class xq(2 * ix - x_points, x_points);  // x in [-1, 1]
                BallScalar x = BallScalar::from_mpq(xq, p);
                // y = pk * (r + 1/2 - x/sqrt6)
                BallScalar inner = sub(add(BallScalar::from_si(r, p),
                                           BallScalar::from_mpq(mpq_class(1, 2), p), p),
                                       div(x, sqrt6, p), p);
                BallScalar y = mul(pk, inner, p);
                BallScalar piy = sub(pi, y, p);
                BallScalar mn;
                if (definitely_le(y, piy)) {
                    mn = y;
                } else if (definitely_le(piy, y)) {
                    mn = piy;
                } else {  // straddling samples: take the interval hull of the min
                    detail::Scratch l1(kBoundPrec), l2(kBoundPrec), h1(kBoundPrec), h2(kBoundPrec);
                    y.lower(l1);
                    piy.lower(l2);
                    y.upper(h1);
                    piy.upper(h2);
                    if (mpfr_cmp(l2.v, l1.v) < 0) mpfr_set(l1.v, l2.v, MPFR_RNDD);
                    if (mpfr_cmp(h2.v, h1.v) < 0) mpfr_set(h1.v, h2.v, MPFR_RNDU);
                    mn = BallScalar::from_interval(l1.v, h1.v, p);
                }
                bool ok1 = definitely_le(mul(abs_val(b_cot(y, p), p), mn, p), BallScalar::one(p));
                BallScalar rhs =
                    r <= k - 1
                        ? mul(pk, add(BallScalar::from_si(r, p),
                                      BallScalar::from_mpq(mpq_class(9, 100), p), p), p)
                        : mul(pk, sub(BallScalar::from_si(2 * k - r, p),
                                      BallScalar::from_mpq(mpq_class(91, 100), p), p), p);
                bool ok2 = definitely_le(rhs, mn);
                if (!ok1 || !ok2) {
                    ++violations;
                    if (first_violation.empty())
                        first_violation = "k=" + std::to_string(k) + " r=" + std::to_string(r) +
                                          " x=" + xq.get_str() + (ok1 ? "" : " [cot]") +
                                          (ok2 ? "" : " [min]");
                }
            }
        }
    }
    // (iii) incremental scan
    long sum_violations = 0;
    {
        BallScalar acc = BallScalar::zero(p);
        for (long k = 1; k <= k_scan; ++k) {
            // add 1/((k-1) + 9/100)
            acc = add(acc, div(BallScalar::from_si(100, p),
                               BallScalar::from_si(100 * (k - 1) + 9, p), p), p);
            if (k < 2) continue;
            BallScalar rhs = add(b_log(BallScalar::from_si(k, p), p), BallScalar::from_si(14, p), p);
            if (!definitely_le(acc, rhs)) {
                ++sum_violations;
                if (first_violation.empty()) first_violation = "sum at k=" + std::to_string(k);
            }
        }
    }
    cert.put("triples_checked", std::to_string(triples));
    cert.put("sum_checked_to_k", std::to_string(k_scan));
    cert.put("violations", std::to_string(violations + sum_violations));
    if (!first_violation.empty()) cert.put("first_violation", first_violation);
    cert.verdict = violations + sum_violations == 0 ? Verdict::Verified : Verdict::Failed;
    return cert;
}

}  // namespace unimodal
