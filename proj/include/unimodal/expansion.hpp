#pragma once

// Exact re-derivation of the saddle-point expansion for the k=1 term:
// truncated series algebra over Q[pi^(+-1), 3^(1/4)], Gaussian moments, the
// integrand layers in powers of lambda^-2, and the expansion constants A-E
// together with the log-concavity delta coefficients c0, c1.  Everything in
// this header is exact rational/ring arithmetic; numeric enclosures only
// appear when a caller evaluates the results.

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "unimodal/algebraic.hpp"

namespace unimodal {

// binomial coefficient with rational upper index
inline mpq_class binom_mpq(const mpq_class& alpha, unsigned k) {
    mpq_class num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= alpha - static_cast<long>(i);
        den *= static_cast<long>(i) + 1;
    }
    return num / den;
}

// (m-1)!! / 2^(m/2) for even m; the common sqrt(pi) factor is tracked
// structurally by the caller, never as a ring element.
struct GaussianMoment {
    mpq_class value;
    bool sqrt_pi = true;
};

namespace detail_expansion {
inline mpq_class gauss_moment_any(long m) {
    if (m < 0 || m % 2 != 0) throw std::invalid_argument("gaussian moment needs even m >= 0");
    mpq_class v = 1;
    for (long i = m - 1; i >= 1; i -= 2) v *= i;  // (m-1)!!
    mpz_class pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<mp_bitcnt_t>(m / 2));
    return v / mpq_class(pow2);
}
}  // namespace detail_expansion

inline GaussianMoment gaussian_moment(long m) {
    if (m < 0 || m > 16 || m % 2 != 0)
        throw std::invalid_argument("gaussian_moment: m must be even in [0, 16]");
    return GaussianMoment{detail_expansion::gauss_moment_any(m), true};
}

// ---------------------------------------------------------------------------
// integrand layers: coefficient of lambda^-L x^M in
//   cot_even(x/lambda) * (sqrt_trunc(x/lambda) - 1/(2 lambda^2))
//                      * (1 + Y + Y^2/2 + Y^3/6 + Y^4/24),
// where Y = y_n(x/lambda) = sum_{m=2..11} 2 binom(1/2,m)(-1)^m x^(2m) lambda^(2-2m).
// ---------------------------------------------------------------------------

struct PolynomialLayer {
    int lambda_neg_pow = 0;                  // the layer multiplies lambda^(-this)
    std::vector<AlgebraicConstant> x_coeffs;  // index = power of x (odd entries zero)
};

namespace detail_expansion {

// dense bivariate polynomial indexed by (lambda^-L, x^M), even L and M only
struct LambdaXPoly {
    // grid[L/2][M/2]
    std::vector<std::vector<AlgebraicConstant>> grid;

    AlgebraicConstant get(int L, int M) const {
        std::size_t i = static_cast<std::size_t>(L / 2), j = static_cast<std::size_t>(M / 2);
        if (i >= grid.size() || j >= grid[i].size()) return AlgebraicConstant::zero();
        return grid[i][j];
    }
    void add(int L, int M, const AlgebraicConstant& c) {
        if (c.is_zero()) return;
        std::size_t i = static_cast<std::size_t>(L / 2), j = static_cast<std::size_t>(M / 2);
        if (grid.size() <= i) grid.resize(i + 1);
        if (grid[i].size() <= j) grid[i].resize(j + 1);
        grid[i][j] = grid[i][j] + c;
    }
    LambdaXPoly mul(const LambdaXPoly& o) const {
        LambdaXPoly r;
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = 0; j < grid[i].size(); ++j) {
                if (grid[i][j].is_zero()) continue;
                for (std::size_t a = 0; a < o.grid.size(); ++a)
                    for (std::size_t b = 0; b < o.grid[a].size(); ++b) {
                        if (o.grid[a][b].is_zero()) continue;
                        r.add(static_cast<int>(2 * (i + a)), static_cast<int>(2 * (j + b)),
                              grid[i][j] * o.grid[a][b]);
                    }
            }
        return r;
    }
    LambdaXPoly mul_mpq(const mpq_class& c) const {
        LambdaXPoly r = *this;
        for (auto& row : r.grid)
            for (auto& cell : row) cell = cell.mul_mpq(c);
        return r;
    }
    LambdaXPoly add_poly(const LambdaXPoly& o) const {
        LambdaXPoly r = *this;
        for (std::size_t a = 0; a < o.grid.size(); ++a)
            for (std::size_t b = 0; b < o.grid[a].size(); ++b)
                if (!o.grid[a][b].is_zero())
                    r.add(static_cast<int>(2 * a), static_cast<int>(2 * b), o.grid[a][b]);
        return r;
    }
    int max_lambda_pow() const { return static_cast<int>(2 * (grid.empty() ? 0 : grid.size() - 1)); }
};

}  // namespace detail_expansion

// even-part Taylor coefficients of cot((pi/2)(x/sqrt6 + 1/2)) through x^8;
// these are the x^0..x^8 secant-series coefficients at z = pi x / sqrt6
inline std::array<AlgebraicConstant, 5> cot_even_coefficients() {
    using AC = AlgebraicConstant;
    return {AC::one(),
            AC::monomial(mpq_class(1, 12), 2, 0),
            AC::monomial(mpq_class(5, 864), 4, 0),
            AC::monomial(mpq_class(61, 155520), 6, 0),
            AC::monomial(mpq_class(277, 10450944), 8, 0)};
}

// Taylor coefficients of sqrt(1-x^2) through x^8
inline std::array<mpq_class, 5> sqrt_trunc_coefficients() {
    return {mpq_class(1), mpq_class(-1, 2), mpq_class(-1, 8), mpq_class(-1, 16),
            mpq_class(-5, 128)};
}

struct IntegrandLayers {
    std::vector<PolynomialLayer> main;  // lambda^0, -2, -4, -6, -8
    std::vector<PolynomialLayer> tail;  // lambda^-10 and beyond (the E_n part)
};

inline IntegrandLayers build_integrand_layers() {
    using detail_expansion::LambdaXPoly;
    LambdaXPoly cotp;
    {
        auto cc = cot_even_coefficients();
        for (int j = 0; j <= 4; ++j) cotp.add(2 * j, 2 * j, cc[static_cast<std::size_t>(j)]);
    }
    LambdaXPoly sqrtp;
    {
        auto sc = sqrt_trunc_coefficients();
        for (int j = 0; j <= 4; ++j)
            sqrtp.add(2 * j, 2 * j, AlgebraicConstant::from_mpq(sc[static_cast<std::size_t>(j)]));
        // the -3 sqrt2/(pi sqrt(24n+1)) term equals exactly -1/(2 lambda^2)
        sqrtp.add(2, 0, AlgebraicConstant::from_mpq(mpq_class(-1, 2)));
    }
    LambdaXPoly y;
    for (unsigned m = 2; m <= 11; ++m) {
        // 2 * binom(1/2,m) * (-1)^m * x^(2m) * lambda^(2m-2)
        mpq_class c = binom_mpq(mpq_class(1, 2), m) * 2;
        if (m % 2 != 0) c = -c;
        y.add(static_cast<int>(2 * m - 2), static_cast<int>(2 * m),
              AlgebraicConstant::from_mpq(c));
    }
    LambdaXPoly expp;
    expp.add(0, 0, AlgebraicConstant::one());
    LambdaXPoly ypow = y;
    mpq_class fact = 1;
    for (int j = 1; j <= 4; ++j) {
        fact *= j;
        expp = expp.add_poly(ypow.mul_mpq(mpq_class(1) / fact));
        if (j < 4) ypow = ypow.mul(y);
    }
    LambdaXPoly prod = cotp.mul(sqrtp).mul(expp);

    IntegrandLayers out;
    for (int L = 0; L <= prod.max_lambda_pow(); L += 2) {
        PolynomialLayer layer;
        layer.lambda_neg_pow = L;
        bool nonzero = false;
        std::size_t i = static_cast<std::size_t>(L / 2);
        if (i < prod.grid.size()) {
            layer.x_coeffs.resize(2 * prod.grid[i].size(), AlgebraicConstant::zero());
            for (std::size_t j = 0; j < prod.grid[i].size(); ++j) {
                layer.x_coeffs[2 * j] = prod.grid[i][j];
                nonzero = nonzero || !prod.grid[i][j].is_zero();
            }
        }
        if (!nonzero) continue;
        if (L <= 8)
            out.main.push_back(std::move(layer));
        else
            out.tail.push_back(std::move(layer));
    }
    return out;
}

// ---------------------------------------------------------------------------
// termwise Gaussian integration of the layers: a series in lambda^-1 whose
// coefficients all carry one structural sqrt(pi) factor
// ---------------------------------------------------------------------------

struct LambdaSeries {
    std::map<int, AlgebraicConstant> coeff;  // lambda^(-key), key even >= 0
    bool sqrt_pi = true;
};

inline LambdaSeries integrate_layers(const std::vector<PolynomialLayer>& layers) {
    LambdaSeries s;
    for (const auto& layer : layers) {
        AlgebraicConstant acc;
        for (std::size_t m = 0; m < layer.x_coeffs.size(); m += 2) {
            if (layer.x_coeffs[m].is_zero()) continue;
            acc = acc + layer.x_coeffs[m].mul_mpq(
                            detail_expansion::gauss_moment_any(static_cast<long>(m)));
        }
        if (!acc.is_zero()) s.coeff[layer.lambda_neg_pow] = acc;
    }
    return s;
}

// reference closed forms for the integrated layer coefficients
// (numerators in pi^2..pi^8 over the common denominator 127401984)
inline std::map<int, AlgebraicConstant> reference_integral_coefficients() {
    using AC = AlgebraicConstant;
    const mpq_class d(127401984);
    std::map<int, AlgebraicConstant> m;
    m[0] = AC::one();
    m[2] = AC::monomial(mpq_class(5308416) / d, 2, 0) +
           AC::from_mpq(mpq_class(-119439360) / d);
    m[4] = AC::monomial(mpq_class(552960) / d, 4, 0) +
           AC::monomial(mpq_class(-11612160) / d, 2, 0) + AC::from_mpq(mpq_class(26127360) / d);
    m[6] = AC::monomial(mpq_class(93696) / d, 6, 0) +
           AC::monomial(mpq_class(-2177280) / d, 4, 0) +
           AC::monomial(mpq_class(9797760) / d, 2, 0) + AC::from_mpq(mpq_class(4898880) / d);
    m[8] = AC::monomial(mpq_class(22160) / d, 8, 0) +
           AC::monomial(mpq_class(-579744) / d, 6, 0) +
           AC::monomial(mpq_class(3742200) / d, 4, 0) +
           AC::monomial(mpq_class(-2245320) / d, 2, 0) + AC::from_mpq(mpq_class(2525985) / d);
    return m;
}

// ---------------------------------------------------------------------------
// truncated asymptotic series in s = n^(-1/2)
// ---------------------------------------------------------------------------

struct Remainder {
    std::optional<mpq_class> bound;  // nullopt = "unverified"
    int order = 0;                   // O_{<= bound}(s^order)
};

struct TruncatedSeries {
    std::vector<AlgebraicConstant> c;  // s^0 .. s^K
    bool sqrt_pi = false;
    Remainder rem;

    int order() const { return static_cast<int>(c.size()) - 1; }
    const AlgebraicConstant& at(int k) const {
        static const AlgebraicConstant z;
        return (k >= 0 && k <= order()) ? c[static_cast<std::size_t>(k)] : z;
    }
    static TruncatedSeries zero_to(int K) {
        TruncatedSeries t;
        t.c.assign(static_cast<std::size_t>(K) + 1, AlgebraicConstant::zero());
        t.rem.order = K + 1;
        return t;
    }
};

inline TruncatedSeries ts_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.sqrt_pi != b.sqrt_pi)
        throw std::invalid_argument("ts_add: mismatched sqrt(pi) markers");
    int K = std::min(a.order(), b.order());
    TruncatedSeries r = TruncatedSeries::zero_to(K);
    for (int k = 0; k <= K; ++k) r.c[static_cast<std::size_t>(k)] = a.at(k) + b.at(k);
    r.sqrt_pi = a.sqrt_pi;
    r.rem.order = std::min(a.rem.order, b.rem.order);
    return r;
}

inline TruncatedSeries ts_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    int K = std::min(a.order(), b.order());
    TruncatedSeries r = TruncatedSeries::zero_to(K);
    for (int i = 0; i <= K; ++i) {
        if (a.at(i).is_zero()) continue;
        for (int j = 0; i + j <= K; ++j) {
            if (b.at(j).is_zero()) continue;
            r.c[static_cast<std::size_t>(i + j)] =
                r.c[static_cast<std::size_t>(i + j)] + a.at(i) * b.at(j);
        }
    }
    // sqrt(pi)*sqrt(pi) = pi
    if (a.sqrt_pi && b.sqrt_pi) {
        for (auto& cc : r.c) cc = cc * AlgebraicConstant::monomial(1, 1, 0);
        r.sqrt_pi = false;
    } else {
        r.sqrt_pi = a.sqrt_pi || b.sqrt_pi;
    }
    r.rem.order = std::min({a.rem.order, b.rem.order, K + 1});
    return r;
}

inline TruncatedSeries ts_scale(const TruncatedSeries& a, const AlgebraicConstant& k) {
    TruncatedSeries r = a;
    for (auto& cc : r.c) cc = cc * k;
    return r;
}

// compose a with sigma, where sigma has zero constant term
inline TruncatedSeries ts_compose(const TruncatedSeries& a, const TruncatedSeries& sigma) {
    if (!sigma.at(0).is_zero())
        throw std::invalid_argument("ts_compose: inner series must have zero constant term");
    int K = std::min(a.order(), sigma.order());
    TruncatedSeries r = TruncatedSeries::zero_to(K);
    r.sqrt_pi = a.sqrt_pi;
    for (int k = a.order() <= K ? a.order() : K; k >= 0; --k) {
        r = ts_mul(r, sigma);
        TruncatedSeries add1 = TruncatedSeries::zero_to(K);
        add1.c[0] = a.at(k);
        r.sqrt_pi = false;  // markers handled by caller; composition is plain here
        r = ts_add(r, add1);
    }
    r.sqrt_pi = a.sqrt_pi;
    r.rem.order = K + 1;
    return r;
}

// (1 + ratio*s^stride)^alpha truncated at order K
inline TruncatedSeries ts_binomial(const mpq_class& alpha, const mpq_class& ratio, int stride,
                                   int K) {
    TruncatedSeries r = TruncatedSeries::zero_to(K);
    mpq_class rk = 1;
    for (int k = 0; k * stride <= K; ++k) {
        r.c[static_cast<std::size_t>(k * stride)] =
            AlgebraicConstant::from_mpq(binom_mpq(alpha, static_cast<unsigned>(k)) * rk);
        rk *= ratio;
    }
    return r;
}

// exp of a series with zero constant term, truncated at the series' order
inline TruncatedSeries ts_exp(const TruncatedSeries& x) {
    if (!x.at(0).is_zero()) throw std::invalid_argument("ts_exp: inner series must have zero constant term");
    int K = x.order();
    TruncatedSeries r = TruncatedSeries::zero_to(K);
    r.c[0] = AlgebraicConstant::one();
    TruncatedSeries pow = r;  // x^0
    mpq_class fact = 1;
    for (int j = 1; j <= K; ++j) {
        pow = ts_mul(pow, x);
        fact *= j;
        TruncatedSeries term = ts_scale(pow, AlgebraicConstant::from_mpq(mpq_class(1) / fact));
        r = ts_add(r, term);
    }
    return r;
}

// ---------------------------------------------------------------------------
// prefactor expansions around n -> infinity
// ---------------------------------------------------------------------------

inline constexpr int kSeriesOrder = 5;  // coefficients through s^4 = n^-2, O(s^5) remainder

struct PrefactorExpansions {
    // e^{(pi/(3 sqrt2)) sqrt(24n+1)} = e^{2 pi sqrt(n/3)} * exp_correction(s)
    TruncatedSeries exp_correction;
    // 1/((24n+1) lambda_n) = n^{-5/4}/(8*3^(3/4)*sqrt(pi)) * norm_correction(s)
    TruncatedSeries norm_correction;
    // lambda_n^{-2k} = lambda_neg[k-1](s), k = 1..4
    std::array<TruncatedSeries, 4> lambda_neg;
};

inline PrefactorExpansions prefactor_expansions(int K = kSeriesOrder) {
    PrefactorExpansions out;
    // delta(s) = (2 pi / sqrt3) * sum_{k>=1} binom(1/2,k) 24^-k s^(2k-1)
    TruncatedSeries delta = TruncatedSeries::zero_to(K);
    mpq_class p24 = 1;
    for (int k = 1; 2 * k - 1 <= K; ++k) {
        p24 /= 24;
        mpq_class coef = binom_mpq(mpq_class(1, 2), static_cast<unsigned>(k)) * p24 * 2 / 3;
        delta.c[static_cast<std::size_t>(2 * k - 1)] = AlgebraicConstant::monomial(coef, 1, 2);
    }
    out.exp_correction = ts_exp(delta);
    out.norm_correction = ts_binomial(mpq_class(-5, 4), mpq_class(1, 24), 2, K);
    for (int k = 1; k <= 4; ++k) {
        // lambda^{-2k} = 3^{k/2} pi^{-k} s^k (1 + s^2/24)^{-k/2}
        TruncatedSeries base = ts_binomial(mpq_class(-k, 2), mpq_class(1, 24), 2, K);
        TruncatedSeries shifted = TruncatedSeries::zero_to(K);
        for (int j = 0; j + k <= K; ++j)
            shifted.c[static_cast<std::size_t>(j + k)] =
                base.at(j) * AlgebraicConstant::monomial(1, -k, 2 * k);
        out.lambda_neg[static_cast<std::size_t>(k - 1)] = shifted;
    }
    return out;
}

// ---------------------------------------------------------------------------
// the expansion constants
// ---------------------------------------------------------------------------

struct ExpansionConstants {
    AlgebraicConstant A, B, C, D, E;
    AlgebraicConstant E_reference;   // printed variant with denominator 35831803
    AlgebraicConstant c0;            // pi A^2 / (2 sqrt3)
    AlgebraicConstant c1_reference;  // -5A^2/4 + pi A B/sqrt3 - B^2
    AlgebraicConstant c1_derived;    // pi A B/sqrt3 - 5A^2/4 (independent composition)
    LambdaSeries integrated;         // the lambda^-2k coefficients actually derived
};

// reference closed forms for A..E
inline AlgebraicConstant reference_A() {
    // 1/(8*3^(3/4)) = (1/24) t
    return AlgebraicConstant::monomial(mpq_class(1, 24), 0, 1);
}
inline AlgebraicConstant reference_B() {
    // pi/(144*3^(1/4)) - 5*3^(3/4)/(128 pi)
    return AlgebraicConstant::monomial(mpq_class(1, 432), 1, 3) +
           AlgebraicConstant::monomial(mpq_class(-5, 128), -1, 3);
}
inline AlgebraicConstant reference_C() {
    // 105*3^(1/4)/(4096 pi^2) + 13 pi^2/(6912*3^(3/4)) - 35/(768*3^(3/4))
    return AlgebraicConstant::monomial(mpq_class(105, 4096), -2, 1) +
           AlgebraicConstant::monomial(mpq_class(13, 20736), 2, 1) +
           AlgebraicConstant::monomial(mpq_class(-35, 2304), 0, 1);
}
inline AlgebraicConstant reference_D() {
    // -91 pi/(12288*3^(1/4)) + 105*3^(3/4)/(8192 pi) + 7 pi^3/(23328*3^(1/4))
    //   + 315*3^(3/4)/(65536 pi^3)
    return AlgebraicConstant::monomial(mpq_class(-91, 36864), 1, 3) +
           AlgebraicConstant::monomial(mpq_class(105, 8192), -1, 3) +
           AlgebraicConstant::monomial(mpq_class(7, 69984), 3, 3) +
           AlgebraicConstant::monomial(mpq_class(315, 65536), -3, 3);
}
inline AlgebraicConstant reference_E(bool printed_denominator) {
    // 7441 pi^4/(D*3^(3/4)) - 77 pi^2/(13824*3^(3/4)) + 5005/(131072*3^(3/4))
    //   - 1155*3^(1/4)/(131072 pi^2) + 31185*3^(1/4)/(4194304 pi^4)
    mpq_class d = printed_denominator ? mpq_class(35831803) : mpq_class(35831808);
    return AlgebraicConstant::monomial(mpq_class(7441) / (d * 3), 4, 1) +
           AlgebraicConstant::monomial(mpq_class(-77, 41472), 2, 1) +
           AlgebraicConstant::monomial(mpq_class(5005, 393216), 0, 1) +
           AlgebraicConstant::monomial(mpq_class(-1155, 131072), -2, 1) +
           AlgebraicConstant::monomial(mpq_class(31185, 4194304), -4, 1);
}

inline ExpansionConstants derive_constants() {
    const int K = kSeriesOrder;
    IntegrandLayers layers = build_integrand_layers();
    LambdaSeries L = integrate_layers(layers.main);
    PrefactorExpansions pf = prefactor_expansions(K);

    // substitute the lambda^{-2k} expansions into the integrated series
    TruncatedSeries bracket = TruncatedSeries::zero_to(K);
    for (const auto& [pow, coef] : L.coeff) {
        if (pow == 0) {
            TruncatedSeries c0s = TruncatedSeries::zero_to(K);
            c0s.c[0] = coef;
            bracket = ts_add(bracket, c0s);
        } else {
            bracket = ts_add(bracket, ts_scale(pf.lambda_neg[static_cast<std::size_t>(pow / 2 - 1)], coef));
        }
    }
    bracket.sqrt_pi = true;  // every Gaussian moment carries one sqrt(pi)

    TruncatedSeries total = ts_mul(bracket, pf.exp_correction);
    total = ts_mul(total, pf.norm_correction);
    // normalization: divide by 8*3^(3/4) and cancel the sqrt(pi) marker
    // against the 1/sqrt(pi) of the n^(-5/4) prefactor
    if (!total.sqrt_pi) throw std::logic_error("derive_constants: sqrt(pi) marker lost");
    total.sqrt_pi = false;

    ExpansionConstants out;
    out.integrated = L;
    auto norm = [](const AlgebraicConstant& a) {
        return a.div_monomial(mpq_class(8), 0, 3);
    };
    out.A = norm(total.at(0));
    out.B = norm(total.at(1));
    out.C = norm(total.at(2));
    out.D = norm(total.at(3));
    out.E = norm(total.at(4));
    out.E_reference = reference_E(true);

    // log-concavity delta coefficients
    AlgebraicConstant pi_over_sqrt3 = AlgebraicConstant::monomial(mpq_class(1, 3), 1, 2);
    AlgebraicConstant half_that = AlgebraicConstant::monomial(mpq_class(1, 6), 1, 2);
    out.c0 = out.A * out.A * half_that;                       // pi A^2/(2 sqrt3)
    AlgebraicConstant fiveq = AlgebraicConstant::from_mpq(mpq_class(5, 4));
    out.c1_derived = out.A * out.B * pi_over_sqrt3 - out.A * out.A * fiveq;
    out.c1_reference = out.c1_derived - out.B * out.B;
    return out;
}

// Independent composition of u(n)^2 - u(n-1)u(n+1) from the main-term series:
//   W(s) = T(s)^2 - (1-s^4)^{-5/4} exp(psi(s)) T(s_+) T(s_-),
// with s_± = s (1±s^2)^{-1/2} and psi = (2 pi/sqrt3)(sqrt(n+1)+sqrt(n-1)-2 sqrt n).
// Returns W's coefficients; the delta equals e^{4 pi sqrt(n/3)} n^{-5/2} W(s).
struct DeltaComposition {
    TruncatedSeries W;
    AlgebraicConstant c0;  // coefficient of s^3
    AlgebraicConstant c1;  // coefficient of s^4
};

inline DeltaComposition delta_composition(const ExpansionConstants& k) {
    const int K = 6;
    TruncatedSeries T = TruncatedSeries::zero_to(K);
    T.c[0] = k.A;
    T.c[1] = k.B;
    T.c[2] = k.C;
    T.c[3] = k.D;
    T.c[4] = k.E;

    // s_{\pm} = s * (1 ± s^2)^{-1/2}
    auto shifted_s = [&](int sign) {
        TruncatedSeries g = ts_binomial(mpq_class(-1, 2), mpq_class(sign), 2, K);
        TruncatedSeries s = TruncatedSeries::zero_to(K);
        for (int j = 0; j + 1 <= K; ++j) s.c[static_cast<std::size_t>(j + 1)] = g.at(j);
        return s;
    };
    TruncatedSeries Tp = ts_compose(T, shifted_s(+1));
    TruncatedSeries Tm = ts_compose(T, shifted_s(-1));

    // psi(s) = (2 pi/sqrt3) * 2 * sum_{j>=1} binom(1/2, 2j) s^(4j-1)
    TruncatedSeries psi = TruncatedSeries::zero_to(K);
    for (int j = 1; 4 * j - 1 <= K; ++j) {
        mpq_class c = binom_mpq(mpq_class(1, 2), static_cast<unsigned>(2 * j)) * 4 / 3;
        psi.c[static_cast<std::size_t>(4 * j - 1)] = AlgebraicConstant::monomial(c, 1, 2);
    }
    TruncatedSeries ef = ts_exp(psi);
    TruncatedSeries pw = ts_binomial(mpq_class(-5, 4), mpq_class(-1), 4, K);

    TruncatedSeries rhs = ts_mul(ts_mul(ts_mul(pw, ef), Tp), Tm);
    TruncatedSeries lhs = ts_mul(T, T);
    TruncatedSeries W = ts_add(lhs, ts_scale(rhs, AlgebraicConstant::from_si(-1)));

    DeltaComposition out;
    out.W = W;
    out.c0 = W.at(3);
    out.c1 = W.at(4);
    return out;
}

}  // namespace unimodal
