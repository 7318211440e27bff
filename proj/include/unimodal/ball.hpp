#pragma once

// Real ball arithmetic: arbitrary-precision midpoint (MPFR) plus a rigorous
// 32-bit upward-rounded error radius.  Every operation returns a ball that
// contains the exact result whenever the input balls contain theirs
// (inclusion monotonicity).  Quantities of magnitude e^(2*pi*sqrt(n/3)),
// i.e. ~10^498 around n = 1e5, are routine; exponents are MPFR-native.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace unimodal {

using Prec = mpfr_prec_t;
inline constexpr Prec kDefaultPrec = 512;   // raisable per call site
inline constexpr Prec kRadiusPrec = 32;     // radius mantissa, rounded up
inline constexpr Prec kBoundPrec = 96;      // scratch precision for bounds

struct BallDomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct BallOverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

namespace detail {
inline void check_regular(const mpfr_t x, const char* what) {
    if (!mpfr_number_p(x))
        throw BallOverflowError(std::string("non-finite value in ") + what);
}
}  // namespace detail

class BallScalar {
  public:
    BallScalar() { init(kDefaultPrec); }
    explicit BallScalar(Prec p) { init(p); }

    BallScalar(const BallScalar& o) {
        init(mpfr_get_prec(o.mid_));
        mpfr_set(mid_, o.mid_, MPFR_RNDN);
        mpfr_set(rad_, o.rad_, MPFR_RNDU);
    }
    BallScalar(BallScalar&& o) noexcept {
        mpfr_init2(mid_, 2);
        mpfr_init2(rad_, kRadiusPrec);
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
    }
    BallScalar& operator=(const BallScalar& o) {
        if (this != &o) {
            mpfr_set_prec(mid_, mpfr_get_prec(o.mid_));
            mpfr_set(mid_, o.mid_, MPFR_RNDN);
            mpfr_set(rad_, o.rad_, MPFR_RNDU);
        }
        return *this;
    }
    BallScalar& operator=(BallScalar&& o) noexcept {
        mpfr_swap(mid_, o.mid_);
        mpfr_swap(rad_, o.rad_);
        return *this;
    }
    ~BallScalar() {
        mpfr_clear(mid_);
        mpfr_clear(rad_);
    }

    // --- exact constructors -------------------------------------------------
    static BallScalar zero(Prec p = kDefaultPrec) { return BallScalar(p); }
    static BallScalar one(Prec p = kDefaultPrec) { return from_si(1, p); }
    static BallScalar from_si(long v, Prec p = kDefaultPrec) {
        BallScalar b(p);
        int t = mpfr_set_si(b.mid_, v, MPFR_RNDN);
        b.bump_half_ulp_if(t, p);
        return b;
    }
    static BallScalar from_mpz(const mpz_class& v, Prec p = kDefaultPrec) {
        BallScalar b(p);
        int t = mpfr_set_z(b.mid_, v.get_mpz_t(), MPFR_RNDN);
        b.bump_half_ulp_if(t, p);
        return b;
    }
    static BallScalar from_mpq(const mpq_class& v, Prec p = kDefaultPrec) {
        BallScalar b(p);
        int t = mpfr_set_q(b.mid_, v.get_mpq_t(), MPFR_RNDN);
        b.bump_half_ulp_if(t, p);
        return b;
    }
    static BallScalar from_double(double v, Prec p = kDefaultPrec) {
        BallScalar b(p);
        mpfr_set_d(b.mid_, v, MPFR_RNDN);  // doubles are exact in p >= 53
        detail::check_regular(b.mid_, "from_double");
        return b;
    }
    // Ball covering the interval [lo, hi] (mpfr endpoints).
    static BallScalar from_interval(const mpfr_t lo, const mpfr_t hi, Prec p) {
        BallScalar b(p);
        mpfr_t half;
        mpfr_init2(half, p + 8);
        mpfr_add(half, lo, hi, MPFR_RNDN);
        mpfr_div_2si(half, half, 1, MPFR_RNDN);
        mpfr_set(b.mid_, half, MPFR_RNDN);
        // rad >= max(hi - mid, mid - lo), rounded up
        mpfr_t d1;
        mpfr_init2(d1, kBoundPrec);
        mpfr_sub(d1, hi, b.mid_, MPFR_RNDU);
        mpfr_set(b.rad_, d1, MPFR_RNDU);
        mpfr_sub(d1, b.mid_, lo, MPFR_RNDU);
        if (mpfr_cmp(d1, b.rad_) > 0) mpfr_set(b.rad_, d1, MPFR_RNDU);
        if (mpfr_sgn(b.rad_) < 0) mpfr_set_ui(b.rad_, 0, MPFR_RNDU);
        mpfr_clear(d1);
        mpfr_clear(half);
        return b;
    }

    const mpfr_t& mid() const { return mid_; }
    const mpfr_t& rad() const { return rad_; }
    Prec precision() const { return mpfr_get_prec(mid_); }
    bool is_exact() const { return mpfr_zero_p(rad_); }

    // midpoint +/- radius with directed rounding (out must be initialized)
    void upper(mpfr_t out) const { mpfr_add(out, mid_, rad_, MPFR_RNDU); }
    void lower(mpfr_t out) const { mpfr_sub(out, mid_, rad_, MPFR_RNDD); }
    void upper_abs(mpfr_t out) const {
        mpfr_abs(out, mid_, MPFR_RNDU);
        mpfr_add(out, out, rad_, MPFR_RNDU);
    }
    // max(0, |mid| - rad), rounded down
    void lower_abs(mpfr_t out) const {
        mpfr_abs(out, mid_, MPFR_RNDD);
        mpfr_sub(out, out, rad_, MPFR_RNDD);
        if (mpfr_sgn(out) < 0) mpfr_set_ui(out, 0, MPFR_RNDD);
    }

    bool contains_zero() const {
        mpfr_t t;
        mpfr_init2(t, kBoundPrec);
        lower_abs(t);
        bool excl = mpfr_sgn(t) > 0;
        mpfr_clear(t);
        return !excl;
    }
    // -1, +1 when the sign is decided; 0 when the ball straddles zero.
    int definite_sign() const {
        if (contains_zero()) return 0;
        return mpfr_sgn(mid_);
    }

    double rad_double_upper() const { return mpfr_get_d(rad_, MPFR_RNDU); }

    std::string str(int sig_digits = 40) const;

    // internal: add t to the radius (t >= 0, any mpfr)
    void rad_accum(const mpfr_t t) { mpfr_add(rad_, rad_, t, MPFR_RNDU); }
    mpfr_ptr mid_mut() { return mid_; }
    mpfr_ptr rad_mut() { return rad_; }

    void bump_half_ulp_if(int ternary, Prec p) {
        if (ternary == 0) return;
        if (mpfr_zero_p(mid_)) {
            // rounded to zero with inexact flag: cannot bound the error by a
            // ulp of the result; treat as range breakdown
            throw BallOverflowError("underflow to zero in ball midpoint");
        }
        detail::check_regular(mid_, "ball midpoint");
        mpfr_t u;
        mpfr_init2(u, kRadiusPrec);
        mpfr_set_ui_2exp(u, 1, mpfr_get_exp(mid_) - p - 1, MPFR_RNDU);
        mpfr_add(rad_, rad_, u, MPFR_RNDU);
        mpfr_clear(u);
    }

  private:
    void init(Prec p) {
        if (p < MPFR_PREC_MIN) p = MPFR_PREC_MIN;
        mpfr_init2(mid_, p);
        mpfr_init2(rad_, kRadiusPrec);
        mpfr_set_ui(mid_, 0, MPFR_RNDN);
        mpfr_set_ui(rad_, 0, MPFR_RNDU);
    }
    mpfr_t mid_;
    mpfr_t rad_;
};

namespace detail {

// RAII scratch mpfr value
struct Scratch {
    mpfr_t v;
    explicit Scratch(Prec p) { mpfr_init2(v, p); }
    ~Scratch() { mpfr_clear(v); }
    Scratch(const Scratch&) = delete;
    Scratch& operator=(const Scratch&) = delete;
    operator mpfr_ptr() { return v; }
    operator mpfr_srcptr() const { return v; }
};

// out = |x| * (1 + 2^-60), rounded up: an upper bound for the exact value a
// rounded midpoint represents, at any working precision >= 61 bits
inline void abs_upper_with_margin(mpfr_ptr out, mpfr_srcptr x) {
    mpfr_abs(out, x, MPFR_RNDU);
    mpfr_t t;
    mpfr_init2(t, 8);
    mpfr_mul_2si(t, out, -60, MPFR_RNDU);
    mpfr_add(out, out, t, MPFR_RNDU);
    mpfr_clear(t);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

inline BallScalar add(const BallScalar& a, const BallScalar& b, Prec p = kDefaultPrec) {
    BallScalar r(p);
    int t = mpfr_add(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    mpfr_add(r.rad_mut(), a.rad(), b.rad(), MPFR_RNDU);
    r.bump_half_ulp_if(t, p);
    detail::check_regular(r.mid(), "add");
    return r;
}

inline BallScalar sub(const BallScalar& a, const BallScalar& b, Prec p = kDefaultPrec) {
    BallScalar r(p);
    int t = mpfr_sub(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    mpfr_add(r.rad_mut(), a.rad(), b.rad(), MPFR_RNDU);
    r.bump_half_ulp_if(t, p);
    detail::check_regular(r.mid(), "sub");
    return r;
}

inline BallScalar neg(const BallScalar& a, Prec p = kDefaultPrec) {
    BallScalar r(p);
    int t = mpfr_neg(r.mid_mut(), a.mid(), MPFR_RNDN);
    mpfr_set(r.rad_mut(), a.rad(), MPFR_RNDU);
    r.bump_half_ulp_if(t, p);
    return r;
}

inline BallScalar mul(const BallScalar& a, const BallScalar& b, Prec p = kDefaultPrec) {
    BallScalar r(p);
    int t = mpfr_mul(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    // rad = |a|*rb + |b|*ra + ra*rb, rounded up
    detail::Scratch am(kBoundPrec), bm(kBoundPrec), acc(kBoundPrec), term(kBoundPrec);
    mpfr_abs(am, a.mid(), MPFR_RNDU);
    mpfr_abs(bm, b.mid(), MPFR_RNDU);
    mpfr_mul(acc, am, b.rad(), MPFR_RNDU);
    mpfr_mul(term, bm, a.rad(), MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
    mpfr_mul(term, a.rad(), b.rad(), MPFR_RNDU);
    mpfr_add(acc, acc, term, MPFR_RNDU);
    r.rad_accum(acc);
    r.bump_half_ulp_if(t, p);
    detail::check_regular(r.mid(), "mul");
    return r;
}

inline BallScalar mul_si(const BallScalar& a, long k, Prec p = kDefaultPrec) {
    BallScalar r(p);
    int t = mpfr_mul_si(r.mid_mut(), a.mid(), k, MPFR_RNDN);
    detail::Scratch acc(kBoundPrec);
    unsigned long ka = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1ul
                             : static_cast<unsigned long>(k);
    mpfr_mul_ui(acc, a.rad(), ka, MPFR_RNDU);
    r.rad_accum(acc);
    r.bump_half_ulp_if(t, p);
    return r;
}

inline BallScalar div(const BallScalar& a, const BallScalar& b, Prec p = kDefaultPrec) {
    detail::Scratch blo(kBoundPrec);
    b.lower_abs(blo);
    if (mpfr_sgn(blo.v) <= 0)
        throw BallDomainError("division by a ball containing zero");
    BallScalar r(p);
    int t = mpfr_div(r.mid_mut(), a.mid(), b.mid(), MPFR_RNDN);
    // |x/y - am/bm| <= (ra + |q|*rb) / (|bm| - rb), with |q| an upper bound
    detail::Scratch q(kBoundPrec), num(kBoundPrec), den(kBoundPrec);
    detail::abs_upper_with_margin(q, r.mid());
    mpfr_mul(num, q, b.rad(), MPFR_RNDU);
    mpfr_add(num, num, a.rad(), MPFR_RNDU);
    mpfr_abs(den, b.mid(), MPFR_RNDD);
    mpfr_sub(den, den, b.rad(), MPFR_RNDD);
    if (mpfr_sgn(den.v) <= 0)
        throw BallDomainError("division by a ball containing zero");
    mpfr_div(num, num, den, MPFR_RNDU);
    r.rad_accum(num);
    r.bump_half_ulp_if(t, p);
    detail::check_regular(r.mid(), "div");
    return r;
}

inline BallScalar abs_val(const BallScalar& a, Prec p = kDefaultPrec) {
    if (!a.contains_zero()) {
        BallScalar r(p);
        int t = mpfr_abs(r.mid_mut(), a.mid(), MPFR_RNDN);
        mpfr_set(r.rad_mut(), a.rad(), MPFR_RNDU);
        r.bump_half_ulp_if(t, p);
        return r;
    }
    // straddles zero: |x| lies in [0, |mid|+rad]
    detail::Scratch hi(kBoundPrec), lo(kBoundPrec);
    a.upper_abs(hi);
    mpfr_set_ui(lo, 0, MPFR_RNDD);
    return BallScalar::from_interval(lo, hi, p);
}

inline BallScalar div_si(const BallScalar& a, long k, Prec p = kDefaultPrec) {
    if (k == 0) throw BallDomainError("division by zero integer");
    BallScalar r(p);
    int t = mpfr_div_si(r.mid_mut(), a.mid(), k, MPFR_RNDN);
    detail::Scratch acc(kBoundPrec);
    unsigned long ka = k < 0 ? static_cast<unsigned long>(-(k + 1)) + 1ul
                             : static_cast<unsigned long>(k);
    mpfr_div_ui(acc, a.rad(), ka, MPFR_RNDU);
    r.rad_accum(acc);
    r.bump_half_ulp_if(t, p);
    return r;
}

// ---------------------------------------------------------------------------
// elementary functions
// ---------------------------------------------------------------------------

inline BallScalar b_sqrt(const BallScalar& a, Prec p = kDefaultPrec) {
    detail::Scratch lo(kBoundPrec);
    a.lower(lo);
    if (mpfr_sgn(lo.v) <= 0) {
        if (mpfr_zero_p(a.mid()) && a.is_exact()) return BallScalar::zero(p);
        throw BallDomainError("sqrt requires a strictly positive ball");
    }
    BallScalar r(p);
    int t = mpfr_sqrt(r.mid_mut(), a.mid(), MPFR_RNDN);
    // |sqrt(x) - sqrt(m)| <= ra / (2*sqrt(lo))
    detail::Scratch s(kBoundPrec);
    mpfr_sqrt(s, lo, MPFR_RNDD);
    mpfr_mul_2si(s, s, 1, MPFR_RNDD);
    detail::Scratch e(kBoundPrec);
    mpfr_div(e, a.rad(), s, MPFR_RNDU);
    r.rad_accum(e);
    r.bump_half_ulp_if(t, p);
    return r;
}

inline BallScalar b_exp(const BallScalar& a, Prec p = kDefaultPrec) {
    BallScalar r(p);
    int t = mpfr_exp(r.mid_mut(), a.mid(), MPFR_RNDN);
    detail::check_regular(r.mid(), "exp");
    if (!a.is_exact()) {
        // |e^x - e^m| <= e^m * (e^ra - 1) <= ub(e^m) * expm1_up(ra)
        double rd = mpfr_get_d(a.rad(), MPFR_RNDU);
        detail::Scratch f(kBoundPrec);
        if (rd <= 0.5) {
            mpfr_mul_2si(f, a.rad(), 1, MPFR_RNDU);  // e^r - 1 <= 2r for r <= 0.5
        } else if (rd <= 700.0) {
            mpfr_expm1(f, a.rad(), MPFR_RNDU);
        } else {
            throw BallOverflowError("exp: radius too large to propagate");
        }
        detail::Scratch m(kBoundPrec), e(kBoundPrec);
        detail::abs_upper_with_margin(m, r.mid());
        mpfr_mul(e, m, f, MPFR_RNDU);
        r.rad_accum(e);
    }
    r.bump_half_ulp_if(t, p);
    return r;
}

inline BallScalar b_log(const BallScalar& a, Prec p = kDefaultPrec) {
    detail::Scratch lo(kBoundPrec);
    a.lower(lo);
    if (mpfr_sgn(lo.v) <= 0)
        throw BallDomainError("log requires a strictly positive ball");
    BallScalar r(p);
    int t = mpfr_log(r.mid_mut(), a.mid(), MPFR_RNDN);
    // |log x - log m| <= ra / lo
    detail::Scratch e(kBoundPrec);
    mpfr_div(e, a.rad(), lo, MPFR_RNDU);
    r.rad_accum(e);
    r.bump_half_ulp_if(t, p);
    return r;
}

inline BallScalar b_sin(const BallScalar& a, Prec p = kDefaultPrec) {
    BallScalar r(p);
    int t = mpfr_sin(r.mid_mut(), a.mid(), MPFR_RNDN);
    r.rad_accum(a.rad());  // Lipschitz constant 1
    r.bump_half_ulp_if(t, p);
    return r;
}

inline BallScalar b_cos(const BallScalar& a, Prec p = kDefaultPrec) {
    BallScalar r(p);
    int t = mpfr_cos(r.mid_mut(), a.mid(), MPFR_RNDN);
    r.rad_accum(a.rad());
    r.bump_half_ulp_if(t, p);
    return r;
}

// cot = cos/sin with ball division; the sin ball must exclude 0.
inline BallScalar b_cot(const BallScalar& a, Prec p = kDefaultPrec) {
    BallScalar s = b_sin(a, p + 8);
    if (s.contains_zero())
        throw BallDomainError("cot: argument ball does not exclude a multiple of pi");
    return div(b_cos(a, p + 8), s, p);
}

inline BallScalar b_erf(const BallScalar& a, Prec p = kDefaultPrec) {
    BallScalar r(p);
    int t = mpfr_erf(r.mid_mut(), a.mid(), MPFR_RNDN);
    // |erf'| <= 2/sqrt(pi) < 1.13
    detail::Scratch e(kBoundPrec);
    mpfr_mul_d(e, a.rad(), 1.13, MPFR_RNDU);
    r.rad_accum(e);
    r.bump_half_ulp_if(t, p);
    return r;
}

inline BallScalar const_pi(Prec p = kDefaultPrec) {
    BallScalar r(p);
    mpfr_const_pi(r.mid_mut(), MPFR_RNDN);
    r.bump_half_ulp_if(1, p);
    return r;
}

// integer power by binary exponentiation (tighter than exp(y log x))
inline BallScalar pow_si(const BallScalar& a, long e, Prec p = kDefaultPrec) {
    if (e == 0) return BallScalar::one(p);
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul
                          : static_cast<unsigned long>(e);
    Prec pw = p + 16;
    BallScalar acc = BallScalar::one(pw);
    BallScalar base = a;
    while (n) {
        if (n & 1) acc = mul(acc, base, pw);
        n >>= 1;
        if (n) base = mul(base, base, pw);
    }
    if (inv) return div(BallScalar::one(pw), acc, p);
    return add(acc, BallScalar::zero(p), p);  // round to target precision
}

// x^y = exp(y*log x) for x > 0
inline BallScalar b_pow(const BallScalar& x, const BallScalar& y, Prec p = kDefaultPrec) {
    Prec pw = p + 16;
    return b_exp(mul(y, b_log(x, pw), pw), p);
}

// x^(k/4) for integer k via sqrt chains (x > 0); used for n^(1/4), 3^(3/4), ...
inline BallScalar pow_quarters(const BallScalar& x, long quarters, Prec p = kDefaultPrec) {
    Prec pw = p + 16;
    long ip = quarters / 4;
    long fr = quarters % 4;
    if (fr < 0) { fr += 4; ip -= 1; }
    BallScalar r = pow_si(x, ip, pw);
    if (fr != 0) {
        BallScalar q = b_sqrt(b_sqrt(x, pw), pw);        // x^(1/4)
        r = mul(r, pow_si(q, fr, pw), pw);
    }
    return add(r, BallScalar::zero(p), p);
}

// ---------------------------------------------------------------------------
// comparisons and containment
// ---------------------------------------------------------------------------

inline bool definitely_le(const BallScalar& a, const BallScalar& b) {
    detail::Scratch ah(kBoundPrec), bl(kBoundPrec);
    a.upper(ah);
    b.lower(bl);
    return mpfr_cmp(ah, bl) <= 0;
}
inline bool definitely_lt(const BallScalar& a, const BallScalar& b) {
    detail::Scratch ah(kBoundPrec), bl(kBoundPrec);
    a.upper(ah);
    b.lower(bl);
    return mpfr_cmp(ah, bl) < 0;
}
inline bool definitely_positive(const BallScalar& a) {
    detail::Scratch lo(kBoundPrec);
    a.lower(lo);
    return mpfr_sgn(lo.v) > 0;
}
inline bool definitely_negative(const BallScalar& a) {
    detail::Scratch hi(kBoundPrec);
    a.upper(hi);
    return mpfr_sgn(hi.v) < 0;
}

// Do the two balls overlap (necessary condition for representing one value)?
inline bool consistent(const BallScalar& a, const BallScalar& b) {
    detail::Scratch d(kBoundPrec), rr(kBoundPrec);
    mpfr_sub(d, a.mid(), b.mid(), MPFR_RNDA);
    mpfr_abs(d, d, MPFR_RNDU);
    mpfr_add(rr, a.rad(), b.rad(), MPFR_RNDU);
    return mpfr_cmp(d, rr) <= 0;
}

// Does the ball contain the exact rational q?  Decided exactly: both the
// midpoint and the radius are dyadic rationals.
inline bool contains_mpq(const BallScalar& a, const mpq_class& q) {
    mpq_class m, r;
    mpfr_get_q(m.get_mpq_t(), a.mid());
    mpfr_get_q(r.get_mpq_t(), a.rad());
    mpq_class d = m - q;
    if (d < 0) d = -d;
    return d <= r;
}
inline bool contains_si(const BallScalar& a, long v) { return contains_mpq(a, mpq_class(v)); }

// |a - b| <= tol with a,b,tol balls: upper(|a-b|) <= lower(tol)
inline bool definitely_within(const BallScalar& a, const BallScalar& b, const BallScalar& tol,
                              Prec p = kDefaultPrec) {
    return definitely_le(abs_val(sub(a, b, p), p), tol);
}

// ---------------------------------------------------------------------------
// rendering
// ---------------------------------------------------------------------------

inline std::string mpfr_sci_string(const mpfr_t x, int sig_digits) {
    if (mpfr_zero_p(x)) return "0";
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", sig_digits - 1, x);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

inline std::string BallScalar::str(int sig_digits) const {
    std::string m = mpfr_sci_string(mid_, sig_digits);
    if (mpfr_zero_p(rad_)) return m;
    return m + " +/- " + mpfr_sci_string(rad_, 3);
}

}  // namespace unimodal
