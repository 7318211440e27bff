#pragma once

// Exact elements of the ring Q[pi, 1/pi, t]/(t^4 - 3), t = 3^(1/4):
// finite maps (i, j) -> rational for monomials pi^i t^j with i in Z and
// 0 <= j <= 3.  Canonical form keeps no zero coefficients; powers t^4 carry
// a factor 3 into the rational part.  This is the coefficient ring for the
// whole saddle-point expansion, so equality tests against closed-form
// constants are exact ring identities, never floating comparisons.

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "unimodal/ball.hpp"

namespace unimodal {

class AlgebraicConstant {
  public:
    using Key = std::pair<long, int>;  // (pi exponent, t exponent in 0..3)

    AlgebraicConstant() = default;

    static AlgebraicConstant from_mpq(const mpq_class& c) { return monomial(c, 0, 0); }
    static AlgebraicConstant from_si(long c) { return monomial(mpq_class(c), 0, 0); }
    static AlgebraicConstant zero() { return AlgebraicConstant(); }
    static AlgebraicConstant one() { return from_si(1); }

    // c * pi^i * t^j, any integer j (reduced mod 4 with factors of 3)
    static AlgebraicConstant monomial(mpq_class c, long pi_exp, long t_exp) {
        AlgebraicConstant a;
        a.add_term(std::move(c), pi_exp, t_exp);
        return a;
    }

    bool is_zero() const { return terms_.empty(); }

    bool operator==(const AlgebraicConstant& o) const { return terms_ == o.terms_; }
    bool operator!=(const AlgebraicConstant& o) const { return !(*this == o); }

    AlgebraicConstant operator+(const AlgebraicConstant& o) const {
        AlgebraicConstant r = *this;
        for (const auto& [k, c] : o.terms_) r.add_term(c, k.first, k.second);
        return r;
    }
    AlgebraicConstant operator-() const {
        AlgebraicConstant r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }
    AlgebraicConstant operator-(const AlgebraicConstant& o) const { return *this + (-o); }
    AlgebraicConstant operator*(const AlgebraicConstant& o) const {
        AlgebraicConstant r;
        for (const auto& [ka, ca] : terms_)
            for (const auto& [kb, cb] : o.terms_)
                r.add_term(ca * cb, ka.first + kb.first,
                           static_cast<long>(ka.second) + kb.second);
        return r;
    }
    AlgebraicConstant mul_mpq(const mpq_class& c_in) const {
        mpq_class c = c_in;
        c.canonicalize();
        if (c == 0) return zero();
        AlgebraicConstant r = *this;
        for (auto& [k, v] : r.terms_) v *= c;
        return r;
    }
    // division by a single monomial is exact in the ring
    AlgebraicConstant div_monomial(const mpq_class& c_in, long pi_exp, long t_exp) const {
        mpq_class c = c_in;
        c.canonicalize();
        if (c == 0) throw std::invalid_argument("div_monomial: zero coefficient");
        AlgebraicConstant r;
        for (const auto& [k, v] : terms_)
            r.add_term(v / c, k.first - pi_exp, static_cast<long>(k.second) - t_exp);
        return r;
    }

    const std::map<Key, mpq_class>& terms() const { return terms_; }

    // numeric enclosure under pi -> pi, t -> 3^(1/4)
    BallScalar eval(Prec p) const {
        Prec pw = p + 32;
        BallScalar acc = BallScalar::zero(pw);
        BallScalar pi = const_pi(pw);
        BallScalar t = pow_quarters(BallScalar::from_si(3, pw), 1, pw);
        for (const auto& [k, c] : terms_) {
            BallScalar term = BallScalar::from_mpq(c, pw);
            if (k.first != 0) term = mul(term, pow_si(pi, k.first, pw), pw);
            if (k.second != 0) term = mul(term, pow_si(t, k.second, pw), pw);
            acc = add(acc, term, pw);
        }
        return add(acc, BallScalar::zero(p), p);
    }

    // exact strings like "(-5/128)*pi^-1*3^(3/4)"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.get_str() << ")";
            if (k.first != 0) os << "*pi^" << k.first;
            if (k.second != 0) os << "*3^(" << k.second << "/4)";
        }
        return os.str();
    }

  private:
    void add_term(mpq_class c, long pi_exp, long t_exp) {
        c.canonicalize();  // (n, d) constructors do not reduce
        if (c == 0) return;
        long j = t_exp % 4;
        long carry = t_exp / 4;
        if (j < 0) {
            j += 4;
            carry -= 1;
        }
        // t^(4k) = 3^k
        if (carry > 0)
            for (long i = 0; i < carry; ++i) c *= 3;
        else
            for (long i = 0; i < -carry; ++i) c /= 3;
        Key key{pi_exp, static_cast<int>(j)};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<Key, mpq_class> terms_;
};

// eval_algebraic: bridge from symbolic constants to numeric certification
inline BallScalar eval_algebraic(const AlgebraicConstant& c, Prec precision) {
    return c.eval(precision);
}

}  // namespace unimodal
