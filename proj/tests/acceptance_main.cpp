// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Generates the exact tables once (timed, for the performance
// criterion) and drives every headline check at its stated tolerance.

#include <sys/resource.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "unimodal/bessel.hpp"
#include "unimodal/certifier.hpp"
#include "unimodal/expansion.hpp"
#include "unimodal/quadrature.hpp"
#include "unimodal/remainder_checks.hpp"
#include "unimodal/series.hpp"

using namespace unimodal;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

long peak_rss_mb() {
    struct rusage ru;
    getrusage(RUSAGE_SELF, &ru);
    return ru.ru_maxrss / 1024;
}

}  // namespace

int main() {
    const std::int64_t n0 = 100000;
    const unsigned threads = 2;

    // table generation, timed for criterion 9
    double t0 = now_seconds();
    SeriesTables tables = gen_all(n0 + 1);
    double gen_seconds = now_seconds() - t0;
    long rss_mb = peak_rss_mb();

    ExpansionConstants k = derive_constants();

    // --- criterion 1: exact oracle agreement --------------------------------
    {
        bool ok = true;
        for (std::int64_t n = 0; n <= 40 && ok; ++n)
            ok = tables.u.at(n) == u_bruteforce(n);
        auto q = oracles::u_from_qseries(2000);
        for (std::int64_t n = 0; n <= 2000 && ok; ++n) ok = tables.u.at(n) == q[n];
        auto conv = oracles::p2_convolution(2000, tables.p.values);
        for (std::int64_t n = 0; n <= 2000 && ok; ++n) ok = tables.p2.at(n) == conv[n];
        report(1, ok,
               "u(n) equals the enumeration oracle (n<=40) and the q-series oracle (n<=2000); "
               "p2 equals the convolution oracle (n<=2000), exactly");
    }

    // --- criterion 2: log-concavity scan to 50000 ---------------------------
    {
        ScanResult r = logconcavity_scan(tables.u, 1, 50000, threads);
        bool has157 = false, none_ge8 = true;
        int found = 0;
        for (std::int64_t e : r.exceptions) {
            if (e == 1 || e == 5 || e == 7) ++found;
            if (e >= 8) none_ge8 = false;
        }
        has157 = found == 3;
        std::string excs;
        for (std::size_t i = 0; i < r.exceptions.size(); ++i)
            excs += (i ? "," : "") + std::to_string(r.exceptions[i]);
        std::string small;
        for (std::int64_t sn : {2, 3, 4, 6})
            small += " delta(" + std::to_string(sn) + ")=" + r.delta_at(sn).get_str();
        bool mismatch_at_3 = r.delta_at(3) == 0;
        report(2, has157 && none_ge8,
               "exceptions {" + excs + "} contain {1,5,7}, none >= 8;" + small +
                   (mismatch_at_3 ? "; documented discrepancy: delta(3)=0 contradicts the "
                                    "strict reference claim at n=3"
                                  : ""));
    }

    // --- criterion 3: main-term containment at n0 at >= 2048 bits -----------
    {
        ContainmentReport r = check_main_term_containment(tables.u, n0, k, 2048);
        ContainmentReport r1 = check_main_term_containment(tables.u, n0 + 1, k, 2048);
        report(3, r.contained && r1.contained && r.precision >= 2048,
               "|u(n) - main(n)| <= 478 e^{2 pi sqrt(n/3)} n^(-15/4) at n0 and n0+1 at " +
                   std::to_string(r.precision) +
                   " bits; residual/envelope at n0 = " + r.margin_ratio.str(6));
    }

    // --- criterion 4: delta containment at n0 --------------------------------
    {
        DeltaExpansionBounds d = delta_expansion_bounds(tables.u, n0, k, 2048);
        report(4, d.contained,
               "scaled delta " + d.scaled_exact.str(12) + " inside [" + d.lower.str(12) + ", " +
                   d.upper.str(12) + "]");
    }

    // --- criterion 5: symbolic derivation exactness --------------------------
    {
        bool abcd = k.A == reference_A() && k.B == reference_B() && k.C == reference_C() &&
                    k.D == reference_D();
        bool e_derived = k.E == reference_E(false);
        bool e_differs = k.E != k.E_reference;
        LambdaSeries L = integrate_layers(build_integrand_layers().main);
        bool fractions = true;
        for (const auto& [pow, coef] : reference_integral_coefficients())
            fractions = fractions && L.coeff.count(pow) == 1 && L.coeff.at(pow) == coef;
        report(5, abcd && e_derived && e_differs && fractions,
               "A..D and all integrated-layer fractions reproduced exactly; E derived with "
               "denominator 35831808 and differs from the printed 35831803 variant "
               "(documented finding)");
    }

    // --- criterion 6: end-to-end certificate ---------------------------------
    {
        Certificate c = certify_all(tables.u, n0, k, kDefaultPrec, threads);
        BallScalar m = switch_margin(n0, k, 256);
        report(6, c.verdict == Verdict::Verified && definitely_positive(m),
               std::string("certificate ") + verdict_name(c.verdict) + ", exceptions " +
                   *c.find("exception_set") + ", switch margin " + m.str(6) + " > 0");
    }

    // --- criterion 7: quadrature residuals -----------------------------------
    {
        bool ok = true;
        std::string detail;
        for (std::int64_t n : {1000, 2000, 5000, 100000}) {
            K1Evaluation ev = k1_term(n, 0, 0, threads);
            Prec p = ev.precision;
            BallScalar u = BallScalar::from_mpz(tables.u.at(n), p);
            BallScalar resid = abs_val(sub(u, ev.value, p), p);
            BallScalar env = b_exp(mul(const_pi(p),
                                       b_sqrt(div_si(BallScalar::from_si(n, p), 3, p), p), p), p);
            BallScalar tol = n >= n0 ? add(env, mul_si(ev.inter_degree_diff, 4, p), p)
                                     : mul_si(env, 2, p);
            bool here = definitely_le(resid, tol) && ev.converged;
            if (n >= n0) {
                // secondary-term budget (<= 0.1) and outer-region consistency
                here = here &&
                       definitely_le(ev.secondary_bound, BallScalar::from_double(0.1, 64)) &&
                       definitely_le(ev.outer_region_bound, ev.outer_region_ref);
            }
            ok = ok && here;
            if (n == n0)
                detail = "at n0: residual " + resid.str(6) + " vs unit-factor envelope " +
                         env.str(6) + " plus quadrature budget " + ev.inter_degree_diff.str(4) +
                         "; secondary-term bound " + ev.secondary_bound.str(4) + " <= 0.1";
        }
        report(7, ok, "|u(n) - k1(n)| within 2 e^{pi sqrt(n/3)} for n in {1000,2000,5000}; " +
                          detail);
    }

    // --- criterion 8: grid falsification suites --------------------------------------
    {
        auto grid = bessel_grid(mpq_class(1, 1000), mpq_class(50));
        Certificate bessel = check_bessel_bounds(grid, 192, threads);
        Certificate rbound = check_rbound_ingredients({2, 3, 4, 5, 8, 16, 37, 100, 1000}, 40,
                                                      100000, 192);
        RemainderGrid rg;
        auto rem = run_remainder_suite(rg);
        TailBudget tb = tail_budget(n0, 256);
        bool ok = bessel.verdict == Verdict::Verified && rbound.verdict == Verdict::Verified &&
                  tb.exp_component_le_0_9 && tb.total_le_envelope;
        std::string names;
        for (const auto& c : rem) {
            ok = ok && c.verdict == Verdict::Verified;
            if (c.verdict != Verdict::Verified) names += " " + c.statement;
        }
        report(8, ok,
               "zero counterexamples across " + *bessel.find("points_checked") +
                   " Bessel grid points, the cot-sum ingredients, the remainder-constant grids, "
                   "and the tail components" + names);
    }

    // --- criterion 9: performance ---------------------------------------------
    {
        bool ok = gen_seconds <= 600.0 && rss_mb <= 1024;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "u table to 100001 generated in %.1fs (cap 600s), peak RSS %ld MB (cap "
                      "1024 MB)",
                      gen_seconds, rss_mb);
        report(9, ok, buf);
    }

    std::printf("%s: %d failure(s)\n", g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                g_failures);
    return g_failures == 0 ? 0 : 1;
}
