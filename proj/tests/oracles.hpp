#pragma once

// Test-only oracles, kept independent of the recurrence implementations they
// check.  Everything here is a direct transcription of a defining formula:
//  - p(n)  by the parts-bounded dynamic program,
//  - p2(n) by the O(n^2) convolution sum_k p(k) p(n-k),
//  - u(n)  by coefficient extraction from the truncated sum_m q^m/(q;q)_m^2.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace unimodal::oracles {

// partitions of 0..n_max via dp over maximal part, O(n^2) additions
inline std::vector<mpz_class> partitions_dp(std::int64_t n_max) {
    std::vector<mpz_class> dp(static_cast<std::size_t>(n_max) + 1, mpz_class(0));
    dp[0] = 1;
    for (std::int64_t part = 1; part <= n_max; ++part)
        for (std::int64_t m = part; m <= n_max; ++m)
            dp[static_cast<std::size_t>(m)] += dp[static_cast<std::size_t>(m - part)];
    return dp;
}

// p2(n) = sum_{k=0..n} p(k) p(n-k)
inline std::vector<mpz_class> p2_convolution(std::int64_t n_max,
                                             const std::vector<mpz_class>& p) {
    if (static_cast<std::int64_t>(p.size()) <= n_max)
        throw std::invalid_argument("p2_convolution: p table too short");
    std::vector<mpz_class> out(static_cast<std::size_t>(n_max) + 1, mpz_class(0));
    for (std::int64_t n = 0; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (std::int64_t k = 0; k <= n; ++k)
            acc += p[static_cast<std::size_t>(k)] * p[static_cast<std::size_t>(n - k)];
        out[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

// u(0..n_max) from the truncated generating-function sum_m q^m/(q;q)_m^2.
// Term m has valuation m, so coefficients up to n_max are exact.
inline std::vector<mpz_class> u_from_qseries(std::int64_t n_max) {
    std::size_t N = static_cast<std::size_t>(n_max);
    std::vector<mpz_class> acc(N + 1, mpz_class(0));
    std::vector<mpz_class> term(N + 1, mpz_class(0));
    term[0] = 1;  // m = 0 term: constant 1
    acc[0] = 1;
    for (std::int64_t m = 1; m <= n_max; ++m) {
        // term <- term * q / (1 - q^m)^2, truncated at degree n_max
        for (std::size_t i = N; i >= 1; --i) term[i] = term[i - 1];
        term[0] = 0;
        for (int rep = 0; rep < 2; ++rep)
            for (std::size_t i = static_cast<std::size_t>(m); i <= N; ++i)
                term[i] += term[i - static_cast<std::size_t>(m)];
        for (std::size_t i = static_cast<std::size_t>(m); i <= N; ++i) acc[i] += term[i];
    }
    return acc;
}

}  // namespace unimodal::oracles
