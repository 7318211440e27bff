#pragma once

// Exact integer tables for p(n), the two-colored partition numbers p2(n)
// (coefficients of 1/(q;q)_inf^2), and the unimodal-sequence counts u(n),
// all generated by pentagonal-number recurrences in O(n^(3/2)) big-integer
// additions, plus exact log-concavity deltas u(n)^2 - u(n-1)u(n+1).

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "unimodal/util.hpp"

namespace unimodal {

enum class SeriesKind { P, P2, U };

inline const char* kind_name(SeriesKind k) {
    switch (k) {
        case SeriesKind::P: return "P";
        case SeriesKind::P2: return "P2";
        case SeriesKind::U: return "U";
    }
    return "?";
}

inline std::optional<SeriesKind> kind_from_name(const std::string& s) {
    if (s == "P") return SeriesKind::P;
    if (s == "P2") return SeriesKind::P2;
    if (s == "U") return SeriesKind::U;
    return std::nullopt;
}

struct NatSeries {
    SeriesKind kind{SeriesKind::P};
    std::vector<mpz_class> values;  // index n = 0..n_max

    std::int64_t n_max() const { return static_cast<std::int64_t>(values.size()) - 1; }
    const mpz_class& at(std::int64_t n) const {
        if (n < 0 || n > n_max()) throw std::out_of_range("NatSeries index out of range");
        return values[static_cast<std::size_t>(n)];
    }
};

struct TableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rough memory estimate used to report (rather than attempt) hopeless
// allocations: entry n needs about pi*sqrt(2n/3)*2/ln2 bits for P2/U.
inline std::uint64_t estimated_table_bytes(std::int64_t n_max) {
    long double n = static_cast<long double>(n_max < 1 ? 1 : n_max);
    long double bits_top = 9.065l * sqrtl(n) + 64.0l;  // 2*pi*sqrt(n/3)/ln2
    return static_cast<std::uint64_t>(n * (bits_top / 8.0l * 0.7l + 48.0l));
}

inline void check_table_size(std::int64_t n_max, std::uint64_t cap_bytes = 1ull << 30) {
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    if (estimated_table_bytes(n_max) > cap_bytes)
        throw TableError("table for n_max=" + std::to_string(n_max) +
                         " would exceed the memory cap; refusing to allocate");
}

namespace detail_series {
// generalized pentagonal numbers g_k = k(3k-1)/2, g_{-k} = k(3k+1)/2
inline std::int64_t pent_plus(std::int64_t k) { return k * (3 * k - 1) / 2; }
inline std::int64_t pent_minus(std::int64_t k) { return k * (3 * k + 1) / 2; }
}  // namespace detail_series

// p(n) = sum_{k>=1} (-1)^(k+1) [ p(n - g_k) + p(n - g_{-k}) ]
inline NatSeries gen_p(std::int64_t n_max) {
    check_table_size(n_max);
    NatSeries s;
    s.kind = SeriesKind::P;
    s.values.assign(static_cast<std::size_t>(n_max) + 1, mpz_class(0));
    s.values[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        mpz_ptr acc = s.values[static_cast<std::size_t>(n)].get_mpz_t();
        for (std::int64_t k = 1;; ++k) {
            std::int64_t g1 = detail_series::pent_plus(k);
            if (g1 > n) break;
            std::int64_t g2 = detail_series::pent_minus(k);
            bool plus = (k & 1) != 0;
            if (plus) {
                mpz_add(acc, acc, s.values[static_cast<std::size_t>(n - g1)].get_mpz_t());
                if (g2 <= n)
                    mpz_add(acc, acc, s.values[static_cast<std::size_t>(n - g2)].get_mpz_t());
            } else {
                mpz_sub(acc, acc, s.values[static_cast<std::size_t>(n - g1)].get_mpz_t());
                if (g2 <= n)
                    mpz_sub(acc, acc, s.values[static_cast<std::size_t>(n - g2)].get_mpz_t());
            }
        }
    }
    return s;
}

// p2(n) = p(n) + sum_{k>=1} (-1)^(k+1) [ p2(n - g_k) + p2(n - g_{-k}) ],
// from P2(q) * (q;q)_inf = P(q).
inline NatSeries gen_p2(std::int64_t n_max, const NatSeries& p) {
    check_table_size(n_max);
    if (p.kind != SeriesKind::P || p.n_max() < n_max)
        throw std::invalid_argument("gen_p2: p table does not cover 0..n_max");
    NatSeries s;
    s.kind = SeriesKind::P2;
    s.values.assign(static_cast<std::size_t>(n_max) + 1, mpz_class(0));
    s.values[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        mpz_ptr acc = s.values[static_cast<std::size_t>(n)].get_mpz_t();
        mpz_set(acc, p.values[static_cast<std::size_t>(n)].get_mpz_t());
        for (std::int64_t k = 1;; ++k) {
            std::int64_t g1 = detail_series::pent_plus(k);
            if (g1 > n) break;
            std::int64_t g2 = detail_series::pent_minus(k);
            bool plus = (k & 1) != 0;
            if (plus) {
                mpz_add(acc, acc, s.values[static_cast<std::size_t>(n - g1)].get_mpz_t());
                if (g2 <= n)
                    mpz_add(acc, acc, s.values[static_cast<std::size_t>(n - g2)].get_mpz_t());
            } else {
                mpz_sub(acc, acc, s.values[static_cast<std::size_t>(n - g1)].get_mpz_t());
                if (g2 <= n)
                    mpz_sub(acc, acc, s.values[static_cast<std::size_t>(n - g2)].get_mpz_t());
            }
        }
    }
    return s;
}

// u(n) = sum_{j>=0, T_j<=n} (-1)^j p2(n - T_j), T_j = j(j+1)/2.
// Intermediate sums may go negative; the final entry must not.
inline NatSeries gen_u(std::int64_t n_max, const NatSeries& p2) {
    check_table_size(n_max);
    if (p2.kind != SeriesKind::P2 || p2.n_max() < n_max)
        throw std::invalid_argument("gen_u: p2 table does not cover 0..n_max");
    NatSeries s;
    s.kind = SeriesKind::U;
    s.values.assign(static_cast<std::size_t>(n_max) + 1, mpz_class(0));
    for (std::int64_t n = 0; n <= n_max; ++n) {
        mpz_ptr acc = s.values[static_cast<std::size_t>(n)].get_mpz_t();
        for (std::int64_t j = 0;; ++j) {
            std::int64_t t = j * (j + 1) / 2;
            if (t > n) break;
            if ((j & 1) == 0)
                mpz_add(acc, acc, p2.values[static_cast<std::size_t>(n - t)].get_mpz_t());
            else
                mpz_sub(acc, acc, p2.values[static_cast<std::size_t>(n - t)].get_mpz_t());
        }
        if (mpz_sgn(acc) < 0)
            throw std::logic_error("gen_u: negative count at n=" + std::to_string(n));
    }
    return s;
}

// Convenience: full P -> P2 -> U cascade.
struct SeriesTables {
    NatSeries p, p2, u;
};
inline SeriesTables gen_all(std::int64_t n_max) {
    SeriesTables t;
    t.p = gen_p(n_max);
    t.p2 = gen_p2(n_max, t.p);
    t.u = gen_u(n_max, t.p2);
    return t;
}

// Exhaustive count of unimodal sequences of n with a marked peak:
//   1 <= a_1 <= ... <= a_r <= c >= b_s >= ... >= b_1 >= 1,
//   sum(a) + c + sum(b) = n.
// Exponential-style enumeration kept honest by a hard cap.
inline constexpr std::int64_t kBruteForceCap = 40;

inline mpz_class u_bruteforce(std::int64_t n) {
    if (n < 0 || n > kBruteForceCap)
        throw std::out_of_range("u_bruteforce: n outside [0, 40]");
    if (n == 0) return 1;  // empty sequence
    // pleq[c][m]: partitions of m into parts <= c
    std::size_t N = static_cast<std::size_t>(n);
    std::vector<std::vector<unsigned long long>> pleq(N + 1,
                                                      std::vector<unsigned long long>(N + 1, 0));
    for (std::size_t c = 0; c <= N; ++c) pleq[c][0] = 1;
    for (std::size_t c = 1; c <= N; ++c)
        for (std::size_t m = 1; m <= N; ++m)
            pleq[c][m] = pleq[c - 1][m] + (m >= c ? pleq[c][m - c] : 0);
    unsigned long long total = 0;
    for (std::size_t c = 1; c <= N; ++c)
        for (std::size_t j = 0; j + c <= N; ++j)
            total += pleq[c][j] * pleq[c][N - c - j];
    mpz_class out;
    mpz_set_ui(out.get_mpz_t(), static_cast<unsigned long>(total));
    return out;
}

// ---------------------------------------------------------------------------
// log-concavity scan
// ---------------------------------------------------------------------------

struct LogConcavityDelta {
    std::int64_t n;
    mpz_class delta;  // u(n)^2 - u(n-1)u(n+1), exact
};

struct ScanResult {
    std::int64_t n_lo = 0, n_hi = 0;
    std::vector<LogConcavityDelta> deltas;      // one per n in [n_lo, n_hi]
    std::vector<std::int64_t> exceptions;       // { n : delta <= 0 }
    std::int64_t positive = 0, zero = 0, negative = 0;

    const mpz_class& delta_at(std::int64_t n) const {
        if (n < n_lo || n > n_hi) throw std::out_of_range("delta_at: n outside scan range");
        return deltas[static_cast<std::size_t>(n - n_lo)].delta;
    }
};

inline ScanResult logconcavity_scan(const NatSeries& u, std::int64_t n_lo, std::int64_t n_hi,
                                    unsigned threads = 0) {
    if (u.kind != SeriesKind::U) throw std::invalid_argument("logconcavity_scan: table kind must be U");
    if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("logconcavity_scan: need 1 <= n_lo <= n_hi");
    if (u.n_max() < n_hi + 1) throw std::out_of_range("logconcavity_scan: table must cover n_hi+1");
    ScanResult r;
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    r.deltas.resize(static_cast<std::size_t>(n_hi - n_lo + 1));
    parallel_for(n_lo, n_hi + 1, [&](std::int64_t n) {
        mpz_class sq, cross;
        mpz_mul(sq.get_mpz_t(), u.values[static_cast<std::size_t>(n)].get_mpz_t(),
                u.values[static_cast<std::size_t>(n)].get_mpz_t());
        mpz_mul(cross.get_mpz_t(), u.values[static_cast<std::size_t>(n - 1)].get_mpz_t(),
                u.values[static_cast<std::size_t>(n + 1)].get_mpz_t());
        LogConcavityDelta& d = r.deltas[static_cast<std::size_t>(n - n_lo)];
        d.n = n;
        mpz_sub(d.delta.get_mpz_t(), sq.get_mpz_t(), cross.get_mpz_t());
    }, threads);
    for (const auto& d : r.deltas) {
        int s = mpz_sgn(d.delta.get_mpz_t());
        if (s > 0) ++r.positive;
        else if (s == 0) { ++r.zero; r.exceptions.push_back(d.n); }
        else { ++r.negative; r.exceptions.push_back(d.n); }
    }
    return r;
}

// ---------------------------------------------------------------------------
// persistence: length-prefixed radix-10 table files with a checksum header
// ---------------------------------------------------------------------------

inline std::string table_checksum(const NatSeries& s) {
    Fnv1a64 h;
    h.feed(kind_name(s.kind));
    h.feed("\n");
    h.feed(std::to_string(s.n_max()));
    h.feed("\n");
    for (const auto& v : s.values) {
        h.feed(v.get_str());
        h.feed("\n");
    }
    return h.hex();
}

inline void save_table(const NatSeries& s, std::ostream& os) {
    os << "UNIMODAL-TABLE v1\n";
    os << "kind " << kind_name(s.kind) << "\n";
    os << "n_max " << s.n_max() << "\n";
    os << "checksum " << table_checksum(s) << "\n";
    for (const auto& v : s.values) {
        std::string d = v.get_str();
        os << d.size() << " " << d << "\n";
    }
}

inline void save_table_file(const NatSeries& s, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw TableError("cannot open table file for writing: " + path);
    save_table(s, f);
    if (!f.good()) throw TableError("write failure on table file: " + path);
}

inline NatSeries load_table(std::istream& is) {
    std::string magic, kindw, kinds, nmw, ckw, cksum;
    std::getline(is, magic);
    if (magic != "UNIMODAL-TABLE v1") throw TableError("bad table header");
    std::int64_t n_max = -1;
    is >> kindw >> kinds >> nmw >> n_max >> ckw >> cksum;
    if (kindw != "kind" || nmw != "n_max" || ckw != "checksum" || n_max < 0)
        throw TableError("bad table header fields");
    auto k = kind_from_name(kinds);
    if (!k) throw TableError("unknown table kind: " + kinds);
    NatSeries s;
    s.kind = *k;
    s.values.resize(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        std::size_t len = 0;
        std::string digits;
        if (!(is >> len >> digits)) throw TableError("truncated table body");
        if (digits.size() != len) throw TableError("length prefix mismatch in table body");
        s.values[static_cast<std::size_t>(n)] = mpz_class(digits, 10);
    }
    if (table_checksum(s) != cksum) throw TableError("table checksum mismatch");
    return s;
}

inline NatSeries load_table_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw TableError("cannot open table file: " + path);
    return load_table(f);
}

// CSV: one row per n.  Big integers stay decimal strings end to end.
inline void export_csv(const NatSeries& s, std::ostream& os) {
    os << "n,value\n";
    for (std::int64_t n = 0; n <= s.n_max(); ++n)
        os << n << "," << s.values[static_cast<std::size_t>(n)].get_str() << "\n";
}

inline void export_json(const NatSeries& s, std::ostream& os) {
    os << "{\n  \"schema\": \"unimodal-table/1\",\n  \"kind\": \"" << kind_name(s.kind)
       << "\",\n  \"n_max\": " << s.n_max() << ",\n  \"checksum\": \"" << table_checksum(s)
       << "\",\n  \"values\": [";
    for (std::int64_t n = 0; n <= s.n_max(); ++n) {
        if (n) os << ",";
        os << "\"" << s.values[static_cast<std::size_t>(n)].get_str() << "\"";
    }
    os << "]\n}\n";
}

}  // namespace unimodal
