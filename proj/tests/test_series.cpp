#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "unimodal/series.hpp"

using namespace unimodal;

TEST_CASE("pentagonal recurrence p(n)") {
    NatSeries p = gen_p(120);
    CHECK(p.values[0] == 1);
    CHECK(p.values[1] == 1);
    CHECK(p.values[5] == 7);
    CHECK(p.values[100] == mpz_class("190569292"));
    auto dp = oracles::partitions_dp(120);
    for (std::int64_t n = 0; n <= 120; ++n) CHECK(p.values[n] == dp[n]);
}

TEST_CASE("gen_p n_max=0") {
    NatSeries p = gen_p(0);
    REQUIRE(p.n_max() == 0);
    CHECK(p.values[0] == 1);
}

TEST_CASE("p2 against convolution oracle") {
    NatSeries p = gen_p(300);
    NatSeries p2 = gen_p2(300, p);
    CHECK(p2.values[0] == 1);
    CHECK(p2.values[3] == 10);
    CHECK(p2.values[5] == 36);
    auto conv = oracles::p2_convolution(300, p.values);
    for (std::int64_t n = 0; n <= 300; ++n) CHECK(p2.values[n] == conv[n]);
    CHECK_THROWS_AS(gen_p2(400, p), std::invalid_argument);
}

TEST_CASE("u against both oracles and brute force") {
    SeriesTables t = gen_all(300);
    CHECK(t.u.values[0] == 1);
    CHECK(t.u.values[3] == 6);
    CHECK(t.u.values[7] == 63);
    auto q = oracles::u_from_qseries(300);
    for (std::int64_t n = 0; n <= 300; ++n) CHECK(t.u.values[n] == q[n]);
    for (std::int64_t n = 0; n <= 25; ++n) CHECK(t.u.values[n] == u_bruteforce(n));
}

TEST_CASE("u_bruteforce small values and cap") {
    CHECK(u_bruteforce(0) == 1);
    CHECK(u_bruteforce(1) == 1);
    CHECK(u_bruteforce(2) == 3);
    CHECK(u_bruteforce(4) == 12);
    CHECK_THROWS_AS(u_bruteforce(41), std::out_of_range);
    CHECK_THROWS_AS(u_bruteforce(-1), std::out_of_range);
}

TEST_CASE("tables are weakly increasing from n=1 and prefix-stable") {
    SeriesTables t = gen_all(400);
    for (std::int64_t n = 1; n < 400; ++n) {
        CHECK(t.u.values[n] <= t.u.values[n + 1]);
        CHECK(t.p2.values[n] <= t.p2.values[n + 1]);
    }
    // regeneration with a shorter range reproduces the same prefix
    SeriesTables s = gen_all(150);
    for (std::int64_t n = 0; n <= 150; ++n) {
        CHECK(s.p.values[n] == t.p.values[n]);
        CHECK(s.p2.values[n] == t.p2.values[n]);
        CHECK(s.u.values[n] == t.u.values[n]);
    }
}

TEST_CASE("log-concavity scan: exact deltas and exception set") {
    SeriesTables t = gen_all(101);
    ScanResult r = logconcavity_scan(t.u, 1, 100);
    CHECK(r.delta_at(1) == -2);   // 1 - 1*3
    CHECK(r.delta_at(2) == 3);    // 9 - 1*6
    CHECK(r.delta_at(3) == 0);    // 36 - 3*12: equality, not strict positivity
    CHECK(r.delta_at(4) == 18);
    CHECK(r.delta_at(5) == -15);  // 441 - 12*38
    CHECK(r.delta_at(6) == 121);
    CHECK(r.delta_at(7) == -59);  // 3969 - 38*106
    CHECK(r.exceptions == std::vector<std::int64_t>{1, 3, 5, 7});
    CHECK(r.negative == 3);
    CHECK(r.zero == 1);
    CHECK(r.positive == 96);
    CHECK_THROWS_AS(logconcavity_scan(t.u, 1, 101), std::out_of_range);
    CHECK_THROWS_AS(logconcavity_scan(t.u, 0, 10), std::invalid_argument);
}

TEST_CASE("scan is chunking-independent") {
    SeriesTables t = gen_all(600);
    ScanResult seq = logconcavity_scan(t.u, 1, 599, 1);
    ScanResult par = logconcavity_scan(t.u, 1, 599, 4);
    REQUIRE(seq.deltas.size() == par.deltas.size());
    for (std::size_t i = 0; i < seq.deltas.size(); ++i)
        CHECK(seq.deltas[i].delta == par.deltas[i].delta);
    CHECK(seq.exceptions == par.exceptions);
}

TEST_CASE("table io round trip, checksum detects corruption") {
    SeriesTables t = gen_all(64);
    std::stringstream ss;
    save_table(t.u, ss);
    NatSeries back = load_table(ss);
    CHECK(back.kind == SeriesKind::U);
    REQUIRE(back.n_max() == 64);
    for (std::int64_t n = 0; n <= 64; ++n) CHECK(back.values[n] == t.u.values[n]);

    std::stringstream ss2;
    save_table(t.u, ss2);
    std::string tampered = ss2.str();
    std::size_t dpos = tampered.rfind(' ') + 1;  // first digit of the last value
    tampered[dpos] = tampered[dpos] == '9' ? '8' : '9';
    std::stringstream ss3(tampered);
    CHECK_THROWS_AS(load_table(ss3), TableError);
}

TEST_CASE("csv and json exports") {
    NatSeries p = gen_p(3);
    std::stringstream csv;
    export_csv(p, csv);
    CHECK(csv.str() == "n,value\n0,1\n1,1\n2,2\n3,3\n");
    std::stringstream js;
    export_json(p, js);
    CHECK(js.str().find("\"kind\": \"P\"") != std::string::npos);
    CHECK(js.str().find("\"values\": [\"1\",\"1\",\"2\",\"3\"]") != std::string::npos);
}

TEST_CASE("oversized table request is reported") {
    CHECK_THROWS_AS(gen_p(50'000'000), TableError);
}
