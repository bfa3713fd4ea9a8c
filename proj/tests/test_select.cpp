#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "wedge/select.hpp"

using namespace wedge;
using namespace wedge::select;

namespace {

const TradingDate kDate{2025, 3, 3};

OptionPair make_pair(int days, double strike, double call_mid, double put_mid,
                     double rel_spread, std::int64_t call_oi, std::int64_t put_oi) {
    OptionPair p;
    p.date = kDate;
    p.expiration = kDate.plus_days(days);
    p.strike = strike;
    p.call_mid = call_mid;
    p.put_mid = put_mid;
    p.call_bid = call_mid * (1 - rel_spread / 2);
    p.call_ask = call_mid * (1 + rel_spread / 2);
    p.put_bid = put_mid * (1 - rel_spread / 2);
    p.put_ask = put_mid * (1 + rel_spread / 2);
    p.call_oi = call_oi;
    p.put_oi = put_oi;
    return p;
}

// Direct ordered-criteria scan, kept independent of select_pair.
std::optional<OptionPair> brute_force_select(TradingDate date, const BucketSpec& bucket,
                                             std::vector<OptionPair> candidates,
                                             double etf_close) {
    if (candidates.empty()) return std::nullopt;
    const auto key = [&](const OptionPair& p) {
        const int days = days_between(date, p.expiration);
        const double m = std::abs(p.strike / etf_close - 1.0);
        const double spread = (p.call_ask - p.call_bid) / p.call_mid +
                              (p.put_ask - p.put_bid) / p.put_mid;
        return std::tuple{std::abs(days - bucket.target_days), p.expiration, m,
                          -std::min(p.call_oi, p.put_oi), spread, p.strike,
                          p.call_bid, p.call_ask, p.put_bid, p.put_ask,
                          p.call_oi, p.put_oi};
    };
    return *std::min_element(candidates.begin(), candidates.end(),
                             [&](const OptionPair& a, const OptionPair& b) {
                                 return key(a) < key(b);
                             });
}

bool same_pair(const OptionPair& a, const OptionPair& b) {
    return a.expiration == b.expiration && a.strike == b.strike &&
           a.call_bid == b.call_bid && a.call_ask == b.call_ask &&
           a.put_bid == b.put_bid && a.put_ask == b.put_ask && a.call_oi == b.call_oi &&
           a.put_oi == b.put_oi;
}

} // namespace

TEST_CASE("moneyness") {
    CHECK(moneyness(104, 100) == doctest::Approx(0.04));
    CHECK(moneyness(100, 100) == 0.0);
    CHECK(moneyness(94, 100) == doctest::Approx(-0.06));
}

TEST_CASE("passes_filters") {
    const FilterConfig cfg;
    // call spread 0.10/1.10 ~ 9.09%, put spread 0.20/2.50 = 8%
    OptionPair p = make_pair(25, 102, 1.10, 2.50, 0.0, 450, 300);
    p.call_bid = 1.05;
    p.call_ask = 1.15;
    p.put_bid = 2.40;
    p.put_ask = 2.60;

    SUBCASE("all four rules satisfied") {
        CHECK(passes_filters(p, 100.0, cfg).pass);
    }
    SUBCASE("open interest bound is inclusive at 100") {
        p.call_oi = 100;
        CHECK(passes_filters(p, 100.0, cfg).pass);
        p.call_oi = 99;
        const auto r = passes_filters(p, 100.0, cfg);
        CHECK_FALSE(r.pass);
        CHECK(r.reason == RejectReason::OpenInterest);
    }
    SUBCASE("tenor lower bound inclusive at 14") {
        auto q = p;
        q.expiration = kDate.plus_days(14);
        CHECK(passes_filters(q, 100.0, cfg).pass);
        q.expiration = kDate.plus_days(13);
        const auto r = passes_filters(q, 100.0, cfg);
        CHECK_FALSE(r.pass);
        CHECK(r.reason == RejectReason::Tenor);
    }
    SUBCASE("tenor upper bound inclusive at 90") {
        auto q = p;
        q.expiration = kDate.plus_days(90);
        CHECK(passes_filters(q, 100.0, cfg).pass);
        q.expiration = kDate.plus_days(91);
        CHECK_FALSE(passes_filters(q, 100.0, cfg).pass);
    }
    SUBCASE("moneyness bound is strict at 5%") {
        auto q = p;
        q.strike = 105.0;
        const auto r = passes_filters(q, 100.0, cfg);
        CHECK_FALSE(r.pass);
        CHECK(r.reason == RejectReason::Moneyness);
    }
    SUBCASE("spread bound is strict at 10%") {
        auto q = p;
        q.call_bid = 1.045;
        q.call_ask = 1.155; // exactly 10% of mid 1.10
        const auto r = passes_filters(q, 100.0, cfg);
        CHECK_FALSE(r.pass);
        CHECK(r.reason == RejectReason::Spread);
    }
    SUBCASE("zero mid fails the spread test") {
        auto q = p;
        q.put_bid = q.put_ask = q.put_mid = 0.0;
        const auto r = passes_filters(q, 100.0, cfg);
        CHECK_FALSE(r.pass);
        CHECK(r.reason == RejectReason::Spread);
    }
}

TEST_CASE("filter monotonicity: loosening a threshold never shrinks the set") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> strike_d(90.0, 110.0);
    std::uniform_int_distribution<int> days_d(5, 120);
    std::uniform_int_distribution<std::int64_t> oi_d(0, 400);
    std::uniform_real_distribution<double> spread_d(0.0, 0.2);

    std::vector<OptionPair> pairs;
    for (int i = 0; i < 300; ++i)
        pairs.push_back(make_pair(days_d(rng), strike_d(rng), 2.0, 2.0, spread_d(rng),
                                  oi_d(rng), oi_d(rng)));

    const FilterConfig base;
    FilterConfig loose = base;
    loose.min_days = 7;
    loose.max_days = 120;
    loose.max_abs_moneyness = 0.10;
    loose.max_rel_spread = 0.30;
    loose.min_open_interest = 10;

    for (const auto& p : pairs)
        if (passes_filters(p, 100.0, base).pass)
            CHECK(passes_filters(p, 100.0, loose).pass);
}

TEST_CASE("assign_bucket") {
    const auto buckets = default_buckets();
    CHECK(assign_bucket(22, buckets) == "14-30d");
    CHECK(assign_bucket(45, buckets) == "31-60d");
    CHECK(assign_bucket(75, buckets) == std::nullopt);
    CHECK(assign_bucket(14, buckets) == "14-30d");
    CHECK(assign_bucket(30, buckets) == "14-30d");
    CHECK(assign_bucket(31, buckets) == "31-60d");
    CHECK(assign_bucket(13, buckets) == std::nullopt);
}

TEST_CASE("select_pair basic rules") {
    const BucketSpec bucket{"14-30d", 14, 30, 22};
    SUBCASE("expiration closest to target wins") {
        const std::vector<OptionPair> cands = {
            make_pair(28, 100, 2, 2, 0.02, 200, 200),
            make_pair(21, 100, 2, 2, 0.02, 200, 200),
        };
        const auto s = select_pair(kDate, bucket, cands, 100.0);
        REQUIRE(s.has_value());
        CHECK(days_between(kDate, s->pair.expiration) == 21);
    }
    SUBCASE("closest to the money wins within the expiration") {
        const std::vector<OptionPair> cands = {
            make_pair(22, 101.5, 2, 2, 0.02, 200, 200),
            make_pair(22, 101.0, 2, 2, 0.02, 200, 200),
        };
        const auto s = select_pair(kDate, bucket, cands, 100.0);
        REQUIRE(s.has_value());
        CHECK(s->pair.strike == 101.0);
    }
    SUBCASE("empty candidates give none") {
        CHECK_FALSE(select_pair(kDate, bucket, {}, 100.0).has_value());
    }
    SUBCASE("open-interest tie-break uses the min leg") {
        const std::vector<OptionPair> cands = {
            make_pair(22, 101, 2, 2, 0.02, 500, 150), // min 150
            make_pair(22, 99, 2, 2, 0.02, 300, 250),  // min 250, same |m|
        };
        const auto s = select_pair(kDate, bucket, cands, 100.0);
        REQUIRE(s.has_value());
        CHECK(s->pair.strike == 99.0);
    }
}

TEST_CASE("select_pair matches the brute-force oracle on random instances") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> n_d(1, 50);
    std::uniform_int_distribution<int> days_d(14, 30);
    // Coarse grids force frequent ties through every layer.
    std::uniform_int_distribution<int> strike_step(-3, 3);
    std::uniform_int_distribution<int> oi_step(1, 3);
    std::uniform_int_distribution<int> spread_step(1, 3);

    const BucketSpec bucket{"14-30d", 14, 30, 22};
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<OptionPair> cands;
        const int n = n_d(rng);
        for (int i = 0; i < n; ++i)
            cands.push_back(make_pair(days_d(rng), 100.0 + strike_step(rng), 2.0, 2.0,
                                      0.02 * spread_step(rng), 100 * oi_step(rng),
                                      100 * oi_step(rng)));

        const auto expected = brute_force_select(kDate, bucket, cands, 100.0);
        const auto got = select_pair(kDate, bucket, cands, 100.0);
        REQUIRE(got.has_value());
        REQUIRE(expected.has_value());
        CHECK(same_pair(got->pair, *expected));

        // permutation invariance
        std::shuffle(cands.begin(), cands.end(), rng);
        const auto got2 = select_pair(kDate, bucket, cands, 100.0);
        REQUIRE(got2.has_value());
        CHECK(same_pair(got2->pair, got->pair));
    }
}
