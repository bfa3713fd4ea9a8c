#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "wedge/stats.hpp"

using namespace wedge;
using namespace wedge::stats;

namespace {

// Brute-force reference: sort + direct formulas, independent of stats.cpp.
struct RefSummary {
    double mean, sd, p05, median, p95;
};

double ref_quantile(const std::vector<double>& sorted, double p) {
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<size_t>(std::floor(h));
    const auto hi = static_cast<size_t>(std::ceil(h));
    return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}

RefSummary ref_summarize(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    double sum = 0.0;
    for (double x : v) sum += x;
    const double mean = sum / v.size();
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    const double sd = v.size() > 1 ? std::sqrt(ss / (v.size() - 1)) : 0.0;
    return {mean, sd, ref_quantile(v, 0.05), ref_quantile(v, 0.50), ref_quantile(v, 0.95)};
}

CarryObservation obs_with(TradingDate date, const std::string& bucket, double wedge) {
    CarryObservation o;
    o.date = date;
    o.bucket_label = bucket;
    o.wedge = wedge;
    return o;
}

} // namespace

TEST_CASE("summarize worked example [1,2,3,4,5]") {
    const auto row = summarize({1, 2, 3, 4, 5}, "overall");
    CHECK(row.n == 5);
    CHECK(row.mean == 3.0);
    CHECK(row.median == 3.0);
    CHECK(row.sd == doctest::Approx(1.5811388300841898).epsilon(1e-12));
    CHECK(row.p05 == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(row.p95 == doctest::Approx(4.8).epsilon(1e-12));
}

TEST_CASE("summarize degenerate cases") {
    SUBCASE("all-equal vector") {
        const auto row = summarize({2.5, 2.5, 2.5}, "g");
        CHECK(row.sd == 0.0);
        CHECK(row.p05 == 2.5);
        CHECK(row.median == 2.5);
        CHECK(row.p95 == 2.5);
        CHECK_FALSE(row.sd_degenerate);
    }
    SUBCASE("single value flags sd as degenerate") {
        const auto row = summarize({7.0}, "g");
        CHECK(row.mean == 7.0);
        CHECK(row.median == 7.0);
        CHECK(row.p05 == 7.0);
        CHECK(row.p95 == 7.0);
        CHECK(row.sd == 0.0);
        CHECK(row.sd_degenerate);
    }
    SUBCASE("empty group") {
        CHECK_THROWS_WITH_AS(summarize({}, "g"), doctest::Contains("EmptyGroup"),
                             DomainError);
    }
}

TEST_CASE("summarize matches the brute-force reference on random vectors") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<size_t> len_d(1, 10000);
    std::normal_distribution<double> val_d(2.0, 5.0);

    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v(len_d(rng));
        for (auto& x : v) x = val_d(rng);
        const auto row = summarize(v, "g");
        const auto ref = ref_summarize(v);
        const auto close = [](double a, double b) {
            return std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b));
        };
        CHECK(close(row.mean, ref.mean));
        CHECK(close(row.sd, ref.sd));
        CHECK(close(row.p05, ref.p05));
        CHECK(close(row.median, ref.median));
        CHECK(close(row.p95, ref.p95));
    }
}

TEST_CASE("scale and shift equivariance") {
    std::mt19937_64 rng(29);
    std::normal_distribution<double> val_d(0.0, 3.0);
    std::vector<double> v(257);
    for (auto& x : v) x = val_d(rng);

    const auto base = summarize(v, "g");
    const double c = 2.75;

    std::vector<double> scaled(v), shifted(v);
    for (auto& x : scaled) x *= c;
    for (auto& x : shifted) x += c;

    const auto s = summarize(scaled, "g");
    CHECK(s.mean == doctest::Approx(base.mean * c).epsilon(1e-12));
    CHECK(s.sd == doctest::Approx(base.sd * c).epsilon(1e-12));
    CHECK(s.p05 == doctest::Approx(base.p05 * c).epsilon(1e-12));
    CHECK(s.median == doctest::Approx(base.median * c).epsilon(1e-12));
    CHECK(s.p95 == doctest::Approx(base.p95 * c).epsilon(1e-12));

    const auto t = summarize(shifted, "g");
    CHECK(t.mean == doctest::Approx(base.mean + c).epsilon(1e-12));
    CHECK(t.sd == doctest::Approx(base.sd).epsilon(1e-10));
    CHECK(t.median == doctest::Approx(base.median + c).epsilon(1e-12));
}

TEST_CASE("bucket_summaries") {
    const std::vector<std::string> order = {"14-30d", "31-60d"};
    const TradingDate d(2025, 3, 3);

    SUBCASE("overall row first, then buckets in configured order") {
        std::vector<CarryObservation> obs;
        for (int i = 0; i < 193; ++i) {
            obs.push_back(obs_with(d.plus_days(i), "14-30d", 0.02));
            obs.push_back(obs_with(d.plus_days(i), "31-60d", 0.03));
        }
        const auto rows = bucket_summaries(obs, order);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0].group == "overall");
        CHECK(rows[0].n == 386);
        CHECK(rows[1].group == "14-30d");
        CHECK(rows[1].n == 193);
        CHECK(rows[2].group == "31-60d");
        CHECK(rows[2].n == 193);
        // decimals converted to percentage points
        CHECK(rows[1].mean == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(rows[2].mean == doctest::Approx(3.0).epsilon(1e-12));
    }
    SUBCASE("empty bucket omitted") {
        const std::vector<CarryObservation> obs = {obs_with(d, "14-30d", 0.01)};
        const auto rows = bucket_summaries(obs, order);
        REQUIRE(rows.size() == 2);
        CHECK(rows[0].group == "overall");
        CHECK(rows[1].group == "14-30d");
    }
    SUBCASE("single-bucket config gives two rows") {
        const std::vector<CarryObservation> obs = {obs_with(d, "14-30d", 0.01),
                                                   obs_with(d.plus_days(1), "14-30d", 0.02)};
        CHECK(bucket_summaries(obs, {"14-30d"}).size() == 2);
    }
}
