#include "wedge/select.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace wedge::select {

double moneyness(double strike, double etf_close) {
    return strike / etf_close - 1.0;
}

FilterResult passes_filters(const OptionPair& pair, double etf_close,
                            const FilterConfig& cfg) {
    const int days = days_between(pair.date, pair.expiration);
    if (days < cfg.min_days || days > cfg.max_days)
        return {false, RejectReason::Tenor};
    if (std::abs(moneyness(pair.strike, etf_close)) >= cfg.max_abs_moneyness)
        return {false, RejectReason::Moneyness};
    const auto leg_spread_ok = [&](double bid, double ask, double mid) {
        return mid > 0.0 && (ask - bid) / mid < cfg.max_rel_spread;
    };
    if (!leg_spread_ok(pair.call_bid, pair.call_ask, pair.call_mid) ||
        !leg_spread_ok(pair.put_bid, pair.put_ask, pair.put_mid))
        return {false, RejectReason::Spread};
    if (pair.call_oi < cfg.min_open_interest || pair.put_oi < cfg.min_open_interest)
        return {false, RejectReason::OpenInterest};
    return {true, RejectReason::None};
}

std::optional<std::string> assign_bucket(int days, const std::vector<BucketSpec>& buckets) {
    for (const auto& b : buckets)
        if (days >= b.min_days && days <= b.max_days) return b.label;
    return std::nullopt;
}

std::vector<BucketSpec> default_buckets() {
    return {{"14-30d", 14, 30, 22}, {"31-60d", 31, 60, 45}};
}

const char* reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::None: return "None";
        case RejectReason::Tenor: return "Tenor";
        case RejectReason::Moneyness: return "Moneyness";
        case RejectReason::Spread: return "Spread";
        case RejectReason::OpenInterest: return "OpenInterest";
    }
    return "?";
}

namespace {

double pair_rel_spread(const OptionPair& p) {
    return (p.call_ask - p.call_bid) / p.call_mid + (p.put_ask - p.put_bid) / p.put_mid;
}

// Keeps the candidates minimizing `key`; returns true if more than one
// candidate survived (the criterion did not decide alone).
template <typename Key>
bool reduce(std::vector<const OptionPair*>& pool, Key key) {
    auto best = key(*pool[0]);
    for (size_t i = 1; i < pool.size(); ++i)
        best = std::min(best, key(*pool[i]));
    std::erase_if(pool, [&](const OptionPair* p) { return key(*p) != best; });
    return pool.size() > 1;
}

} // namespace

std::optional<SelectedPair> select_pair(TradingDate date, const BucketSpec& bucket,
                                        const std::vector<OptionPair>& candidates,
                                        double etf_close) {
    if (candidates.empty()) return std::nullopt;

    std::vector<const OptionPair*> pool;
    pool.reserve(candidates.size());
    for (const auto& c : candidates) pool.push_back(&c);

    int depth = 0;
    // Expiration: closest to the bucket target, ties to the earlier expiration.
    if (reduce(pool, [&](const OptionPair& p) {
            const int days = days_between(date, p.expiration);
            return std::pair{std::abs(days - bucket.target_days), p.expiration};
        })) {
        depth = 1;
        if (reduce(pool, [&](const OptionPair& p) {
                return std::abs(moneyness(p.strike, etf_close));
            })) {
            depth = 2;
            if (reduce(pool, [](const OptionPair& p) {
                    return -std::min(p.call_oi, p.put_oi);
                })) {
                depth = 3;
                if (reduce(pool, [](const OptionPair& p) { return pair_rel_spread(p); })) {
                    depth = 4;
                    if (reduce(pool, [](const OptionPair& p) { return p.strike; })) {
                        // Only fully identical quote fields can still tie; pick a
                        // canonical representative so ordering never matters.
                        reduce(pool, [](const OptionPair& p) {
                            return std::tuple{p.call_bid, p.call_ask, p.put_bid,
                                              p.put_ask, p.call_oi, p.put_oi};
                        });
                    }
                }
            }
        }
    }

    return SelectedPair{*pool.front(), bucket.label, etf_close,
                        static_cast<int>(candidates.size()), depth};
}

} // namespace wedge::select
