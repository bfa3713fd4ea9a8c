#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wedge/parity.hpp"

namespace wedge {

// A calendar-days-to-expiration range with a preferred tenor inside it.
struct BucketSpec {
    std::string label;
    int min_days = 0;
    int max_days = 0;
    int target_days = 0;
};

struct FilterConfig {
    int min_days = 14;
    int max_days = 90;
    double max_abs_moneyness = 0.05; // strict bound
    double max_rel_spread = 0.10;    // strict bound, per leg
    std::int64_t min_open_interest = 100; // inclusive bound, per leg
};

enum class RejectReason {
    None,
    Tenor,
    Moneyness,
    Spread,
    OpenInterest,
};

struct FilterResult {
    bool pass = false;
    RejectReason reason = RejectReason::None;
};

struct SelectedPair {
    OptionPair pair;
    std::string bucket_label;
    double etf_close = 0.0;
    int candidate_count = 0;
    // How deep the tie-break chain went: 0 expiration, 1 moneyness,
    // 2 open interest, 3 spread, 4 strike.
    int tiebreak_depth = 0;
};

namespace select {

// Signed moneyness: strike/etf_close - 1.
double moneyness(double strike, double etf_close);

// Tenor in [min_days, max_days], |moneyness| < max_abs_moneyness, each leg's
// (ask-bid)/mid < max_rel_spread (mid = 0 fails), each leg's open interest
// >= min_open_interest.
FilterResult passes_filters(const OptionPair& pair, double etf_close,
                            const FilterConfig& cfg);

std::optional<std::string> assign_bucket(int days, const std::vector<BucketSpec>& buckets);

// Deterministic choice among candidates already filtered into `bucket`:
// expiration closest to target (tie: earlier), then minimal |moneyness|,
// then larger min-leg open interest, then smaller combined relative spread,
// then lower strike.
std::optional<SelectedPair> select_pair(TradingDate date, const BucketSpec& bucket,
                                        const std::vector<OptionPair>& candidates,
                                        double etf_close);

std::vector<BucketSpec> default_buckets();

const char* reject_reason_name(RejectReason r);

} // namespace select
} // namespace wedge
