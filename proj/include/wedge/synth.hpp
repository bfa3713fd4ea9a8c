#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wedge/date.hpp"
#include "wedge/errors.hpp"
#include "wedge/select.hpp"

namespace wedge {

// Generator settings for an arbitrage-consistent dataset with a known
// injected wedge: cme_carry_true - (etf_carry_true + expense_ratio).
struct SynthConfig {
    std::uint64_t seed = 42;
    int n_days = 250;
    TradingDate start_date{2025, 1, 2};
    double btc_spot_start = 90000.0;
    double spot_vol = 0.50; // annualized
    double rate = 0.045;    // flat continuously-compounded
    double expense_ratio = 0.0025;
    double q0 = 0.00056818; // bitcoin per ETF share
    double shares_outstanding = 880000000.0;
    double etf_carry_true = 0.05;  // decimal per year
    double cme_carry_true = 0.08;
    double half_spread_rel = 0.02;
    int strikes_per_expiry = 5;
    double strike_step_rel = 0.01;
    std::pair<std::int64_t, std::int64_t> oi_range{150, 900};
    std::vector<BucketSpec> buckets = select::default_buckets();
    // Shifts every futures expiration off the option expirations to exercise
    // nearest-contract matching; 0 keeps them coincident.
    int futures_offset_days = 0;
};

struct GroundTruthRow {
    TradingDate date;
    std::string bucket;
    double true_wedge_pp = 0.0;
};

// The six canonical input files plus the per-date ground truth.
struct SynthDataset {
    std::string options_csv;
    std::string etf_close_csv;
    std::string holdings_csv;
    std::string futures_csv;
    std::string refrate_csv;
    std::string rates_csv;
    std::string ground_truth_csv;
    std::vector<GroundTruthRow> ground_truth;
};

namespace synth {

// Deterministic for a given config. Throws DomainError "ConfigError".
SynthDataset generate(const SynthConfig& config);

} // namespace synth
} // namespace wedge
