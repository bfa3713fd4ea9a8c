#pragma once

#include <map>
#include <string>
#include <vector>

#include "wedge/carry.hpp"
#include "wedge/records.hpp"
#include "wedge/select.hpp"
#include "wedge/stats.hpp"

namespace wedge {

struct ParsedInputs {
    std::vector<OptionQuote> options;
    std::vector<EtfClose> etf_closes;
    std::vector<HoldingsRecord> holdings;
    std::vector<FuturesQuote> futures;
    std::vector<ReferenceRate> refrates;
    std::vector<RiskFreeRate> rates; // must be sorted by date
};

struct PipelineConfig {
    FilterConfig filters;
    std::vector<BucketSpec> buckets = select::default_buckets();
    ExpenseRatio fee;
};

struct DropRecord {
    TradingDate date;
    std::string bucket; // empty when the whole date dropped
    std::string reason;
};

struct RunReport {
    std::size_t rows_options = 0, rows_etf = 0, rows_holdings = 0;
    std::size_t rows_futures = 0, rows_refrate = 0, rows_rates = 0;
    std::size_t pairs_formed = 0;
    std::size_t pairs_passing_filters = 0;
    std::size_t selections_made = 0;
    std::size_t observations_emitted = 0;
    std::map<std::string, std::size_t> drops_by_reason;
    std::vector<DropRecord> drop_log;
};

struct PipelineResult {
    // Sorted by (date, bucket label); order is identical for the serial and
    // parallel paths.
    std::vector<CarryObservation> observations;
    RunReport report;
};

namespace pipeline {

// Merge call and put quotes at common (date, expiration, strike). Quotes
// with a duplicated leg at the same key are dropped and logged.
std::vector<OptionPair> build_pairs(const std::vector<OptionQuote>& quotes,
                                    std::vector<DropRecord>& drop_log);

// Serial reference path.
PipelineResult run_serial(const ParsedInputs& inputs, const PipelineConfig& cfg);

// OpenMP path over dates; results are bit-identical to run_serial.
PipelineResult run_parallel(const ParsedInputs& inputs, const PipelineConfig& cfg);

} // namespace pipeline
} // namespace wedge
