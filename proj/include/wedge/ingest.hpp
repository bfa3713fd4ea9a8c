#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wedge/errors.hpp"
#include "wedge/records.hpp"

namespace wedge::ingest {

// Canonical CSV parsers. Each validates the exact header, preserves row
// order, and throws ParseError ("MalformedHeader", "BadRow", "DuplicateDate",
// "NonPositiveValue") with the offending line number.
std::vector<OptionQuote> parse_option_quotes(std::string_view text);
std::vector<EtfClose> parse_etf_closes(std::string_view text);
std::vector<HoldingsRecord> parse_holdings(std::string_view text);
std::vector<FuturesQuote> parse_futures(std::string_view text);
std::vector<ReferenceRate> parse_refrate(std::string_view text);
std::vector<RiskFreeRate> parse_rates(std::string_view text);

// Canonical serializers (inverse of the parsers, header included).
std::string to_csv(const std::vector<OptionQuote>& rows);
std::string to_csv(const std::vector<EtfClose>& rows);
std::string to_csv(const std::vector<HoldingsRecord>& rows);
std::string to_csv(const std::vector<FuturesQuote>& rows);
std::string to_csv(const std::vector<ReferenceRate>& rows);
std::string to_csv(const std::vector<RiskFreeRate>& rows);

// Tolerant adapter for the vendor-style holdings file: key-value preamble
// (shares outstanding, as-of date) followed by a holdings table with a BTC
// ticker row. Numbers may carry thousands separators and quotes.
// Throws ParseError ("MissingBitcoinRow", "MissingSharesOutstanding",
// "MissingAsOfDate").
HoldingsRecord adapt_vendor_holdings(std::string_view text);

struct AlignedRate {
    RiskFreeRate rate;
    int fill_distance_days = 0; // 0 = exact date match
};

// Exact-date match, else most recent prior value within 7 calendar days.
// `rates` must be sorted by date. Throws DomainError "NoUsableRate".
AlignedRate align_rate(TradingDate date, const std::vector<RiskFreeRate>& rates);

} // namespace wedge::ingest
