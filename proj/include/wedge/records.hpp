#pragma once

#include <cstdint>
#include <string>

#include "wedge/date.hpp"

namespace wedge {

enum class OptionRight { Call, Put };

struct OptionQuote {
    TradingDate date;
    TradingDate expiration;
    double strike = 0.0;
    OptionRight right = OptionRight::Call;
    double bid = 0.0;
    double ask = 0.0;
    std::int64_t open_interest = 0;

    bool operator==(const OptionQuote&) const = default;
};

struct EtfClose {
    TradingDate date;
    double close = 0.0;

    bool operator==(const EtfClose&) const = default;
};

struct HoldingsRecord {
    TradingDate date;
    double btc_holdings = 0.0;
    double shares_outstanding = 0.0;

    bool operator==(const HoldingsRecord&) const = default;
};

struct FuturesQuote {
    TradingDate date;
    std::string contract_code;
    TradingDate expiration;
    double close = 0.0;

    bool operator==(const FuturesQuote&) const = default;
};

struct ReferenceRate {
    TradingDate date;
    double value = 0.0;

    bool operator==(const ReferenceRate&) const = default;
};

struct RiskFreeRate {
    TradingDate date;
    double rate = 0.0; // annualized continuously-compounded decimal

    bool operator==(const RiskFreeRate&) const = default;
};

} // namespace wedge
