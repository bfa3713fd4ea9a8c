#pragma once

#include <cstdint>

#include "wedge/date.hpp"
#include "wedge/errors.hpp"

namespace wedge {

// Merged call-put legs at a common (date, expiration, strike).
struct OptionPair {
    TradingDate date;
    TradingDate expiration;
    double strike = 0.0;
    double call_bid = 0.0, call_ask = 0.0;
    double put_bid = 0.0, put_ask = 0.0;
    std::int64_t call_oi = 0, put_oi = 0;
    double call_mid = 0.0;
    double put_mid = 0.0;
};

// ACT/365 year fraction.
struct YearFraction {
    double tau = 0.0;
};

// Parity-implied forward per ETF share.
struct ForwardObservation {
    TradingDate date;
    TradingDate expiration;
    double strike = 0.0;
    YearFraction tau;
    double rate = 0.0;
    double forward_etf = 0.0;
};

namespace parity {

// (bid + ask)/2 exactly. Throws DomainError "InvertedQuote" if ask < bid.
double midquote(double bid, double ask);

// Calendar days to expiration / 365. Throws DomainError "NegativeTenor".
YearFraction year_fraction(TradingDate date, TradingDate expiration);

// F = K + e^{r tau} (call_mid - put_mid).
// Throws DomainError "NonPositiveForward" when the implied forward is <= 0.
ForwardObservation pcp_forward(const OptionPair& pair, double rate, YearFraction tau);

} // namespace parity
} // namespace wedge
