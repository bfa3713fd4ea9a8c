#pragma once

#include <string>
#include <vector>

#include "wedge/errors.hpp"
#include "wedge/parity.hpp"
#include "wedge/records.hpp"

namespace wedge {

// Bitcoin represented by one ETF share.
struct HoldingsRatio {
    TradingDate date;
    double q = 0.0;
};

struct ExpenseRatio {
    double annual = 0.0025;
};

// One (date, bucket) row of the wedge series.
struct CarryObservation {
    TradingDate date;
    std::string bucket_label;
    double strike = 0.0;
    TradingDate option_expiration;
    double option_tau = 0.0;
    std::string futures_code;
    TradingDate futures_expiration;
    double futures_tau = 0.0;
    double forward_etf = 0.0;
    double implied_btc_forward = 0.0;
    double etf_carry_raw = 0.0;  // decimal per year
    double etf_carry_adj = 0.0;
    double cme_carry = 0.0;
    double wedge = 0.0; // cme_carry - etf_carry_adj
};

namespace carry {

HoldingsRatio holdings_ratio(const HoldingsRecord& record);

// ratio^(1/tau) - 1. Throws DomainError "ZeroTenor" when tau = 0.
double effective_annual_carry(double ratio, double tau);

struct EtfCarry {
    double raw = 0.0;
    double adjusted = 0.0;
};

// raw = effective_annual_carry(forward_etf / etf_close, option tau);
// adjusted = raw + fee.
EtfCarry etf_carry(const ForwardObservation& fwd, double etf_close, ExpenseRatio fee);

// Contract minimizing |futures expiration - option expiration| in calendar
// days, ties to the earlier expiration; contracts with < 1 remaining day are
// excluded. Throws DomainError "NoMatchableContract".
FuturesQuote match_futures(TradingDate option_expiration, TradingDate date,
                           const std::vector<FuturesQuote>& futures_on_date);

// effective_annual_carry(close / refrate, remaining_days/365).
double cme_carry(const FuturesQuote& fut, const ReferenceRate& refrate, TradingDate date);

inline double wedge(double cme, double etf_adj) { return cme - etf_adj; }

} // namespace carry
} // namespace wedge
