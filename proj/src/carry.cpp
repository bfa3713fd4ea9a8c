#include "wedge/carry.hpp"

#include <algorithm>
#include <cmath>

namespace wedge::carry {

HoldingsRatio holdings_ratio(const HoldingsRecord& record) {
    return HoldingsRatio{record.date, record.btc_holdings / record.shares_outstanding};
}

double effective_annual_carry(double ratio, double tau) {
    if (tau == 0.0)
        throw DomainError("ZeroTenor", "cannot annualize over a zero tenor");
    return std::pow(ratio, 1.0 / tau) - 1.0;
}

EtfCarry etf_carry(const ForwardObservation& fwd, double etf_close, ExpenseRatio fee) {
    const double raw = effective_annual_carry(fwd.forward_etf / etf_close, fwd.tau.tau);
    return EtfCarry{raw, raw + fee.annual};
}

FuturesQuote match_futures(TradingDate option_expiration, TradingDate date,
                           const std::vector<FuturesQuote>& futures_on_date) {
    const FuturesQuote* best = nullptr;
    for (const auto& f : futures_on_date) {
        if (days_between(date, f.expiration) < 1) continue;
        if (!best) {
            best = &f;
            continue;
        }
        const int d = std::abs(days_between(option_expiration, f.expiration));
        const int d_best = std::abs(days_between(option_expiration, best->expiration));
        if (d < d_best || (d == d_best && f.expiration < best->expiration)) best = &f;
    }
    if (!best)
        throw DomainError("NoMatchableContract",
                          "no futures contract with >= 1 remaining day on " +
                              date.to_string());
    return *best;
}

double cme_carry(const FuturesQuote& fut, const ReferenceRate& refrate, TradingDate date) {
    const int remaining = days_between(date, fut.expiration);
    return effective_annual_carry(fut.close / refrate.value,
                                  static_cast<double>(remaining) / 365.0);
}

} // namespace wedge::carry
