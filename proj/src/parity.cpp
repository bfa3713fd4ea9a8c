#include "wedge/parity.hpp"

#include <cmath>

namespace wedge::parity {

double midquote(double bid, double ask) {
    if (ask < bid)
        throw DomainError("InvertedQuote", "ask below bid");
    return (bid + ask) / 2.0;
}

YearFraction year_fraction(TradingDate date, TradingDate expiration) {
    const int days = days_between(date, expiration);
    if (days < 0)
        throw DomainError("NegativeTenor", "expiration before date");
    return YearFraction{static_cast<double>(days) / 365.0};
}

ForwardObservation pcp_forward(const OptionPair& pair, double rate, YearFraction tau) {
    const double forward =
        pair.strike + std::exp(rate * tau.tau) * (pair.call_mid - pair.put_mid);
    if (forward <= 0.0)
        throw DomainError("NonPositiveForward",
                          "implied forward " + std::to_string(forward) + " at strike " +
                              std::to_string(pair.strike) + " on " + pair.date.to_string());
    return ForwardObservation{pair.date, pair.expiration, pair.strike, tau, rate, forward};
}

} // namespace wedge::parity
