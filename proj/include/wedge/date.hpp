#pragma once

#include <chrono>
#include <compare>
#include <stdexcept>
#include <string>

namespace wedge {

// Calendar date with no time-of-day component. Stored as days since the
// civil epoch so ordering and day-count arithmetic are exact.
class TradingDate {
public:
    TradingDate() = default;

    TradingDate(int year, unsigned month, unsigned day) {
        const std::chrono::year_month_day ymd{std::chrono::year{year},
                                              std::chrono::month{month},
                                              std::chrono::day{day}};
        if (!ymd.ok())
            throw std::invalid_argument("invalid calendar date");
        days_ = std::chrono::sys_days{ymd};
    }

    // Parses strict YYYY-MM-DD.
    static TradingDate parse(const std::string& text);

    std::string to_string() const;

    int year() const { return int{std::chrono::year_month_day{days_}.year()}; }
    unsigned month() const { return unsigned{std::chrono::year_month_day{days_}.month()}; }
    unsigned day() const { return unsigned{std::chrono::year_month_day{days_}.day()}; }

    TradingDate plus_days(int n) const {
        TradingDate d;
        d.days_ = days_ + std::chrono::days{n};
        return d;
    }

    // Exact calendar-day difference, b - a.
    friend int days_between(TradingDate a, TradingDate b) {
        return static_cast<int>((b.days_ - a.days_).count());
    }

    auto operator<=>(const TradingDate&) const = default;

private:
    std::chrono::sys_days days_{};
};

} // namespace wedge
