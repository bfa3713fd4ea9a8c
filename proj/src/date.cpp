#include "wedge/date.hpp"

#include <cstdio>

namespace wedge {

TradingDate TradingDate::parse(const std::string& text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-')
        throw std::invalid_argument("expected YYYY-MM-DD, got '" + text + "'");
    for (size_t i = 0; i < text.size(); ++i) {
        if (i == 4 || i == 7) continue;
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("expected YYYY-MM-DD, got '" + text + "'");
    }
    const int y = std::stoi(text.substr(0, 4));
    const unsigned m = static_cast<unsigned>(std::stoi(text.substr(5, 2)));
    const unsigned d = static_cast<unsigned>(std::stoi(text.substr(8, 2)));
    return TradingDate{y, m, d};
}

std::string TradingDate::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year(), month(), day());
    return buf;
}

} // namespace wedge
