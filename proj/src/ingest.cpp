#include "wedge/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace wedge::ingest {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (true) {
        size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(pos));
            break;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

double parse_double(std::string_view s, size_t line) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError("BadRow", line, "bad numeric field '" + std::string(s) + "'");
    if (!std::isfinite(v))
        throw ParseError("BadRow", line, "non-finite numeric field");
    return v;
}

std::int64_t parse_int(std::string_view s, size_t line) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError("BadRow", line, "bad integer field '" + std::string(s) + "'");
    return v;
}

TradingDate parse_date(std::string_view s, size_t line) {
    try {
        return TradingDate::parse(std::string(s));
    } catch (const std::invalid_argument& e) {
        throw ParseError("BadRow", line, e.what());
    }
}

// Header check + per-row callback; rows are 1-based line numbers.
template <typename Fn>
void for_each_row(std::string_view text, std::string_view header, Fn&& fn) {
    auto lines = split_lines(text);
    if (lines.empty() || lines[0] != header)
        throw ParseError("MalformedHeader", 1,
                         "expected '" + std::string(header) + "'");
    const size_t ncols = split_fields(header).size();
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto fields = split_fields(lines[i]);
        if (fields.size() != ncols)
            throw ParseError("BadRow", i + 1, "expected " + std::to_string(ncols) +
                                                  " fields, got " +
                                                  std::to_string(fields.size()));
        fn(fields, i + 1);
    }
}

std::string fmt_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

} // namespace

std::vector<OptionQuote> parse_option_quotes(std::string_view text) {
    std::vector<OptionQuote> out;
    for_each_row(text, "date,expiration,strike,right,bid,ask,open_interest",
                 [&](const auto& f, size_t line) {
        OptionQuote q;
        q.date = parse_date(f[0], line);
        q.expiration = parse_date(f[1], line);
        q.strike = parse_double(f[2], line);
        if (f[3] == "C") q.right = OptionRight::Call;
        else if (f[3] == "P") q.right = OptionRight::Put;
        else throw ParseError("BadRow", line, "invalid right code '" + std::string(f[3]) + "'");
        q.bid = parse_double(f[4], line);
        q.ask = parse_double(f[5], line);
        q.open_interest = parse_int(f[6], line);
        if (q.expiration < q.date)
            throw ParseError("BadRow", line, "expiration before quote date");
        if (q.strike <= 0)
            throw ParseError("BadRow", line, "strike must be positive");
        if (q.bid < 0)
            throw ParseError("BadRow", line, "negative bid");
        if (q.ask < q.bid)
            throw ParseError("BadRow", line, "ask below bid");
        if (q.open_interest < 0)
            throw ParseError("BadRow", line, "negative open interest");
        out.push_back(q);
    });
    return out;
}

std::vector<EtfClose> parse_etf_closes(std::string_view text) {
    std::vector<EtfClose> out;
    std::set<TradingDate> seen;
    for_each_row(text, "date,close", [&](const auto& f, size_t line) {
        EtfClose r;
        r.date = parse_date(f[0], line);
        r.close = parse_double(f[1], line);
        if (r.close <= 0)
            throw ParseError("NonPositiveValue", line, "close must be positive");
        if (!seen.insert(r.date).second)
            throw ParseError("DuplicateDate", line, r.date.to_string());
        out.push_back(r);
    });
    return out;
}

std::vector<HoldingsRecord> parse_holdings(std::string_view text) {
    std::vector<HoldingsRecord> out;
    std::set<TradingDate> seen;
    for_each_row(text, "date,btc_holdings,shares_outstanding",
                 [&](const auto& f, size_t line) {
        HoldingsRecord r;
        r.date = parse_date(f[0], line);
        r.btc_holdings = parse_double(f[1], line);
        r.shares_outstanding = parse_double(f[2], line);
        if (r.btc_holdings <= 0 || r.shares_outstanding <= 0)
            throw ParseError("NonPositiveValue", line,
                             "holdings and shares must be positive");
        if (!seen.insert(r.date).second)
            throw ParseError("DuplicateDate", line, r.date.to_string());
        out.push_back(r);
    });
    return out;
}

std::vector<FuturesQuote> parse_futures(std::string_view text) {
    std::vector<FuturesQuote> out;
    std::set<std::pair<TradingDate, std::string>> seen;
    for_each_row(text, "date,contract_code,expiration,close",
                 [&](const auto& f, size_t line) {
        FuturesQuote r;
        r.date = parse_date(f[0], line);
        r.contract_code = std::string(f[1]);
        r.expiration = parse_date(f[2], line);
        r.close = parse_double(f[3], line);
        if (r.contract_code.empty())
            throw ParseError("BadRow", line, "empty contract code");
        if (r.expiration < r.date)
            throw ParseError("BadRow", line, "expiration before quote date");
        if (r.close <= 0)
            throw ParseError("NonPositiveValue", line, "close must be positive");
        if (!seen.insert({r.date, r.contract_code}).second)
            throw ParseError("DuplicateDate", line,
                             r.date.to_string() + "/" + r.contract_code);
        out.push_back(r);
    });
    return out;
}

std::vector<ReferenceRate> parse_refrate(std::string_view text) {
    std::vector<ReferenceRate> out;
    std::set<TradingDate> seen;
    for_each_row(text, "date,value", [&](const auto& f, size_t line) {
        ReferenceRate r;
        r.date = parse_date(f[0], line);
        r.value = parse_double(f[1], line);
        if (r.value <= 0)
            throw ParseError("NonPositiveValue", line, "value must be positive");
        if (!seen.insert(r.date).second)
            throw ParseError("DuplicateDate", line, r.date.to_string());
        out.push_back(r);
    });
    return out;
}

std::vector<RiskFreeRate> parse_rates(std::string_view text) {
    std::vector<RiskFreeRate> out;
    std::set<TradingDate> seen;
    for_each_row(text, "date,rate", [&](const auto& f, size_t line) {
        RiskFreeRate r;
        r.date = parse_date(f[0], line);
        r.rate = parse_double(f[1], line);
        if (!seen.insert(r.date).second)
            throw ParseError("DuplicateDate", line, r.date.to_string());
        out.push_back(r);
    });
    return out;
}

std::string to_csv(const std::vector<OptionQuote>& rows) {
    std::ostringstream os;
    os << "date,expiration,strike,right,bid,ask,open_interest\n";
    for (const auto& q : rows)
        os << q.date.to_string() << ',' << q.expiration.to_string() << ','
           << fmt_double(q.strike) << ','
           << (q.right == OptionRight::Call ? 'C' : 'P') << ','
           << fmt_double(q.bid) << ',' << fmt_double(q.ask) << ','
           << q.open_interest << '\n';
    return os.str();
}

std::string to_csv(const std::vector<EtfClose>& rows) {
    std::ostringstream os;
    os << "date,close\n";
    for (const auto& r : rows)
        os << r.date.to_string() << ',' << fmt_double(r.close) << '\n';
    return os.str();
}

std::string to_csv(const std::vector<HoldingsRecord>& rows) {
    std::ostringstream os;
    os << "date,btc_holdings,shares_outstanding\n";
    for (const auto& r : rows)
        os << r.date.to_string() << ',' << fmt_double(r.btc_holdings) << ','
           << fmt_double(r.shares_outstanding) << '\n';
    return os.str();
}

std::string to_csv(const std::vector<FuturesQuote>& rows) {
    std::ostringstream os;
    os << "date,contract_code,expiration,close\n";
    for (const auto& r : rows)
        os << r.date.to_string() << ',' << r.contract_code << ','
           << r.expiration.to_string() << ',' << fmt_double(r.close) << '\n';
    return os.str();
}

std::string to_csv(const std::vector<ReferenceRate>& rows) {
    std::ostringstream os;
    os << "date,value\n";
    for (const auto& r : rows)
        os << r.date.to_string() << ',' << fmt_double(r.value) << '\n';
    return os.str();
}

std::string to_csv(const std::vector<RiskFreeRate>& rows) {
    std::ostringstream os;
    os << "date,rate\n";
    for (const auto& r : rows)
        os << r.date.to_string() << ',' << fmt_double(r.rate) << '\n';
    return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// Strips surrounding quotes and thousands separators: `"880,000,000"` -> 880000000.
std::optional<double> parse_loose_number(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s.remove_prefix(1);
        s.remove_suffix(1);
    }
    std::string cleaned;
    cleaned.reserve(s.size());
    for (char c : s)
        if (c != ',') cleaned.push_back(c);
    if (cleaned.empty()) return std::nullopt;
    double v = 0.0;
    auto [p, ec] = std::from_chars(cleaned.data(), cleaned.data() + cleaned.size(), v);
    if (ec != std::errc{} || p != cleaned.data() + cleaned.size()) return std::nullopt;
    return v;
}

// Splits a vendor CSV line respecting double-quoted fields.
std::vector<std::string> split_quoted(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_quotes = false;
    for (char c : line) {
        if (c == '"') {
            in_quotes = !in_quotes;
            cur.push_back(c);
        } else if (c == ',' && !in_quotes) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::optional<TradingDate> parse_loose_date(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s.remove_prefix(1);
        s.remove_suffix(1);
        s = trim(s);
    }
    try {
        return TradingDate::parse(std::string(s));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
    auto it = std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end(),
                          [](char a, char b) {
                              return std::tolower(static_cast<unsigned char>(a)) ==
                                     std::tolower(static_cast<unsigned char>(b));
                          });
    return it != haystack.end();
}

} // namespace

HoldingsRecord adapt_vendor_holdings(std::string_view text) {
    std::optional<TradingDate> as_of;
    std::optional<double> shares;
    std::optional<double> btc_qty;

    for (std::string_view line : split_lines(text)) {
        if (trim(line).empty()) continue;
        auto fields = split_quoted(line);
        const std::string_view key = trim(fields[0]);

        if (contains_ci(key, "shares outstanding") && fields.size() >= 2 && !shares) {
            shares = parse_loose_number(fields[1]);
        } else if ((contains_ci(key, "as of") || contains_ci(key, "date")) &&
                   fields.size() >= 2 && !as_of) {
            as_of = parse_loose_date(fields[1]);
        } else if (key == "BTC" && !btc_qty) {
            // Holdings table row: quantity is the last parseable numeric field.
            for (auto it = fields.rbegin(); it != fields.rend() - 1; ++it) {
                if (auto v = parse_loose_number(*it)) {
                    btc_qty = v;
                    break;
                }
            }
        }
    }

    if (!btc_qty)
        throw ParseError("MissingBitcoinRow", 0, "no BTC holdings row found");
    if (!shares)
        throw ParseError("MissingSharesOutstanding", 0, "no shares-outstanding line found");
    if (!as_of)
        throw ParseError("MissingAsOfDate", 0, "no as-of date line found");
    if (*btc_qty <= 0 || *shares <= 0)
        throw ParseError("NonPositiveValue", 0, "holdings and shares must be positive");

    return HoldingsRecord{*as_of, *btc_qty, *shares};
}

AlignedRate align_rate(TradingDate date, const std::vector<RiskFreeRate>& rates) {
    // Last record with date <= target.
    auto it = std::upper_bound(rates.begin(), rates.end(), date,
                               [](TradingDate d, const RiskFreeRate& r) { return d < r.date; });
    if (it == rates.begin())
        throw DomainError("NoUsableRate", "no rate on or before " + date.to_string());
    --it;
    const int gap = days_between(it->date, date);
    if (gap > 7)
        throw DomainError("NoUsableRate",
                          "nearest rate is " + std::to_string(gap) + " days stale at " +
                              date.to_string());
    return AlignedRate{*it, gap};
}

} // namespace wedge::ingest
