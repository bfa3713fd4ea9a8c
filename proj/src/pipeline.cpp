#include "wedge/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "wedge/ingest.hpp"
#include "wedge/parity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wedge::pipeline {

namespace {

struct PairKey {
    TradingDate date;
    TradingDate expiration;
    double strike;
    auto operator<=>(const PairKey&) const = default;
};

// Everything indexed for one trading date.
struct DateSlice {
    TradingDate date;
    double etf_close = 0.0;
    double rate = 0.0;
    HoldingsRatio holdings;
    const ReferenceRate* refrate = nullptr;
    std::vector<const OptionPair*> pairs;
    std::vector<FuturesQuote> futures;
};

// Per-date output, merged sequentially afterwards so both execution paths
// produce identical results.
struct DateResult {
    std::vector<CarryObservation> observations;
    std::vector<DropRecord> drops;
    std::size_t pairs_passing = 0;
    std::size_t selections = 0;
};

DateResult process_date(const DateSlice& slice, const PipelineConfig& cfg) {
    DateResult out;

    // Global liquidity/tenor filters once per pair.
    std::vector<const OptionPair*> passing;
    for (const OptionPair* p : slice.pairs) {
        if (select::passes_filters(*p, slice.etf_close, cfg.filters).pass)
            passing.push_back(p);
    }
    out.pairs_passing = passing.size();

    for (const auto& bucket : cfg.buckets) {
        std::vector<OptionPair> candidates;
        for (const OptionPair* p : passing) {
            const int days = days_between(p->date, p->expiration);
            if (days >= bucket.min_days && days <= bucket.max_days)
                candidates.push_back(*p);
        }
        auto selected = select::select_pair(slice.date, bucket, candidates, slice.etf_close);
        if (!selected) continue;
        ++out.selections;

        try {
            const auto tau =
                parity::year_fraction(slice.date, selected->pair.expiration);
            const auto fwd = parity::pcp_forward(selected->pair, slice.rate, tau);
            const auto leg = carry::etf_carry(fwd, slice.etf_close, cfg.fee);
            const auto fut =
                carry::match_futures(fwd.expiration, slice.date, slice.futures);
            const double cme = carry::cme_carry(fut, *slice.refrate, slice.date);

            CarryObservation obs;
            obs.date = slice.date;
            obs.bucket_label = bucket.label;
            obs.strike = fwd.strike;
            obs.option_expiration = fwd.expiration;
            obs.option_tau = tau.tau;
            obs.futures_code = fut.contract_code;
            obs.futures_expiration = fut.expiration;
            obs.futures_tau = days_between(slice.date, fut.expiration) / 365.0;
            obs.forward_etf = fwd.forward_etf;
            obs.implied_btc_forward = fwd.forward_etf / slice.holdings.q;
            obs.etf_carry_raw = leg.raw;
            obs.etf_carry_adj = leg.adjusted;
            obs.cme_carry = cme;
            obs.wedge = carry::wedge(cme, leg.adjusted);
            out.observations.push_back(std::move(obs));
        } catch (const DomainError& e) {
            out.drops.push_back({slice.date, bucket.label, e.kind()});
        }
    }
    return out;
}

void record_drop(RunReport& report, DropRecord rec) {
    ++report.drops_by_reason[rec.reason];
    report.drop_log.push_back(std::move(rec));
}

PipelineResult run_impl(const ParsedInputs& inputs, const PipelineConfig& cfg,
                        bool parallel) {
    PipelineResult result;
    RunReport& report = result.report;
    report.rows_options = inputs.options.size();
    report.rows_etf = inputs.etf_closes.size();
    report.rows_holdings = inputs.holdings.size();
    report.rows_futures = inputs.futures.size();
    report.rows_refrate = inputs.refrates.size();
    report.rows_rates = inputs.rates.size();

    const auto pairs = build_pairs(inputs.options, report.drop_log);
    for (const auto& rec : report.drop_log) ++report.drops_by_reason[rec.reason];
    report.pairs_formed = pairs.size();

    std::map<TradingDate, double> close_by_date;
    for (const auto& r : inputs.etf_closes) close_by_date[r.date] = r.close;
    std::map<TradingDate, HoldingsRatio> q_by_date;
    for (const auto& r : inputs.holdings) q_by_date[r.date] = carry::holdings_ratio(r);
    std::map<TradingDate, const ReferenceRate*> ref_by_date;
    for (const auto& r : inputs.refrates) ref_by_date[r.date] = &r;
    std::map<TradingDate, std::vector<FuturesQuote>> futures_by_date;
    for (const auto& f : inputs.futures) futures_by_date[f.date].push_back(f);

    std::map<TradingDate, std::vector<const OptionPair*>> pairs_by_date;
    for (const auto& p : pairs) pairs_by_date[p.date].push_back(&p);

    auto rates = inputs.rates;
    std::sort(rates.begin(), rates.end(),
              [](const RiskFreeRate& a, const RiskFreeRate& b) { return a.date < b.date; });

    // Assemble complete slices; dates missing a required series drop here.
    std::vector<DateSlice> slices;
    for (auto& [date, date_pairs] : pairs_by_date) {
        DateSlice slice;
        slice.date = date;
        slice.pairs = date_pairs;

        auto close_it = close_by_date.find(date);
        if (close_it == close_by_date.end()) {
            record_drop(report, {date, "", "MissingEtfClose"});
            continue;
        }
        slice.etf_close = close_it->second;

        auto q_it = q_by_date.find(date);
        if (q_it == q_by_date.end()) {
            record_drop(report, {date, "", "MissingHoldings"});
            continue;
        }
        slice.holdings = q_it->second;

        auto ref_it = ref_by_date.find(date);
        if (ref_it == ref_by_date.end()) {
            record_drop(report, {date, "", "MissingReference"});
            continue;
        }
        slice.refrate = ref_it->second;

        try {
            slice.rate = ingest::align_rate(date, rates).rate.rate;
        } catch (const DomainError& e) {
            record_drop(report, {date, "", e.kind()});
            continue;
        }

        if (auto fut_it = futures_by_date.find(date); fut_it != futures_by_date.end())
            slice.futures = fut_it->second;

        slices.push_back(std::move(slice));
    }

    std::vector<DateResult> per_date(slices.size());
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(slices.size()); ++i)
            per_date[static_cast<std::size_t>(i)] =
                process_date(slices[static_cast<std::size_t>(i)], cfg);
    } else {
        for (std::size_t i = 0; i < slices.size(); ++i)
            per_date[i] = process_date(slices[i], cfg);
    }

    // Deterministic merge in date order; slices are already date-sorted.
    for (auto& dr : per_date) {
        report.pairs_passing_filters += dr.pairs_passing;
        report.selections_made += dr.selections;
        for (auto& rec : dr.drops) record_drop(report, std::move(rec));
        for (auto& obs : dr.observations) result.observations.push_back(std::move(obs));
    }
    report.observations_emitted = result.observations.size();

    std::sort(result.observations.begin(), result.observations.end(),
              [](const CarryObservation& a, const CarryObservation& b) {
                  return std::tie(a.date, a.bucket_label) < std::tie(b.date, b.bucket_label);
              });
    return result;
}

} // namespace

std::vector<OptionPair> build_pairs(const std::vector<OptionQuote>& quotes,
                                    std::vector<DropRecord>& drop_log) {
    std::map<PairKey, std::pair<const OptionQuote*, const OptionQuote*>> merged;
    std::set<PairKey> duplicated;
    for (const auto& q : quotes) {
        const PairKey key{q.date, q.expiration, q.strike};
        auto& slot = merged[key];
        const OptionQuote*& leg =
            (q.right == OptionRight::Call) ? slot.first : slot.second;
        if (leg) {
            duplicated.insert(key);
            continue;
        }
        leg = &q;
    }

    std::vector<OptionPair> pairs;
    for (const auto& [key, legs] : merged) {
        if (duplicated.contains(key)) {
            drop_log.push_back({key.date, "", "DuplicateLeg"});
            continue;
        }
        const auto [call, put] = legs;
        if (!call || !put) continue; // unmatched single leg, not an error
        OptionPair p;
        p.date = key.date;
        p.expiration = key.expiration;
        p.strike = key.strike;
        p.call_bid = call->bid;
        p.call_ask = call->ask;
        p.put_bid = put->bid;
        p.put_ask = put->ask;
        p.call_oi = call->open_interest;
        p.put_oi = put->open_interest;
        p.call_mid = parity::midquote(call->bid, call->ask);
        p.put_mid = parity::midquote(put->bid, put->ask);
        pairs.push_back(p);
    }
    return pairs;
}

PipelineResult run_serial(const ParsedInputs& inputs, const PipelineConfig& cfg) {
    return run_impl(inputs, cfg, false);
}

PipelineResult run_parallel(const ParsedInputs& inputs, const PipelineConfig& cfg) {
    return run_impl(inputs, cfg, true);
}

} // namespace wedge::pipeline
