#include "wedge/synth.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "wedge/ingest.hpp"
#include "wedge/records.hpp"

namespace wedge::synth {

namespace {

void validate(const SynthConfig& c) {
    const auto bad = [](bool cond) { return cond; };
    if (bad(c.n_days <= 0) || bad(c.btc_spot_start <= 0) || bad(c.spot_vol < 0) ||
        bad(c.q0 <= 0) || bad(c.shares_outstanding <= 0) ||
        bad(c.half_spread_rel < 0) || bad(c.half_spread_rel >= 0.05) ||
        bad(c.strikes_per_expiry <= 0) || bad(c.strike_step_rel <= 0) ||
        bad(c.oi_range.first < 100) || bad(c.oi_range.second < c.oi_range.first) ||
        bad(c.expense_ratio < 0) || bad(c.buckets.empty()))
        throw DomainError("ConfigError", "invalid synthetic generator settings");
    for (const auto& b : c.buckets)
        if (b.min_days > b.target_days || b.target_days > b.max_days)
            throw DomainError("ConfigError", "bucket target outside its range");
}

std::string fmt_pp(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

SynthDataset generate(const SynthConfig& cfg) {
    validate(cfg);

    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_int_distribution<std::int64_t> oi_draw(cfg.oi_range.first,
                                                        cfg.oi_range.second);

    std::vector<OptionQuote> options;
    std::vector<EtfClose> closes;
    std::vector<HoldingsRecord> holdings;
    std::vector<FuturesQuote> futures;
    std::vector<ReferenceRate> refrates;
    std::vector<RiskFreeRate> rates;
    std::vector<GroundTruthRow> truth;

    const double daily_vol = cfg.spot_vol / std::sqrt(365.0);
    const double true_wedge =
        cfg.cme_carry_true - (cfg.etf_carry_true + cfg.expense_ratio);

    double spot = cfg.btc_spot_start;
    for (int d = 0; d < cfg.n_days; ++d) {
        const TradingDate date = cfg.start_date.plus_days(d);
        if (d > 0) spot *= std::exp(daily_vol * gauss(rng));

        const double etf_close = spot * cfg.q0;
        refrates.push_back({date, spot});
        closes.push_back({date, etf_close});
        holdings.push_back({date, cfg.q0 * cfg.shares_outstanding, cfg.shares_outstanding});
        rates.push_back({date, cfg.rate});

        for (const auto& bucket : cfg.buckets) {
            const int tenor_days = bucket.target_days;
            const TradingDate expiry = date.plus_days(tenor_days);
            const double tau = tenor_days / 365.0;
            const double forward = etf_close * std::pow(1.0 + cfg.etf_carry_true, tau);
            const double discount = std::exp(-cfg.rate * tau);
            const double cushion = 0.01 * etf_close;

            const int center = cfg.strikes_per_expiry / 2;
            for (int i = 0; i < cfg.strikes_per_expiry; ++i) {
                const double strike =
                    etf_close * (1.0 + cfg.strike_step_rel * (i - center));
                // Parity pins C - P; the call level only needs to keep both
                // legs positive.
                const double parity_gap = discount * (forward - strike);
                const double call_mid = std::max(0.0, etf_close - strike) +
                                        std::max(0.0, parity_gap) + cushion;
                const double put_mid = call_mid - parity_gap;

                const std::int64_t call_oi = oi_draw(rng);
                const std::int64_t put_oi = oi_draw(rng);
                const double ch = call_mid * cfg.half_spread_rel;
                const double ph = put_mid * cfg.half_spread_rel;
                options.push_back({date, expiry, strike, OptionRight::Call,
                                   call_mid - ch, call_mid + ch, call_oi});
                options.push_back({date, expiry, strike, OptionRight::Put,
                                   put_mid - ph, put_mid + ph, put_oi});
            }

            const TradingDate fut_expiry = expiry.plus_days(cfg.futures_offset_days);
            const int fut_days = days_between(date, fut_expiry);
            if (fut_days >= 1) {
                const double fut_tau = fut_days / 365.0;
                const double fut_close = spot * std::pow(1.0 + cfg.cme_carry_true, fut_tau);
                std::string code = "BTC" + fut_expiry.to_string();
                futures.push_back({date, std::move(code), fut_expiry, fut_close});
            }

            truth.push_back({date, bucket.label, true_wedge * 100.0});
        }
    }

    SynthDataset ds;
    ds.options_csv = ingest::to_csv(options);
    ds.etf_close_csv = ingest::to_csv(closes);
    ds.holdings_csv = ingest::to_csv(holdings);
    ds.futures_csv = ingest::to_csv(futures);
    ds.refrate_csv = ingest::to_csv(refrates);
    ds.rates_csv = ingest::to_csv(rates);

    std::string gt = "date,bucket,true_wedge_pp\n";
    for (const auto& row : truth)
        gt += row.date.to_string() + "," + row.bucket + "," + fmt_pp(row.true_wedge_pp) + "\n";
    ds.ground_truth_csv = std::move(gt);
    ds.ground_truth = std::move(truth);
    return ds;
}

} // namespace wedge::synth
