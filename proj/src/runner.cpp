#include "wedge/runner.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "wedge/ingest.hpp"

namespace wedge::runner {

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DomainError("ConfigError", "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DomainError("ConfigError", "cannot write " + path.string());
    out << contents;
}

std::map<std::string, std::string> read_kv_file(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::istringstream in(read_file(path));
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("ConfigError", lineno, "expected key=value in " + path);
        std::string key = line.substr(start, eq - start);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        std::string value = line.substr(eq + 1);
        const size_t vstart = value.find_first_not_of(" \t");
        value = (vstart == std::string::npos) ? "" : value.substr(vstart);
        if (kv.count(key))
            throw ParseError("ConfigError", lineno, "duplicate key '" + key + "'");
        kv[key] = value;
    }
    return kv;
}

double to_double(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return d;
    } catch (const std::exception&) {
        throw DomainError("ConfigError", "bad numeric value for " + key + ": '" + v + "'");
    }
}

long long to_int(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        const long long i = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return i;
    } catch (const std::exception&) {
        throw DomainError("ConfigError", "bad integer value for " + key + ": '" + v + "'");
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw DomainError("ConfigError", "bad boolean value for " + key + ": '" + v + "'");
}

std::string fmt(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

void check_buckets_disjoint(const std::vector<BucketSpec>& buckets) {
    for (size_t i = 0; i < buckets.size(); ++i)
        for (size_t j = i + 1; j < buckets.size(); ++j)
            if (buckets[i].min_days <= buckets[j].max_days &&
                buckets[j].min_days <= buckets[i].max_days)
                throw DomainError("ConfigError", "bucket ranges overlap: " +
                                                     buckets[i].label + ", " +
                                                     buckets[j].label);
}

} // namespace

std::vector<BucketSpec> parse_buckets(const std::string& text) {
    std::vector<BucketSpec> buckets;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        if (part.empty()) continue;
        std::istringstream ps(part);
        BucketSpec b;
        std::string field;
        if (!std::getline(ps, b.label, ':'))
            throw DomainError("ConfigError", "bad bucket spec '" + part + "'");
        try {
            std::getline(ps, field, ':');
            b.min_days = static_cast<int>(to_int("bucket", field));
            std::getline(ps, field, ':');
            b.max_days = static_cast<int>(to_int("bucket", field));
            std::getline(ps, field, ':');
            b.target_days = static_cast<int>(to_int("bucket", field));
        } catch (const std::exception&) {
            throw DomainError("ConfigError", "bad bucket spec '" + part + "'");
        }
        if (b.min_days > b.target_days || b.target_days > b.max_days)
            throw DomainError("ConfigError",
                              "bucket target outside range in '" + part + "'");
        buckets.push_back(std::move(b));
    }
    if (buckets.empty())
        throw DomainError("ConfigError", "no buckets configured");
    check_buckets_disjoint(buckets);
    return buckets;
}

RunConfig load_run_config(const std::string& path) {
    RunConfig cfg;
    for (const auto& [key, value] : read_kv_file(path)) {
        if (key == "options") cfg.options_path = value;
        else if (key == "etf_closes") cfg.etf_closes_path = value;
        else if (key == "holdings") cfg.holdings_path = value;
        else if (key == "futures") cfg.futures_path = value;
        else if (key == "refrate") cfg.refrate_path = value;
        else if (key == "rates") cfg.rates_path = value;
        else if (key == "out") cfg.out_dir = value;
        else if (key == "strict") cfg.strict = to_bool(key, value);
        else if (key == "parallel") cfg.parallel = to_bool(key, value);
        else if (key == "expense_ratio") cfg.pipeline.fee.annual = to_double(key, value);
        else if (key == "min_days") cfg.pipeline.filters.min_days = (int)to_int(key, value);
        else if (key == "max_days") cfg.pipeline.filters.max_days = (int)to_int(key, value);
        else if (key == "max_abs_moneyness")
            cfg.pipeline.filters.max_abs_moneyness = to_double(key, value);
        else if (key == "max_rel_spread")
            cfg.pipeline.filters.max_rel_spread = to_double(key, value);
        else if (key == "min_open_interest")
            cfg.pipeline.filters.min_open_interest = to_int(key, value);
        else if (key == "buckets") cfg.pipeline.buckets = parse_buckets(value);
        else throw DomainError("ConfigError", "unknown config key '" + key + "'");
    }
    check_buckets_disjoint(cfg.pipeline.buckets);
    return cfg;
}

SynthConfig load_synth_config(const std::string& path) {
    SynthConfig cfg;
    for (const auto& [key, value] : read_kv_file(path)) {
        if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_int(key, value));
        else if (key == "n_days") cfg.n_days = (int)to_int(key, value);
        else if (key == "start_date") cfg.start_date = TradingDate::parse(value);
        else if (key == "btc_spot_start") cfg.btc_spot_start = to_double(key, value);
        else if (key == "spot_vol") cfg.spot_vol = to_double(key, value);
        else if (key == "rate") cfg.rate = to_double(key, value);
        else if (key == "expense_ratio") cfg.expense_ratio = to_double(key, value);
        else if (key == "q0") cfg.q0 = to_double(key, value);
        else if (key == "shares_outstanding") cfg.shares_outstanding = to_double(key, value);
        else if (key == "etf_carry_true") cfg.etf_carry_true = to_double(key, value);
        else if (key == "cme_carry_true") cfg.cme_carry_true = to_double(key, value);
        else if (key == "half_spread_rel") cfg.half_spread_rel = to_double(key, value);
        else if (key == "strikes_per_expiry") cfg.strikes_per_expiry = (int)to_int(key, value);
        else if (key == "strike_step_rel") cfg.strike_step_rel = to_double(key, value);
        else if (key == "oi_min") cfg.oi_range.first = to_int(key, value);
        else if (key == "oi_max") cfg.oi_range.second = to_int(key, value);
        else if (key == "futures_offset_days")
            cfg.futures_offset_days = (int)to_int(key, value);
        else if (key == "buckets") cfg.buckets = parse_buckets(value);
        else throw DomainError("ConfigError", "unknown config key '" + key + "'");
    }
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& log) {
    for (const std::string* p : {&cfg.options_path, &cfg.etf_closes_path,
                                 &cfg.holdings_path, &cfg.futures_path,
                                 &cfg.refrate_path, &cfg.rates_path}) {
        if (p->empty()) {
            log << "config error: all six input paths must be set\n";
            return kExitConfig;
        }
        if (!fs::exists(*p)) {
            log << "config error: input file not found: " << *p << "\n";
            return kExitConfig;
        }
    }

    ParsedInputs inputs;
    try {
        inputs.options = ingest::parse_option_quotes(read_file(cfg.options_path));
        inputs.etf_closes = ingest::parse_etf_closes(read_file(cfg.etf_closes_path));
        inputs.holdings = ingest::parse_holdings(read_file(cfg.holdings_path));
        inputs.futures = ingest::parse_futures(read_file(cfg.futures_path));
        inputs.refrates = ingest::parse_refrate(read_file(cfg.refrate_path));
        inputs.rates = ingest::parse_rates(read_file(cfg.rates_path));
    } catch (const ParseError& e) {
        log << "parse error: " << e.what() << "\n";
        return kExitParse;
    }

    const auto result = cfg.parallel ? pipeline::run_parallel(inputs, cfg.pipeline)
                                     : pipeline::run_serial(inputs, cfg.pipeline);
    const auto& obs = result.observations;
    const auto& report = result.report;

    fs::create_directories(cfg.out_dir);
    const fs::path out(cfg.out_dir);

    {
        std::string csv =
            "date,bucket,strike,option_expiration,option_tau,futures_code,"
            "futures_expiration,etf_carry_raw_pp,etf_carry_adj_pp,cme_carry_pp,wedge_pp\n";
        for (const auto& o : obs) {
            csv += o.date.to_string() + ',' + o.bucket_label + ',' + fmt(o.strike, 6) +
                   ',' + o.option_expiration.to_string() + ',' + fmt(o.option_tau, 6) +
                   ',' + o.futures_code + ',' + o.futures_expiration.to_string() + ',' +
                   fmt(o.etf_carry_raw * 100.0, 6) + ',' +
                   fmt(o.etf_carry_adj * 100.0, 6) + ',' + fmt(o.cme_carry * 100.0, 6) +
                   ',' + fmt(o.wedge * 100.0, 6) + '\n';
        }
        write_file(out / "wedge_timeseries.csv", csv);
    }
    {
        std::string csv = "date,bucket,cme_carry_pp,etf_carry_adj_pp\n";
        for (const auto& o : obs)
            csv += o.date.to_string() + ',' + o.bucket_label + ',' +
                   fmt(o.cme_carry * 100.0, 6) + ',' + fmt(o.etf_carry_adj * 100.0, 6) +
                   '\n';
        write_file(out / "carry_comparison.csv", csv);
    }

    std::vector<std::string> bucket_order;
    for (const auto& b : cfg.pipeline.buckets) bucket_order.push_back(b.label);
    const auto rows = stats::bucket_summaries(obs, bucket_order);
    {
        std::string csv = "group,n,mean_pp,sd_pp,p05_pp,median_pp,p95_pp\n";
        for (const auto& r : rows)
            csv += r.group + ',' + std::to_string(r.n) + ',' + fmt(r.mean, 3) + ',' +
                   fmt(r.sd, 3) + ',' + fmt(r.p05, 3) + ',' + fmt(r.median, 3) + ',' +
                   fmt(r.p95, 3) + '\n';
        write_file(out / "summary_stats.csv", csv);
    }
    {
        std::string csv = "bucket,n,mean_pp,median_pp,sd_pp\n";
        for (const auto& r : rows) {
            if (r.group == "overall") continue;
            csv += r.group + ',' + std::to_string(r.n) + ',' + fmt(r.mean, 3) + ',' +
                   fmt(r.median, 3) + ',' + fmt(r.sd, 3) + '\n';
        }
        write_file(out / "wedge_by_bucket.csv", csv);
    }
    {
        std::ostringstream rep;
        rep << "rows_options=" << report.rows_options << "\n"
            << "rows_etf_closes=" << report.rows_etf << "\n"
            << "rows_holdings=" << report.rows_holdings << "\n"
            << "rows_futures=" << report.rows_futures << "\n"
            << "rows_refrate=" << report.rows_refrate << "\n"
            << "rows_rates=" << report.rows_rates << "\n"
            << "pairs_formed=" << report.pairs_formed << "\n"
            << "pairs_passing_filters=" << report.pairs_passing_filters << "\n"
            << "selections_made=" << report.selections_made << "\n"
            << "observations_emitted=" << report.observations_emitted << "\n";
        for (const auto& [reason, count] : report.drops_by_reason)
            rep << "dropped_" << reason << "=" << count << "\n";
        write_file(out / "run_report.txt", rep.str());
    }

    for (const auto& rec : report.drop_log)
        log << "dropped " << rec.date.to_string()
            << (rec.bucket.empty() ? "" : " bucket " + rec.bucket) << ": " << rec.reason
            << "\n";

    if (cfg.strict && !report.drop_log.empty()) {
        log << "strict mode: " << report.drop_log.size() << " dates/buckets dropped\n";
        return kExitNoObservations;
    }
    if (obs.empty()) {
        log << "no usable observations\n";
        return kExitNoObservations;
    }
    log << "wrote " << obs.size() << " observations to " << cfg.out_dir << "\n";
    return kExitOk;
}

int run_synth(const SynthConfig& cfg, const std::string& out_dir, std::ostream& log) {
    SynthDataset ds;
    try {
        ds = synth::generate(cfg);
    } catch (const DomainError& e) {
        log << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    fs::create_directories(out_dir);
    const fs::path out(out_dir);
    write_file(out / "options.csv", ds.options_csv);
    write_file(out / "etf_close.csv", ds.etf_close_csv);
    write_file(out / "holdings.csv", ds.holdings_csv);
    write_file(out / "futures.csv", ds.futures_csv);
    write_file(out / "refrate.csv", ds.refrate_csv);
    write_file(out / "rates.csv", ds.rates_csv);
    write_file(out / "ground_truth.csv", ds.ground_truth_csv);
    log << "wrote synthetic dataset to " << out_dir << "\n";
    return kExitOk;
}

} // namespace wedge::runner
