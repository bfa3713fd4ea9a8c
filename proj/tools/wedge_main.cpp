#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "wedge/runner.hpp"

using namespace wedge;

int main(int argc, char** argv) {
    CLI::App app{"Financing-carry wedge pipeline: parity-implied ETF forwards vs "
                 "matched futures carry"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Run the full pipeline");
    std::string run_config_path;
    std::string opt_options, opt_etf, opt_holdings, opt_futures, opt_refrate, opt_rates;
    std::string opt_out;
    bool opt_strict = false;
    bool opt_serial = false;
    run_cmd->add_option("--config", run_config_path, "key=value config file")->required();
    run_cmd->add_option("--options", opt_options, "options.csv path");
    run_cmd->add_option("--etf-closes", opt_etf, "etf_close.csv path");
    run_cmd->add_option("--holdings", opt_holdings, "holdings.csv path");
    run_cmd->add_option("--futures", opt_futures, "futures.csv path");
    run_cmd->add_option("--refrate", opt_refrate, "refrate.csv path");
    run_cmd->add_option("--rates", opt_rates, "rates.csv path");
    run_cmd->add_option("--out", opt_out, "output directory");
    run_cmd->add_flag("--strict", opt_strict, "fail on any dropped date instead of skipping");
    run_cmd->add_flag("--serial", opt_serial, "use the serial reference path");

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic dataset");
    std::string synth_config_path, synth_out;
    synth_cmd->add_option("--config", synth_config_path, "key=value config file")->required();
    synth_cmd->add_option("--out", synth_out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            RunConfig cfg = runner::load_run_config(run_config_path);
            // Flags take precedence over the config file.
            if (!opt_options.empty()) cfg.options_path = opt_options;
            if (!opt_etf.empty()) cfg.etf_closes_path = opt_etf;
            if (!opt_holdings.empty()) cfg.holdings_path = opt_holdings;
            if (!opt_futures.empty()) cfg.futures_path = opt_futures;
            if (!opt_refrate.empty()) cfg.refrate_path = opt_refrate;
            if (!opt_rates.empty()) cfg.rates_path = opt_rates;
            if (!opt_out.empty()) cfg.out_dir = opt_out;
            if (opt_strict) cfg.strict = true;
            if (opt_serial) cfg.parallel = false;
            return runner::run(cfg, std::cerr);
        }
        SynthConfig cfg = runner::load_synth_config(synth_config_path);
        return runner::run_synth(cfg, synth_out, std::cerr);
    } catch (const ParseError& e) {
        std::cerr << (e.kind() == "ConfigError" ? "config error: " : "parse error: ")
                  << e.what() << "\n";
        return e.kind() == "ConfigError" ? runner::kExitConfig : runner::kExitParse;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == "ConfigError" ? runner::kExitConfig : runner::kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return runner::kExitConfig;
    }
}
