// SPDX-License-Identifier: Apache-2.0
//
// hmmimo-sim: Monte Carlo spectral-efficiency simulator for heterogeneous massive MIMO networks
// Copyright (C) 2026 hmmimo-sim developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmmimo/campaign.hpp"
#include "hmmimo/config.hpp"
#include "hmmimo/downlink.hpp"
#include "hmmimo/estimation.hpp"
#include "hmmimo/propagation.hpp"
#include "hmmimo/report.hpp"
#include "hmmimo/rng.hpp"
#include "hmmimo/topology.hpp"
#include "hmmimo/uplink.hpp"
#include "hmmimo/validate.hpp"
#include "hmmimo/version.hpp"

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out.good())
        throw IoError("cannot write " + path.string());
}

nlohmann::ordered_json ul_terms_json(const hmmimo::UlDecomposition &d)
{
    nlohmann::ordered_json j;
    j["signal"] = d.signal;
    j["i1"] = d.i1;
    j["i2"] = d.i2;
    j["i3"] = d.i3;
    j["i4"] = d.i4;
    j["gamma"] = d.gamma();
    return j;
}

nlohmann::ordered_json dl_terms_json(const hmmimo::DlDecomposition &d)
{
    nlohmann::ordered_json j;
    j["desired"] = d.desired;
    j["j1"] = d.j1;
    j["j1_leak"] = d.j1_leak;
    j["j2"] = d.j2;
    j["j3"] = d.j3;
    j["noise"] = d.noise;
    j["gamma_paper"] = d.gamma(hmmimo::DlSinrMode::kPaper);
    j["gamma_rigorous"] = d.gamma(hmmimo::DlSinrMode::kRigorous);
    return j;
}

// Oracle term powers for drop 0 of one scenario, both analytic and
// symbol-level empirical.
nlohmann::ordered_json diagnostics_json(const hmmimo::NetworkConfig &config, int n_draws)
{
    using namespace hmmimo;

    RandomStream topo_rng = drop_stream(config.seed, 0, Stage::kTopology);
    const Topology topo = place_topology(config, topo_rng, 0);
    RandomStream shadow_rng = drop_stream(config.seed, 0, Stage::kShadowing);
    const BetaTable beta = large_scale(topo, config, shadow_rng);
    RandomStream chan_rng = drop_stream(config.seed, 0, Stage::kChannels);
    const ChannelRealization chan = draw_channels(beta, config, chan_rng);
    RandomStream pilot_rng = drop_stream(config.seed, 0, Stage::kPilots);
    const PilotBook pilots = assign_pilots(config, pilot_rng);
    RandomStream est_rng = drop_stream(config.seed, 0, Stage::kEstimation);
    const EstimateSet est = estimate_channels(chan, pilots, beta, config, est_rng);
    const UplinkPower eta = UplinkPower::full(config);
    const PowerControl pc = dl_power_control(est, config);

    RandomStream ul_rng = drop_stream(config.seed, 0, Stage::kUplinkOracle);
    RandomStream dl_rng = drop_stream(config.seed, 0, Stage::kDownlinkOracle);

    nlohmann::ordered_json users = nlohmann::ordered_json::array();
    for (int c = 0; c < config.cells; ++c)
        for (int k = 0; k < config.users_per_cell; ++k)
        {
            nlohmann::ordered_json u;
            u["cell"] = c;
            u["user"] = k;
            u["ul_analytic"] = ul_terms_json(ul_terms_analytic(est, beta, eta, config, c, k));
            u["ul_empirical"] =
                ul_terms_json(ul_terms_empirical(est, beta, eta, config, c, k, n_draws, ul_rng));
            u["dl_analytic"] = dl_terms_json(dl_terms_analytic(est, beta, pc, config, c, k));
            u["dl_empirical"] =
                dl_terms_json(dl_terms_empirical(est, beta, pc, config, c, k, n_draws, dl_rng));
            users.push_back(std::move(u));
        }

    nlohmann::ordered_json j;
    j["drop"] = 0;
    j["oracle_draws"] = n_draws;
    j["users"] = std::move(users);
    return j;
}

int cmd_run(const std::string &config_path, const std::string &scenario_flag, int drops,
            long long seed, const std::string &output_dir, bool emit_plot, bool diagnostics,
            bool allow_unequal)
{
    using namespace hmmimo;

    NetworkConfig base;
    if (!config_path.empty())
        base = load_config_file(config_path);
    if (drops > 0)
        base.drops = drops;
    if (seed >= 0)
        base.seed = static_cast<std::uint64_t>(seed);
    validate(base);

    std::vector<Scenario> targets;
    if (scenario_flag == "all")
        targets = {Scenario::kHmmimo, Scenario::kCfmmimo, Scenario::kCmmimo};
    else if (!scenario_flag.empty())
        targets = {scenario_from_string(scenario_flag)};
    else
        targets = {base.scenario};

    std::vector<ScenarioResult> runs;
    for (Scenario target : targets)
    {
        NetworkConfig cfg =
            target == base.scenario ? base : derive_scenario(base, target, allow_unequal);
        if (!allow_unequal &&
            (cfg.total_antennas() != base.total_antennas() ||
             cfg.total_users() != base.total_users()))
            throw ConfigError("scenario derivation changed the antenna or user budget");

        ScenarioResult run;
        run.scenario = to_string(target);
        run.config = cfg;
        run.result = run_campaign(cfg);
        runs.push_back(std::move(run));
    }

    const std::filesystem::path dir = output_dir.empty() ? "." : output_dir;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory " + dir.string());

    std::vector<std::string> outputs = {"results.csv", "summary.json", "manifest.json"};
    if (emit_plot)
        outputs.push_back("cdf.svg");
    if (diagnostics)
        outputs.push_back("diagnostics.json");

    write_file(dir / "results.csv", results_csv_text(runs));
    write_file(dir / "summary.json", summary_json_text(runs));
    std::vector<std::string> names;
    for (const ScenarioResult &run : runs)
        names.push_back(run.scenario);
    write_file(dir / "manifest.json", manifest_json_text(make_manifest(base, names, outputs)));
    if (emit_plot)
        write_file(dir / "cdf.svg", cdf_svg_text(runs));
    if (diagnostics)
    {
        nlohmann::ordered_json all;
        for (const ScenarioResult &run : runs)
            all[run.scenario] = diagnostics_json(run.config, 20000);
        write_file(dir / "diagnostics.json", all.dump(2) + "\n");
    }

    for (const ScenarioResult &run : runs)
        std::printf("%-8s n=%d  likely95 UL %.4g DL %.4g  mean UL %.4g DL %.4g  (bits/s/Hz)\n",
                    run.scenario.c_str(), run.result.ul.n(), run.result.ul.likely95(),
                    run.result.dl.likely95(), run.result.ul.mean(), run.result.dl.mean());
    return 0;
}

int cmd_validate(double tolerance, bool paper_mode_dl, long long seed)
{
    const hmmimo::ValidationReport report = hmmimo::run_validation(
        tolerance, paper_mode_dl, seed >= 0 ? static_cast<std::uint64_t>(seed) : 1u);

    for (const hmmimo::ValidationCheck &c : report.checks)
        std::printf("%-34s expected %13.6g  measured %13.6g  rel %9.3g  %s\n", c.name.c_str(),
                    c.expected, c.measured, c.rel_err,
                    c.informational ? "INFO" : (c.pass ? "PASS" : "FAIL"));
    std::printf("validation: %s\n", report.all_pass() ? "PASS" : "FAIL");
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Spectral-efficiency simulator for heterogeneous massive MIMO networks"};
    app.set_version_flag("--version", std::string(hmmimo::kVersion));
    app.require_subcommand(1);

    std::string config_path, scenario_flag, output_dir;
    int drops = -1;
    long long seed = -1;
    bool emit_plot = false, diagnostics = false, allow_unequal = false;

    CLI::App *run = app.add_subcommand("run", "Run a Monte Carlo campaign");
    run->add_option("--config", config_path, "Config file (defaults apply when omitted)");
    run->add_option("--scenario", scenario_flag, "Scenario to run, or 'all'")
        ->check(CLI::IsMember({"hmmimo", "cfmmimo", "cmmimo", "all"}));
    run->add_option("--drops", drops, "Monte Carlo drop count override")
        ->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Master RNG seed override")->check(CLI::NonNegativeNumber);
    run->add_option("--output", output_dir, "Output directory (default: current)");
    run->add_flag("--emit-plot", emit_plot, "Write the CDF plot (cdf.svg)");
    run->add_flag("--diagnostics", diagnostics, "Write drop-0 oracle term powers");
    run->add_flag("--allow-unequal", allow_unequal,
                  "Permit scenario derivations that cannot split budgets exactly");

    double tolerance = 0.02;
    bool paper_mode_dl = false;
    CLI::App *val = app.add_subcommand("validate", "Run the analytic-vs-empirical oracle suites");
    val->add_option("--tolerance", tolerance, "Relative tolerance for term comparisons")
        ->check(CLI::PositiveNumber);
    val->add_flag("--paper-mode-dl", paper_mode_dl,
                  "Also report the printed DL J1 discrepancy (informational)");
    val->add_option("--seed", seed, "Instance seed")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (run->parsed())
            return cmd_run(config_path, scenario_flag, drops, seed, output_dir, emit_plot,
                           diagnostics, allow_unequal);
        return cmd_validate(tolerance, paper_mode_dl, seed);
    }
    catch (const hmmimo::ConfigError &e)
    {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    }
    catch (const IoError &e)
    {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 3;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
