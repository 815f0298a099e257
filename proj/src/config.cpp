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

#include "hmmimo/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace hmmimo {

const char *to_string(Scenario s)
{
    switch (s)
    {
    case Scenario::kHmmimo:
        return "hmmimo";
    case Scenario::kCfmmimo:
        return "cfmmimo";
    case Scenario::kCmmimo:
        return "cmmimo";
    }
    return "?";
}

const char *to_string(FadingMode m)
{
    return m == FadingMode::kIid ? "iid" : "local_scattering";
}

Scenario scenario_from_string(const std::string &s)
{
    if (s == "hmmimo")
        return Scenario::kHmmimo;
    if (s == "cfmmimo")
        return Scenario::kCfmmimo;
    if (s == "cmmimo")
        return Scenario::kCmmimo;
    throw ConfigError("unknown scenario '" + s + "' (expected hmmimo, cfmmimo or cmmimo)");
}

FadingMode fading_mode_from_string(const std::string &s)
{
    if (s == "iid")
        return FadingMode::kIid;
    if (s == "local_scattering")
        return FadingMode::kLocalScattering;
    throw ConfigError("unknown fading_mode '" + s + "' (expected iid or local_scattering)");
}

int NetworkConfig::cells_per_side() const
{
    return static_cast<int>(std::lround(area_m / cell_m));
}

double noise_power(const NetworkConfig &config)
{
    if (!(config.bandwidth_hz > 0.0))
        throw ConfigError("bandwidth_hz must be positive");
    const double dbm = config.noise_psd_dbm_hz + 10.0 * std::log10(config.bandwidth_hz) +
                       config.noise_figure_db;
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

void validate(const NetworkConfig &c)
{
    auto fail = [](const std::string &msg) { throw ConfigError("invalid config: " + msg); };

    if (c.cells < 1)
        fail("C must be at least 1");
    if (c.cbs_antennas < 0 || c.eaps_per_cell < 0 || c.eap_antennas < 0)
        fail("antenna counts must be non-negative");
    if (c.eaps_per_cell > 0 && c.eap_antennas < 1)
        fail("N_a must be at least 1 when L_c > 0");
    if (c.users_per_cell < 1)
        fail("K_c must be at least 1");
    if (c.coherence_len < 1 || c.pilot_len < 1)
        fail("tau_c and tau_p must be at least 1");
    if (c.pilot_len > c.coherence_len)
        fail("tau_p must not exceed tau_c");
    if (c.users_per_cell > c.pilot_len)
        fail("K_c must not exceed tau_p (orthogonal in-cell pilots)");
    if (c.service_antennas() <= 0)
        fail("M_c = N_b + L_c*N_a must be positive");
    if (!(c.ue_power_w > 0.0) || !(c.dl_power_w > 0.0))
        fail("p_u and p_d must be positive");
    if (!(c.bandwidth_hz > 0.0))
        fail("bandwidth_hz must be positive");
    if (!(c.area_m > 0.0) || !(c.cell_m > 0.0) || c.cell_m > c.area_m)
        fail("area_m and cell_m must be positive with cell_m <= area_m");

    const double ratio = c.area_m / c.cell_m;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio))
        fail("area_m must be an integer multiple of cell_m");
    const int per_side = static_cast<int>(rounded);
    if (c.cells != per_side * per_side)
        fail("C must equal (area_m/cell_m)^2 = " + std::to_string(per_side * per_side));

    if (c.scenario == Scenario::kCmmimo && c.eaps_per_cell != 0)
        fail("scenario cmmimo requires L_c = 0");
    if (c.scenario == Scenario::kCfmmimo && (c.cbs_antennas != 0 || c.cells != 1))
        fail("scenario cfmmimo requires N_b = 0 and C = 1");

    if (c.eap_inset_m < 0.0 || c.eap_inset_m >= c.cell_m / 2.0)
        fail("eap_inset_m must lie in [0, cell_m/2)");
    if (c.drops < 1)
        fail("drops must be at least 1");
    if (c.angular_spread_deg < 0.0)
        fail("angular_spread_deg must be non-negative");
    if (!(c.path_loss.d0_m > 0.0) || !(c.path_loss.d1_m > c.path_loss.d0_m))
        fail("path-loss breakpoints must satisfy 0 < pl_d0_m < pl_d1_m");
    if (c.path_loss.shadow_sigma_db < 0.0)
        fail("shadow_sigma_db must be non-negative");

    noise_power(c); // also checks bandwidth
}

namespace {

std::string trim(const std::string &s)
{
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string &v)
{
    std::size_t pos = 0;
    long long out = std::stoll(v, &pos);
    if (pos != v.size())
        throw std::invalid_argument("trailing characters");
    return out;
}

std::uint64_t parse_u64(const std::string &v)
{
    std::size_t pos = 0;
    const unsigned long long out = std::stoull(v, &pos);
    if (pos != v.size() || v.front() == '-')
        throw std::invalid_argument("not an unsigned integer");
    return out;
}

double parse_double(const std::string &v)
{
    std::size_t pos = 0;
    const double out = std::stod(v, &pos);
    if (pos != v.size())
        throw std::invalid_argument("trailing characters");
    if (!std::isfinite(out))
        throw std::invalid_argument("value must be finite");
    return out;
}

bool parse_bool(const std::string &v)
{
    if (v == "true" || v == "1")
        return true;
    if (v == "false" || v == "0")
        return false;
    throw std::invalid_argument("expected true/false");
}

using Setter = std::function<void(NetworkConfig &, const std::string &)>;

const std::map<std::string, Setter> &key_table()
{
    static const std::map<std::string, Setter> table = {
        {"C", [](NetworkConfig &c, const std::string &v) { c.cells = static_cast<int>(parse_int(v)); }},
        {"N_b", [](NetworkConfig &c, const std::string &v) { c.cbs_antennas = static_cast<int>(parse_int(v)); }},
        {"L_c", [](NetworkConfig &c, const std::string &v) { c.eaps_per_cell = static_cast<int>(parse_int(v)); }},
        {"N_a", [](NetworkConfig &c, const std::string &v) { c.eap_antennas = static_cast<int>(parse_int(v)); }},
        {"K_c", [](NetworkConfig &c, const std::string &v) { c.users_per_cell = static_cast<int>(parse_int(v)); }},
        {"tau_c", [](NetworkConfig &c, const std::string &v) { c.coherence_len = static_cast<int>(parse_int(v)); }},
        {"tau_p", [](NetworkConfig &c, const std::string &v) { c.pilot_len = static_cast<int>(parse_int(v)); }},
        {"p_u", [](NetworkConfig &c, const std::string &v) { c.ue_power_w = parse_double(v); }},
        {"p_d", [](NetworkConfig &c, const std::string &v) { c.dl_power_w = parse_double(v); }},
        {"noise_psd_dbm_hz", [](NetworkConfig &c, const std::string &v) { c.noise_psd_dbm_hz = parse_double(v); }},
        {"noise_figure_db", [](NetworkConfig &c, const std::string &v) { c.noise_figure_db = parse_double(v); }},
        {"bandwidth_hz", [](NetworkConfig &c, const std::string &v) { c.bandwidth_hz = parse_double(v); }},
        {"area_m", [](NetworkConfig &c, const std::string &v) { c.area_m = parse_double(v); }},
        {"cell_m", [](NetworkConfig &c, const std::string &v) { c.cell_m = parse_double(v); }},
        {"eap_inset_m", [](NetworkConfig &c, const std::string &v) { c.eap_inset_m = parse_double(v); }},
        {"drops", [](NetworkConfig &c, const std::string &v) { c.drops = static_cast<int>(parse_int(v)); }},
        {"seed", [](NetworkConfig &c, const std::string &v) { c.seed = parse_u64(v); }},
        {"fading_mode", [](NetworkConfig &c, const std::string &v) { c.fading_mode = fading_mode_from_string(v); }},
        {"angular_spread_deg", [](NetworkConfig &c, const std::string &v) { c.angular_spread_deg = parse_double(v); }},
        {"scenario", [](NetworkConfig &c, const std::string &v) { c.scenario = scenario_from_string(v); }},
        {"pl_ref_db", [](NetworkConfig &c, const std::string &v) { c.path_loss.ref_db = parse_double(v); }},
        {"pl_d0_m", [](NetworkConfig &c, const std::string &v) { c.path_loss.d0_m = parse_double(v); }},
        {"pl_d1_m", [](NetworkConfig &c, const std::string &v) { c.path_loss.d1_m = parse_double(v); }},
        {"shadow_sigma_db", [](NetworkConfig &c, const std::string &v) { c.path_loss.shadow_sigma_db = parse_double(v); }},
        {"pilot_gain", [](NetworkConfig &c, const std::string &v) { c.pilot_gain = parse_bool(v); }},
    };
    return table;
}

} // namespace

NetworkConfig parse_config(const std::string &text, const std::string &source_name)
{
    NetworkConfig config;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto fail = [&](const std::string &msg) {
        throw ConfigError(source_name + ":" + std::to_string(line_no) + ": " + msg);
    };

    while (std::getline(in, line))
    {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            fail("missing key");
        if (value.empty())
            fail("missing value for key '" + key + "'");

        const auto it = key_table().find(key);
        if (it == key_table().end())
            fail("unknown key '" + key + "'");
        if (!seen.insert(key).second)
            fail("duplicate key '" + key + "'");
        try
        {
            it->second(config, value);
        }
        catch (const ConfigError &e)
        {
            fail(e.what());
        }
        catch (const std::exception &e)
        {
            fail("bad value '" + value + "' for key '" + key + "': " + e.what());
        }
    }

    validate(config);
    return config;
}

NetworkConfig load_config_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

std::string canonical_config_text(const NetworkConfig &c)
{
    char num[64];
    auto fmt = [&num](double v) {
        std::snprintf(num, sizeof(num), "%.17g", v);
        return std::string(num);
    };
    // Keys in sorted order, one per line; this is the hashing pre-image.
    std::ostringstream out;
    out << "C=" << c.cells << "\n"
        << "K_c=" << c.users_per_cell << "\n"
        << "L_c=" << c.eaps_per_cell << "\n"
        << "N_a=" << c.eap_antennas << "\n"
        << "N_b=" << c.cbs_antennas << "\n"
        << "angular_spread_deg=" << fmt(c.angular_spread_deg) << "\n"
        << "area_m=" << fmt(c.area_m) << "\n"
        << "bandwidth_hz=" << fmt(c.bandwidth_hz) << "\n"
        << "cell_m=" << fmt(c.cell_m) << "\n"
        << "drops=" << c.drops << "\n"
        << "eap_inset_m=" << fmt(c.eap_inset_m) << "\n"
        << "fading_mode=" << to_string(c.fading_mode) << "\n"
        << "noise_figure_db=" << fmt(c.noise_figure_db) << "\n"
        << "noise_psd_dbm_hz=" << fmt(c.noise_psd_dbm_hz) << "\n"
        << "p_d=" << fmt(c.dl_power_w) << "\n"
        << "p_u=" << fmt(c.ue_power_w) << "\n"
        << "pilot_gain=" << (c.pilot_gain ? "true" : "false") << "\n"
        << "pl_d0_m=" << fmt(c.path_loss.d0_m) << "\n"
        << "pl_d1_m=" << fmt(c.path_loss.d1_m) << "\n"
        << "pl_ref_db=" << fmt(c.path_loss.ref_db) << "\n"
        << "scenario=" << to_string(c.scenario) << "\n"
        << "seed=" << c.seed << "\n"
        << "shadow_sigma_db=" << fmt(c.path_loss.shadow_sigma_db) << "\n"
        << "tau_c=" << c.coherence_len << "\n"
        << "tau_p=" << c.pilot_len << "\n";
    return out.str();
}

NetworkConfig derive_scenario(const NetworkConfig &base, Scenario target, bool allow_unequal)
{
    if (target == base.scenario)
        return base;

    const int total_antennas = base.total_antennas();
    const int total_users = base.total_users();
    const int antennas_per_eap = base.eap_antennas > 0 ? base.eap_antennas : 1;

    auto divide = [&](int num, int den, const std::string &what) {
        if (den <= 0)
            throw ConfigError("scenario derivation: " + what + " needs a positive divisor");
        if (num % den != 0 && !allow_unequal)
            throw ConfigError("scenario derivation: " + what + " (" + std::to_string(num) + "/" +
                              std::to_string(den) +
                              ") is not an integer; pass --allow-unequal to round down");
        return num / den;
    };

    NetworkConfig out = base;
    out.scenario = target;
    switch (target)
    {
    case Scenario::kCmmimo:
        out.eaps_per_cell = 0;
        out.cbs_antennas = divide(total_antennas, base.cells, "antennas per cell");
        out.users_per_cell = divide(total_users, base.cells, "users per cell");
        break;
    case Scenario::kHmmimo:
    {
        // Half the per-cell budget co-located, half distributed.
        const int per_cell = divide(total_antennas, base.cells, "antennas per cell");
        out.cbs_antennas = divide(per_cell, 2, "co-located half of the per-cell budget");
        out.eap_antennas = antennas_per_eap;
        out.eaps_per_cell = divide(per_cell - out.cbs_antennas, antennas_per_eap, "edge access points");
        out.users_per_cell = divide(total_users, base.cells, "users per cell");
        break;
    }
    case Scenario::kCfmmimo:
        out.cells = 1;
        out.cell_m = base.area_m;
        out.cbs_antennas = 0;
        out.eap_antennas = antennas_per_eap;
        out.eaps_per_cell = divide(total_antennas, antennas_per_eap, "access points");
        out.users_per_cell = total_users;
        break;
    }

    validate(out);
    return out;
}

} // namespace hmmimo
