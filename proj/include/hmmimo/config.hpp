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

#ifndef HMMIMO_CONFIG_HPP
#define HMMIMO_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hmmimo {

// Raised for malformed or inconsistent deployment configurations. Messages
// coming from the file parser are anchored as "<file>:<line>: ...".
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Scenario {
    kHmmimo,  // cell-center base stations plus edge access points
    kCfmmimo, // distributed access points only, one logical cell
    kCmmimo,  // co-located base stations only
};

enum class FadingMode {
    kIid,             // uncorrelated Rayleigh entries (analytic expressions exact)
    kLocalScattering, // Gaussian local-scattering ULA correlation per antenna block
};

const char *to_string(Scenario s);
const char *to_string(FadingMode m);
Scenario scenario_from_string(const std::string &s);
FadingMode fading_mode_from_string(const std::string &s);

// Three-slope distance power law with log-normal shadowing beyond the middle
// breakpoint. Defaults are the community-standard values used throughout the
// cell-free massive MIMO literature.
struct PathLossModel {
    double ref_db = 140.7;        // loss in dB at 1 km on the outer slope
    double d0_m = 10.0;           // inner breakpoint; loss is constant below it
    double d1_m = 50.0;           // middle breakpoint; shadowing applies beyond it
    double shadow_sigma_db = 8.0; // log-normal shadowing standard deviation
};

// Every scalar parameter of a deployment. The config file uses the short
// wire names (C, N_b, ...); see docs/config_schema.txt for the mapping and
// all defaults. Defaults describe the reference full-scale heterogeneous
// layout: four 500 m cells, 64+16x4 antennas per cell, 8 users per cell.
struct NetworkConfig {
    int cells = 4;            // C
    int cbs_antennas = 64;    // N_b, co-located antennas per cBS
    int eaps_per_cell = 16;   // L_c
    int eap_antennas = 4;     // N_a
    int users_per_cell = 8;   // K_c
    int coherence_len = 200;  // tau_c, channel uses per coherence block
    int pilot_len = 8;        // tau_p, channel uses reserved for pilots
    double ue_power_w = 0.1;  // p_u
    double dl_power_w = 1.0;  // p_d, per transmitting site
    double noise_psd_dbm_hz = -174.0;
    double noise_figure_db = 9.0;
    double bandwidth_hz = 5e6;
    double area_m = 1000.0;   // side of the square coverage region
    double cell_m = 500.0;    // side of one square cell
    double eap_inset_m = 10.0; // perimeter inset for edge access points
    int drops = 1000;
    std::uint64_t seed = 1;
    FadingMode fading_mode = FadingMode::kIid;
    double angular_spread_deg = 15.0;
    Scenario scenario = Scenario::kHmmimo;
    PathLossModel path_loss;
    bool pilot_gain = false;  // include the pilot-length factor in the estimator SNR

    // Derived bookkeeping. Site slot 0 of every cell is the cBS; slots
    // 1..eaps_per_cell are the edge access points.
    int cells_per_side() const;
    int service_antennas() const { return cbs_antennas + eaps_per_cell * eap_antennas; } // M_c
    int sites_per_cell() const { return eaps_per_cell + 1; }
    int total_users() const { return cells * users_per_cell; }
    int total_sites() const { return cells * sites_per_cell(); }
    int total_antennas() const { return cells * service_antennas(); }
    int user_id(int cell, int user) const { return cell * users_per_cell + user; }
    int site_id(int cell, int site) const { return cell * sites_per_cell() + site; }
    int site_antennas(int site) const { return site == 0 ? cbs_antennas : eap_antennas; }
    // Offset of a site's antenna block inside a composite service vector.
    int block_offset(int site) const
    {
        return site == 0 ? 0 : cbs_antennas + (site - 1) * eap_antennas;
    }
};

// Users must keep at least this distance from any service antenna site;
// enforced by resampling during placement.
inline constexpr double kMinUserSiteDistanceM = 5.0;

// Receiver noise power in watts over the configured bandwidth.
double noise_power(const NetworkConfig &config);

// Throws ConfigError on any violated deployment invariant.
void validate(const NetworkConfig &config);

// Parses the flat key-value config format. Unknown or duplicate keys and
// malformed values are rejected with line-anchored messages.
NetworkConfig parse_config(const std::string &text, const std::string &source_name = "<config>");
NetworkConfig load_config_file(const std::string &path);

// Canonical serialization: every key, sorted, normalized values. Two configs
// hash equal iff they describe the same deployment.
std::string canonical_config_text(const NetworkConfig &config);

// Rebuilds the deployment for another scenario while preserving the total
// antenna budget and user count of `base`. Non-integer splits are rejected
// unless allow_unequal is set, in which case antenna counts round down.
NetworkConfig derive_scenario(const NetworkConfig &base, Scenario target, bool allow_unequal = false);

} // namespace hmmimo

#endif
