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

#ifndef HMMIMO_REPORT_HPP
#define HMMIMO_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hmmimo/campaign.hpp"
#include "hmmimo/config.hpp"

namespace hmmimo {

// One scenario's campaign output plus the config it actually ran with.
struct ScenarioResult {
    std::string scenario;
    NetworkConfig config;
    CampaignResult result;
};

// FNV-1a 64-bit hash, used to fingerprint the canonical config text.
std::uint64_t fnv1a64(const std::string &text);

// CSV with the header
// scenario,drop,cell,user,se_ul,se_dl,gamma_ul,gamma_dl_paper,gamma_dl_rigorous
// and one row per sample; byte-identical across runs of the same config.
std::string results_csv_text(const std::vector<ScenarioResult> &runs);

// Per-scenario summary statistics. The nonpaper_tdd_equal_split block
// re-accounts SE with the post-pilot symbols split evenly between UL and DL,
// which the source formulas do not do; it is labeled accordingly.
std::string summary_json_text(const std::vector<ScenarioResult> &runs);

// Provenance sidecar for one invocation.
struct RunManifest {
    std::string config_hash; // hex FNV-1a of the canonical config text
    std::string artifact_version;
    std::string timestamp; // ISO-8601 UTC
    std::vector<std::string> scenarios;
    std::vector<std::string> outputs;
};

RunManifest make_manifest(const NetworkConfig &base, const std::vector<std::string> &scenarios,
                          const std::vector<std::string> &outputs);
std::string manifest_json_text(const RunManifest &manifest);

// Self-contained SVG with the per-scenario CDF curves: uplink solid,
// downlink dashed, the 5th percentile marked as a horizontal rule.
std::string cdf_svg_text(const std::vector<ScenarioResult> &runs);

} // namespace hmmimo

#endif
