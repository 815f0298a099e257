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

#ifndef HMMIMO_CAMPAIGN_HPP
#define HMMIMO_CAMPAIGN_HPP

#include <vector>

#include "hmmimo/config.hpp"

namespace hmmimo {

// Per-user outcome of one Monte Carlo drop.
struct SeSample {
    int drop_index = 0;
    int cell = 0;
    int user = 0;
    double se_ul = 0.0;
    double se_dl = 0.0;
    double gamma_ul = 0.0;
    double gamma_dl_paper = 0.0;
    double gamma_dl_rigorous = 0.0;
};

// Lower-interpolation empirical quantile of an ascending sequence: the
// element at index ceil(q n) - 1, clamped to the valid range. Throws on an
// empty input or q outside [0, 1].
double percentile(const std::vector<double> &sorted_ascending, double q);

// Empirical distribution summary of one metric.
struct CdfSummary {
    std::vector<double> sorted_se;

    static CdfSummary from_samples(std::vector<double> samples);

    int n() const { return static_cast<int>(sorted_se.size()); }
    double percentile(double q) const { return hmmimo::percentile(sorted_se, q); }
    double likely95() const { return percentile(0.05); }
    double median() const { return percentile(0.5); }
    double mean() const;
    // Half-width of the 95% order-statistic confidence bracket around the
    // q-quantile; reported alongside the 95%-likely rate.
    double percentile_stderr(double q) const;
};

// One drop: place sites and users, realize fading, estimate, and evaluate
// the closed-form SINRs for every user. The result depends only on
// (config, drop_index), never on execution order.
std::vector<SeSample> run_drop(const NetworkConfig &config, int drop_index);

struct CampaignResult {
    std::vector<SeSample> samples; // ordered by (drop, cell, user)
    CdfSummary ul;
    CdfSummary dl;
};

// All drops, executed on up to n_threads workers (0 picks the hardware
// count). Samples land in preallocated per-drop slots, so the output is
// identical for any thread count.
CampaignResult run_campaign(const NetworkConfig &config, int n_threads = 0);

} // namespace hmmimo

#endif
