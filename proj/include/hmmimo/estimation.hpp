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

#ifndef HMMIMO_ESTIMATION_HPP
#define HMMIMO_ESTIMATION_HPP

#include <armadillo>
#include <vector>

#include "hmmimo/config.hpp"
#include "hmmimo/propagation.hpp"
#include "hmmimo/rng.hpp"

namespace hmmimo {

// Pilot index per user; within a cell all users hold distinct pilots.
struct PilotBook {
    std::vector<int> assignment;
};

// Round-robin in-cell assignment: user k gets pilot k, the same pattern in
// every cell. Requires K_c <= tau_p.
PilotBook assign_pilots(const NetworkConfig &config, RandomStream &rng);

// MMSE estimate variance per antenna: p_u beta^2 / (p_u beta + sigma_n^2).
// Throws std::domain_error on non-positive input.
double mmse_alpha(double ue_power_w, double beta, double noise_w);

// Serving-cell channel estimates plus the full per-pair variance table.
// hhat[u] is the composite estimate of user u at its own cell; the implied
// error h - hhat has per-antenna variance beta - alpha and is uncorrelated
// with hhat.
struct EstimateSet {
    std::vector<arma::cx_vec> hhat;
    arma::mat alpha; // users x sites, same layout as BetaTable

    arma::cx_vec error(const ChannelRealization &chan, const NetworkConfig &config,
                       int cell, int user) const
    {
        return chan.comp[config.user_id(cell, user)][cell] - hhat[config.user_id(cell, user)];
    }
};

// hhat = (alpha/beta) (h + w) with w ~ CN(0, sigma_n^2 / p I) the effective
// training noise, per site block; p is p_u, or tau_p * p_u when pilot_gain
// is set. Estimates are produced only for own-cell sites; alpha is filled
// for every pair.
EstimateSet estimate_channels(const ChannelRealization &chan, const PilotBook &pilots,
                              const BetaTable &beta, const NetworkConfig &config,
                              RandomStream &rng);

} // namespace hmmimo

#endif
