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

#ifndef HMMIMO_TESTS_SUPPORT_HPP
#define HMMIMO_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>

#include "hmmimo/config.hpp"
#include "hmmimo/estimation.hpp"
#include "hmmimo/propagation.hpp"
#include "hmmimo/rng.hpp"

namespace hmmimo::test {

// Small deployment with unit receiver noise (sigma_n^2 = 1 W): a PSD of
// 30 dBm/Hz over 1 Hz with no noise figure. Geometry fields are left at
// values that only matter when a topology is actually placed.
inline NetworkConfig toy_config(int cells, int nb, int eaps, int na, int users)
{
    NetworkConfig c;
    c.cells = cells;
    c.cbs_antennas = nb;
    c.eaps_per_cell = eaps;
    c.eap_antennas = na;
    c.users_per_cell = users;
    c.coherence_len = 200;
    c.pilot_len = std::max(users, 1);
    c.ue_power_w = 1.0;
    c.dl_power_w = 1.0;
    c.noise_psd_dbm_hz = 30.0;
    c.noise_figure_db = 0.0;
    c.bandwidth_hz = 1.0;
    c.drops = 1;
    c.seed = 1;
    return c;
}

// Geometrically valid single-cell deployment (area = cell).
inline NetworkConfig toy_cell(int nb, int eaps, int na, int users)
{
    NetworkConfig c = toy_config(1, nb, eaps, na, users);
    c.area_m = 500.0;
    c.cell_m = 500.0;
    return c;
}

// Beta table with every entry drawn log-uniform in [e^-1, e], so the toy
// instances exercise unequal gains without extreme dynamic range.
inline BetaTable random_beta(const NetworkConfig &config, RandomStream &rng)
{
    BetaTable beta;
    beta.gain.set_size(config.total_users(), config.total_sites());
    for (arma::uword i = 0; i < beta.gain.n_elem; ++i)
        beta.gain(i) = std::exp(rng.uniform(-1.0, 1.0));
    return beta;
}

// Full synthetic state (channels drawn from beta, then estimated) for one
// toy config, everything driven by substreams of `seed`.
struct ToyInstance {
    NetworkConfig config;
    BetaTable beta;
    ChannelRealization chan;
    PilotBook pilots;
    EstimateSet est;
};

inline ToyInstance make_instance(const NetworkConfig &config, std::uint64_t seed)
{
    ToyInstance inst;
    inst.config = config;
    RandomStream beta_rng(seed, 1);
    inst.beta = random_beta(config, beta_rng);
    RandomStream chan_rng(seed, 2);
    inst.chan = draw_channels(inst.beta, config, chan_rng);
    RandomStream pilot_rng(seed, 3);
    inst.pilots = assign_pilots(config, pilot_rng);
    RandomStream est_rng(seed, 4);
    inst.est = estimate_channels(inst.chan, inst.pilots, inst.beta, config, est_rng);
    return inst;
}

inline double rel_err(double expected, double measured)
{
    const double scale = std::max(std::abs(expected), 1e-300);
    return std::abs(expected - measured) / scale;
}

} // namespace hmmimo::test

#endif
