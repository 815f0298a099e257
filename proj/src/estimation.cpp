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

#include "hmmimo/estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace hmmimo {

PilotBook assign_pilots(const NetworkConfig &config, RandomStream &rng)
{
    (void)rng; // deterministic policy; the stream is part of the drop contract
    if (config.users_per_cell > config.pilot_len)
        throw ConfigError("assign_pilots: K_c exceeds tau_p, in-cell pilots cannot be orthogonal");

    PilotBook book;
    book.assignment.resize(config.total_users());
    for (int c = 0; c < config.cells; ++c)
        for (int k = 0; k < config.users_per_cell; ++k)
            book.assignment[config.user_id(c, k)] = k;
    return book;
}

double mmse_alpha(double ue_power_w, double beta, double noise_w)
{
    if (ue_power_w <= 0.0 || beta <= 0.0 || noise_w <= 0.0)
        throw std::domain_error("mmse_alpha: power, gain and noise must be positive");
    return ue_power_w * beta * beta / (ue_power_w * beta + noise_w);
}

EstimateSet estimate_channels(const ChannelRealization &chan, const PilotBook &pilots,
                              const BetaTable &beta, const NetworkConfig &config,
                              RandomStream &rng)
{
    if (static_cast<int>(pilots.assignment.size()) != config.total_users())
        throw std::invalid_argument("estimate_channels: pilot book size mismatch");
    if (static_cast<int>(chan.comp.size()) != config.total_users())
        throw std::invalid_argument("estimate_channels: channel realization size mismatch");

    const double noise_w = noise_power(config);
    const double train_power =
        config.pilot_gain ? config.pilot_len * config.ue_power_w : config.ue_power_w;

    EstimateSet est;
    est.alpha.set_size(config.total_users(), config.total_sites());
    for (int u = 0; u < config.total_users(); ++u)
        for (int s = 0; s < config.total_sites(); ++s)
            est.alpha(u, s) = mmse_alpha(train_power, beta(u, s), noise_w);

    est.hhat.resize(config.total_users());
    const double noise_scale = std::sqrt(noise_w / train_power);
    for (int c = 0; c < config.cells; ++c)
    {
        for (int k = 0; k < config.users_per_cell; ++k)
        {
            const int u = config.user_id(c, k);
            arma::cx_vec h = chan.comp[u][c];
            for (int s = 0; s < config.sites_per_cell(); ++s)
            {
                const int off = config.block_offset(s);
                const int n = config.site_antennas(s);
                const double b = beta(u, config.site_id(c, s));
                const double shrink = est.alpha(u, config.site_id(c, s)) / b;
                for (int m = 0; m < n; ++m)
                {
                    const std::complex<double> w = noise_scale * rng.cgaussian();
                    h(off + m) = shrink * (h(off + m) + w);
                }
            }
            est.hhat[u] = std::move(h);
        }
    }
    return est;
}

} // namespace hmmimo
