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

#include "hmmimo/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "hmmimo/downlink.hpp"
#include "hmmimo/estimation.hpp"
#include "hmmimo/propagation.hpp"
#include "hmmimo/rng.hpp"
#include "hmmimo/topology.hpp"
#include "hmmimo/uplink.hpp"

namespace hmmimo {

double percentile(const std::vector<double> &sorted_ascending, double q)
{
    if (sorted_ascending.empty())
        throw std::invalid_argument("percentile: empty sample set");
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("percentile: quantile must lie in [0, 1]");

    const double n = static_cast<double>(sorted_ascending.size());
    // The epsilon keeps exact products like 0.05 * 100 from rounding up to
    // the next order statistic.
    long idx = static_cast<long>(std::ceil(q * n - 1e-9)) - 1;
    idx = std::clamp(idx, 0l, static_cast<long>(sorted_ascending.size()) - 1);
    return sorted_ascending[static_cast<std::size_t>(idx)];
}

CdfSummary CdfSummary::from_samples(std::vector<double> samples)
{
    std::sort(samples.begin(), samples.end());
    CdfSummary s;
    s.sorted_se = std::move(samples);
    return s;
}

double CdfSummary::mean() const
{
    if (sorted_se.empty())
        throw std::invalid_argument("CdfSummary::mean: empty sample set");
    return std::accumulate(sorted_se.begin(), sorted_se.end(), 0.0) /
           static_cast<double>(sorted_se.size());
}

double CdfSummary::percentile_stderr(double q) const
{
    const double n = static_cast<double>(sorted_se.size());
    const double spread = 1.96 * std::sqrt(n * q * (1.0 - q));
    const double lo = std::max(q * n - spread, 1.0) / n;
    const double hi = std::min(q * n + spread, n) / n;
    return (percentile(hi) - percentile(lo)) / (2.0 * 1.96);
}

std::vector<SeSample> run_drop(const NetworkConfig &config, int drop_index)
{
    RandomStream topo_rng = drop_stream(config.seed, drop_index, Stage::kTopology);
    const Topology topo = place_topology(config, topo_rng, drop_index);

    RandomStream shadow_rng = drop_stream(config.seed, drop_index, Stage::kShadowing);
    const BetaTable beta = large_scale(topo, config, shadow_rng);

    RandomStream chan_rng = drop_stream(config.seed, drop_index, Stage::kChannels);
    const ChannelRealization chan = draw_channels(beta, config, chan_rng);

    RandomStream pilot_rng = drop_stream(config.seed, drop_index, Stage::kPilots);
    const PilotBook pilots = assign_pilots(config, pilot_rng);

    RandomStream est_rng = drop_stream(config.seed, drop_index, Stage::kEstimation);
    const EstimateSet est = estimate_channels(chan, pilots, beta, config, est_rng);

    const UplinkPower eta = UplinkPower::full(config);
    const PowerControl pc = dl_power_control(est, config);

    std::vector<SeSample> out;
    out.reserve(config.total_users());
    for (int c = 0; c < config.cells; ++c)
        for (int k = 0; k < config.users_per_cell; ++k)
        {
            const arma::cx_mat xi = build_xi(est, beta, eta, config, c, k);
            SeSample s;
            s.drop_index = drop_index;
            s.cell = c;
            s.user = k;
            s.gamma_ul = ul_sinr_analytic(est, xi, eta, config, c, k);
            s.gamma_dl_paper = dl_sinr_analytic(est, beta, pc, config, c, k, DlSinrMode::kPaper);
            s.gamma_dl_rigorous =
                dl_sinr_analytic(est, beta, pc, config, c, k, DlSinrMode::kRigorous);
            s.se_ul = ul_se(s.gamma_ul, config);
            s.se_dl = dl_se(s.gamma_dl_paper, config);
            out.push_back(s);
        }
    return out;
}

CampaignResult run_campaign(const NetworkConfig &config, int n_threads)
{
    if (config.drops < 1)
        throw ConfigError("run_campaign: at least one drop required");

    const int per_drop = config.total_users();
    CampaignResult result;
    result.samples.resize(static_cast<std::size_t>(config.drops) * per_drop);

    if (n_threads <= 0)
        n_threads = static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::clamp(n_threads, 1, config.drops);

    std::atomic<int> next_drop{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;

    auto worker = [&]() {
        for (;;)
        {
            const int drop = next_drop.fetch_add(1);
            if (drop >= config.drops)
                return;
            try
            {
                auto samples = run_drop(config, drop);
                std::copy(samples.begin(), samples.end(),
                          result.samples.begin() + static_cast<std::size_t>(drop) * per_drop);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };

    if (n_threads == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }
    if (first_error)
        std::rethrow_exception(first_error);

    std::vector<double> ul, dl;
    ul.reserve(result.samples.size());
    dl.reserve(result.samples.size());
    for (const SeSample &s : result.samples)
    {
        ul.push_back(s.se_ul);
        dl.push_back(s.se_dl);
    }
    result.ul = CdfSummary::from_samples(std::move(ul));
    result.dl = CdfSummary::from_samples(std::move(dl));
    return result;
}

} // namespace hmmimo
