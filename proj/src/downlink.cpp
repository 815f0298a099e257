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

#include "hmmimo/downlink.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace hmmimo {

namespace {

// Per-antenna power coefficients of one served user across its own cell's
// composite layout: the cBS diagonal followed by each eAP's scalar repeated.
arma::vec pc_expand(const PowerControl &pc, const NetworkConfig &config, int cell, int user)
{
    const int u = config.user_id(cell, user);
    arma::vec g(config.service_antennas());
    if (config.cbs_antennas > 0)
        g.subvec(0, config.cbs_antennas - 1) = pc.cbs_diag[u];
    for (int l = 1; l <= config.eaps_per_cell; ++l)
        g.subvec(config.block_offset(l), config.block_offset(l) + config.eap_antennas - 1)
            .fill(pc.eap_coeff(u, l - 1));
    return g;
}

} // namespace

PowerControl dl_power_control(const EstimateSet &est, const NetworkConfig &config,
                              PowerPolicy policy)
{
    if (policy != PowerPolicy::kUniform)
        throw std::invalid_argument("dl_power_control: unknown policy");
    if (config.total_users() == 0 || config.users_per_cell == 0)
        throw std::invalid_argument("dl_power_control: no served users");

    PowerControl pc;
    pc.cbs_diag.resize(config.total_users());
    pc.eap_coeff.set_size(config.total_users(), std::max(config.eaps_per_cell, 1));
    pc.eap_coeff.zeros();

    for (int c = 0; c < config.cells; ++c)
    {
        if (config.cbs_antennas > 0)
        {
            double sum_alpha = 0.0;
            for (int k = 0; k < config.users_per_cell; ++k)
                sum_alpha += est.alpha(config.user_id(c, k), config.site_id(c, 0));
            const double coeff = 1.0 / std::sqrt(config.cbs_antennas * sum_alpha);
            for (int k = 0; k < config.users_per_cell; ++k)
                pc.cbs_diag[config.user_id(c, k)] =
                    arma::vec(config.cbs_antennas, arma::fill::value(coeff));
        }
        else
        {
            for (int k = 0; k < config.users_per_cell; ++k)
                pc.cbs_diag[config.user_id(c, k)] = arma::vec();
        }

        for (int l = 1; l <= config.eaps_per_cell; ++l)
        {
            double sum_alpha = 0.0;
            for (int k = 0; k < config.users_per_cell; ++k)
                sum_alpha += est.alpha(config.user_id(c, k), config.site_id(c, l));
            const double coeff = 1.0 / std::sqrt(config.eap_antennas * sum_alpha);
            for (int k = 0; k < config.users_per_cell; ++k)
                pc.eap_coeff(config.user_id(c, k), l - 1) = coeff;
        }
    }
    return pc;
}

DlDecomposition dl_terms_analytic(const EstimateSet &est, const BetaTable &beta,
                                  const PowerControl &pc, const NetworkConfig &config,
                                  int cell, int user)
{
    const int u = config.user_id(cell, user);
    const int na = config.eap_antennas;

    DlDecomposition d;
    d.desired = est.alpha(u, config.site_id(cell, 0)) * pc.cbs_tr(u);
    d.j1 = est.alpha(u, config.site_id(cell, 0)) * beta(u, config.site_id(cell, 0)) *
           pc.cbs_tr_sq(u);
    for (int l = 1; l <= config.eaps_per_cell; ++l)
    {
        const double a = est.alpha(u, config.site_id(cell, l));
        const double b = beta(u, config.site_id(cell, l));
        const double dl = pc.eap_coeff(u, l - 1);
        d.desired += dl * a * na;
        d.j1 += dl * dl * a * a * na;
        d.j1_leak += dl * dl * a * (b - a) * na;
    }

    for (int c = 0; c < config.cells; ++c)
        for (int k = 0; k < config.users_per_cell; ++k)
        {
            const int v = config.user_id(c, k);
            if (v == u)
                continue;
            double p = est.alpha(v, config.site_id(c, 0)) * beta(u, config.site_id(c, 0)) *
                       pc.cbs_tr_sq(v);
            for (int l = 1; l <= config.eaps_per_cell; ++l)
            {
                const double dl = pc.eap_coeff(v, l - 1);
                p += dl * dl * beta(u, config.site_id(c, l)) *
                     est.alpha(v, config.site_id(c, l)) * na;
            }
            (c == cell ? d.j2 : d.j3) += p;
        }

    d.noise = noise_power(config) / config.dl_power_w;
    return d;
}

double dl_sinr_analytic(const EstimateSet &est, const BetaTable &beta, const PowerControl &pc,
                        const NetworkConfig &config, int cell, int user, DlSinrMode mode)
{
    return dl_terms_analytic(est, beta, pc, config, cell, user).gamma(mode);
}

DlDecomposition dl_terms_empirical(const EstimateSet &est, const BetaTable &beta,
                                   const PowerControl &pc, const NetworkConfig &config,
                                   int cell, int user, int n_blocks, RandomStream &rng)
{
    if (n_blocks <= 0)
        throw std::invalid_argument("dl_terms_empirical: block count must be positive");

    const int m = config.service_antennas();
    const int kc = config.users_per_cell;
    const int nb = config.cbs_antennas;
    const int u = config.user_id(cell, user);
    const double noise_std = std::sqrt(noise_power(config) / config.dl_power_w);

    // Standard deviations of everything redrawn per block.
    std::vector<std::vector<arma::vec>> est_std(config.cells); // serving-side estimates
    std::vector<arma::vec> chan_std(config.cells);             // target user's true channel
    std::vector<std::vector<arma::vec>> coeff(config.cells);   // per-antenna power coefficients
    for (int c = 0; c < config.cells; ++c)
    {
        est_std[c].resize(kc);
        coeff[c].resize(kc);
        for (int k = 0; k < kc; ++k)
        {
            est_std[c][k] = arma::sqrt(per_antenna(est.alpha, config, c, config.user_id(c, k)));
            coeff[c][k] = pc_expand(pc, config, c, k);
        }
        chan_std[c] = arma::sqrt(per_antenna(beta.gain, config, c, u));
    }
    const arma::vec own_err_std =
        arma::sqrt(per_antenna(beta.gain, config, cell, u) - per_antenna(est.alpha, config, cell, u));

    auto draw = [&](const arma::vec &std_per_antenna, arma::cx_vec &out) {
        for (arma::uword i = 0; i < out.n_elem; ++i)
            out(i) = std_per_antenna(i) * rng.cgaussian();
    };

    std::vector<arma::cx_vec> hhat(kc, arma::cx_vec(m));
    arma::cx_vec herr(m), hchan(m), hest(m);
    std::complex<double> mean_bracket{}, mean_leak{};
    double pow_bracket = 0.0, pow_leak = 0.0;
    // Cross-correlation bookkeeping over {own coefficient, J2, J3, noise}.
    std::array<std::complex<double>, 4> mean{};
    std::array<double, 4> power{};
    std::array<std::array<std::complex<double>, 4>, 4> cross{};

    for (int n = 0; n < n_blocks; ++n)
    {
        // Own cell: all serving estimates plus the target user's error, so
        // the target's true channel hhat + herr is shared by every term.
        for (int k = 0; k < kc; ++k)
            draw(est_std[cell][k], hhat[k]);
        draw(own_err_std, herr);

        // Own-user coefficient, split into the paper's bracket terms (cBS
        // with the true channel, eAPs with the estimate only) and the
        // residual error leakage at the eAPs.
        std::complex<double> bracket{}, leak{};
        {
            const arma::vec &g = coeff[cell][user];
            for (int i = 0; i < nb; ++i)
                bracket += (hhat[user](i) + herr(i)) * g(i) * std::conj(hhat[user](i));
            for (int i = nb; i < m; ++i)
            {
                bracket += g(i) * std::norm(hhat[user](i));
                leak += herr(i) * g(i) * std::conj(hhat[user](i));
            }
        }

        // Intra-cell interference: the target's full channel against the
        // other users' precoders, one data symbol each.
        std::complex<double> j2{};
        for (int k = 0; k < kc; ++k)
        {
            if (k == user)
                continue;
            const arma::vec &g = coeff[cell][k];
            std::complex<double> c{};
            for (int i = 0; i < m; ++i)
                c += (hhat[user](i) + herr(i)) * g(i) * std::conj(hhat[k](i));
            j2 += c * rng.cgaussian();
        }

        // Inter-cell interference: fresh true channel to each other cell and
        // fresh serving estimates there.
        std::complex<double> j3{};
        for (int ci = 0; ci < config.cells; ++ci)
        {
            if (ci == cell)
                continue;
            draw(chan_std[ci], hchan);
            for (int k = 0; k < kc; ++k)
            {
                draw(est_std[ci][k], hest);
                const arma::vec &g = coeff[ci][k];
                std::complex<double> c{};
                for (int i = 0; i < m; ++i)
                    c += hchan(i) * g(i) * std::conj(hest(i));
                j3 += c * rng.cgaussian();
            }
        }

        const std::complex<double> w = noise_std * rng.cgaussian();

        mean_bracket += bracket;
        pow_bracket += std::norm(bracket);
        mean_leak += leak;
        pow_leak += std::norm(leak);

        const std::array<std::complex<double>, 4> term{bracket + leak, j2, j3, w};
        for (int a = 0; a < 4; ++a)
        {
            mean[a] += term[a];
            power[a] += std::norm(term[a]);
            for (int b = a + 1; b < 4; ++b)
                cross[a][b] += term[a] * std::conj(term[b]);
        }
    }

    const double inv_n = 1.0 / n_blocks;
    DlDecomposition d;
    d.desired = std::abs(mean[0]) * inv_n;
    d.j1 = pow_bracket * inv_n - std::norm(mean_bracket * inv_n);
    d.j1_leak = pow_leak * inv_n - std::norm(mean_leak * inv_n);
    d.j2 = power[1] * inv_n;
    d.j3 = power[2] * inv_n;
    d.noise = power[3] * inv_n;

    std::array<double, 4> var{};
    for (int a = 0; a < 4; ++a)
        var[a] = power[a] * inv_n - std::norm(mean[a] * inv_n);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
        {
            if (var[a] <= 0.0 || var[b] <= 0.0)
                continue;
            const std::complex<double> cov =
                cross[a][b] * inv_n - (mean[a] * inv_n) * std::conj(mean[b] * inv_n);
            d.cross_max = std::max(d.cross_max, std::abs(cov) / std::sqrt(var[a] * var[b]));
        }
    return d;
}

double dl_se(double gamma, const NetworkConfig &)
{
    return std::log2(1.0 + gamma);
}

} // namespace hmmimo
