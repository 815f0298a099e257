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

#include "hmmimo/uplink.hpp"

#include <cmath>
#include <stdexcept>

namespace hmmimo {

namespace {

void check_eta(const UplinkPower &eta, const NetworkConfig &config)
{
    if (static_cast<int>(eta.eta.size()) != config.total_users())
        throw std::invalid_argument("uplink: power coefficient count mismatch");
    for (double v : eta.eta)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("uplink: power coefficients must lie in [0, 1]");
}

} // namespace

arma::vec error_cov_diag(const EstimateSet &est, const BetaTable &beta,
                         const NetworkConfig &config, int cell, int user)
{
    const int u = config.user_id(cell, user);
    return per_antenna(beta.gain, config, cell, u) - per_antenna(est.alpha, config, cell, u);
}

arma::vec composite_cov_diag(const BetaTable &beta, const NetworkConfig &config,
                             int cell, int user_id)
{
    return per_antenna(beta.gain, config, cell, user_id);
}

CovarianceSet build_covariances(const EstimateSet &est, const BetaTable &beta,
                                const NetworkConfig &config, int cell)
{
    CovarianceSet cov;
    cov.cell = cell;
    cov.theta.reserve(config.users_per_cell);
    for (int k = 0; k < config.users_per_cell; ++k)
        cov.theta.push_back(error_cov_diag(est, beta, config, cell, k));
    cov.r.reserve(config.total_users());
    for (int u = 0; u < config.total_users(); ++u)
        cov.r.push_back(composite_cov_diag(beta, config, cell, u));
    return cov;
}

arma::cx_mat build_xi(const EstimateSet &est, const BetaTable &beta, const UplinkPower &eta,
                      const NetworkConfig &config, int cell, int user)
{
    check_eta(eta, config);
    const int m = config.service_antennas();

    arma::vec diag(m, arma::fill::zeros);
    for (int k = 0; k < config.users_per_cell; ++k)
        diag += eta(config.user_id(cell, k)) * error_cov_diag(est, beta, config, cell, k);
    for (int c = 0; c < config.cells; ++c)
    {
        if (c == cell)
            continue;
        for (int k = 0; k < config.users_per_cell; ++k)
        {
            const int u = config.user_id(c, k);
            diag += eta(u) * composite_cov_diag(beta, config, cell, u);
        }
    }
    diag += noise_power(config) / config.ue_power_w;

    arma::cx_mat xi = arma::diagmat(arma::conv_to<arma::cx_vec>::from(diag));
    for (int k = 0; k < config.users_per_cell; ++k)
    {
        if (k == user)
            continue;
        const arma::cx_vec &hh = est.hhat[config.user_id(cell, k)];
        if (static_cast<int>(hh.n_elem) != m)
            throw std::invalid_argument("build_xi: estimate dimension mismatch");
        xi += eta(config.user_id(cell, k)) * (hh * hh.t());
    }
    return xi;
}

double ul_sinr_analytic(const EstimateSet &est, const arma::cx_mat &xi, const UplinkPower &eta,
                        const NetworkConfig &config, int cell, int user)
{
    const arma::cx_vec &hh = est.hhat[config.user_id(cell, user)];
    const double norm2 = arma::cdot(hh, hh).real();
    const double num = eta(config.user_id(cell, user)) * norm2 * norm2;
    const double den = arma::cdot(hh, xi * hh).real();
    return num / den;
}

double ul_se(double gamma, const NetworkConfig &config)
{
    const double prelog =
        1.0 - static_cast<double>(config.pilot_len) / static_cast<double>(config.coherence_len);
    return prelog * std::log2(1.0 + gamma);
}

UlDecomposition ul_terms_analytic(const EstimateSet &est, const BetaTable &beta,
                                  const UplinkPower &eta, const NetworkConfig &config,
                                  int cell, int user)
{
    check_eta(eta, config);
    const int u = config.user_id(cell, user);
    const arma::cx_vec &hh = est.hhat[u];
    const arma::vec habs2 = arma::square(arma::abs(hh));
    const double norm2 = arma::accu(habs2);

    UlDecomposition d;
    d.signal = eta(u) * norm2 * norm2;
    d.i1 = eta(u) * arma::dot(habs2, error_cov_diag(est, beta, config, cell, user));
    for (int k = 0; k < config.users_per_cell; ++k)
    {
        if (k == user)
            continue;
        const int v = config.user_id(cell, k);
        const double beam = std::norm(arma::cdot(hh, est.hhat[v]));
        d.i2 += eta(v) * (beam + arma::dot(habs2, error_cov_diag(est, beta, config, cell, k)));
    }
    for (int c = 0; c < config.cells; ++c)
    {
        if (c == cell)
            continue;
        for (int k = 0; k < config.users_per_cell; ++k)
        {
            const int v = config.user_id(c, k);
            d.i3 += eta(v) * arma::dot(habs2, composite_cov_diag(beta, config, cell, v));
        }
    }
    d.i4 = noise_power(config) / config.ue_power_w * norm2;
    return d;
}

UlDecomposition ul_terms_empirical(const EstimateSet &est, const BetaTable &beta,
                                   const UplinkPower &eta, const NetworkConfig &config,
                                   int cell, int user, int n_symbols, RandomStream &rng)
{
    check_eta(eta, config);
    if (n_symbols <= 0)
        throw std::invalid_argument("ul_terms_empirical: symbol count must be positive");

    const int m = config.service_antennas();
    const int kc = config.users_per_cell;
    const int u = config.user_id(cell, user);
    const arma::cx_vec &hh = est.hhat[u];
    const double norm2 = arma::cdot(hh, hh).real();
    const double noise_std = std::sqrt(noise_power(config) / config.ue_power_w);

    // Per-antenna standard deviations for the redrawn random pieces.
    std::vector<arma::vec> err_std(kc);
    for (int k = 0; k < kc; ++k)
        err_std[k] = arma::sqrt(error_cov_diag(est, beta, config, cell, k));
    std::vector<arma::vec> comp_std;
    std::vector<int> other_users;
    for (int c = 0; c < config.cells; ++c)
    {
        if (c == cell)
            continue;
        for (int k = 0; k < config.users_per_cell; ++k)
        {
            const int v = config.user_id(c, k);
            other_users.push_back(v);
            comp_std.push_back(arma::sqrt(composite_cov_diag(beta, config, cell, v)));
        }
    }

    auto draw = [&](const arma::vec &std_per_antenna, arma::cx_vec &out) {
        for (int i = 0; i < m; ++i)
            out(i) = std_per_antenna(i) * rng.cgaussian();
    };

    arma::cx_vec scratch(m);
    std::array<std::complex<double>, 4> term{};
    std::array<double, 4> power{};
    std::array<std::array<std::complex<double>, 4>, 4> cross{};
    for (int n = 0; n < n_symbols; ++n)
    {
        // I1: own estimation error carrying the desired symbol.
        draw(err_std[user], scratch);
        term[0] = std::sqrt(eta(u)) * arma::cdot(hh, scratch) * rng.cgaussian();

        // I2: intra-cell users, beamforming leakage plus their errors.
        term[1] = 0.0;
        for (int k = 0; k < kc; ++k)
        {
            if (k == user)
                continue;
            const int v = config.user_id(cell, k);
            draw(err_std[k], scratch);
            term[1] += std::sqrt(eta(v)) * (arma::cdot(hh, est.hhat[v]) + arma::cdot(hh, scratch)) *
                       rng.cgaussian();
        }

        // I3: inter-cell users with fully redrawn composite channels.
        term[2] = 0.0;
        for (std::size_t i = 0; i < other_users.size(); ++i)
        {
            draw(comp_std[i], scratch);
            term[2] += std::sqrt(eta(other_users[i])) * arma::cdot(hh, scratch) * rng.cgaussian();
        }

        // I4: thermal noise after combining.
        for (int i = 0; i < m; ++i)
            scratch(i) = noise_std * rng.cgaussian();
        term[3] = arma::cdot(hh, scratch);

        for (int a = 0; a < 4; ++a)
        {
            power[a] += std::norm(term[a]);
            for (int b = a + 1; b < 4; ++b)
                cross[a][b] += term[a] * std::conj(term[b]);
        }
    }

    UlDecomposition d;
    d.signal = eta(u) * norm2 * norm2;
    d.i1 = power[0] / n_symbols;
    d.i2 = power[1] / n_symbols;
    d.i3 = power[2] / n_symbols;
    d.i4 = power[3] / n_symbols;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
        {
            const double denom = std::sqrt(power[a] * power[b]);
            if (denom > 0.0)
                d.cross_max = std::max(d.cross_max, std::abs(cross[a][b]) / denom);
        }
    return d;
}

} // namespace hmmimo
