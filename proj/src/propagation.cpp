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

#include "hmmimo/propagation.hpp"

#include <cmath>

namespace hmmimo {

double path_loss_db(const PathLossModel &model, double distance_m)
{
    const double d_km = std::max(distance_m, model.d0_m) / 1000.0;
    const double d0_km = model.d0_m / 1000.0;
    const double d1_km = model.d1_m / 1000.0;

    if (distance_m > model.d1_m)
        return model.ref_db + 35.0 * std::log10(d_km);
    if (distance_m > model.d0_m)
        return model.ref_db + 15.0 * std::log10(d1_km) + 20.0 * std::log10(d_km);
    return model.ref_db + 15.0 * std::log10(d1_km) + 20.0 * std::log10(d0_km);
}

BetaTable large_scale(const Topology &topo, const NetworkConfig &config, RandomStream &shadow_rng)
{
    BetaTable beta;
    beta.gain.set_size(config.total_users(), config.total_sites());

    for (int c = 0; c < config.cells; ++c)
        for (int k = 0; k < config.users_per_cell; ++k)
        {
            const int u = config.user_id(c, k);
            const Point &ue = topo.users[c][k];
            for (int i = 0; i < config.cells; ++i)
                for (int s = 0; s < config.sites_per_cell(); ++s)
                {
                    const double d = distance(ue, topo.site(i, s));
                    const double pl = path_loss_db(config.path_loss, d);
                    const double shadow = config.path_loss.shadow_sigma_db * shadow_rng.gaussian();
                    const double z = d > config.path_loss.d1_m ? shadow : 0.0;
                    beta.at(u, config.site_id(i, s)) = std::pow(10.0, (-pl + z) / 10.0);
                }
        }
    return beta;
}

arma::cx_mat scattering_covariance(int n_antennas, double nominal_angle_rad, double spread_rad)
{
    const double pi = 3.141592653589793;
    const double sin_a = std::sin(nominal_angle_rad);
    const double cos_a = std::cos(nominal_angle_rad);

    arma::cx_mat r(n_antennas, n_antennas);
    for (int m = 0; m < n_antennas; ++m)
        for (int n = 0; n < n_antennas; ++n)
        {
            // Half-wavelength spacing; Gaussian angular density in the
            // small-spread approximation.
            const double delta = pi * (m - n);
            const double phase = delta * sin_a;
            const double damp = std::exp(-0.5 * spread_rad * spread_rad * (delta * cos_a) * (delta * cos_a));
            r(m, n) = std::complex<double>(damp * std::cos(phase), damp * std::sin(phase));
        }
    return r;
}

arma::vec per_antenna(const arma::mat &table, const NetworkConfig &config, int cell, int user_id)
{
    arma::vec d(config.service_antennas());
    for (int s = 0; s < config.sites_per_cell(); ++s)
    {
        const int n = config.site_antennas(s);
        if (n == 0)
            continue;
        const int off = config.block_offset(s);
        d.subvec(off, off + n - 1).fill(table(user_id, config.site_id(cell, s)));
    }
    return d;
}

namespace {

// Factor F with F F^H = R, via symmetric eigendecomposition. Tiny negative
// eigenvalues from rounding are clamped to zero.
arma::cx_mat covariance_factor(const arma::cx_mat &r)
{
    arma::vec eigval;
    arma::cx_mat eigvec;
    if (!arma::eig_sym(eigval, eigvec, r))
        throw std::runtime_error("eigendecomposition of the scattering covariance failed");
    eigval.transform([](double v) { return v > 0.0 ? std::sqrt(v) : 0.0; });
    return eigvec * arma::diagmat(eigval);
}

} // namespace

ChannelRealization draw_channels(const BetaTable &beta, const NetworkConfig &config, RandomStream &rng)
{
    if (beta.gain.n_rows != static_cast<arma::uword>(config.total_users()) ||
        beta.gain.n_cols != static_cast<arma::uword>(config.total_sites()))
        throw std::invalid_argument("beta table does not match the configured dimensions");

    const int m = config.service_antennas();
    const double pi = 3.141592653589793;
    const double spread_rad = config.angular_spread_deg * pi / 180.0;
    const bool correlated = config.fading_mode == FadingMode::kLocalScattering;

    ChannelRealization chan;
    chan.comp.resize(config.total_users());
    for (int u = 0; u < config.total_users(); ++u)
    {
        chan.comp[u].resize(config.cells);
        for (int c = 0; c < config.cells; ++c)
        {
            arma::cx_vec composite(m);
            for (int s = 0; s < config.sites_per_cell(); ++s)
            {
                const int n = config.site_antennas(s);
                if (n == 0)
                    continue;
                const double b = beta(u, config.site_id(c, s));
                const double scale = std::sqrt(b);
                const int off = config.block_offset(s);

                if (correlated && n > 1)
                {
                    const double angle = rng.uniform(-pi, pi);
                    const arma::cx_mat f = covariance_factor(scattering_covariance(n, angle, spread_rad));
                    arma::cx_vec z(n);
                    for (int a = 0; a < n; ++a)
                        z(a) = rng.cgaussian();
                    composite.subvec(off, off + n - 1) = scale * (f * z);
                }
                else
                {
                    for (int a = 0; a < n; ++a)
                        composite(off + a) = scale * rng.cgaussian();
                }
            }
            chan.comp[u][c] = std::move(composite);
        }
    }
    return chan;
}

} // namespace hmmimo
