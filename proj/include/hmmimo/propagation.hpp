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

#ifndef HMMIMO_PROPAGATION_HPP
#define HMMIMO_PROPAGATION_HPP

#include <armadillo>
#include <vector>

#include "hmmimo/config.hpp"
#include "hmmimo/rng.hpp"
#include "hmmimo/topology.hpp"

namespace hmmimo {

// Three-slope path loss in dB: constant below d0, slope-20 between d0 and
// d1, slope-35 beyond d1 (distances in km inside the logs).
double path_loss_db(const PathLossModel &model, double distance_m);

// Large-scale gain beta for every (user, site) pair, linear scale.
// Rows are users in cell-major order, columns sites in cell-major order with
// slot 0 the cBS.
struct BetaTable {
    arma::mat gain;

    double operator()(int user_id, int site_id) const { return gain(user_id, site_id); }
    double &at(int user_id, int site_id) { return gain(user_id, site_id); }
};

// beta = 10^((-PL(d) + Z)/10) with Z ~ N(0, sigma_sh^2) dB applied only
// beyond the middle breakpoint. One shadowing draw per (user, site) pair in
// row-major order regardless of distance, so the stream layout is fixed.
BetaTable large_scale(const Topology &topo, const NetworkConfig &config, RandomStream &shadow_rng);

// Gaussian local-scattering correlation matrix for a half-wavelength ULA.
// Unit diagonal, so the trace equals the antenna count; spread -> 0 collapses
// to the steering-vector outer product (rank one).
arma::cx_mat scattering_covariance(int n_antennas, double nominal_angle_rad, double spread_rad);

// Expands a per-(user, site) table into a per-antenna vector across one
// cell's composite layout: the site value repeats once per antenna.
arma::vec per_antenna(const arma::mat &table, const NetworkConfig &config, int cell, int user_id);

// Small-scale realization. comp[u][c] is the composite channel from user u
// to all service antennas of cell c: cBS block first, then eAPs 1..L_c.
struct ChannelRealization {
    std::vector<std::vector<arma::cx_vec>> comp;

    // View of one site's antenna block inside a composite vector.
    arma::cx_vec block(const NetworkConfig &config, int user_id, int cell, int site) const
    {
        const int off = config.block_offset(site);
        return comp[user_id][cell].subvec(off, off + config.site_antennas(site) - 1);
    }
};

// Draws every composite vector. iid mode: entries CN(0, beta). Local
// scattering: each multi-antenna site block is CN(0, beta * R) with R the
// ULA correlation for a uniformly random nominal angle.
ChannelRealization draw_channels(const BetaTable &beta, const NetworkConfig &config, RandomStream &rng);

} // namespace hmmimo

#endif
