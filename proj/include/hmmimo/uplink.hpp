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

#ifndef HMMIMO_UPLINK_HPP
#define HMMIMO_UPLINK_HPP

#include <armadillo>
#include <vector>

#include "hmmimo/config.hpp"
#include "hmmimo/estimation.hpp"
#include "hmmimo/propagation.hpp"
#include "hmmimo/rng.hpp"

namespace hmmimo {

// Uplink transmit power coefficients, one per user, each in [0, 1].
struct UplinkPower {
    std::vector<double> eta;

    double operator()(int user_id) const { return eta[user_id]; }

    // Full power for everyone.
    static UplinkPower full(const NetworkConfig &config)
    {
        UplinkPower p;
        p.eta.assign(config.total_users(), 1.0);
        return p;
    }
};

// Diagonal of the estimation-error covariance of own-cell user `user` seen
// across cell `cell`'s service antennas: beta - alpha per site block.
arma::vec error_cov_diag(const EstimateSet &est, const BetaTable &beta,
                         const NetworkConfig &config, int cell, int user);

// Diagonal of the composite-channel correlation of (any) global user seen at
// cell `cell`: beta of the corresponding site, repeated per antenna block.
arma::vec composite_cov_diag(const BetaTable &beta, const NetworkConfig &config,
                             int cell, int user_id);

// Error and composite covariance diagonals for one observing cell. theta
// holds the K_c own-cell users, r one entry per global user (only the
// other-cell columns feed the interference matrix).
struct CovarianceSet {
    int cell = 0;
    std::vector<arma::vec> theta;
    std::vector<arma::vec> r;
};

CovarianceSet build_covariances(const EstimateSet &est, const BetaTable &beta,
                                const NetworkConfig &config, int cell);

// Interference-plus-noise matrix for target user (cell, user):
// Xi = sum_{kappa != k} eta hhat hhat^H + sum_kappa eta Theta
//    + sum_{iota != c} sum_kappa eta R + (sigma_n^2/p_u) I.
arma::cx_mat build_xi(const EstimateSet &est, const BetaTable &beta, const UplinkPower &eta,
                      const NetworkConfig &config, int cell, int user);

// gamma = eta ||hhat||^4 / (hhat^H Xi hhat).
double ul_sinr_analytic(const EstimateSet &est, const arma::cx_mat &xi, const UplinkPower &eta,
                        const NetworkConfig &config, int cell, int user);

// Spectral efficiency with the pilot-overhead prelog: (1 - tau_p/tau_c) log2(1 + gamma).
double ul_se(double gamma, const NetworkConfig &config);

// Power decomposition of the soft symbol estimate: desired part plus the
// four interference terms (own-channel estimation error, intra-cell users,
// inter-cell users, thermal noise).
struct UlDecomposition {
    double signal = 0.0;
    double i1 = 0.0;
    double i2 = 0.0;
    double i3 = 0.0;
    double i4 = 0.0;
    double cross_max = 0.0; // largest normalized cross-correlation between terms

    double interference() const { return i1 + i2 + i3 + i4; }
    double gamma() const { return signal / interference(); }
};

// Closed-form term powers conditioned on the own-cell estimates. Their sum
// equals hhat^H Xi hhat, so gamma() reproduces ul_sinr_analytic.
UlDecomposition ul_terms_analytic(const EstimateSet &est, const BetaTable &beta,
                                  const UplinkPower &eta, const NetworkConfig &config,
                                  int cell, int user);

// Symbol-level oracle under the same conditioning: own-cell estimates held
// fixed, estimation errors, other-cell channels, data symbols and noise
// redrawn every symbol.
UlDecomposition ul_terms_empirical(const EstimateSet &est, const BetaTable &beta,
                                   const UplinkPower &eta, const NetworkConfig &config,
                                   int cell, int user, int n_symbols, RandomStream &rng);

inline double ul_sinr_empirical(const EstimateSet &est, const BetaTable &beta,
                                const UplinkPower &eta, const NetworkConfig &config,
                                int cell, int user, int n_symbols, RandomStream &rng)
{
    return ul_terms_empirical(est, beta, eta, config, cell, user, n_symbols, rng).gamma();
}

} // namespace hmmimo

#endif
