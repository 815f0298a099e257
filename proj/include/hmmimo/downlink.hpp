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

#ifndef HMMIMO_DOWNLINK_HPP
#define HMMIMO_DOWNLINK_HPP

#include <armadillo>
#include <vector>

#include "hmmimo/config.hpp"
#include "hmmimo/estimation.hpp"
#include "hmmimo/propagation.hpp"
#include "hmmimo/rng.hpp"

namespace hmmimo {

// Conjugate-beamforming power control: a non-negative diagonal matrix per
// (user, own cBS) and a non-negative scalar per (user, own eAP).
struct PowerControl {
    std::vector<arma::vec> cbs_diag; // one length-N_b diagonal per user
    arma::mat eap_coeff;             // users x eAPs of the user's own cell

    double cbs_tr(int user_id) const { return arma::accu(cbs_diag[user_id]); }
    double cbs_tr_sq(int user_id) const { return arma::dot(cbs_diag[user_id], cbs_diag[user_id]); }
};

enum class PowerPolicy {
    kUniform, // equal split of each site's unit power budget across its users
};

// Builds coefficients meeting the expected-power normalization per site with
// equality: sum_k alpha_k tr(D_k^2) = 1 at each cBS and
// sum_k d_k^2 alpha_k N_a = 1 at each eAP.
PowerControl dl_power_control(const EstimateSet &est, const NetworkConfig &config,
                              PowerPolicy policy = PowerPolicy::kUniform);

// The closed-form downlink SINR exists in two variants. Paper mode keeps the
// printed denominator, where every own-cell term is the second moment of the
// full physical coefficient. Rigorous mode is the use-and-then-forget bound
// evaluated for the decomposition's own bracket terms: the own-eAP entries
// become variances of d||hhat||^2, which drops the error-leakage power
// d^2 alpha (beta - alpha) N_a per eAP. The two denominators differ by
// exactly that leakage sum; the cBS term is already a variance in both.
enum class DlSinrMode {
    kPaper,
    kRigorous,
};

// Power decomposition of the received downlink symbol. j1 is the bracket
// (own-coefficient) fluctuation excluding leakage, j1_leak the own-cell eAP
// error-leakage power; j1 + j1_leak is the paper-mode own-cell total.
struct DlDecomposition {
    double desired = 0.0; // mean coefficient of the served symbol (real under CBF)
    double j1 = 0.0;
    double j1_leak = 0.0;
    double j2 = 0.0;
    double j3 = 0.0;
    double noise = 0.0;
    double cross_max = 0.0; // largest normalized cross-correlation between terms

    double interference(DlSinrMode mode) const
    {
        return j1 + (mode == DlSinrMode::kPaper ? j1_leak : 0.0) + j2 + j3 + noise;
    }
    double gamma(DlSinrMode mode) const { return desired * desired / interference(mode); }
};

// Closed-form terms from the channel statistics alone (the bound averages
// over all randomness, so no realization enters).
DlDecomposition dl_terms_analytic(const EstimateSet &est, const BetaTable &beta,
                                  const PowerControl &pc, const NetworkConfig &config,
                                  int cell, int user);

double dl_sinr_analytic(const EstimateSet &est, const BetaTable &beta, const PowerControl &pc,
                        const NetworkConfig &config, int cell, int user, DlSinrMode mode);

// Block-level oracle: channels, estimates, symbols and noise are redrawn
// every block from the (alpha, beta) statistics, assuming uncorrelated
// entries (exact in iid fading mode). Measures the mean desired coefficient
// and the empirical power of every interference component.
DlDecomposition dl_terms_empirical(const EstimateSet &est, const BetaTable &beta,
                                   const PowerControl &pc, const NetworkConfig &config,
                                   int cell, int user, int n_blocks, RandomStream &rng);

inline double dl_sinr_empirical(const EstimateSet &est, const BetaTable &beta,
                                const PowerControl &pc, const NetworkConfig &config,
                                int cell, int user, int n_blocks, RandomStream &rng,
                                DlSinrMode mode = DlSinrMode::kRigorous)
{
    return dl_terms_empirical(est, beta, pc, config, cell, user, n_blocks, rng).gamma(mode);
}

// No pilot prelog on the downlink side.
double dl_se(double gamma, const NetworkConfig &config);

} // namespace hmmimo

#endif
