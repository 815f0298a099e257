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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hmmimo/estimation.hpp"
#include "support.hpp"

using namespace hmmimo;

TEST_CASE("pilot assignment is orthogonal within each cell")
{
    NetworkConfig c = test::toy_config(2, 2, 1, 2, 3);
    c.pilot_len = 4;
    RandomStream rng(1, 1);
    const PilotBook book = assign_pilots(c, rng);
    REQUIRE(static_cast<int>(book.assignment.size()) == 6);
    for (int cell = 0; cell < 2; ++cell)
        for (int k = 0; k < 3; ++k)
        {
            const int p = book.assignment[c.user_id(cell, k)];
            CHECK(p == k);
            CHECK(p < c.pilot_len);
        }
}

TEST_CASE("pilot assignment rejects more users than pilots")
{
    NetworkConfig c = test::toy_config(1, 2, 0, 1, 3);
    c.pilot_len = 2; // K_c = 3 > tau_p
    RandomStream rng(1, 1);
    CHECK_THROWS_AS(assign_pilots(c, rng), ConfigError);
}

TEST_CASE("mmse variance formula and domain")
{
    CHECK(mmse_alpha(1.0, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mmse_alpha(2.0, 3.0, 4.0) == doctest::Approx(2.0 * 9.0 / 10.0).epsilon(1e-15));
    // High-SNR pair from the reference link budget: alpha -> beta.
    const double a = mmse_alpha(0.1, 1e-8, 1.5811388300841893e-13);
    CHECK(a / 1e-8 == doctest::Approx(0.99984191111303922).epsilon(1e-12));
    CHECK(a < 1e-8); // alpha < beta always

    CHECK_THROWS_AS(mmse_alpha(0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(mmse_alpha(1.0, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(mmse_alpha(1.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("alpha table covers every pair and respects pilot gain")
{
    NetworkConfig c = test::toy_config(2, 2, 1, 2, 2);
    const test::ToyInstance inst = test::make_instance(c, 11);
    REQUIRE(inst.est.alpha.n_rows == 4);
    REQUIRE(inst.est.alpha.n_cols == 4);
    for (int u = 0; u < 4; ++u)
        for (int s = 0; s < 4; ++s)
            CHECK(inst.est.alpha(u, s) ==
                  doctest::Approx(mmse_alpha(c.ue_power_w, inst.beta(u, s), 1.0)).epsilon(1e-12));

    NetworkConfig cg = c;
    cg.pilot_gain = true;
    RandomStream est_rng(11, 4);
    const EstimateSet est_g =
        estimate_channels(inst.chan, inst.pilots, inst.beta, cg, est_rng);
    for (int u = 0; u < 4; ++u)
        for (int s = 0; s < 4; ++s)
            CHECK(est_g.alpha(u, s) ==
                  doctest::Approx(mmse_alpha(cg.pilot_len * cg.ue_power_w, inst.beta(u, s), 1.0))
                      .epsilon(1e-12));
}

TEST_CASE("estimate variance, error variance and orthogonality")
{
    const NetworkConfig c = test::toy_config(1, 2, 1, 2, 1); // 4 antennas, 1 user
    RandomStream beta_rng(21, 1);
    const BetaTable beta = test::random_beta(c, beta_rng);
    RandomStream pilot_rng(21, 3);
    const PilotBook pilots = assign_pilots(c, pilot_rng);

    // Independent expectation: alpha from the scalar formula per pair.
    arma::mat alpha_table(c.total_users(), c.total_sites());
    for (arma::uword i = 0; i < alpha_table.n_elem; ++i)
        alpha_table(i) = mmse_alpha(c.ue_power_w, beta.gain(i), 1.0);

    const int n = 40000;
    arma::vec est_pow(4, arma::fill::zeros), err_pow(4, arma::fill::zeros);
    std::complex<double> cross{};
    RandomStream chan_rng(21, 2), est_rng(21, 4);
    for (int i = 0; i < n; ++i)
    {
        const ChannelRealization chan = draw_channels(beta, c, chan_rng);
        const EstimateSet est = estimate_channels(chan, pilots, beta, c, est_rng);
        const arma::cx_vec &hh = est.hhat[0];
        const arma::cx_vec err = est.error(chan, c, 0, 0);
        for (int a = 0; a < 4; ++a)
        {
            est_pow(a) += std::norm(hh(a));
            err_pow(a) += std::norm(err(a));
        }
        cross += arma::cdot(hh, err);
    }

    const arma::vec a_vec = per_antenna(alpha_table, c, 0, 0);
    const arma::vec b_vec = per_antenna(beta.gain, c, 0, 0);
    for (int a = 0; a < 4; ++a)
    {
        CHECK(est_pow(a) / n == doctest::Approx(a_vec(a)).epsilon(0.04));
        CHECK(err_pow(a) / n == doctest::Approx(b_vec(a) - a_vec(a)).epsilon(0.04));
    }
    const double norm = std::sqrt(arma::accu(a_vec) * arma::accu(b_vec - a_vec));
    CHECK(std::abs(cross) / n / norm < 0.02);
}

TEST_CASE("estimate converges to the channel as noise vanishes")
{
    NetworkConfig c = test::toy_config(1, 2, 1, 2, 1);
    c.noise_psd_dbm_hz = -100.0; // sigma_n^2 = 1e-13 W at 1 Hz
    const test::ToyInstance inst = test::make_instance(c, 5);
    const arma::cx_vec &h = inst.chan.comp[0][0];
    const arma::cx_vec &hh = inst.est.hhat[0];
    CHECK(arma::norm(arma::cx_vec(h - hh)) / arma::norm(h) < 1e-5);
}

TEST_CASE("estimation is deterministic and validates inputs")
{
    const NetworkConfig c = test::toy_config(2, 2, 1, 2, 2);
    const test::ToyInstance a = test::make_instance(c, 9);
    const test::ToyInstance b = test::make_instance(c, 9);
    for (int u = 0; u < c.total_users(); ++u)
        CHECK(arma::norm(arma::cx_vec(a.est.hhat[u] - b.est.hhat[u])) == 0.0);

    PilotBook bad;
    bad.assignment = {0};
    RandomStream rng(1, 1);
    CHECK_THROWS_AS(estimate_channels(a.chan, bad, a.beta, c, rng), std::invalid_argument);
}
