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
//
// Acceptance gate: one line per criterion, every tolerance printed next to
// the measurement it bounds. Exit status 0 iff every criterion passes.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "hmmimo/campaign.hpp"
#include "hmmimo/config.hpp"
#include "hmmimo/downlink.hpp"
#include "hmmimo/estimation.hpp"
#include "hmmimo/propagation.hpp"
#include "hmmimo/report.hpp"
#include "hmmimo/rng.hpp"
#include "hmmimo/uplink.hpp"
#include "hmmimo/validate.hpp"

using namespace hmmimo;

namespace {

int g_passed = 0;
int g_total = 0;

void report(bool pass, const std::string &name, const std::string &detail)
{
    ++g_total;
    g_passed += pass ? 1 : 0;
    std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Criterion 1: scenario ordering at desk scale (128 antennas, 8 users,
// 10^3 drops), 95%-likely UL SE cfmmimo > hmmimo > cmmimo, heterogeneous at
// least 1.5x cellular at the 5th percentile, inside five minutes.

NetworkConfig desk_base()
{
    NetworkConfig c;
    c.cbs_antennas = 16; // half of the 32-antenna per-cell budget co-located
    c.eaps_per_cell = 4;
    c.eap_antennas = 4;
    c.users_per_cell = 2;
    c.drops = 1000;
    c.seed = 1;
    validate(c);
    return c;
}

void criterion_ordering()
{
    const auto t0 = std::chrono::steady_clock::now();
    const NetworkConfig hm = desk_base();
    const NetworkConfig cf = derive_scenario(hm, Scenario::kCfmmimo);
    const NetworkConfig cm = derive_scenario(hm, Scenario::kCmmimo);

    const double hm95 = run_campaign(hm).ul.likely95();
    const double cf95 = run_campaign(cf).ul.likely95();
    const double cm95 = run_campaign(cm).ul.likely95();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const double ratio = hm95 / cm95;
    const bool pass = cf95 > hm95 && hm95 > cm95 && ratio >= 1.5 && seconds <= 300.0;
    report(pass, "desk-scale ordering",
           "95%-likely UL SE cfmmimo=" + fmt(cf95) + " > hmmimo=" + fmt(hm95) +
               " > cmmimo=" + fmt(cm95) + " bits/s/Hz; 5th-pct ratio hm/cm=" + fmt(ratio) +
               " >= 1.5; runtime " + fmt(seconds) + " s <= 300 s");
}

// ---------------------------------------------------------------------------
// Criteria 2 and 3: term-by-term oracle agreement on 20 random two-cell
// instances (M_c <= 8, K_c <= 2) at 10^5 draws. Uplink: every interference
// term and gamma within 2%. Downlink: E|h^|^4 = 2 alpha^2 within 3%, J2 and
// J3 within 2%, J1 against rigorous mode within 2%, and the paper/rigorous
// denominator gap equal to its symbolic form to 1e-10.

void criterion_oracles()
{
    const ValidationReport vr = run_validation(0.02, false, 424242, 20, 100000);

    double ul_max = 0.0, dl_max = 0.0, gap_max = 0.0, moment_max = 0.0;
    bool ul_pass = true, dl_pass = true;
    for (const ValidationCheck &c : vr.checks)
    {
        if (c.informational)
            continue;
        const bool is_ul = c.name.find(" ul ") != std::string::npos;
        const bool is_gap = c.name.find("mode gap") != std::string::npos;
        const bool is_moment = c.name.find("E|h^|^4") != std::string::npos;
        if (is_ul)
        {
            ul_max = std::max(ul_max, c.rel_err);
            ul_pass = ul_pass && c.pass;
        }
        else if (is_gap)
        {
            gap_max = std::max(gap_max, c.rel_err);
            dl_pass = dl_pass && c.pass;
        }
        else if (is_moment)
        {
            moment_max = std::max(moment_max, c.rel_err);
            dl_pass = dl_pass && c.pass;
        }
        else
        {
            dl_max = std::max(dl_max, c.rel_err);
            dl_pass = dl_pass && c.pass;
        }
    }

    report(ul_pass, "ul term equivalence",
           "20 instances at 1e5 symbols; max rel err over I1..I4 and gamma " + fmt(ul_max) +
               " <= 0.02");
    report(dl_pass, "dl term checks",
           "20 instances at 1e5 blocks; max rel err over desired/J1/J2/J3/noise/gamma " +
               fmt(dl_max) + " <= 0.02; E|h^|^4 vs 2a^2 " + fmt(moment_max) +
               " <= 0.03; denominator mode gap " + fmt(gap_max) + " <= 1e-10");
}

// ---------------------------------------------------------------------------
// Criterion 4: estimator contract at 10^5 draws. Per-antenna sample variance
// of h^ equals alpha, the error variance equals beta - alpha, and the
// normalized estimate/error cross-correlation stays below 2%.

void criterion_estimator()
{
    NetworkConfig c;
    c.cells = 1;
    c.cbs_antennas = 2;
    c.eaps_per_cell = 1;
    c.eap_antennas = 2;
    c.users_per_cell = 1;
    c.pilot_len = 1;
    c.ue_power_w = 1.0;
    c.noise_psd_dbm_hz = 30.0; // 1 W over 1 Hz
    c.noise_figure_db = 0.0;
    c.bandwidth_hz = 1.0;

    RandomStream beta_rng(7, 1);
    BetaTable beta;
    beta.gain.set_size(1, 2);
    beta.gain(0, 0) = std::exp(beta_rng.uniform(-1.0, 1.0));
    beta.gain(0, 1) = std::exp(beta_rng.uniform(-1.0, 1.0));
    RandomStream pilot_rng(7, 2);
    const PilotBook pilots = assign_pilots(c, pilot_rng);

    const int m = c.service_antennas();
    const int n = 100000;
    arma::vec est_pow(m, arma::fill::zeros), err_pow(m, arma::fill::zeros);
    std::complex<double> cross{};
    arma::mat alpha;
    RandomStream chan_rng(7, 3), est_rng(7, 4);
    for (int i = 0; i < n; ++i)
    {
        const ChannelRealization chan = draw_channels(beta, c, chan_rng);
        const EstimateSet est = estimate_channels(chan, pilots, beta, c, est_rng);
        const arma::cx_vec err = est.error(chan, c, 0, 0);
        for (int a = 0; a < m; ++a)
        {
            est_pow(a) += std::norm(est.hhat[0](a));
            err_pow(a) += std::norm(err(a));
        }
        cross += arma::cdot(est.hhat[0], err);
        if (i == 0)
            alpha = est.alpha;
    }

    const arma::vec a_vec = per_antenna(alpha, c, 0, 0);
    const arma::vec b_vec = per_antenna(beta.gain, c, 0, 0);
    double var_err = 0.0;
    for (int a = 0; a < m; ++a)
    {
        var_err = std::max(var_err, std::abs(est_pow(a) / n - a_vec(a)) / a_vec(a));
        var_err = std::max(var_err,
                           std::abs(err_pow(a) / n - (b_vec(a) - a_vec(a))) / (b_vec(a) - a_vec(a)));
    }
    const double norm = std::sqrt(arma::accu(a_vec) * arma::accu(b_vec - a_vec));
    const double xcorr = std::abs(cross) / n / norm;

    const bool pass = var_err <= 0.02 && xcorr < 0.02;
    report(pass, "estimator contract",
           "1e5 draws; max variance rel err (h^ vs alpha, error vs beta-alpha) " + fmt(var_err) +
               " <= 0.02; cross-correlation " + fmt(xcorr) + " < 0.02");
}

// ---------------------------------------------------------------------------
// Criterion 5: degenerate configurations against independently coded
// cell-free and cellular oracles, written with scalar loops only.

double oracle_ul_gamma(const NetworkConfig &cfg, const BetaTable &beta, const EstimateSet &est,
                       int cell, int user)
{
    const int m = cfg.service_antennas();
    const int u = cfg.user_id(cell, user);
    const std::vector<std::complex<double>> h(est.hhat[u].begin(), est.hhat[u].end());

    double norm2 = 0.0;
    for (int a = 0; a < m; ++a)
        norm2 += std::norm(h[a]);

    double den = 0.0;
    // Beamforming leakage from the other users of this cell.
    for (int k = 0; k < cfg.users_per_cell; ++k)
    {
        if (k == user)
            continue;
        const arma::cx_vec &hk = est.hhat[cfg.user_id(cell, k)];
        std::complex<double> inner{};
        for (int a = 0; a < m; ++a)
            inner += std::conj(h[a]) * hk(a);
        den += std::norm(inner);
    }
    // Estimation-error power of every own-cell user, including the target.
    for (int k = 0; k < cfg.users_per_cell; ++k)
    {
        const int v = cfg.user_id(cell, k);
        for (int s = 0; s < cfg.sites_per_cell(); ++s)
        {
            const double theta = beta(v, cfg.site_id(cell, s)) - est.alpha(v, cfg.site_id(cell, s));
            const int off = cfg.block_offset(s);
            for (int a = 0; a < cfg.site_antennas(s); ++a)
                den += std::norm(h[off + a]) * theta;
        }
    }
    // Full composite power of every other-cell user.
    for (int ci = 0; ci < cfg.cells; ++ci)
    {
        if (ci == cell)
            continue;
        for (int k = 0; k < cfg.users_per_cell; ++k)
        {
            const int v = cfg.user_id(ci, k);
            for (int s = 0; s < cfg.sites_per_cell(); ++s)
            {
                const double r = beta(v, cfg.site_id(cell, s));
                const int off = cfg.block_offset(s);
                for (int a = 0; a < cfg.site_antennas(s); ++a)
                    den += std::norm(h[off + a]) * r;
            }
        }
    }
    den += noise_power(cfg) / cfg.ue_power_w * norm2;
    return norm2 * norm2 / den;
}

void oracle_dl_gamma(const NetworkConfig &cfg, const BetaTable &beta, const EstimateSet &est,
                     const PowerControl &pc, int cell, int user, double &paper, double &rigorous)
{
    const int u = cfg.user_id(cell, user);
    const int na = cfg.eap_antennas;

    double tr = 0.0, tr_sq = 0.0;
    for (int a = 0; a < cfg.cbs_antennas; ++a)
    {
        tr += pc.cbs_diag[u](a);
        tr_sq += pc.cbs_diag[u](a) * pc.cbs_diag[u](a);
    }

    double desired = est.alpha(u, cfg.site_id(cell, 0)) * tr;
    double own = est.alpha(u, cfg.site_id(cell, 0)) * beta(u, cfg.site_id(cell, 0)) * tr_sq;
    double leak = 0.0;
    for (int l = 1; l <= cfg.eaps_per_cell; ++l)
    {
        const double a = est.alpha(u, cfg.site_id(cell, l));
        const double b = beta(u, cfg.site_id(cell, l));
        const double d = pc.eap_coeff(u, l - 1);
        desired += d * a * na;
        own += d * d * a * a * na;
        leak += d * d * a * (b - a) * na;
    }

    double other = 0.0;
    for (int ci = 0; ci < cfg.cells; ++ci)
        for (int k = 0; k < cfg.users_per_cell; ++k)
        {
            const int v = cfg.user_id(ci, k);
            if (v == u)
                continue;
            double vtr_sq = 0.0;
            for (int a = 0; a < cfg.cbs_antennas; ++a)
                vtr_sq += pc.cbs_diag[v](a) * pc.cbs_diag[v](a);
            other += est.alpha(v, cfg.site_id(ci, 0)) * beta(u, cfg.site_id(ci, 0)) * vtr_sq;
            for (int l = 1; l <= cfg.eaps_per_cell; ++l)
            {
                const double d = pc.eap_coeff(v, l - 1);
                other += d * d * beta(u, cfg.site_id(ci, l)) * est.alpha(v, cfg.site_id(ci, l)) * na;
            }
        }

    const double noise = noise_power(cfg) / cfg.dl_power_w;
    rigorous = desired * desired / (own + other + noise);
    paper = desired * desired / (own + leak + other + noise);
}

struct FixedInstance {
    NetworkConfig config;
    BetaTable beta;
    EstimateSet est;
    PowerControl pc;
};

FixedInstance fixed_instance(NetworkConfig c, std::uint64_t seed)
{
    FixedInstance inst;
    inst.config = c;
    RandomStream beta_rng(seed, 1);
    inst.beta.gain.set_size(c.total_users(), c.total_sites());
    for (arma::uword i = 0; i < inst.beta.gain.n_elem; ++i)
        inst.beta.gain(i) = std::exp(beta_rng.uniform(-1.0, 1.0));
    RandomStream chan_rng(seed, 2);
    const ChannelRealization chan = draw_channels(inst.beta, c, chan_rng);
    RandomStream pilot_rng(seed, 3);
    const PilotBook pilots = assign_pilots(c, pilot_rng);
    RandomStream est_rng(seed, 4);
    inst.est = estimate_channels(chan, pilots, inst.beta, c, est_rng);
    inst.pc = dl_power_control(inst.est, c);
    return inst;
}

double degenerate_worst(const FixedInstance &inst)
{
    const NetworkConfig &c = inst.config;
    const UplinkPower eta = UplinkPower::full(c);
    double worst = 0.0;
    for (int cell = 0; cell < c.cells; ++cell)
        for (int k = 0; k < c.users_per_cell; ++k)
        {
            const arma::cx_mat xi = build_xi(inst.est, inst.beta, eta, c, cell, k);
            const double lib_ul = ul_sinr_analytic(inst.est, xi, eta, c, cell, k);
            const double ora_ul = oracle_ul_gamma(c, inst.beta, inst.est, cell, k);
            worst = std::max(worst, std::abs(lib_ul - ora_ul) / ora_ul);

            double ora_paper = 0.0, ora_rig = 0.0;
            oracle_dl_gamma(c, inst.beta, inst.est, inst.pc, cell, k, ora_paper, ora_rig);
            const double lib_paper =
                dl_sinr_analytic(inst.est, inst.beta, inst.pc, c, cell, k, DlSinrMode::kPaper);
            const double lib_rig =
                dl_sinr_analytic(inst.est, inst.beta, inst.pc, c, cell, k, DlSinrMode::kRigorous);
            worst = std::max(worst, std::abs(lib_paper - ora_paper) / ora_paper);
            worst = std::max(worst, std::abs(lib_rig - ora_rig) / ora_rig);
        }
    return worst;
}

void criterion_degenerate()
{
    // Cell-free: one cell, distributed sites only.
    NetworkConfig cf;
    cf.scenario = Scenario::kCfmmimo;
    cf.cells = 1;
    cf.cbs_antennas = 0;
    cf.eaps_per_cell = 4;
    cf.eap_antennas = 2;
    cf.users_per_cell = 2;
    cf.pilot_len = 2;
    cf.ue_power_w = 1.0;
    cf.dl_power_w = 1.0;
    cf.noise_psd_dbm_hz = 30.0;
    cf.noise_figure_db = 0.0;
    cf.bandwidth_hz = 1.0;

    // Cellular: two cells of co-located arrays only.
    NetworkConfig cm = cf;
    cm.scenario = Scenario::kCmmimo;
    cm.cells = 2;
    cm.cbs_antennas = 4;
    cm.eaps_per_cell = 0;

    const double worst_cf = degenerate_worst(fixed_instance(cf, 31415));
    const double worst_cm = degenerate_worst(fixed_instance(cm, 27182));
    const double worst = std::max(worst_cf, worst_cm);
    report(worst <= 1e-10, "degenerate reductions",
           "cell-free and cellular SINRs vs scalar-loop oracles, worst rel diff " + fmt(worst) +
               " <= 1e-10");
}

// ---------------------------------------------------------------------------
// Criterion 6: byte-identical CSV from two campaign runs of one config.

void criterion_determinism()
{
    NetworkConfig c = desk_base();
    c.drops = 100;
    const CampaignResult r1 = run_campaign(c, 2);
    const CampaignResult r2 = run_campaign(c, 4);
    const std::string csv1 = results_csv_text({{"hmmimo", c, r1}});
    const std::string csv2 = results_csv_text({{"hmmimo", c, r2}});
    report(csv1 == csv2, "determinism",
           "two 100-drop campaigns (2 and 4 worker threads), CSV bytes " +
               std::string(csv1 == csv2 ? "identical" : "differ") + " over " +
               std::to_string(csv1.size()) + " bytes");
}

// ---------------------------------------------------------------------------
// Criterion 7: trivial limits. Full-pilot blocks carry zero UL SE, and in a
// single-user network gamma_UL scales as 1/sigma_n^2 (log-log slope -1
// within 1%) across two noise decades.

void criterion_limits()
{
    NetworkConfig full_pilot = desk_base();
    full_pilot.pilot_len = full_pilot.coherence_len;
    bool zero_se = true;
    for (const SeSample &s : run_drop(full_pilot, 0))
        zero_se = zero_se && s.se_ul == 0.0 && s.gamma_ul > 0.0;

    // Single user, single cell, fixed channel; only the training noise and
    // the receiver noise move with sigma_n^2.
    NetworkConfig c;
    c.cells = 1;
    c.cbs_antennas = 4;
    c.eaps_per_cell = 0;
    c.eap_antennas = 1;
    c.users_per_cell = 1;
    c.pilot_len = 1;
    c.ue_power_w = 1.0;
    c.noise_figure_db = 0.0;
    c.bandwidth_hz = 1.0;

    RandomStream rng(99, 1);
    arma::cx_vec h(4), w(4);
    for (int a = 0; a < 4; ++a)
    {
        h(a) = rng.cgaussian();
        w(a) = rng.cgaussian();
    }

    std::vector<double> lx, ly;
    for (int j = 0; j <= 4; ++j)
    {
        const double sigma2 = 1e-7 * std::pow(10.0, 0.5 * j);
        c.noise_psd_dbm_hz = 30.0 + 10.0 * std::log10(sigma2);

        const double alpha = mmse_alpha(c.ue_power_w, 1.0, sigma2);
        EstimateSet est;
        est.alpha = arma::mat(1, 1);
        est.alpha(0, 0) = alpha;
        est.hhat = {arma::cx_vec(alpha * (h + std::sqrt(sigma2 / c.ue_power_w) * w))};
        BetaTable beta;
        beta.gain = arma::mat(1, 1, arma::fill::ones);

        const UplinkPower eta = UplinkPower::full(c);
        const arma::cx_mat xi = build_xi(est, beta, eta, c, 0, 0);
        const double gamma = ul_sinr_analytic(est, xi, eta, c, 0, 0);
        lx.push_back(std::log(sigma2));
        ly.push_back(std::log(gamma));
    }

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i)
    {
        mx += lx[i];
        my += ly[i];
    }
    mx /= lx.size();
    my /= ly.size();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i)
    {
        num += (lx[i] - mx) * (ly[i] - my);
        den += (lx[i] - mx) * (lx[i] - mx);
    }
    const double slope = num / den;

    const bool pass = zero_se && std::abs(slope + 1.0) <= 0.01;
    report(pass, "prelog and noise limits",
           std::string("tau_p = tau_c gives UL SE ") + (zero_se ? "0" : "nonzero") +
               "; single-user gamma vs sigma_n^2 log-log slope " + fmt(slope) +
               " within 0.01 of -1 over two decades");
}

} // namespace

int main()
{
    criterion_ordering();
    criterion_oracles();
    criterion_estimator();
    criterion_degenerate();
    criterion_determinism();
    criterion_limits();

    std::printf("acceptance: %d/%d criteria passed\n", g_passed, g_total);
    return g_passed == g_total ? 0 : 1;
}
