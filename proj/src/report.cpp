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

#include "hmmimo/report.hpp"

#include <cstdio>
#include <ctime>

#include <json.hpp>

#include "hmmimo/version.hpp"

namespace hmmimo {

namespace {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string fmt4(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

} // namespace

std::uint64_t fnv1a64(const std::string &text)
{
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : text)
    {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::string results_csv_text(const std::vector<ScenarioResult> &runs)
{
    std::string out = "scenario,drop,cell,user,se_ul,se_dl,gamma_ul,gamma_dl_paper,gamma_dl_rigorous\n";
    for (const ScenarioResult &run : runs)
        for (const SeSample &s : run.result.samples)
        {
            out += run.scenario;
            out += ',';
            out += std::to_string(s.drop_index);
            out += ',';
            out += std::to_string(s.cell);
            out += ',';
            out += std::to_string(s.user);
            out += ',';
            out += fmt(s.se_ul);
            out += ',';
            out += fmt(s.se_dl);
            out += ',';
            out += fmt(s.gamma_ul);
            out += ',';
            out += fmt(s.gamma_dl_paper);
            out += ',';
            out += fmt(s.gamma_dl_rigorous);
            out += '\n';
        }
    return out;
}

std::string summary_json_text(const std::vector<ScenarioResult> &runs)
{
    nlohmann::ordered_json root;
    for (const ScenarioResult &run : runs)
    {
        const CdfSummary &ul = run.result.ul;
        const CdfSummary &dl = run.result.dl;
        nlohmann::ordered_json s;
        s["n"] = ul.n();
        s["mean_ul"] = ul.mean();
        s["mean_dl"] = dl.mean();
        s["median_ul"] = ul.median();
        s["median_dl"] = dl.median();
        s["likely95_ul"] = ul.likely95();
        s["likely95_dl"] = dl.likely95();
        s["likely95_ul_stderr"] = ul.percentile_stderr(0.05);
        s["likely95_dl_stderr"] = dl.percentile_stderr(0.05);

        // Equal UL/DL split of the tau_c - tau_p data symbols. Not part of
        // the source SE definitions, hence the nonpaper_ prefix.
        const double tau_c = run.config.coherence_len;
        const double tau_p = run.config.pilot_len;
        const double data_frac = (tau_c - tau_p) / tau_c;
        nlohmann::ordered_json tdd;
        // UL already carries the full data_frac prelog, so halving the data
        // symbols halves it; DL carries none, so it gains data_frac / 2.
        tdd["mean_ul"] = ul.mean() / 2.0;
        tdd["mean_dl"] = dl.mean() * (data_frac / 2.0);
        s["nonpaper_tdd_equal_split"] = tdd;

        root[run.scenario] = s;
    }
    return root.dump(2) + "\n";
}

RunManifest make_manifest(const NetworkConfig &base, const std::vector<std::string> &scenarios,
                          const std::vector<std::string> &outputs)
{
    RunManifest m;
    char hash[20];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_config_text(base))));
    m.config_hash = hash;
    m.artifact_version = kVersion;

    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char stamp[32];
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm);
    m.timestamp = stamp;

    m.scenarios = scenarios;
    m.outputs = outputs;
    return m;
}

std::string manifest_json_text(const RunManifest &manifest)
{
    nlohmann::ordered_json root;
    root["config_hash"] = manifest.config_hash;
    root["artifact_version"] = manifest.artifact_version;
    root["timestamp"] = manifest.timestamp;
    root["scenarios"] = manifest.scenarios;
    root["outputs"] = manifest.outputs;
    return root.dump(2) + "\n";
}

std::string cdf_svg_text(const std::vector<ScenarioResult> &runs)
{
    const double width = 720.0, height = 480.0;
    const double x0 = 70.0, x1 = 690.0, y0 = 430.0, y1 = 40.0;

    double se_max = 0.0;
    for (const ScenarioResult &run : runs)
    {
        if (!run.result.ul.sorted_se.empty())
            se_max = std::max(se_max, run.result.ul.sorted_se.back());
        if (!run.result.dl.sorted_se.empty())
            se_max = std::max(se_max, run.result.dl.sorted_se.back());
    }
    if (se_max <= 0.0)
        se_max = 1.0;

    auto sx = [&](double se) { return x0 + (x1 - x0) * se / se_max; };
    auto sy = [&](double p) { return y0 + (y1 - y0) * p; };

    const char *colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"};

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt4(width) + "\" height=\"" +
           fmt4(height) + "\" viewBox=\"0 0 " + fmt4(width) + " " + fmt4(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes.
    svg += "<line x1=\"" + fmt4(x0) + "\" y1=\"" + fmt4(y0) + "\" x2=\"" + fmt4(x1) + "\" y2=\"" +
           fmt4(y0) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt4(x0) + "\" y1=\"" + fmt4(y0) + "\" x2=\"" + fmt4(x0) + "\" y2=\"" +
           fmt4(y1) + "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i)
    {
        const double se = se_max * i / 5.0;
        const double p = i / 5.0;
        svg += "<line x1=\"" + fmt4(sx(se)) + "\" y1=\"" + fmt4(y0) + "\" x2=\"" + fmt4(sx(se)) +
               "\" y2=\"" + fmt4(y0 + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt4(sx(se)) + "\" y=\"" + fmt4(y0 + 20) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + fmt4(se) + "</text>\n";
        svg += "<line x1=\"" + fmt4(x0 - 5) + "\" y1=\"" + fmt4(sy(p)) + "\" x2=\"" + fmt4(x0) +
               "\" y2=\"" + fmt4(sy(p)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + fmt4(x0 - 10) + "\" y=\"" + fmt4(sy(p) + 4) +
               "\" font-size=\"12\" text-anchor=\"end\">" + fmt4(p) + "</text>\n";
    }
    svg += "<text x=\"" + fmt4((x0 + x1) / 2) + "\" y=\"" + fmt4(height - 10) +
           "\" font-size=\"14\" text-anchor=\"middle\">Per-user spectral efficiency (bits/s/Hz)"
           "</text>\n";
    svg += "<text x=\"18\" y=\"" + fmt4((y0 + y1) / 2) +
           "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
           fmt4((y0 + y1) / 2) + ")\">Cumulative probability</text>\n";

    // 5th-percentile marker.
    svg += "<line x1=\"" + fmt4(x0) + "\" y1=\"" + fmt4(sy(0.05)) + "\" x2=\"" + fmt4(x1) +
           "\" y2=\"" + fmt4(sy(0.05)) +
           "\" stroke=\"#888888\" stroke-dasharray=\"2,4\"/>\n";
    svg += "<text x=\"" + fmt4(x1) + "\" y=\"" + fmt4(sy(0.05) - 5) +
           "\" font-size=\"11\" text-anchor=\"end\" fill=\"#555555\">5th percentile</text>\n";

    auto curve = [&](const CdfSummary &cdf, const char *color, bool dashed) {
        const std::size_t n = cdf.sorted_se.size();
        if (n == 0)
            return;
        const std::size_t step = std::max<std::size_t>(1, n / 512);
        std::string pts = fmt4(sx(cdf.sorted_se.front())) + "," + fmt4(sy(0.0));
        for (std::size_t i = 0; i < n; i += step)
            pts += " " + fmt4(sx(cdf.sorted_se[i])) + "," +
                   fmt4(sy(static_cast<double>(i + 1) / static_cast<double>(n)));
        pts += " " + fmt4(sx(cdf.sorted_se.back())) + "," + fmt4(sy(1.0));
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\"";
        if (dashed)
            svg += " stroke-dasharray=\"6,4\"";
        svg += " stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    };

    double legend_y = y1 + 10.0;
    for (std::size_t i = 0; i < runs.size(); ++i)
    {
        const char *color = colors[i % 5];
        curve(runs[i].result.ul, color, false);
        curve(runs[i].result.dl, color, true);
        svg += "<line x1=\"" + fmt4(x0 + 15) + "\" y1=\"" + fmt4(legend_y) + "\" x2=\"" +
               fmt4(x0 + 45) + "\" y2=\"" + fmt4(legend_y) + "\" stroke=\"" + color +
               "\" stroke-width=\"1.5\"/>\n";
        svg += "<text x=\"" + fmt4(x0 + 52) + "\" y=\"" + fmt4(legend_y + 4) +
               "\" font-size=\"12\">" + runs[i].scenario + " UL (solid) / DL (dashed)</text>\n";
        legend_y += 18.0;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace hmmimo
