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

#include "hmmimo/topology.hpp"

#include <cmath>

namespace hmmimo {

double distance(const Point &a, const Point &b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

Point cell_origin(const NetworkConfig &config, int cell)
{
    const int per_side = config.cells_per_side();
    const int col = cell % per_side;
    const int row = cell / per_side;
    return {col * config.cell_m, row * config.cell_m};
}

Point cell_center(const NetworkConfig &config, int cell)
{
    const Point o = cell_origin(config, cell);
    return {o.x + config.cell_m / 2.0, o.y + config.cell_m / 2.0};
}

std::vector<Point> perimeter_positions(const NetworkConfig &config, int cell)
{
    const int count = config.eaps_per_cell;
    std::vector<Point> out;
    out.reserve(count);
    if (count == 0)
        return out;

    const Point origin = cell_origin(config, cell);
    const double inset = config.eap_inset_m;
    const double side = config.cell_m - 2.0 * inset;
    const double perimeter = 4.0 * side;
    const double lo_x = origin.x + inset;
    const double lo_y = origin.y + inset;

    for (int i = 0; i < count; ++i)
    {
        // Arc-length position on the inner square, counterclockwise from its
        // lower-left corner.
        double s = perimeter * static_cast<double>(i) / static_cast<double>(count);
        Point p;
        if (s < side)
            p = {lo_x + s, lo_y};
        else if (s < 2.0 * side)
            p = {lo_x + side, lo_y + (s - side)};
        else if (s < 3.0 * side)
            p = {lo_x + side - (s - 2.0 * side), lo_y + side};
        else
            p = {lo_x, lo_y + side - (s - 3.0 * side)};
        out.push_back(p);
    }
    return out;
}

namespace {

Point uniform_in_rect(RandomStream &rng, const Point &origin, double side)
{
    const double x = rng.uniform(origin.x, origin.x + side);
    const double y = rng.uniform(origin.y, origin.y + side);
    return {x, y};
}

bool clear_of_sites(const Point &p, const Topology &topo, const NetworkConfig &config)
{
    // Only sites that actually carry antennas constrain placement.
    if (config.cbs_antennas > 0)
        for (const auto &s : topo.cbs)
            if (distance(p, s) < kMinUserSiteDistanceM)
                return false;
    for (const auto &cell_eaps : topo.eaps)
        for (const auto &s : cell_eaps)
            if (distance(p, s) < kMinUserSiteDistanceM)
                return false;
    return true;
}

} // namespace

Topology place_topology(const NetworkConfig &config, RandomStream &rng, int drop_index)
{
    Topology topo;
    topo.drop_index = drop_index;
    topo.cbs.reserve(config.cells);
    topo.eaps.resize(config.cells);
    topo.users.resize(config.cells);

    for (int c = 0; c < config.cells; ++c)
        topo.cbs.push_back(cell_center(config, c));

    // Sites first, users second; users must check clearance against every
    // site, so the draw order is fixed.
    for (int c = 0; c < config.cells; ++c)
    {
        if (config.scenario == Scenario::kCfmmimo)
        {
            topo.eaps[c].reserve(config.eaps_per_cell);
            for (int l = 0; l < config.eaps_per_cell; ++l)
                topo.eaps[c].push_back(uniform_in_rect(rng, cell_origin(config, c), config.cell_m));
        }
        else
        {
            topo.eaps[c] = perimeter_positions(config, c);
        }
    }

    constexpr int kMaxResamples = 1000;
    for (int c = 0; c < config.cells; ++c)
    {
        topo.users[c].reserve(config.users_per_cell);
        for (int k = 0; k < config.users_per_cell; ++k)
        {
            Point p = uniform_in_rect(rng, cell_origin(config, c), config.cell_m);
            for (int attempt = 0; attempt < kMaxResamples && !clear_of_sites(p, topo, config); ++attempt)
                p = uniform_in_rect(rng, cell_origin(config, c), config.cell_m);
            topo.users[c].push_back(p);
        }
    }

    return topo;
}

} // namespace hmmimo
