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

#ifndef HMMIMO_TOPOLOGY_HPP
#define HMMIMO_TOPOLOGY_HPP

#include <vector>

#include "hmmimo/config.hpp"
#include "hmmimo/rng.hpp"

namespace hmmimo {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(const Point &a, const Point &b);

// One random deployment drop: site and user coordinates in meters.
struct Topology {
    int drop_index = 0;
    std::vector<Point> cbs;                // one per cell, at the cell center
    std::vector<std::vector<Point>> eaps;  // per cell, eaps_per_cell entries
    std::vector<std::vector<Point>> users; // per cell, users_per_cell entries

    // Position of site slot `site` of `cell` (slot 0 is the cBS).
    const Point &site(int cell, int site) const
    {
        return site == 0 ? cbs[cell] : eaps[cell][site - 1];
    }
};

Point cell_origin(const NetworkConfig &config, int cell);
Point cell_center(const NetworkConfig &config, int cell);

// Evenly spaced positions along a square cell's perimeter, inset inward.
// Walks counterclockwise starting from the inner square's lower-left corner.
std::vector<Point> perimeter_positions(const NetworkConfig &config, int cell);

// Generates one drop. cBSs sit at cell centers. Edge access points are
// evenly spaced on the inset cell perimeter (hmmimo), uniform over the whole
// square (cfmmimo), or absent (cmmimo). Users are uniform inside their cell,
// resampled to stay kMinUserSiteDistanceM away from every site. Deterministic
// given the stream state.
Topology place_topology(const NetworkConfig &config, RandomStream &rng, int drop_index = 0);

} // namespace hmmimo

#endif
