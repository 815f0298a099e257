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

#include "hmmimo/topology.hpp"

using namespace hmmimo;

namespace {

NetworkConfig desk_hm()
{
    NetworkConfig c;
    c.cells = 4;
    c.cbs_antennas = 16;
    c.eaps_per_cell = 4;
    c.eap_antennas = 4;
    c.users_per_cell = 2;
    return c;
}

} // namespace

TEST_CASE("cell grid origins and centers")
{
    const NetworkConfig c = desk_hm(); // 2x2 grid of 500 m cells
    CHECK(cell_origin(c, 0).x == 0.0);
    CHECK(cell_origin(c, 0).y == 0.0);
    CHECK(cell_origin(c, 1).x == 500.0);
    CHECK(cell_origin(c, 1).y == 0.0);
    CHECK(cell_origin(c, 2).x == 0.0);
    CHECK(cell_origin(c, 2).y == 500.0);
    CHECK(cell_origin(c, 3).x == 500.0);
    CHECK(cell_origin(c, 3).y == 500.0);
    CHECK(cell_center(c, 0).x == 250.0);
    CHECK(cell_center(c, 3).y == 750.0);
}

TEST_CASE("perimeter positions with four sites are the inner corners")
{
    const NetworkConfig c = desk_hm(); // inset 10 m, inner square 480 m
    const auto pts = perimeter_positions(c, 0);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0].x == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(pts[0].y == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(pts[1].x == doctest::Approx(490.0).epsilon(1e-12));
    CHECK(pts[1].y == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(pts[2].x == doctest::Approx(490.0).epsilon(1e-12));
    CHECK(pts[2].y == doctest::Approx(490.0).epsilon(1e-12));
    CHECK(pts[3].x == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(pts[3].y == doctest::Approx(490.0).epsilon(1e-12));
}

TEST_CASE("perimeter positions are evenly spaced along the boundary")
{
    NetworkConfig c = desk_hm();
    c.eaps_per_cell = 8; // 1920 m walk, 240 m spacing
    const auto pts = perimeter_positions(c, 1);
    REQUIRE(pts.size() == 8);
    // Every point sits on the inner square of cell 1 (origin 500, 0).
    for (const Point &p : pts)
    {
        const bool on_x = std::abs(p.x - 510.0) < 1e-9 || std::abs(p.x - 990.0) < 1e-9;
        const bool on_y = std::abs(p.y - 10.0) < 1e-9 || std::abs(p.y - 490.0) < 1e-9;
        CHECK((on_x || on_y));
        CHECK(p.x >= 510.0 - 1e-9);
        CHECK(p.x <= 990.0 + 1e-9);
        CHECK(p.y >= 10.0 - 1e-9);
        CHECK(p.y <= 490.0 + 1e-9);
    }
    // Spot positions halfway along the first two sides.
    CHECK(pts[1].x == doctest::Approx(750.0).epsilon(1e-12));
    CHECK(pts[1].y == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(pts[3].x == doctest::Approx(990.0).epsilon(1e-12));
    CHECK(pts[3].y == doctest::Approx(250.0).epsilon(1e-12));
}

TEST_CASE("placement is deterministic in the stream state")
{
    const NetworkConfig c = desk_hm();
    RandomStream a(11, 1), b(11, 1);
    const Topology ta = place_topology(c, a, 0);
    const Topology tb = place_topology(c, b, 0);
    for (int cell = 0; cell < c.cells; ++cell)
        for (int k = 0; k < c.users_per_cell; ++k)
        {
            CHECK(ta.users[cell][k].x == tb.users[cell][k].x);
            CHECK(ta.users[cell][k].y == tb.users[cell][k].y);
        }
}

TEST_CASE("users stay inside their cell and clear of antenna sites")
{
    const NetworkConfig c = desk_hm();
    for (int drop = 0; drop < 50; ++drop)
    {
        RandomStream rng = drop_stream(7, drop, Stage::kTopology);
        const Topology topo = place_topology(c, rng, drop);
        for (int cell = 0; cell < c.cells; ++cell)
        {
            const Point o = cell_origin(c, cell);
            for (const Point &u : topo.users[cell])
            {
                CHECK(u.x >= o.x);
                CHECK(u.x < o.x + c.cell_m);
                CHECK(u.y >= o.y);
                CHECK(u.y < o.y + c.cell_m);
                for (int s = 0; s < c.sites_per_cell(); ++s)
                    for (int i = 0; i < c.cells; ++i)
                        CHECK(distance(u, topo.site(i, s)) >= kMinUserSiteDistanceM);
            }
        }
    }
}

TEST_CASE("cell-free drops scatter access points uniformly")
{
    NetworkConfig c;
    c.scenario = Scenario::kCfmmimo;
    c.cells = 1;
    c.cbs_antennas = 0;
    c.eaps_per_cell = 32;
    c.eap_antennas = 4;
    c.users_per_cell = 8;
    c.area_m = 500.0;
    c.cell_m = 500.0;

    double sum_x = 0.0, sum_y = 0.0;
    int n = 0;
    for (int drop = 0; drop < 100; ++drop)
    {
        RandomStream rng = drop_stream(21, drop, Stage::kTopology);
        const Topology topo = place_topology(c, rng, drop);
        for (const Point &p : topo.eaps[0])
        {
            CHECK(p.x >= 0.0);
            CHECK(p.x < 500.0);
            CHECK(p.y >= 0.0);
            CHECK(p.y < 500.0);
            sum_x += p.x;
            sum_y += p.y;
            ++n;
        }
    }
    // Mean of U(0, 500) is 250 with sd 500/sqrt(12); allow 4 standard errors.
    const double se = 500.0 / std::sqrt(12.0) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(sum_x / n - 250.0) < 4.0 * se);
    CHECK(std::abs(sum_y / n - 250.0) < 4.0 * se);
}

TEST_CASE("user coordinates are uniform over the cell")
{
    const NetworkConfig c = desk_hm();
    double sum = 0.0;
    int n = 0;
    for (int drop = 0; drop < 400; ++drop)
    {
        RandomStream rng = drop_stream(33, drop, Stage::kTopology);
        const Topology topo = place_topology(c, rng, drop);
        for (const Point &u : topo.users[0])
        {
            sum += u.x;
            ++n;
        }
    }
    const double se = 500.0 / std::sqrt(12.0) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(sum / n - 250.0) < 4.0 * se);
}
