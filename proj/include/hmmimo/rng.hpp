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

#ifndef HMMIMO_RNG_HPP
#define HMMIMO_RNG_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>

namespace hmmimo {

// Philox4x32-10 counter-based block cipher (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC'11). Stateless: output depends only on
// (counter, key), which is what makes independent parallel streams trivial.
class Philox4x32 {
  public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Block apply(Block ctr, Key key)
    {
        for (int round = 0; round < 10; ++round)
        {
            if (round > 0)
            {
                key[0] += 0x9E3779B9u;
                key[1] += 0xBB67AE85u;
            }
            const std::uint64_t p0 = 0xD2511F53ull * ctr[0];
            const std::uint64_t p1 = 0xCD9E8D57ull * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }
};

// Deterministic random stream addressed by (seed, stream id). The stream id
// occupies the high 64 bits of the Philox counter and the block position the
// low 64 bits, so distinct streams can never overlap regardless of how many
// variates each one consumes.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          ctr_{0u, 0u, static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32)}
    {
    }

    std::uint32_t next_u32()
    {
        if (avail_ == 0)
        {
            buf_ = Philox4x32::apply(ctr_, key_);
            if (++ctr_[0] == 0u)
                ++ctr_[1];
            avail_ = 4;
        }
        return buf_[4 - avail_--];
    }

    std::uint64_t next_u64()
    {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        return (hi << 32) | lo;
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform()
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * uniform();
    }

    // Standard normal N(0,1) via Box-Muller; the second variate is cached.
    double gaussian()
    {
        if (have_spare_)
        {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform(); // (0, 1], keeps log() finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // Circularly-symmetric complex normal CN(0,1): real and imaginary parts
    // are independent N(0, 1/2).
    std::complex<double> cgaussian()
    {
        const double re = gaussian();
        const double im = gaussian();
        return {0.7071067811865476 * re, 0.7071067811865476 * im};
    }

  private:
    Philox4x32::Key key_;
    Philox4x32::Block ctr_;
    Philox4x32::Block buf_{};
    int avail_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stage tags for the independent substreams of one Monte Carlo drop.
enum class Stage : std::uint32_t {
    kTopology = 1,
    kShadowing = 2,
    kChannels = 3,
    kPilots = 4,
    kEstimation = 5,
    kUplinkOracle = 6,
    kDownlinkOracle = 7,
};

// Stream for (master seed, drop index, stage). Streams of different drops or
// stages never share counter space, so drops may execute in any order or in
// parallel without perturbing results. Supports 2^56 drops.
inline RandomStream drop_stream(std::uint64_t seed, std::uint64_t drop_index, Stage stage)
{
    return RandomStream(seed, drop_index * 256u + static_cast<std::uint32_t>(stage));
}

} // namespace hmmimo

#endif
