// Copyright 2026 The qclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace qclone {

using Engine = std::mt19937_64;

/// Counter-based seed derivation. Stream element i is a pure function of
/// (seed, i), so parallel work can be handed disjoint indices and still
/// reproduce a serial run exactly.
class SeedStream {
   public:
    explicit SeedStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// The i-th derived 64-bit seed.
    std::uint64_t at(std::uint64_t index) const;

    /// An independent stream keyed by `index`.
    SeedStream substream(std::uint64_t index) const { return SeedStream(at(index) ^ 0xa0761d6478bd642fULL); }

    /// A freshly seeded engine for element `index`.
    Engine engine(std::uint64_t index) const { return Engine(at(index)); }

   private:
    std::uint64_t seed_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace qclone
