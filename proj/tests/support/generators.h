// Copyright 2026 The dyncode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Hand-rolled seeded generators for property tests. Every generator draws only
// from the Gen it is given, so a seed reproduces an instance exactly.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dyncode/code.h"
#include "dyncode/errors.h"
#include "dyncode/pauli.h"

namespace dyncode::testutil {

class Gen {
   public:
    explicit Gen(uint64_t seed) : rng_(seed) {
    }

    /// Uniform in [lo, hi].
    size_t range(size_t lo, size_t hi) {
        return std::uniform_int_distribution<size_t>(lo, hi)(rng_);
    }
    bool coin(double p = 0.5) {
        return std::bernoulli_distribution(p)(rng_);
    }
    uint64_t bits() {
        return rng_();
    }

   private:
    std::mt19937_64 rng_;
};

/// Uniform over non-identity Paulis when nonidentity is set, else over all.
PauliOperator random_pauli(Gen &g, size_t n, bool nonidentity = true);
/// Each qubit is touched with probability density; never the identity.
PauliOperator random_sparse_pauli(Gen &g, size_t n, double density);

/// Up to k independent pairwise-commuting Paulis, by rejection.
std::vector<PauliOperator> random_commuting_set(Gen &g, size_t n, size_t k);

struct InstanceShape {
    size_t max_qubits = 6;
    size_t max_s0 = 6;
    size_t max_measurements = 8;
    size_t max_round_size = 3;
};

/// Random S0 and rounds of commuting measurements, non-periodic.
DynamicalCode random_code(Gen &g, const InstanceShape &shape = {});

/// Periodic schedule with empty S0, one measurement per round.
DynamicalCode random_periodic_code(Gen &g, size_t n, size_t cycle_length);

/// Rounds of random commuting measurements to append.
std::vector<std::vector<PauliOperator>> random_rounds(Gen &g, size_t n, size_t num_rounds, size_t max_round_size);

/// Invertible k x k matrix over GF(2), as row masks.
std::vector<uint64_t> random_invertible(Gen &g, size_t k);

/// Error slots 0..window, each non-trivial with probability p.
SpacetimeError random_spacetime_error(Gen &g, size_t n, size_t window, double p = 0.5);

}  // namespace dyncode::testutil
