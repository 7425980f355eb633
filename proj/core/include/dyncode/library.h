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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dyncode/code.h"
#include "dyncode/pauli.h"

namespace dyncode {

/// Where a reference value comes from.
enum class Provenance {
    Computed,
    PaperReference,
    DerivedOracle,
};

std::string provenance_name(Provenance p);

struct ReferenceValue {
    std::string key;
    long value;
    Provenance provenance;
};

/// A named builder output with the analysis settings and values it is known to reproduce.
struct CodeSpec {
    std::string name;
    std::string description;
    DynamicalCode code;
    size_t window = 1;
    size_t isg_round = 0;
    std::vector<ReferenceValue> references;
};

/// Nine-qubit Shor code; one round measures all eight stabilizers.
DynamicalCode shor_code();
/// Same S0 with z1z2 left out of the schedule.
DynamicalCode shor_code_masked();

/// rows x cols Bacon-Shor code. Qubit (r, c) is r * cols + c. S0 holds the ZZ
/// gauges Z(r,c)Z(r,c+1) and the X stabilizers on adjacent row pairs; the
/// period is [XX gauges X(r,c)X(r+1,c)], [ZZ gauges].
DynamicalCode bacon_shor(size_t rows, size_t cols);

/// Honeycomb lattice on a torus of cells_x x cells_y plaquettes.
struct HoneycombLayout {
    size_t n = 0;
    size_t cells_x = 0;
    size_t cells_y = 0;
    /// Color 0 (red), 1 (green) or 2 (blue) of plaquette x * cells_y + y.
    std::vector<int> plaquette_color;
    std::vector<PauliOperator> plaquettes;
    /// checks[c]: two-qubit checks on edges of color c (XX, YY, ZZ for c = 0, 1, 2).
    std::vector<std::vector<PauliOperator>> checks;
};

/// Plaquettes sit on a triangular lattice with color (x - y) mod 3, so both
/// sizes must be positive multiples of 3. Vertices are the lattice triangles.
HoneycombLayout honeycomb_layout(size_t cells_x, size_t cells_y);

/// Period [red XX], [green YY], [blue ZZ]. S0 is the ISG right after a blue
/// round: independent plaquettes followed by the blue checks.
DynamicalCode honeycomb(size_t cells_x, size_t cells_y);

/// Subsystem surface code on an L x L torus (L even): vertex and edge qubits,
/// four weight-3 triangle gauges per face, X type on even faces and Z type on
/// odd ones. S0 fixes the X triangles; the period is [Z triangles], [X triangles].
DynamicalCode subsystem_surface_code(size_t L);
/// All triangle gauges of subsystem_surface_code(L).
std::vector<PauliOperator> subsystem_surface_gauges(size_t L);

/// S0 = {x1 x2 x3 x4 x5 x6} on seven qubits with one of four measurement orders:
/// 0: x1x2, x3x4, x5x6   1: x1x2, z2z3, x3x4, x5x6   2: x1x2, x3x4, z2z3, x5x6
/// 3: [x5x6], [z6z7], [x1x2, x3x4]. Single measurements form their own rounds.
DynamicalCode intuition_example(size_t variant);

/// Blue plaquette z1...z6 measured by [x1x2, x3x4, x5x6] then [y2y3, y4y5, y6y1].
DynamicalCode honeycomb_plaquette_example();

/// S0 = {Z1}, one round measuring X1: the smallest subsystem pair.
DynamicalCode subsystem_pair_example();

/// S0 = {Z3}, logical Z1, rounds [X2], [X1 Z2]: the logical picks up X2.
DynamicalCode logical_update_example();

/// Every builder with its default settings and reference values.
std::vector<CodeSpec> builtin_codes();
/// Throws std::invalid_argument listing the known names.
CodeSpec builtin_code(const std::string &name);

}  // namespace dyncode
