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

#include "dyncode/library.h"

#include <stdexcept>

#include "dyncode/floquet.h"
#include "dyncode/gf2.h"

namespace dyncode {

namespace {

std::vector<PauliOperator> parse_all(const std::vector<std::string> &texts, size_t n) {
    std::vector<PauliOperator> out;
    for (const auto &t : texts) {
        out.push_back(parse_pauli(t, n));
    }
    return out;
}

PauliOperator two_body(size_t n, size_t a, size_t b, char kind) {
    PauliOperator p(n);
    p.set(a, kind);
    p.set(b, kind);
    return p;
}

/// Keeps the operators independent of the ones kept before them.
std::vector<PauliOperator> independent_prefix(const std::vector<PauliOperator> &ops, size_t n) {
    EchelonBasis basis(2 * n);
    std::vector<PauliOperator> out;
    for (const auto &p : ops) {
        if (basis.insert(p.symplectic())) {
            out.push_back(p);
        }
    }
    return out;
}

const std::vector<std::string> kShorStabilizers = {
    "Z1 Z2", "Z2 Z3", "Z4 Z5", "Z5 Z6", "Z7 Z8", "Z8 Z9", "X1 X2 X3 X4 X5 X6", "X4 X5 X6 X7 X8 X9"};

}  // namespace

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Computed:
            return "computed";
        case Provenance::PaperReference:
            return "paper-reference";
        case Provenance::DerivedOracle:
            return "derived-oracle";
    }
    return "computed";
}

DynamicalCode shor_code() {
    DynamicalCode code;
    code.n = 9;
    code.s0 = parse_all(kShorStabilizers, 9);
    code.s0_labels = {"z1z2", "z2z3", "z4z5", "z5z6", "z7z8", "z8z9", "x1-6", "x4-9"};
    code.rounds = {code.s0};
    code.logicals = parse_all({"X1 X2 X3", "Z1 Z4 Z7"}, 9);
    code.logical_labels = {"zL", "xL"};
    return code;
}

DynamicalCode shor_code_masked() {
    DynamicalCode code = shor_code();
    code.rounds = {std::vector<PauliOperator>(code.s0.begin() + 1, code.s0.end())};
    return code;
}

DynamicalCode bacon_shor(size_t rows, size_t cols) {
    if (rows < 2 || cols < 2) {
        throw std::invalid_argument("Bacon-Shor needs at least 2 rows and 2 columns");
    }
    const size_t n = rows * cols;
    auto q = [cols](size_t r, size_t c) {
        return r * cols + c;
    };
    std::vector<PauliOperator> zz;
    std::vector<std::string> zz_labels;
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c + 1 < cols; c++) {
            zz.push_back(two_body(n, q(r, c), q(r, c + 1), 'Z'));
            zz_labels.push_back("zz" + std::to_string(r) + "." + std::to_string(c));
        }
    }
    std::vector<PauliOperator> xx;
    for (size_t r = 0; r + 1 < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            xx.push_back(two_body(n, q(r, c), q(r + 1, c), 'X'));
        }
    }
    DynamicalCode code;
    code.n = n;
    code.s0 = zz;
    code.s0_labels = zz_labels;
    for (size_t r = 0; r + 1 < rows; r++) {
        PauliOperator x(n);
        for (size_t c = 0; c < cols; c++) {
            x.set(q(r, c), 'X');
            x.set(q(r + 1, c), 'X');
        }
        code.s0.push_back(x);
        code.s0_labels.push_back("xrows" + std::to_string(r) + "." + std::to_string(r + 1));
    }
    code.rounds = {xx, zz};
    code.periodic = true;
    PauliOperator x_logical(n);
    PauliOperator z_logical(n);
    for (size_t c = 0; c < cols; c++) {
        x_logical.set(q(0, c), 'X');
    }
    for (size_t r = 0; r < rows; r++) {
        z_logical.set(q(r, 0), 'Z');
    }
    code.logicals = {x_logical, z_logical};
    code.logical_labels = {"xL", "zL"};
    return code;
}

HoneycombLayout honeycomb_layout(size_t cells_x, size_t cells_y) {
    if (cells_x == 0 || cells_y == 0 || cells_x % 3 || cells_y % 3) {
        throw std::invalid_argument(
            "honeycomb torus needs both sizes to be positive multiples of 3, got " + std::to_string(cells_x) + "x" +
            std::to_string(cells_y));
    }
    HoneycombLayout out;
    out.cells_x = cells_x;
    out.cells_y = cells_y;
    out.n = 2 * cells_x * cells_y;
    const size_t n = out.n;
    auto wrap_x = [&](long x) {
        return static_cast<size_t>(((x % static_cast<long>(cells_x)) + cells_x) % cells_x);
    };
    auto wrap_y = [&](long y) {
        return static_cast<size_t>(((y % static_cast<long>(cells_y)) + cells_y) % cells_y);
    };
    auto cell = [&](long x, long y) {
        return wrap_x(x) * cells_y + wrap_y(y);
    };
    auto color = [&](long x, long y) {
        return static_cast<int>(((wrap_x(x) + 3 * cells_y - wrap_y(y)) % 3));
    };
    // Up triangle (x,y) joins cells (x,y), (x+1,y), (x,y+1); down triangle (x,y)
    // joins (x+1,y), (x,y+1), (x+1,y+1).
    auto up = [&](long x, long y) {
        return 2 * cell(x, y);
    };
    auto down = [&](long x, long y) {
        return 2 * cell(x, y) + 1;
    };

    out.plaquette_color.resize(cells_x * cells_y);
    out.plaquettes.assign(cells_x * cells_y, PauliOperator(n));
    out.checks.assign(3, {});
    for (size_t x = 0; x < cells_x; x++) {
        for (size_t y = 0; y < cells_y; y++) {
            out.plaquette_color[cell(x, y)] = color(x, y);
        }
    }
    const char kinds[3] = {'X', 'Y', 'Z'};
    for (long x = 0; x < static_cast<long>(cells_x); x++) {
        for (long y = 0; y < static_cast<long>(cells_y); y++) {
            // Each lattice edge of the up triangle, the down triangle sharing it,
            // and the third cell of the up triangle (which fixes the edge color).
            struct Edge {
                size_t a, b, other_down;
                int third;
            };
            const Edge edges[3] = {
                {cell(x, y), cell(x + 1, y), down(x, y - 1), color(x, y + 1)},
                {cell(x, y), cell(x, y + 1), down(x - 1, y), color(x + 1, y)},
                {cell(x + 1, y), cell(x, y + 1), down(x, y), color(x, y)},
            };
            for (const auto &e : edges) {
                PauliOperator check = two_body(n, up(x, y), e.other_down, kinds[e.third]);
                out.checks[e.third].push_back(check);
                out.plaquettes[e.a] *= check;
                out.plaquettes[e.b] *= check;
            }
        }
    }
    return out;
}

DynamicalCode honeycomb(size_t cells_x, size_t cells_y) {
    HoneycombLayout layout = honeycomb_layout(cells_x, cells_y);
    DynamicalCode code;
    code.n = layout.n;
    std::vector<PauliOperator> candidates = layout.plaquettes;
    candidates.insert(candidates.end(), layout.checks[2].begin(), layout.checks[2].end());
    code.s0 = independent_prefix(candidates, layout.n);
    code.rounds = {layout.checks[0], layout.checks[1], layout.checks[2]};
    code.periodic = true;
    return code;
}

std::vector<PauliOperator> subsystem_surface_gauges(size_t L) {
    if (L < 2 || L % 2) {
        throw std::invalid_argument("subsystem surface code needs an even L >= 2");
    }
    const size_t n = 3 * L * L;
    auto v = [L](size_t i, size_t j) {
        return (i % L) * L + (j % L);
    };
    auto h = [L](size_t i, size_t j) {
        return L * L + 2 * ((i % L) * L + (j % L));
    };
    auto u = [L](size_t i, size_t j) {
        return L * L + 2 * ((i % L) * L + (j % L)) + 1;
    };
    std::vector<PauliOperator> out;
    for (size_t i = 0; i < L; i++) {
        for (size_t j = 0; j < L; j++) {
            char kind = (i + j) % 2 == 0 ? 'X' : 'Z';
            size_t c[4] = {v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)};
            // e[k] joins c[k] and c[k+1].
            size_t e[4] = {h(i, j), u(i + 1, j), h(i, j + 1), u(i, j)};
            for (size_t k = 0; k < 4; k++) {
                PauliOperator g(n);
                g.set(c[k], kind);
                g.set(e[k], kind);
                g.set(e[(k + 3) % 4], kind);
                out.push_back(g);
            }
        }
    }
    return out;
}

DynamicalCode subsystem_surface_code(size_t L) {
    std::vector<PauliOperator> gauges = subsystem_surface_gauges(L);
    const size_t n = 3 * L * L;
    std::vector<PauliOperator> xs;
    std::vector<PauliOperator> zs;
    for (const auto &g : gauges) {
        (g.x().any() ? xs : zs).push_back(g);
    }
    // Z-type stabilizers: products of Z triangles commuting with every X triangle.
    BitMatrix z_span = BitMatrix::from_paulis(zs, n);
    BitMatrix commuting = kernel_under_form(BitMatrix::from_paulis(xs, n));
    SpanIntersection z_center = span_intersection(z_span, commuting);

    DynamicalCode code;
    code.n = n;
    std::vector<PauliOperator> candidates = xs;
    for (const auto &row : z_center.basis.row_vectors()) {
        candidates.push_back(PauliOperator::from_symplectic(row));
    }
    code.s0 = independent_prefix(candidates, n);
    code.rounds = {zs, xs};
    code.periodic = true;
    return code;
}

DynamicalCode intuition_example(size_t variant) {
    const size_t n = 7;
    DynamicalCode code;
    code.n = n;
    code.s0 = {parse_pauli("X1 X2 X3 X4 X5 X6", n)};
    code.s0_labels = {"s"};
    std::vector<std::vector<std::string>> rounds;
    switch (variant) {
        case 0:
            rounds = {{"X1 X2"}, {"X3 X4"}, {"X5 X6"}};
            break;
        case 1:
            rounds = {{"X1 X2"}, {"Z2 Z3"}, {"X3 X4"}, {"X5 X6"}};
            break;
        case 2:
            rounds = {{"X1 X2"}, {"X3 X4"}, {"Z2 Z3"}, {"X5 X6"}};
            break;
        case 3:
            rounds = {{"X5 X6"}, {"Z6 Z7"}, {"X1 X2", "X3 X4"}};
            break;
        default:
            throw std::invalid_argument("intuition example variant must be 0..3");
    }
    for (const auto &r : rounds) {
        code.rounds.push_back(parse_all(r, n));
    }
    return code;
}

DynamicalCode honeycomb_plaquette_example() {
    const size_t n = 6;
    DynamicalCode code;
    code.n = n;
    code.s0 = {parse_pauli("ZZZZZZ", n)};
    code.s0_labels = {"A"};
    code.rounds = {
        parse_all({"X1 X2", "X3 X4", "X5 X6"}, n),
        parse_all({"Y2 Y3", "Y4 Y5", "Y6 Y1"}, n),
    };
    return code;
}

DynamicalCode subsystem_pair_example() {
    DynamicalCode code;
    code.n = 1;
    code.s0 = {parse_pauli("Z", 1)};
    code.rounds = {{parse_pauli("X", 1)}};
    return code;
}

DynamicalCode logical_update_example() {
    const size_t n = 3;
    DynamicalCode code;
    code.n = n;
    code.s0 = {parse_pauli("Z3", n)};
    code.s0_labels = {"s1"};
    code.rounds = {{parse_pauli("X2", n)}, {parse_pauli("X1 Z2", n)}};
    code.round_labels = {{"s2"}, {"s3"}};
    code.logicals = {parse_pauli("Z1", n)};
    code.logical_labels = {"L1"};
    return code;
}

std::vector<CodeSpec> builtin_codes() {
    using P = Provenance;
    std::vector<CodeSpec> out;
    out.push_back({"shor", "Shor code, every stabilizer measured", shor_code(), 1, 0,
                   {{"n", 9, P::PaperReference}, {"d_isg", 3, P::PaperReference}, {"d_u", 3, P::PaperReference}}});
    out.push_back({"shor_masked_z1z2", "Shor code with z1z2 left out of the schedule", shor_code_masked(), 1, 0,
                   {{"d_u", 2, P::PaperReference}, {"d_isg", 3, P::PaperReference}, {"num_t", 1, P::Computed}}});
    DynamicalCode empty = shor_code();
    empty.rounds.clear();
    out.push_back({"empty_schedule", "Shor S0 with no measurements", empty, 0, 0,
                   {{"num_t", 8, P::Computed}, {"num_u", 0, P::Computed}, {"num_p", 0, P::Computed}}});
    out.push_back({"bacon_shor_3x3", "3x3 Bacon-Shor code", bacon_shor(3, 3), 2, 0,
                   {{"d_subsystem", 3, P::PaperReference}, {"d_isg", 3, P::DerivedOracle}}});
    out.push_back({"bacon_shor_2x2", "2x2 Bacon-Shor code", bacon_shor(2, 2), 2, 0,
                   {{"d_subsystem", 2, P::DerivedOracle}, {"d_isg", 2, P::DerivedOracle}}});
    out.push_back({"honeycomb_3x3", "honeycomb code on the 3x3 torus", honeycomb(3, 3), 4, 0,
                   {{"n", 18, P::Computed}, {"num_t", 0, P::Computed}, {"unmask_window", 4, P::PaperReference}}});
    out.push_back({"subsystem_surface_2", "subsystem surface code, L = 2", subsystem_surface_code(2), 2, 0,
                   {{"n", 12, P::Computed}, {"d_subsystem", 2, P::PaperReference}}});
    out.push_back({"chain_10", "1D chain with linear initialization depth", build_1d_chain(10), 4, 13,
                   {{"x_chain_round", 9, P::PaperReference}}});
    out.push_back({"worst_case_5", "slowest-initializing sequence on 5 qubits", build_worst_case_sequence(5), 13, 0,
                   {{"initialization_depth", 4, P::PaperReference}}});
    for (size_t v = 0; v < 4; v++) {
        out.push_back({"intuition_" + std::to_string(v), "x1..x6 under measurement order " + std::to_string(v),
                       intuition_example(v), intuition_example(v).num_rounds(), 0,
                       {{"num_u", v == 1 ? 0 : 1, P::PaperReference}, {"num_t", v == 1 ? 1 : 0, P::PaperReference}}});
    }
    out.push_back({"honeycomb_plaquette", "single blue plaquette measured by red then green checks",
                   honeycomb_plaquette_example(), 2, 0, {{"num_u", 1, P::PaperReference}}});
    out.push_back({"subsystem_pair", "Z1 then X1", subsystem_pair_example(), 1, 0,
                   {{"num_p", 1, P::PaperReference}}});
    out.push_back({"logical_update", "logical Z1 picks up X2 after X1Z2 is measured", logical_update_example(), 2, 0, {}});
    return out;
}

CodeSpec builtin_code(const std::string &name) {
    std::string known;
    for (auto &spec : builtin_codes()) {
        if (spec.name == name) {
            return spec;
        }
        known += (known.empty() ? "" : ", ") + spec.name;
    }
    throw std::invalid_argument("unknown builtin code '" + name + "'; known: " + known);
}

}  // namespace dyncode
