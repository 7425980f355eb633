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
#include <optional>
#include <string>
#include <vector>

#include "dyncode/classification.h"
#include "dyncode/pauli.h"
#include "dyncode/stabilizer.h"

namespace dyncode {

/// Generators of a gauge group: S0 (as U ∪ T ∪ P), the window-fixed destabilizers
/// K and the chosen destabilizers K_T of the temporarily masked stabilizers.
struct GaugeGroup {
    size_t n = 0;
    std::vector<PauliOperator> generators;
    /// Parallel to the report's T list; empty for gauge groups not built from a report.
    std::vector<PauliOperator> t_destabilizers;
};

enum class TDestabPolicy {
    Canonical,
    Exhaustive,
};

std::string policy_name(TDestabPolicy policy);
TDestabPolicy parse_policy(const std::string &name);

/// Gauge group with explicit destabilizers for T. Each must anticommute with its
/// own T element and commute with every other element of U ∪ T ∪ P ∪ K.
GaugeGroup gauge_group_with(const ClassificationReport &report, const std::vector<PauliOperator> &t_destabilizers);

/// For each T element in order, the least solution anticommuting with it and
/// commuting with U ∪ T ∪ P, K and the destabilizers picked before it.
std::vector<PauliOperator> canonical_t_destabilizers(const ClassificationReport &report);

/// Canonical: one group. Exhaustive: every choice of destabilizers for T modulo
/// the stabilizer group, canonical choice first. Throws std::length_error when
/// the number of choices exceeds choice_cap.
std::vector<GaugeGroup> build_gauge_group(
    const ClassificationReport &report, TDestabPolicy policy, size_t choice_cap = 4096);

/// <S0 ∪ K>: the gauge qubits fixed by the measurement window alone.
GaugeGroup window_gauge_group(const ClassificationReport &report);

/// Generators of the center of the gauge group (its stabilizer group).
std::vector<PauliOperator> gauge_center(const GaugeGroup &gauge);
/// Representatives of Z(G) modulo G.
std::vector<PauliOperator> bare_logicals(const GaugeGroup &gauge);
bool is_bare_logical(const GaugeGroup &gauge, const PauliOperator &op);

struct DistanceResult {
    enum class Status {
        Found,
        /// No qualifying operator of weight <= cap; value holds the cap.
        ExceedsCap,
        /// The searched set is empty (for example an ISG with no logical qubits).
        Undefined,
    };
    Status status = Status::Undefined;
    size_t value = 0;
    std::optional<PauliOperator> witness;

    bool found() const {
        return status == Status::Found;
    }
    /// "3", "> 6" or "undefined".
    std::string str() const;
};

struct SearchOptions {
    size_t cap = 6;
    /// 0 picks std::thread::hardware_concurrency().
    size_t threads = 0;
};

/// Minimum weight of an operator commuting with every element of commute_with
/// and lying outside the group generated by exclude. Witnesses are the first hit
/// in support order, so results do not depend on the thread count.
DistanceResult min_weight_outside(
    const std::vector<PauliOperator> &commute_with,
    const std::vector<PauliOperator> &exclude,
    size_t num_qubits,
    const SearchOptions &options = {});

/// min wt N(U) \ G.
DistanceResult unmasked_distance(const ClassificationReport &report, const GaugeGroup &gauge, size_t cap = 6);
/// Under the exhaustive policy, the maximum over destabilizer choices.
DistanceResult unmasked_distance(
    const ClassificationReport &report, TDestabPolicy policy, size_t cap = 6, size_t choice_cap = 4096);
/// min wt N(S) \ <S>.
DistanceResult isg_distance(const std::vector<PauliOperator> &stabilizers, size_t num_qubits, size_t cap = 6);
DistanceResult isg_distance(const ISGState &isg, size_t cap = 6);
/// min wt Z(center(G)) \ G.
DistanceResult subsystem_distance(const GaugeGroup &gauge, size_t cap = 6);

struct DistanceSummary {
    DistanceResult d_u;
    DistanceResult d_subsystem;
    DistanceResult d_isg;
    /// Destabilizers of T behind d_u (the maximizing choice under the exhaustive policy).
    std::vector<PauliOperator> t_destabilizers;
};

/// d_u for the report's gauge group, d_subsystem for window_gauge_group(report)
/// and d_ISG for <S0>.
DistanceSummary distance_summary(
    const ClassificationReport &report, TDestabPolicy policy, size_t cap = 6, size_t choice_cap = 4096);

}  // namespace dyncode
