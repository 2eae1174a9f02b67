// Copyright 2026 The qrt-kit Authors
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

#include "qrtkit/gadgets.hpp"
#include "qrtkit/statevector.hpp"
#include "qrtkit/unitary.hpp"

#include <gtest/gtest.h>

#include <functional>

namespace qrtkit {
namespace {

using ClassicalMap = std::function<std::uint64_t(std::uint64_t c, std::uint64_t x, std::uint64_t N)>;

// Runs every (c, x) with clean carries and compares against `f`.
void expect_controlled_map(const Circuit& circ, std::size_t n, const ClassicalMap& f) {
    const std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t c = 0; c < 2; ++c) {
        for (std::uint64_t x = 0; x < N; ++x) {
            const std::uint64_t in = (c << n) | x;
            const std::uint64_t want = (c << n) | f(c, x, N);
            ASSERT_EQ(run_classical(circ, in), want) << "n=" << n << " c=" << c << " x=" << x;
        }
    }
}

// Matrix-level check: the data action is exactly the permutation given by `f`.
void expect_permutation_matrix(const Circuit& circ, std::size_t n, const ClassicalMap& f) {
    const RestrictedAction ra = restricted_action(circ);
    const std::uint64_t N = std::uint64_t{1} << n;
    DenseMatrix p(2 * N, 2 * N);
    for (std::uint64_t c = 0; c < 2; ++c) {
        for (std::uint64_t x = 0; x < N; ++x) p((c << n) | f(c, x, N), (c << n) | x) = 1.0;
    }
    EXPECT_LT(max_abs_diff(ra.data, p), 1e-12) << "n=" << n;
    EXPECT_LT(ra.ancilla_residual, 1e-12) << "n=" << n;
}

std::uint64_t inc_map(std::uint64_t c, std::uint64_t x, std::uint64_t N) { return (x + c) % N; }
std::uint64_t dec_map(std::uint64_t c, std::uint64_t x, std::uint64_t N) { return (x + N - c) % N; }
std::uint64_t ones_map(std::uint64_t c, std::uint64_t x, std::uint64_t N) { return c ? (N - 1) ^ x : x; }
std::uint64_t twos_map(std::uint64_t c, std::uint64_t x, std::uint64_t N) { return c ? (N - x) % N : x; }

TEST(CondIncrement, Wraparound) { EXPECT_EQ(run_classical(build_cond_increment(3), 8 | 7), 8U); }

TEST(CondIncrement, ControlOff) {
    const Circuit c = build_cond_increment(3);
    for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(run_classical(c, x), x);
}

TEST(CondIncrement, Exhaustive) {
    for (std::size_t n = 1; n <= 8; ++n) expect_controlled_map(build_cond_increment(n), n, inc_map);
}

TEST(CondIncrement, PermutationMatrix) {
    for (std::size_t n = 1; n <= 5; ++n) expect_permutation_matrix(build_cond_increment(n), n, inc_map);
}

TEST(CondIncrement, Cost) {
    EXPECT_EQ(count_gates(build_cond_increment(1)).total, 1U);
    for (std::size_t n = 2; n <= 10; ++n) EXPECT_EQ(count_gates(build_cond_increment(n)).total, 3 * n - 4);
}

TEST(CondIncrement, UsesAtMostTwoControls) {
    const Circuit built = build_cond_increment(8);
    for (const Gate& g : built.gates()) EXPECT_LE(g.controls.size(), 2U);
}

TEST(CondDecrement, Wraparound) { EXPECT_EQ(run_classical(build_cond_decrement(3), 8), 8U | 7U); }

TEST(CondDecrement, Exhaustive) {
    for (std::size_t n = 1; n <= 8; ++n) expect_controlled_map(build_cond_decrement(n), n, dec_map);
}

TEST(CondDecrement, InvertsIncrement) {
    for (std::size_t n = 1; n <= 6; ++n) {
        Circuit both = build_cond_increment(n);
        both.append(build_cond_decrement(n));
        for (std::uint64_t v = 0; v < (std::uint64_t{2} << n); ++v) EXPECT_EQ(run_classical(both, v), v);
    }
}

TEST(CondOnesComplement, Example) { EXPECT_EQ(run_classical(build_cond_ones_complement(3), 8 | 5), 8U | 2U); }

TEST(CondOnesComplement, Exhaustive) {
    for (std::size_t n = 1; n <= 8; ++n) expect_controlled_map(build_cond_ones_complement(n), n, ones_map);
}

TEST(CondOnesComplement, SelfInverse) {
    for (std::size_t n = 1; n <= 6; ++n) {
        Circuit twice = build_cond_ones_complement(n);
        twice.append(build_cond_ones_complement(n));
        for (std::uint64_t v = 0; v < (std::uint64_t{2} << n); ++v) EXPECT_EQ(run_classical(twice, v), v);
    }
}

TEST(CondTwosComplement, Examples) {
    const Circuit c = build_cond_twos_complement(3);
    EXPECT_EQ(run_classical(c, 8 | 3), 8U | 5U);
    EXPECT_EQ(run_classical(c, 8), 8U);
}

TEST(CondTwosComplement, Exhaustive) {
    for (std::size_t n = 2; n <= 8; ++n) expect_controlled_map(build_cond_twos_complement(n), n, twos_map);
}

TEST(CondTwosComplement, PermutationMatrix) {
    for (std::size_t n = 2; n <= 5; ++n) expect_permutation_matrix(build_cond_twos_complement(n), n, twos_map);
}

TEST(CondTwosComplement, CostAndAncillas) {
    for (std::size_t n = 3; n <= 10; ++n) {
        const GateCountReport r = count_gates(build_cond_twos_complement(n));
        EXPECT_EQ(r.total, 4 * n - 4) << "n=" << n;
        EXPECT_EQ(r.ancillas, n - 2) << "n=" << n;
    }
}

TEST(CondTwosComplement, RejectsSingleQubit) { EXPECT_THROW(build_cond_twos_complement(1), std::invalid_argument); }

TEST(OrGate, TruthTable) {
    const Circuit c = build_or_gate();
    for (std::uint64_t r = 0; r < 2; ++r) {
        for (std::uint64_t q = 0; q < 4; ++q) {
            const std::uint64_t in = (r << 2) | q;
            const std::uint64_t want = ((r ^ (q != 0 ? 1U : 0U)) << 2) | q;
            EXPECT_EQ(run_classical(c, in), want) << "in=" << in;
        }
    }
    EXPECT_EQ(count_gates(c).total, 3U);
}

std::uint64_t root_of(const Circuit& c, std::size_t n, std::uint64_t x) {
    return (run_classical(c, x) >> *or_tree_layout(n).root_index) & 1U;
}

TEST(OrTree, RootIsOrOfData) {
    const Circuit c = build_or_tree(4, OrTreeMode::Bare);
    for (std::uint64_t x = 0; x < 16; ++x) EXPECT_EQ(root_of(c, 4, x), x != 0 ? 1U : 0U) << "x=" << x;
}

TEST(OrTree, ExhaustiveBare) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const Circuit c = build_or_tree(n, OrTreeMode::Bare);
        const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t x = 0; x <= mask; ++x) {
            const std::uint64_t out = run_classical(c, x);
            ASSERT_EQ(out & mask, x);
            ASSERT_EQ(root_of(c, n, x), x != 0 ? 1U : 0U) << "n=" << n << " x=" << x;
        }
    }
}

TEST(OrTree, HookSeesRootThenCleansUp) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const Qubit out = 2 * n - 1;
        auto hook = [&](Circuit& c, Qubit root) { c.cnot(root, out); };
        for (OrTreeMode mode : {OrTreeMode::UncomputeInternal, OrTreeMode::ResetRoot}) {
            const Circuit c = build_or_tree(n, mode, hook, 1);
            const std::uint64_t N = std::uint64_t{1} << n;
            for (std::uint64_t x = 0; x < N; ++x) {
                // ResetRoot runs the hook twice, so the flag toggles back.
                const std::uint64_t flag = mode == OrTreeMode::ResetRoot ? 0U : (x != 0 ? 1U : 0U);
                ASSERT_EQ(run_classical(c, x), x | (flag << out)) << "n=" << n << " x=" << x;
            }
        }
    }
}

TEST(OrTree, UncomputedModesAreIdentity) {
    for (std::size_t n = 2; n <= 8; ++n) {
        for (OrTreeMode mode : {OrTreeMode::UncomputeInternal, OrTreeMode::ResetRoot}) {
            const Circuit c = build_or_tree(n, mode);
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) ASSERT_EQ(run_classical(c, x), x);
        }
    }
}

TEST(OrTree, Costs) {
    for (std::size_t n = 2; n <= 10; ++n) {
        EXPECT_EQ(count_gates(build_or_tree(n, false, false)).total, 3 * (n - 1));
        EXPECT_EQ(count_gates(build_or_tree(n, true, false)).total, 6 * (n - 1));
        EXPECT_EQ(count_gates(build_or_tree(n, true, true)).total, 12 * (n - 1));
    }
}

TEST(OrTree, TwoInputsIsOneOrGate) {
    const Circuit t = build_or_tree(2, OrTreeMode::Bare);
    EXPECT_EQ(t.gates(), build_or_gate().gates());
}

TEST(OrTree, RejectsSingleInput) { EXPECT_THROW(build_or_tree(1, OrTreeMode::Bare), std::invalid_argument); }

} // namespace
} // namespace qrtkit
