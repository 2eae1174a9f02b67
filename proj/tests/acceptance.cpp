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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include "qrtkit/cli.hpp"
#include "qrtkit/fit.hpp"
#include "qrtkit/hartley.hpp"
#include "qrtkit/oracle.hpp"
#include "qrtkit/trig.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace qrtkit;

namespace {

constexpr double kTol = 1e-10;

std::size_t pow2(std::size_t n) { return std::size_t{1} << n; }

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Verdict hartley_correctness() {
    Verdict v;
    double worst = 0;
    for (std::size_t n = 2; n <= 6; ++n) {
        const DenseMatrix h = build_reference_matrix({TransformKind::DHT, pow2(n)});
        for (const Circuit& c : {build_qht_recursive(n), build_qht_lcu(n)}) {
            const RestrictedAction ra = restricted_action(c);
            const double e = max_abs_diff(ra.data, h);
            worst = std::max({worst, e, ra.ancilla_residual});
            v.require(e < kTol && ra.ancilla_residual < kTol, c.label() + " n=" + std::to_string(n));
        }
    }
    if (v.ok) v.detail = fmt("max error %.2e", worst);
    return v;
}

Verdict amplification_law() {
    Verdict v;
    double worst = 0;
    for (std::size_t k = 0; k <= 2; ++k) {
        const AmplificationReport r = check_oblivious_amplification(3, k);
        const double want = std::sin(static_cast<double>(2 * k + 1) * kPi / 6);
        const double e = std::abs(r.overlap - want);
        worst = std::max(worst, e);
        v.require(e < kTol, "k=" + std::to_string(k));
    }
    if (v.ok) v.detail = fmt("max error %.2e", worst);
    return v;
}

Verdict block_identity(const std::function<Circuit(std::size_t)>& build, TransformKind ck, TransformKind sk, cplx phase,
                       std::size_t lo, std::size_t hi) {
    Verdict v;
    double worst = 0;
    for (std::size_t n = lo; n <= hi; ++n) {
        const std::size_t N = pow2(n);
        const BlockIdentityReport r = verify_block_identity(build(n), {ck, N}, {sk, N}, phase, kTol);
        worst = std::max(worst, r.max_error());
        v.require(r.passed(kTol), "n=" + std::to_string(n) + fmt(" error %.2e", r.max_error()));
    }
    if (v.ok) v.detail = fmt("max error %.2e", worst);
    return v;
}

Verdict type_one() {
    return block_identity([](std::size_t n) { return build_qcst_type1(n, {.final_sdg = false}); }, TransformKind::DCT1,
                          TransformKind::DST1, cplx(0, 1), 2, 4);
}

Verdict sine_optimized() {
    Verdict v;
    double worst = 0;
    for (std::size_t n = 2; n <= 5; ++n) {
        const cli::VerifyOutcome o = cli::verify_named("qst1-opt", n, kTol);
        worst = std::max(worst, o.max_error);
        v.require(o.passed, "n=" + std::to_string(n));
        const Circuit built = build_qst1_optimized(n);
        for (const Gate& g : built.gates()) {
            v.require(g.controls.size() < 3, "multi-controlled gate at n=" + std::to_string(n));
        }
    }
    if (v.ok) v.detail = fmt("max error %.2e, no gate with 3+ controls", worst);
    return v;
}

Verdict type_two_three() {
    Verdict v = block_identity([](std::size_t n) { return build_qcst_type2(n); }, TransformKind::DCT2,
                               TransformKind::DST2, 1.0, 2, 4);
    const Verdict t3 = block_identity([](std::size_t n) { return build_qcst_type3(n); }, TransformKind::DCT3,
                                      TransformKind::DST3, 1.0, 2, 4);
    for (std::size_t N = 4; N <= 16; N *= 2) {
        v.require(max_abs_diff(build_reference_matrix({TransformKind::DCT3, N}),
                               build_reference_matrix({TransformKind::DCT2, N}).transpose()) < kTol &&
                      max_abs_diff(build_reference_matrix({TransformKind::DST3, N}),
                                   build_reference_matrix({TransformKind::DST2, N}).transpose()) < kTol,
                  "type-III oracle is not the transpose");
    }
    v.require(t3.ok, "type III " + t3.detail);
    if (v.ok) v.detail = "II " + v.detail + "; III " + t3.detail;
    return v;
}

Verdict type_four() {
    Verdict v = block_identity([](std::size_t n) { return build_qcst_type4(n); }, TransformKind::DCT4,
                               TransformKind::DST4, 1.0, 1, 4);
    std::string reg;
    for (std::size_t n = 2; n <= 3; ++n) {
        const std::size_t N = pow2(n);
        const BlockIdentityReport r = verify_block_identity(build_qcst_type4(n, {.corrected = false}),
                                                            {TransformKind::DCT4, N}, {TransformKind::DST4, N}, 1.0);
        v.require(r.max_error() > 0.1, "incorrect variant too accurate at n=" + std::to_string(n));
        reg += fmt(" %.3f", r.max_error());
    }
    if (v.ok) v.detail += "; incorrect variant errors" + reg;
    return v;
}

Verdict gadgets() {
    Verdict v;
    for (std::size_t n = 1; n <= 8; ++n) {
        const std::uint64_t N = pow2(n);
        const std::uint64_t ctrl = N;
        const Circuit inc = build_cond_increment(n);
        const Circuit dec = build_cond_decrement(n);
        const Circuit ones = build_cond_ones_complement(n);
        for (std::uint64_t c = 0; c < 2; ++c) {
            for (std::uint64_t x = 0; x < N; ++x) {
                const std::uint64_t in = c * ctrl | x;
                v.require(run_classical(inc, in) == (c * ctrl | ((x + c) % N)), "inc n=" + std::to_string(n));
                v.require(run_classical(dec, in) == (c * ctrl | ((x + N - c) % N)), "dec n=" + std::to_string(n));
                v.require(run_classical(ones, in) == (c * ctrl | (c ? (N - 1) ^ x : x)), "ones n=" + std::to_string(n));
                if (n >= 2) {
                    v.require(run_classical(build_cond_twos_complement(n), in) == (c * ctrl | (c ? (N - x) % N : x)),
                              "twos n=" + std::to_string(n));
                }
            }
        }
        if (n >= 2) {
            const Circuit bare = build_or_tree(n, OrTreeMode::Bare);
            const Circuit un = build_or_tree(n, OrTreeMode::UncomputeInternal);
            const Circuit reset = build_or_tree(n, OrTreeMode::ResetRoot);
            const Qubit root = *or_tree_layout(n).root_index;
            for (std::uint64_t x = 0; x < N; ++x) {
                const std::uint64_t out = run_classical(bare, x);
                v.require((out & (N - 1)) == x && ((out >> root) & 1U) == (x != 0 ? 1U : 0U),
                          "or-tree n=" + std::to_string(n));
                v.require(run_classical(un, x) == x && run_classical(reset, x) == x,
                          "or-tree cleanup n=" + std::to_string(n));
            }
            v.require(count_gates(bare).total == 3 * (n - 1) && count_gates(un).total == 6 * (n - 1) &&
                          count_gates(reset).total == 12 * (n - 1),
                      "or-tree count n=" + std::to_string(n));
        }
        if (n >= 3) {
            v.require(count_gates(build_cond_twos_complement(n)).total == 4 * n - 4,
                      "twos-comp count n=" + std::to_string(n));
        }
    }
    if (v.ok) v.detail = "n=1..8 exhaustive; counts 4n-4 and 3/6/12(n-1)";
    return v;
}

Verdict complexity() {
    Verdict v;
    const cli::Table1 t = cli::compute_table1(6, 14);
    v.require(std::abs(t.lcu_fit.a - 0.5) <= 0.1, fmt("lcu coefficient %.4f", t.lcu_fit.a));
    v.require(t.ratio >= 3.0, fmt("ratio %.4f", t.ratio));
    v.detail = fmt("rec a=%.4f, lcu a=%.4f, ratio %.3f", t.rec_fit.a, t.lcu_fit.a, t.ratio);
    return v;
}

Verdict identities() {
    Verdict v;
    double worst = 0;
    for (std::size_t N = 2; N <= 64; N *= 2) {
        const DenseMatrix f = build_reference_matrix({TransformKind::DFT, N});
        const DenseMatrix h = build_reference_matrix({TransformKind::DHT, N});
        DenseMatrix t(N, N);
        for (std::size_t x = 0; x < N; ++x) t((N - x) % N, x) = 1.0;
        const double e1 = max_abs_diff(build_dht_from_dft(N), h);
        const double e2 = max_abs_diff(f * t, f.conj());
        const double e3 = max_abs_diff(h * h, DenseMatrix::identity(N));
        double e4 = 0;
        for (std::size_t x = 0; x < N; ++x) {
            const double a = 2 * kPi * static_cast<double>(x) / static_cast<double>(N);
            const cplx w = std::polar(1.0, a);
            e4 = std::max(e4, std::abs(cas(a) - (cplx(0.5, -0.5) * w + cplx(0.5, 0.5) * std::conj(w))));
        }
        worst = std::max({worst, e1, e2, e3, e4});
        v.require(e1 < kTol && e2 < kTol && e3 < kTol && e4 < kTol, "matrix identities N=" + std::to_string(N));
    }
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::size_t N = pow2(n);
        const DenseMatrix f = circuit_unitary(build_qft(n));
        const DenseMatrix h = restricted_action(build_qht_recursive(n)).data;
        DenseMatrix t(N, N);
        for (std::size_t x = 0; x < N; ++x) t((N - x) % N, x) = 1.0;
        const double e1 = max_abs_diff(cplx(0.5, -0.5) * f + cplx(0.5, 0.5) * f.conj(), h);
        const double e2 = max_abs_diff(f * t, f.conj());
        const double e3 = max_abs_diff(h * h, DenseMatrix::identity(N));
        worst = std::max({worst, e1, e2, e3});
        v.require(e1 < kTol && e2 < kTol && e3 < kTol, "circuit identities n=" + std::to_string(n));
    }
    if (v.ok) v.detail = fmt("max error %.2e", worst);
    return v;
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"1 hartley correctness (recursive, lcu)", hartley_correctness},
        {"2 lcu amplitude law", amplification_law},
        {"3 type-I block identity", type_one},
        {"4 optimized sine-I", sine_optimized},
        {"5 type-II / type-III block identity", type_two_three},
        {"6 type-IV corrected vs incorrect diagonal", type_four},
        {"7 gadget exhaustives and counts", gadgets},
        {"8 complexity comparison", complexity},
        {"9 identity suite", identities},
    };
    int failed = 0;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  %s  (%s)\n", v.ok ? "PASS" : "FAIL", name, v.detail.c_str());
        std::fflush(stdout);
        failed += v.ok ? 0 : 1;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%d/9 passed in %.1f s\n", 9 - failed, secs);
    return failed == 0 ? 0 : 1;
}
