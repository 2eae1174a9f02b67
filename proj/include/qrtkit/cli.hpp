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

/**
 * @file
 * Command implementations behind the qrt-kit executable. Each command takes
 * a CliConfig and returns its exit code and output text, so it can be
 * exercised without spawning a process.
 *
 * Exit codes: 0 success, 1 verification failure, 2 usage error.
 */
#pragma once

#include "qrtkit/circuit.hpp"
#include "qrtkit/export.hpp"
#include "qrtkit/fit.hpp"
#include "qrtkit/gadgets.hpp"
#include "qrtkit/hartley.hpp"
#include "qrtkit/oracle.hpp"
#include "qrtkit/qft.hpp"
#include "qrtkit/statevector.hpp"
#include "qrtkit/trig.hpp"
#include "qrtkit/unitary.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrtkit::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kSchemaVersion = 1;

class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class Command { Build, Verify, Counts, Table1 };
enum class Format { TextGates, Json };

struct CliConfig {
    Command command = Command::Build;
    std::string transform;
    std::size_t n = 0;
    std::optional<std::pair<std::size_t, std::size_t>> n_range;
    double tolerance = 1e-10;
    std::string output_path;
    Format format = Format::TextGates;
    bool incorrect_d2 = false;
};

struct CommandResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

inline const std::vector<std::string>& transform_names() {
    static const std::vector<std::string> names = {
        "qht-lcu", "qht-rec", "qct1", "qst1", "qst1-opt", "qct2", "qst2", "qct3",
        "qst3",    "qct4",    "qst4", "qft",  "inc",      "twos-comp", "or-tree",
    };
    return names;
}

/// Smallest n each transform accepts.
inline std::size_t min_n(const std::string& t) {
    if (t == "qht-rec" || t == "qft" || t == "inc" || t == "qct4" || t == "qst4") return 1;
    return 2;
}

/// Parses "a..b" (also "a-b" or "a:b").
inline std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    for (const std::string sep : {"..", "-", ":"}) {
        const auto p = s.find(sep);
        if (p == std::string::npos) continue;
        try {
            std::size_t used_a = 0;
            std::size_t used_b = 0;
            const std::string as = s.substr(0, p);
            const std::string bs = s.substr(p + sep.size());
            const unsigned long a = std::stoul(as, &used_a);
            const unsigned long b = std::stoul(bs, &used_b);
            if (used_a != as.size() || used_b != bs.size()) break;
            if (a > b) throw UsageError("range '" + s + "' is empty");
            return {a, b};
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            break;
        }
    }
    throw UsageError("bad range '" + s + "', expected A..B");
}

inline void check_transform(const CliConfig& cfg) {
    const auto& names = transform_names();
    if (std::find(names.begin(), names.end(), cfg.transform) == names.end()) {
        std::string all;
        for (const auto& nm : names) all += (all.empty() ? "" : ", ") + nm;
        throw UsageError("unknown transform '" + cfg.transform + "' (expected one of: " + all + ")");
    }
    if (cfg.incorrect_d2 && cfg.transform != "qct4" && cfg.transform != "qst4") {
        throw UsageError("--incorrect-d2 applies to qct4 and qst4 only");
    }
}

inline void check_n(const std::string& t, std::size_t n) {
    if (n < min_n(t)) {
        throw UsageError("transform " + t + " needs n >= " + std::to_string(min_n(t)) + ", got " + std::to_string(n));
    }
    if (n > 24) throw UsageError("n = " + std::to_string(n) + " is too large (max 24)");
}

/// The circuit a transform name stands for. qct1 is the Type-I circuit
/// without the closing S^dg, since that gate only adjusts the sine block.
inline Circuit build_named(const std::string& t, std::size_t n, bool incorrect_d2 = false) {
    if (t == "qht-lcu") return build_qht_lcu(n);
    if (t == "qht-rec") return build_qht_recursive(n);
    if (t == "qct1") return build_qcst_type1(n, {.final_sdg = false});
    if (t == "qst1") return build_qcst_type1(n);
    if (t == "qst1-opt") return build_qst1_optimized(n);
    if (t == "qct2" || t == "qst2") return build_qcst_type2(n);
    if (t == "qct3" || t == "qst3") return build_qcst_type3(n);
    if (t == "qct4" || t == "qst4") return build_qcst_type4(n, {.corrected = !incorrect_d2});
    if (t == "qft") return build_qft(n);
    if (t == "inc") return build_cond_increment(n);
    if (t == "twos-comp") return build_cond_twos_complement(n);
    if (t == "or-tree") return build_or_tree(n, OrTreeMode::Bare);
    throw UsageError("unknown transform '" + t + "'");
}

// JSON helpers

inline Json circuit_to_json(const Circuit& c) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["label"] = c.label();
    j["width"] = c.width();
    j["ancillas"] = c.ancillas();
    j["relabel"] = c.relabeling() ? Json(*c.relabeling()) : Json(nullptr);
    Json gates = Json::array();
    for (const Gate& g : c.gates()) {
        Json jg;
        jg["kind"] = std::string(gate_name(g.kind));
        jg["controls"] = g.controls;
        jg["targets"] = g.targets;
        if (arity(g.kind).has_angle) jg["angle"] = g.angle;
        gates.push_back(std::move(jg));
    }
    j["gates"] = std::move(gates);
    return j;
}

inline Json counts_to_json(const GateCountReport& r) {
    Json j;
    j["total"] = r.total;
    j["total_without_swaps"] = r.total_without_swaps();
    j["swaps"] = r.swaps;
    j["width"] = r.width;
    j["ancillas"] = r.ancillas;
    Json pk = Json::object();
    for (const auto& [k, v] : r.per_kind) pk[k] = v;
    j["per_kind"] = std::move(pk);
    return j;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Verification

struct VerifyOutcome {
    std::string transform;
    std::size_t n = 0;
    double tolerance = 1e-10;
    double max_error = INFINITY;
    double ancilla_residual = 0.0;
    bool passed = false;
    std::optional<BlockIdentityReport> block;
    bool incorrect_d2 = false;
};

namespace detail {

/// 0 when every basis input maps as `expected` says, 1 otherwise.
template <class Expected>
double classical_mismatch(const Circuit& c, std::size_t inputs, Expected expected) {
    for (std::uint64_t v = 0; v < inputs; ++v) {
        if (run_classical(c, v) != expected(v)) return 1.0;
    }
    return 0.0;
}

} // namespace detail

/// Simulation width cap for verify.
inline constexpr std::size_t kVerifyMaxWidth = kMaxStateQubits;

inline VerifyOutcome verify_named(const std::string& t, std::size_t n, double tol, bool incorrect_d2 = false) {
    const Circuit c = build_named(t, n, incorrect_d2);
    if (c.width() > kVerifyMaxWidth) {
        throw UsageError("verify: circuit width " + std::to_string(c.width()) + " exceeds simulation cap of " +
                         std::to_string(kVerifyMaxWidth));
    }
    VerifyOutcome o;
    o.transform = t;
    o.n = n;
    o.tolerance = tol;
    o.incorrect_d2 = incorrect_d2;
    const std::size_t N = std::size_t{1} << n;
    const std::uint64_t mask = N - 1;

    if (t == "qft" || t == "qht-lcu" || t == "qht-rec") {
        const RestrictedAction ra = restricted_action(c);
        const TransformKind k = t == "qft" ? TransformKind::DFT : TransformKind::DHT;
        o.max_error = max_abs_diff(ra.data, build_reference_matrix({k, N}));
        o.ancilla_residual = ra.ancilla_residual;
    } else if (t == "qst1-opt") {
        const RestrictedAction ra = restricted_action(c);
        std::vector<std::size_t> idx(N - 1);
        std::iota(idx.begin(), idx.end(), std::size_t{1});
        o.max_error = max_abs_diff(ra.data.select(idx, idx), build_reference_matrix({TransformKind::DST1, N}));
        // Residual over the subspace the transform is defined on.
        double res = 0.0;
        std::size_t anc_mask = 0;
        for (Qubit a : c.ancillas()) anc_mask |= std::size_t{1} << a;
        for (std::size_t x = 1; x < N; ++x) {
            const StateVector out = run_circuit(StateVector(c.width(), x), c);
            for (std::size_t i = 0; i < out.dim(); ++i) {
                if (i & anc_mask) res = std::max(res, std::abs(out[i]));
            }
        }
        o.ancilla_residual = res;
    } else if (t == "inc") {
        const std::uint64_t ctrl = std::uint64_t{1} << n;
        o.max_error = detail::classical_mismatch(c, std::size_t{2} << n, [&](std::uint64_t v) {
            const std::uint64_t x = v & mask;
            return (v & ctrl) ? (ctrl | ((x + 1) & mask)) : v;
        });
    } else if (t == "twos-comp") {
        const std::uint64_t ctrl = std::uint64_t{1} << n;
        o.max_error = detail::classical_mismatch(c, std::size_t{2} << n, [&](std::uint64_t v) {
            const std::uint64_t x = v & mask;
            return (v & ctrl) ? (ctrl | ((N - x) & mask)) : v;
        });
    } else if (t == "or-tree") {
        const Qubit root = *or_tree_layout(n).root_index;
        double bad = 0.0;
        for (std::uint64_t x = 0; x < N; ++x) {
            const std::uint64_t out = run_classical(c, x);
            if ((out & mask) != x || ((out >> root) & 1U) != (x != 0 ? 1U : 0U)) bad = 1.0;
        }
        o.max_error = bad;
    } else {
        const char type = t[3];
        const bool cosine = t.substr(0, 3) == "qct";
        TransformKind ck = TransformKind::DCT1;
        TransformKind sk = TransformKind::DST1;
        cplx phase = 1.0;
        switch (type) {
        case '1':
            if (cosine) phase = cplx(0.0, 1.0);
            break;
        case '2':
            ck = TransformKind::DCT2;
            sk = TransformKind::DST2;
            break;
        case '3':
            ck = TransformKind::DCT3;
            sk = TransformKind::DST3;
            break;
        default:
            ck = TransformKind::DCT4;
            sk = TransformKind::DST4;
            break;
        }
        BlockIdentityReport rep = verify_block_identity(c, {ck, N}, {sk, N}, phase, tol);
        o.max_error = cosine ? rep.max_error_cos_block : rep.max_error_sin_block;
        o.ancilla_residual = rep.ancilla_residual;
        o.block = std::move(rep);
    }
    o.passed = o.max_error < tol && o.ancilla_residual < tol && !(o.block && o.block->ambiguous);
    return o;
}

inline Json verify_to_json(const VerifyOutcome& o) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["transform"] = o.transform;
    j["n"] = o.n;
    if (o.transform == "qct4" || o.transform == "qst4") j["incorrect_d2"] = o.incorrect_d2;
    j["tolerance"] = o.tolerance;
    j["max_error"] = o.max_error;
    j["ancilla_residual"] = o.ancilla_residual;
    if (o.block) {
        const auto& b = *o.block;
        j["max_error_cos_block"] = b.max_error_cos_block;
        j["max_error_sin_block"] = b.max_error_sin_block;
        Json e;
        e["cos_block"] = b.cos_embedding;
        e["sin_block"] = b.sin_embedding;
        e["phase"] = phase_name(b.phase);
        e["ambiguous"] = b.ambiguous;
        e["match_tolerance"] = b.match_tolerance;
        j["embedding"] = std::move(e);
    }
    j["passed"] = o.passed;
    return j;
}

// Commands

namespace detail {

inline CommandResult emit(const CliConfig& cfg, std::string text, int code = kExitOk) {
    CommandResult r;
    r.exit_code = code;
    if (cfg.output_path.empty()) {
        r.out = std::move(text);
        return r;
    }
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f) throw UsageError("cannot open output file '" + cfg.output_path + "'");
    f << text;
    return r;
}

inline std::vector<std::size_t> n_values(const CliConfig& cfg) {
    if (cfg.n_range) {
        std::vector<std::size_t> v;
        for (std::size_t n = cfg.n_range->first; n <= cfg.n_range->second; ++n) v.push_back(n);
        return v;
    }
    if (cfg.n == 0) throw UsageError("give --n or --n-range");
    return {cfg.n};
}

} // namespace detail

inline CommandResult cmd_build(const CliConfig& cfg) {
    check_transform(cfg);
    check_n(cfg.transform, cfg.n);
    const Circuit c = build_named(cfg.transform, cfg.n, cfg.incorrect_d2);
    return detail::emit(cfg, cfg.format == Format::Json ? dump(circuit_to_json(c)) : to_text(c));
}

inline CommandResult cmd_verify(const CliConfig& cfg) {
    check_transform(cfg);
    check_n(cfg.transform, cfg.n);
    if (!(cfg.tolerance > 0.0)) throw UsageError("tolerance must be positive");
    const VerifyOutcome o = verify_named(cfg.transform, cfg.n, cfg.tolerance, cfg.incorrect_d2);
    return detail::emit(cfg, dump(verify_to_json(o)), o.passed ? kExitOk : kExitVerifyFailed);
}

inline CommandResult cmd_counts(const CliConfig& cfg) {
    check_transform(cfg);
    const auto ns = detail::n_values(cfg);
    for (auto n : ns) check_n(cfg.transform, n);
    if (cfg.format == Format::Json) {
        Json j;
        j["schema"] = kSchemaVersion;
        j["transform"] = cfg.transform;
        Json rows = Json::array();
        for (auto n : ns) {
            Json row;
            row["n"] = n;
            const Json counts = counts_to_json(count_gates(build_named(cfg.transform, n, cfg.incorrect_d2)));
            for (const auto& [k, v] : counts.items()) row[k] = v;
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        return detail::emit(cfg, dump(j));
    }
    std::ostringstream os;
    os << "# " << cfg.transform << "\n";
    os << "n\ttotal\tno_swaps\twidth\tancillas\n";
    for (auto n : ns) {
        const GateCountReport r = count_gates(build_named(cfg.transform, n, cfg.incorrect_d2));
        os << n << '\t' << r.total << '\t' << r.total_without_swaps() << '\t' << r.width << '\t' << r.ancillas << '\n';
    }
    return detail::emit(cfg, os.str());
}

struct Table1 {
    std::vector<std::size_t> n;
    std::vector<std::size_t> rec;
    std::vector<std::size_t> lcu;
    QuadraticFit rec_fit;
    QuadraticFit lcu_fit;
    double ratio = 0;
};

inline Table1 compute_table1(std::size_t lo, std::size_t hi) {
    if (lo < 4 || hi > 20) throw UsageError("table1: n range must lie within 4..20");
    if (hi < lo + 2) throw UsageError("table1: need at least 3 points");
    Table1 t;
    std::vector<double> x, yr, yl;
    for (std::size_t n = lo; n <= hi; ++n) {
        t.n.push_back(n);
        t.rec.push_back(count_gates(build_qht_recursive(n)).total);
        t.lcu.push_back(count_gates(build_qht_lcu(n)).total);
        x.push_back(static_cast<double>(n));
        yr.push_back(static_cast<double>(t.rec.back()));
        yl.push_back(static_cast<double>(t.lcu.back()));
    }
    t.rec_fit = fit_quadratic(x, yr);
    t.lcu_fit = fit_quadratic(x, yl);
    t.ratio = t.rec_fit.a / t.lcu_fit.a;
    return t;
}

inline CommandResult cmd_table1(const CliConfig& cfg) {
    const auto [lo, hi] = cfg.n_range.value_or(std::pair<std::size_t, std::size_t>{6, 14});
    const Table1 t = compute_table1(lo, hi);
    auto fit_json = [](const QuadraticFit& f) {
        Json j;
        j["a"] = f.a;
        j["b"] = f.b;
        j["c"] = f.c;
        return j;
    };
    if (cfg.format == Format::Json) {
        Json j;
        j["schema"] = kSchemaVersion;
        Json rows = Json::array();
        for (std::size_t i = 0; i < t.n.size(); ++i) {
            Json row;
            row["n"] = t.n[i];
            row["qht-rec"] = t.rec[i];
            row["qht-lcu"] = t.lcu[i];
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        j["fit"]["qht-rec"] = fit_json(t.rec_fit);
        j["fit"]["qht-lcu"] = fit_json(t.lcu_fit);
        j["quadratic_ratio"] = t.ratio;
        return detail::emit(cfg, dump(j));
    }
    std::ostringstream os;
    char buf[128];
    os << "n\tqht-rec\tqht-lcu\n";
    for (std::size_t i = 0; i < t.n.size(); ++i) os << t.n[i] << '\t' << t.rec[i] << '\t' << t.lcu[i] << '\n';
    for (const auto& [name, f] : {std::pair{"qht-rec", t.rec_fit}, std::pair{"qht-lcu", t.lcu_fit}}) {
        std::snprintf(buf, sizeof buf, "fit %s: %.6f n^2 %+.6f n %+.6f\n", name, f.a, f.b, f.c);
        os << buf;
    }
    std::snprintf(buf, sizeof buf, "quadratic ratio rec/lcu: %.6f\n", t.ratio);
    os << buf;
    return detail::emit(cfg, os.str());
}

/// Dispatches and maps exceptions to exit codes.
inline CommandResult run(const CliConfig& cfg) {
    try {
        switch (cfg.command) {
        case Command::Build: return cmd_build(cfg);
        case Command::Verify: return cmd_verify(cfg);
        case Command::Counts: return cmd_counts(cfg);
        case Command::Table1: return cmd_table1(cfg);
        }
    } catch (const UsageError& e) {
        return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {kExitUsage, "", std::string("error: ") + e.what() + "\n"};
    }
    return {kExitUsage, "", "error: unknown command\n"};
}

} // namespace qrtkit::cli
