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
 * Line-oriented text format for circuits.
 *
 *     # width: 5            (only when not implied by the operands)
 *     # ancillas: 3,4       (only when the circuit has ancillas)
 *     h q[2]
 *     cphase(1.5707963267948966) q[1],q[2]
 *     globalphase(3.1415926535897931)
 *     # relabel: 0->2,1->0,2->1
 */
#pragma once

#include "qrtkit/circuit.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qrtkit {

namespace detail {

inline std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::size_t parse_index(std::string_view s, std::size_t line) {
    s = trim(s);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("line " + std::to_string(line) + ": bad index '" + std::string(s) + "'");
    }
    return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto p = s.find(sep);
        out.push_back(trim(s.substr(0, p)));
        if (p == std::string_view::npos) break;
        s.remove_prefix(p + 1);
    }
    return out;
}

} // namespace detail

inline std::string to_text(const Circuit& c) {
    std::ostringstream os;
    std::size_t implied = 0;
    for (const Gate& g : c.gates()) {
        for (Qubit q : g.controls) implied = std::max(implied, q + 1);
        for (Qubit q : g.targets) implied = std::max(implied, q + 1);
    }
    if (implied != c.width()) os << "# width: " << c.width() << '\n';
    if (!c.ancillas().empty()) {
        os << "# ancillas: ";
        for (std::size_t i = 0; i < c.ancillas().size(); ++i) os << (i ? "," : "") << c.ancillas()[i];
        os << '\n';
    }
    for (const Gate& g : c.gates()) {
        os << gate_name(g.kind);
        if (arity(g.kind).has_angle) os << '(' << detail::format_angle(g.angle) << ')';
        bool first = true;
        for (const auto* list : {&g.controls, &g.targets}) {
            for (Qubit q : *list) {
                os << (first ? " " : ",") << "q[" << q << ']';
                first = false;
            }
        }
        os << '\n';
    }
    if (c.relabeling()) {
        os << "# relabel: ";
        const auto& p = *c.relabeling();
        for (std::size_t q = 0; q < p.size(); ++q) os << (q ? "," : "") << q << "->" << p[q];
        os << '\n';
    }
    return os.str();
}

/// Inverse of to_text. Unknown comment lines are ignored; malformed gate
/// lines throw std::invalid_argument with the line number.
inline Circuit parse_text(std::string_view text) {
    std::vector<Gate> gates;
    std::optional<std::size_t> width;
    std::vector<Qubit> ancillas;
    std::optional<std::vector<Qubit>> relabel;
    std::size_t implied = 0;

    std::size_t lineno = 0;
    for (std::string_view raw : detail::split(text, '\n')) {
        ++lineno;
        const std::string_view line = detail::trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            const std::string_view body = detail::trim(line.substr(1));
            auto value_of = [&](std::string_view key) -> std::optional<std::string_view> {
                if (body.substr(0, key.size()) != key) return std::nullopt;
                return detail::trim(body.substr(key.size()));
            };
            if (auto v = value_of("width:")) {
                width = detail::parse_index(*v, lineno);
            } else if (auto v = value_of("ancillas:")) {
                for (auto f : detail::split(*v, ',')) ancillas.push_back(detail::parse_index(f, lineno));
            } else if (auto v = value_of("relabel:")) {
                std::vector<std::pair<std::size_t, std::size_t>> pairs;
                for (auto f : detail::split(*v, ',')) {
                    const auto arrow = f.find("->");
                    if (arrow == std::string_view::npos) {
                        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad relabel entry");
                    }
                    pairs.emplace_back(detail::parse_index(f.substr(0, arrow), lineno),
                                       detail::parse_index(f.substr(arrow + 2), lineno));
                }
                std::vector<Qubit> perm(pairs.size(), pairs.size());
                for (auto [from, to] : pairs) {
                    if (from >= perm.size()) {
                        throw std::invalid_argument("line " + std::to_string(lineno) + ": relabel index out of range");
                    }
                    perm[from] = to;
                }
                relabel = std::move(perm);
            }
            continue;
        }

        const auto sp = line.find(' ');
        std::string_view head = line.substr(0, sp);
        const std::string_view ops = sp == std::string_view::npos ? std::string_view{} : line.substr(sp + 1);
        Gate g;
        const auto paren = head.find('(');
        std::string_view name = head.substr(0, paren);
        auto kind = gate_kind_from_name(name);
        if (!kind) throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown gate '" + std::string(name) + "'");
        g.kind = *kind;
        if (paren != std::string_view::npos) {
            if (head.back() != ')') throw std::invalid_argument("line " + std::to_string(lineno) + ": unterminated angle");
            const std::string a(head.substr(paren + 1, head.size() - paren - 2));
            std::size_t used = 0;
            try {
                g.angle = std::stod(a, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != a.size() || a.empty()) {
                throw std::invalid_argument("line " + std::to_string(lineno) + ": bad angle '" + a + "'");
            }
        } else if (arity(g.kind).has_angle) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": missing angle");
        }
        std::vector<Qubit> qs;
        if (!detail::trim(ops).empty()) {
            for (auto f : detail::split(ops, ',')) {
                if (f.size() < 4 || f.substr(0, 2) != "q[" || f.back() != ']') {
                    throw std::invalid_argument("line " + std::to_string(lineno) + ": bad operand '" + std::string(f) + "'");
                }
                qs.push_back(detail::parse_index(f.substr(2, f.size() - 3), lineno));
            }
        }
        const GateArity ar = arity(g.kind);
        if (qs.size() < static_cast<std::size_t>(ar.targets)) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": too few operands");
        }
        const std::size_t nc = qs.size() - ar.targets;
        g.controls.assign(qs.begin(), qs.begin() + static_cast<std::ptrdiff_t>(nc));
        g.targets.assign(qs.begin() + static_cast<std::ptrdiff_t>(nc), qs.end());
        try {
            validate_shape(g);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
        for (Qubit q : qs) implied = std::max(implied, q + 1);
        gates.push_back(std::move(g));
    }

    Circuit c(width.value_or(implied));
    for (auto& g : gates) c.append(std::move(g));
    c.set_ancillas(std::move(ancillas));
    if (relabel) c.set_relabeling(std::move(*relabel));
    return c;
}

} // namespace qrtkit
