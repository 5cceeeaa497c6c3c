// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Usage: lacin_acceptance <path-to-lacin-binary>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "lacin/cin.hpp"
#include "lacin/composite.hpp"
#include "lacin/layout.hpp"
#include "lacin/routing.hpp"

using namespace lacin;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::pair<CinKind, std::uint32_t>> construction_sweep() {
    std::vector<std::pair<CinKind, std::uint32_t>> out;
    for (std::uint32_t n = 2; n <= 64; ++n) {
        out.emplace_back(CinKind::swap, n);
        out.emplace_back(CinKind::circle, n);
        if (is_power_of_two(n)) out.emplace_back(CinKind::xor_, n);
    }
    return out;
}

Outcome construction() {
    Outcome o;
    const auto start = Clock::now();
    for (const auto& [kind, n] : construction_sweep()) {
        const auto m = build_pairing(kind, n);
        std::vector<PairingMatrix::Entry> entries;
        for (std::uint32_t s = 0; s < n; ++s) {
            auto row = m.row(SwitchId(s));
            entries.insert(entries.end(), row.begin(), row.end());
        }
        const auto problems = PairingMatrix::check(n, m.ports(), entries);
        o.require(problems.empty(), fmt::format("{} n={}: {}", to_string(kind), n, problems.empty() ? "" : problems[0]));
    }
    const double t = seconds_since(start);
    o.require(t < 10.0, fmt::format("took {:.2f} s", t));
    if (o.pass) o.detail = fmt::format("{} instances in {:.3f} s", construction_sweep().size(), t);
    return o;
}

Outcome isoport_classification() {
    Outcome o;
    for (const auto& [kind, n] : construction_sweep()) {
        const bool iso = is_isoport(build_pairing(kind, n));
        if (kind == CinKind::swap && n >= 3) o.require(!iso, fmt::format("swap n={} reported isoport", n));
        if (kind != CinKind::swap) o.require(iso, fmt::format("{} n={} reported anisoport", to_string(kind), n));
    }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::uint64_t checked = 0, mismatches = 0;
    for (const auto& [kind, n] : construction_sweep()) {
        const auto m = build_pairing(kind, n);
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                if (a == b) continue;
                PortId fast;
                switch (kind) {
                    case CinKind::swap: fast = route_swap(n, SwitchId(a), SwitchId(b)); break;
                    case CinKind::xor_: fast = route_xor(SwitchId(a), SwitchId(b)); break;
                    case CinKind::circle: fast = route_circle(n % 2 ? n + 1 : n, SwitchId(a), SwitchId(b)); break;
                }
                ++checked;
                if (fast != route_oracle(m, SwitchId(a), SwitchId(b))) ++mismatches;
            }
        }
    }
    o.require(mismatches == 0, fmt::format("{} mismatches", mismatches));
    if (o.pass) o.detail = fmt::format("{} ordered pairs, 0 mismatches", checked);
    return o;
}

Outcome circle_factor_three() {
    Outcome o;
    const auto f = one_factors(build_pairing(CinKind::circle, 8));
    const std::vector<std::pair<SwitchId, SwitchId>> expected = {
        {SwitchId(0), SwitchId(6)}, {SwitchId(1), SwitchId(5)}, {SwitchId(2), SwitchId(4)}, {SwitchId(3), SwitchId(7)}};
    o.require(f.factors.size() == 7 && f.factors[3].links == expected, "factor 3 differs from {(7,3),(0,6),(1,5),(2,4)}");
    return o;
}

Outcome wire_length() {
    Outcome o;
    for (auto kind : {CinKind::circle, CinKind::xor_}) {
        for (std::uint64_t n = 2; n <= 128; n += 2) {
            if (kind == CinKind::xor_ && !is_power_of_two(n)) continue;
            const auto nn = static_cast<std::uint32_t>(n);
            const auto r = wire_lengths(build_pairing(kind, nn), LinearLayout::identity(nn));
            o.require(r.total == (n * n * n - n) / 6, fmt::format("{} n={} total {}", to_string(kind), n, r.total));
            for (std::uint64_t w = 1; w < n; ++w) {
                const auto it = r.histogram.find(n - w);
                o.require(it != r.histogram.end() && it->second == w,
                          fmt::format("{} n={} histogram[{}] != {}", to_string(kind), n, n - w, w));
            }
            o.require(r.histogram.size() == n - 1, fmt::format("{} n={} extra lengths", to_string(kind), n));
        }
    }
    return o;
}

Outcome swap_sqrt2() {
    Outcome o;
    const auto start = Clock::now();
    const double root2 = std::sqrt(2.0);
    double previous_gap = INFINITY;
    double last_ratio = 0.0;
    for (std::uint32_t n : {32u, 64u, 128u, 256u, 512u}) {
        const auto r = swap_wire_lengths(n);
        const double gap = std::abs(r.ratio_to_iso - root2);
        o.require(gap < previous_gap, fmt::format("n={} ratio {:.6f} not closer to sqrt(2)", n, r.ratio_to_iso));
        previous_gap = gap;
        last_ratio = r.ratio_to_iso;
    }
    o.require(std::abs(last_ratio - root2) <= 0.05 * root2, fmt::format("n=512 ratio {:.6f}", last_ratio));
    const double t = seconds_since(start);
    o.require(t < 5.0, fmt::format("took {:.2f} s", t));
    if (o.pass) o.detail = fmt::format("ratio(512) = {:.6f}, {:.3f} s", last_ratio, t);
    return o;
}

Outcome crossings() {
    Outcome o;
    for (std::uint32_t n = 2; n <= 64; n += 2) {
        const auto m = build_pairing(CinKind::circle, n);
        const auto layout = LinearLayout::identity(n);
        for (const auto& [port, count] : crossing_count(m, layout, false).per_factor) {
            const std::uint64_t i = port.value;
            o.require(count == (i < n / 2 ? i : n - 2 - i), fmt::format("circle n={} factor {} has {}", n, i, count));
        }
        const auto laned = crossing_count(m, layout, true).total;
        o.require(laned == 0, fmt::format("circle n={} keeps {} crossings with lanes", n, laned));
    }
    std::uint64_t previous = 0;
    std::string xs;
    for (std::uint32_t n : {4u, 8u, 16u, 32u, 64u}) {
        const auto total = crossing_count(build_pairing(CinKind::xor_, n), LinearLayout::identity(n), false).total;
        if (n >= 8) o.require(total > 0, fmt::format("xor n={} has no crossings", n));
        o.require(total >= previous, fmt::format("xor crossings drop at n={}", n));
        previous = total;
        xs += fmt::format(" {}:{}", n, total);
    }
    if (o.pass) o.detail = "xor totals" + xs;
    return o;
}

Outcome fabric_numbers() {
    Outcome o;
    const auto big = fabric_stats(HyperXFabric(std::vector<DimensionSpec>(3, {16, CinKind::xor_}), 16));
    o.require(big.switches == 4096 && big.endpoints == 65536 && big.radix == 61,
              fmt::format("16^3: {} switches, {} endpoints, radix {}", big.switches, big.endpoints, big.radix));
    const auto one = fabric_stats(HyperXFabric({{8, CinKind::circle}}, 8));
    o.require(one.radix == 15 && one.endpoints == 64 && one.network_links == 28,
              fmt::format("n=8: radix {}, {} endpoints, {} links", one.radix, one.endpoints, one.network_links));
    o.require(radix_required(8) == 15 && endpoint_capacity(8) == 64 && link_count(8) == 28, "closed-form counts");
    return o;
}

Outcome hierarchy() {
    Outcome o;
    const auto r = hierarchical_bundle_report(4, 4);
    o.require(r.intra_partition_links == 24 && r.inter_partition_links == 96 && r.total_links == 120 &&
                  r.hose_count == 6 && r.wires_per_hose == 16,
              fmt::format("intra {}, inter {}, total {}, {} hoses of {}", r.intra_partition_links,
                          r.inter_partition_links, r.total_links, r.hose_count, r.wires_per_hose));
    return o;
}

Outcome dor_properties() {
    Outcome o;
    const auto start = Clock::now();
    std::vector<HyperXFabric> fabrics;
    for (auto kind : {CinKind::swap, CinKind::circle, CinKind::xor_}) {
        for (std::size_t dims = 1; dims <= 3; ++dims) {
            for (std::uint32_t size = 2; size <= 8; ++size) {
                if (kind == CinKind::xor_ && !is_power_of_two(size)) continue;
                fabrics.emplace_back(std::vector<DimensionSpec>(dims, {size, kind}), 1);
            }
        }
    }
    fabrics.emplace_back(std::vector<DimensionSpec>{{8, CinKind::xor_}, {7, CinKind::circle}, {6, CinKind::swap}}, 1);
    fabrics.emplace_back(std::vector<DimensionSpec>{{3, CinKind::circle}, {8, CinKind::swap}}, 1);
    fabrics.emplace_back(std::vector<DimensionSpec>{{5, CinKind::swap}, {4, CinKind::xor_}, {8, CinKind::circle}}, 1);

    std::uint64_t routes = 0;
    for (const auto& f : fabrics) {
        const auto dims = f.dimensions();
        std::vector<std::size_t> reverse(dims);
        for (std::size_t d = 0; d < dims; ++d) reverse[d] = dims - 1 - d;
        for (const auto& order : {f.default_order(), reverse}) {
            o.require(cdg_is_acyclic(f, order), fmt::format("cycle in CDG of {}-D fabric", dims));
        }
        const auto switches = f.switch_count();
        std::vector<std::uint32_t> src(dims + 1, 0), dst(dims + 1, 0);
        for (std::uint64_t s = 0; s < switches; ++s) {
            auto rest = s;
            for (std::size_t d = dims; d-- > 0;) {
                src[d] = static_cast<std::uint32_t>(rest % f.dimension(d).size);
                rest /= f.dimension(d).size;
            }
            for (std::uint64_t t = 0; t < switches; ++t) {
                rest = t;
                std::size_t hamming = 0;
                for (std::size_t d = dims; d-- > 0;) {
                    dst[d] = static_cast<std::uint32_t>(rest % f.dimension(d).size);
                    rest /= f.dimension(d).size;
                    hamming += src[d] != dst[d];
                }
                const auto hops = route_dor(f, {src}, {dst});
                ++routes;
                if (hops.size() != hamming + 1) {
                    o.require(false, fmt::format("path length {} vs Hamming distance {}", hops.size() - 1, hamming));
                }
            }
        }
    }
    const double t = seconds_since(start);
    o.require(t < 60.0, fmt::format("took {:.2f} s", t));
    if (o.pass) o.detail = fmt::format("{} fabrics, {} routes, {:.2f} s", fabrics.size(), routes, t);
    return o;
}

Outcome schedules() {
    Outcome o;
    for (auto kind : {CinKind::circle, CinKind::xor_}) {
        for (std::uint32_t n = 2; n <= 64; n += 2) {
            if (kind == CinKind::xor_ && !is_power_of_two(n)) continue;
            const auto s = all_to_all_schedule(build_pairing(kind, n));
            o.require(s.steps.size() == n - 1, fmt::format("{} n={}: {} steps", to_string(kind), n, s.steps.size()));
            std::set<std::pair<SwitchId, SwitchId>> seen;
            for (const auto& step : s.steps) {
                std::vector<bool> busy(n, false);
                for (const auto& [a, b] : step.links) {
                    o.require(!busy[a.value] && !busy[b.value], fmt::format("{} n={}: switch reused", to_string(kind), n));
                    busy[a.value] = busy[b.value] = true;
                    o.require(seen.insert({a, b}).second, fmt::format("{} n={}: pair repeated", to_string(kind), n));
                }
                o.require(step.links.size() == n / 2, fmt::format("{} n={}: step not perfect", to_string(kind), n));
            }
            o.require(seen.size() == link_count(n), fmt::format("{} n={}: pairs missing", to_string(kind), n));
        }
    }
    return o;
}

std::string capture(const std::string& command) {
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    return out;
}

Outcome determinism(const std::string& binary) {
    Outcome o;
    if (binary.empty()) {
        o.require(false, "path to the lacin binary not given");
        return o;
    }
    const std::vector<std::string> commands = {
        "generate --kind circle --n 8 --format json",  "generate --kind swap --n 16 --format dot",
        "generate --kind xor --n 16 --format svg",     "generate --kind circle --n 9 --format svg --lanes",
        "metrics --kind circle --n 8",                 "metrics --kind swap --n 64",
        "metrics --hyperx 16,16,16 --kind xor --edge-ports 16",
    };
    for (const auto& c : commands) {
        const auto first = capture(binary + " " + c);
        const auto second = capture(binary + " " + c);
        o.require(!first.empty(), fmt::format("`{}` produced no output", c));
        o.require(std::hash<std::string>{}(first) == std::hash<std::string>{}(second) && first == second,
                  fmt::format("`{}` differs between runs", c));
    }
    if (o.pass) o.detail = fmt::format("{} commands byte-identical", commands.size());
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string binary = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 construction correctness", construction},
        {"2 isoport classification", isoport_classification},
        {"3 routing-oracle equivalence", oracle_equivalence},
        {"4 circle n=8 factor 3", circle_factor_three},
        {"5 isoport wire length", wire_length},
        {"6 swap sqrt(2) wire ratio", swap_sqrt2},
        {"7 crossings", crossings},
        {"8 fabric stats", fabric_numbers},
        {"9 hierarchical accounting", hierarchy},
        {"10 DOR path length and CDG", dor_properties},
        {"11 all-to-all schedule", schedules},
        {"12 CLI determinism", [&] { return determinism(binary); }},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = fmt::format("exception: {}", e.what());
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << (o.detail.empty() ? "" : " -- " + o.detail) << "\n";
    }
    std::cout << fmt::format("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
