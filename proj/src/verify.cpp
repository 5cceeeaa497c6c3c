// SPDX-License-Identifier: Apache-2.0

#include "lacin/verify.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "lacin/layout.hpp"
#include "lacin/routing.hpp"

namespace lacin {

std::vector<VerifyFailure> verify_matrix(const PairingMatrix& m) {
    std::vector<VerifyFailure> out;
    const auto n = m.size();
    auto fail = [&](std::string check, std::string detail) {
        out.push_back({m.kind(), n, std::move(check), std::move(detail)});
    };

    std::vector<PairingMatrix::Entry> entries;
    for (std::uint32_t s = 0; s < n; ++s) {
        const auto row = m.row(SwitchId(s));
        entries.insert(entries.end(), row.begin(), row.end());
    }
    for (auto& problem : PairingMatrix::check(n, m.ports(), entries)) {
        fail(problem.substr(0, problem.find(':')), problem);
    }

    const bool iso = is_isoport(m);
    if ((m.kind() == CinKind::circle || m.kind() == CinKind::xor_) && !iso) fail("isoport", "expected isoport");
    if (m.kind() == CinKind::swap && n >= 3 && iso) fail("isoport", "expected anisoport");

    if (m.kind() == CinKind::circle && n % 2 == 1) {
        std::vector<std::uint32_t> idle(n, 0);
        for (const auto& p : m.idle_ports()) ++idle[p.sw.value];
        for (std::uint32_t s = 0; s < n; ++s) {
            if (idle[s] != 1) fail("idle-ports", fmt::format("switch {} has {} idle ports", s, idle[s]));
        }
    }

    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const auto oracle = route_oracle(m, SwitchId(a), SwitchId(b));
            const auto fast = route(m.kind(), n, SwitchId(a), SwitchId(b));
            if (oracle != fast) {
                fail("oracle", fmt::format("route {} -> {}: closed form {} vs oracle {}", a, b, fast.value, oracle.value));
            }
        }
    }

    if (iso && n % 2 == 0) {
        const auto factors = one_factors(m).factors;
        if (factors.size() != n - 1) fail("one-factors", fmt::format("{} factors", factors.size()));
        for (const auto& f : factors) {
            std::vector<bool> hit(n, false);
            for (const auto& [a, b] : f.links) {
                if (hit[a.value] || hit[b.value]) {
                    fail("one-factors", fmt::format("factor {} reuses a switch", f.port_index.value));
                }
                hit[a.value] = hit[b.value] = true;
            }
            if (f.links.size() != n / 2) {
                fail("one-factors", fmt::format("factor {} has {} links", f.port_index.value, f.links.size()));
            }
        }
        const auto wires = wire_lengths(m, LinearLayout::identity(n));
        const std::uint64_t nn = n;
        if (wires.total != (nn * nn * nn - nn) / 6) fail("wire-length", fmt::format("total {}", wires.total));
        if (crossing_count(m, LinearLayout::identity(n), true).total != 0 && m.kind() == CinKind::circle) {
            fail("crossings", "circle lanes leave crossings");
        }
    }
    return out;
}

std::vector<VerifyFailure> verify_sweep(const std::vector<CinKind>& kinds, std::uint32_t lo, std::uint32_t hi) {
    std::vector<VerifyFailure> out;
    for (auto kind : kinds) {
        for (std::uint32_t n = std::max<std::uint32_t>(lo, 2); n <= hi; ++n) {
            if (kind == CinKind::xor_ && !is_power_of_two(n)) continue;
            try {
                auto failures = verify_matrix(build_pairing(kind, n));
                out.insert(out.end(), failures.begin(), failures.end());
            } catch (const Error& e) {
                out.push_back({kind, n, "construction", e.what()});
            }
        }
    }
    return out;
}

}  // namespace lacin
