// SPDX-License-Identifier: Apache-2.0

#include "lacin/cin.hpp"

#include <algorithm>

#include <fmt/core.h>

namespace lacin {

std::string_view to_string(CinKind kind) {
    switch (kind) {
        case CinKind::swap: return "swap";
        case CinKind::circle: return "circle";
        case CinKind::xor_: return "xor";
    }
    return "unknown";
}

std::optional<CinKind> parse_kind(std::string_view name) {
    if (name == "swap") return CinKind::swap;
    if (name == "circle") return CinKind::circle;
    if (name == "xor") return CinKind::xor_;
    return std::nullopt;
}

std::vector<std::string> PairingMatrix::check(std::uint32_t n, std::uint32_t ports,
                                              std::span<const Entry> entries) {
    std::vector<std::string> problems;
    if (entries.size() != std::size_t{n} * ports) {
        problems.push_back(fmt::format("shape: expected {}x{} entries, got {}", n, ports, entries.size()));
        return problems;
    }
    auto idx = [ports](std::uint32_t s, std::uint32_t i) { return std::size_t{s} * ports + i; };

    // pair_seen[a * n + b] for a < b
    std::vector<std::uint32_t> pair_seen(std::size_t{n} * n, 0);
    for (std::uint32_t s = 0; s < n; ++s) {
        for (std::uint32_t i = 0; i < ports; ++i) {
            const auto& e = entries[idx(s, i)];
            if (!e) continue;
            const auto t = e->sw.value;
            const auto j = e->port.value;
            if (t >= n || j >= ports) {
                problems.push_back(fmt::format("range: P[{}][{}] -> ({}, {}) out of bounds", s, i, t, j));
                continue;
            }
            if (t == s) {
                problems.push_back(fmt::format("self-loop: P[{}][{}] -> ({}, {})", s, i, t, j));
                continue;
            }
            const auto& back = entries[idx(t, j)];
            if (!back || back->sw.value != s || back->port.value != i) {
                problems.push_back(fmt::format("involution: P[{}][{}] -> ({}, {}) but P[{}][{}] does not point back",
                                               s, i, t, j, t, j));
                continue;
            }
            if (s < t) ++pair_seen[std::size_t{s} * n + t];
        }
    }
    for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = a + 1; b < n; ++b) {
            const auto seen = pair_seen[std::size_t{a} * n + b];
            if (seen != 1) {
                problems.push_back(fmt::format("completeness: switches {} and {} joined by {} links", a, b, seen));
            }
        }
    }
    return problems;
}

PairingMatrix PairingMatrix::from_entries(CinKind kind, std::uint32_t n, std::uint32_t ports,
                                          std::vector<Entry> entries) {
    if (n < 1) throw Error(ErrorKind::invalid_size, "pairing matrix needs at least one switch");
    auto problems = check(n, ports, entries);
    if (!problems.empty()) throw Error(ErrorKind::invalid_matrix, problems.front());
    return PairingMatrix(kind, n, ports, std::move(entries));
}

const PairingMatrix::Entry& PairingMatrix::at(SwitchId s, PortId i) const {
    if (s.value >= n_ || i.value >= ports_) {
        throw std::out_of_range(fmt::format("P[{}][{}] outside {}x{} matrix", s.value, i.value, n_, ports_));
    }
    return entries_[std::size_t{s.value} * ports_ + i.value];
}

std::span<const PairingMatrix::Entry> PairingMatrix::row(SwitchId s) const {
    if (s.value >= n_) throw std::out_of_range(fmt::format("switch {} outside matrix of {}", s.value, n_));
    return std::span(entries_).subspan(std::size_t{s.value} * ports_, ports_);
}

std::vector<Link> PairingMatrix::links() const {
    std::vector<Link> out;
    out.reserve(link_count(n_));
    for (std::uint32_t s = 0; s < n_; ++s) {
        for (std::uint32_t i = 0; i < ports_; ++i) {
            const auto& e = entries_[std::size_t{s} * ports_ + i];
            if (e && s < e->sw.value) out.push_back({{SwitchId(s), PortId(i)}, *e});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PortRef> PairingMatrix::idle_ports() const {
    std::vector<PortRef> out;
    for (std::uint32_t s = 0; s < n_; ++s) {
        for (std::uint32_t i = 0; i < ports_; ++i) {
            if (!entries_[std::size_t{s} * ports_ + i]) out.push_back({SwitchId(s), PortId(i)});
        }
    }
    return out;
}

namespace {

using Entries = std::vector<PairingMatrix::Entry>;

PortRef ref(std::uint32_t s, std::uint32_t i) { return {SwitchId(s), PortId(i)}; }

// Connects each switch to all the others through the first free ports.
Entries swap_entries(std::uint32_t n) {
    const std::uint32_t ports = n - 1;
    Entries e(std::size_t{n} * ports);
    for (std::uint32_t s = 0; s < n; ++s) {
        for (std::uint32_t i = 0; i < ports; ++i) {
            e[std::size_t{s} * ports + i] = s <= i ? ref(i + 1, s) : ref(i, s - 1);
        }
    }
    return e;
}

// Round-robin tournament pairing; n must be even. Factor i pairs switch i
// with the last switch and every other S with (2i - S) mod (n - 1).
Entries circle_entries(std::uint32_t n) {
    const std::uint32_t ports = n - 1;
    const std::uint32_t last = n - 1;
    Entries e(std::size_t{n} * ports);
    for (std::uint32_t i = 0; i < ports; ++i) {
        for (std::uint32_t s = 0; s < n; ++s) {
            std::uint32_t peer;
            if (s == last) {
                peer = i;
            } else if (s == i) {
                peer = last;
            } else {
                peer = (2 * i + ports - s) % ports;
            }
            e[std::size_t{s} * ports + i] = ref(peer, i);
        }
    }
    return e;
}

Entries xor_entries(std::uint32_t n) {
    const std::uint32_t ports = n - 1;
    Entries e(std::size_t{n} * ports);
    for (std::uint32_t s = 0; s < n; ++s) {
        for (std::uint32_t i = 0; i < ports; ++i) e[std::size_t{s} * ports + i] = ref(s ^ (i + 1), i);
    }
    return e;
}

}  // namespace

PairingMatrix build_pairing(CinKind kind, std::uint32_t n) {
    if (n < 2) throw Error(ErrorKind::invalid_size, fmt::format("a CIN needs at least 2 switches, got {}", n));
    switch (kind) {
        case CinKind::swap: return PairingMatrix::from_entries(kind, n, n - 1, swap_entries(n));
        case CinKind::xor_:
            if (!is_power_of_two(n)) {
                throw Error(ErrorKind::unsupported_size, fmt::format("xor needs a power-of-two size, got {}", n));
            }
            return PairingMatrix::from_entries(kind, n, n - 1, xor_entries(n));
        case CinKind::circle: {
            if (n % 2 == 0) return PairingMatrix::from_entries(kind, n, n - 1, circle_entries(n));
            // Odd sizes: drop the last row of the (n + 1) matrix; its peers go idle.
            const std::uint32_t ports = n;
            auto full = circle_entries(n + 1);
            full.resize(std::size_t{n} * ports);
            for (auto& e : full) {
                if (e && e->sw.value == n) e.reset();
            }
            return PairingMatrix::from_entries(kind, n, ports, std::move(full));
        }
    }
    throw Error(ErrorKind::invalid_size, "unknown CIN kind");
}

bool is_isoport(const PairingMatrix& m) {
    for (std::uint32_t s = 0; s < m.size(); ++s) {
        const auto row = m.row(SwitchId(s));
        for (std::uint32_t i = 0; i < row.size(); ++i) {
            if (row[i] && row[i]->port.value != i) return false;
        }
    }
    return true;
}

Factorization one_factors(const PairingMatrix& m) {
    if (!is_isoport(m)) throw Error(ErrorKind::not_isoport, "one-factors need an isoport pairing matrix");
    Factorization out;
    out.odd_size = m.size() % 2 == 1;
    out.factors.resize(m.ports());
    for (std::uint32_t i = 0; i < m.ports(); ++i) out.factors[i].port_index = PortId(i);
    for (const auto& link : m.links()) {
        out.factors[link.a.port.value].links.emplace_back(link.a.sw, link.b.sw);
    }
    for (auto& f : out.factors) std::sort(f.links.begin(), f.links.end());
    return out;
}

}  // namespace lacin
