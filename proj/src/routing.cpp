// SPDX-License-Identifier: Apache-2.0

#include "lacin/routing.hpp"

#include <fmt/core.h>

namespace lacin {

namespace {

void require_distinct(SwitchId a, SwitchId b) {
    if (a == b) {
        throw Error(ErrorKind::same_switch,
                    fmt::format("source and destination are both switch {}; eject instead", a.value));
    }
}

void require_in_range(std::uint32_t n, SwitchId a, SwitchId b) {
    if (a.value >= n || b.value >= n) {
        throw Error(ErrorKind::invalid_address,
                    fmt::format("switch pair ({}, {}) outside a network of {}", a.value, b.value, n));
    }
}

}  // namespace

PortId route_oracle(const PairingMatrix& m, SwitchId a, SwitchId b) {
    require_distinct(a, b);
    require_in_range(m.size(), a, b);
    const auto row = m.row(a);
    for (std::uint32_t i = 0; i < row.size(); ++i) {
        if (row[i] && row[i]->sw == b) return PortId(i);
    }
    // Unreachable for a validated matrix.
    throw Error(ErrorKind::invalid_matrix, fmt::format("no port of switch {} reaches switch {}", a.value, b.value));
}

PortId route_xor(SwitchId a, SwitchId b) {
    require_distinct(a, b);
    return PortId((a.value ^ b.value) - 1);
}

PortId route_circle(std::uint32_t n, SwitchId a, SwitchId b) {
    require_distinct(a, b);
    if (n % 2 != 0) throw Error(ErrorKind::invalid_size, fmt::format("circle routing needs an even size, got {}", n));
    require_in_range(n, a, b);
    const std::uint32_t last = n - 1;
    const std::uint32_t t = a.value + b.value;
    if (t == last) return PortId(0);
    if (b.value == last) return PortId(a.value);
    if (a.value == last) return PortId(b.value);
    if (t % 2 == 0) return PortId(t / 2);
    if (t < last) return PortId((t + last) / 2);
    return PortId((t - last) / 2);
}

// Switch a reaches a higher-numbered b through port b - 1 and a lower b
// through port b.
PortId route_swap(std::uint32_t n, SwitchId a, SwitchId b) {
    require_distinct(a, b);
    require_in_range(n, a, b);
    return a < b ? PortId(b.value - 1) : PortId(b.value);
}

PortId route(CinKind kind, std::uint32_t n, SwitchId a, SwitchId b) {
    require_distinct(a, b);
    require_in_range(n, a, b);
    switch (kind) {
        case CinKind::swap: return route_swap(n, a, b);
        case CinKind::circle: return route_circle(n % 2 == 0 ? n : n + 1, a, b);
        case CinKind::xor_: return route_xor(a, b);
    }
    throw Error(ErrorKind::invalid_size, "unknown CIN kind");
}

RoutingDecision decide(const PairingMatrix& m, SwitchId current, const EndpointAddress& dst) {
    return decide(m, current, dst, m.size());
}

RoutingDecision decide(const PairingMatrix& m, SwitchId current, const EndpointAddress& dst,
                       std::uint32_t edge_ports) {
    require_in_range(m.size(), current, dst.switch_digit);
    if (dst.local_digit >= edge_ports) {
        throw Error(ErrorKind::invalid_address,
                    fmt::format("local digit {} exceeds {} edge ports", dst.local_digit, edge_ports));
    }
    if (current == dst.switch_digit) return RoutingDecision::eject(dst.local_digit);
    return RoutingDecision::forward(route(m.kind(), m.size(), current, dst.switch_digit));
}

ExchangeSchedule all_to_all_schedule(const PairingMatrix& m) {
    if (m.size() % 2 != 0) {
        throw Error(ErrorKind::invalid_size,
                    fmt::format("all-to-all schedule needs an even switch count, got {}", m.size()));
    }
    return ExchangeSchedule{one_factors(m).factors};
}

}  // namespace lacin
