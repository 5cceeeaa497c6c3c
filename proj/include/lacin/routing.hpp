// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "lacin/cin.hpp"

namespace lacin {

/// Two-digit end-point address: the switch it hangs from and its edge port.
struct EndpointAddress {
    SwitchId switch_digit;
    std::uint32_t local_digit = 0;
};

struct RoutingDecision {
    enum class Action { eject, forward };
    Action action;
    std::uint32_t port;

    static RoutingDecision eject(std::uint32_t port) { return {Action::eject, port}; }
    static RoutingDecision forward(PortId port) { return {Action::forward, port.value}; }
    friend bool operator==(const RoutingDecision&, const RoutingDecision&) = default;
};

/// Ground-truth router: scans row `a` for the port whose peer is `b`.
PortId route_oracle(const PairingMatrix& m, SwitchId a, SwitchId b);

PortId route_xor(SwitchId a, SwitchId b);

/// Closed-form Circle router; `n` is the even matrix size. Odd physical
/// sizes route with n + 1, the matrix they were cut from.
PortId route_circle(std::uint32_t n, SwitchId a, SwitchId b);

PortId route_swap(std::uint32_t n, SwitchId a, SwitchId b);

/// Dispatches to the closed-form router of `kind` for a physical size `n`.
PortId route(CinKind kind, std::uint32_t n, SwitchId a, SwitchId b);

/// Single-switch routing step. `edge_ports` bounds the local digit; a CIN of
/// n switches carries n end-points per switch by default.
RoutingDecision decide(const PairingMatrix& m, SwitchId current, const EndpointAddress& dst);
RoutingDecision decide(const PairingMatrix& m, SwitchId current, const EndpointAddress& dst,
                       std::uint32_t edge_ports);

struct ExchangeSchedule {
    std::vector<OneFactor> steps;
};

/// Step w exchanges data across every link of factor w; needs an even,
/// isoport matrix.
ExchangeSchedule all_to_all_schedule(const PairingMatrix& m);

}  // namespace lacin
