// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lacin {

enum class ErrorKind {
    invalid_size,
    unsupported_size,
    not_isoport,
    same_switch,
    invalid_address,
    invalid_dimension,
    invalid_matrix,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct SwitchId {
    std::uint32_t value = 0;
    constexpr SwitchId() = default;
    constexpr explicit SwitchId(std::uint32_t v) : value(v) {}
    friend constexpr auto operator<=>(SwitchId, SwitchId) = default;
};

struct PortId {
    std::uint32_t value = 0;
    constexpr PortId() = default;
    constexpr explicit PortId(std::uint32_t v) : value(v) {}
    friend constexpr auto operator<=>(PortId, PortId) = default;
};

struct PortRef {
    SwitchId sw;
    PortId port;
    friend constexpr auto operator<=>(const PortRef&, const PortRef&) = default;
};

/// One physical cable: `a` always names the lower-numbered switch.
struct Link {
    PortRef a;
    PortRef b;
    friend constexpr auto operator<=>(const Link&, const Link&) = default;
};

enum class CinKind { swap, circle, xor_ };

std::string_view to_string(CinKind kind);
/// Accepts "swap", "circle", "xor" (case-sensitive).
std::optional<CinKind> parse_kind(std::string_view name);

/// Port pairing table of a complete interconnection network.
///
/// Row S, column i holds the peer of port i on switch S, or nothing when the
/// port is idle. Instances are validated on construction: every held matrix
/// is an involution without self-loops whose links cover each unordered
/// switch pair exactly once.
class PairingMatrix {
public:
    using Entry = std::optional<PortRef>;

    /// Validates and adopts a row-major table of n rows by `ports` columns.
    /// Throws Error(invalid_matrix) naming the first violated invariant.
    static PairingMatrix from_entries(CinKind kind, std::uint32_t n, std::uint32_t ports,
                                      std::vector<Entry> entries);

    /// Same checks as from_entries, but reports every violation instead of
    /// throwing. Empty result means valid.
    static std::vector<std::string> check(std::uint32_t n, std::uint32_t ports,
                                          std::span<const Entry> entries);

    CinKind kind() const noexcept { return kind_; }
    std::uint32_t size() const noexcept { return n_; }
    std::uint32_t ports() const noexcept { return ports_; }

    const Entry& at(SwitchId s, PortId i) const;
    std::span<const Entry> row(SwitchId s) const;

    /// Links sorted by (a, b); each physical link appears once.
    std::vector<Link> links() const;
    std::vector<PortRef> idle_ports() const;

    friend bool operator==(const PairingMatrix&, const PairingMatrix&) = default;

private:
    PairingMatrix(CinKind kind, std::uint32_t n, std::uint32_t ports, std::vector<Entry> entries)
        : kind_(kind), n_(n), ports_(ports), entries_(std::move(entries)) {}

    CinKind kind_;
    std::uint32_t n_;
    std::uint32_t ports_;
    std::vector<Entry> entries_;
};

PairingMatrix build_pairing(CinKind kind, std::uint32_t n);

bool is_isoport(const PairingMatrix& m);

struct OneFactor {
    PortId port_index;
    /// Unordered pairs stored as (low, high), sorted.
    std::vector<std::pair<SwitchId, SwitchId>> links;
};

struct Factorization {
    std::vector<OneFactor> factors;
    /// Set for odd-sized matrices: factors are matchings that miss one switch.
    bool odd_size = false;
};

/// Groups links by port index. Throws Error(not_isoport) for anisoport input.
Factorization one_factors(const PairingMatrix& m);

constexpr std::uint64_t link_count(std::uint64_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }
constexpr std::uint64_t radix_required(std::uint64_t n) { return n == 0 ? 0 : 2 * n - 1; }
constexpr std::uint64_t endpoint_capacity(std::uint64_t n) { return n * n; }

constexpr bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace lacin
