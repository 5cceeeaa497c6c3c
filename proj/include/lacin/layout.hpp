// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lacin/cin.hpp"

namespace lacin {

/// Switches placed on a line, one slot each, plus an optional per-factor
/// wire that runs in the left lane of its column (all others run right).
class LinearLayout {
public:
    /// Identity placement: switch S sits in slot S.
    static LinearLayout identity(std::uint32_t n);
    /// `positions[S]` is the slot of switch S. Throws unless a permutation.
    static LinearLayout from_positions(std::vector<std::uint32_t> positions);

    /// Returns a copy whose left lane, for each factor, holds the wire that
    /// touches the switch in the last slot. For Circle under the identity
    /// placement these are exactly the links to switch N-1.
    LinearLayout with_lanes(const PairingMatrix& m) const;

    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(positions_.size()); }
    std::uint32_t position(SwitchId s) const { return positions_.at(s.value); }
    const std::vector<std::uint32_t>& positions() const noexcept { return positions_; }

    /// Left-lane link of factor `port`, stored as (low, high) switch ids.
    std::optional<std::pair<SwitchId, SwitchId>> left_lane(PortId port) const;
    bool has_lanes() const noexcept { return !left_lanes_.empty(); }

private:
    explicit LinearLayout(std::vector<std::uint32_t> positions) : positions_(std::move(positions)) {}

    std::vector<std::uint32_t> positions_;
    std::vector<std::optional<std::pair<SwitchId, SwitchId>>> left_lanes_;
};

struct WireLengthReport {
    std::map<std::uint64_t, std::uint64_t> histogram;  // length -> wires
    std::uint64_t total = 0;
};

/// Vertical run of every wire, |pos(a) - pos(b)| with unit switch pitch.
WireLengthReport wire_lengths(const PairingMatrix& m, const LinearLayout& layout);

/// Sum of straight-line wire lengths when a wire also moves sideways by the
/// difference of its two port indices (port pitch equal to switch pitch).
double euclidean_wire_length(const PairingMatrix& m, const LinearLayout& layout);

struct SwapWireLengths {
    double euclidean_total;
    double ratio_to_iso;
};

/// Oblique Swap cabling against the (n^3 - n)/6 straight-column total.
SwapWireLengths swap_wire_lengths(std::uint32_t n);

struct CrossingReport {
    std::vector<std::pair<PortId, std::uint64_t>> per_factor;
    std::uint64_t total = 0;
};

/// Two wires of the same column cross iff their slot intervals interleave
/// (a < c < b < d). Wires in different lanes never cross. Throws
/// Error(not_isoport) for anisoport matrices.
CrossingReport crossing_count(const PairingMatrix& m, const LinearLayout& layout, bool use_lanes);

struct SvgOptions {
    std::optional<PortId> highlight_factor;
    bool lanes = false;
    std::string title;
};

/// Ports as columns and switches as rows; every link becomes one element
/// with class "wire". Output depends only on the arguments.
std::string render_svg(const PairingMatrix& m, const LinearLayout& layout, const SvgOptions& options = {});

}  // namespace lacin
