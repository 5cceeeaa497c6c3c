// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lacin/cin.hpp"

namespace lacin {

struct DimensionSpec {
    std::uint32_t size;
    CinKind kind;
};

/// Cartesian product of CINs. Dimension 0 is the most significant switch
/// digit (Z in a 3D fabric); the last dimension is X.
class HyperXFabric {
public:
    HyperXFabric(std::vector<DimensionSpec> dims, std::uint32_t edge_ports);

    std::size_t dimensions() const noexcept { return dims_.size(); }
    const DimensionSpec& dimension(std::size_t d) const { return dims_.at(d); }
    const PairingMatrix& matrix(std::size_t d) const { return matrices_.at(d); }
    std::uint32_t edge_ports() const noexcept { return edge_ports_; }

    std::uint64_t switch_count() const;
    /// Network ports physically present per switch (odd Circle adds an idle one).
    std::uint32_t network_ports() const;

    /// "Z", "Y", "X" for the last three dimensions, "D<k>" beyond.
    std::string dimension_name(std::size_t d) const;

    /// Default routing order: most significant digit first.
    std::vector<std::size_t> default_order() const;

private:
    std::vector<DimensionSpec> dims_;
    std::vector<PairingMatrix> matrices_;
    std::uint32_t edge_ports_;
};

/// Switch digits, most significant first, followed by the local digit.
struct MultiDigitAddress {
    std::vector<std::uint32_t> digits;
};

struct HopRecord {
    enum class Kind { network, eject };
    Kind kind;
    std::size_t dimension;  // unused for eject
    std::uint32_t port;

    static HopRecord network(std::size_t d, PortId p) { return {Kind::network, d, p.value}; }
    static HopRecord eject(std::uint32_t local) { return {Kind::eject, 0, local}; }
    friend bool operator==(const HopRecord&, const HopRecord&) = default;
};

void validate_address(const HyperXFabric& f, const MultiDigitAddress& a);

/// Dimension-ordered minimal route; one hop per differing switch digit in
/// `order`, then an eject on the destination's local digit.
std::vector<HopRecord> route_dor(const HyperXFabric& f, const MultiDigitAddress& src, const MultiDigitAddress& dst,
                                 const std::vector<std::size_t>& order);
std::vector<HopRecord> route_dor(const HyperXFabric& f, const MultiDigitAddress& src, const MultiDigitAddress& dst);

/// Cycle check on an explicit directed graph of `nodes` vertices.
bool dependency_graph_is_acyclic(std::uint64_t nodes, std::vector<std::pair<std::uint64_t, std::uint64_t>> edges);

/// Builds the channel dependency graph of DOR over every switch pair (one
/// node per directed link) and reports whether it has no cycle.
bool cdg_is_acyclic(const HyperXFabric& f, const std::vector<std::size_t>& order);

struct BundleReport {
    std::uint64_t intra_partition_links;
    std::uint64_t inter_partition_links;
    std::uint64_t hose_count;
    std::uint64_t wires_per_hose;
    std::uint64_t total_links;
};

/// Two-level view of K_(outer*inner): partitions of `inner` switches, each
/// partition pair joined by a hose carrying one wire per switch pair.
BundleReport hierarchical_bundle_report(std::int64_t outer, std::int64_t inner);

struct PlanarDimensionReport {
    std::size_t dimension;
    std::uint64_t super_ports_per_rack;
    std::uint64_t racks_per_line;
    std::uint64_t lines;
    std::uint64_t hoses_per_line;
    std::uint64_t wires_per_hose;
    std::uint64_t hose_classes;
    std::uint64_t total_hoses;
};

struct RackReport {
    std::size_t rack_dimension;
    std::uint64_t switches_per_rack;
    std::uint64_t racks;
    std::uint64_t intra_rack_links;
    /// Column view: wires sharing each port index inside one rack.
    std::vector<std::uint64_t> column_wires;
    /// Length view: wire length -> count inside one rack, identity layout.
    std::map<std::uint64_t, std::uint64_t> length_histogram;
    std::vector<PlanarDimensionReport> planar;
};

/// One switch per chassis, one rack per line of switches along `rack_dim`.
RackReport hyperx_rack_report(const HyperXFabric& f, std::size_t rack_dim);

struct FabricStats {
    std::uint64_t switches;
    std::uint64_t endpoints;
    std::uint64_t radix;
    std::uint64_t network_links;
};

FabricStats fabric_stats(const HyperXFabric& f);

}  // namespace lacin
