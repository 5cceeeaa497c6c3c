// SPDX-License-Identifier: Apache-2.0

#include "lacin/composite.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/core.h>

#include "lacin/layout.hpp"
#include "lacin/routing.hpp"

namespace lacin {

HyperXFabric::HyperXFabric(std::vector<DimensionSpec> dims, std::uint32_t edge_ports)
    : dims_(std::move(dims)), edge_ports_(edge_ports) {
    if (dims_.empty()) throw Error(ErrorKind::invalid_size, "a HyperX fabric needs at least one dimension");
    if (edge_ports_ == 0) throw Error(ErrorKind::invalid_size, "a HyperX fabric needs at least one edge port");
    matrices_.reserve(dims_.size());
    for (const auto& d : dims_) matrices_.push_back(build_pairing(d.kind, d.size));
}

std::uint64_t HyperXFabric::switch_count() const {
    std::uint64_t total = 1;
    for (const auto& d : dims_) total *= d.size;
    return total;
}

std::uint32_t HyperXFabric::network_ports() const {
    std::uint32_t total = 0;
    for (const auto& m : matrices_) total += m.ports();
    return total;
}

std::string HyperXFabric::dimension_name(std::size_t d) const {
    static constexpr const char* kNames[] = {"X", "Y", "Z"};
    const std::size_t from_last = dims_.size() - 1 - d;
    if (from_last < 3) return kNames[from_last];
    return fmt::format("D{}", from_last + 1);
}

std::vector<std::size_t> HyperXFabric::default_order() const {
    std::vector<std::size_t> order(dims_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

void validate_address(const HyperXFabric& f, const MultiDigitAddress& a) {
    if (a.digits.size() != f.dimensions() + 1) {
        throw Error(ErrorKind::invalid_address, fmt::format("address has {} digits, fabric needs {}",
                                                            a.digits.size(), f.dimensions() + 1));
    }
    for (std::size_t d = 0; d < f.dimensions(); ++d) {
        if (a.digits[d] >= f.dimension(d).size) {
            throw Error(ErrorKind::invalid_address, fmt::format("digit {} for dimension {} of size {}", a.digits[d],
                                                                f.dimension_name(d), f.dimension(d).size));
        }
    }
    if (a.digits.back() >= f.edge_ports()) {
        throw Error(ErrorKind::invalid_address,
                    fmt::format("local digit {} exceeds {} edge ports", a.digits.back(), f.edge_ports()));
    }
}

namespace {

void validate_order(const HyperXFabric& f, const std::vector<std::size_t>& order) {
    std::vector<bool> seen(f.dimensions(), false);
    if (order.size() != f.dimensions()) {
        throw Error(ErrorKind::invalid_dimension, "dimension order must list every dimension once");
    }
    for (auto d : order) {
        if (d >= f.dimensions() || seen[d]) {
            throw Error(ErrorKind::invalid_dimension, "dimension order must be a permutation");
        }
        seen[d] = true;
    }
}

}  // namespace

std::vector<HopRecord> route_dor(const HyperXFabric& f, const MultiDigitAddress& src, const MultiDigitAddress& dst,
                                 const std::vector<std::size_t>& order) {
    validate_address(f, src);
    validate_address(f, dst);
    validate_order(f, order);
    std::vector<HopRecord> hops;
    for (auto d : order) {
        const auto a = src.digits[d];
        const auto b = dst.digits[d];
        if (a == b) continue;
        const auto& spec = f.dimension(d);
        hops.push_back(HopRecord::network(d, route(spec.kind, spec.size, SwitchId(a), SwitchId(b))));
    }
    hops.push_back(HopRecord::eject(dst.digits.back()));
    return hops;
}

std::vector<HopRecord> route_dor(const HyperXFabric& f, const MultiDigitAddress& src, const MultiDigitAddress& dst) {
    return route_dor(f, src, dst, f.default_order());
}

bool dependency_graph_is_acyclic(std::uint64_t nodes, std::vector<std::pair<std::uint64_t, std::uint64_t>> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::uint32_t> indegree(nodes, 0);
    std::vector<std::uint64_t> first(nodes + 1, 0);
    for (const auto& [from, to] : edges) {
        if (from >= nodes || to >= nodes) throw Error(ErrorKind::invalid_size, "dependency edge outside the graph");
        ++indegree[to];
        ++first[from + 1];
    }
    std::partial_sum(first.begin(), first.end(), first.begin());
    // Kahn: peel zero-indegree nodes; anything left sits on a cycle.
    std::vector<std::uint64_t> ready;
    for (std::uint64_t c = 0; c < nodes; ++c) {
        if (indegree[c] == 0) ready.push_back(c);
    }
    std::uint64_t removed = 0;
    while (!ready.empty()) {
        const auto c = ready.back();
        ready.pop_back();
        ++removed;
        for (auto e = first[c]; e < first[c + 1]; ++e) {
            if (--indegree[edges[e].second] == 0) ready.push_back(edges[e].second);
        }
    }
    return removed == nodes;
}

bool cdg_is_acyclic(const HyperXFabric& f, const std::vector<std::size_t>& order) {
    validate_order(f, order);
    const std::size_t dims = f.dimensions();
    const std::uint64_t switches = f.switch_count();
    const std::uint32_t ports = f.network_ports();

    std::vector<std::uint32_t> port_offset(dims, 0);
    std::vector<std::uint64_t> stride(dims, 1);
    for (std::size_t d = 1; d < dims; ++d) port_offset[d] = port_offset[d - 1] + f.matrix(d - 1).ports();
    for (std::size_t d = dims - 1; d-- > 0;) stride[d] = stride[d + 1] * f.dimension(d + 1).size;

    // Precomputed per-dimension port tables: next_port[d][a * n + b].
    std::vector<std::vector<std::uint32_t>> next_port(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        const auto& spec = f.dimension(d);
        next_port[d].assign(std::size_t{spec.size} * spec.size, 0);
        for (std::uint32_t a = 0; a < spec.size; ++a) {
            for (std::uint32_t b = 0; b < spec.size; ++b) {
                if (a != b) next_port[d][a * spec.size + b] = route(spec.kind, spec.size, SwitchId(a), SwitchId(b)).value;
            }
        }
    }

    const std::uint64_t channels = switches * ports;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> deps;
    std::vector<std::uint32_t> cur(dims), dst(dims);
    for (std::uint64_t s = 0; s < switches; ++s) {
        for (std::uint64_t t = 0; t < switches; ++t) {
            if (s == t) continue;
            for (std::size_t d = 0; d < dims; ++d) {
                cur[d] = static_cast<std::uint32_t>(s / stride[d] % f.dimension(d).size);
                dst[d] = static_cast<std::uint32_t>(t / stride[d] % f.dimension(d).size);
            }
            std::uint64_t here = s;
            std::optional<std::uint64_t> prev;
            for (auto d : order) {
                if (cur[d] == dst[d]) continue;
                const auto n = f.dimension(d).size;
                const auto channel = here * ports + port_offset[d] + next_port[d][cur[d] * n + dst[d]];
                if (prev) deps.emplace_back(*prev, channel);
                prev = channel;
                here = here - std::uint64_t{cur[d]} * stride[d] + std::uint64_t{dst[d]} * stride[d];
                cur[d] = dst[d];
            }
        }
    }
    return dependency_graph_is_acyclic(channels, std::move(deps));
}

BundleReport hierarchical_bundle_report(std::int64_t outer, std::int64_t inner) {
    if (outer <= 0 || inner <= 0) {
        throw Error(ErrorKind::invalid_size, fmt::format("partition sizes must be positive, got {}x{}", outer, inner));
    }
    const auto o = static_cast<std::uint64_t>(outer);
    const auto in = static_cast<std::uint64_t>(inner);
    BundleReport r{};
    r.intra_partition_links = o * link_count(in);
    r.hose_count = link_count(o);
    r.wires_per_hose = in * in;
    r.inter_partition_links = r.hose_count * r.wires_per_hose;
    r.total_links = r.intra_partition_links + r.inter_partition_links;
    return r;
}

RackReport hyperx_rack_report(const HyperXFabric& f, std::size_t rack_dim) {
    if (rack_dim >= f.dimensions()) {
        throw Error(ErrorKind::invalid_dimension,
                    fmt::format("rack dimension {} outside a {}-dimensional fabric", rack_dim, f.dimensions()));
    }
    const auto& rack_matrix = f.matrix(rack_dim);
    RackReport r{};
    r.rack_dimension = rack_dim;
    r.switches_per_rack = f.dimension(rack_dim).size;
    r.racks = f.switch_count() / r.switches_per_rack;
    r.intra_rack_links = link_count(r.switches_per_rack);
    if (is_isoport(rack_matrix)) {
        for (const auto& factor : one_factors(rack_matrix).factors) r.column_wires.push_back(factor.links.size());
    }
    r.length_histogram = wire_lengths(rack_matrix, LinearLayout::identity(rack_matrix.size())).histogram;
    for (std::size_t d = 0; d < f.dimensions(); ++d) {
        if (d == rack_dim) continue;
        PlanarDimensionReport p{};
        const std::uint64_t size = f.dimension(d).size;
        p.dimension = d;
        p.super_ports_per_rack = size - 1;
        p.racks_per_line = size;
        p.lines = r.racks / size;
        p.hoses_per_line = link_count(size);
        p.wires_per_hose = r.switches_per_rack;
        p.hose_classes = size - 1;
        p.total_hoses = p.lines * p.hoses_per_line;
        r.planar.push_back(p);
    }
    return r;
}

FabricStats fabric_stats(const HyperXFabric& f) {
    FabricStats s{};
    s.switches = f.switch_count();
    s.endpoints = s.switches * f.edge_ports();
    std::uint64_t network = 0;
    for (std::size_t d = 0; d < f.dimensions(); ++d) network += f.dimension(d).size - 1;
    s.radix = f.edge_ports() + network;
    s.network_links = s.switches * network / 2;
    return s;
}

}  // namespace lacin
