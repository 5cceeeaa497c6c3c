// SPDX-License-Identifier: Apache-2.0

#include "lacin/io.hpp"

#include <fmt/core.h>

namespace lacin {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json topology_to_json(const PairingMatrix& m) {
    ordered_json doc;
    doc["version"] = kTopologyFileVersion;
    doc["kind"] = std::string(to_string(m.kind()));
    doc["n"] = m.size();
    auto entries = ordered_json::array();
    for (const auto& l : m.links()) {
        entries.push_back({l.a.sw.value, l.a.port.value, l.b.sw.value, l.b.port.value});
    }
    doc["entries"] = std::move(entries);
    auto idle = ordered_json::array();
    for (const auto& p : m.idle_ports()) idle.push_back({p.sw.value, p.port.value});
    doc["idlePorts"] = std::move(idle);
    return doc;
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
    throw Error(ErrorKind::invalid_matrix, "topology file: " + what);
}

std::uint32_t as_index(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) schema_error(fmt::format("{} must be a non-negative integer", what));
    return v.get<std::uint32_t>();
}

}  // namespace

PairingMatrix topology_from_json(const json& doc) {
    if (!doc.is_object()) schema_error("document must be an object");
    for (const char* key : {"version", "kind", "n", "entries", "idlePorts"}) {
        if (!doc.contains(key)) schema_error(fmt::format("missing \"{}\"", key));
    }
    if (doc["version"] != kTopologyFileVersion) schema_error("unsupported version");
    if (!doc["kind"].is_string()) schema_error("\"kind\" must be a string");
    const auto kind = parse_kind(doc["kind"].get<std::string>());
    if (!kind) schema_error(fmt::format("unknown kind \"{}\"", doc["kind"].get<std::string>()));
    const auto n = as_index(doc["n"], "n");
    if (n < 2) throw Error(ErrorKind::invalid_size, "topology file: n must be at least 2");
    const auto& links = doc["entries"];
    const auto& idle = doc["idlePorts"];
    if (!links.is_array() || !idle.is_array()) schema_error("\"entries\" and \"idlePorts\" must be arrays");

    const std::size_t port_slots = 2 * links.size() + idle.size();
    if (port_slots % n != 0) {
        schema_error(fmt::format("{} link ends and idle ports do not split evenly over {} switches", port_slots, n));
    }
    const auto ports = static_cast<std::uint32_t>(port_slots / n);
    std::vector<PairingMatrix::Entry> entries(std::size_t{n} * ports);
    std::vector<bool> assigned(entries.size(), false);
    auto claim = [&](std::uint32_t s, std::uint32_t i) -> PairingMatrix::Entry& {
        if (s >= n || i >= ports) schema_error(fmt::format("port ({}, {}) outside {}x{} matrix", s, i, n, ports));
        const auto k = std::size_t{s} * ports + i;
        if (assigned[k]) schema_error(fmt::format("involution: port ({}, {}) used more than once", s, i));
        assigned[k] = true;
        return entries[k];
    };
    for (const auto& rec : links) {
        if (!rec.is_array() || rec.size() != 4) schema_error("each entry must be [S, i, T, j]");
        const auto s = as_index(rec[0], "S");
        const auto i = as_index(rec[1], "i");
        const auto t = as_index(rec[2], "T");
        const auto j = as_index(rec[3], "j");
        if (s == t) schema_error(fmt::format("self-loop: link [{}, {}, {}, {}]", s, i, t, j));
        claim(s, i) = PortRef{SwitchId(t), PortId(j)};
        claim(t, j) = PortRef{SwitchId(s), PortId(i)};
    }
    for (const auto& rec : idle) {
        if (!rec.is_array() || rec.size() != 2) schema_error("each idle port must be [S, i]");
        claim(as_index(rec[0], "S"), as_index(rec[1], "i"));
    }
    return PairingMatrix::from_entries(*kind, n, ports, std::move(entries));
}

std::string export_topology(const PairingMatrix& m) { return topology_to_json(m).dump(2) + "\n"; }

PairingMatrix import_topology(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        schema_error(e.what());
    }
    return topology_from_json(doc);
}

std::string to_dot(const PairingMatrix& m) {
    std::string out = fmt::format("graph cin_{}_{} {{\n", to_string(m.kind()), m.size());
    out += "  node [shape=box];\n";
    for (std::uint32_t s = 0; s < m.size(); ++s) out += fmt::format("  s{} [label=\"S{}\"];\n", s, s);
    for (const auto& l : m.links()) {
        out += fmt::format("  s{} -- s{} [ports=\"{}:{}\", taillabel=\"{}\", headlabel=\"{}\"];\n", l.a.sw.value,
                           l.b.sw.value, l.a.port.value, l.b.port.value, l.a.port.value, l.b.port.value);
    }
    out += "}\n";
    return out;
}

ordered_json to_json(const WireLengthReport& r) {
    auto hist = ordered_json::array();
    for (const auto& [len, count] : r.histogram) hist.push_back({{"length", len}, {"wires", count}});
    return {{"total", r.total}, {"histogram", hist}};
}

ordered_json to_json(const CrossingReport& r) {
    auto per = ordered_json::array();
    for (const auto& [port, count] : r.per_factor) per.push_back({{"port", port.value}, {"crossings", count}});
    return {{"total", r.total}, {"perFactor", per}};
}

ordered_json to_json(const BundleReport& r) {
    return {{"intraPartitionLinks", r.intra_partition_links},
            {"interPartitionLinks", r.inter_partition_links},
            {"hoseCount", r.hose_count},
            {"wiresPerHose", r.wires_per_hose},
            {"totalLinks", r.total_links}};
}

ordered_json to_json(const FabricStats& s) {
    return {{"switches", s.switches}, {"endpoints", s.endpoints}, {"radix", s.radix}, {"networkLinks", s.network_links}};
}

ordered_json to_json(const HyperXFabric& f, const RackReport& r) {
    auto hist = ordered_json::array();
    for (const auto& [len, count] : r.length_histogram) hist.push_back({{"length", len}, {"wires", count}});
    auto planar = ordered_json::array();
    for (const auto& p : r.planar) {
        planar.push_back({{"dimension", f.dimension_name(p.dimension)},
                          {"superPortsPerRack", p.super_ports_per_rack},
                          {"racksPerLine", p.racks_per_line},
                          {"lines", p.lines},
                          {"hosesPerLine", p.hoses_per_line},
                          {"wiresPerHose", p.wires_per_hose},
                          {"hoseClasses", p.hose_classes},
                          {"totalHoses", p.total_hoses}});
    }
    return {{"rackDimension", f.dimension_name(r.rack_dimension)},
            {"switchesPerRack", r.switches_per_rack},
            {"racks", r.racks},
            {"intraRackLinks", r.intra_rack_links},
            {"columnWires", r.column_wires},
            {"lengthHistogram", hist},
            {"planar", planar}};
}

ordered_json cin_metrics(const PairingMatrix& m) {
    const auto layout = LinearLayout::identity(m.size());
    const bool iso = is_isoport(m);
    const auto wires = wire_lengths(m, layout);
    const double nn = m.size();
    const double lacin_total = (nn * nn * nn - nn) / 6.0;

    ordered_json doc;
    doc["kind"] = std::string(to_string(m.kind()));
    doc["n"] = m.size();
    doc["isoport"] = iso;
    doc["links"] = m.links().size();
    doc["radix"] = radix_required(m.size());
    doc["endpoints"] = endpoint_capacity(m.size());
    doc["idlePorts"] = m.idle_ports().size();
    doc["totalWireLength"] = wires.total;
    doc["wireLengths"] = to_json(wires);
    const double euclid = euclidean_wire_length(m, layout);
    doc["euclideanWireLength"] = euclid;
    doc["wireLengthRatio"] = euclid / lacin_total;
    if (iso) {
        const auto plain = crossing_count(m, layout, false);
        const auto laned = crossing_count(m, layout, true);
        doc["crossingsWithoutLanes"] = plain.total;
        doc["crossingsWithLanes"] = laned.total;
        doc["crossings"] = {{"withoutLanes", to_json(plain)}, {"withLanes", to_json(laned)}};
    } else {
        doc["crossingsWithoutLanes"] = nullptr;
        doc["crossingsWithLanes"] = nullptr;
    }
    return doc;
}

ordered_json hyperx_metrics(const HyperXFabric& f, std::size_t rack_dim) {
    ordered_json doc;
    auto dims = ordered_json::array();
    for (std::size_t d = 0; d < f.dimensions(); ++d) {
        dims.push_back({{"name", f.dimension_name(d)},
                        {"size", f.dimension(d).size},
                        {"kind", std::string(to_string(f.dimension(d).kind))}});
    }
    doc["dimensions"] = dims;
    doc["edgePorts"] = f.edge_ports();
    const auto stats = fabric_stats(f);
    doc["switches"] = stats.switches;
    doc["endpoints"] = stats.endpoints;
    doc["radix"] = stats.radix;
    doc["networkLinks"] = stats.network_links;
    doc["diameter"] = f.dimensions();
    doc["racks"] = to_json(f, hyperx_rack_report(f, rack_dim));
    return doc;
}

}  // namespace lacin
