// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "lacin/io.hpp"

namespace lacin {
namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++count;
    return count;
}

TEST(TopologyFile, ExportImportIsFixedPoint) {
    for (auto kind : {CinKind::swap, CinKind::circle, CinKind::xor_}) {
        for (std::uint32_t n : {2u, 5u, 8u, 16u}) {
            if (kind == CinKind::xor_ && !is_power_of_two(n)) continue;
            const auto m = build_pairing(kind, n);
            const auto text = export_topology(m);
            const auto back = import_topology(text);
            EXPECT_EQ(back, m);
            EXPECT_EQ(export_topology(back), text);
        }
    }
}

TEST(TopologyFile, Schema) {
    const auto doc = topology_to_json(build_pairing(CinKind::circle, 7));
    EXPECT_EQ(doc["version"], 1);
    EXPECT_EQ(doc["kind"], "circle");
    EXPECT_EQ(doc["n"], 7);
    EXPECT_EQ(doc["entries"].size(), 21u);
    EXPECT_EQ(doc["idlePorts"].size(), 7u);
    for (const auto& e : doc["entries"]) EXPECT_LT(e[0].get<int>(), e[2].get<int>());
}

TEST(TopologyFile, CorruptionIsNamed) {
    auto doc = nlohmann::json::parse(export_topology(build_pairing(CinKind::swap, 4)));
    // Point two links at the same far port.
    doc["entries"][1][3] = doc["entries"][0][3];
    doc["entries"][1][2] = doc["entries"][0][2];
    try {
        (void)topology_from_json(doc);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_matrix);
        EXPECT_NE(std::string(e.what()).find("involution"), std::string::npos) << e.what();
    }

    auto missing = nlohmann::json::parse(export_topology(build_pairing(CinKind::swap, 4)));
    missing.erase("idlePorts");
    EXPECT_THROW((void)topology_from_json(missing), Error);
    EXPECT_THROW((void)import_topology("{not json"), Error);
}

TEST(Dot, EdgesCarryPorts) {
    const auto dot = to_dot(build_pairing(CinKind::circle, 8));
    EXPECT_EQ(occurrences(dot, " -- "), 28u);
    EXPECT_NE(dot.find("s3 -- s7 [ports=\"3:3\", taillabel=\"3\", headlabel=\"3\"]"), std::string::npos);
    const auto swap = to_dot(build_pairing(CinKind::swap, 3));
    EXPECT_NE(swap.find("s0 -- s1 [ports=\"0:0\""), std::string::npos);
    EXPECT_NE(swap.find("s1 -- s2 [ports=\"1:1\""), std::string::npos);
    EXPECT_NE(swap.find("s0 -- s2 [ports=\"1:0\""), std::string::npos);
}

TEST(Metrics, CircleAndSwap) {
    const auto c = cin_metrics(build_pairing(CinKind::circle, 8));
    EXPECT_EQ(c["totalWireLength"], 84);
    EXPECT_EQ(c["crossingsWithLanes"], 0);
    EXPECT_EQ(c["crossingsWithoutLanes"], 9);
    EXPECT_EQ(c["isoport"], true);
    EXPECT_DOUBLE_EQ(c["wireLengthRatio"].get<double>(), 1.0);

    const auto s = cin_metrics(build_pairing(CinKind::swap, 8));
    EXPECT_EQ(s["isoport"], false);
    EXPECT_TRUE(s["crossingsWithLanes"].is_null());
    EXPECT_NEAR(s["wireLengthRatio"].get<double>(), 1.2201616757586122, 1e-12);
}

TEST(Metrics, HyperX) {
    const HyperXFabric f({{16, CinKind::xor_}, {16, CinKind::xor_}, {16, CinKind::xor_}}, 16);
    const auto doc = hyperx_metrics(f, 0);
    EXPECT_EQ(doc["radix"], 61);
    EXPECT_EQ(doc["switches"], 4096);
    EXPECT_EQ(doc["endpoints"], 65536);
    EXPECT_EQ(doc["racks"]["rackDimension"], "Z");
    EXPECT_EQ(doc["racks"]["intraRackLinks"], 120);
    EXPECT_EQ(doc["racks"]["planar"][0]["superPortsPerRack"], 15);
    EXPECT_EQ(doc["racks"]["planar"][0]["hosesPerLine"], 120);
}

}  // namespace
}  // namespace lacin
