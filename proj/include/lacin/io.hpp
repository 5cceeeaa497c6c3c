// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include <json.hpp>

#include "lacin/cin.hpp"
#include "lacin/composite.hpp"
#include "lacin/layout.hpp"

namespace lacin {

inline constexpr int kTopologyFileVersion = 1;

/// {"version", "kind", "n", "entries": [[S, i, T, j], ...] with S < T,
///  "idlePorts": [[S, i], ...]}
nlohmann::ordered_json topology_to_json(const PairingMatrix& m);

/// Parses and validates a topology document. Schema problems throw
/// Error(invalid_matrix); structural ones carry the violated invariant name
/// (involution, self-loop, completeness).
PairingMatrix topology_from_json(const nlohmann::json& doc);

std::string export_topology(const PairingMatrix& m);
PairingMatrix import_topology(const std::string& text);

/// Undirected Graphviz graph; port indices travel in `ports="i:j"` plus
/// taillabel/headlabel.
std::string to_dot(const PairingMatrix& m);

nlohmann::ordered_json to_json(const WireLengthReport& r);
nlohmann::ordered_json to_json(const CrossingReport& r);
nlohmann::ordered_json to_json(const BundleReport& r);
nlohmann::ordered_json to_json(const FabricStats& s);
nlohmann::ordered_json to_json(const HyperXFabric& f, const RackReport& r);

/// Wire, crossing and summary metrics of one CIN instance.
nlohmann::ordered_json cin_metrics(const PairingMatrix& m);

/// Fabric totals plus the rack/hose breakdown with racks along `rack_dim`.
nlohmann::ordered_json hyperx_metrics(const HyperXFabric& f, std::size_t rack_dim);

}  // namespace lacin
