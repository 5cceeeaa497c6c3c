// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "lacin/cin.hpp"
#include "lacin/composite.hpp"
#include "lacin/io.hpp"
#include "lacin/layout.hpp"
#include "lacin/routing.hpp"
#include "lacin/verify.hpp"

namespace lacin::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::uint32_t> parse_list(const std::string& text, const char* what) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::uint32_t v = 0;
        const auto* end = item.data() + item.size();
        auto [ptr, ec] = std::from_chars(item.data(), end, v);
        if (item.empty() || ec != std::errc() || ptr != end) {
            throw UsageError(fmt::format("{}: \"{}\" is not a comma-separated list of integers", what, text));
        }
        out.push_back(v);
    }
    if (out.empty()) throw UsageError(fmt::format("{}: empty list", what));
    return out;
}

CinKind kind_or_throw(const std::string& name) {
    auto k = parse_kind(name);
    if (!k) throw UsageError(fmt::format("unknown kind \"{}\" (expected swap, circle or xor)", name));
    return *k;
}

std::vector<CinKind> parse_kinds(const std::string& text) {
    std::vector<CinKind> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(kind_or_throw(item));
    if (out.empty()) throw UsageError("--kind: empty list");
    return out;
}

HyperXFabric make_fabric(const std::string& dims_text, const std::string& kinds_text, std::uint32_t edge_ports) {
    const auto sizes = parse_list(dims_text, "--hyperx");
    auto kinds = parse_kinds(kinds_text);
    if (kinds.size() == 1) kinds.resize(sizes.size(), kinds.front());
    if (kinds.size() != sizes.size()) {
        throw UsageError(fmt::format("--kind lists {} kinds for {} dimensions", kinds.size(), sizes.size()));
    }
    std::vector<DimensionSpec> dims;
    for (std::size_t d = 0; d < sizes.size(); ++d) dims.push_back({sizes[d], kinds[d]});
    return HyperXFabric(std::move(dims), edge_ports);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error(fmt::format("cannot open {} for writing", path));
    file << text;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error(fmt::format("cannot open {}", path));
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

struct Options {
    std::string kind = "circle";
    std::uint32_t n = 0;
    std::string n_range;
    std::string hyperx;
    std::uint32_t edge_ports = 0;
    std::string format = "json";
    std::string output;
    bool lanes = false;
    int highlight = -1;
    std::string topology;
    std::string src;
    std::string dst;
    std::string order;
    std::uint32_t rack_dim = 0;
};

int cmd_generate(const Options& o, std::ostream& out) {
    const auto kind = kind_or_throw(o.kind);
    const auto m = build_pairing(kind, o.n);
    std::string text;
    if (o.format == "json") {
        text = export_topology(m);
    } else if (o.format == "dot") {
        text = to_dot(m);
    } else {
        SvgOptions svg;
        svg.lanes = o.lanes && is_isoport(m);
        if (o.highlight >= 0) svg.highlight_factor = PortId(static_cast<std::uint32_t>(o.highlight));
        svg.title = fmt::format("{} CIN, {} switches", to_string(kind), o.n);
        text = render_svg(m, LinearLayout::identity(o.n), svg);
    }
    emit(text, o.output, out);
    return kSuccess;
}

std::string describe_hop(const HyperXFabric& f, const HopRecord& h) {
    if (h.kind == HopRecord::Kind::eject) return fmt::format("eject {}", h.port);
    return fmt::format("{}:{}", f.dimension_name(h.dimension), h.port);
}

int cmd_route(const Options& o, std::ostream& out) {
    if (!o.hyperx.empty()) {
        const auto f = make_fabric(o.hyperx, o.kind, o.edge_ports == 0 ? 1 : o.edge_ports);
        MultiDigitAddress src{parse_list(o.src, "--src")};
        MultiDigitAddress dst{parse_list(o.dst, "--dst")};
        const auto order = o.order.empty() ? f.default_order() : [&] {
            auto raw = parse_list(o.order, "--order");
            return std::vector<std::size_t>(raw.begin(), raw.end());
        }();
        std::string line;
        for (const auto& hop : route_dor(f, src, dst, order)) {
            if (!line.empty()) line += "; ";
            line += describe_hop(f, hop);
        }
        out << line << "\n";
        return kSuccess;
    }

    const auto m = o.topology.empty() ? build_pairing(kind_or_throw(o.kind), o.n) : import_topology(read_file(o.topology));
    const auto src = parse_list(o.src, "--src");
    const auto dst = parse_list(o.dst, "--dst");
    if (src.size() > 2 || dst.size() > 2) throw UsageError("CIN addresses are S or S,C0");
    const std::uint32_t edge = o.edge_ports == 0 ? m.size() : o.edge_ports;
    const std::optional<std::uint32_t> local = dst.size() == 2 ? std::optional(dst[1]) : std::nullopt;
    if (src[0] >= m.size() || dst[0] >= m.size() || (local && *local >= edge) || (src.size() == 2 && src[1] >= edge)) {
        throw Error(ErrorKind::invalid_address, fmt::format("address outside a CIN of {} switches and {} edge ports",
                                                            m.size(), edge));
    }
    const auto eject = local ? fmt::format("eject {}", *local) : std::string("eject");
    if (src[0] == dst[0]) {
        out << eject << "\n";
        return kSuccess;
    }
    // Imported files may carry any valid wiring, so they route by inversion.
    const auto port = o.topology.empty() ? route(m.kind(), m.size(), SwitchId(src[0]), SwitchId(dst[0]))
                                         : route_oracle(m, SwitchId(src[0]), SwitchId(dst[0]));
    out << fmt::format("forward port {}; {}\n", port.value, eject);
    return kSuccess;
}

int cmd_metrics(const Options& o, std::ostream& out) {
    nlohmann::ordered_json doc;
    if (!o.hyperx.empty()) {
        const auto f = make_fabric(o.hyperx, o.kind, o.edge_ports == 0 ? 1 : o.edge_ports);
        doc = hyperx_metrics(f, o.rack_dim);
    } else {
        doc = cin_metrics(build_pairing(kind_or_throw(o.kind), o.n));
    }
    emit(doc.dump(2) + "\n", o.output, out);
    return kSuccess;
}

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = parse_list(text, "--n");
        if (v.size() != 1) throw UsageError("--n takes a size or a range lo..hi");
        return {v[0], v[0]};
    }
    const auto lo = parse_list(text.substr(0, dots), "--n");
    const auto hi = parse_list(text.substr(dots + 2), "--n");
    if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw UsageError("--n range must be lo..hi with lo <= hi");
    return {lo[0], hi[0]};
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<VerifyFailure> failures;
    std::string scope;
    if (!o.topology.empty()) {
        scope = o.topology;
        try {
            failures = verify_matrix(import_topology(read_file(o.topology)));
        } catch (const Error& e) {
            out << fmt::format("FAIL {}: {}\n1 failure\n", o.topology, e.what());
            return kFailure;
        }
    } else {
        const auto [lo, hi] = parse_range(o.n_range.empty() ? "2..32" : o.n_range);
        const auto kinds = o.kind == "all" ? std::vector{CinKind::swap, CinKind::circle, CinKind::xor_}
                                           : parse_kinds(o.kind);
        scope = fmt::format("n={}..{}", lo, hi);
        failures = verify_sweep(kinds, lo, hi);
    }
    for (const auto& f : failures) {
        out << fmt::format("FAIL {} n={} {}: {}\n", to_string(f.kind), f.n, f.check, f.detail);
    }
    if (failures.empty()) {
        out << fmt::format("PASS {}\n", scope);
        return kSuccess;
    }
    out << fmt::format("{} failure{}\n", failures.size(), failures.size() == 1 ? "" : "s");
    return kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Complete interconnection network builder, router and layout analyser", "lacin"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("generate", "Build a CIN instance and write it as JSON, DOT or SVG");
    gen->add_option("--kind", o.kind, "swap | circle | xor")->required();
    gen->add_option("--n", o.n, "Number of switches")->required();
    gen->add_option("--format", o.format, "json | dot | svg")->check(CLI::IsMember({"json", "dot", "svg"}));
    gen->add_option("--output", o.output, "Output file (default: stdout)");
    gen->add_flag("--lanes", o.lanes, "SVG: route each factor's crossing wire in the left lane");
    gen->add_option("--highlight", o.highlight, "SVG: draw this 1-factor in bold");

    auto* rt = app.add_subcommand("route", "Print the hops from --src to --dst");
    rt->add_option("--kind", o.kind, "CIN kind, or one kind per HyperX dimension (comma-separated)");
    rt->add_option("--n", o.n, "Number of switches");
    rt->add_option("--topology", o.topology, "Topology JSON file instead of --kind/--n");
    rt->add_option("--hyperx", o.hyperx, "HyperX dimension sizes, most significant first (e.g. 16,16,16)");
    rt->add_option("--edge-ports", o.edge_ports, "Edge ports per switch");
    rt->add_option("--order", o.order, "HyperX dimension order as indices (default 0,1,...)");
    rt->add_option("--src", o.src, "Source address: S[,C0] or HyperX digits ending with C0")->required();
    rt->add_option("--dst", o.dst, "Destination address, same form as --src")->required();

    auto* met = app.add_subcommand("metrics", "Wire length, crossing and fabric metrics as JSON");
    met->add_option("--kind", o.kind, "CIN kind, or one kind per HyperX dimension");
    met->add_option("--n", o.n, "Number of switches");
    met->add_option("--hyperx", o.hyperx, "HyperX dimension sizes, most significant first");
    met->add_option("--edge-ports", o.edge_ports, "Edge ports per switch");
    met->add_option("--rack-dim", o.rack_dim, "HyperX dimension stacked inside each rack (default 0)");
    met->add_option("--output", o.output, "Output file (default: stdout)");

    auto* ver = app.add_subcommand("verify", "Check invariants and router/oracle agreement");
    ver->add_option("--kind", o.kind, "all, or comma-separated kinds")->default_val("all");
    ver->add_option("--n", o.n_range, "Size or range lo..hi (default 2..32)");
    ver->add_option("--topology", o.topology, "Validate a topology JSON file instead of a sweep");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::Success& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "lacin: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (*gen) return cmd_generate(o, out);
        if (*rt) {
            if (o.hyperx.empty() && o.topology.empty() && o.n == 0) throw UsageError("route needs --n, --topology or --hyperx");
            return cmd_route(o, out);
        }
        if (*met) {
            if (o.hyperx.empty() && o.n == 0) throw UsageError("metrics needs --n or --hyperx");
            return cmd_metrics(o, out);
        }
        return cmd_verify(o, out);
    } catch (const UsageError& e) {
        err << "lacin: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "lacin: " << e.what() << "\n";
        return kFailure;
    }
}

}  // namespace lacin::cli
