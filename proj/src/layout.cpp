// SPDX-License-Identifier: Apache-2.0

#include "lacin/layout.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace lacin {

LinearLayout LinearLayout::identity(std::uint32_t n) {
    std::vector<std::uint32_t> pos(n);
    for (std::uint32_t s = 0; s < n; ++s) pos[s] = s;
    return LinearLayout(std::move(pos));
}

LinearLayout LinearLayout::from_positions(std::vector<std::uint32_t> positions) {
    std::vector<bool> used(positions.size(), false);
    for (auto p : positions) {
        if (p >= positions.size() || used[p]) {
            throw Error(ErrorKind::invalid_matrix, "layout positions must be a permutation of 0..n-1");
        }
        used[p] = true;
    }
    return LinearLayout(std::move(positions));
}

LinearLayout LinearLayout::with_lanes(const PairingMatrix& m) const {
    if (m.size() != size()) {
        throw Error(ErrorKind::invalid_size, fmt::format("layout of {} slots for {} switches", size(), m.size()));
    }
    if (!is_isoport(m)) throw Error(ErrorKind::not_isoport, "lanes are defined per column of an isoport layout");
    LinearLayout out(positions_);
    out.left_lanes_.assign(m.ports(), std::nullopt);
    for (const auto& link : m.links()) {
        const auto top = std::max(position(link.a.sw), position(link.b.sw));
        if (top == size() - 1) out.left_lanes_[link.a.port.value] = std::pair{link.a.sw, link.b.sw};
    }
    return out;
}

std::optional<std::pair<SwitchId, SwitchId>> LinearLayout::left_lane(PortId port) const {
    if (port.value >= left_lanes_.size()) return std::nullopt;
    return left_lanes_[port.value];
}

namespace {

void require_matching(const PairingMatrix& m, const LinearLayout& layout) {
    if (m.size() != layout.size()) {
        throw Error(ErrorKind::invalid_size,
                    fmt::format("layout of {} slots for {} switches", layout.size(), m.size()));
    }
}

std::uint64_t span_of(const LinearLayout& layout, const Link& link) {
    const auto pa = layout.position(link.a.sw);
    const auto pb = layout.position(link.b.sw);
    return pa > pb ? pa - pb : pb - pa;
}

}  // namespace

WireLengthReport wire_lengths(const PairingMatrix& m, const LinearLayout& layout) {
    require_matching(m, layout);
    WireLengthReport report;
    for (const auto& link : m.links()) {
        const auto len = span_of(layout, link);
        ++report.histogram[len];
        report.total += len;
    }
    return report;
}

double euclidean_wire_length(const PairingMatrix& m, const LinearLayout& layout) {
    require_matching(m, layout);
    double total = 0.0;
    for (const auto& link : m.links()) {
        const auto vertical = static_cast<double>(span_of(layout, link));
        const auto horizontal =
            std::abs(static_cast<double>(link.a.port.value) - static_cast<double>(link.b.port.value));
        total += std::hypot(vertical, horizontal);
    }
    return total;
}

SwapWireLengths swap_wire_lengths(std::uint32_t n) {
    const auto m = build_pairing(CinKind::swap, n);
    const double eu = euclidean_wire_length(m, LinearLayout::identity(n));
    const double nn = n;
    const double iso = (nn * nn * nn - nn) / 6.0;
    return {eu, eu / iso};
}

CrossingReport crossing_count(const PairingMatrix& m, const LinearLayout& layout, bool use_lanes) {
    require_matching(m, layout);
    const auto factors = one_factors(m);
    const LinearLayout laned = use_lanes && !layout.has_lanes() ? layout.with_lanes(m) : layout;

    struct Interval {
        std::uint32_t lo, hi;
        bool left;
    };
    CrossingReport report;
    for (const auto& factor : factors.factors) {
        const auto lane = use_lanes ? laned.left_lane(factor.port_index) : std::nullopt;
        std::vector<Interval> wires;
        wires.reserve(factor.links.size());
        for (const auto& [a, b] : factor.links) {
            const auto pa = layout.position(a);
            const auto pb = layout.position(b);
            const bool left = lane && lane->first == a && lane->second == b;
            wires.push_back({std::min(pa, pb), std::max(pa, pb), left});
        }
        std::uint64_t count = 0;
        for (std::size_t x = 0; x < wires.size(); ++x) {
            for (std::size_t y = x + 1; y < wires.size(); ++y) {
                const auto& p = wires[x];
                const auto& q = wires[y];
                if (p.left != q.left) continue;
                if ((p.lo < q.lo && q.lo < p.hi && p.hi < q.hi) || (q.lo < p.lo && p.lo < q.hi && q.hi < p.hi)) {
                    ++count;
                }
            }
        }
        report.per_factor.emplace_back(factor.port_index, count);
        report.total += count;
    }
    return report;
}

namespace {

constexpr double kMargin = 40.0;
constexpr double kLabelWidth = 40.0;
constexpr double kColumnWidth = 48.0;
constexpr double kRowHeight = 36.0;
constexpr double kSwitchHeight = 14.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                          "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

double port_x(std::uint32_t port) { return kMargin + kLabelWidth + (port + 0.5) * kColumnWidth; }
double slot_y(std::uint32_t slot) { return kMargin + slot * kRowHeight + kSwitchHeight / 2.0; }

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const PairingMatrix& m, const LinearLayout& layout, const SvgOptions& options) {
    require_matching(m, layout);
    const bool iso = is_isoport(m);
    const LinearLayout laned = options.lanes && iso && !layout.has_lanes() ? layout.with_lanes(m) : layout;
    const std::uint32_t n = m.size();
    const double width = 2 * kMargin + kLabelWidth + m.ports() * kColumnWidth;
    const double height = 2 * kMargin + (n - 1) * kRowHeight + kSwitchHeight;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{:.0f}\" height=\"{:.0f}\" "
        "viewBox=\"0 0 {:.0f} {:.0f}\">\n",
        width, height, width, height);
    if (!options.title.empty()) out += fmt::format("  <title>{}</title>\n", escape(options.title));
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    out += "  <g id=\"switches\" font-family=\"monospace\" font-size=\"11\">\n";
    for (std::uint32_t s = 0; s < n; ++s) {
        const double y = kMargin + layout.position(SwitchId(s)) * kRowHeight;
        out += fmt::format(
            "    <rect class=\"switch\" x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" "
            "fill=\"#eeeeee\" stroke=\"black\"/>\n",
            kMargin + kLabelWidth, y, m.ports() * kColumnWidth, kSwitchHeight);
        out += fmt::format("    <text x=\"{:.1f}\" y=\"{:.1f}\">S{}</text>\n", kMargin, y + kSwitchHeight - 3, s);
    }
    out += "  </g>\n";

    out += "  <g id=\"wires\" fill=\"none\">\n";
    const double reach = kColumnWidth / 2.0 - 4.0;
    for (const auto& link : m.links()) {
        const auto ya = slot_y(layout.position(link.a.sw));
        const auto yb = slot_y(layout.position(link.b.sw));
        const bool bold = options.highlight_factor && iso && link.a.port == *options.highlight_factor;
        const char* colour = iso ? kPalette[link.a.port.value % std::size(kPalette)] : "#333333";
        const double stroke = bold ? 3.0 : 1.2;
        const auto attrs = fmt::format("class=\"wire\" data-ports=\"{}:{}\" stroke=\"{}\" stroke-width=\"{:.1f}\"",
                                       link.a.port.value, link.b.port.value, colour, stroke);
        if (iso) {
            // Longer runs sit further from the port so nested wires never overlap.
            const double span = std::abs(yb - ya) / kRowHeight;
            double offset = 4.0 + reach * span / std::max<std::uint32_t>(1, n - 1);
            const auto lane = laned.left_lane(link.a.port);
            if (options.lanes && lane && lane->first == link.a.sw && lane->second == link.b.sw) offset = -offset;
            const double x = port_x(link.a.port.value);
            out += fmt::format("    <path {} d=\"M {:.1f} {:.1f} H {:.1f} V {:.1f} H {:.1f}\"/>\n", attrs, x, ya,
                               x + offset, yb, x);
        } else {
            out += fmt::format("    <path {} d=\"M {:.1f} {:.1f} L {:.1f} {:.1f}\"/>\n", attrs,
                               port_x(link.a.port.value), ya, port_x(link.b.port.value), yb);
        }
    }
    out += "  </g>\n";

    const auto idle = m.idle_ports();
    if (!idle.empty()) {
        out += "  <g id=\"idle\" stroke=\"#999999\" stroke-dasharray=\"2,2\">\n";
        for (const auto& p : idle) {
            const double x = port_x(p.port.value);
            const double y = slot_y(layout.position(p.sw));
            out += fmt::format("    <line class=\"idle\" x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\"/>\n",
                               x, y, x, y + kRowHeight / 3.0);
        }
        out += "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace lacin
