#include "kolmo/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "kolmo/errors.hpp"

namespace kolmo {

namespace {

std::string fixed(double v, int digits = 2) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
    std::string s(buf, r.ptr);
    if (s == "-0.00" || s == "-0.0" || s == "-0") s.erase(0, 1);
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string region_name(const SweepCell& c) { return c.region_ok ? to_string(c.region) : "error"; }

std::string sweep_header(DegeneracyCase dc) {
    std::string h = "mu1,mu2,region";
    for (EquilibriumId id : case_ids(dc)) {
        const std::string n(to_string(id));
        for (const char* col : {"_status", "_class", "_xi1", "_xi2", "_lambda1_re", "_lambda1_im",
                                "_lambda2_re", "_lambda2_im"})
            h += "," + n + col;
    }
    return h + ",tuple,error\n";
}

std::string entry_status(const CellEntry& e) {
    return e.error.empty() ? std::string(to_string(e.status)) : "failed";
}

std::string sweep_row(const SweepCell& c) {
    std::string r = format_double(c.mu.mu1) + "," + format_double(c.mu.mu2) + "," +
                    csv_field(region_name(c));
    for (const auto& e : c.inventory) {
        r += "," + entry_status(e);
        r += "," + csv_field(e.classified ? to_string(e.cls) : "");
        const bool has_point = e.status != Status::Absent;
        r += "," + (has_point ? format_double(e.point.xi1) : "");
        r += "," + (has_point ? format_double(e.point.xi2) : "");
        if (e.classified) {
            const auto [l1, l2] = e.eigen.eigenvalues();
            r += "," + format_double(l1.real()) + "," + format_double(l1.imag()) + "," +
                 format_double(l2.real()) + "," + format_double(l2.imag());
        } else {
            r += ",,,,";
        }
    }
    return r + "," + class_tuple(c) + "," + csv_field(c.error) + "\n";
}

struct Color {
    RegionLabel::Tag tag;
    const char* fill;
};

constexpr Color kRegionColors[] = {
    {RegionLabel::Tag::R00, "#d9d9d9"},      {RegionLabel::Tag::R10minus, "#a6cee3"},
    {RegionLabel::Tag::R10plus, "#1f78b4"},  {RegionLabel::Tag::R20minus, "#b2df8a"},
    {RegionLabel::Tag::R20plus, "#33a02c"},  {RegionLabel::Tag::OnCurve, "#000000"},
    {RegionLabel::Tag::Q, "#fdbf6f"},        {RegionLabel::Tag::QComplement, "#cab2d6"},
    {RegionLabel::Tag::Outside, "#ffffff"},
};

const char* region_fill(const SweepCell& c) {
    if (!c.region_ok) return "#e31a1c";
    for (const auto& col : kRegionColors)
        if (col.tag == c.region.tag) return col.fill;
    return "#ffffff";
}

const char* curve_stroke(CurveId id) {
    switch (id) {
        case CurveId::DeltaPlus:
        case CurveId::DeltaMinus: return "#6a3d9a";
        case CurveId::T2: return "#ff7f00";
        case CurveId::T3: return "#e31a1c";
        case CurveId::T4: return "#b15928";
        case CurveId::H:
        case CurveId::H1: return "#1b9e77";
        default: return "#404040";
    }
}

const char* class_fill(const StabilityClass& c) {
    if (c.is_attractor()) return "#1f78b4";
    if (c.is_repeller()) return "#e31a1c";
    if (c.tag == StabilityClass::Tag::Saddle) return "#33a02c";
    return "#ff7f00";
}

struct Frame {
    double left = 60, top = 20, size = 480;
    double x0, x1, y0, y1;

    double px(double x) const { return left + (x - x0) / (x1 - x0) * size; }
    double py(double y) const { return top + size - (y - y0) / (y1 - y0) * size; }
};

void svg_open(std::ostringstream& os, double w, double h) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fixed(w, 0)
       << "\" height=\"" << fixed(h, 0) << "\" viewBox=\"0 0 " << fixed(w, 0) << " " << fixed(h, 0)
       << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << fixed(w, 0) << "\" height=\"" << fixed(h, 0)
       << "\" fill=\"#ffffff\"/>\n";
}

void svg_axes(std::ostringstream& os, const Frame& f, const char* xl, const char* yl) {
    os << "<rect x=\"" << fixed(f.left) << "\" y=\"" << fixed(f.top) << "\" width=\"" << fixed(f.size)
       << "\" height=\"" << fixed(f.size) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
    const double yb = f.top + f.size;
    os << "<text x=\"" << fixed(f.left) << "\" y=\"" << fixed(yb + 16) << "\" font-size=\"11\">"
       << format_double(f.x0) << "</text>\n";
    os << "<text x=\"" << fixed(f.left + f.size) << "\" y=\"" << fixed(yb + 16)
       << "\" font-size=\"11\" text-anchor=\"end\">" << format_double(f.x1) << "</text>\n";
    os << "<text x=\"" << fixed(f.left + f.size / 2) << "\" y=\"" << fixed(yb + 30)
       << "\" font-size=\"12\" text-anchor=\"middle\">" << xl << "</text>\n";
    os << "<text x=\"" << fixed(f.left - 4) << "\" y=\"" << fixed(yb)
       << "\" font-size=\"11\" text-anchor=\"end\">" << format_double(f.y0) << "</text>\n";
    os << "<text x=\"" << fixed(f.left - 4) << "\" y=\"" << fixed(f.top + 10)
       << "\" font-size=\"11\" text-anchor=\"end\">" << format_double(f.y1) << "</text>\n";
    os << "<text x=\"" << fixed(f.left - 30) << "\" y=\"" << fixed(f.top + f.size / 2)
       << "\" font-size=\"12\" text-anchor=\"middle\">" << yl << "</text>\n";
}

template <class Pts, class Fx, class Fy>
void svg_polyline(std::ostringstream& os, const Pts& pts, Fx fx, Fy fy, const char* stroke,
                  double width, std::size_t stride = 1) {
    if (pts.size() < 2) return;
    os << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << fixed(width, 1)
       << "\" points=\"";
    for (std::size_t k = 0; k < pts.size(); k += stride) {
        if (k) os << ' ';
        os << fixed(fx(pts[k])) << ',' << fixed(fy(pts[k]));
    }
    if ((pts.size() - 1) % stride != 0) os << ' ' << fixed(fx(pts.back())) << ',' << fixed(fy(pts.back()));
    os << "\"/>\n";
}

}  // namespace

Format parse_format(const std::string& s) {
    if (s == "csv") return Format::Csv;
    if (s == "svg") return Format::Svg;
    if (s == "text") return Format::Text;
    throw ValidationError("unknown format \"" + s + "\" (csv, svg, text)");
}

std::string format_double(double v) {
    if (std::isnan(v)) return "";
    if (v == 0.0) return "0";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string sweep_csv(const SweepGrid& grid) {
    std::string out = sweep_header(grid.dcase);
    for (const auto& c : grid.cells) out += sweep_row(c);
    return out;
}

std::string sweep_svg(const SweepGrid& grid, const std::vector<CurveOverlay>& overlays) {
    std::ostringstream os;
    const auto& w = grid.window;
    Frame f{60, 20, 480, w.mu1_lo, w.mu1_hi, w.mu2_lo, w.mu2_hi};
    if (!(f.x1 > f.x0)) f.x1 = f.x0 + 1.0;
    if (!(f.y1 > f.y0)) f.y1 = f.y0 + 1.0;
    svg_open(os, 700, 540);
    const int n = grid.resolution;
    if (n > 0) {
        const double cw = f.size / n;
        os << "<g shape-rendering=\"crispEdges\">\n";
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const auto& c = grid.cells[static_cast<std::size_t>(j) * n + i];
                os << "<rect x=\"" << fixed(f.left + i * cw) << "\" y=\""
                   << fixed(f.top + (n - 1 - j) * cw) << "\" width=\"" << fixed(cw + 0.01)
                   << "\" height=\"" << fixed(cw + 0.01) << "\" fill=\"" << region_fill(c) << "\"/>\n";
            }
        os << "</g>\n";
    }
    for (const auto& ov : overlays)
        for (const auto& piece : ov.pieces)
            svg_polyline(
                os, piece, [&](const ParamPoint& p) { return f.px(p.mu1); },
                [&](const ParamPoint& p) { return f.py(p.mu2); }, curve_stroke(ov.id), 1.5);
    svg_axes(os, f, "mu1", "mu2");

    std::set<RegionLabel::Tag> present;
    for (const auto& c : grid.cells)
        if (c.region_ok) present.insert(c.region.tag);
    double ly = 30;
    for (const auto& col : kRegionColors) {
        if (!present.count(col.tag)) continue;
        RegionLabel l{col.tag, CurveId::DeltaPlus};
        std::string name = to_string(l);
        if (col.tag == RegionLabel::Tag::OnCurve) name = "OnCurve";
        os << "<rect x=\"556\" y=\"" << fixed(ly - 9) << "\" width=\"10\" height=\"10\" fill=\""
           << col.fill << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n"
           << "<text x=\"572\" y=\"" << fixed(ly) << "\" font-size=\"11\">" << name << "</text>\n";
        ly += 16;
    }
    for (const auto& ov : overlays) {
        os << "<line x1=\"556\" y1=\"" << fixed(ly - 4) << "\" x2=\"566\" y2=\"" << fixed(ly - 4)
           << "\" stroke=\"" << curve_stroke(ov.id) << "\" stroke-width=\"2\"/>\n"
           << "<text x=\"572\" y=\"" << fixed(ly) << "\" font-size=\"11\">" << to_string(ov.id)
           << "</text>\n";
        ly += 16;
    }
    os << "</svg>\n";
    return os.str();
}

std::string sweep_text(const SweepGrid& grid) {
    std::map<std::string, long> regions, tuples;
    long errors = 0;
    for (const auto& c : grid.cells) {
        ++regions[region_name(c)];
        ++tuples[class_tuple(c)];
        if (!c.error.empty()) ++errors;
    }
    std::ostringstream os;
    const auto& w = grid.window;
    os << "case " << to_string(grid.dcase) << "\n"
       << "window mu1 [" << format_double(w.mu1_lo) << ", " << format_double(w.mu1_hi) << "] mu2 ["
       << format_double(w.mu2_lo) << ", " << format_double(w.mu2_hi) << "]\n"
       << "resolution " << grid.resolution << "\n"
       << "cells " << grid.cells.size() << "\n"
       << "cells with errors " << errors << "\n"
       << "regions\n";
    for (const auto& [k, v] : regions) os << "  " << k << " " << v << "\n";
    os << "tuples (";
    bool first = true;
    for (EquilibriumId id : case_ids(grid.dcase)) {
        os << (first ? "" : " ") << to_string(id);
        first = false;
    }
    os << ")\n";
    for (const auto& [k, v] : tuples)
        os << "  " << k << " " << v << (tuple_admissible(grid.dcase, k) ? "" : "  not in table") << "\n";
    return os.str();
}

std::string emit_sweep(const SweepGrid& grid, const std::vector<CurveOverlay>& overlays, Format f) {
    switch (f) {
        case Format::Csv: return sweep_csv(grid);
        case Format::Svg: return sweep_svg(grid, overlays);
        case Format::Text: return sweep_text(grid);
    }
    return {};
}

std::string portrait_csv(const Portrait& p) {
    std::string out = "kind,id,k,t,xi1,xi2,info\n";
    for (const auto& ce : p.equilibria)
        out += "eq," + std::string(to_string(ce.eq.id)) + ",0,," + format_double(ce.eq.point.xi1) +
               "," + format_double(ce.eq.point.xi2) + "," + csv_field(to_string(ce.cls)) + "\n";
    for (std::size_t i = 0; i < p.nulls.f1.size(); ++i)
        for (std::size_t k = 0; k < p.nulls.f1[i].size(); ++k)
            out += "f1," + std::to_string(i) + "," + std::to_string(k) + ",," +
                   format_double(p.nulls.f1[i][k].xi1) + "," + format_double(p.nulls.f1[i][k].xi2) + ",\n";
    for (std::size_t i = 0; i < p.nulls.f2.size(); ++i)
        for (std::size_t k = 0; k < p.nulls.f2[i].size(); ++k)
            out += "f2," + std::to_string(i) + "," + std::to_string(k) + ",," +
                   format_double(p.nulls.f2[i][k].xi1) + "," + format_double(p.nulls.f2[i][k].xi2) + ",\n";
    for (std::size_t i = 0; i < p.trajectories.size(); ++i) {
        const auto& tr = p.trajectories[i];
        std::string info(to_string(tr.terminal));
        if (tr.converged_to) info += ":" + std::string(to_string(*tr.converged_to));
        for (std::size_t k = 0; k < tr.samples.size(); ++k)
            out += "traj," + std::to_string(i) + "," + std::to_string(k) + "," +
                   format_double(tr.samples[k].t) + "," + format_double(tr.samples[k].xi.xi1) + "," +
                   format_double(tr.samples[k].xi.xi2) + "," + (k + 1 == tr.samples.size() ? info : "") +
                   "\n";
    }
    return out;
}

std::string portrait_svg(const Portrait& p, const Window& window) {
    std::ostringstream os;
    Frame f{60, 20, 480, window.x0, window.x1, window.y0, window.y1};
    if (!(f.x1 > f.x0)) f.x1 = f.x0 + 1.0;
    if (!(f.y1 > f.y0)) f.y1 = f.y0 + 1.0;
    svg_open(os, 560, 540);
    os << "<defs><clipPath id=\"frame\"><rect x=\"" << fixed(f.left) << "\" y=\"" << fixed(f.top)
       << "\" width=\"" << fixed(f.size) << "\" height=\"" << fixed(f.size)
       << "\"/></clipPath></defs>\n<g clip-path=\"url(#frame)\">\n";
    auto fx = [&](const StatePoint& s) { return f.px(s.xi1); };
    auto fy = [&](const StatePoint& s) { return f.py(s.xi2); };
    for (const auto& tr : p.trajectories) {
        std::vector<StatePoint> pts;
        pts.reserve(tr.samples.size());
        for (const auto& s : tr.samples) pts.push_back(s.xi);
        const std::size_t stride = std::max<std::size_t>(1, pts.size() / 1500);
        svg_polyline(os, pts, fx, fy, "#7f7f7f", 0.8, stride);
    }
    for (const auto& l : p.nulls.f1) svg_polyline(os, l, fx, fy, "#1f78b4", 1.5);
    for (const auto& l : p.nulls.f2) svg_polyline(os, l, fx, fy, "#e31a1c", 1.5);
    for (const auto& ce : p.equilibria)
        os << "<circle cx=\"" << fixed(fx(ce.eq.point)) << "\" cy=\"" << fixed(fy(ce.eq.point))
           << "\" r=\"4\" fill=\"" << class_fill(ce.cls) << "\" stroke=\"#000000\"/>\n";
    os << "</g>\n";
    svg_axes(os, f, "xi1", "xi2");
    os << "</svg>\n";
    return os.str();
}

std::string portrait_text(const Portrait& p) {
    std::ostringstream os;
    os << "equilibria\n";
    for (const auto& ce : p.equilibria)
        os << "  " << to_string(ce.eq.id) << " (" << format_double(ce.eq.point.xi1) << ", "
           << format_double(ce.eq.point.xi2) << ") " << to_string(ce.cls) << "\n";
    os << "nullclines f1 " << p.nulls.f1.size() << " f2 " << p.nulls.f2.size() << "\n";
    std::map<std::string, long> term;
    for (const auto& tr : p.trajectories) {
        std::string k(to_string(tr.terminal));
        if (tr.converged_to) k += ":" + std::string(to_string(*tr.converged_to));
        ++term[k];
    }
    os << "trajectories " << p.trajectories.size() << "\n";
    for (const auto& [k, v] : term) os << "  " << k << " " << v << "\n";
    return os.str();
}

std::string emit_portrait(const Portrait& p, const Window& window, Format f) {
    switch (f) {
        case Format::Csv: return portrait_csv(p);
        case Format::Svg: return portrait_svg(p, window);
        case Format::Text: return portrait_text(p);
    }
    return {};
}

std::string analyze_document(const SweepCell& cell, DegeneracyCase c, Format f) {
    if (f == Format::Csv) return sweep_header(c) + sweep_row(cell);
    if (f == Format::Svg) throw ValidationError("analyze has no SVG form");
    std::ostringstream os;
    os << "mu (" << format_double(cell.mu.mu1) << ", " << format_double(cell.mu.mu2) << ")\n"
       << "region " << region_name(cell) << "\n";
    for (const auto& e : cell.inventory) {
        os << to_string(e.id) << " " << entry_status(e);
        if (e.status != Status::Absent)
            os << " (" << format_double(e.point.xi1) << ", " << format_double(e.point.xi2) << ")";
        if (e.classified) {
            const auto [l1, l2] = e.eigen.eigenvalues();
            os << " " << to_string(e.cls) << " eigenvalues " << format_double(l1.real());
            if (l1.imag() != 0.0) os << (l1.imag() > 0 ? "+" : "") << format_double(l1.imag()) << "i";
            os << ", " << format_double(l2.real());
            if (l2.imag() != 0.0) os << (l2.imag() > 0 ? "+" : "") << format_double(l2.imag()) << "i";
        }
        if (!e.error.empty()) os << " error: " << e.error;
        os << "\n";
    }
    os << "tuple " << class_tuple(cell) << "\n";
    return os.str();
}

std::string curves_csv(const std::vector<CurveSample>& samples) {
    std::string out = "curve,mu1,mu2,residual\n";
    for (const auto& s : samples)
        out += std::string(to_string(s.defining)) + "," + format_double(s.mu.mu1) + "," +
               format_double(s.mu.mu2) + "," + format_double(s.residual) + "\n";
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) throw IoError("write to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file " + path);
    out << content;
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace kolmo
