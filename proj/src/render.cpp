#include "pencilscope/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "pencilscope/matrix_io.hpp"

namespace pencilscope {

namespace {

constexpr double kSize = 600.0;
constexpr double kMargin = 60.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string field_csv(const Field& f) {
    std::string out = "re,im,log10r\n";
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        const Complex z = f.grid.point(k);
        out += format_double(z.real()) + "," + format_double(z.imag()) + "," + f.values[k].to_string() + "\n";
    }
    return out;
}

std::string contours_json(const ContourSet& cs) {
    using nlohmann::json;
    json levels = json::array();
    for (const auto& l : cs.levels) {
        json polys = json::array();
        for (const auto& p : l.polylines) {
            json verts = json::array();
            for (Complex z : p.vertices) verts.push_back({z.real(), z.imag()});
            polys.push_back({{"closed", p.closed}, {"vertices", std::move(verts)}});
        }
        levels.push_back({{"epsilon", l.epsilon}, {"level", l.level}, {"empty", l.empty_level},
                          {"polylines", std::move(polys)}});
    }
    return json{{"levels", std::move(levels)}}.dump(2) + "\n";
}

std::string render_svg(const ContourSet& cs, std::span<const Complex> eigs, const GridSpec& g,
                       const std::string& title) {
    const double w_re = g.re_max - g.re_min, w_im = g.im_max - g.im_min;
    const double scale = kSize / std::max(w_re, w_im);
    const double pw = w_re * scale, ph = w_im * scale;
    const double width = pw + 2 * kMargin, height = ph + 2 * kMargin;
    auto sx = [&](double re) { return kMargin + (re - g.re_min) * scale; };
    auto sy = [&](double im) { return kMargin + (g.im_max - im) * scale; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\"" << fixed(height)
      << "\" viewBox=\"0 0 " << fixed(width) << " " << fixed(height) << "\">\n";
    o << "<style>\n";
    o << "  .frame { fill: none; stroke: #000; stroke-width: 1; }\n";
    o << "  .axis { stroke: #999; stroke-width: 0.5; stroke-dasharray: 4 3; }\n";
    o << "  .tick { font: 11px sans-serif; fill: #333; }\n";
    o << "  .eig { fill: #000; }\n";
    for (std::size_t k = 0; k < cs.levels.size(); ++k) {
        o << "  .eps-" << k << " { fill: none; stroke: " << kPalette[k % std::size(kPalette)]
          << "; stroke-width: 1.5; }\n";
    }
    o << "</style>\n";
    if (!title.empty()) {
        o << "<text class=\"tick\" x=\"" << fixed(width / 2) << "\" y=\"" << fixed(kMargin / 2)
          << "\" text-anchor=\"middle\">" << escape(title) << "</text>\n";
    }
    o << "<rect class=\"frame\" x=\"" << fixed(kMargin) << "\" y=\"" << fixed(kMargin) << "\" width=\"" << fixed(pw)
      << "\" height=\"" << fixed(ph) << "\"/>\n";
    if (g.im_min < 0 && g.im_max > 0) {
        o << "<line class=\"axis\" x1=\"" << fixed(sx(g.re_min)) << "\" y1=\"" << fixed(sy(0)) << "\" x2=\""
          << fixed(sx(g.re_max)) << "\" y2=\"" << fixed(sy(0)) << "\"/>\n";
    }
    if (g.re_min < 0 && g.re_max > 0) {
        o << "<line class=\"axis\" x1=\"" << fixed(sx(0)) << "\" y1=\"" << fixed(sy(g.im_min)) << "\" x2=\""
          << fixed(sx(0)) << "\" y2=\"" << fixed(sy(g.im_max)) << "\"/>\n";
    }
    for (int k = 0; k <= 4; ++k) {
        const double re = g.re_min + w_re * k / 4.0, im = g.im_min + w_im * k / 4.0;
        o << "<text class=\"tick\" x=\"" << fixed(sx(re)) << "\" y=\"" << fixed(kMargin + ph + 16)
          << "\" text-anchor=\"middle\">" << tick(re) << "</text>\n";
        o << "<text class=\"tick\" x=\"" << fixed(kMargin - 6) << "\" y=\"" << fixed(sy(im) + 4)
          << "\" text-anchor=\"end\">" << tick(im) << "</text>\n";
    }
    for (std::size_t k = 0; k < cs.levels.size(); ++k) {
        const ContourLevel& l = cs.levels[k];
        o << "<g data-epsilon=\"" << format_double(l.epsilon) << "\">\n";
        for (const Polyline& p : l.polylines) {
            o << "<path class=\"eps-" << k << "\" d=\"";
            for (std::size_t v = 0; v < p.vertices.size(); ++v) {
                o << (v ? " L" : "M") << fixed(sx(p.vertices[v].real())) << " " << fixed(sy(p.vertices[v].imag()));
            }
            if (p.closed) o << " Z";
            o << "\"/>\n";
        }
        o << "</g>\n";
    }
    for (Complex z : eigs) {
        if (!g.contains(z)) continue;
        o << "<circle class=\"eig\" cx=\"" << fixed(sx(z.real())) << "\" cy=\"" << fixed(sy(z.imag()))
          << "\" r=\"2.5\"/>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace pencilscope
