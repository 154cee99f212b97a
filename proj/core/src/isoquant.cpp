#include "fpdea/isoquant.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "fpdea/errors.hpp"
#include "fpdea/format.hpp"

namespace fpdea {

namespace {

using Point = std::array<double, 2>;

std::vector<Point> normalized_points(const DmuPanel& panel) {
    if (panel.n_inputs != 2 || panel.n_outputs != 1)
        throw WrongDimensions("isoquants need exactly two inputs and one output");
    panel.validate();
    std::vector<Point> pts;
    for (std::size_t n = 0; n < panel.n_dmus; ++n) {
        const double y = panel.output(n, 0);
        if (y <= 0.0) continue;
        pts.push_back({panel.input(n, 0) / y, panel.input(n, 1) / y});
    }
    if (pts.empty()) throw DegenerateDmu("no DMU with positive output");
    return pts;
}

double cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Lower-left boundary of the free-disposal convex hull: the lower hull
// truncated at its first minimum-x2 vertex. Everything to the right of
// that vertex is covered by the horizontal disposal ray.
std::vector<Point> lower_left_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<Point> hull;
    for (const Point& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0.0)
            hull.pop_back();
        hull.push_back(p);
    }

    std::size_t cut = 0;
    for (std::size_t i = 1; i < hull.size(); ++i)
        if (hull[i][1] < hull[cut][1]) cut = i;
    hull.resize(cut + 1);
    return hull;
}

bool pair_declared(const FpStructure& fp) {
    for (const auto& [a, b] : fp.input_pairs)
        if ((a == 0 && b == 1) || (a == 1 && b == 0)) return true;
    return false;
}

struct Canvas {
    static constexpr double kWidth = 640.0;
    static constexpr double kHeight = 480.0;
    static constexpr double kLeft = 60.0;
    static constexpr double kRight = 20.0;
    static constexpr double kTop = 20.0;
    static constexpr double kBottom = 40.0;
    double axis_max;

    double px(double x) const {
        return kLeft + x / axis_max * (kWidth - kLeft - kRight);
    }
    double py(double y) const {
        return kHeight - kBottom - y / axis_max * (kHeight - kTop - kBottom);
    }
};

// Liang-Barsky clip of the segment a..b to [0, axis_max]^2.
bool clip_segment(double axis_max, Point& a, Point& b) {
    double t0 = 0.0, t1 = 1.0;
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double p[4] = {-dx, dx, -dy, dy};
    const double q[4] = {a[0] - 0.0, axis_max - a[0], a[1] - 0.0, axis_max - a[1]};
    for (int i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0) {
            if (r > t1) return false;
            if (r > t0) t0 = r;
        } else {
            if (r < t0) return false;
            if (r < t1) t1 = r;
        }
    }
    const Point na = {a[0] + t0 * dx, a[1] + t0 * dy};
    const Point nb = {a[0] + t1 * dx, a[1] + t1 * dy};
    a = na;
    b = nb;
    return true;
}

const char* tag_color(IsoquantTag tag) {
    switch (tag) {
        case IsoquantTag::True: return "black";
        case IsoquantTag::Ccr: return "blue";
        case IsoquantTag::Fp: return "red";
        case IsoquantTag::Bg: return "green";
    }
    return "black";
}

}  // namespace

const char* isoquant_tag_name(IsoquantTag tag) {
    switch (tag) {
        case IsoquantTag::True: return "TRUE";
        case IsoquantTag::Ccr: return "CCR";
        case IsoquantTag::Fp: return "FP";
        case IsoquantTag::Bg: return "BG";
    }
    return "TRUE";
}

IsoquantPolyline build_isoquant(const DmuPanel& panel, IsoquantTag tag,
                                const std::optional<FpStructure>& fp) {
    const std::vector<Point> pts = normalized_points(panel);

    IsoquantPolyline out;
    out.tag = tag;
    switch (tag) {
        case IsoquantTag::True:
            out.vertices = {{1.0, 1.0}};
            break;
        case IsoquantTag::Ccr:
            out.vertices = lower_left_hull(pts);
            break;
        case IsoquantTag::Fp: {
            if (fp) fp->validate(2, 1);
            if (!fp || pair_declared(*fp)) {
                Point corner = pts.front();
                for (const Point& p : pts) {
                    corner[0] = std::min(corner[0], p[0]);
                    corner[1] = std::min(corner[1], p[1]);
                }
                out.vertices = {corner};
            } else {
                out.vertices = lower_left_hull(pts);
            }
            break;
        }
        case IsoquantTag::Bg: {
            double c = pts.front()[0] + pts.front()[1];
            for (const Point& p : pts) c = std::min(c, p[0] + p[1]);
            out.vertices = {{0.0, c}, {c, 0.0}};
            break;
        }
    }
    return out;
}

std::string to_svg(const std::vector<IsoquantPolyline>& lines, const DmuPanel& panel) {
    const std::vector<Point> pts = normalized_points(panel);

    double hi = 0.0;
    for (const Point& p : pts) hi = std::max({hi, p[0], p[1]});
    Canvas cv{1.1 * hi};
    if (cv.axis_max <= 0.0) cv.axis_max = 1.0;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";

    const std::string x0 = format_double(cv.px(0.0));
    const std::string y0 = format_double(cv.py(0.0));
    svg << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\""
        << format_double(cv.px(cv.axis_max)) << "\" y2=\"" << y0
        << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\""
        << format_double(cv.py(cv.axis_max)) << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << format_double(cv.px(cv.axis_max) - 4.0) << "\" y=\""
        << format_double(cv.py(0.0) + 16.0)
        << "\" font-size=\"11\" text-anchor=\"end\" fill=\"gray\">"
        << format_double(cv.axis_max) << "</text>\n";
    svg << "<text x=\"" << format_double(cv.px(0.0) - 8.0) << "\" y=\""
        << format_double(cv.py(cv.axis_max) + 4.0)
        << "\" font-size=\"11\" text-anchor=\"end\" fill=\"gray\">"
        << format_double(cv.axis_max) << "</text>\n";
    svg << "<text x=\"" << format_double(cv.px(cv.axis_max / 2.0)) << "\" y=\""
        << format_double(Canvas::kHeight - 8.0)
        << "\" font-size=\"12\" text-anchor=\"middle\">x1 / y</text>\n";
    svg << "<text x=\"14\" y=\"" << format_double(cv.py(cv.axis_max / 2.0))
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << format_double(cv.py(cv.axis_max / 2.0)) << ")\">x2 / y</text>\n";

    for (const Point& p : pts) {
        svg << "<circle cx=\"" << format_double(cv.px(p[0])) << "\" cy=\""
            << format_double(cv.py(p[1])) << "\" r=\"3\" fill=\"#777777\"/>\n";
    }

    for (const IsoquantPolyline& line : lines) {
        if (line.vertices.empty()) continue;
        std::vector<std::pair<Point, Point>> segs;
        const double reach = 4.0 * cv.axis_max;
        const Point& first = line.vertices.front();
        segs.push_back({{first[0] + reach * line.ray_first[0],
                         first[1] + reach * line.ray_first[1]},
                        first});
        for (std::size_t i = 0; i + 1 < line.vertices.size(); ++i)
            segs.push_back({line.vertices[i], line.vertices[i + 1]});
        const Point& last = line.vertices.back();
        segs.push_back({last,
                        {last[0] + reach * line.ray_last[0],
                         last[1] + reach * line.ray_last[1]}});

        std::string d;
        bool have_pen = false;
        Point pen{0.0, 0.0};
        for (auto [a, b] : segs) {
            if (!clip_segment(cv.axis_max, a, b)) {
                have_pen = false;
                continue;
            }
            if (!have_pen || a != pen) {
                d += "M " + format_double(cv.px(a[0])) + " " + format_double(cv.py(a[1])) + " ";
            }
            d += "L " + format_double(cv.px(b[0])) + " " + format_double(cv.py(b[1])) + " ";
            pen = b;
            have_pen = true;
        }
        if (d.empty()) continue;
        d.pop_back();
        svg << "<path d=\"" << d << "\" stroke=\"" << tag_color(line.tag)
            << "\" stroke-width=\"2\" fill=\"none\"/>\n";
    }

    double ly = Canvas::kTop + 14.0;
    for (const IsoquantPolyline& line : lines) {
        const double lx = Canvas::kWidth - Canvas::kRight - 120.0;
        svg << "<line x1=\"" << format_double(lx) << "\" y1=\"" << format_double(ly - 4.0)
            << "\" x2=\"" << format_double(lx + 28.0) << "\" y2=\"" << format_double(ly - 4.0)
            << "\" stroke=\"" << tag_color(line.tag) << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << format_double(lx + 34.0) << "\" y=\"" << format_double(ly)
            << "\" font-size=\"12\">" << isoquant_tag_name(line.tag) << "</text>\n";
        ly += 18.0;
    }

    svg << "</svg>\n";
    return svg.str();
}

void render_svg(const std::vector<IsoquantPolyline>& lines, const DmuPanel& panel,
                const std::string& path) {
    const std::string body = to_svg(lines, panel);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open " + path + " for writing");
    out << body;
    out.flush();
    if (!out) throw IoFailure("failed writing " + path);
}

void write_vertex_csv(const std::vector<IsoquantPolyline>& lines, std::ostream& out) {
    out << "estimator,x1,x2,point_order\n";
    for (const IsoquantPolyline& line : lines) {
        for (std::size_t i = 0; i < line.vertices.size(); ++i) {
            out << isoquant_tag_name(line.tag) << ',' << format_double(line.vertices[i][0])
                << ',' << format_double(line.vertices[i][1]) << ',' << i << '\n';
        }
    }
}

}  // namespace fpdea
