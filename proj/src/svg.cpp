#include "discrimlab/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <utility>
#include <vector>

namespace discrimlab {

namespace {

struct Point {
    double x;
    double y;
};

struct Box {
    double xmin, ymin, xmax, ymax;
};

Point to_point(const Vec& v) { return {v[0].get_d(), v[1].get_d()}; }

// Clip a.x = c to the box. Returns nothing if the line misses it.
std::optional<std::pair<Point, Point>> clip(double a0, double a1, double c, const Box& b) {
    std::vector<Point> hits;
    auto add = [&](Point p) {
        const double eps = 1e-9 * std::max({1.0, std::abs(b.xmax - b.xmin), std::abs(b.ymax - b.ymin)});
        if (p.x < b.xmin - eps || p.x > b.xmax + eps || p.y < b.ymin - eps || p.y > b.ymax + eps) return;
        for (const auto& q : hits)
            if (std::abs(q.x - p.x) <= eps && std::abs(q.y - p.y) <= eps) return;
        hits.push_back(p);
    };
    if (a1 != 0) {
        add({b.xmin, (c - a0 * b.xmin) / a1});
        add({b.xmax, (c - a0 * b.xmax) / a1});
    }
    if (a0 != 0) {
        add({(c - a1 * b.ymin) / a0, b.ymin});
        add({(c - a1 * b.ymax) / a0, b.ymax});
    }
    if (hits.size() < 2) return std::nullopt;
    return std::make_pair(hits[0], hits[1]);
}

Box padded_box(const std::vector<Point>& pts) {
    Box box{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const auto& p : pts) {
        box.xmin = std::min(box.xmin, p.x);
        box.xmax = std::max(box.xmax, p.x);
        box.ymin = std::min(box.ymin, p.y);
        box.ymax = std::max(box.ymax, p.y);
    }
    const double w = box.xmax - box.xmin;
    const double h = box.ymax - box.ymin;
    const double padx = w > 0 ? 0.1 * w : (h > 0 ? 0.1 * h : 1.0);
    const double pady = h > 0 ? 0.1 * h : padx;
    return {box.xmin - padx, box.ymin - pady, box.xmax + padx, box.ymax + pady};
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << (v == 0 ? 0.0 : v);
    return os.str();
}

}  // namespace

void emit_svg(const CentralArrangement& a, const Translate& t, const std::optional<TSet>& T, std::ostream& out) {
    if (a.k() != 2) throw PreconditionError("svg: only arrangements of lines (k = 2) can be drawn");
    if (t.values.size() != a.n()) throw DimensionError("svg: translate length differs from n");

    std::optional<KTConfiguration> kt;
    std::vector<Point> anchors;
    if (T) {
        kt = kt_configuration(a, t, *T);
        for (const auto& p : kt->points) anchors.push_back(to_point(p));
    } else {
        for (std::size_t i = 0; i < a.n(); ++i)
            for (std::size_t j = i + 1; j < a.n(); ++j)
                anchors.push_back(to_point(*common_point(a, t, IndexSet{i, j})));
    }

    Box box = padded_box(anchors);
    // Every line must cross the picture: pull in the foot of the
    // perpendicular from the centre for any line that misses the box.
    const Point centre{(box.xmin + box.xmax) / 2, (box.ymin + box.ymax) / 2};
    bool grew = false;
    for (std::size_t i = 0; i < a.n(); ++i) {
        const double a0 = a.normal(i)[0].get_d();
        const double a1 = a.normal(i)[1].get_d();
        const double c = t.values[i].get_d();
        if (clip(a0, a1, c, box)) continue;
        const double s = (c - a0 * centre.x - a1 * centre.y) / (a0 * a0 + a1 * a1);
        anchors.push_back({centre.x + s * a0, centre.y + s * a1});
        grew = true;
    }
    if (grew) box = padded_box(anchors);
    const double size = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
    const double stroke = size / 300.0;

    // SVG y grows downward; flip so the picture matches the usual axes.
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.xmin) << ' ' << num(-box.ymax) << ' '
        << num(box.xmax - box.xmin) << ' ' << num(box.ymax - box.ymin) << "\">\n";
    for (std::size_t i = 0; i < a.n(); ++i) {
        const auto& n = a.normal(i);
        auto seg = clip(n[0].get_d(), n[1].get_d(), t.values[i].get_d(), box);
        if (!seg) continue;
        out << "  <line id=\"H" << i + 1 << "\" x1=\"" << num(seg->first.x) << "\" y1=\"" << num(-seg->first.y)
            << "\" x2=\"" << num(seg->second.x) << "\" y2=\"" << num(-seg->second.y) << "\" stroke=\"black\" stroke-width=\""
            << num(stroke) << "\"/>\n";
    }
    if (kt) {
        for (const auto& e : kt->edges) {
            const Point p = to_point(kt->points[e.i]);
            const Point q = to_point(kt->points[e.j]);
            out << "  <path d=\"M " << num(p.x) << ' ' << num(-p.y) << " L " << num(q.x) << ' ' << num(-q.y)
                << "\" stroke=\"red\" stroke-width=\"" << num(2 * stroke) << "\" fill=\"none\"/>\n";
        }
        for (std::size_t i = 0; i < kt->points.size(); ++i) {
            const Point p = to_point(kt->points[i]);
            out << "  <circle id=\"P" << i + 1 << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\""
                << num(4 * stroke) << "\" fill=\"blue\"/>\n";
        }
    }
    out << "</svg>\n";
}

}  // namespace discrimlab
