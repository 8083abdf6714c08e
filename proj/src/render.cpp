#include "kdyck/render.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "kdyck/errors.hpp"

namespace kdyck {

namespace {

constexpr const char* kUpColor = "#333333";
constexpr const char* kGridColor = "#dddddd";
constexpr const char* kAxisColor = "#888888";
constexpr const char* kFloorColor = "#c06060";

const char* palette(std::size_t i) {
    static const char* colors[] = {"#1f77b4", "#2ca02c", "#ff7f0e",
                                   "#9467bd", "#8c564b", "#e377c2"};
    return colors[i % 6];
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << v;
    std::string s = os.str();
    if (s.size() > 3 && s.compare(s.size() - 3, 3, ".00") == 0)
        s.resize(s.size() - 3);
    return s;
}

} // namespace

std::string class_color(std::size_t cls, std::size_t k) {
    if (cls < 1 || cls > k)
        throw BadParameters("class out of range: " + std::to_string(cls));
    if (cls == k) return "#d62728"; // residue 0 is always red
    return palette(cls - 1);
}

// -- Paths --

namespace {

struct PathGeometry {
    long long min_level = 0, max_level = 0;
    std::vector<long long> levels; // before each step, plus the final 0

    explicit PathGeometry(const KDyckPath& p) {
        levels.push_back(0);
        long long level = 0;
        for (Step s : p.steps) {
            level += s == Step::Up ? 1 : -static_cast<long long>(p.k);
            levels.push_back(level);
            min_level = std::min(min_level, level);
            max_level = std::max(max_level, level);
        }
    }
};

} // namespace

std::string render_path_svg(const KDyckPath& p) {
    const double unit = 24.0;
    PathGeometry geo(p);
    const double width = (static_cast<double>(p.steps.size()) + 2) * unit;
    const double height = static_cast<double>(geo.max_level - geo.min_level + 2) * unit;
    auto X = [&](double step) { return (step + 1) * unit; };
    auto Y = [&](double level) {
        return (static_cast<double>(geo.max_level) + 1 - level) * unit;
    };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
       << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' '
       << fmt(height) << "\">\n";

    for (long long lv = geo.min_level; lv <= geo.max_level; ++lv)
        os << "  <line x1=\"0\" y1=\"" << fmt(Y(lv)) << "\" x2=\"" << fmt(width)
           << "\" y2=\"" << fmt(Y(lv)) << "\" stroke=\""
           << (lv == 0 ? kAxisColor : kGridColor) << "\" stroke-width=\"1\"/>\n";
    for (std::size_t i = 0; i <= p.steps.size() + 1; ++i)
        os << "  <line x1=\"" << fmt(i * unit) << "\" y1=\"0\" x2=\""
           << fmt(i * unit) << "\" y2=\"" << fmt(height)
           << "\" stroke=\"" << kGridColor << "\" stroke-width=\"1\"/>\n";
    if (p.t > 0)
        os << "  <line x1=\"0\" y1=\"" << fmt(Y(-static_cast<double>(p.t)))
           << "\" x2=\"" << fmt(width) << "\" y2=\""
           << fmt(Y(-static_cast<double>(p.t))) << "\" stroke=\"" << kFloorColor
           << "\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n";

    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const bool up = p.steps[i] == Step::Up;
        std::string color =
            up ? kUpColor
               : class_color(ClassHistogram::class_of_level(geo.levels[i + 1], p.k),
                             p.k);
        os << "  <line x1=\"" << fmt(X(static_cast<double>(i))) << "\" y1=\""
           << fmt(Y(static_cast<double>(geo.levels[i]))) << "\" x2=\""
           << fmt(X(static_cast<double>(i + 1))) << "\" y2=\""
           << fmt(Y(static_cast<double>(geo.levels[i + 1]))) << "\" stroke=\""
           << color << "\" stroke-width=\"" << (up ? "2" : "3")
           << "\" stroke-linecap=\"round\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_path_tikz(const KDyckPath& p) {
    PathGeometry geo(p);
    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale=0.5]\n";
    os << "  \\draw[help lines] (0," << geo.min_level - 1 << ") grid ("
       << p.steps.size() + 1 << ',' << geo.max_level + 1 << ");\n";
    os << "  \\draw[gray] (0,0) -- (" << p.steps.size() + 1 << ",0);\n";
    if (p.t > 0)
        os << "  \\draw[red!60, dashed] (0," << -static_cast<long long>(p.t)
           << ") -- (" << p.steps.size() + 1 << ','
           << -static_cast<long long>(p.t) << ");\n";
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        const bool up = p.steps[i] == Step::Up;
        std::string color =
            up ? std::string("black!80")
               : "{rgb,255:red,214;green,39;blue,40}"; // overwritten below per class
        if (!up) {
            std::size_t cls = ClassHistogram::class_of_level(geo.levels[i + 1], p.k);
            std::string hex = class_color(cls, p.k);
            int r = std::stoi(hex.substr(1, 2), nullptr, 16);
            int g = std::stoi(hex.substr(3, 2), nullptr, 16);
            int b = std::stoi(hex.substr(5, 2), nullptr, 16);
            std::ostringstream c;
            c << "{rgb,255:red," << r << ";green," << g << ";blue," << b << '}';
            color = c.str();
        }
        os << "  \\draw[color=" << color << ", " << (up ? "thin" : "thick")
           << "] (" << i << ',' << geo.levels[i] << ") -- (" << i + 1 << ','
           << geo.levels[i + 1] << ");\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

// -- Trees --

namespace {

struct TreeLayout {
    std::size_t n = 0;                 // node count, root included
    std::vector<std::pair<double, double>> pos;
    struct Edge {
        std::size_t parent, child, cls;
    };
    std::vector<Edge> edges;

    explicit TreeLayout(const KnctTree& t) {
        validate_tree(t);
        n = t.non_root_nodes() + 1;
        place_on_circle();
        std::size_t next = 1;
        for (const KnctNode& child : t.rootChildren)
            assign(child, 0, t.k, t.k, next);
        check_no_overlap();
    }

    void place_on_circle() {
        const double radius = 100.0;
        for (std::size_t i = 0; i < n; ++i) {
            // start at the top, walk clockwise in preorder
            double angle = M_PI / 2 -
                           2 * M_PI * static_cast<double>(i) / static_cast<double>(n);
            pos.emplace_back(radius * std::cos(angle), -radius * std::sin(angle));
        }
    }

    // preorder indices; cls propagates by the residue rule
    void assign(const KnctNode& node, std::size_t parentIdx, std::size_t cls,
                std::size_t k, std::size_t& next) {
        std::size_t idx = next++;
        edges.push_back({parentIdx, idx, cls});
        for (std::size_t g = 1; g <= k; ++g)
            for (const KnctNode& child : node.groups[g - 1])
                assign(child, idx, (cls + g - 1) % k + 1, k, next);
    }

    void check_no_overlap() const {
        std::set<std::pair<long long, long long>> seen;
        for (auto [x, y] : pos) {
            auto key = std::make_pair(std::llround(x * 1000), std::llround(y * 1000));
            if (!seen.insert(key).second)
                throw LayoutError("two nodes landed on the same point");
        }
    }
};

} // namespace

std::string render_tree_svg(const KnctTree& t) {
    TreeLayout layout(t);
    const double shift = 120.0, size = 240.0;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(size)
       << "\" height=\"" << fmt(size) << "\" viewBox=\"0 0 " << fmt(size) << ' '
       << fmt(size) << "\">\n";
    for (const auto& e : layout.edges)
        os << "  <line x1=\"" << fmt(layout.pos[e.parent].first + shift)
           << "\" y1=\"" << fmt(layout.pos[e.parent].second + shift) << "\" x2=\""
           << fmt(layout.pos[e.child].first + shift) << "\" y2=\""
           << fmt(layout.pos[e.child].second + shift) << "\" stroke=\""
           << class_color(e.cls, t.k) << "\" stroke-width=\"2\"/>\n";
    for (std::size_t i = 0; i < layout.n; ++i) {
        os << "  <circle cx=\"" << fmt(layout.pos[i].first + shift) << "\" cy=\""
           << fmt(layout.pos[i].second + shift) << "\" r=\"4\" fill=\""
           << (i == 0 ? "#000000" : "#555555") << "\"/>\n";
        os << "  <text x=\"" << fmt(layout.pos[i].first * 1.13 + shift)
           << "\" y=\"" << fmt(layout.pos[i].second * 1.13 + shift + 3)
           << "\" font-size=\"9\" text-anchor=\"middle\" fill=\"#333333\">"
           << i + 1 << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_tree_tikz(const KnctTree& t) {
    TreeLayout layout(t);
    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale=0.02]\n";
    for (const auto& e : layout.edges) {
        std::string hex = class_color(e.cls, t.k);
        int r = std::stoi(hex.substr(1, 2), nullptr, 16);
        int g = std::stoi(hex.substr(3, 2), nullptr, 16);
        int b = std::stoi(hex.substr(5, 2), nullptr, 16);
        os << "  \\draw[color={rgb,255:red," << r << ";green," << g << ";blue,"
           << b << "}, thick] (" << fmt(layout.pos[e.parent].first) << ','
           << fmt(-layout.pos[e.parent].second) << ") -- ("
           << fmt(layout.pos[e.child].first) << ','
           << fmt(-layout.pos[e.child].second) << ");\n";
    }
    for (std::size_t i = 0; i < layout.n; ++i)
        os << "  \\node[circle, fill" << (i == 0 ? "" : "=gray") << ", inner sep=1.2pt"
           << ", label={center:}] at (" << fmt(layout.pos[i].first) << ','
           << fmt(-layout.pos[i].second) << ") {};\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

} // namespace kdyck
