#pragma once

#include "quiver.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gentle {

// One side of a polygon: a dissection edge traversed with (+) or against (-)
// its orientation, or a boundary segment B<k>.
struct Side {
    bool boundary = false;
    std::string name; // edge name, or the full token "B<k>"
    bool plus = true;

    std::string token() const { return boundary ? name : name + (plus ? "+" : "-"); }
    bool operator==(const Side&) const = default;
};

// Sides are listed counterclockwise. Corner i sits at the start of side i.
struct Polygon {
    std::string id;
    std::vector<Side> sides;

    int size() const { return static_cast<int>(sides.size()); }
    const Side& side(int i) const { return sides[((i % size()) + size()) % size()]; }
    int boundary_side() const
    {
        for (int i = 0; i < size(); ++i)
            if (sides[i].boundary)
                return i;
        return -1;
    }
    bool encloses_puncture() const { return boundary_side() < 0; }
    bool operator==(const Polygon&) const = default;
};

struct BoundarySegment {
    std::string token;
    int polygon = 0;
    int from = 0, to = 0; // marked point labels
};

struct EdgeEnds {
    int plus_polygon = 0, plus_side = 0;
    int minus_polygon = 0, minus_side = 0;
};

// A validated dissection together with the data derived from the gluing.
struct Dissection {
    std::vector<Polygon> polygons;

    std::vector<std::vector<int>> corner; // polygon, corner -> marked point label (1-based)
    std::map<std::string, EdgeEnds, decltype(&natural_less)> edges{&natural_less};
    std::vector<BoundarySegment> segments; // in boundary-walk order
    int marked_points = 0;
    int boundary_components = 0; // marked components only
    int punctures = 0;
    int euler = 0;
    int genus = 0;

    int num_edges() const { return static_cast<int>(edges.size()); }
    bool punctureless() const { return punctures == 0; }
    // Endpoints of an edge as marked point labels, (start, end).
    std::pair<int, int> edge_endpoints(const std::string& e) const
    {
        const auto& ee = edges.at(e);
        return {corner[ee.plus_polygon][ee.plus_side],
                corner[ee.plus_polygon][(ee.plus_side + 1) % polygons[ee.plus_polygon].size()]};
    }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

inline bool is_boundary_token(const std::string& t)
{
    if (t.size() < 2 || t[0] != 'B')
        return false;
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i])))
            return false;
    return true;
}

inline bool valid_edge_name(const std::string& s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.')
            return false;
    return true;
}

} // namespace detail

// Validates the gluing and fills in the derived fields. Throws DomainError.
inline Dissection make_dissection(std::vector<Polygon> polygons)
{
    Dissection D;
    D.polygons = std::move(polygons);
    if (D.polygons.empty())
        throw DomainError("dissection has no polygons");
    std::set<std::string> ids, btokens;
    std::map<std::string, std::pair<int, int>> plus_at, minus_at;
    for (int p = 0; p < static_cast<int>(D.polygons.size()); ++p) {
        const auto& P = D.polygons[p];
        if (!ids.insert(P.id).second)
            throw DomainError("duplicate polygon id " + P.id);
        if (P.sides.empty())
            throw DomainError("polygon " + P.id + " has no sides");
        int nb = 0, ng = 0;
        for (int i = 0; i < P.size(); ++i) {
            const auto& s = P.sides[i];
            if (s.boundary) {
                ++nb;
                if (!btokens.insert(s.name).second)
                    throw DomainError("boundary token " + s.name + " used twice");
                continue;
            }
            ++ng;
            auto& slot = s.plus ? plus_at : minus_at;
            if (slot.count(s.name))
                throw DomainError("edge " + s.name + " used twice with the same orientation sign");
            slot[s.name] = {p, i};
        }
        if (nb > 1)
            throw DomainError("polygon " + P.id + " has " + std::to_string(nb) +
                              " boundary segments; admissible polygons have at most one");
        if (ng == 0)
            throw DomainError("polygon " + P.id + " has no dissection edges");
    }
    for (auto& [e, at] : plus_at)
        if (!minus_at.count(e))
            throw DomainError("edge " + e + " is used once; every edge needs one + and one - occurrence");
    for (auto& [e, at] : minus_at)
        if (!plus_at.count(e))
            throw DomainError("edge " + e + " is used once; every edge needs one + and one - occurrence");

    std::vector<int> offset(D.polygons.size() + 1, 0);
    for (std::size_t p = 0; p < D.polygons.size(); ++p)
        offset[p + 1] = offset[p] + D.polygons[p].size();
    auto cid = [&](int p, int i) {
        int k = D.polygons[p].size();
        return offset[p] + ((i % k) + k) % k;
    };
    detail::UnionFind corners(offset.back()), faces(static_cast<int>(D.polygons.size()));
    for (auto& [e, pa] : plus_at) {
        auto ma = minus_at[e];
        D.edges[e] = {pa.first, pa.second, ma.first, ma.second};
        corners.unite(cid(pa.first, pa.second), cid(ma.first, ma.second + 1));
        corners.unite(cid(pa.first, pa.second + 1), cid(ma.first, ma.second));
        faces.unite(pa.first, ma.first);
    }
    for (std::size_t p = 1; p < D.polygons.size(); ++p)
        if (faces.find(0) != faces.find(static_cast<int>(p)))
            throw DomainError("dissection is disconnected");

    // Boundary structure: every marked point starts exactly one segment and ends one.
    std::map<int, int> starts, ends; // corner class -> polygon index of the segment
    std::set<int> classes;
    for (int c = 0; c < offset.back(); ++c)
        classes.insert(corners.find(c));
    for (int p = 0; p < static_cast<int>(D.polygons.size()); ++p) {
        int b = D.polygons[p].boundary_side();
        if (b < 0)
            continue;
        int s = corners.find(cid(p, b)), t = corners.find(cid(p, b + 1));
        if (!starts.emplace(s, p).second || !ends.emplace(t, p).second)
            throw DomainError("boundary segments do not close up into circles");
    }
    for (int c : classes)
        if (!starts.count(c))
            throw DomainError("dissection has a marked point in the interior of the surface");

    // Walk boundary components from their naturally least token.
    std::vector<std::pair<std::string, int>> order;
    for (auto& [c, p] : starts)
        order.emplace_back(D.polygons[p].sides[D.polygons[p].boundary_side()].name, c);
    std::sort(order.begin(), order.end(), [](auto& a, auto& b) { return natural_less(a.first, b.first); });
    std::map<int, int> label;
    for (auto& [tok, c0] : order) {
        if (label.count(c0))
            continue;
        ++D.boundary_components;
        int c = c0;
        do {
            label[c] = static_cast<int>(label.size()) + 1;
            int p = starts[c];
            int b = D.polygons[p].boundary_side();
            c = corners.find(cid(p, b + 1));
        } while (c != c0);
    }
    D.marked_points = static_cast<int>(label.size());
    D.corner.resize(D.polygons.size());
    for (int p = 0; p < static_cast<int>(D.polygons.size()); ++p)
        for (int i = 0; i < D.polygons[p].size(); ++i)
            D.corner[p].push_back(label[corners.find(cid(p, i))]);
    for (auto& [tok, c0] : order) {
        (void)tok;
        int c = c0;
        std::vector<BoundarySegment> comp;
        do {
            int p = starts[c];
            int b = D.polygons[p].boundary_side();
            int next = corners.find(cid(p, b + 1));
            comp.push_back({D.polygons[p].sides[b].name, p, label[c], label[next]});
            c = next;
        } while (c != c0);
        if (std::none_of(D.segments.begin(), D.segments.end(),
                         [&](auto& s) { return s.token == comp.front().token; }))
            D.segments.insert(D.segments.end(), comp.begin(), comp.end());
    }
    std::sort(D.segments.begin(), D.segments.end(), [](auto& a, auto& b) { return a.from < b.from; });

    for (auto& P : D.polygons)
        D.punctures += P.encloses_puncture() ? 1 : 0;
    int faces_count = static_cast<int>(D.polygons.size()) - D.punctures;
    D.euler = D.marked_points - (D.num_edges() + static_cast<int>(D.segments.size())) + faces_count;
    int b = D.boundary_components + D.punctures;
    int twice_genus = 2 - b - D.euler;
    if (twice_genus < 0 || twice_genus % 2)
        throw std::logic_error("inconsistent Euler characteristic");
    D.genus = twice_genus / 2;
    return D;
}

inline Dissection parse_dissection(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    std::vector<Polygon> polys;
    while (std::getline(in, line)) {
        ++ln;
        if (auto h = line.find('#'); h != std::string::npos)
            line.resize(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        if (kw != "polygon")
            throw ParseError(ln, "expected 'polygon', got '" + kw + "'");
        std::string rest;
        std::getline(ls, rest);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw ParseError(ln, "missing ':' after polygon id");
        Polygon P;
        std::istringstream idss(rest.substr(0, colon));
        if (!(idss >> P.id) || !detail::valid_edge_name(P.id))
            throw ParseError(ln, "bad polygon id");
        std::istringstream ss(rest.substr(colon + 1));
        for (std::string tok; ss >> tok;) {
            Side s;
            if (detail::is_boundary_token(tok)) {
                s.boundary = true;
                s.name = tok;
            } else {
                char sign = tok.back();
                if (sign != '+' && sign != '-')
                    throw ParseError(ln, "side '" + tok + "' needs a + or - sign");
                s.name = tok.substr(0, tok.size() - 1);
                s.plus = sign == '+';
                if (!detail::valid_edge_name(s.name))
                    throw ParseError(ln, "bad edge name '" + s.name + "'");
            }
            P.sides.push_back(s);
        }
        polys.push_back(std::move(P));
    }
    try {
        return make_dissection(std::move(polys));
    } catch (const DomainError& e) {
        throw ParseError(0, e.what());
    }
}

inline std::string serialize_dissection(const Dissection& D)
{
    std::string s;
    for (const auto& P : D.polygons) {
        s += "polygon " + P.id + ":";
        for (const auto& side : P.sides)
            s += " " + side.token();
        s += "\n";
    }
    return s;
}

inline bool is_disk(const Dissection& D)
{
    return D.genus == 0 && D.boundary_components == 1 && D.punctures == 0;
}

// Algebra arrows carry the marked point of the corner they come from.
struct SurfaceAlgebra {
    Algebra algebra;
    std::map<std::string, int> arrow_corner; // arrow name -> marked point label
};

// Q0 = edges; an arrow edge(i-1) -> edge(i) at every corner between two edge
// sides; consecutive such corners in one polygon compose to zero.
inline SurfaceAlgebra surface_algebra(const Dissection& D)
{
    std::vector<std::string> vs;
    for (auto& [e, _] : D.edges)
        vs.push_back(e);
    std::vector<ArrowSpec> as;
    std::vector<std::pair<std::string, std::string>> rs;
    SurfaceAlgebra out;
    for (int p = 0; p < static_cast<int>(D.polygons.size()); ++p) {
        const auto& P = D.polygons[p];
        int k = P.size();
        auto is_arrow = [&](int i) { return !P.side(i - 1).boundary && !P.side(i).boundary; };
        auto name = [&](int i) { return P.id + "_" + std::to_string(((i % k) + k) % k); };
        for (int i = 0; i < k; ++i)
            if (is_arrow(i)) {
                as.push_back({name(i), P.side(i - 1).name, P.side(i).name});
                out.arrow_corner[name(i)] = D.corner[p][i];
                if (is_arrow(i + 1))
                    rs.emplace_back(name(i), name(i + 1));
            }
    }
    out.algebra = Algebra::build(vs, as, rs);
    return out;
}

inline Algebra algebra_from_dissection(const Dissection& D) { return surface_algebra(D).algebra; }

struct DualVertex {
    std::string polygon;
    std::string boundary; // token of the boundary side carrying it, empty for a puncture
    bool puncture = false;
};

struct DualEdge {
    std::string name;  // l_<edge>
    std::string crosses;
    int from = 0, to = 0; // dual vertices: polygon of the + occurrence, of the - occurrence
};

struct DualGraph {
    std::vector<DualVertex> vertices;
    std::vector<DualEdge> edges;
    bool punctureless = true;
};

inline DualGraph dual_graph(const Dissection& D)
{
    DualGraph G;
    for (const auto& P : D.polygons) {
        int b = P.boundary_side();
        G.vertices.push_back({P.id, b < 0 ? "" : P.sides[b].name, b < 0});
        if (b < 0)
            G.punctureless = false;
    }
    for (auto& [e, ee] : D.edges)
        G.edges.push_back({"l_" + e, e, ee.plus_polygon, ee.minus_polygon});
    return G;
}

// The dual dissection L as a dissection in its own right: one polygon per
// marked point, made of the boundary piece through it and the dual edges
// met while turning around it. Only defined without punctures.
inline Dissection dual_dissection(const Dissection& D)
{
    if (!D.punctureless())
        throw DomainError("dual dissection needs a surface without punctures");
    std::vector<Polygon> out(D.marked_points);
    std::map<int, int> start_poly;
    for (int p = 0; p < static_cast<int>(D.polygons.size()); ++p)
        start_poly[D.corner[p][D.polygons[p].boundary_side()]] = p;
    for (int m = 1; m <= D.marked_points; ++m) {
        Polygon& L = out[m - 1];
        L.id = "L" + std::to_string(m);
        L.sides.push_back({true, "B" + std::to_string(m), true});
        int p = start_poly.at(m);
        int i = D.polygons[p].boundary_side();
        for (int guard = 0;; ++guard) {
            if (guard > 4 * D.num_edges() + 4)
                throw std::logic_error("dual walk does not terminate");
            const auto& P = D.polygons[p];
            int prev = ((i - 1) % P.size() + P.size()) % P.size();
            const Side& s = P.sides[prev];
            if (s.boundary)
                break;
            L.sides.push_back({false, "l_" + s.name, s.plus});
            const auto& ee = D.edges.at(s.name);
            p = s.plus ? ee.minus_polygon : ee.plus_polygon;
            i = s.plus ? ee.minus_side : ee.plus_side;
        }
    }
    return make_dissection(std::move(out));
}

namespace detail {

// Polygons as cyclic side sequences with boundary names dropped; rename maps edge names.
inline std::multiset<std::vector<std::string>> polygon_shapes(const Dissection& D,
                                                             const std::map<std::string, std::string>& rename,
                                                             bool flip)
{
    std::multiset<std::vector<std::string>> shapes;
    for (const auto& P : D.polygons) {
        std::vector<std::string> seq;
        for (const auto& s : P.sides) {
            if (s.boundary) {
                seq.push_back("B");
                continue;
            }
            auto it = rename.find(s.name);
            seq.push_back((it == rename.end() ? s.name : it->second) + ((s.plus != flip) ? "+" : "-"));
        }
        auto best = seq;
        for (std::size_t r = 1; r < seq.size(); ++r) {
            std::rotate(seq.begin(), seq.begin() + 1, seq.end());
            best = std::min(best, seq);
        }
        shapes.insert(best);
    }
    return shapes;
}

} // namespace detail

// Compares polygon incidence up to renaming of edges by `rename`, boundary
// token names, rotation of each polygon, and a global flip of edge orientations.
inline bool same_incidence(const Dissection& A, const Dissection& B, const std::map<std::string, std::string>& rename)
{
    auto a = detail::polygon_shapes(A, {}, false);
    return a == detail::polygon_shapes(B, rename, false) || a == detail::polygon_shapes(B, rename, true);
}

// The dissection of the disk with n+1 marked points whose algebra is KA_n/J^2.
inline Dissection disk_model(int n)
{
    if (n < 1)
        throw DomainError("disk model needs n >= 1");
    std::vector<Polygon> ps;
    for (int i = 1; i <= n; ++i)
        ps.push_back({"D" + std::to_string(i), {{true, "B" + std::to_string(i), true}, {false, std::to_string(i), false}}});
    Polygon C{"C", {}};
    for (int i = 1; i <= n; ++i)
        C.sides.push_back({false, std::to_string(i), true});
    C.sides.push_back({true, "B" + std::to_string(n + 1), true});
    ps.push_back(C);
    return make_dissection(std::move(ps));
}

// Random admissible dissection with at most max_polygons polygons. Gluings
// that leave an interior marked point are rejected and redrawn.
inline Dissection random_dissection(std::mt19937& rng, int max_polygons = 8, double puncture_rate = 0.1)
{
    std::uniform_int_distribution<int> npoly(1, max_polygons), nsides(1, 4);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        int np = npoly(rng);
        std::vector<Polygon> ps(np);
        std::vector<std::pair<int, int>> slots;
        int btok = 0;
        for (int p = 0; p < np; ++p) {
            ps[p].id = "P" + std::to_string(p + 1);
            bool punct = coin(rng) < puncture_rate;
            int g = nsides(rng);
            if (!punct)
                ps[p].sides.push_back({true, "B" + std::to_string(++btok), true});
            for (int i = 0; i < g; ++i) {
                slots.emplace_back(p, static_cast<int>(ps[p].sides.size()));
                ps[p].sides.push_back({false, "", true});
            }
            std::rotate(ps[p].sides.begin(), ps[p].sides.begin() + static_cast<long>(rng() % ps[p].sides.size()),
                        ps[p].sides.end());
        }
        if (slots.size() % 2 || btok == 0)
            continue;
        // side indices moved by the rotation; recompute slots
        slots.clear();
        for (int p = 0; p < np; ++p)
            for (int i = 0; i < ps[p].size(); ++i)
                if (!ps[p].sides[i].boundary)
                    slots.emplace_back(p, i);
        std::shuffle(slots.begin(), slots.end(), rng);
        for (std::size_t k = 0; k < slots.size(); k += 2) {
            std::string name = "e" + std::to_string(k / 2 + 1);
            auto& a = ps[slots[k].first].sides[slots[k].second];
            auto& b = ps[slots[k + 1].first].sides[slots[k + 1].second];
            a.name = b.name = name;
            a.plus = true;
            b.plus = false;
        }
        try {
            return make_dissection(std::move(ps));
        } catch (const DomainError&) {
        }
    }
    throw std::runtime_error("random_dissection: no admissible gluing found");
}

// Disk pictures are drawn as a circle with straight chords; other surfaces as
// their polygons side by side with labelled sides.
inline std::string render_tikz(const Dissection& D)
{
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(3);
    o << "\\begin{tikzpicture}[scale=2]\n";
    if (is_disk(D)) {
        int t = D.marked_points;
        auto pt = [&](double pos) {
            double a = 2 * M_PI * (pos - 1) / t + M_PI / 2;
            return std::make_pair(std::cos(a), std::sin(a));
        };
        o << "  \\draw (0,0) circle (1);\n";
        for (int m = 1; m <= t; ++m) {
            auto [x, y] = pt(m);
            o << "  \\filldraw (" << x << "," << y << ") circle (0.03) node[anchor=" << (y >= 0 ? "south" : "north")
              << "] {$m_{" << m << "}$};\n";
        }
        for (auto& [e, ee] : D.edges) {
            auto [a, b] = D.edge_endpoints(e);
            auto [x1, y1] = pt(a);
            auto [x2, y2] = pt(b);
            o << "  \\draw[thick] (" << x1 << "," << y1 << ") -- node[fill=white,inner sep=1pt] {$" << e << "$} (" << x2
              << "," << y2 << ");\n";
        }
        std::map<int, double> lpos;
        for (auto& s : D.segments)
            lpos[s.polygon] = s.from + 0.5;
        for (auto& [e, ee] : D.edges) {
            auto [x1, y1] = pt(lpos[ee.plus_polygon]);
            auto [x2, y2] = pt(lpos[ee.minus_polygon]);
            o << "  \\draw[red,dashed] (" << x1 << "," << y1 << ") -- (" << x2 << "," << y2 << ");\n";
        }
    } else {
        double x0 = 0;
        for (const auto& P : D.polygons) {
            int k = std::max(P.size(), 2);
            o << "  \\node at (" << x0 << ",-1.3) {" << P.id << (P.encloses_puncture() ? " (puncture)" : "") << "};\n";
            for (int i = 0; i < P.size(); ++i) {
                double a1 = 2 * M_PI * i / k - M_PI / 2 - M_PI / k, a2 = 2 * M_PI * (i + 1) / k - M_PI / 2 - M_PI / k;
                o << "  \\draw" << (P.sides[i].boundary ? "[very thick]" : "") << " (" << x0 + std::cos(a1) << ","
                  << std::sin(a1) << ") -- node[auto,swap] {$" << P.sides[i].token() << "$} (" << x0 + std::cos(a2)
                  << "," << std::sin(a2) << ");\n";
            }
            x0 += 2.8;
        }
    }
    o << "\\end{tikzpicture}\n";
    return o.str();
}

inline std::string render_svg(const Dissection& D)
{
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(2);
    if (is_disk(D)) {
        int t = D.marked_points;
        auto pt = [&](double pos) {
            double a = 2 * M_PI * (pos - 1) / t + M_PI / 2;
            return std::make_pair(150 + 100 * std::cos(a), 150 - 100 * std::sin(a));
        };
        o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"300\" height=\"300\">\n";
        o << "  <circle cx=\"150\" cy=\"150\" r=\"100\" fill=\"none\" stroke=\"black\"/>\n";
        for (auto& [e, ee] : D.edges) {
            auto [a, b] = D.edge_endpoints(e);
            auto [x1, y1] = pt(a);
            auto [x2, y2] = pt(b);
            o << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
              << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
            o << "  <text x=\"" << (x1 + x2) / 2 << "\" y=\"" << (y1 + y2) / 2 << "\" font-size=\"12\">" << e
              << "</text>\n";
        }
        std::map<int, double> lpos;
        for (auto& s : D.segments)
            lpos[s.polygon] = s.from + 0.5;
        for (auto& [e, ee] : D.edges) {
            auto [x1, y1] = pt(lpos[ee.plus_polygon]);
            auto [x2, y2] = pt(lpos[ee.minus_polygon]);
            o << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
              << "\" stroke=\"red\" stroke-dasharray=\"4 3\"/>\n";
        }
        for (int m = 1; m <= t; ++m) {
            auto [x, y] = pt(m);
            o << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\"/>\n";
            o << "  <text x=\"" << x + 5 << "\" y=\"" << y - 5 << "\" font-size=\"12\">m" << m << "</text>\n";
        }
    } else {
        int w = 240 * static_cast<int>(D.polygons.size());
        o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"260\">\n";
        double cx = 120;
        for (const auto& P : D.polygons) {
            int k = std::max(P.size(), 2);
            for (int i = 0; i < P.size(); ++i) {
                double a1 = 2 * M_PI * i / k - M_PI / 2 - M_PI / k, a2 = 2 * M_PI * (i + 1) / k - M_PI / 2 - M_PI / k;
                double x1 = cx + 80 * std::cos(a1), y1 = 130 - 80 * std::sin(a1);
                double x2 = cx + 80 * std::cos(a2), y2 = 130 - 80 * std::sin(a2);
                o << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
                  << "\" stroke=\"black\" stroke-width=\"" << (P.sides[i].boundary ? 4 : 1) << "\"/>\n";
                o << "  <text x=\"" << (x1 + x2) / 2 << "\" y=\"" << (y1 + y2) / 2 << "\" font-size=\"12\">"
                  << P.sides[i].token() << "</text>\n";
            }
            o << "  <text x=\"" << cx - 20 << "\" y=\"250\" font-size=\"14\">" << P.id << "</text>\n";
            cx += 240;
        }
    }
    o << "</svg>\n";
    return o.str();
}

} // namespace gentle
