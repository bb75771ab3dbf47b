#pragma once

#include "complex.hpp"
#include "parallel.hpp"
#include "render.hpp"
#include "surface.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gentle {

// A disk dissection as chords on a circle. Marked points are 1..t in
// counterclockwise order; the dual vertex on the boundary segment from m_k to
// m_{k+1} sits at position k + 1/2.
struct DiskGeometry {
    Dissection diss;
    SurfaceAlgebra sa;
    int t = 0; // marked points
    int n = 0; // dissection edges = Q-vertices
    std::vector<std::pair<int, int>> ends;   // Q-vertex -> its two marked points
    std::vector<std::pair<double, double>> dual_ends; // Q-vertex -> ends of its dual edge
    std::vector<std::vector<int>> around;    // marked point -> incident Q-vertices, sorted counterclockwise

    const Algebra& algebra() const { return sa.algebra; }
    // Counterclockwise distance from marked point a to b, in [0, t).
    int ccw(int a, int b) const { return ((b - a) % t + t) % t; }
    bool strictly_between(int m, int a, int b) const { return m != a && ccw(a, m) < ccw(a, b); }
    int other_end(int v, int m) const { return ends[v].first == m ? ends[v].second : ends[v].first; }
    // Side index of the dual edge of v in the dual polygon around m; side 0 is the boundary piece.
    int side_at(int m, int v) const
    {
        const auto& a = around[m];
        return 1 + static_cast<int>(std::find(a.begin(), a.end(), v) - a.begin());
    }
};

inline DiskGeometry disk_geometry(const Dissection& D)
{
    if (!is_disk(D))
        throw DomainError("derived computations need a disk without punctures");
    DiskGeometry G;
    G.diss = D;
    G.sa = surface_algebra(D);
    G.t = D.marked_points;
    G.n = D.num_edges();
    const Algebra& A = G.sa.algebra;
    std::map<int, double> dual_pos;
    for (const auto& s : D.segments)
        dual_pos[s.polygon] = s.from + 0.5;
    G.ends.resize(G.n);
    G.dual_ends.resize(G.n);
    G.around.assign(G.t + 1, {});
    for (auto& [e, ee] : D.edges) {
        int v = A.vertex(e);
        G.ends[v] = D.edge_endpoints(e);
        G.dual_ends[v] = {dual_pos.at(ee.plus_polygon), dual_pos.at(ee.minus_polygon)};
        G.around[G.ends[v].first].push_back(v);
        G.around[G.ends[v].second].push_back(v);
    }
    for (int m = 1; m <= G.t; ++m)
        std::sort(G.around[m].begin(), G.around[m].end(),
                  [&](int x, int y) { return G.ccw(m, G.other_end(x, m)) < G.ccw(m, G.other_end(y, m)); });
    return G;
}

struct GradedArc {
    int a = 0, b = 0;            // a < b
    int base = 0;                // grading at the crossing nearest a
    std::vector<int> crossings;  // Q-vertices whose dual edges are crossed, from a to b
    std::vector<int> grading;
    std::vector<int> turns;      // marked point of the dual polygon between consecutive crossings

    bool same_chord(const GradedArc& o) const { return a == o.a && b == o.b; }
    bool operator==(const GradedArc& o) const { return a == o.a && b == o.b && base == o.base; }
    auto key() const { return std::tuple(a, b, base); }
};

inline std::string to_string(const GradedArc& X)
{
    return "arc(" + std::to_string(X.a) + "," + std::to_string(X.b) + ")@" + std::to_string(X.base);
}

namespace detail {

// Path in the dissection tree from marked point a to b, as edges (Q-vertices) and inner points.
inline void tree_path(const DiskGeometry& G, int a, int b, std::vector<int>& edges, std::vector<int>& inner)
{
    std::vector<int> via(G.t + 1, -2);
    std::queue<int> q;
    q.push(a);
    via[a] = -1;
    while (!q.empty()) {
        int m = q.front();
        q.pop();
        for (int v : G.around[m]) {
            int w = G.other_end(v, m);
            if (via[w] == -2) {
                via[w] = v;
                q.push(w);
            }
        }
    }
    if (via[b] == -2)
        throw std::logic_error("dissection of a disk is not a tree");
    edges.clear();
    inner.clear();
    for (int m = b; m != a;) {
        int v = via[m];
        edges.push_back(v);
        m = G.other_end(v, m);
        if (m != a)
            inner.push_back(m);
    }
    std::reverse(edges.begin(), edges.end());
    std::reverse(inner.begin(), inner.end());
}

// Path of arrows around m from y to x, or nullopt.
inline std::optional<Path> path_around(const DiskGeometry& G, int m, int y, int x)
{
    const Algebra& A = G.algebra();
    Path p{y, {}};
    int at = y;
    for (int steps = 0; steps <= A.num_arrows(); ++steps) {
        if (at == x)
            return p;
        int next = -1;
        for (int a : A.out(at))
            if (G.sa.arrow_corner.at(A.arrow(a).name) == m)
                next = a;
        if (next < 0)
            return std::nullopt;
        p.arrows.push_back(next);
        at = A.arrow(next).tgt;
    }
    return std::nullopt;
}

} // namespace detail

// The graded arc between marked points a and b with value `base` at the
// crossing nearest a. The grading drops by one across a dual polygon whose
// boundary piece lies to the right of the arc and rises by one otherwise.
inline GradedArc arc(const DiskGeometry& G, int a, int b, int base)
{
    if (a < 1 || a > G.t || b < 1 || b > G.t)
        throw DomainError("marked point out of range 1.." + std::to_string(G.t));
    if (a == b)
        throw DomainError("arc endpoints must differ");
    GradedArc X;
    X.a = a;
    X.b = b;
    detail::tree_path(G, a, b, X.crossings, X.turns);
    X.grading.push_back(base);
    for (int m : X.turns)
        X.grading.push_back(X.grading.back() + (G.strictly_between(m, a, b) ? -1 : 1));
    if (a > b) {
        GradedArc R;
        R.a = b;
        R.b = a;
        R.crossings.assign(X.crossings.rbegin(), X.crossings.rend());
        R.turns.assign(X.turns.rbegin(), X.turns.rend());
        R.grading.assign(X.grading.rbegin(), X.grading.rend());
        X = std::move(R);
    }
    X.base = X.grading.front();
    return X;
}

inline GradedArc shifted(const DiskGeometry& G, const GradedArc& X, int i) { return arc(G, X.a, X.b, X.base - i); }

inline bool is_minimal(const DiskGeometry& G, const GradedArc& X)
{
    return G.ccw(X.a, X.b) == 1 || G.ccw(X.b, X.a) == 1;
}

inline std::vector<GradedArc> all_chords(const DiskGeometry& G, int base = 0)
{
    std::vector<GradedArc> out;
    for (int a = 1; a <= G.t; ++a)
        for (int b = a + 1; b <= G.t; ++b)
            out.push_back(arc(G, a, b, base));
    return out;
}

inline GradedArc parse_arc(const DiskGeometry& G, const std::string& text)
{
    int a = 0, b = 0, base = 0;
    char tail = 0;
    if (std::sscanf(text.c_str(), " arc(%d,%d)@%d %c", &a, &b, &base, &tail) != 3)
        throw ParseError(0, "arc literal must look like arc(a,b)@base, got '" + text + "'");
    return arc(G, a, b, base);
}

// One projective per crossing, in degree equal to the grading there; maps
// between neighbours are the arrow paths around the shared marked point.
inline ProjComplex arc_to_complex(const DiskGeometry& G, const GradedArc& X)
{
    ProjComplex C;
    std::vector<std::pair<int, std::size_t>> slot;
    for (std::size_t k = 0; k < X.crossings.size(); ++k) {
        auto& t = C.terms[X.grading[k]];
        slot.emplace_back(X.grading[k], t.size());
        t.push_back(X.crossings[k]);
    }
    for (auto& [deg, t] : C.terms)
        if (C.terms.count(deg + 1))
            C.diff[deg] = PathMatrix(C.terms[deg + 1].size(), std::vector<PathCombo>(t.size()));
    for (std::size_t k = 0; k + 1 < X.crossings.size(); ++k) {
        int m = X.turns[k];
        std::size_t lo = k, hi = k + 1;
        if (X.grading[k + 1] == X.grading[k] - 1)
            std::swap(lo, hi);
        else if (X.grading[k + 1] != X.grading[k] + 1)
            throw std::logic_error("grading jump other than one");
        auto p = detail::path_around(G, m, X.crossings[hi], X.crossings[lo]);
        if (!p)
            throw std::logic_error("no arrow path from the higher to the lower crossing around m" + std::to_string(m));
        C.diff.at(slot[lo].first)[slot[hi].second][slot[lo].second] = {{1, *p}};
    }
    return C;
}

namespace detail {

struct Ray {
    bool of_x;
    int side;
    double pos;
    int f;
};

// Shift i of the morphism X -> Y[i] carried by an interior crossing, read off
// in the dual polygon around m. nullopt when both arcs run parallel there.
inline std::optional<std::pair<int, int>> crossing_shifts_at(const DiskGeometry& G, const GradedArc& X,
                                                              const GradedArc& Y, int m)
{
    auto rays_of = [&](const GradedArc& Z, bool of_x) {
        std::vector<Ray> r;
        std::vector<int> pts{Z.a};
        pts.insert(pts.end(), Z.turns.begin(), Z.turns.end());
        pts.push_back(Z.b);
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (pts[k] != m)
                continue;
            // towards a: crossing k-1; towards b: crossing k
            if (k == 0)
                r.push_back({of_x, 0, 0.5, 0});
            else
                r.push_back({of_x, G.side_at(m, Z.crossings[k - 1]), 0, Z.grading[k - 1]});
            if (k + 1 == pts.size())
                r.push_back({of_x, 0, 0.5, 0});
            else
                r.push_back({of_x, G.side_at(m, Z.crossings[k]), 0, Z.grading[k]});
        }
        return r;
    };
    auto rays = rays_of(X, true);
    auto ry = rays_of(Y, false);
    if (rays.size() != 2 || ry.size() != 2)
        return std::nullopt;
    rays.insert(rays.end(), ry.begin(), ry.end());
    std::map<int, int> count;
    for (auto& r : rays)
        count[r.side]++;
    std::vector<int> shared;
    for (auto& [s, c] : count)
        if (c > 1)
            shared.push_back(s);
    if (shared.size() > 1)
        return std::nullopt;
    auto alternates = [](std::vector<Ray> r) {
        std::sort(r.begin(), r.end(), [](auto& u, auto& v) { return u.pos < v.pos; });
        for (int j = 0; j < 4; ++j)
            if (r[j].of_x == r[(j + 1) % 4].of_x)
                return std::optional<std::vector<Ray>>{};
        return std::optional<std::vector<Ray>>{r};
    };
    std::optional<std::vector<Ray>> sorted;
    for (int order = 0; order < 2 && !sorted; ++order) {
        auto r = rays;
        int seen = 0;
        for (auto& x : r) {
            x.pos = x.side + 0.5;
            if (!shared.empty() && x.side == shared[0])
                x.pos = x.side + ((seen++ == order) ? 0.33 : 0.66);
        }
        sorted = alternates(r);
    }
    if (!sorted)
        return std::nullopt;
    const auto& r = *sorted;
    std::optional<int> x_to_y, y_to_x;
    for (int j = 0; j < 4; ++j) {
        const Ray& u = r[j];
        const Ray& v = r[(j + 1) % 4];
        if (j == 3 || u.side == 0 || v.side == 0)
            continue;
        int s = v.f - u.f;
        auto& slot = u.of_x ? x_to_y : y_to_x;
        if (slot && *slot != s)
            throw std::logic_error("inconsistent sector shifts at an interior crossing");
        slot = s;
    }
    if (!x_to_y || !y_to_x || *x_to_y + *y_to_x != 1)
        throw std::logic_error("interior crossing without a dual pair of morphisms");
    return std::pair{*x_to_y, *y_to_x};
}

inline bool interleave(const DiskGeometry& G, int a, int b, int c, int d)
{
    if (a == c || a == d || b == c || b == d)
        return false;
    return G.strictly_between(c, a, b) != G.strictly_between(d, a, b);
}

inline int grading_near(const GradedArc& X, int m) { return m == X.a ? X.grading.front() : X.grading.back(); }

} // namespace detail

// Shifts i, with multiplicity, for which an intersection of the arcs gives a
// basis morphism X -> Y[i].
inline std::vector<int> intersection_shifts(const DiskGeometry& G, const GradedArc& X, const GradedArc& Y)
{
    if (X.same_chord(Y))
        return {Y.base - X.base};
    auto shared = [&]() -> int {
        for (int m : {X.a, X.b})
            if (m == Y.a || m == Y.b)
                return m;
        return 0;
    }();
    if (shared) {
        // Boundary rule: the arc whose far end comes first counterclockwise from m maps to the other.
        int x = X.a == shared ? X.b : X.a, y = Y.a == shared ? Y.b : Y.a;
        if (G.ccw(shared, x) < G.ccw(shared, y))
            return {detail::grading_near(Y, shared) - detail::grading_near(X, shared)};
        return {};
    }
    if (!detail::interleave(G, X.a, X.b, Y.a, Y.b))
        return {};
    std::set<int> on_y{Y.a, Y.b};
    on_y.insert(Y.turns.begin(), Y.turns.end());
    std::vector<int> on_x{X.a};
    on_x.insert(on_x.end(), X.turns.begin(), X.turns.end());
    on_x.push_back(X.b);
    std::optional<int> found;
    for (int m : on_x) {
        if (!on_y.count(m))
            continue;
        auto s = detail::crossing_shifts_at(G, X, Y, m);
        if (!s)
            continue;
        if (found && *found != s->first)
            throw std::logic_error("interior crossing read differently in two dual polygons");
        found = s->first;
    }
    if (!found)
        throw std::logic_error("interleaving arcs with no common dual polygon");
    return {*found};
}

inline int hom_dim_geometric(const DiskGeometry& G, const GradedArc& X, const GradedArc& Y, int i)
{
    auto s = intersection_shifts(G, X, Y);
    return static_cast<int>(std::count(s.begin(), s.end(), i));
}

inline int hom_dim_oracle(const DiskGeometry& G, const GradedArc& X, const GradedArc& Y, int i, Field F = {})
{
    return homotopy_hom_dim(G.algebra(), arc_to_complex(G, X), arc_to_complex(G, Y), i, F);
}

namespace detail {

inline int rotate_cw(const DiskGeometry& G, int m) { return m == 1 ? G.t : m - 1; }

// Grading of the arc (a,b) whose unique intersection with `other` is a
// morphism other -> arc[shift] (arc_is_target) or arc -> other[shift].
inline GradedArc graded_against(const DiskGeometry& G, int a, int b, const GradedArc& other, bool arc_is_target,
                                int shift)
{
    GradedArc Z = arc(G, a, b, 0);
    auto s = arc_is_target ? intersection_shifts(G, other, Z) : intersection_shifts(G, Z, other);
    if (s.size() != 1)
        throw std::logic_error("expected exactly one intersection with " + to_string(other));
    // other -> Z0[s] ; want other -> Z[shift], Z = Z0[s - shift]
    // Z -> other[s]  ; want Z -> other[shift], Z = Z0[shift - s]
    int j = arc_is_target ? s[0] - shift : shift - s[0];
    return shifted(G, Z, j);
}

} // namespace detail

// AR translate: both endpoints move one step clockwise, graded so that the
// connecting morphism X -> tauX[1] exists.
inline GradedArc tau_geometric(const DiskGeometry& G, const GradedArc& X)
{
    if (G.t == 2)
        return shifted(G, X, -1);
    int a = detail::rotate_cw(G, X.a), b = detail::rotate_cw(G, X.b);
    return detail::graded_against(G, a, b, X, true, 1);
}

struct ARTriangle {
    GradedArc tau;
    std::vector<GradedArc> middle;
};

// Middle terms rotate exactly one endpoint clockwise, graded to map onto X.
inline ARTriangle ar_triangle(const DiskGeometry& G, const GradedArc& X)
{
    ARTriangle T;
    T.tau = tau_geometric(G, X);
    int ra = detail::rotate_cw(G, X.a), rb = detail::rotate_cw(G, X.b);
    if (ra != X.b)
        T.middle.push_back(detail::graded_against(G, ra, X.b, X, false, 0));
    if (rb != X.a)
        T.middle.push_back(detail::graded_against(G, X.a, rb, X, false, 0));
    std::sort(T.middle.begin(), T.middle.end(), [](auto& u, auto& v) { return u.key() < v.key(); });
    return T;
}

inline int hom_tau_self(const DiskGeometry& G, const GradedArc& X)
{
    return hom_dim_geometric(G, tau_geometric(G, X), X, 0);
}

inline bool d_compatible(const DiskGeometry& G, const GradedArc& X, const GradedArc& Y, int m, int d)
{
    if ((m != X.a && m != X.b) || (m != Y.a && m != Y.b))
        throw DomainError("arcs do not share the marked point m" + std::to_string(m));
    int diff = detail::grading_near(X, m) - detail::grading_near(Y, m);
    return ((diff % d) + d) % d == 0;
}

// A chord with a residue class of gradings: the orbit of an arc under [d].
struct ShiftClass {
    int a = 0, b = 0, residue = 0;
    auto operator<=>(const ShiftClass&) const = default;
};

struct DerivedSubcat {
    int d = 0;
    std::vector<ShiftClass> classes; // sorted, unique

    bool contains(const GradedArc& X) const
    {
        ShiftClass c{X.a, X.b, ((X.base % d) + d) % d};
        return std::binary_search(classes.begin(), classes.end(), c);
    }
    bool operator==(const DerivedSubcat&) const = default;
    auto operator<=>(const DerivedSubcat&) const = default;
};

inline DerivedSubcat make_subcat(int d, std::vector<GradedArc> arcs)
{
    DerivedSubcat U;
    U.d = d;
    for (auto& X : arcs)
        U.classes.push_back({X.a, X.b, ((X.base % d) + d) % d});
    std::sort(U.classes.begin(), U.classes.end());
    U.classes.erase(std::unique(U.classes.begin(), U.classes.end()), U.classes.end());
    return U;
}

inline std::vector<GradedArc> representatives(const DiskGeometry& G, const DerivedSubcat& U)
{
    std::vector<GradedArc> out;
    for (auto& c : U.classes)
        out.push_back(arc(G, c.a, c.b, c.residue));
    return out;
}

inline std::string to_string(const DerivedSubcat& U)
{
    std::string s = "{";
    for (std::size_t i = 0; i < U.classes.size(); ++i) {
        if (i)
            s += ", ";
        s += "arc(" + std::to_string(U.classes[i].a) + "," + std::to_string(U.classes[i].b) + ")@" +
             std::to_string(U.classes[i].residue);
    }
    return s + "} mod " + std::to_string(U.d);
}

// Walks the minimal arcs counterclockwise from X, each graded compatibly with
// the previous one at their shared marked point.
inline DerivedSubcat v_x_d(const DiskGeometry& G, const GradedArc& X, int d)
{
    if (d < 2)
        throw DomainError("d must be at least 2");
    if (!is_minimal(G, X))
        throw DomainError(to_string(X) + " is not minimal");
    std::vector<GradedArc> walk{X};
    int m = G.ccw(X.a, X.b) == 1 ? X.b : X.a; // the counterclockwise end
    for (int j = 1; j < G.t; ++j) {
        const GradedArc& prev = walk.back();
        int next = m % G.t + 1;
        GradedArc Z = arc(G, m, next, 0);
        Z = shifted(G, Z, detail::grading_near(Z, m) - detail::grading_near(prev, m));
        walk.push_back(Z);
        m = next;
    }
    return make_subcat(d, walk);
}

struct DerivedVerdict {
    bool ok = false;
    std::string witness;
};

inline int minimum_window(const DiskGeometry& G, int d) { return G.n + d; }
inline int default_window(const DiskGeometry& G, int d) { return std::max(2 * G.n, minimum_window(G, d)); }

// d-cluster tilting test for a subcategory closed under [d]. Perpendicularity
// over whole [d]-orbits reduces to the residues of intersection shifts, so the
// window only bounds the arcs enumerated as candidates.
inline DerivedVerdict is_dct_derived(const DiskGeometry& G, const DerivedSubcat& U, int d, int window)
{
    if (d < 2)
        throw DomainError("d must be at least 2");
    if (U.d != d)
        throw DomainError("subcategory is closed under [" + std::to_string(U.d) + "], not [" + std::to_string(d) + "]");
    if (window < minimum_window(G, d))
        throw GuardError("window " + std::to_string(window) + " is too small; need at least " +
                         std::to_string(minimum_window(G, d)));
    auto members = representatives(G, U);
    auto off_residue = [&](const std::vector<int>& shifts) {
        return std::any_of(shifts.begin(), shifts.end(), [&](int s) { return ((s % d) + d) % d != 0; });
    };
    // Witness preference: an object orthogonal on both sides but missing, then
    // one orthogonal on one side, then a member that is not rigid against U.
    std::optional<std::string> both, one, clash;
    for (auto& C : all_chords(G))
        for (int base = -window; base <= window && !both; ++base) {
            GradedArc Y = arc(G, C.a, C.b, base);
            bool in = U.contains(Y);
            bool right = true, left = true;
            for (const auto& X : members) {
                if (off_residue(intersection_shifts(G, X, Y)))
                    right = false;
                if (off_residue(intersection_shifts(G, Y, X)))
                    left = false;
            }
            if (in && !(right && left) && !clash)
                clash = to_string(Y) + " is in the subcategory but not Ext-orthogonal to it";
            if (!in && right && left)
                both = to_string(Y) + " is Ext-orthogonal to the subcategory on both sides but not in it";
            else if (!in && (right || left) && !one)
                one = to_string(Y) + " is in the " + (right ? "right" : "left") +
                      " perpendicular category but not in the subcategory";
        }
    for (auto* w : {&both, &one, &clash})
        if (*w)
            return {false, **w};
    return {true, ""};
}

inline bool no_interior_crossing_check(const DiskGeometry& G, const DerivedSubcat& U)
{
    for (std::size_t i = 0; i < U.classes.size(); ++i)
        for (std::size_t j = i + 1; j < U.classes.size(); ++j)
            if (detail::interleave(G, U.classes[i].a, U.classes[i].b, U.classes[j].a, U.classes[j].b))
                return false;
    return true;
}

// All d-cluster tilting subcategories closed under [d]: members are minimal
// arcs (the ones with Hom(tauX, X) = 0), and one seed with a residue fixes the
// rest by compatibility along the boundary.
inline std::vector<DerivedSubcat> search_dct_derived(const DiskGeometry& G, int d, int window, int jobs = 1)
{
    if (d < 2)
        throw DomainError("d must be at least 2");
    if (window < minimum_window(G, d))
        throw GuardError("window " + std::to_string(window) + " is too small; need at least " +
                         std::to_string(minimum_window(G, d)));
    std::vector<GradedArc> seeds;
    for (auto& X : all_chords(G))
        if (hom_tau_self(G, X) == 0)
            for (int r = 0; r < d; ++r)
                seeds.push_back(arc(G, X.a, X.b, r));
    std::set<DerivedSubcat> candidates;
    for (auto& S : seeds)
        candidates.insert(v_x_d(G, S, d));
    std::vector<DerivedSubcat> list(candidates.begin(), candidates.end());
    std::vector<char> ok(list.size(), 0);
    parallel_for(list.size(), jobs, [&](std::size_t i) { ok[i] = is_dct_derived(G, list[i], d, window).ok; });
    std::vector<DerivedSubcat> out;
    for (std::size_t i = 0; i < list.size(); ++i)
        if (ok[i])
            out.push_back(list[i]);
    return out;
}

struct ARQuiverDerived {
    std::vector<GradedArc> nodes;
    std::vector<std::pair<int, int>> arrows; // irreducible maps, node indices
    std::vector<std::pair<int, int>> tau;    // X -> tau X
};

// Graded arcs whose gradings all lie in [-window, window].
inline ARQuiverDerived ar_quiver_derived(const DiskGeometry& G, int window)
{
    ARQuiverDerived Q;
    std::map<std::tuple<int, int, int>, int> index;
    for (auto& C : all_chords(G))
        for (int base = -window - G.n; base <= window + G.n; ++base) {
            GradedArc X = arc(G, C.a, C.b, base);
            if (std::all_of(X.grading.begin(), X.grading.end(), [&](int f) { return f >= -window && f <= window; })) {
                index[X.key()] = static_cast<int>(Q.nodes.size());
                Q.nodes.push_back(X);
            }
        }
    for (std::size_t i = 0; i < Q.nodes.size(); ++i) {
        auto T = ar_triangle(G, Q.nodes[i]);
        if (auto it = index.find(T.tau.key()); it != index.end())
            Q.tau.emplace_back(static_cast<int>(i), it->second);
        for (auto& Y : T.middle)
            if (auto it = index.find(Y.key()); it != index.end())
                Q.arrows.emplace_back(it->second, static_cast<int>(i));
    }
    std::sort(Q.arrows.begin(), Q.arrows.end());
    std::sort(Q.tau.begin(), Q.tau.end());
    return Q;
}

// Translates point from X to tau X; subcategory members are boxed.
inline GraphPicture picture(const ARQuiverDerived& Q, const DerivedSubcat* U = nullptr)
{
    GraphPicture g;
    for (const auto& X : Q.nodes) {
        g.labels.push_back(to_string(X));
        g.boxed.push_back(U && U->contains(X));
    }
    for (auto [u, v] : Q.arrows)
        g.arrows.emplace_back(u, v, 1);
    g.dashed = Q.tau;
    return g;
}

} // namespace gentle
