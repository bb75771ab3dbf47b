#pragma once

#include "field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

// Orders "2" before "10" and "1a" before "1b".
inline bool natural_less(const std::string& a, const std::string& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie])))
                ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je])))
                ++je;
            std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
            na.erase(0, std::min(na.find_first_not_of('0'), na.size() - 1));
            nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size() - 1));
            if (na.size() != nb.size())
                return na.size() < nb.size();
            if (na != nb)
                return na < nb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j])
                return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j))
        return (a.size() - i) < (b.size() - j);
    return a < b;
}

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

struct ArrowSpec {
    std::string name, src, tgt;
};

// Quiver with quadratic monomial relations. Vertices and arrows are kept in
// natural order of their names, so indices are canonical.
class Algebra {
public:
    Algebra() = default;

    static Algebra build(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows,
                         std::vector<std::pair<std::string, std::string>> relations)
    {
        Algebra A;
        std::sort(vertices.begin(), vertices.end(), natural_less);
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
            if (vertices[i] == vertices[i + 1])
                throw ParseError(0, "duplicate vertex " + vertices[i]);
        A.vertices_ = vertices;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            A.vidx_[vertices[i]] = static_cast<int>(i);
        std::sort(arrows.begin(), arrows.end(),
                  [](const ArrowSpec& x, const ArrowSpec& y) { return natural_less(x.name, y.name); });
        for (const auto& a : arrows) {
            if (A.aidx_.count(a.name))
                throw ParseError(0, "duplicate arrow " + a.name);
            if (A.vidx_.count(a.name))
                throw ParseError(0, "arrow name " + a.name + " clashes with a vertex id");
            auto s = A.vidx_.find(a.src), t = A.vidx_.find(a.tgt);
            if (s == A.vidx_.end() || t == A.vidx_.end())
                throw ParseError(0, "arrow " + a.name + " has an undeclared endpoint");
            A.aidx_[a.name] = static_cast<int>(A.arrows_.size());
            A.arrows_.push_back({a.name, s->second, t->second});
        }
        std::size_t m = A.arrows_.size();
        A.rel_.assign(m * m, 0);
        for (const auto& [x, y] : relations) {
            auto ix = A.aidx_.find(x), iy = A.aidx_.find(y);
            if (ix == A.aidx_.end() || iy == A.aidx_.end())
                throw ParseError(0, "relation uses unknown arrow");
            if (A.arrows_[ix->second].tgt != A.arrows_[iy->second].src)
                throw ParseError(0, "relation " + x + " " + y + " is not a composable path");
            A.rel_[ix->second * m + iy->second] = 1;
        }
        A.in_.assign(vertices.size(), {});
        A.out_.assign(vertices.size(), {});
        for (std::size_t i = 0; i < m; ++i) {
            A.out_[A.arrows_[i].src].push_back(static_cast<int>(i));
            A.in_[A.arrows_[i].tgt].push_back(static_cast<int>(i));
        }
        return A;
    }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    const std::vector<int>& out(int v) const { return out_[v]; }

    int vertex(const std::string& id) const
    {
        auto it = vidx_.find(id);
        if (it == vidx_.end())
            throw DomainError("unknown vertex " + id);
        return it->second;
    }
    int arrow_index(const std::string& name) const
    {
        auto it = aidx_.find(name);
        if (it == aidx_.end())
            throw DomainError("unknown arrow " + name);
        return it->second;
    }
    bool has_arrow(const std::string& name) const { return aidx_.count(name) > 0; }

    bool composable(int a, int b) const { return arrows_[a].tgt == arrows_[b].src; }
    bool is_relation(int a, int b) const { return rel_[a * arrows_.size() + b] != 0; }

    std::vector<std::pair<int, int>> relations() const
    {
        std::vector<std::pair<int, int>> r;
        for (int a = 0; a < num_arrows(); ++a)
            for (int b = 0; b < num_arrows(); ++b)
                if (is_relation(a, b))
                    r.emplace_back(a, b);
        return r;
    }

    bool connected() const
    {
        if (vertices_.empty())
            return true;
        std::vector<char> seen(vertices_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& a : arrows_) {
                int w = -1;
                if (a.src == v)
                    w = a.tgt;
                else if (a.tgt == v)
                    w = a.src;
                if (w >= 0 && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
    }

    // No path of arrows avoiding relations can run forever.
    bool admissible() const
    {
        int m = num_arrows();
        std::vector<int> state(m, 0);
        bool ok = true;
        auto dfs = [&](auto&& self, int a) -> void {
            state[a] = 1;
            for (int b : out_[arrows_[a].tgt]) {
                if (is_relation(a, b))
                    continue;
                if (state[b] == 1)
                    ok = false;
                else if (state[b] == 0)
                    self(self, b);
                if (!ok)
                    return;
            }
            state[a] = 2;
        };
        for (int a = 0; a < m && ok; ++a)
            if (state[a] == 0)
                dfs(dfs, a);
        return ok;
    }

    bool operator==(const Algebra& o) const
    {
        if (vertices_ != o.vertices_ || arrows_.size() != o.arrows_.size() || rel_ != o.rel_)
            return false;
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].name != o.arrows_[i].name || arrows_[i].src != o.arrows_[i].src ||
                arrows_[i].tgt != o.arrows_[i].tgt)
                return false;
        return true;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> vidx_, aidx_;
    std::vector<char> rel_;
    std::vector<std::vector<int>> in_, out_;
};

inline Algebra parse_algebra(const std::string& text)
{
    std::vector<std::string> vertices;
    std::vector<ArrowSpec> arrows;
    std::vector<std::pair<std::string, std::string>> rels;
    std::set<std::string> vseen, aseen;
    std::map<std::string, std::pair<std::string, std::string>> ends;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        if (tok[0] == "vertex" && tok.size() == 2) {
            if (!vseen.insert(tok[1]).second)
                throw ParseError(ln, "duplicate vertex " + tok[1]);
            vertices.push_back(tok[1]);
        } else if (tok[0] == "arrow" && tok.size() == 4) {
            if (!aseen.insert(tok[1]).second)
                throw ParseError(ln, "duplicate arrow " + tok[1]);
            if (!vseen.count(tok[2]) || !vseen.count(tok[3]))
                throw ParseError(ln, "arrow " + tok[1] + " has an undeclared endpoint");
            arrows.push_back({tok[1], tok[2], tok[3]});
            ends[tok[1]] = {tok[2], tok[3]};
        } else if (tok[0] == "rel" && tok.size() == 3) {
            auto x = ends.find(tok[1]), y = ends.find(tok[2]);
            if (x == ends.end() || y == ends.end())
                throw ParseError(ln, "relation uses an undeclared arrow");
            if (x->second.second != y->second.first)
                throw ParseError(ln, "relation " + tok[1] + " " + tok[2] + " is not a composable path");
            rels.emplace_back(tok[1], tok[2]);
        } else {
            throw ParseError(ln, "cannot parse '" + line + "'");
        }
    }
    return Algebra::build(vertices, arrows, rels);
}

inline std::string serialize_algebra(const Algebra& A)
{
    std::ostringstream os;
    for (const auto& v : A.vertices())
        os << "vertex " << v << "\n";
    for (const auto& a : A.arrows())
        os << "arrow " << a.name << " " << A.vertex_name(a.src) << " " << A.vertex_name(a.tgt) << "\n";
    for (auto [a, b] : A.relations())
        os << "rel " << A.arrow(a).name << " " << A.arrow(b).name << "\n";
    return os.str();
}

struct GentleReport {
    bool gentle = true;
    int clause = 0;
    std::string detail;
};

// The degree bound (at most two arrows in and out per vertex) is reported under
// clause 2, where the standard reading of the definition places it.
inline GentleReport is_gentle(const Algebra& A)
{
    auto fail = [](int clause, std::string msg) { return GentleReport{false, clause, std::move(msg)}; };
    for (int v = 0; v < A.num_vertices(); ++v) {
        if (A.in(v).size() > 2)
            return fail(2, "vertex " + A.vertex_name(v) + " has more than two incoming arrows");
        if (A.out(v).size() > 2)
            return fail(2, "vertex " + A.vertex_name(v) + " has more than two outgoing arrows");
    }
    for (int a = 0; a < A.num_arrows(); ++a) {
        const auto& name = A.arrow(a).name;
        int next_free = 0, next_rel = 0, prev_free = 0, prev_rel = 0;
        std::vector<std::string> nf, pf, nr, pr;
        for (int b : A.out(A.arrow(a).tgt)) {
            if (A.is_relation(a, b)) {
                ++next_rel;
                nr.push_back(A.arrow(b).name);
            } else {
                ++next_free;
                nf.push_back(A.arrow(b).name);
            }
        }
        for (int c : A.in(A.arrow(a).src)) {
            if (A.is_relation(c, a)) {
                ++prev_rel;
                pr.push_back(A.arrow(c).name);
            } else {
                ++prev_free;
                pf.push_back(A.arrow(c).name);
            }
        }
        if (next_free > 1)
            return fail(2, name + " composes outside the ideal with both " + nf[0] + " and " + nf[1]);
        if (prev_free > 1)
            return fail(2, pf[0] + " and " + pf[1] + " both compose with " + name + " outside the ideal");
        if (next_rel > 1)
            return fail(3, name + " has two relations " + name + nr[0] + " and " + name + nr[1]);
        if (prev_rel > 1)
            return fail(3, name + " has two relations " + pr[0] + name + " and " + pr[1] + name);
    }
    if (!A.admissible())
        return fail(4, "ideal is not admissible: an oriented cycle avoids every relation");
    return {};
}

enum class ShapeKind { LinearNakayama, CyclicNakayama, Tree, Other };

struct Shape {
    ShapeKind kind = ShapeKind::Other;
    int n = 0;
    bool operator==(const Shape&) const = default;
};

inline std::string to_string(const Shape& s)
{
    switch (s.kind) {
    case ShapeKind::LinearNakayama:
        return "LinearNakayama(" + std::to_string(s.n) + ")";
    case ShapeKind::CyclicNakayama:
        return "CyclicNakayama(" + std::to_string(s.n) + ")";
    case ShapeKind::Tree:
        return "Tree";
    default:
        return "Other";
    }
}

// A cyclic shape with n+1 vertices is reported as CyclicNakayama(n).
inline Shape shape(const Algebra& A)
{
    int V = A.num_vertices(), E = A.num_arrows();
    if (V == 0 || !A.connected())
        return {ShapeKind::Other, 0};
    auto degrees_ok = [&](int max_in, int max_out) {
        for (int v = 0; v < V; ++v)
            if (static_cast<int>(A.in(v).size()) > max_in || static_cast<int>(A.out(v).size()) > max_out)
                return false;
        return true;
    };
    if (E == V - 1 && degrees_ok(1, 1))
        return {ShapeKind::LinearNakayama, V};
    if (E == V) {
        bool cyc = true;
        for (int v = 0; v < V; ++v)
            if (A.in(v).size() != 1 || A.out(v).size() != 1)
                cyc = false;
        if (cyc)
            return {ShapeKind::CyclicNakayama, V - 1};
    }
    if (E == V - 1)
        return {ShapeKind::Tree, 0};
    return {ShapeKind::Other, 0};
}

inline bool is_radical_square_zero(const Algebra& A)
{
    for (int a = 0; a < A.num_arrows(); ++a)
        for (int b : A.out(A.arrow(a).tgt))
            if (!A.is_relation(a, b))
                return false;
    return true;
}

inline bool is_rad2_nakayama(const Algebra& A)
{
    auto s = shape(A);
    return (s.kind == ShapeKind::LinearNakayama || s.kind == ShapeKind::CyclicNakayama) &&
           is_radical_square_zero(A);
}

// Vertices 1..n, arrows a1..a(n-1) with a_i : i -> i+1.
inline Algebra make_a_n_mod_j2(int n)
{
    if (n < 1)
        throw DomainError("n must be at least 1");
    std::vector<std::string> vs;
    std::vector<ArrowSpec> as;
    std::vector<std::pair<std::string, std::string>> rs;
    for (int i = 1; i <= n; ++i)
        vs.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i)
        as.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
    for (int i = 1; i + 1 < n; ++i)
        rs.emplace_back("a" + std::to_string(i), "a" + std::to_string(i + 1));
    return Algebra::build(vs, as, rs);
}

// Vertices 0..n on an oriented cycle, arrows a_i : i -> i+1 mod n+1.
inline Algebra make_tilde_a_n_mod_j2(int n)
{
    if (n < 1)
        throw DomainError("n must be at least 1");
    std::vector<std::string> vs;
    std::vector<ArrowSpec> as;
    std::vector<std::pair<std::string, std::string>> rs;
    for (int i = 0; i <= n; ++i) {
        vs.push_back(std::to_string(i));
        as.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string((i + 1) % (n + 1))});
        rs.emplace_back("a" + std::to_string(i), "a" + std::to_string((i + 1) % (n + 1)));
    }
    return Algebra::build(vs, as, rs);
}

// Path algebra of linear A_n without relations.
inline Algebra make_a_n(int n)
{
    if (n < 1)
        throw DomainError("n must be at least 1");
    std::vector<std::string> vs;
    std::vector<ArrowSpec> as;
    for (int i = 1; i <= n; ++i)
        vs.push_back(std::to_string(i));
    for (int i = 1; i < n; ++i)
        as.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
    return Algebra::build(vs, as, {});
}

// Same vertex ids, and a bijection of arrows matching endpoints and relations.
inline bool same_up_to_arrow_names(const Algebra& A, const Algebra& B)
{
    if (A.vertices() != B.vertices() || A.num_arrows() != B.num_arrows())
        return false;
    int m = A.num_arrows();
    std::vector<int> perm(m, -1);
    std::vector<char> used(m, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == m) {
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    if (A.is_relation(a, b) != B.is_relation(perm[a], perm[b]))
                        return false;
            return true;
        }
        for (int j = 0; j < m; ++j) {
            if (used[j] || A.arrow(i).src != B.arrow(j).src || A.arrow(i).tgt != B.arrow(j).tgt)
                continue;
            used[j] = 1;
            perm[i] = j;
            if (self(self, i + 1))
                return true;
            used[j] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace gentle
