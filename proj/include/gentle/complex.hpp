#pragma once

#include "representation.hpp"

#include <map>
#include <sstream>

namespace gentle {

struct PathTerm {
    std::uint32_t coeff = 1;
    Path path;
    bool operator==(const PathTerm&) const = default;
};

// A linear combination of nonzero paths. An entry of a map P_x -> P_y is a
// combination of paths y -> x, acting by left multiplication.
using PathCombo = std::vector<PathTerm>;
using PathMatrix = std::vector<std::vector<PathCombo>>; // rows: target summands

// Bounded complex of finitely generated projectives. terms[k] lists the
// vertices of the summands in degree k; diff[k] maps degree k to k+1.
struct ProjComplex {
    std::map<int, std::vector<int>> terms;
    std::map<int, PathMatrix> diff;

    bool empty() const
    {
        for (auto& [k, t] : terms)
            if (!t.empty())
                return false;
        return true;
    }
};

inline std::optional<Path> path_product(const Algebra& A, const Path& r, const Path& q)
{
    if (path_end(A, r) != q.start)
        throw std::logic_error("path product of non-composable paths");
    if (!r.arrows.empty() && !q.arrows.empty() && A.is_relation(r.arrows.back(), q.arrows.front()))
        return std::nullopt;
    Path p{r.start, r.arrows};
    p.arrows.insert(p.arrows.end(), q.arrows.begin(), q.arrows.end());
    return p;
}

inline PathCombo combo_product(const Algebra& A, const Field& F, const PathCombo& r, const PathCombo& q)
{
    std::map<Path, std::uint32_t> acc;
    for (const auto& a : r)
        for (const auto& b : q)
            if (auto p = path_product(A, a.path, b.path))
                acc[*p] = F.add(acc[*p], F.mul(a.coeff, b.coeff));
    PathCombo out;
    for (auto& [p, c] : acc)
        if (c)
            out.push_back({c, p});
    return out;
}

inline PathCombo combo_sum(const Field& F, const PathCombo& a, const PathCombo& b)
{
    std::map<Path, std::uint32_t> acc;
    for (const auto& t : a)
        acc[t.path] = F.add(acc[t.path], t.coeff);
    for (const auto& t : b)
        acc[t.path] = F.add(acc[t.path], t.coeff);
    PathCombo out;
    for (auto& [p, c] : acc)
        if (c)
            out.push_back({c, p});
    return out;
}

inline const std::vector<int>& term_at(const ProjComplex& X, int k)
{
    static const std::vector<int> none;
    auto it = X.terms.find(k);
    return it == X.terms.end() ? none : it->second;
}

inline PathCombo diff_entry(const ProjComplex& X, int k, std::size_t row, std::size_t col)
{
    auto it = X.diff.find(k);
    if (it == X.diff.end() || row >= it->second.size() || col >= it->second[row].size())
        return {};
    return it->second[row][col];
}

// Checks shapes, path endpoints, and that consecutive differentials compose to zero.
inline void validate_complex(const Algebra& A, const Field& F, const ProjComplex& X)
{
    for (const auto& [k, m] : X.diff) {
        const auto& src = term_at(X, k);
        const auto& tgt = term_at(X, k + 1);
        if (m.size() != tgt.size())
            throw DomainError("differential in degree " + std::to_string(k) + " has wrong row count");
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (m[r].size() != src.size())
                throw DomainError("differential in degree " + std::to_string(k) + " has wrong column count");
            for (std::size_t c = 0; c < src.size(); ++c)
                for (const auto& t : m[r][c])
                    if (t.path.start != tgt[r] || path_end(A, t.path) != src[c] || !path_nonzero(A, t.path))
                        throw DomainError("differential entry with wrong endpoints in degree " + std::to_string(k));
        }
    }
    for (const auto& [k, m] : X.diff) {
        const auto& src = term_at(X, k);
        const auto& tgt = term_at(X, k + 2);
        for (std::size_t r = 0; r < tgt.size(); ++r)
            for (std::size_t c = 0; c < src.size(); ++c) {
                PathCombo acc;
                for (std::size_t mid = 0; mid < term_at(X, k + 1).size(); ++mid)
                    acc = combo_sum(F, acc, combo_product(A, F, diff_entry(X, k + 1, r, mid), diff_entry(X, k, mid, c)));
                if (!acc.empty())
                    throw DomainError("differential squares to a nonzero map at degree " + std::to_string(k));
            }
    }
}

inline ProjComplex stalk(int vertex, int degree)
{
    ProjComplex X;
    X.terms[degree] = {vertex};
    return X;
}

// X[i]: degrees move down by i, differentials pick up the sign (-1)^i.
inline ProjComplex shift(const Field& F, const ProjComplex& X, int i)
{
    ProjComplex Y;
    for (const auto& [k, t] : X.terms)
        Y.terms[k - i] = t;
    for (const auto& [k, m] : X.diff) {
        PathMatrix mm = m;
        if (i % 2 != 0)
            for (auto& row : mm)
                for (auto& e : row)
                    for (auto& t : e)
                        t.coeff = F.neg(t.coeff);
        Y.diff[k - i] = mm;
    }
    return Y;
}

namespace detail {

struct HomCoord {
    int k;           // source degree
    std::size_t row; // summand of Y^{k+n}
    std::size_t col; // summand of X^k
    Path path;
    auto operator<=>(const HomCoord&) const = default;
};

struct PathTable {
    std::map<std::pair<int, int>, std::vector<Path>> by_ends;

    explicit PathTable(const Algebra& A)
    {
        for (auto& p : all_paths(A))
            by_ends[{p.start, path_end(A, p)}].push_back(p);
    }
    const std::vector<Path>& between(int from, int to) const
    {
        static const std::vector<Path> none;
        auto it = by_ends.find({from, to});
        return it == by_ends.end() ? none : it->second;
    }
};

inline std::vector<HomCoord> hom_coords(const PathTable& T, const ProjComplex& X, const ProjComplex& Y, int n)
{
    std::vector<HomCoord> out;
    for (const auto& [k, xs] : X.terms) {
        const auto& ys = term_at(Y, k + n);
        for (std::size_t r = 0; r < ys.size(); ++r)
            for (std::size_t c = 0; c < xs.size(); ++c)
                for (const auto& p : T.between(ys[r], xs[c]))
                    out.push_back({k, r, c, p});
    }
    return out;
}

// Matrix of f -> d_Y f - (-1)^n f d_X from Hom^n to Hom^{n+1}.
inline Matrix hom_differential(const Algebra& A, const Field& F, const PathTable& T, const ProjComplex& X,
                               const ProjComplex& Y, int n)
{
    auto src = hom_coords(T, X, Y, n);
    auto tgt = hom_coords(T, X, Y, n + 1);
    std::map<HomCoord, std::size_t> index;
    for (std::size_t i = 0; i < tgt.size(); ++i)
        index[tgt[i]] = i;
    Matrix D(tgt.size(), src.size());
    std::uint32_t sign = (n % 2 == 0) ? F.neg(1) : 1;
    for (std::size_t j = 0; j < src.size(); ++j) {
        const auto& f = src[j];
        // d_Y^{k+n} o f lands in component (k, r', col)
        auto yd = Y.diff.find(f.k + n);
        if (yd != Y.diff.end())
            for (std::size_t r2 = 0; r2 < yd->second.size(); ++r2)
                for (const auto& t : yd->second[r2][f.row])
                    if (auto p = path_product(A, t.path, f.path)) {
                        auto i = index.at({f.k, r2, f.col, *p});
                        D(i, j) = F.add(D(i, j), t.coeff);
                    }
        // f o d_X^{k-1} lands in component (k-1, row, c')
        auto xd = X.diff.find(f.k - 1);
        if (xd != X.diff.end())
            for (std::size_t c2 = 0; c2 < term_at(X, f.k - 1).size(); ++c2)
                for (const auto& t : xd->second[f.col][c2])
                    if (auto p = path_product(A, f.path, t.path)) {
                        auto i = index.at({f.k - 1, f.row, c2, *p});
                        D(i, j) = F.add(D(i, j), F.mul(sign, t.coeff));
                    }
    }
    return D;
}

} // namespace detail

// dim Hom(X, Y[i]) in the homotopy category: degree-i chain maps modulo
// null-homotopic ones.
inline int homotopy_hom_dim(const Algebra& A, const ProjComplex& X, const ProjComplex& Y, int i, Field F = {})
{
    validate_complex(A, F, X);
    validate_complex(A, F, Y);
    detail::PathTable T(A);
    int dim = static_cast<int>(detail::hom_coords(T, X, Y, i).size());
    int r_out = static_cast<int>(rank(F, detail::hom_differential(A, F, T, X, Y, i)));
    int r_in = static_cast<int>(rank(F, detail::hom_differential(A, F, T, X, Y, i - 1)));
    return dim - r_out - r_in;
}

// Minimal projective resolution of M as a complex in degrees <= 0.
inline ProjComplex projective_resolution(const Algebra& A, const Representation& M, int max_length)
{
    const Field& F = M.F;
    ProjComplex X;
    Representation cur = M;
    Morphism into_prev; // inclusion of cur into the previous projective
    ProjectiveCover prev;
    for (int step = 0; step <= max_length && !cur.is_zero(); ++step) {
        auto pc = projective_cover(A, cur);
        X.terms[-step] = pc.summands;
        if (step > 0) {
            PathMatrix m(prev.summands.size(), std::vector<PathCombo>(pc.summands.size()));
            for (std::size_t t = 0; t < pc.summands.size(); ++t) {
                int x = pc.summands[t];
                int gen = -1;
                for (auto& [p, idx] : pc.basis[t])
                    if (p.arrows.empty())
                        gen = idx;
                // image of the generator in prev.P at vertex x
                std::vector<std::uint32_t> v(prev.P.dim[x], 0);
                for (int i = 0; i < prev.P.dim[x]; ++i)
                    for (int j = 0; j < cur.dim[x]; ++j)
                        v[i] = F.add(v[i], F.mul(into_prev[x](i, j), pc.surjection[x](j, gen)));
                for (std::size_t s = 0; s < prev.summands.size(); ++s)
                    for (auto& [p, idx] : prev.basis[s])
                        if (path_end(A, p) == x && v[idx])
                            m[s][t].push_back({v[idx], p});
            }
            X.diff[-step] = m;
        }
        auto [K, incl] = kernel(A, pc.P, pc.surjection);
        prev = pc;
        into_prev = incl;
        cur = K;
        if (step == max_length && !cur.is_zero())
            throw GuardError("projective resolution longer than the requested bound");
    }
    return X;
}

inline std::string path_to_string(const Algebra& A, const Path& p)
{
    if (p.arrows.empty())
        return "e(" + A.vertex_name(p.start) + ")";
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i)
            s += '.';
        s += A.arrow(p.arrows[i]).name;
    }
    return s;
}

inline std::string combo_to_string(const Algebra& A, const PathCombo& c)
{
    if (c.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            s += " + ";
        if (c[i].coeff != 1)
            s += std::to_string(c[i].coeff) + "*";
        s += path_to_string(A, c[i].path);
    }
    return s;
}

inline std::string serialize_complex(const Algebra& A, const ProjComplex& X)
{
    std::ostringstream os;
    for (const auto& [k, t] : X.terms) {
        if (t.empty())
            continue;
        os << "deg " << k << ":";
        for (int v : t)
            os << " P_" << A.vertex_name(v);
        os << "\n";
    }
    for (const auto& [k, m] : X.diff) {
        os << "d " << k << ": [";
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r)
                os << " ; ";
            for (std::size_t c = 0; c < m[r].size(); ++c) {
                if (c)
                    os << " , ";
                os << combo_to_string(A, m[r][c]);
            }
        }
        os << "]\n";
    }
    return os.str();
}

namespace detail {

inline std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, const std::string& sep)
{
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        auto f = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, f == std::string::npos ? std::string::npos : f - pos)));
        if (f == std::string::npos)
            return out;
        pos = f + sep.size();
    }
}

} // namespace detail

inline ProjComplex parse_complex(const Algebra& A, const std::string& text, Field F = {})
{
    ProjComplex X;
    std::vector<std::pair<int, std::string>> diffs;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        if (auto h = line.find('#'); h != std::string::npos)
            line.erase(h);
        line = detail::trim(line);
        if (line.empty())
            continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(ln, "missing ':'");
        std::istringstream head(line.substr(0, colon));
        std::string kw;
        int k;
        if (!(head >> kw >> k) || (kw != "deg" && kw != "d"))
            throw ParseError(ln, "expected 'deg <k>:' or 'd <k>:'");
        std::string body = detail::trim(line.substr(colon + 1));
        if (kw == "deg") {
            std::istringstream bs(body);
            std::vector<int> t;
            for (std::string tok; bs >> tok;) {
                if (tok.rfind("P_", 0) != 0)
                    throw ParseError(ln, "expected P_<vertex>, got " + tok);
                try {
                    t.push_back(A.vertex(tok.substr(2)));
                } catch (const DomainError& e) {
                    throw ParseError(ln, e.what());
                }
            }
            if (X.terms.count(k))
                throw ParseError(ln, "degree " + std::to_string(k) + " listed twice");
            X.terms[k] = t;
        } else {
            diffs.emplace_back(ln, line);
        }
    }
    for (auto& [ln2, l] : diffs) {
        auto colon = l.find(':');
        int k = std::stoi(detail::trim(l.substr(1, colon - 1)));
        std::string body = detail::trim(l.substr(colon + 1));
        if (body.size() < 2 || body.front() != '[' || body.back() != ']')
            throw ParseError(ln2, "differential must be bracketed");
        body = body.substr(1, body.size() - 2);
        const auto& src = term_at(X, k);
        const auto& tgt = term_at(X, k + 1);
        PathMatrix m;
        for (auto& row : detail::split(body, ";")) {
            std::vector<PathCombo> r;
            for (auto& entry : detail::split(row, ",")) {
                PathCombo c;
                if (entry != "0")
                    for (auto& term : detail::split(entry, "+")) {
                        PathTerm t;
                        auto star = term.find('*');
                        if (star != std::string::npos) {
                            t.coeff = F.from_int(std::stoll(term.substr(0, star)));
                            term = detail::trim(term.substr(star + 1));
                        }
                        if (term.rfind("e(", 0) == 0 && term.back() == ')') {
                            t.path.start = A.vertex(term.substr(2, term.size() - 3));
                        } else {
                            for (auto& name : detail::split(term, ".")) {
                                if (!A.has_arrow(name))
                                    throw ParseError(ln2, "unknown arrow " + name);
                                t.path.arrows.push_back(A.arrow_index(name));
                            }
                            t.path.start = A.arrow(t.path.arrows.front()).src;
                        }
                        if (t.coeff)
                            c = combo_sum(F, c, PathCombo{t});
                    }
                r.push_back(c);
            }
            m.push_back(r);
        }
        if (m.size() == 1 && tgt.empty() && src.empty())
            m.clear();
        X.diff[k] = m;
        (void)src;
    }
    try {
        validate_complex(A, F, X);
    } catch (const DomainError& e) {
        throw ParseError(0, e.what());
    }
    return X;
}

} // namespace gentle
