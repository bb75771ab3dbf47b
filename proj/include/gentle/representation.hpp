#pragma once

#include "strings.hpp"

#include <map>
#include <random>

namespace gentle {

struct Representation {
    Field F;
    std::vector<int> dim;
    std::vector<Matrix> map; // per arrow, dim[tgt] x dim[src]

    int total_dim() const
    {
        int s = 0;
        for (int d : dim)
            s += d;
        return s;
    }
    bool is_zero() const { return total_dim() == 0; }
};

inline Representation zero_rep(const Algebra& A, Field F)
{
    Representation R{F, std::vector<int>(A.num_vertices(), 0), {}};
    for (int a = 0; a < A.num_arrows(); ++a)
        R.map.emplace_back(0, 0);
    return R;
}

inline bool satisfies_relations(const Algebra& A, const Representation& R)
{
    for (auto [a, b] : A.relations())
        if (!multiply(R.F, R.map[b], R.map[a]).is_zero())
            return false;
    return true;
}

inline Representation string_module(const Algebra& A, const StringWord& w, Field F = {})
{
    if (!is_string(A, w))
        throw DomainError("not a string: " + to_string(A, w));
    std::vector<int> at; // vertex of each position
    at.push_back(w.start(A));
    for (const auto& l : w.letters)
        at.push_back(l.target(A));
    Representation R = zero_rep(A, F);
    std::vector<int> local(at.size());
    for (std::size_t i = 0; i < at.size(); ++i)
        local[i] = R.dim[at[i]]++;
    for (int a = 0; a < A.num_arrows(); ++a)
        R.map[a] = Matrix(R.dim[A.arrow(a).tgt], R.dim[A.arrow(a).src]);
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        const auto& l = w.letters[i];
        if (l.inverse)
            R.map[l.arrow](local[i], local[i + 1]) = 1;
        else
            R.map[l.arrow](local[i + 1], local[i]) = 1;
    }
    return R;
}

inline Representation simple_rep(const Algebra& A, int x, Field F = {})
{
    return string_module(A, trivial_string(x), F);
}

// Nonzero paths of the bound quiver algebra: start vertex plus arrow list.
struct Path {
    int start = 0;
    std::vector<int> arrows;

    auto operator<=>(const Path&) const = default;
};

inline int path_end(const Algebra& A, const Path& p) { return p.arrows.empty() ? p.start : A.arrow(p.arrows.back()).tgt; }

inline bool path_nonzero(const Algebra& A, const Path& p)
{
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (!A.composable(p.arrows[i], p.arrows[i + 1]) || A.is_relation(p.arrows[i], p.arrows[i + 1]))
            return false;
    return true;
}

inline std::vector<Path> paths_from(const Algebra& A, int x)
{
    if (!A.admissible())
        throw DomainError("algebra is infinite dimensional: an oriented cycle avoids every relation");
    std::vector<Path> out;
    std::vector<Path> frontier{{x, {}}};
    while (!frontier.empty()) {
        std::vector<Path> next;
        for (auto& p : frontier) {
            out.push_back(p);
            for (int b : A.out(path_end(A, p))) {
                if (!p.arrows.empty() && A.is_relation(p.arrows.back(), b))
                    continue;
                Path q = p;
                q.arrows.push_back(b);
                next.push_back(q);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

inline std::vector<Path> all_paths(const Algebra& A)
{
    std::vector<Path> out;
    for (int x = 0; x < A.num_vertices(); ++x)
        for (auto& p : paths_from(A, x))
            out.push_back(p);
    return out;
}

// P_x: at vertex y the paths x -> y; an arrow appends itself.
inline Representation projective_rep(const Algebra& A, int x, Field F = {})
{
    auto paths = paths_from(A, x);
    Representation R = zero_rep(A, F);
    std::map<Path, int> local;
    for (auto& p : paths)
        local[p] = R.dim[path_end(A, p)]++;
    for (int a = 0; a < A.num_arrows(); ++a)
        R.map[a] = Matrix(R.dim[A.arrow(a).tgt], R.dim[A.arrow(a).src]);
    for (auto& p : paths) {
        int y = path_end(A, p);
        for (int a : A.out(y)) {
            if (!p.arrows.empty() && A.is_relation(p.arrows.back(), a))
                continue;
            Path q = p;
            q.arrows.push_back(a);
            R.map[a](local[q], local[p]) = 1;
        }
    }
    return R;
}

// I_x: at vertex y the duals of paths y -> x; an arrow strips its first letter.
inline Representation injective_rep(const Algebra& A, int x, Field F = {})
{
    std::vector<Path> paths;
    for (int y = 0; y < A.num_vertices(); ++y)
        for (auto& p : paths_from(A, y))
            if (path_end(A, p) == x)
                paths.push_back(p);
    Representation R = zero_rep(A, F);
    std::map<Path, int> local;
    for (auto& p : paths)
        local[p] = R.dim[p.start]++;
    for (int a = 0; a < A.num_arrows(); ++a)
        R.map[a] = Matrix(R.dim[A.arrow(a).tgt], R.dim[A.arrow(a).src]);
    for (auto& p : paths) {
        if (p.arrows.empty())
            continue;
        int a = p.arrows.front();
        Path q{A.arrow(a).tgt, std::vector<int>(p.arrows.begin() + 1, p.arrows.end())};
        R.map[a](local[q], local[p]) = 1;
    }
    return R;
}

// Homomorphisms as per-vertex matrices dim N_v x dim M_v.
using Morphism = std::vector<Matrix>;

inline std::vector<Morphism> hom_basis(const Algebra& A, const Representation& M, const Representation& N)
{
    if (!(M.F == N.F))
        throw DomainError("representations over different fields");
    const Field& F = M.F;
    int V = A.num_vertices();
    std::vector<int> offset(V + 1, 0);
    for (int v = 0; v < V; ++v)
        offset[v + 1] = offset[v] + N.dim[v] * M.dim[v];
    int unknowns = offset[V];
    int eqs = 0;
    for (const auto& a : A.arrows())
        eqs += N.dim[a.tgt] * M.dim[a.src];
    Matrix S(eqs, unknowns);
    int row = 0;
    for (int ai = 0; ai < A.num_arrows(); ++ai) {
        const auto& a = A.arrow(ai);
        int s = a.src, t = a.tgt;
        // N_a f_s - f_t M_a = 0, entry (i, j) with i < dimN_t, j < dimM_s
        for (int i = 0; i < N.dim[t]; ++i)
            for (int j = 0; j < M.dim[s]; ++j, ++row) {
                for (int k = 0; k < N.dim[s]; ++k)
                    if (auto c = N.map[ai](i, k))
                        S(row, offset[s] + k * M.dim[s] + j) = F.add(S(row, offset[s] + k * M.dim[s] + j), c);
                for (int k = 0; k < M.dim[t]; ++k)
                    if (auto c = M.map[ai](k, j))
                        S(row, offset[t] + i * M.dim[t] + k) = F.sub(S(row, offset[t] + i * M.dim[t] + k), c);
            }
    }
    Matrix K = nullspace(F, S);
    std::vector<Morphism> out;
    for (std::size_t c = 0; c < K.cols(); ++c) {
        Morphism f;
        for (int v = 0; v < V; ++v) {
            Matrix fv(N.dim[v], M.dim[v]);
            for (int i = 0; i < N.dim[v]; ++i)
                for (int j = 0; j < M.dim[v]; ++j)
                    fv(i, j) = K(offset[v] + i * M.dim[v] + j, c);
            f.push_back(fv);
        }
        out.push_back(std::move(f));
    }
    return out;
}

inline int hom_dim(const Algebra& A, const Representation& M, const Representation& N)
{
    return static_cast<int>(hom_basis(A, M, N).size());
}

struct ProjectiveCover {
    std::vector<int> summands; // vertex of each indecomposable projective summand
    Representation P;
    Morphism surjection;
    std::vector<std::vector<std::pair<Path, int>>> basis; // per summand: path and its index in P at the path's end
};

inline ProjectiveCover projective_cover(const Algebra& A, const Representation& M)
{
    const Field& F = M.F;
    int V = A.num_vertices();
    ProjectiveCover pc;
    pc.P = zero_rep(A, F);
    std::vector<std::vector<std::uint32_t>> top_vectors; // in M_v
    std::vector<int> top_vertex;
    for (int v = 0; v < V; ++v) {
        if (M.dim[v] == 0)
            continue;
        Matrix rad(M.dim[v], 0);
        for (int a : A.in(v))
            rad = hstack(rad, M.map[a]);
        Matrix basis = column_basis(F, rad);
        for (int e = 0; e < M.dim[v]; ++e) {
            Matrix unit(M.dim[v], 1);
            unit(e, 0) = 1;
            Matrix trial = hstack(basis, unit);
            if (rank(F, trial) > basis.cols()) {
                basis = trial;
                std::vector<std::uint32_t> vec(M.dim[v], 0);
                vec[e] = 1;
                top_vectors.push_back(vec);
                top_vertex.push_back(v);
            }
        }
    }
    pc.summands = top_vertex;
    // Assemble P as a direct sum and the map path p -> m . p.
    std::vector<std::vector<Path>> paths;
    for (int x : top_vertex)
        paths.push_back(paths_from(A, x));
    std::vector<std::vector<int>> local(paths.size());
    for (std::size_t s = 0; s < paths.size(); ++s)
        for (auto& p : paths[s])
            local[s].push_back(pc.P.dim[path_end(A, p)]++);
    for (int a = 0; a < A.num_arrows(); ++a)
        pc.P.map[a] = Matrix(pc.P.dim[A.arrow(a).tgt], pc.P.dim[A.arrow(a).src]);
    for (int v = 0; v < V; ++v)
        pc.surjection.emplace_back(M.dim[v], pc.P.dim[v]);
    pc.basis.resize(paths.size());
    for (std::size_t s = 0; s < paths.size(); ++s) {
        for (std::size_t k = 0; k < paths[s].size(); ++k)
            pc.basis[s].emplace_back(paths[s][k], local[s][k]);
        std::map<Path, int> idx;
        for (std::size_t k = 0; k < paths[s].size(); ++k)
            idx[paths[s][k]] = local[s][k];
        for (std::size_t k = 0; k < paths[s].size(); ++k) {
            const Path& p = paths[s][k];
            int y = path_end(A, p);
            for (int a : A.out(y)) {
                if (!p.arrows.empty() && A.is_relation(p.arrows.back(), a))
                    continue;
                Path q = p;
                q.arrows.push_back(a);
                pc.P.map[a](idx[q], local[s][k]) = 1;
            }
            std::vector<std::uint32_t> m = top_vectors[s];
            int at = top_vertex[s];
            for (int a : p.arrows) {
                std::vector<std::uint32_t> nm(M.dim[A.arrow(a).tgt], 0);
                for (std::size_t i = 0; i < nm.size(); ++i)
                    for (int j = 0; j < M.dim[at]; ++j)
                        nm[i] = F.add(nm[i], F.mul(M.map[a](i, j), m[j]));
                m = nm;
                at = A.arrow(a).tgt;
            }
            for (int i = 0; i < M.dim[y]; ++i)
                pc.surjection[y](i, local[s][k]) = m[i];
        }
    }
    return pc;
}

// Kernel of a morphism f: X -> Y as a representation with its inclusion.
inline std::pair<Representation, Morphism> kernel(const Algebra& A, const Representation& X, const Morphism& f)
{
    const Field& F = X.F;
    int V = A.num_vertices();
    Representation K = zero_rep(A, F);
    Morphism incl;
    for (int v = 0; v < V; ++v) {
        incl.push_back(nullspace(F, f[v]));
        K.dim[v] = static_cast<int>(incl[v].cols());
    }
    for (int ai = 0; ai < A.num_arrows(); ++ai) {
        int s = A.arrow(ai).src, t = A.arrow(ai).tgt;
        Matrix img = multiply(F, X.map[ai], incl[s]);
        Matrix m(K.dim[t], K.dim[s]);
        for (int j = 0; j < K.dim[s]; ++j) {
            std::vector<std::uint32_t> b(img.rows()), x;
            for (std::size_t i = 0; i < img.rows(); ++i)
                b[i] = img(i, j);
            if (!solve(F, incl[t], b, x))
                throw std::logic_error("kernel is not a subrepresentation");
            for (int i = 0; i < K.dim[t]; ++i)
                m(i, j) = x[i];
        }
        K.map[ai] = m;
    }
    return {K, incl};
}

inline Representation syzygy(const Algebra& A, const Representation& M)
{
    auto pc = projective_cover(A, M);
    return kernel(A, pc.P, pc.surjection).first;
}

inline Representation syzygy_power(const Algebra& A, Representation M, int k)
{
    for (int i = 0; i < k && !M.is_zero(); ++i)
        M = syzygy(A, M);
    return M;
}

// dim Ext^1(M, N) from 0 -> Hom(M,N) -> Hom(P,N) -> Hom(Omega M, N) -> Ext^1 -> 0.
inline int ext1_dim(const Algebra& A, const Representation& M, const Representation& N)
{
    if (M.is_zero())
        return 0;
    auto pc = projective_cover(A, M);
    auto K = kernel(A, pc.P, pc.surjection).first;
    int homPN = 0;
    for (int x : pc.summands)
        homPN += N.dim[x];
    return hom_dim(A, K, N) - homPN + hom_dim(A, M, N);
}

inline int ext_dim(const Algebra& A, const Representation& M, const Representation& N, int i)
{
    if (i < 1)
        throw DomainError("Ext degree must be at least 1");
    return ext1_dim(A, syzygy_power(A, M, i - 1), N);
}

enum class GlDimKind { Finite, Infinite, AboveCap };

struct GlobalDimension {
    GlDimKind kind = GlDimKind::Finite;
    int value = 0;
    bool operator==(const GlobalDimension&) const = default;
};

inline std::string to_string(const GlobalDimension& g)
{
    if (g.kind == GlDimKind::Finite)
        return std::to_string(g.value);
    return g.kind == GlDimKind::Infinite ? "infinite" : "above cap";
}

// Projective dimensions of simples; a repeated syzygy dimension vector is read
// as periodicity.
inline GlobalDimension global_dimension(const Algebra& A, int cap, Field F = {})
{
    if (cap < 1)
        throw DomainError("cap must be at least 1");
    GlobalDimension g{GlDimKind::Finite, 0};
    bool above = false;
    for (int x = 0; x < A.num_vertices(); ++x) {
        Representation M = simple_rep(A, x, F);
        std::vector<std::vector<int>> seen{M.dim};
        int pd = -1;
        for (int k = 0; k <= cap; ++k) {
            if (projective_cover(A, M).P.total_dim() == M.total_dim()) {
                pd = k;
                break;
            }
            M = syzygy(A, M);
            if (std::find(seen.begin(), seen.end(), M.dim) != seen.end())
                return {GlDimKind::Infinite, 0};
            seen.push_back(M.dim);
        }
        if (pd < 0)
            above = true;
        else
            g.value = std::max(g.value, pd);
    }
    if (above)
        return {GlDimKind::AboveCap, 0};
    return g;
}

inline bool is_injective_morphism(const Field& F, const Morphism& f)
{
    for (const auto& m : f)
        if (rank(F, m) != m.cols())
            return false;
    return true;
}

inline bool is_isomorphism(const Field& F, const Morphism& f)
{
    for (const auto& m : f)
        if (!invertible(F, m))
            return false;
    return true;
}

inline Morphism compose(const Field& F, const Morphism& g, const Morphism& f)
{
    Morphism h;
    for (std::size_t v = 0; v < f.size(); ++v)
        h.push_back(multiply(F, g[v], f[v]));
    return h;
}

// Requires M indecomposable: then some basis vector of Hom(M, N) is an
// isomorphism whenever M and N are isomorphic.
inline bool isomorphic_to_indecomposable(const Algebra& A, const Representation& M, const Representation& N)
{
    if (M.dim != N.dim)
        return false;
    for (const auto& f : hom_basis(A, M, N))
        if (is_isomorphism(M.F, f))
            return true;
    return false;
}

namespace detail {

inline bool nilpotent(const Field& F, const Morphism& f)
{
    for (const auto& m : f) {
        Matrix p = m;
        for (std::size_t k = 0; k < m.rows() && !p.is_zero(); ++k)
            p = multiply(F, p, m);
        if (!p.is_zero())
            return false;
    }
    return true;
}

} // namespace detail

// Fitting: M is indecomposable iff every endomorphism is nilpotent or invertible.
// Exhaustive over End when small, otherwise a fixed-seed random sample plus
// all basis elements and pairwise sums.
inline bool is_indecomposable(const Algebra& A, const Representation& M)
{
    if (M.is_zero())
        return false;
    const Field& F = M.F;
    auto basis = hom_basis(A, M, M);
    if (basis.size() == 1)
        return true;
    auto check = [&](const std::vector<std::uint32_t>& c) {
        Morphism f;
        for (std::size_t v = 0; v < basis[0].size(); ++v) {
            Matrix m(basis[0][v].rows(), basis[0][v].cols());
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (c[k])
                    m = add(F, m, scale(F, c[k], basis[k][v]));
            f.push_back(m);
        }
        return detail::nilpotent(F, f) || is_isomorphism(F, f);
    };
    double space = 1;
    for (std::size_t k = 0; k < basis.size(); ++k)
        space *= F.p;
    std::vector<std::uint32_t> c(basis.size(), 0);
    if (space <= 65536) {
        for (;;) {
            if (!check(c))
                return false;
            std::size_t k = 0;
            while (k < c.size() && ++c[k] == F.p)
                c[k++] = 0;
            if (k == c.size())
                return true;
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) {
            std::fill(c.begin(), c.end(), 0);
            c[i] = 1;
            c[j] = F.add(c[j], 1);
            if (!check(c))
                return false;
        }
    std::mt19937 rng(12345);
    for (int t = 0; t < 4096; ++t) {
        for (auto& x : c)
            x = rng() % F.p;
        if (!check(c))
            return false;
    }
    return true;
}

} // namespace gentle
