#pragma once

#include "parallel.hpp"
#include "render.hpp"
#include "representation.hpp"

#include <map>
#include <set>

namespace gentle {

using Subcat = std::vector<int>; // sorted catalog indices

struct IndecCatalog {
    Algebra alg;
    Field F;
    std::vector<StringWord> words;
    std::vector<Representation> reps;
    std::vector<int> projective; // catalog index of P_x per vertex
    std::vector<int> injective;  // catalog index of I_x per vertex
    std::vector<std::vector<int>> hom;

    int size() const { return static_cast<int>(reps.size()); }

    // Ext^i(X, Y) for 1 <= i <= levels(); extend with ensure_ext.
    int ext(int i, int X, int Y) const { return ext_[i - 1][X][Y]; }
    int levels() const { return static_cast<int>(ext_.size()); }

    void ensure_ext(int max_i, int jobs = 1)
    {
        int n = size();
        while (static_cast<int>(syz_.size()) < max_i) {
            std::vector<Representation> next(n);
            std::vector<std::vector<int>> summ(n);
            const auto& prev = syz_.empty() ? reps : syz_.back();
            parallel_for(n, jobs, [&](std::size_t x) {
                if (prev[x].is_zero()) {
                    next[x] = prev[x];
                    return;
                }
                auto pc = projective_cover(alg, prev[x]);
                summ[x] = pc.summands;
                next[x] = kernel(alg, pc.P, pc.surjection).first;
            });
            syz_.push_back(std::move(next));
            cover_.push_back(std::move(summ));
        }
        while (levels() < max_i) {
            int i = levels() + 1;
            const auto& M = i == 1 ? reps : syz_[i - 2];
            const auto& K = syz_[i - 1];
            const auto& cov = cover_[i - 1];
            std::vector<std::vector<int>> table(n, std::vector<int>(n, 0));
            parallel_for(static_cast<std::size_t>(n) * n, jobs, [&](std::size_t k) {
                int x = static_cast<int>(k / n), y = static_cast<int>(k % n);
                if (M[x].is_zero())
                    return;
                int homPN = 0;
                for (int v : cov[x])
                    homPN += reps[y].dim[v];
                int homMN = i == 1 ? hom[x][y] : hom_dim(alg, M[x], reps[y]);
                table[x][y] = hom_dim(alg, K[x], reps[y]) - homPN + homMN;
            });
            ext_.push_back(std::move(table));
        }
    }

    bool is_projective(int X) const { return std::count(projective.begin(), projective.end(), X) > 0; }
    bool is_injective(int X) const { return std::count(injective.begin(), injective.end(), X) > 0; }

private:
    std::vector<std::vector<Representation>> syz_; // syz_[k][x] = Omega^{k+1} of object x
    std::vector<std::vector<std::vector<int>>> cover_;
    std::vector<std::vector<std::vector<int>>> ext_;
};

inline int default_string_guard(const Algebra& A) { return 2 * A.num_arrows() + 1; }

// All indecomposables of a representation-finite gentle algebra, as string
// modules. Refuses when a band exists or enumeration did not saturate.
inline IndecCatalog indecomposables(const Algebra& A, int max_len = -1, Field F = {}, int jobs = 1)
{
    require_gentle(A);
    if (max_len < 0)
        max_len = default_string_guard(A);
    auto list = enumerate_strings(A, max_len);
    if (list.band)
        throw GuardError("band detected: the algebra has infinite representation type");
    if (list.truncated)
        throw GuardError("string enumeration truncated at length " + std::to_string(max_len));
    IndecCatalog C;
    C.alg = A;
    C.F = F;
    C.words = list.strings;
    for (const auto& w : C.words)
        C.reps.push_back(string_module(A, w, F));
    int n = C.size();
    std::vector<char> indec(n, 0);
    parallel_for(n, jobs, [&](std::size_t i) { indec[i] = is_indecomposable(A, C.reps[i]); });
    for (int i = 0; i < n; ++i)
        if (!indec[i])
            throw std::logic_error("string module " + to_string(A, C.words[i]) + " failed the indecomposability test");
    C.hom.assign(n, std::vector<int>(n, 0));
    parallel_for(static_cast<std::size_t>(n) * n, jobs,
                 [&](std::size_t k) { C.hom[k / n][k % n] = hom_dim(A, C.reps[k / n], C.reps[k % n]); });
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (C.reps[i].dim == C.reps[j].dim && C.hom[i][j] > 0 &&
                isomorphic_to_indecomposable(A, C.reps[i], C.reps[j]))
                throw std::logic_error("catalog contains isomorphic objects");
    auto locate = [&](const Representation& R) {
        for (int i = 0; i < n; ++i)
            if (isomorphic_to_indecomposable(A, C.reps[i], R))
                return i;
        throw std::logic_error("projective or injective missing from the catalog");
    };
    for (int x = 0; x < A.num_vertices(); ++x) {
        C.projective.push_back(locate(projective_rep(A, x, F)));
        C.injective.push_back(locate(injective_rep(A, x, F)));
    }
    return C;
}

inline int find_in_catalog(const IndecCatalog& C, const Representation& R)
{
    for (int i = 0; i < C.size(); ++i)
        if (isomorphic_to_indecomposable(C.alg, C.reps[i], R))
            return i;
    return -1;
}

inline Subcat perp_right(IndecCatalog& C, const Subcat& U, int d)
{
    C.ensure_ext(d - 1);
    Subcat out;
    for (int z = 0; z < C.size(); ++z) {
        bool ok = true;
        for (int u : U)
            for (int i = 1; i < d && ok; ++i)
                if (C.ext(i, u, z))
                    ok = false;
        if (ok)
            out.push_back(z);
    }
    return out;
}

inline Subcat perp_left(IndecCatalog& C, const Subcat& U, int d)
{
    C.ensure_ext(d - 1);
    Subcat out;
    for (int z = 0; z < C.size(); ++z) {
        bool ok = true;
        for (int u : U)
            for (int i = 1; i < d && ok; ++i)
                if (C.ext(i, z, u))
                    ok = false;
        if (ok)
            out.push_back(z);
    }
    return out;
}

struct Verdict {
    bool ok = true;
    std::string witness;
};

inline Subcat normalized(Subcat U)
{
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end()), U.end());
    return U;
}

// Functorial finiteness is automatic for finitely many indecomposables.
inline Verdict is_dct_module(IndecCatalog& C, Subcat U, int d)
{
    if (d < 2)
        throw DomainError("d must be at least 2");
    U = normalized(U);
    auto name = [&](int x) { return to_string(C.alg, C.words[x]); };
    auto has = [&](int x) { return std::binary_search(U.begin(), U.end(), x); };
    for (int x = 0; x < C.alg.num_vertices(); ++x) {
        if (!has(C.projective[x]))
            return {false, "missing projective " + name(C.projective[x])};
        if (!has(C.injective[x]))
            return {false, "missing injective " + name(C.injective[x])};
    }
    auto R = perp_right(C, U, d), L = perp_left(C, U, d);
    for (int z = 0; z < C.size(); ++z) {
        bool r = std::binary_search(R.begin(), R.end(), z), l = std::binary_search(L.begin(), L.end(), z);
        if (has(z) && !r)
            return {false, name(z) + " is in the subcategory but not in its right perpendicular"};
        if (has(z) && !l)
            return {false, name(z) + " is in the subcategory but not in its left perpendicular"};
        if (!has(z) && r)
            return {false, name(z) + " is in the right perpendicular but not in the subcategory"};
        if (!has(z) && l)
            return {false, name(z) + " is in the left perpendicular but not in the subcategory"};
    }
    return {};
}

// All d-cluster tilting subcategories. Candidates contain every projective and
// injective; objects with self-extensions or extensions against the forced
// part are dropped, then pairwise Ext-free families are enumerated and only
// maximal ones are verified.
inline std::vector<Subcat> search_dct_module(IndecCatalog& C, int d, int jobs = 1)
{
    if (d < 2)
        throw DomainError("d must be at least 2");
    C.ensure_ext(d - 1, jobs);
    int n = C.size();
    auto clash = [&](int x, int y) {
        for (int i = 1; i < d; ++i)
            if (C.ext(i, x, y) || C.ext(i, y, x))
                return true;
        return false;
    };
    std::set<int> forced_set(C.projective.begin(), C.projective.end());
    forced_set.insert(C.injective.begin(), C.injective.end());
    Subcat forced(forced_set.begin(), forced_set.end());
    for (int x : forced)
        for (int y : forced)
            if (x <= y && clash(x, y))
                return {};
    std::vector<int> optional;
    for (int z = 0; z < n; ++z) {
        if (forced_set.count(z) || clash(z, z))
            continue;
        bool ok = true;
        for (int f : forced)
            if (clash(z, f))
                ok = false;
        if (ok)
            optional.push_back(z);
    }
    std::vector<Subcat> found;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == optional.size()) {
            for (int z : optional)
                if (std::find(chosen.begin(), chosen.end(), z) == chosen.end()) {
                    bool free = true;
                    for (int c : chosen)
                        if (clash(z, c))
                            free = false;
                    if (free)
                        return; // not maximal
                }
            Subcat U = forced;
            U.insert(U.end(), chosen.begin(), chosen.end());
            U = normalized(U);
            if (is_dct_module(C, U, d).ok)
                found.push_back(U);
            return;
        }
        int z = optional[k];
        bool free = true;
        for (int c : chosen)
            if (clash(z, c))
                free = false;
        if (free) {
            chosen.push_back(z);
            self(self, k + 1);
            chosen.pop_back();
        }
        self(self, k + 1);
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    return found;
}

// {d >= 2 : ...}; `all` means every d >= 2.
struct DSet {
    bool all = false;
    std::vector<int> values;

    bool contains(int d) const
    {
        return d >= 2 && (all || std::find(values.begin(), values.end(), d) != values.end());
    }
    bool empty() const { return !all && values.empty(); }
};

inline std::string to_string(const DSet& s)
{
    if (s.all)
        return "{d >= 2}";
    std::string r = "{";
    for (std::size_t i = 0; i < s.values.size(); ++i)
        r += (i ? ", " : "") + std::to_string(s.values[i]);
    return r + "}";
}

// Linear A_n: n = dk+1 with k >= 0. Cyclic on n+1 vertices: n = dk-1 with k >= 1.
inline DSet classify_weakly_drf(const Algebra& A)
{
    require_gentle(A);
    DSet out;
    if (!is_rad2_nakayama(A))
        return out;
    auto s = shape(A);
    int target;
    if (s.kind == ShapeKind::LinearNakayama) {
        if (s.n == 1) {
            out.all = true;
            return out;
        }
        target = s.n - 1;
    } else {
        target = s.n + 1;
    }
    for (int d = 2; d <= target; ++d)
        if (target % d == 0)
            out.values.push_back(d);
    return out;
}

inline std::optional<int> classify_drf_hereditary(const Algebra& A)
{
    require_gentle(A);
    auto s = shape(A);
    if (s.kind != ShapeKind::LinearNakayama || !is_radical_square_zero(A))
        return std::nullopt;
    auto g = global_dimension(A, A.num_arrows() + 2);
    if (g.kind != GlDimKind::Finite || g.value < 2 || s.n != g.value + 1)
        return std::nullopt;
    return g.value;
}

struct ARQuiverModule {
    std::vector<std::vector<int>> irreducible; // multiplicity of X -> Y
    std::vector<int> tau;                      // -1 for projectives
};

namespace detail {

inline std::vector<std::uint32_t> flatten(const Morphism& f)
{
    std::vector<std::uint32_t> v;
    for (const auto& m : f)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                v.push_back(m(i, j));
    return v;
}

inline bool nilpotent_morphism(const Field& F, const Morphism& f)
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

// Basis of the radical of End(X): each basis element minus its scalar part.
inline std::vector<Morphism> radical_endomorphisms(const Algebra& A, const Representation& X)
{
    const Field& F = X.F;
    std::vector<Morphism> out;
    Morphism id;
    for (int v = 0; v < A.num_vertices(); ++v)
        id.push_back(Matrix::identity(X.dim[v]));
    for (auto& b : hom_basis(A, X, X)) {
        bool done = false;
        for (std::uint32_t lam = 0; lam < F.p && !done; ++lam) {
            Morphism c;
            for (std::size_t v = 0; v < b.size(); ++v)
                c.push_back(add(F, b[v], scale(F, F.neg(lam), id[v])));
            if (nilpotent_morphism(F, c)) {
                bool zero = true;
                for (auto& m : c)
                    if (!m.is_zero())
                        zero = false;
                if (!zero)
                    out.push_back(c);
                done = true;
            }
        }
    }
    // reduce to a basis
    if (out.empty())
        return out;
    Matrix M(flatten(out[0]).size(), out.size());
    for (std::size_t c = 0; c < out.size(); ++c) {
        auto v = flatten(out[c]);
        for (std::size_t i = 0; i < v.size(); ++i)
            M(i, c) = v[i];
    }
    Matrix R = M;
    auto piv = row_reduce(F, R);
    std::vector<Morphism> basis;
    for (auto p : piv)
        basis.push_back(out[p]);
    return basis;
}

} // namespace detail

// Irreducible maps as rad/rad^2 from explicit Hom bases; tau by mesh completion.
inline ARQuiverModule ar_quiver_module(const IndecCatalog& C, int jobs = 1)
{
    const Algebra& A = C.alg;
    const Field& F = C.F;
    int n = C.size();
    std::vector<std::vector<std::vector<Morphism>>> rad(n, std::vector<std::vector<Morphism>>(n));
    parallel_for(static_cast<std::size_t>(n) * n, jobs, [&](std::size_t k) {
        int x = static_cast<int>(k / n), y = static_cast<int>(k % n);
        rad[x][y] = x == y ? detail::radical_endomorphisms(A, C.reps[x]) : hom_basis(A, C.reps[x], C.reps[y]);
    });
    ARQuiverModule Q;
    Q.irreducible.assign(n, std::vector<int>(n, 0));
    parallel_for(static_cast<std::size_t>(n) * n, jobs, [&](std::size_t k) {
        int x = static_cast<int>(k / n), y = static_cast<int>(k % n);
        if (rad[x][y].empty())
            return;
        std::vector<std::vector<std::uint32_t>> comps;
        for (int z = 0; z < n; ++z)
            for (const auto& f : rad[x][z])
                for (const auto& g : rad[z][y])
                    comps.push_back(detail::flatten(compose(F, g, f)));
        int r2 = 0;
        if (!comps.empty()) {
            Matrix M(comps[0].size(), comps.size());
            for (std::size_t c = 0; c < comps.size(); ++c)
                for (std::size_t i = 0; i < comps[c].size(); ++i)
                    M(i, c) = comps[c][i];
            r2 = static_cast<int>(rank(F, M));
        }
        Q.irreducible[x][y] = static_cast<int>(rad[x][y].size()) - r2;
    });
    Q.tau.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (C.is_projective(x))
            continue;
        std::vector<int> dim(A.num_vertices(), 0);
        for (int y = 0; y < n; ++y)
            for (int v = 0; v < A.num_vertices(); ++v)
                dim[v] += Q.irreducible[y][x] * C.reps[y].dim[v];
        for (int v = 0; v < A.num_vertices(); ++v)
            dim[v] -= C.reps[x].dim[v];
        for (int z = 0; z < n; ++z) {
            if (C.reps[z].dim != dim || C.is_injective(z))
                continue;
            bool mesh = true;
            for (int y = 0; y < n; ++y)
                if (Q.irreducible[z][y] != Q.irreducible[y][x])
                    mesh = false;
            if (mesh) {
                Q.tau[x] = z;
                break;
            }
        }
        if (Q.tau[x] < 0)
            throw std::logic_error("mesh completion found no translate for " + to_string(A, C.words[x]));
    }
    return Q;
}

inline GraphPicture picture(const IndecCatalog& C, const ARQuiverModule& Q, const Subcat* U = nullptr)
{
    GraphPicture g;
    for (int x = 0; x < C.size(); ++x) {
        g.labels.push_back(to_string(C.alg, C.words[x]));
        g.boxed.push_back(U && std::binary_search(U->begin(), U->end(), x));
    }
    for (int x = 0; x < C.size(); ++x)
        for (int y = 0; y < C.size(); ++y)
            if (Q.irreducible[x][y])
                g.arrows.emplace_back(x, y, Q.irreducible[x][y]);
    for (int x = 0; x < C.size(); ++x)
        if (Q.tau[x] >= 0)
            g.dashed.emplace_back(x, Q.tau[x]);
    return g;
}

} // namespace gentle
