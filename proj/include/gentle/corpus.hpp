#pragma once

#include "quiver.hpp"

#include <numeric>

namespace gentle {

namespace detail {

struct RawQuiver {
    int n = 0;
    std::vector<std::pair<int, int>> arrows;
    std::vector<std::pair<int, int>> relations; // arrow index pairs
};

// Smallest encoding over vertex relabelings and reorderings of parallel arrows.
inline std::string canonical_code(const RawQuiver& q)
{
    std::vector<int> perm(q.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool first = true;
    do {
        int m = static_cast<int>(q.arrows.size());
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        auto key = [&](int a) { return std::pair(perm[q.arrows[a].first], perm[q.arrows[a].second]); };
        std::sort(order.begin(), order.end(), [&](int x, int y) { return key(x) < key(y); });
        // runs of parallel arrows can be permuted freely
        std::vector<std::pair<int, int>> runs;
        for (int i = 0; i < m;) {
            int j = i;
            while (j < m && key(order[j]) == key(order[i]))
                ++j;
            runs.emplace_back(i, j);
            i = j;
        }
        auto encode = [&] {
            std::vector<int> pos(m);
            for (int i = 0; i < m; ++i)
                pos[order[i]] = i;
            std::string s = std::to_string(q.n) + "|";
            for (int i = 0; i < m; ++i)
                s += std::to_string(key(order[i]).first) + std::to_string(key(order[i]).second) + ",";
            std::vector<std::pair<int, int>> rel;
            for (auto [a, b] : q.relations)
                rel.emplace_back(pos[a], pos[b]);
            std::sort(rel.begin(), rel.end());
            s += "|";
            for (auto [a, b] : rel)
                s += std::to_string(a) + std::to_string(b) + ",";
            return s;
        };
        auto rec = [&](auto&& self, std::size_t r) -> void {
            if (r == runs.size()) {
                auto s = encode();
                if (first || s < best) {
                    best = s;
                    first = false;
                }
                return;
            }
            auto [lo, hi] = runs[r];
            std::sort(order.begin() + lo, order.begin() + hi);
            do
                self(self, r + 1);
            while (std::next_permutation(order.begin() + lo, order.begin() + hi));
        };
        rec(rec, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Algebra to_algebra(const RawQuiver& q)
{
    std::vector<std::string> vs;
    std::vector<ArrowSpec> as;
    std::vector<std::pair<std::string, std::string>> rs;
    for (int v = 1; v <= q.n; ++v)
        vs.push_back(std::to_string(v));
    for (std::size_t a = 0; a < q.arrows.size(); ++a)
        as.push_back({"a" + std::to_string(a + 1), std::to_string(q.arrows[a].first + 1),
                      std::to_string(q.arrows[a].second + 1)});
    for (auto [a, b] : q.relations)
        rs.emplace_back("a" + std::to_string(a + 1), "a" + std::to_string(b + 1));
    return Algebra::build(vs, as, rs);
}

} // namespace detail

// Every connected gentle algebra with at most max_vertices vertices and
// max_arrows arrows, one per isomorphism class, in a fixed order.
inline std::vector<Algebra> gentle_corpus(int max_vertices = 4, int max_arrows = 5)
{
    std::vector<Algebra> out;
    std::set<std::string> seen_quiver, seen_algebra;
    for (int n = 1; n <= max_vertices; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                slots.emplace_back(u, v);
        detail::RawQuiver q;
        q.n = n;
        std::vector<int> in(n, 0), outd(n, 0);
        auto with_relations = [&] {
            int m = static_cast<int>(q.arrows.size());
            std::vector<std::pair<int, int>> comp;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b)
                    if (q.arrows[a].second == q.arrows[b].first)
                        comp.emplace_back(a, b);
            for (std::uint32_t mask = 0; mask < (1u << comp.size()); ++mask) {
                q.relations.clear();
                for (std::size_t k = 0; k < comp.size(); ++k)
                    if (mask >> k & 1)
                        q.relations.push_back(comp[k]);
                auto A = detail::to_algebra(q);
                if (!is_gentle(A).gentle)
                    continue;
                if (seen_algebra.insert(detail::canonical_code(q)).second)
                    out.push_back(std::move(A));
            }
            q.relations.clear();
        };
        // multisets of arrows as nondecreasing slot sequences
        auto rec = [&](auto&& self, std::size_t from) -> void {
            if (!q.arrows.empty() || n == 1) {
                auto A = detail::to_algebra(q);
                if (A.connected() && seen_quiver.insert(detail::canonical_code(q)).second)
                    with_relations();
            }
            if (static_cast<int>(q.arrows.size()) == max_arrows)
                return;
            for (std::size_t s = from; s < slots.size(); ++s) {
                auto [u, v] = slots[s];
                if (outd[u] == 2 || in[v] == 2)
                    continue;
                ++outd[u];
                ++in[v];
                q.arrows.push_back(slots[s]);
                self(self, s);
                q.arrows.pop_back();
                --outd[u];
                --in[v];
            }
        };
        rec(rec, 0);
    }
    return out;
}

} // namespace gentle
