#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

namespace gentle {

// A directed graph ready for drawing: solid arrows carry multiplicities,
// dashed arrows (translates) do not constrain the layout.
struct GraphPicture {
    std::vector<std::string> labels;
    std::vector<bool> boxed;
    std::vector<std::tuple<int, int, int>> arrows; // from, to, multiplicity
    std::vector<std::pair<int, int>> dashed;
};

// Longest-path layering from the sources; rows in node order within a layer.
inline std::vector<std::pair<int, int>> layered_layout(const GraphPicture& g)
{
    std::size_t N = g.labels.size();
    std::vector<int> layer(N, 0), indeg(N, 0);
    std::vector<std::vector<int>> succ(N);
    for (auto [u, v, m] : g.arrows) {
        succ[u].push_back(v);
        indeg[v]++;
    }
    std::queue<int> q;
    for (std::size_t i = 0; i < N; ++i)
        if (!indeg[i])
            q.push(static_cast<int>(i));
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : succ[u]) {
            layer[v] = std::max(layer[v], layer[u] + 1);
            if (--indeg[v] == 0)
                q.push(v);
        }
    }
    std::vector<std::pair<int, int>> pos(N);
    std::map<int, int> filled;
    for (std::size_t i = 0; i < N; ++i)
        pos[i] = {layer[i], filled[layer[i]]++};
    return pos;
}

inline std::string to_dot(const GraphPicture& g, const std::string& name = "AR")
{
    std::ostringstream o;
    o << "digraph " << name << " {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < g.labels.size(); ++i)
        o << "  n" << i << " [label=\"" << g.labels[i] << "\", shape=" << (g.boxed[i] ? "box" : "plaintext")
          << "];\n";
    for (auto [u, v, m] : g.arrows)
        for (int k = 0; k < m; ++k)
            o << "  n" << u << " -> n" << v << ";\n";
    for (auto [u, v] : g.dashed)
        o << "  n" << u << " -> n" << v << " [style=dashed, constraint=false];\n";
    o << "}\n";
    return o.str();
}

inline std::string to_tikz(const GraphPicture& g)
{
    auto pos = layered_layout(g);
    std::ostringstream o;
    o << "\\begin{tikzpicture}[xscale=1.8, yscale=1.1]\n";
    for (std::size_t i = 0; i < g.labels.size(); ++i)
        o << "  \\node" << (g.boxed[i] ? "[draw]" : "") << " (n" << i << ") at (" << pos[i].first << ","
          << -pos[i].second << ") {\\small $" << g.labels[i] << "$};\n";
    for (auto [u, v, m] : g.arrows)
        for (int k = 0; k < m; ++k)
            o << "  \\draw[->" << (m > 1 ? ", bend left=" + std::to_string(10 * (2 * k - m + 1)) : "") << "] (n" << u
              << ") to (n" << v << ");\n";
    for (auto [u, v] : g.dashed)
        o << "  \\draw[->, dashed] (n" << u << ") to (n" << v << ");\n";
    o << "\\end{tikzpicture}\n";
    return o.str();
}

} // namespace gentle
