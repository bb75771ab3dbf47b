#pragma once

#include "quiver.hpp"

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gentle {

struct Letter {
    int arrow = 0;
    bool inverse = false;

    int source(const Algebra& A) const { return inverse ? A.arrow(arrow).tgt : A.arrow(arrow).src; }
    int target(const Algebra& A) const { return inverse ? A.arrow(arrow).src : A.arrow(arrow).tgt; }
    Letter inv() const { return {arrow, !inverse}; }
    auto operator<=>(const Letter&) const = default;
};

// A walk; an empty letter list is the trivial walk at `base`.
struct StringWord {
    int base = 0;
    std::vector<Letter> letters;

    int length() const { return static_cast<int>(letters.size()); }
    int start(const Algebra& A) const { return letters.empty() ? base : letters.front().source(A); }
    int end(const Algebra& A) const { return letters.empty() ? base : letters.back().target(A); }
    bool operator==(const StringWord&) const = default;
    auto operator<=>(const StringWord&) const = default;
};

inline StringWord trivial_string(int v) { return {v, {}}; }

inline StringWord inverse(const Algebra& A, const StringWord& w)
{
    StringWord r;
    r.base = w.end(A);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(it->inv());
    return r;
}

// Letters a, b adjacent in a walk with a followed by b.
inline bool letters_allowed(const Algebra& A, Letter a, Letter b)
{
    if (a.target(A) != b.source(A))
        return false;
    if (a.arrow == b.arrow && a.inverse != b.inverse)
        return false;
    if (!a.inverse && !b.inverse && A.is_relation(a.arrow, b.arrow))
        return false;
    if (a.inverse && b.inverse && A.is_relation(b.arrow, a.arrow))
        return false;
    return true;
}

inline bool is_string(const Algebra& A, const StringWord& w)
{
    if (w.letters.empty())
        return w.base >= 0 && w.base < A.num_vertices();
    for (const auto& l : w.letters)
        if (l.arrow < 0 || l.arrow >= A.num_arrows())
            return false;
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (!letters_allowed(A, w.letters[i], w.letters[i + 1]))
            return false;
    return true;
}

inline StringWord canonical(const Algebra& A, const StringWord& w)
{
    if (w.letters.empty())
        return trivial_string(w.base);
    StringWord r = inverse(A, w);
    StringWord c = w;
    c.base = w.start(A);
    return r.letters < c.letters ? r : c;
}

inline std::string to_string(const Algebra& A, const StringWord& w)
{
    if (w.letters.empty())
        return "e(" + A.vertex_name(w.base) + ")";
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i)
            s += ' ';
        s += A.arrow(w.letters[i].arrow).name;
        if (w.letters[i].inverse)
            s += "^-1";
    }
    return s;
}

inline StringWord parse_string(const Algebra& A, const std::string& text)
{
    std::istringstream in(text);
    std::vector<std::string> tok;
    for (std::string t; in >> t;)
        tok.push_back(t);
    if (tok.size() == 1 && tok[0].size() > 3 && tok[0].rfind("e(", 0) == 0 && tok[0].back() == ')')
        return trivial_string(A.vertex(tok[0].substr(2, tok[0].size() - 3)));
    if (tok.empty())
        throw ParseError(0, "empty string word");
    StringWord w;
    for (auto t : tok) {
        bool inv = false;
        if (t.size() > 3 && t.compare(t.size() - 3, 3, "^-1") == 0) {
            inv = true;
            t.resize(t.size() - 3);
        }
        if (!A.has_arrow(t))
            throw ParseError(0, "unknown arrow " + t);
        w.letters.push_back({A.arrow_index(t), inv});
    }
    w.base = w.start(A);
    return w;
}

struct StringList {
    std::vector<StringWord> strings;
    bool truncated = false;
    bool band = false;
};

// Strings up to max_len, one representative per inverse pair. `truncated` is
// set when some string of length max_len extends further; `band` when a
// string w with equal ends has ww a string.
inline StringList enumerate_strings(const Algebra& A, int max_len)
{
    std::set<StringWord> found;
    StringList out;
    auto extend = [&](auto&& self, StringWord& w) -> void {
        found.insert(canonical(A, w));
        if (!w.letters.empty() && w.start(A) == w.end(A)) {
            StringWord ww = w;
            ww.letters.insert(ww.letters.end(), w.letters.begin(), w.letters.end());
            if (is_string(A, ww))
                out.band = true;
        }
        int v = w.end(A);
        std::vector<Letter> next;
        for (int a : A.out(v))
            next.push_back({a, false});
        for (int a : A.in(v))
            next.push_back({a, true});
        for (auto l : next) {
            if (!w.letters.empty() && !letters_allowed(A, w.letters.back(), l))
                continue;
            if (w.length() == max_len) {
                out.truncated = true;
                return;
            }
            w.letters.push_back(l);
            self(self, w);
            w.letters.pop_back();
        }
    };
    for (int v = 0; v < A.num_vertices(); ++v) {
        StringWord w = trivial_string(v);
        extend(extend, w);
    }
    out.strings.assign(found.begin(), found.end());
    return out;
}

inline void require_gentle(const Algebra& A)
{
    auto r = is_gentle(A);
    if (!r.gentle)
        throw DomainError("algebra is not gentle (clause " + std::to_string(r.clause) + "): " + r.detail);
}

// The longest path starting with arrow a that avoids relations.
inline std::vector<int> maximal_path_from(const Algebra& A, int a)
{
    std::vector<int> p{a};
    for (;;) {
        int next = -1;
        for (int b : A.out(A.arrow(p.back()).tgt))
            if (!A.is_relation(p.back(), b))
                next = b;
        if (next < 0)
            return p;
        p.push_back(next);
    }
}

// The longest path ending with arrow a that avoids relations.
inline std::vector<int> maximal_path_to(const Algebra& A, int a)
{
    std::vector<int> p{a};
    for (;;) {
        int prev = -1;
        for (int c : A.in(A.arrow(p.front()).src))
            if (!A.is_relation(c, p.front()))
                prev = c;
        if (prev < 0)
            return p;
        p.insert(p.begin(), prev);
    }
}

namespace detail {

inline StringWord direct(const std::vector<int>& path)
{
    StringWord w;
    for (int a : path)
        w.letters.push_back({a, false});
    return w;
}

inline StringWord join(const Algebra& A, int x, const StringWord& u, const StringWord& v)
{
    StringWord w;
    w.letters = u.letters;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    w.base = w.letters.empty() ? x : w.start(A);
    return w;
}

} // namespace detail

inline StringWord projective_string(const Algebra& A, int x)
{
    require_gentle(A);
    const auto& outs = A.out(x);
    StringWord left, right;
    if (outs.size() >= 1)
        right = detail::direct(maximal_path_from(A, outs[0]));
    if (outs.size() == 2)
        left = inverse(A, detail::direct(maximal_path_from(A, outs[1])));
    return canonical(A, detail::join(A, x, left, right));
}

inline StringWord injective_string(const Algebra& A, int x)
{
    require_gentle(A);
    const auto& ins = A.in(x);
    StringWord left, right;
    if (ins.size() >= 1)
        left = detail::direct(maximal_path_to(A, ins[0]));
    if (ins.size() == 2)
        right = inverse(A, detail::direct(maximal_path_to(A, ins[1])));
    return canonical(A, detail::join(A, x, left, right));
}

// Local picture at a vertex: incoming alpha, beta and outgoing gamma, delta
// with alpha gamma and beta delta in the ideal. -1 marks a missing arrow.
struct LocalConfig {
    int alpha = -1, beta = -1, gamma = -1, delta = -1;
    bool overlap = false;
};

inline LocalConfig local_config(const Algebra& A, int x)
{
    require_gentle(A);
    std::vector<std::pair<int, int>> rows;
    std::vector<char> in_used(A.in(x).size(), 0), out_used(A.out(x).size(), 0);
    for (std::size_t i = 0; i < A.in(x).size(); ++i)
        for (std::size_t o = 0; o < A.out(x).size(); ++o)
            if (!in_used[i] && !out_used[o] && A.is_relation(A.in(x)[i], A.out(x)[o])) {
                rows.emplace_back(A.in(x)[i], A.out(x)[o]);
                in_used[i] = out_used[o] = 1;
            }
    for (std::size_t i = 0; i < A.in(x).size(); ++i)
        if (!in_used[i])
            rows.emplace_back(A.in(x)[i], -1);
    for (std::size_t o = 0; o < A.out(x).size(); ++o)
        if (!out_used[o])
            rows.emplace_back(-1, A.out(x)[o]);
    if (rows.size() > 2)
        throw std::logic_error("gentle vertex with more than two rows");
    LocalConfig c;
    if (rows.size() >= 1)
        std::tie(c.alpha, c.gamma) = rows[0];
    if (rows.size() == 2)
        std::tie(c.beta, c.delta) = rows[1];
    c.overlap = rows.size() == 2;
    return c;
}

inline bool overlap_extension_exists(const Algebra& A, int x)
{
    return local_config(A, x).overlap;
}

struct OverlapSequence {
    int vertex = 0;
    StringWord projective, middle_first, middle_second, injective;
};

inline OverlapSequence overlap_sequence(const Algebra& A, int x)
{
    auto c = local_config(A, x);
    auto path_from = [&](int a) { return a < 0 ? StringWord{} : detail::direct(maximal_path_from(A, a)); };
    auto path_to = [&](int a) { return a < 0 ? StringWord{} : detail::direct(maximal_path_to(A, a)); };
    OverlapSequence s;
    s.vertex = x;
    auto gu = path_from(c.gamma), du = path_from(c.delta);
    auto va = path_to(c.alpha), vb = path_to(c.beta);
    s.projective = canonical(A, detail::join(A, x, inverse(A, gu.letters.empty() ? trivial_string(x) : gu), du));
    s.middle_first = canonical(A, detail::join(A, x, va, du));
    s.middle_second = canonical(A, detail::join(A, x, vb, gu));
    s.injective = canonical(A, detail::join(A, x, va, inverse(A, vb.letters.empty() ? trivial_string(x) : vb)));
    return s;
}

inline std::optional<OverlapSequence> find_obstruction_vertex(const Algebra& A)
{
    for (int x = 0; x < A.num_vertices(); ++x)
        if (overlap_extension_exists(A, x))
            return overlap_sequence(A, x);
    return std::nullopt;
}

} // namespace gentle
