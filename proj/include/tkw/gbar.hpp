// The group Gbar = <a,b,c | a^2b=ba^2, a^2c=ca^2, b^2a=ab^2, c^2a=ac^2,
// abc=cba, cab=bac>. Words are stored freely reduced over {a,b,c} and their
// inverses (b', c' are eliminated on ingestion via b' = aba^-1, c' = aca^-1).
// Equality is semi-decided: free reduction, then abelianization, then a
// budgeted bidirectional breadth-first search over relation applications.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tkw/gauss.hpp"
#include "tkw/word.hpp"

namespace tkw {

// Letters: 'a','b','c' are the generators, 'A','B','C' their inverses.
using GBarWord = std::string;

inline char gbar_inverse(char ch) { return static_cast<char>(ch ^ 0x20); }

inline GBarWord free_reduce(const GBarWord& w) {
    GBarWord out;
    for (char ch : w) {
        if (!out.empty() && out.back() == gbar_inverse(ch))
            out.pop_back();
        else
            out.push_back(ch);
    }
    return out;
}

inline GBarWord gbar_invert(const GBarWord& w) {
    GBarWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(gbar_inverse(*it));
    return out;
}

inline GBarWord ingest(const Word& w) {
    GBarWord out;
    for (const Letter& l : w) {
        const bool pos = l.exponent > 0;
        switch (l.symbol) {
            case Symbol::A: out += pos ? "a" : "A"; break;
            case Symbol::B: out += pos ? "b" : "B"; break;
            case Symbol::C: out += pos ? "c" : "C"; break;
            case Symbol::Bp: out += pos ? "abA" : "aBA"; break;
            case Symbol::Cp: out += pos ? "acA" : "aCA"; break;
        }
    }
    return free_reduce(out);
}

struct AbelianImage {
    long long s_a = 0;
    long long s_b = 0;  // b and b'
    long long s_c = 0;  // c and c'

    bool operator==(const AbelianImage&) const = default;
};

inline AbelianImage abelianize(const GBarWord& w) {
    AbelianImage img;
    for (char ch : w) {
        switch (ch) {
            case 'a': ++img.s_a; break;
            case 'A': --img.s_a; break;
            case 'b': ++img.s_b; break;
            case 'B': --img.s_b; break;
            case 'c': ++img.s_c; break;
            case 'C': --img.s_c; break;
        }
    }
    return img;
}

struct RewriteRule {
    GBarWord lhs;
    GBarWord rhs;
    bool operator==(const RewriteRule&) const = default;
};

// All balanced splits l -> s^-1 of the cyclic rotations of the six relators
// and their inverses (|l| in 2..4). The set is closed under rule inversion,
// so every edge of the rewriting graph is traversable both ways.
inline const std::vector<RewriteRule>& gbar_rules() {
    static const std::vector<RewriteRule> rules = [] {
        const std::array<GBarWord, 6> relators = {
            "aabAAB",  // a^2 b = b a^2
            "aacAAC",  // a^2 c = c a^2
            "bbaBBA",  // b^2 a = a b^2
            "ccaCCA",  // c^2 a = a c^2
            "abcABC",  // a b c = c b a
            "cabCAB",  // c a b = b a c
        };
        std::vector<RewriteRule> out;
        for (const GBarWord& base : relators) {
            for (const GBarWord& rel : {base, gbar_invert(base)}) {
                for (std::size_t rot = 0; rot < rel.size(); ++rot) {
                    GBarWord r = rel.substr(rot) + rel.substr(0, rot);
                    for (std::size_t k = 2; k <= 4; ++k) {
                        RewriteRule rule{r.substr(0, k), gbar_invert(r.substr(k))};
                        if (std::find(out.begin(), out.end(), rule) == out.end())
                            out.push_back(std::move(rule));
                    }
                }
            }
        }
        return out;
    }();
    return rules;
}

// Neighbors of w in the rewriting graph, freely reduced, length-capped.
inline std::vector<GBarWord> gbar_neighbors(const GBarWord& w, std::size_t max_len) {
    std::vector<GBarWord> out;
    for (const RewriteRule& rule : gbar_rules()) {
        if (rule.lhs.size() > w.size()) continue;
        for (std::size_t i = 0; i + rule.lhs.size() <= w.size(); ++i) {
            if (w.compare(i, rule.lhs.size(), rule.lhs) != 0) continue;
            GBarWord next = free_reduce(w.substr(0, i) + rule.rhs + w.substr(i + rule.lhs.size()));
            if (next.size() <= max_len) out.push_back(std::move(next));
        }
    }
    return out;
}

enum class VerdictKind : std::uint8_t { Equal, Distinct, Unknown };

struct GBarVerdict {
    VerdictKind kind = VerdictKind::Unknown;
    AbelianImage image1, image2;      // witness when Distinct
    std::size_t budget_spent = 0;
    std::vector<GBarWord> path;       // w1 .. w2 when Equal, each step one rule

    bool equal() const { return kind == VerdictKind::Equal; }
};

inline constexpr std::size_t kDefaultCompareBudget = 200000;
inline constexpr std::size_t kCompareLengthSlack = 8;

namespace detail {

struct SearchSide {
    std::unordered_map<GBarWord, GBarWord> parent;  // word -> predecessor
    std::vector<GBarWord> frontier;
};

inline std::vector<GBarWord> chain_to_root(const SearchSide& side, GBarWord w) {
    std::vector<GBarWord> chain{w};
    while (true) {
        const GBarWord& p = side.parent.at(chain.back());
        if (p == chain.back()) break;
        chain.push_back(p);
    }
    return chain;  // w .. root
}

}  // namespace detail

// Three-tier comparison: identical after free reduction, else separated by
// abelianization, else a bidirectional BFS over the relation graph within
// the node budget. Unknown means the budget ran out, not inequality.
inline GBarVerdict compare(const GBarWord& w1_in, const GBarWord& w2_in,
                           std::size_t budget = kDefaultCompareBudget) {
    const GBarWord w1 = free_reduce(w1_in);
    const GBarWord w2 = free_reduce(w2_in);
    GBarVerdict v;
    v.image1 = abelianize(w1);
    v.image2 = abelianize(w2);
    if (w1 == w2) {
        v.kind = VerdictKind::Equal;
        v.path = {w1};
        return v;
    }
    if (!(v.image1 == v.image2)) {
        v.kind = VerdictKind::Distinct;
        return v;
    }
    const std::size_t max_len = std::max(w1.size(), w2.size()) + kCompareLengthSlack;

    detail::SearchSide fwd, bwd;
    fwd.parent[w1] = w1;
    fwd.frontier = {w1};
    bwd.parent[w2] = w2;
    bwd.frontier = {w2};
    std::size_t visited = 2;

    auto finish = [&](const GBarWord& meet) {
        std::vector<GBarWord> left = detail::chain_to_root(fwd, meet);   // meet .. w1
        std::vector<GBarWord> right = detail::chain_to_root(bwd, meet);  // meet .. w2
        v.kind = VerdictKind::Equal;
        v.path.assign(left.rbegin(), left.rend());
        v.path.insert(v.path.end(), right.begin() + 1, right.end());
        v.budget_spent = visited;
    };

    // A frontier can die without exhausting the search: the empty word has no
    // rewrite neighbors at all, so a meet there must come from the other side.
    while (!fwd.frontier.empty() || !bwd.frontier.empty()) {
        detail::SearchSide& side =
            bwd.frontier.empty() ||
                    (!fwd.frontier.empty() && fwd.frontier.size() <= bwd.frontier.size())
                ? fwd
                : bwd;
        detail::SearchSide& other = (&side == &fwd) ? bwd : fwd;
        std::vector<GBarWord> next;
        for (const GBarWord& w : side.frontier) {
            for (GBarWord& n : gbar_neighbors(w, max_len)) {
                if (side.parent.count(n)) continue;
                side.parent.emplace(n, w);
                ++visited;
                if (other.parent.count(n)) {
                    finish(n);
                    return v;
                }
                if (visited > budget) {
                    v.kind = VerdictKind::Unknown;
                    v.budget_spent = visited;
                    return v;
                }
                next.push_back(std::move(n));
            }
        }
        side.frontier = std::move(next);
    }
    v.kind = VerdictKind::Unknown;  // component exhausted below the length cap
    v.budget_spent = visited;
    return v;
}

inline GBarWord phibar(const LinearGaussDiagram& d) { return ingest(letters_phibar(d)); }

// ASCII rendering, e.g. "c b^-1 b^-1 c".
inline std::string render_gbar(const GBarWord& w) {
    std::string out;
    for (char ch : w) {
        if (!out.empty()) out += ' ';
        const char low = static_cast<char>(ch | 0x20);
        out += low;
        if (ch < 'a') out += "^-1";
    }
    return out;
}

}  // namespace tkw
