// Test-only oracle for G'' = <a,d,e | a^2=1, de=ed>: breadth-first search
// over elementary rewrites of ADE strings (alphabet a d D e E, uppercase =
// inverse), independent of the normal-form code it is used to check.
#pragma once

#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

namespace tkwtest {

inline bool commuting_pair(char x, char y) {
    auto is_d = [](char c) { return c == 'd' || c == 'D'; };
    auto is_e = [](char c) { return c == 'e' || c == 'E'; };
    return (is_d(x) && is_e(y)) || (is_e(x) && is_d(y));
}

inline std::vector<std::string> ade_rewrites(const std::string& w, std::size_t max_len) {
    std::vector<std::string> out;
    // deletions of inverse pairs
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const char x = w[i], y = w[i + 1];
        const bool cancel = (x == 'a' && y == 'a') || (x != y && (x | 0x20) == (y | 0x20));
        if (cancel) out.push_back(w.substr(0, i) + w.substr(i + 2));
        if (commuting_pair(x, y)) {
            std::string s = w;
            std::swap(s[i], s[i + 1]);
            out.push_back(std::move(s));
        }
    }
    // insertions of inverse pairs
    if (w.size() + 2 <= max_len) {
        static const char* pairs[] = {"aa", "dD", "Dd", "eE", "Ee"};
        for (std::size_t i = 0; i <= w.size(); ++i)
            for (const char* p : pairs) out.push_back(w.substr(0, i) + p + w.substr(i));
    }
    return out;
}

// True when the oracle connects u to v within the budget. Rewrites are
// sound, so a `true` answer proves equality in G''.
inline bool ade_oracle_connects(const std::string& u, const std::string& v, std::size_t max_len,
                                std::size_t budget = 2000000) {
    if (u == v) return true;
    std::unordered_set<std::string> seen{u};
    std::deque<std::string> queue{u};
    while (!queue.empty() && seen.size() < budget) {
        const std::string w = queue.front();
        queue.pop_front();
        for (std::string& n : ade_rewrites(w, max_len)) {
            if (n == v) return true;
            if (seen.insert(n).second) queue.push_back(std::move(n));
        }
    }
    return false;
}

// Collects every word of length <= collect_len reachable from u.
inline std::unordered_set<std::string> ade_reachable(const std::string& u, std::size_t max_len,
                                                     std::size_t collect_len,
                                                     std::size_t budget = 2000000) {
    std::unordered_set<std::string> seen{u};
    std::unordered_set<std::string> found;
    if (u.size() <= collect_len) found.insert(u);
    std::deque<std::string> queue{u};
    while (!queue.empty() && seen.size() < budget) {
        const std::string w = queue.front();
        queue.pop_front();
        for (std::string& n : ade_rewrites(w, max_len)) {
            if (seen.insert(n).second) {
                if (n.size() <= collect_len) found.insert(n);
                queue.push_back(n);
            }
        }
    }
    return found;
}

}  // namespace tkwtest
