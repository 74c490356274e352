// A generating set of oriented Reidemeister moves on linear Gauss diagrams:
// two first moves (R1a, R1b), one second move (R2a, parallel strands,
// opposite signs) and one third move (R3a). Schemas are data: the local
// endpoint/role/sign patterns live in small tables, enumeration and
// application interpret them.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <vector>

#include "tkw/gauss.hpp"

namespace tkw {

enum class MoveKind : std::uint8_t { R1a, R1b, R2a, R3a };
enum class MoveDirection : std::uint8_t { Insert, Delete, Forward, Backward };

class InvalidSite : public GaussCodeError {
  public:
    using GaussCodeError::GaussCodeError;
};

// R1 kinks: role of the first-met endpoint and the crossing sign.
struct R1Schema {
    MoveKind kind;
    Role first_role;
    int sign;
};

inline constexpr std::array<R1Schema, 2> kR1Schemas = {{
    {MoveKind::R1a, Role::Over, +1},
    {MoveKind::R1b, Role::Under, -1},
}};

// R3a: three chords x, y, z meeting in three adjacent endpoint pairs.
// Derived from the planar move with all strands oriented the same way and
// one strand sliding under the crossing of the other two:
//   site on the sliding strand:   (U_x, U_y)
//   site on the middle strand:    (O_x, O_z)
//   site on the top strand:       (U_z, O_y)
// with signs (x, y, z) = (+1, -1, +1). The move swaps each pair in place.
struct R3PairTemplate {
    int first_chord;   // 0 = x, 1 = y, 2 = z
    Role first_role;
    int second_chord;
    Role second_role;
};

inline constexpr std::array<R3PairTemplate, 3> kR3Pairs = {{
    {0, Role::Under, 1, Role::Under},
    {0, Role::Over, 2, Role::Over},
    {2, Role::Under, 1, Role::Over},
}};

inline constexpr std::array<int, 3> kR3Signs = {+1, -1, +1};

struct MoveApplication {
    MoveKind kind = MoveKind::R1a;
    MoveDirection direction = MoveDirection::Insert;
    // R1/R2 inserts: gap1 (and gap2 for R2) are insertion gaps 0..2m in the
    // source diagram, gap1 <= gap2; over_first picks which pair comes first.
    int gap1 = 0;
    int gap2 = 0;
    bool over_first = true;
    // Deletes: the bound chord ids (R1 uses chords[0], R2 chords[0..1]).
    // R3: chords[i] is the id bound to template chord i (x, y, z) and
    // sites[j] is the 1-based left endpoint index of template pair j.
    std::array<int, 3> chords{};
    std::array<int, 3> sites{};

    bool operator==(const MoveApplication&) const = default;
};

namespace detail {

inline std::unordered_map<int, int> sign_map(const LinearGaussDiagram& d) {
    std::unordered_map<int, int> s;
    for (const Chord& c : d.chords()) s[c.id] = c.sign;
    return s;
}

// Endpoint of a given chord/role, as (position, found).
inline int role_pos(const Chord& c, Role r) { return r == Role::Over ? c.over_pos : c.under_pos; }

// Checks that the three bound chords/sites match the R3 template in the
// given direction (Forward = template order within each pair, Backward =
// reversed order).
inline bool r3_matches(const LinearGaussDiagram& d, const MoveApplication& app) {
    if (app.kind != MoveKind::R3a) return false;
    const bool fwd = app.direction == MoveDirection::Forward;
    std::array<bool, 3> site_used{};
    for (int t = 0; t < 3; ++t) {
        const int cid = app.chords[static_cast<std::size_t>(t)];
        if (cid < 1 || static_cast<std::size_t>(cid) > d.chord_count()) return false;
        if (d.chord(cid).sign != kR3Signs[static_cast<std::size_t>(t)]) return false;
    }
    if (app.chords[0] == app.chords[1] || app.chords[0] == app.chords[2] ||
        app.chords[1] == app.chords[2])
        return false;
    for (int j = 0; j < 3; ++j) {
        const R3PairTemplate& tpl = kR3Pairs[static_cast<std::size_t>(j)];
        const int s = app.sites[static_cast<std::size_t>(j)];
        if (s < 1 || static_cast<std::size_t>(s) + 1 > d.endpoint_count()) return false;
        EndpointRef first{app.chords[static_cast<std::size_t>(tpl.first_chord)], tpl.first_role};
        EndpointRef second{app.chords[static_cast<std::size_t>(tpl.second_chord)], tpl.second_role};
        if (!fwd) std::swap(first, second);
        if (!(d.endpoint(s) == first && d.endpoint(s + 1) == second)) return false;
        (void)site_used;
    }
    // sites must be pairwise disjoint adjacent pairs
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (std::abs(app.sites[static_cast<std::size_t>(i)] - app.sites[static_cast<std::size_t>(j)]) < 2)
                return false;
    return true;
}

}  // namespace detail

inline std::vector<MoveApplication> enumerate_moves(const LinearGaussDiagram& d) {
    std::vector<MoveApplication> out;
    const int n = static_cast<int>(d.endpoint_count());

    // R1 inserts at every gap.
    for (const R1Schema& sch : kR1Schemas)
        for (int g = 0; g <= n; ++g) {
            MoveApplication app;
            app.kind = sch.kind;
            app.direction = MoveDirection::Insert;
            app.gap1 = g;
            out.push_back(app);
        }

    // R2 inserts at every gap pair, over-strand site first or second.
    for (bool over_first : {true, false})
        for (int g1 = 0; g1 <= n; ++g1)
            for (int g2 = g1; g2 <= n; ++g2) {
                MoveApplication app;
                app.kind = MoveKind::R2a;
                app.direction = MoveDirection::Insert;
                app.gap1 = g1;
                app.gap2 = g2;
                app.over_first = over_first;
                out.push_back(app);
            }

    // R1 deletes: isolated chords with adjacent endpoints matching a schema.
    for (const Chord& c : d.chords()) {
        if (std::abs(c.over_pos - c.under_pos) != 1) continue;
        const Role first = (c.over_pos < c.under_pos) ? Role::Over : Role::Under;
        for (const R1Schema& sch : kR1Schemas) {
            if (sch.first_role != first || sch.sign != c.sign) continue;
            MoveApplication app;
            app.kind = sch.kind;
            app.direction = MoveDirection::Delete;
            app.chords[0] = c.id;
            out.push_back(app);
        }
    }

    // R2 deletes: adjacent O pair plus matching adjacent U pair, signs (+,-).
    for (int i = 1; i < n; ++i) {
        const EndpointRef& e1 = d.endpoint(i);
        const EndpointRef& e2 = d.endpoint(i + 1);
        if (e1.role != Role::Over || e2.role != Role::Over) continue;
        if (e1.chord_id == e2.chord_id) continue;
        const Chord& u = d.chord(e1.chord_id);
        const Chord& v = d.chord(e2.chord_id);
        if (u.sign != +1 || v.sign != -1) continue;
        if (v.under_pos != u.under_pos + 1) continue;
        MoveApplication app;
        app.kind = MoveKind::R2a;
        app.direction = MoveDirection::Delete;
        app.chords[0] = u.id;
        app.chords[1] = v.id;
        out.push_back(app);
    }

    // R3: adjacent endpoint pairs of distinct chords, three of them forming
    // a triangle on three chords, matching the template in either direction.
    std::vector<std::pair<int, std::array<int, 2>>> pairs;  // left pos, chord ids
    for (int i = 1; i < n; ++i) {
        const EndpointRef& e1 = d.endpoint(i);
        const EndpointRef& e2 = d.endpoint(i + 1);
        if (e1.chord_id != e2.chord_id) pairs.push_back({i, {e1.chord_id, e2.chord_id}});
    }
    const std::size_t np = pairs.size();
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i + 1; j < np; ++j)
            for (std::size_t k = j + 1; k < np; ++k) {
                // exactly three chords, each in exactly two of the pairs
                std::array<int, 6> ids = {pairs[i].second[0], pairs[i].second[1],
                                          pairs[j].second[0], pairs[j].second[1],
                                          pairs[k].second[0], pairs[k].second[1]};
                std::array<int, 6> sorted = ids;
                std::sort(sorted.begin(), sorted.end());
                if (sorted[0] != sorted[1] || sorted[2] != sorted[3] || sorted[4] != sorted[5])
                    continue;
                if (sorted[1] == sorted[2] || sorted[3] == sorted[4]) continue;
                const std::array<int, 3> tri = {sorted[0], sorted[2], sorted[4]};
                // try every binding of (x, y, z) to the triangle, both directions
                std::array<int, 3> perm = {0, 1, 2};
                std::sort(perm.begin(), perm.end());
                do {
                    MoveApplication app;
                    app.kind = MoveKind::R3a;
                    app.chords = {tri[static_cast<std::size_t>(perm[0])],
                                  tri[static_cast<std::size_t>(perm[1])],
                                  tri[static_cast<std::size_t>(perm[2])]};
                    for (MoveDirection dir : {MoveDirection::Forward, MoveDirection::Backward}) {
                        app.direction = dir;
                        // bind sites: template pair j involves template chords
                        // (first, second); find which of the three pairs holds them
                        bool ok = true;
                        std::array<std::size_t, 3> pick = {i, j, k};
                        std::array<bool, 3> used{};
                        for (int t = 0; t < 3 && ok; ++t) {
                            const R3PairTemplate& tpl = kR3Pairs[static_cast<std::size_t>(t)];
                            int want1 = app.chords[static_cast<std::size_t>(tpl.first_chord)];
                            int want2 = app.chords[static_cast<std::size_t>(tpl.second_chord)];
                            if (dir == MoveDirection::Backward) std::swap(want1, want2);
                            bool found = false;
                            for (int p = 0; p < 3; ++p) {
                                if (used[static_cast<std::size_t>(p)]) continue;
                                const auto& pr = pairs[pick[static_cast<std::size_t>(p)]];
                                if (pr.second[0] == want1 && pr.second[1] == want2) {
                                    app.sites[static_cast<std::size_t>(t)] = pr.first;
                                    used[static_cast<std::size_t>(p)] = true;
                                    found = true;
                                    break;
                                }
                            }
                            ok = found;
                        }
                        if (ok && detail::r3_matches(d, app)) out.push_back(app);
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
    return out;
}

inline LinearGaussDiagram apply_move(const LinearGaussDiagram& d, const MoveApplication& app) {
    const int n = static_cast<int>(d.endpoint_count());
    std::vector<EndpointRef> eps = d.endpoint_sequence();
    auto signs = detail::sign_map(d);
    const int fresh1 = static_cast<int>(d.chord_count()) + 1;
    const int fresh2 = fresh1 + 1;

    switch (app.direction) {
        case MoveDirection::Insert: {
            if (app.kind == MoveKind::R1a || app.kind == MoveKind::R1b) {
                if (app.gap1 < 0 || app.gap1 > n) throw InvalidSite("R1 insert gap out of range");
                const R1Schema& sch = kR1Schemas[app.kind == MoveKind::R1a ? 0 : 1];
                const Role r1 = sch.first_role;
                const Role r2 = (r1 == Role::Over) ? Role::Under : Role::Over;
                eps.insert(eps.begin() + app.gap1,
                           {EndpointRef{fresh1, r1}, EndpointRef{fresh1, r2}});
                signs[fresh1] = sch.sign;
            } else if (app.kind == MoveKind::R2a) {
                if (app.gap1 < 0 || app.gap2 < app.gap1 || app.gap2 > n)
                    throw InvalidSite("R2 insert gaps out of range");
                const Role first = app.over_first ? Role::Over : Role::Under;
                const Role second = app.over_first ? Role::Under : Role::Over;
                // second site first so gap1 stays valid
                eps.insert(eps.begin() + app.gap2,
                           {EndpointRef{fresh1, second}, EndpointRef{fresh2, second}});
                eps.insert(eps.begin() + app.gap1,
                           {EndpointRef{fresh1, first}, EndpointRef{fresh2, first}});
                signs[fresh1] = +1;
                signs[fresh2] = -1;
            } else {
                throw InvalidSite("R3 has no insert direction");
            }
            break;
        }
        case MoveDirection::Delete: {
            std::vector<int> victims;
            if (app.kind == MoveKind::R1a || app.kind == MoveKind::R1b) {
                const Chord& c = d.chord(app.chords[0]);
                const R1Schema& sch = kR1Schemas[app.kind == MoveKind::R1a ? 0 : 1];
                const bool adjacent = std::abs(c.over_pos - c.under_pos) == 1;
                const Role first = (c.over_pos < c.under_pos) ? Role::Over : Role::Under;
                if (!adjacent || first != sch.first_role || c.sign != sch.sign)
                    throw InvalidSite("R1 delete pattern absent");
                victims = {c.id};
            } else if (app.kind == MoveKind::R2a) {
                const Chord& u = d.chord(app.chords[0]);
                const Chord& v = d.chord(app.chords[1]);
                if (u.id == v.id || u.sign != +1 || v.sign != -1 ||
                    v.over_pos != u.over_pos + 1 || v.under_pos != u.under_pos + 1)
                    throw InvalidSite("R2 delete pattern absent");
                victims = {u.id, v.id};
            } else {
                throw InvalidSite("R3 has no delete direction");
            }
            std::vector<EndpointRef> kept;
            for (const EndpointRef& e : eps)
                if (std::find(victims.begin(), victims.end(), e.chord_id) == victims.end())
                    kept.push_back(e);
            eps = std::move(kept);
            break;
        }
        case MoveDirection::Forward:
        case MoveDirection::Backward: {
            if (!detail::r3_matches(d, app)) throw InvalidSite("R3 pattern absent");
            for (int s : app.sites)
                std::swap(eps[static_cast<std::size_t>(s) - 1], eps[static_cast<std::size_t>(s)]);
            break;
        }
    }
    return LinearGaussDiagram::from_endpoints(eps, signs);
}

// Deterministic (seeded) move walk, biased toward insertions so diagrams
// grow instead of collapsing back to the empty one.
inline std::vector<LinearGaussDiagram> random_walk(const LinearGaussDiagram& start, int steps,
                                                   std::uint64_t seed,
                                                   double insert_bias = 0.7) {
    std::mt19937_64 rng(seed);
    std::vector<LinearGaussDiagram> traj{start};
    for (int s = 0; s < steps; ++s) {
        auto moves = enumerate_moves(traj.back());
        std::vector<MoveApplication> inserts, others;
        for (const MoveApplication& m : moves)
            (m.direction == MoveDirection::Insert ? inserts : others).push_back(m);
        const bool pick_insert =
            others.empty() ||
            (!inserts.empty() &&
             static_cast<double>(rng() % 1000000) < insert_bias * 1000000.0);
        const auto& pool = pick_insert ? inserts : others;
        const MoveApplication& mv = pool[rng() % pool.size()];
        traj.push_back(apply_move(traj.back(), mv));
    }
    return traj;
}

// Random abstract diagram: m <= max_chords chords with uniformly shuffled
// endpoint slots, random roles and signs.
inline LinearGaussDiagram random_diagram(int max_chords, std::mt19937_64& rng) {
    const int m = max_chords > 0 ? static_cast<int>(rng() % static_cast<std::uint64_t>(max_chords + 1)) : 0;
    std::vector<int> slots;
    for (int i = 1; i <= m; ++i) {
        slots.push_back(i);
        slots.push_back(i);
    }
    for (std::size_t i = slots.size(); i > 1; --i)
        std::swap(slots[i - 1], slots[rng() % i]);
    std::vector<EndpointRef> eps;
    std::unordered_map<int, int> signs;
    std::unordered_map<int, Role> first_role;
    for (int id : slots) {
        auto it = first_role.find(id);
        if (it == first_role.end()) {
            Role r = (rng() & 1) ? Role::Over : Role::Under;
            first_role[id] = r;
            signs[id] = (rng() & 1) ? +1 : -1;
            eps.push_back(EndpointRef{id, r});
        } else {
            eps.push_back(EndpointRef{id, it->second == Role::Over ? Role::Under : Role::Over});
        }
    }
    return LinearGaussDiagram::from_endpoints(eps, signs);
}

inline const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::R1a: return "R1a";
        case MoveKind::R1b: return "R1b";
        case MoveKind::R2a: return "R2a";
        case MoveKind::R3a: return "R3a";
    }
    return "?";
}

inline const char* to_string(MoveDirection d) {
    switch (d) {
        case MoveDirection::Insert: return "insert";
        case MoveDirection::Delete: return "delete";
        case MoveDirection::Forward: return "forward";
        case MoveDirection::Backward: return "backward";
    }
    return "?";
}

}  // namespace tkw
