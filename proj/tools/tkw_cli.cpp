// tkw: compute and compare the two group-valued invariants of long knots in
// the full torus from linear Gauss diagrams, apply Reidemeister moves, and
// fuzz the invariance properties.
//
// Exit codes: 0 equal/pass, 1 distinct, 2 unknown, 3 property violation,
// 64 usage or parse error.
#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "tkw/g2.hpp"
#include "tkw/gauss.hpp"
#include "tkw/gbar.hpp"
#include "tkw/moves.hpp"
#include "tkw/word.hpp"

namespace {

using nlohmann::json;

constexpr int kExitEqual = 0;
constexpr int kExitDistinct = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitViolation = 3;
constexpr int kExitUsage = 64;

// An input is either a literal Gauss code or a path to a corpus file
// (one diagram per line, '#' starts a comment line).
std::vector<std::string> load_codes(const std::string& input) {
    if (!std::filesystem::exists(input)) return {input};
    std::ifstream in(input);
    if (!in) throw std::runtime_error("cannot read " + input);
    std::vector<std::string> codes;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        codes.push_back(line);
    }
    return codes;
}

tkw::LinearGaussDiagram load_first(const std::string& input) {
    auto codes = load_codes(input);
    if (codes.empty()) throw std::runtime_error("no diagram in " + input);
    return tkw::parse_gauss_code(codes.front());
}

std::size_t default_budget() {
    if (const char* env = std::getenv("TKW_BUDGET")) {
        long long v = std::atoll(env);
        if (v >= 0) return static_cast<std::size_t>(v);
    }
    return tkw::kDefaultCompareBudget;
}

struct DiagramStats {
    std::size_t m = 0;
    std::size_t odd = 0;
    std::size_t first_type = 0;
    std::size_t second_type = 0;
};

DiagramStats stats_of(const tkw::LinearGaussDiagram& d) {
    DiagramStats s;
    s.m = d.chord_count();
    for (const auto& c : tkw::classify_all(d)) {
        if (c.parity == tkw::Parity::Odd) ++s.odd;
        if (c.type == tkw::ChordType::First) ++s.first_type;
        if (c.type == tkw::ChordType::Second) ++s.second_type;
    }
    return s;
}

json stats_json(const DiagramStats& s) {
    return json{{"m", s.m}, {"odd_chords", s.odd}, {"first_type", s.first_type}, {"second_type", s.second_type}};
}

json abelian_json(const tkw::AbelianImage& img) { return json::array({img.s_a, img.s_b, img.s_c}); }

int cmd_parse(const std::string& input, bool as_json) {
    for (const std::string& code : load_codes(input)) {
        tkw::LinearGaussDiagram d = tkw::parse_gauss_code(code);
        const auto cls = tkw::classify_all(d);
        const DiagramStats s = stats_of(d);
        if (as_json) {
            json j{{"code", tkw::serialize(d)}, {"stats", stats_json(s)}};
            j["chords"] = json::array();
            for (const tkw::Chord& c : d.chords()) {
                const auto& cc = cls[static_cast<std::size_t>(c.id) - 1];
                j["chords"].push_back(json{
                    {"id", c.id},
                    {"over_pos", c.over_pos},
                    {"under_pos", c.under_pos},
                    {"sign", c.sign},
                    {"parity", cc.parity == tkw::Parity::Odd ? "odd" : "even"},
                    {"type", cc.type == tkw::ChordType::None
                                 ? "none"
                                 : (cc.type == tkw::ChordType::First ? "first" : "second")},
                });
            }
            j["phi2_letters"] = tkw::render(tkw::letters_phi2(d));
            j["phibar_letters"] = tkw::render(tkw::letters_phibar(d));
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "m = " << s.m << "\n";
            for (const tkw::Chord& c : d.chords()) {
                const auto& cc = cls[static_cast<std::size_t>(c.id) - 1];
                std::cout << "chord " << c.id << ": O@" << c.over_pos << " U@" << c.under_pos
                          << " sign " << (c.sign > 0 ? '+' : '-') << "  "
                          << (cc.parity == tkw::Parity::Odd ? "odd" : "even");
                if (cc.type == tkw::ChordType::First) std::cout << " (first type)";
                if (cc.type == tkw::ChordType::Second) std::cout << " (second type)";
                std::cout << "\n";
            }
            std::cout << "phi''   letters: " << tkw::render(tkw::letters_phi2(d)) << "\n";
            std::cout << "phibar  letters: " << tkw::render(tkw::letters_phibar(d)) << "\n";
        }
    }
    return kExitEqual;
}

int cmd_word(const std::string& input, const std::string& scheme) {
    for (const std::string& code : load_codes(input)) {
        tkw::LinearGaussDiagram d = tkw::parse_gauss_code(code);
        const tkw::Word w = scheme == "phi2" ? tkw::letters_phi2(d) : tkw::letters_phibar(d);
        std::cout << tkw::render(w) << "\n";
    }
    return kExitEqual;
}

int cmd_invariant(const std::string& input, const std::string& scheme, bool as_json) {
    for (const std::string& code : load_codes(input)) {
        tkw::LinearGaussDiagram d = tkw::parse_gauss_code(code);
        const DiagramStats s = stats_of(d);
        if (scheme == "phi2") {
            const tkw::Word raw = tkw::letters_phi2(d);
            const tkw::G2Element g = tkw::phi2(d);
            if (as_json) {
                json j{{"scheme", "phi2"},
                       {"raw_word", tkw::render(raw)},
                       {"reduced", json::parse(tkw::to_json_string(g))},
                       {"stats", stats_json(s)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "raw word: " << tkw::render(raw) << "\n";
                std::cout << "phi''    : " << tkw::render(g) << "\n";
            }
        } else {
            const tkw::Word raw = tkw::letters_phibar(d);
            const tkw::GBarWord w = tkw::phibar(d);
            const tkw::AbelianImage img = tkw::abelianize(w);
            if (as_json) {
                json j{{"scheme", "phibar"},
                       {"raw_word", tkw::render(raw)},
                       {"reduced", tkw::render_gbar(w)},
                       {"abelianization", abelian_json(img)},
                       {"stats", stats_json(s)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "raw word : " << tkw::render(raw) << "\n";
                std::cout << "phibar   : " << (w.empty() ? "1" : tkw::render_gbar(w)) << "\n";
                std::cout << "abelianization: (" << img.s_a << ", " << img.s_b << ", " << img.s_c
                          << ")\n";
            }
        }
    }
    return kExitEqual;
}

int cmd_compare(const std::string& in1, const std::string& in2, const std::string& scheme,
                std::size_t budget, bool closed, bool as_json) {
    const tkw::LinearGaussDiagram d1 = load_first(in1);
    const tkw::LinearGaussDiagram d2 = load_first(in2);
    if (scheme == "phi2") {
        const tkw::G2Element g1 = tkw::phi2(d1);
        const tkw::G2Element g2 = tkw::phi2(d2);
        const bool eq = closed ? tkw::conjugate_equal(g1, g2) : (g1 == g2);
        if (as_json)
            std::cout << json{{"verdict", eq ? "equal" : "distinct"}}.dump(2) << "\n";
        else
            std::cout << (eq ? "equal" : "distinct") << "\n";
        return eq ? kExitEqual : kExitDistinct;
    }
    const tkw::GBarVerdict v = tkw::compare(tkw::phibar(d1), tkw::phibar(d2), budget);
    json j{{"budget_spent", v.budget_spent}};
    int rc = kExitUnknown;
    switch (v.kind) {
        case tkw::VerdictKind::Equal:
            j["verdict"] = "equal";
            rc = kExitEqual;
            break;
        case tkw::VerdictKind::Distinct:
            j["verdict"] = "distinct";
            j["witness"] = json{{"abelianization1", abelian_json(v.image1)},
                                {"abelianization2", abelian_json(v.image2)}};
            rc = kExitDistinct;
            break;
        case tkw::VerdictKind::Unknown:
            j["verdict"] = "unknown";
            rc = kExitUnknown;
            break;
    }
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j["verdict"].get<std::string>() << "\n";
    return rc;
}

std::string describe(const tkw::MoveApplication& m) {
    std::ostringstream os;
    os << tkw::to_string(m.kind) << ":" << tkw::to_string(m.direction);
    switch (m.direction) {
        case tkw::MoveDirection::Insert:
            os << "@" << m.gap1;
            if (m.kind == tkw::MoveKind::R2a)
                os << "," << m.gap2 << (m.over_first ? ",over" : ",under");
            break;
        case tkw::MoveDirection::Delete:
            os << "@c" << m.chords[0];
            if (m.kind == tkw::MoveKind::R2a) os << ",c" << m.chords[1];
            break;
        default:
            os << "@c" << m.chords[0] << ",c" << m.chords[1] << ",c" << m.chords[2];
            break;
    }
    return os.str();
}

// Move specs: "R1a:insert@3", "R1a:delete@c2", "R2a:insert@3,5[,under]",
// "R2a:delete@c1,c2", "R3a@c1,c2,c3".
std::optional<tkw::MoveApplication> find_move(const tkw::LinearGaussDiagram& d,
                                              const std::string& spec) {
    for (const tkw::MoveApplication& m : tkw::enumerate_moves(d)) {
        if (describe(m) == spec) return m;
        // tolerate shorthand forms
        if (m.kind == tkw::MoveKind::R3a) {
            std::ostringstream os;
            os << "R3a@c" << m.chords[0] << ",c" << m.chords[1] << ",c" << m.chords[2];
            if (os.str() == spec) return m;
        }
        if (m.kind == tkw::MoveKind::R2a && m.direction == tkw::MoveDirection::Insert &&
            m.over_first) {
            std::ostringstream os;
            os << "R2a:insert@" << m.gap1 << "," << m.gap2;
            if (os.str() == spec) return m;
        }
    }
    return std::nullopt;
}

int cmd_moves(const std::string& input, const std::string& apply_spec, bool as_json) {
    tkw::LinearGaussDiagram d = load_first(input);
    if (apply_spec.empty()) {
        const auto moves = tkw::enumerate_moves(d);
        if (as_json) {
            json j = json::array();
            for (const auto& m : moves) j.push_back(describe(m));
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& m : moves) std::cout << describe(m) << "\n";
        }
        return kExitEqual;
    }
    auto m = find_move(d, apply_spec);
    if (!m) {
        std::cerr << "move '" << apply_spec << "' does not apply to this diagram\n";
        return kExitUsage;
    }
    std::cout << tkw::serialize(tkw::apply_move(d, *m)) << "\n";
    return kExitEqual;
}

int cmd_reverse(const std::string& input) {
    for (const std::string& code : load_codes(input))
        std::cout << tkw::serialize(tkw::reverse_diagram(tkw::parse_gauss_code(code))) << "\n";
    return kExitEqual;
}

int cmd_fuzz(std::uint64_t seed, int iters, int max_moves, int max_chords,
             const std::string& scheme, std::size_t budget) {
    for (int it = 0; it < iters; ++it) {
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(it));
        const tkw::LinearGaussDiagram start = tkw::random_diagram(max_chords, rng);
        const int steps = max_moves > 0 ? static_cast<int>(rng() % static_cast<std::uint64_t>(max_moves + 1)) : 0;
        const auto traj = tkw::random_walk(start, steps, rng());
        auto report = [&](const char* what, std::size_t step) {
            std::cout << "FAIL iter " << it << " step " << step << ": " << what << "\n";
            std::cout << "  reproduce: tkw fuzz --seed " << seed << " --iters " << (it + 1)
                      << " --max-moves " << max_moves << " --scheme " << scheme << "\n";
            std::cout << "  trajectory:\n";
            for (const auto& d : traj) std::cout << "    " << tkw::serialize(d) << "\n";
        };
        if (scheme == "phi2") {
            const tkw::G2Element ref = tkw::phi2(traj.front());
            for (std::size_t s = 1; s < traj.size(); ++s)
                if (!(tkw::phi2(traj[s]) == ref)) {
                    report("phi'' changed along a move", s);
                    return kExitViolation;
                }
        } else {
            const tkw::AbelianImage ref = tkw::abelianize(tkw::phibar(traj.front()));
            for (std::size_t s = 1; s < traj.size(); ++s) {
                if (!(tkw::abelianize(tkw::phibar(traj[s])) == ref)) {
                    report("abelianized phibar changed along a move", s);
                    return kExitViolation;
                }
                const auto verdict =
                    tkw::compare(tkw::phibar(traj[s - 1]), tkw::phibar(traj[s]), budget);
                if (!verdict.equal()) {
                    report(verdict.kind == tkw::VerdictKind::Distinct
                               ? "phibar distinct across a single move"
                               : "phibar comparison exhausted its budget on a single move",
                           s);
                    return kExitViolation;
                }
            }
        }
    }
    std::cout << "fuzz: " << iters << " iterations passed (scheme " << scheme << ", seed " << seed
              << ")\n";
    return kExitEqual;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"group-valued invariants of long knots in the full torus"};
    app.require_subcommand(1);

    std::string input, input2, scheme = "phi2", apply_spec;
    bool as_json = false, closed = false;
    std::size_t budget = default_budget();
    std::uint64_t seed = 0;
    int iters = 100, max_moves = 10, max_chords = 8;

    auto add_scheme = [&scheme](CLI::App* c) {
        c->add_option("--scheme", scheme, "phi2 or phibar")
            ->check(CLI::IsMember({"phi2", "phibar"}));
    };

    CLI::App* parse = app.add_subcommand("parse", "parse and classify a diagram");
    parse->add_option("input", input)->required();
    parse->add_flag("--json", as_json);

    CLI::App* word = app.add_subcommand("word", "raw letter word of a diagram");
    word->add_option("input", input)->required();
    add_scheme(word);

    CLI::App* invariant = app.add_subcommand("invariant", "compute an invariant");
    invariant->add_option("input", input)->required();
    add_scheme(invariant);
    invariant->add_flag("--json", as_json);

    CLI::App* cmp = app.add_subcommand("compare", "compare two diagrams");
    cmp->add_option("input1", input)->required();
    cmp->add_option("input2", input2)->required();
    add_scheme(cmp);
    cmp->add_option("--budget", budget, "rewriting search budget (phibar)");
    cmp->add_flag("--closed", closed, "compare phi2 up to conjugacy");
    cmp->add_flag("--json", as_json);

    CLI::App* moves = app.add_subcommand("moves", "enumerate or apply Reidemeister moves");
    moves->add_option("input", input)->required();
    moves->add_option("--apply", apply_spec, "move spec, e.g. R1a:insert@3 or R3a@c1,c2,c3");
    moves->add_flag("--json", as_json);

    CLI::App* rev = app.add_subcommand("reverse", "reverse a diagram's orientation");
    rev->add_option("input", input)->required();

    CLI::App* fuzz = app.add_subcommand("fuzz", "randomized invariance testing");
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--iters", iters);
    fuzz->add_option("--max-moves", max_moves);
    fuzz->add_option("--max-chords", max_chords);
    fuzz->add_option("--budget", budget);
    add_scheme(fuzz);

    CLI11_PARSE(app, argc, argv);

    try {
        if (parse->parsed()) return cmd_parse(input, as_json);
        if (word->parsed()) return cmd_word(input, scheme);
        if (invariant->parsed()) return cmd_invariant(input, scheme, as_json);
        if (cmp->parsed()) return cmd_compare(input, input2, scheme, budget, closed, as_json);
        if (moves->parsed()) return cmd_moves(input, apply_spec, as_json);
        if (rev->parsed()) return cmd_reverse(input);
        if (fuzz->parsed()) return cmd_fuzz(seed, iters, max_moves, max_chords, scheme, budget);
    } catch (const tkw::GaussCodeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
