// Letter assignment: turns a linear Gauss diagram into the raw word over
// {a, b, b', c, c'}, either with position-based exponents (phi'') or with
// sign-based exponents (phibar). Words are emitted unreduced; reduction is
// the group modules' job.
#pragma once

#include <string>
#include <vector>

#include "tkw/gauss.hpp"

namespace tkw {

enum class Symbol : std::uint8_t { A, B, Bp, C, Cp };

struct Letter {
    Symbol symbol = Symbol::A;
    int exponent = +1;  // +1 or -1

    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

namespace detail {
inline Symbol odd_symbol(Role role, ChordType type) {
    if (role == Role::Over) return type == ChordType::First ? Symbol::B : Symbol::Bp;
    return type == ChordType::First ? Symbol::C : Symbol::Cp;
}
}  // namespace detail

// Position scheme: even chords give a (exponent fixed at +1, a^2 = 1);
// odd chords give b/b'/c/c' with exponent -1 at odd positions.
inline Word letters_phi2(const LinearGaussDiagram& d) {
    const auto cls = classify_all(d);
    Word w;
    w.reserve(d.endpoint_count());
    for (std::size_t i = 0; i < d.endpoint_count(); ++i) {
        const EndpointRef& e = d.endpoint_sequence()[i];
        const ChordClassification& c = cls[static_cast<std::size_t>(e.chord_id) - 1];
        if (c.parity == Parity::Even) {
            w.push_back(Letter{Symbol::A, +1});
            continue;
        }
        const int pos = static_cast<int>(i) + 1;
        const int exp = (pos % 2 != 0) ? -1 : +1;
        w.push_back(Letter{detail::odd_symbol(e.role, c.type), exp});
    }
    return w;
}

// Sign scheme: over endpoints carry the chord sign i(d) as exponent,
// under endpoints carry -i(d); the symbol follows parity and type.
inline Word letters_phibar(const LinearGaussDiagram& d) {
    const auto cls = classify_all(d);
    Word w;
    w.reserve(d.endpoint_count());
    for (const EndpointRef& e : d.endpoint_sequence()) {
        const Chord& ch = d.chord(e.chord_id);
        const ChordClassification& c = cls[static_cast<std::size_t>(e.chord_id) - 1];
        const int exp = (e.role == Role::Over) ? ch.sign : -ch.sign;
        Symbol s = (c.parity == Parity::Even) ? Symbol::A : detail::odd_symbol(e.role, c.type);
        w.push_back(Letter{s, exp});
    }
    return w;
}

inline std::string render(const Letter& l) {
    static const char* names[] = {"a", "b", "b'", "c", "c'"};
    std::string out = names[static_cast<int>(l.symbol)];
    if (l.exponent == -1) out += "^-1";
    return out;
}

// ASCII rendering, e.g. "a b' c^-1 c'^-1".
inline std::string render(const Word& w) {
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += ' ';
        out += render(l);
    }
    return out;
}

}  // namespace tkw
