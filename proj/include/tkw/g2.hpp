// Exact computation in G'' = <a, d, e | a^2 = 1, de = ed>, the free product
// Z_2 * (Z + Z). Elements are kept in free-product normal form
//   (p0,q0) a (p1,q1) a ... a (pk,qk)
// with the interior lattice blocks nonzero; head and trailing blocks may be
// zero. Lattice coordinates are arbitrary-precision.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "tkw/gauss.hpp"
#include "tkw/word.hpp"

namespace tkw {

using BigInt = boost::multiprecision::cpp_int;

struct Lattice {
    BigInt d{0};  // exponent of d
    BigInt e{0};  // exponent of e

    bool is_zero() const { return d == 0 && e == 0; }
    Lattice operator+(const Lattice& o) const { return Lattice{d + o.d, e + o.e}; }
    Lattice operator-() const { return Lattice{-d, -e}; }
    bool operator==(const Lattice&) const = default;
};

enum class ADEGen : std::uint8_t { A, D, E };

struct ADELetter {
    ADEGen gen = ADEGen::A;
    int exp = +1;  // ignored for a (a = a^-1)

    bool operator==(const ADELetter&) const = default;
};

using ADEWord = std::vector<ADELetter>;

// Substitution b = ea, b' = e^-1 a, c = d^-1 e a, c' = e^-1 d a; inverses
// expand formally with a^-1 = a.
inline ADEWord to_ade(const Word& w) {
    ADEWord out;
    auto emit = [&out](ADEGen g, int e) { out.push_back(ADELetter{g, e}); };
    for (const Letter& l : w) {
        switch (l.symbol) {
            case Symbol::A:
                emit(ADEGen::A, +1);
                break;
            case Symbol::B:
                if (l.exponent > 0) {
                    emit(ADEGen::E, +1), emit(ADEGen::A, +1);
                } else {
                    emit(ADEGen::A, +1), emit(ADEGen::E, -1);
                }
                break;
            case Symbol::Bp:
                if (l.exponent > 0) {
                    emit(ADEGen::E, -1), emit(ADEGen::A, +1);
                } else {
                    emit(ADEGen::A, +1), emit(ADEGen::E, +1);
                }
                break;
            case Symbol::C:
                if (l.exponent > 0) {
                    emit(ADEGen::D, -1), emit(ADEGen::E, +1), emit(ADEGen::A, +1);
                } else {
                    emit(ADEGen::A, +1), emit(ADEGen::E, -1), emit(ADEGen::D, +1);
                }
                break;
            case Symbol::Cp:
                if (l.exponent > 0) {
                    emit(ADEGen::E, -1), emit(ADEGen::D, +1), emit(ADEGen::A, +1);
                } else {
                    emit(ADEGen::A, +1), emit(ADEGen::D, -1), emit(ADEGen::E, +1);
                }
                break;
        }
    }
    return out;
}

class G2Element {
  public:
    G2Element() : blocks_(1) {}  // identity

    static G2Element from_lattice(Lattice v) {
        G2Element g;
        g.blocks_[0] = std::move(v);
        return g;
    }

    const Lattice& head() const { return blocks_.front(); }
    // Tail: the lattice blocks after each a.
    std::vector<Lattice> tail() const { return {blocks_.begin() + 1, blocks_.end()}; }
    const std::vector<Lattice>& blocks() const { return blocks_; }
    std::size_t a_count() const { return blocks_.size() - 1; }
    bool is_identity() const { return blocks_.size() == 1 && blocks_[0].is_zero(); }

    bool operator==(const G2Element&) const = default;

    // Right-multiplication primitives; normal form is maintained.
    void append_lattice(const Lattice& v) { blocks_.back() = blocks_.back() + v; }
    void append_a() {
        if (blocks_.size() > 1 && blocks_.back().is_zero())
            blocks_.pop_back();  // ...a (0,0) a... cancels
        else
            blocks_.emplace_back();
    }
    void append(const G2Element& o) {
        bool first = true;
        for (const Lattice& b : o.blocks_) {
            if (!first) append_a();
            append_lattice(b);
            first = false;
        }
    }

  private:
    std::vector<Lattice> blocks_;  // head at index 0; interior blocks nonzero
};

inline G2Element normalize(const ADEWord& w) {
    G2Element g;
    for (const ADELetter& l : w) {
        switch (l.gen) {
            case ADEGen::A: g.append_a(); break;
            case ADEGen::D: g.append_lattice(Lattice{l.exp, 0}); break;
            case ADEGen::E: g.append_lattice(Lattice{0, l.exp}); break;
        }
    }
    return g;
}

inline G2Element multiply(const G2Element& x, const G2Element& y) {
    G2Element r = x;
    r.append(y);
    return r;
}

inline G2Element inverse(const G2Element& x) {
    // (v0 a v1 ... a vk)^-1 = -vk a ... a -v0
    G2Element r;
    const auto& b = x.blocks();
    bool first = true;
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
        if (!first) r.append_a();
        r.append_lattice(-*it);
        first = false;
    }
    return r;
}

inline G2Element phi2(const LinearGaussDiagram& d) { return normalize(to_ade(letters_phi2(d))); }

namespace detail {

// Syllable form: alternating sequence over {a} and nonzero lattice elements.
struct Syllable {
    bool is_a = false;
    Lattice v;
    bool operator==(const Syllable&) const = default;
};

inline std::vector<Syllable> syllables(const G2Element& g) {
    std::vector<Syllable> s;
    const auto& b = g.blocks();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0) s.push_back(Syllable{true, {}});
        if (!b[i].is_zero()) s.push_back(Syllable{false, b[i]});
    }
    return s;
}

inline void cyclically_reduce(std::vector<Syllable>& s) {
    bool changed = true;
    while (changed && s.size() >= 2) {
        changed = false;
        if (!s.front().is_a && !s.back().is_a) {
            // conjugate the trailing lattice block around to the front
            s.front().v = s.front().v + s.back().v;
            s.pop_back();
            if (s.front().v.is_zero()) s.erase(s.begin());
            changed = true;
        } else if (s.size() >= 2 && s.front().is_a && s.back().is_a) {
            s.pop_back();
            s.erase(s.begin());
            changed = true;
        }
    }
}

}  // namespace detail

// Conjugacy in Z_2 * (Z + Z): cyclically reduce, then compare cyclic words
// up to rotation; single-factor elements are conjugate iff equal (both
// factors are abelian).
inline bool conjugate_equal(const G2Element& x, const G2Element& y) {
    auto sx = detail::syllables(x);
    auto sy = detail::syllables(y);
    detail::cyclically_reduce(sx);
    detail::cyclically_reduce(sy);
    if (sx.size() != sy.size()) return false;
    if (sx.size() <= 1) return sx == sy;
    const std::size_t n = sx.size();
    for (std::size_t r = 0; r < n; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = (sx[(i + r) % n] == sy[i]);
        if (ok) return true;
    }
    return false;
}

// Text form: blocks separated by `| a |`, identity rendered as `1`.
inline std::string render(const G2Element& g) {
    if (g.is_identity()) return "1";
    std::string out;
    bool first = true;
    for (const Lattice& b : g.blocks()) {
        if (!first) out += " | a | ";
        out += "d^" + b.d.str() + " e^" + b.e.str();
        first = false;
    }
    return out;
}

// JSON form: {"head":[p,q],"tail":[[p1,q1],...]}
inline std::string to_json_string(const G2Element& g) {
    std::string out = "{\"head\":[" + g.head().d.str() + "," + g.head().e.str() + "],\"tail\":[";
    const auto& b = g.blocks();
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (i > 1) out += ',';
        out += "[" + b[i].d.str() + "," + b[i].e.str() + "]";
    }
    return out + "]}";
}

}  // namespace tkw
