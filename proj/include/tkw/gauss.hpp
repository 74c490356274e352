// Linear Gauss diagrams for long knots on the cylinder: data model, text
// format, and the combinatorial notions (linking, Gaussian parity, chord
// type, endpoint position parity) everything else is built on.
#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace tkw {

enum class Role : std::uint8_t { Over, Under };

struct EndpointRef {
    int chord_id = 0;  // 1-based
    Role role = Role::Over;

    bool operator==(const EndpointRef&) const = default;
};

struct Chord {
    int id = 0;         // 1-based
    int over_pos = 0;   // endpoint index in 1..2m
    int under_pos = 0;  // endpoint index in 1..2m
    int sign = +1;      // crossing sign

    bool operator==(const Chord&) const = default;
};

class GaussCodeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class MalformedToken : public GaussCodeError {
  public:
    using GaussCodeError::GaussCodeError;
};
class ChordRoleViolation : public GaussCodeError {
  public:
    using GaussCodeError::GaussCodeError;
};
class SignMismatch : public GaussCodeError {
  public:
    using GaussCodeError::GaussCodeError;
};
class UnknownChordId : public GaussCodeError {
  public:
    using GaussCodeError::GaussCodeError;
};
class IndexOutOfRange : public GaussCodeError {
  public:
    using GaussCodeError::GaussCodeError;
};

enum class Parity : std::uint8_t { Even, Odd };
enum class ChordType : std::uint8_t { None, First, Second };

struct ChordClassification {
    Parity parity = Parity::Even;
    ChordType type = ChordType::None;

    bool operator==(const ChordClassification&) const = default;
};

enum class PositionParity : std::uint8_t { OddPosition, EvenPosition };

// Immutable after construction; all member functions are const.
class LinearGaussDiagram {
  public:
    LinearGaussDiagram() = default;

    // Builds a diagram from an explicit endpoint sequence plus per-chord
    // signs (keyed by chord id as it appears in `endpoints`). Chord ids are
    // normalized to first-appearance order.
    static LinearGaussDiagram from_endpoints(const std::vector<EndpointRef>& endpoints,
                                             const std::unordered_map<int, int>& signs) {
        LinearGaussDiagram d;
        std::unordered_map<int, int> remap;  // external id -> normalized id
        for (const EndpointRef& e : endpoints) {
            if (!remap.count(e.chord_id)) {
                int nid = static_cast<int>(remap.size()) + 1;
                remap[e.chord_id] = nid;
                d.chords_.push_back(Chord{nid, 0, 0, +1});
            }
        }
        int pos = 0;
        for (const EndpointRef& e : endpoints) {
            ++pos;
            int nid = remap.at(e.chord_id);
            Chord& c = d.chords_[static_cast<std::size_t>(nid) - 1];
            int& slot = (e.role == Role::Over) ? c.over_pos : c.under_pos;
            if (slot != 0)
                throw ChordRoleViolation("chord " + std::to_string(e.chord_id) +
                                         " has a repeated " +
                                         (e.role == Role::Over ? std::string("O") : std::string("U")) +
                                         " endpoint");
            slot = pos;
            d.endpoints_.push_back(EndpointRef{nid, e.role});
        }
        for (const Chord& c : d.chords_) {
            if (c.over_pos == 0 || c.under_pos == 0)
                throw ChordRoleViolation("chord lacks exactly one O and one U endpoint");
        }
        for (auto& [ext, nid] : remap) {
            auto it = signs.find(ext);
            if (it != signs.end()) d.chords_[static_cast<std::size_t>(nid) - 1].sign = it->second;
        }
        return d;
    }

    std::size_t chord_count() const { return chords_.size(); }
    std::size_t endpoint_count() const { return endpoints_.size(); }
    const std::vector<Chord>& chords() const { return chords_; }
    const std::vector<EndpointRef>& endpoint_sequence() const { return endpoints_; }

    const Chord& chord(int id) const {
        if (id < 1 || static_cast<std::size_t>(id) > chords_.size())
            throw UnknownChordId("unknown chord id " + std::to_string(id));
        return chords_[static_cast<std::size_t>(id) - 1];
    }

    const EndpointRef& endpoint(int index) const {
        if (index < 1 || static_cast<std::size_t>(index) > endpoints_.size())
            throw IndexOutOfRange("endpoint index " + std::to_string(index) + " out of range");
        return endpoints_[static_cast<std::size_t>(index) - 1];
    }

    bool operator==(const LinearGaussDiagram&) const = default;

  private:
    std::vector<Chord> chords_;          // indexed by id-1
    std::vector<EndpointRef> endpoints_;
};

// Text format: whitespace-separated tokens `O<id><sign>` / `U<id><sign>`,
// e.g. "O1+ U2- U1+ O2-". Both tokens of a chord must carry the same sign.
inline LinearGaussDiagram parse_gauss_code(const std::string& text) {
    std::istringstream in(text);
    std::vector<EndpointRef> endpoints;
    std::unordered_map<int, int> signs;
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 3) throw MalformedToken("malformed token '" + tok + "'");
        Role role;
        if (tok[0] == 'O')
            role = Role::Over;
        else if (tok[0] == 'U')
            role = Role::Under;
        else
            throw MalformedToken("malformed token '" + tok + "': must start with O or U");
        char sc = tok.back();
        int sign;
        if (sc == '+')
            sign = +1;
        else if (sc == '-')
            sign = -1;
        else
            throw MalformedToken("malformed token '" + tok + "': must end with + or -");
        const std::string digits = tok.substr(1, tok.size() - 2);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw MalformedToken("malformed token '" + tok + "': bad chord id");
        int id = std::stoi(digits);
        auto it = signs.find(id);
        if (it == signs.end())
            signs.emplace(id, sign);
        else if (it->second != sign)
            throw SignMismatch("chord " + std::to_string(id) + ": O and U tokens disagree on sign");
        endpoints.push_back(EndpointRef{id, role});
    }
    return LinearGaussDiagram::from_endpoints(endpoints, signs);
}

inline std::string serialize(const LinearGaussDiagram& d) {
    std::string out;
    for (std::size_t i = 0; i < d.endpoint_count(); ++i) {
        const EndpointRef& e = d.endpoint_sequence()[i];
        if (!out.empty()) out += ' ';
        out += (e.role == Role::Over) ? 'O' : 'U';
        out += std::to_string(e.chord_id);
        out += (d.chord(e.chord_id).sign > 0) ? '+' : '-';
    }
    return out;
}

// Two chords are linked when their endpoint pairs alternate along the line.
inline bool linked(const LinearGaussDiagram& d, int chord_x, int chord_y) {
    const Chord& x = d.chord(chord_x);
    const Chord& y = d.chord(chord_y);
    int lo = std::min(x.over_pos, x.under_pos);
    int hi = std::max(x.over_pos, x.under_pos);
    bool a = lo < y.over_pos && y.over_pos < hi;
    bool b = lo < y.under_pos && y.under_pos < hi;
    return a != b;
}

// Gaussian parity first (linking counts only), then type (count of linked
// even chords) for the odd chords.
inline std::vector<ChordClassification> classify_all(const LinearGaussDiagram& d) {
    const std::size_t m = d.chord_count();
    std::vector<ChordClassification> out(m);
    for (std::size_t i = 0; i < m; ++i) {
        int deg = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && linked(d, static_cast<int>(i) + 1, static_cast<int>(j) + 1)) ++deg;
        out[i].parity = (deg % 2 != 0) ? Parity::Odd : Parity::Even;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (out[i].parity == Parity::Even) {
            out[i].type = ChordType::None;
            continue;
        }
        int even_deg = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && out[j].parity == Parity::Even &&
                linked(d, static_cast<int>(i) + 1, static_cast<int>(j) + 1))
                ++even_deg;
        out[i].type = (even_deg % 2 == 0) ? ChordType::First : ChordType::Second;
    }
    return out;
}

inline ChordClassification classify_chord(const LinearGaussDiagram& d, int chord_id) {
    d.chord(chord_id);  // id check
    return classify_all(d)[static_cast<std::size_t>(chord_id) - 1];
}

inline PositionParity position_parity(const LinearGaussDiagram& d, int endpoint_index) {
    d.endpoint(endpoint_index);  // range check
    return (endpoint_index % 2 != 0) ? PositionParity::OddPosition : PositionParity::EvenPosition;
}

// Orientation reversal: endpoint order reversed, roles and signs kept.
inline LinearGaussDiagram reverse_diagram(const LinearGaussDiagram& d) {
    std::vector<EndpointRef> eps(d.endpoint_sequence().rbegin(), d.endpoint_sequence().rend());
    std::unordered_map<int, int> signs;
    for (const Chord& c : d.chords()) signs[c.id] = c.sign;
    return LinearGaussDiagram::from_endpoints(eps, signs);
}

// Moves the basepoint of the compact closure: cyclic left rotation by k.
inline LinearGaussDiagram rotate_basepoint(const LinearGaussDiagram& d, int k) {
    const int n = static_cast<int>(d.endpoint_count());
    if (k < 0) throw IndexOutOfRange("rotation offset " + std::to_string(k) + " out of range");
    if (n > 0) k %= n;  // rotating by 2m is the identity
    std::vector<EndpointRef> eps;
    eps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eps.push_back(d.endpoint_sequence()[static_cast<std::size_t>((i + k) % n)]);
    std::unordered_map<int, int> signs;
    for (const Chord& c : d.chords()) signs[c.id] = c.sign;
    return LinearGaussDiagram::from_endpoints(eps, signs);
}

}  // namespace tkw
