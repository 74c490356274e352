#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "helpers.hpp"
#include "tkw/word.hpp"

using namespace tkw;

TEST_CASE("phi2 letters: empty and single chord") {
    CHECK(letters_phi2(parse_gauss_code("")).empty());
    CHECK(letters_phi2(parse_gauss_code("O1+ U1+")) == Word{{Symbol::A, +1}, {Symbol::A, +1}});
}

TEST_CASE("phi2 letters: L7a1") {
    const Word w = letters_phi2(tkwtest::corpus_diagram("l7a1.gauss"));
    CHECK(render(w) == "a a a c' b'^-1 a c'^-1 b'");
}

TEST_CASE("phibar letters: single chord gives a a^-1") {
    CHECK(letters_phibar(parse_gauss_code("O1+ U1+")) ==
          Word{{Symbol::A, +1}, {Symbol::A, -1}});
}

TEST_CASE("phibar letters: L6a1 diagrams") {
    CHECK(render(letters_phibar(tkwtest::corpus_diagram("l6a1_k1.gauss"))) ==
          "c b^-1 b^-1 c");
    CHECK(render(letters_phibar(tkwtest::corpus_diagram("l6a1_k2.gauss"))) ==
          "b^-1 c b^-1 c c b^-1 c b^-1");
}

TEST_CASE("letter words have one letter per endpoint") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        LinearGaussDiagram d = random_diagram(8, rng);
        CHECK(letters_phi2(d).size() == d.endpoint_count());
        CHECK(letters_phibar(d).size() == d.endpoint_count());
    }
}

TEST_CASE("phibar exponents follow the chord signs") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 200; ++t) {
        LinearGaussDiagram d = random_diagram(8, rng);
        const Word w = letters_phibar(d);
        const auto cls = classify_all(d);
        for (const Chord& c : d.chords()) {
            const Letter& over = w[static_cast<std::size_t>(c.over_pos) - 1];
            const Letter& under = w[static_cast<std::size_t>(c.under_pos) - 1];
            CHECK(over.exponent == c.sign);
            if (cls[static_cast<std::size_t>(c.id) - 1].parity == Parity::Even)
                CHECK(over.exponent * under.exponent == -1);
        }
    }
}

TEST_CASE("phi2 a-letters always carry exponent +1") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        for (const Letter& l : letters_phi2(random_diagram(8, rng)))
            if (l.symbol == Symbol::A) CHECK(l.exponent == +1);
    }
}

TEST_CASE("R1 insertion contributes exactly two adjacent letters") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
        LinearGaussDiagram d = random_diagram(6, rng);
        const Word before = letters_phi2(d);
        const int gap = static_cast<int>(rng() % (d.endpoint_count() + 1));
        MoveApplication app;
        app.kind = MoveKind::R1a;
        app.direction = MoveDirection::Insert;
        app.gap1 = gap;
        const Word after = letters_phi2(apply_move(d, app));
        REQUIRE(after.size() == before.size() + 2);
        for (std::size_t i = 0; i < before.size(); ++i) {
            const std::size_t j = (static_cast<int>(i) < gap) ? i : i + 2;
            CHECK(after[j].symbol == before[i].symbol);
        }
        CHECK(after[static_cast<std::size_t>(gap)] == Letter{Symbol::A, +1});
        CHECK(after[static_cast<std::size_t>(gap) + 1] == Letter{Symbol::A, +1});
    }
}
