#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "helpers.hpp"
#include "tkw/gbar.hpp"

using namespace tkw;

namespace {

GBarWord random_gbar_word(std::mt19937_64& rng, std::size_t max_len) {
    static const char alphabet[] = "abcABC";
    GBarWord w;
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) w += alphabet[rng() % 6];
    return free_reduce(w);
}

}  // namespace

TEST_CASE("ingest eliminates primes") {
    CHECK(ingest({{Symbol::Bp, +1}}) == "abA");
    CHECK(ingest({{Symbol::Cp, -1}}) == "aCA");
    CHECK(ingest({{Symbol::A, +1}, {Symbol::A, -1}}).empty());
}

TEST_CASE("free reduction and idempotence") {
    CHECK(free_reduce("abBA").empty());
    CHECK(free_reduce("abBc") == "ac");
    std::mt19937_64 rng(21);
    for (int t = 0; t < 200; ++t) {
        const GBarWord w = random_gbar_word(rng, 20);
        CHECK(free_reduce(w) == w);
    }
}

TEST_CASE("abelianize: examples") {
    CHECK(abelianize("cBBc") == AbelianImage{0, -2, 2});
    CHECK(abelianize("BcBccBcB") == AbelianImage{0, -4, 4});
    CHECK(abelianize("") == AbelianImage{0, 0, 0});
}

TEST_CASE("abelianize is invariant under every rewrite rule") {
    std::mt19937_64 rng(22);
    for (int t = 0; t < 100; ++t) {
        const GBarWord w = random_gbar_word(rng, 16);
        for (const GBarWord& n : gbar_neighbors(w, w.size() + 8))
            CHECK(abelianize(n) == abelianize(w));
    }
}

TEST_CASE("rewrite rules are sound for the defining relations") {
    // each relation u = v must be one rewrite apart
    const std::pair<GBarWord, GBarWord> relations[] = {
        {"aab", "baa"}, {"aac", "caa"}, {"bba", "abb"},
        {"cca", "acc"}, {"abc", "cba"}, {"cab", "bac"},
    };
    for (const auto& [u, v] : relations) {
        const auto ns = gbar_neighbors(u, 10);
        CHECK(std::find(ns.begin(), ns.end(), v) != ns.end());
    }
}

TEST_CASE("compare: reflexive and ingest-identified words") {
    CHECK(compare("abA", "abA").equal());
    CHECK(compare(ingest({{Symbol::Bp, +1}}), "abA", 10).equal());
}

TEST_CASE("compare: L6a1 word is distinct from the identity") {
    const GBarVerdict v = compare("cBBc", "");
    CHECK(v.kind == VerdictKind::Distinct);
    CHECK(v.image1 == AbelianImage{0, -2, 2});
    CHECK(v.image2 == AbelianImage{0, 0, 0});
}

TEST_CASE("compare: equal words found through relations, with a valid path") {
    // b a a = a a b and a longer conjugated variant
    for (const auto& [u, v] : std::initializer_list<std::pair<GBarWord, GBarWord>>{
             {"baa", "aab"}, {"cbaa", "caab"}, {"ba", "aabA"}, {"Ac", "acAA"}}) {
        const GBarVerdict verdict = compare(u, v);
        REQUIRE(verdict.equal());
        REQUIRE(verdict.path.size() >= 2);
        CHECK(verdict.path.front() == free_reduce(u));
        CHECK(verdict.path.back() == free_reduce(v));
        for (std::size_t i = 1; i < verdict.path.size(); ++i) {
            const auto ns = gbar_neighbors(verdict.path[i - 1], 64);
            CHECK(std::find(ns.begin(), ns.end(), verdict.path[i]) != ns.end());
        }
    }
}

TEST_CASE("compare: budget exhaustion reports unknown") {
    // same abelianization, no obvious path within a tiny budget
    const GBarVerdict v = compare("ab", "ba", 3);
    CHECK(v.kind == VerdictKind::Unknown);
    CHECK(v.budget_spent >= 3);
}

TEST_CASE("compare applied to random rewrite descendants") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        const GBarWord u = random_gbar_word(rng, 10);
        GBarWord v = u;
        for (int s = 0; s < 2; ++s) {
            const auto ns = gbar_neighbors(v, u.size() + 6);
            if (ns.empty()) break;
            v = ns[rng() % ns.size()];
        }
        CHECK(compare(u, v).equal());
    }
}

TEST_CASE("phibar: empty diagram, single chord, corpus diagrams") {
    CHECK(phibar(parse_gauss_code("")).empty());
    CHECK(phibar(parse_gauss_code("O1+ U1+")).empty());
    CHECK(phibar(tkwtest::corpus_diagram("l6a1_k1.gauss")) == "cBBc");
    CHECK(phibar(tkwtest::corpus_diagram("l6a1_k2.gauss")) == "BcBccBcB");
    CHECK(abelianize(phibar(tkwtest::corpus_diagram("l6a1_k1.gauss"))) ==
          AbelianImage{0, -2, 2});
}

TEST_CASE("ingest is idempotent on its image") {
    std::mt19937_64 rng(24);
    for (int t = 0; t < 100; ++t) {
        LinearGaussDiagram d = random_diagram(8, rng);
        const GBarWord w = phibar(d);
        CHECK(free_reduce(w) == w);
    }
}

TEST_CASE("gbar rendering") {
    CHECK(render_gbar("cBBc") == "c b^-1 b^-1 c");
}
