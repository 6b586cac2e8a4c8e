#include <set>

#include "doctest.h"
#include "kfill/oracle.hpp"
#include "kfill/relators.hpp"

using namespace kfill;

TEST_CASE("realize family templates") {
    Ambient amb(4, 3);
    Word o1 = realize(amb, RelatorKey{Family::O1, {.i = 1, .a = 1, .b = 2}});
    CHECK(o1 == Word::parse(amb.xalph(), "x[1,1] x[2,1] x[1,1]^-1 x[2,1]^-1"));

    Word o2 = realize(amb, RelatorKey{Family::O2, {.i = 1, .j = 2, .a = 1, .b = 2, .c = 3}});
    CHECK(o2 == commutator(Word::parse(amb.xalph(), "x[1,1]"), Word::parse(amb.xalph(), "x[2,2] x[3,2]^-1")));

    Ambient amb3(3, 2);
    Word o3 = realize(amb3, RelatorKey{Family::O3, {.i = 1, .j = 2, .a = 1, .b = 2, .e = 1, .d = 1}});
    Word lhs = commutator(Word::parse(amb3.xalph(), "x[1,1]"), Word::parse(amb3.xalph(), "x[2,2]"));
    lhs.append(commutator(Word::parse(amb3.xalph(), "x[1,2]"), Word::parse(amb3.xalph(), "x[2,1]")));
    CHECK(o3 == lhs);

    CHECK_THROWS_AS(realize(amb3, RelatorKey{Family::O3, {.i = 1, .j = 1, .a = 1, .b = 2, .e = 1, .d = 1}}), error);
    CHECK_THROWS_AS(realize(amb3, RelatorKey{Family::O2, {.i = 1, .j = 2, .a = 1, .b = 2, .c = 3}}), error);
}

TEST_CASE("per-n family selection and counts") {
    {
        Ambient amb(3, 2);
        auto rels = enumerate_relators(amb);
        int o1 = 0, o3 = 0, other = 0;
        for (const auto& r : rels) {
            if (r.key.family == Family::O1)
                ++o1;
            else if (r.key.family == Family::O3)
                ++o3;
            else
                ++other;
        }
        CHECK(o1 == 2);  // i in {1,2}, single factor pair
        CHECK(o3 == 16);
        CHECK(other == 0);  // O4, O5 empty at r=2; O2 absent for n=3
    }
    {
        Ambient amb(5, 2);
        auto rels = enumerate_relators(amb);
        for (const auto& r : rels) CHECK((r.key.family == Family::O1 || r.key.family == Family::O2));
    }
    {
        Ambient amb(4, 3);
        auto rels = enumerate_relators(amb);
        bool has_o4 = false;
        for (const auto& r : rels) {
            CHECK((r.key.family == Family::O1 || r.key.family == Family::O2 || r.key.family == Family::O4));
            has_o4 |= r.key.family == Family::O4;
        }
        CHECK(has_o4);
    }
}

TEST_CASE("every relator is trivial in K") {
    for (int n : {3, 4, 5, 6}) {
        for (int r : {2, 3, 4}) {
            Ambient amb(n, r);
            for (const auto& rel : enumerate_relators(amb)) {
                CHECK(is_null_homotopic(amb, rel.word));
            }
        }
    }
}

TEST_CASE("enumeration is stable and duplicate free") {
    Ambient amb(3, 3);
    auto a = enumerate_relators(amb);
    auto b = enumerate_relators(amb);
    REQUIRE(a.size() == b.size());
    std::set<std::string> keys;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].key.str() == b[i].key.str());
        CHECK(a[i].word == b[i].word);
        CHECK(keys.insert(a[i].key.str()).second);
    }
    // realized words are pairwise distinct as well
    std::set<std::string> words;
    for (const auto& rel : a) CHECK(words.insert(rel.word.str()).second);
}

TEST_CASE("product relators") {
    Ambient amb(3, 2);
    auto cs = product_relators(amb);
    CHECK(cs.size() == 12);  // 3 factor pairs x 2 x 2 indices
    for (const auto& rel : cs) {
        CHECK(equal_in_G(amb, rel.word, Word(amb.aalph())));
        CHECK(rel.key.p.a < rel.key.p.b);
    }
}

TEST_CASE("relator keys round trip") {
    Ambient amb(3, 4);
    for (const auto& rel : enumerate_relators(amb)) {
        RelatorKey back = parse_relator_key(rel.key.str());
        CHECK(back == rel.key);
        CHECK(realize(amb, back) == rel.word);
    }
    RelatorKey c = parse_relator_key("C[a=1,i=1;b=2,j=2]");
    CHECK(c.family == Family::C);
    CHECK(c.p.a == 1);
    CHECK(c.p.j == 2);
    CHECK(parse_relator_key("O3[i=1,j=2,e=+1,d=-1,a=1,b=2]").p.d == -1);
}

TEST_CASE("alias rendering") {
    Ambient amb(3, 2);
    Word w = Word::parse(amb.xalph(), "x[1,1]^2 x[2,1]^-1");
    CHECK(alias_str(w) == "x1^2 y1^-1");
}
