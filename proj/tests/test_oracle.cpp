#include "doctest.h"
#include "kfill/oracle.hpp"
#include "kfill/pushdown.hpp"

using namespace kfill;

TEST_CASE("null homotopy test") {
    Ambient amb(3, 2);
    const Alphabet xa = amb.xalph();
    for (const auto& rel : enumerate_relators(amb)) CHECK(is_null_homotopic(amb, rel.word));
    CHECK_FALSE(is_null_homotopic(amb, Word::parse(xa, "x[1,1]")));
    Word w = commutator(Word::letter(xa, xl(1, 1), 2), Word::letter(xa, xl(2, 1), 2));
    CHECK(is_null_homotopic(amb, w));
}

TEST_CASE("exact area basics") {
    Ambient amb(3, 2);
    auto rels = enumerate_relators(amb);
    const Alphabet xa = amb.xalph();

    Word r1 = commutator(Word::letter(xa, xl(1, 1)), Word::letter(xa, xl(2, 1)));
    auto res = exact_area(amb, r1, rels, SearchBudget{3, 3, 1 << 20});
    REQUIRE(res.area.has_value());
    CHECK(*res.area == 1);
    CHECK(res.witness->verify().valid);

    auto nores = exact_area(amb, Word::parse(xa, "x[1,1]"), rels, SearchBudget{3, 3, 1 << 20});
    CHECK(nores.exhausted);
    CHECK_FALSE(nores.area.has_value());

    auto zero = exact_area(amb, Word(xa), rels, SearchBudget{3, 3, 1 << 20});
    REQUIRE(zero.area.has_value());
    CHECK(*zero.area == 0);
}

TEST_CASE("exact area regression [x1^2,y1^2] = 4") {
    Ambient amb(3, 2);
    auto rels = enumerate_relators(amb);
    const Alphabet xa = amb.xalph();
    Word w = commutator(Word::letter(xa, xl(1, 1), 2), Word::letter(xa, xl(2, 1), 2));
    auto res = exact_area(amb, w, rels, SearchBudget{6, 4, 1 << 22});
    REQUIRE(res.area.has_value());
    CHECK(*res.area == 4);
    CHECK_FALSE(res.exhausted);
    REQUIRE(res.witness.has_value());
    auto rep = res.witness->verify();
    CHECK(rep.valid);
    CHECK(rep.area == 4);
    CHECK(res.witness->target() == w);
}

TEST_CASE("oracle monotone in budget") {
    Ambient amb(3, 2);
    auto rels = enumerate_relators(amb);
    const Alphabet xa = amb.xalph();
    Word w = conjugate(commutator(Word::letter(xa, xl(1, 2)), Word::letter(xa, xl(2, 2))), Word::parse(xa, "x[1,1]"));
    auto small = exact_area(amb, w, rels, SearchBudget{2, 2, 1 << 20});
    auto big = exact_area(amb, w, rels, SearchBudget{4, 4, 1 << 20});
    REQUIRE(small.area.has_value());
    REQUIRE(big.area.has_value());
    CHECK(*big.area <= *small.area);
    CHECK(*small.area == 1);
}
