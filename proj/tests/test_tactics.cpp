#include <random>

#include "doctest.h"
#include "../src/tactics_detail.hpp"
#include "kfill/oracle.hpp"

using namespace kfill;
using namespace kfill::detail;

namespace {
int rsign(std::mt19937_64& rng) { return rng() % 2 ? 1 : -1; }
}

TEST_CASE("a3 same-index swaps") {
    TacticCtx ctx(3);
    std::mt19937_64 rng(1);
    for (int rank : {2, 3, 5}) {
        std::uniform_int_distribution<int> idx(1, rank);
        for (int trial = 0; trial < 200; ++trial) {
            int i = idx(rng), j = idx(rng), e = rsign(rng), d = rsign(rng);
            for (auto* fn : {&a3::swap12, &a3::swap21, &a3::swap_mixed_x, &a3::swap_mixed_y}) {
                Certificate c = (*fn)(ctx, rank, i, j, e, d);
                auto rep = c.verify();
                CAPTURE(i); CAPTURE(j); CAPTURE(e); CAPTURE(d);
                CHECK(rep.valid);
                CHECK(rep.area <= 2);
            }
        }
    }
}

TEST_CASE("a3 triple commutators all coincidences") {
    TacticCtx ctx(3);
    std::mt19937_64 rng(2);
    Ambient amb(3, 4);
    for (int trial = 0; trial < 800; ++trial) {
        int rank = 4;
        std::uniform_int_distribution<int> idx(1, rank);
        int i = idx(rng), j = idx(rng), k = idx(rng);
        if (j == i && k == i) continue;  // inner must not collapse fully
        int eh = rsign(rng), e = rsign(rng), d = rsign(rng);
        int head = 1 + static_cast<int>(rng() % 2);
        bool xy = rng() % 2;
        CAPTURE(head); CAPTURE(i); CAPTURE(j); CAPTURE(k); CAPTURE(eh); CAPTURE(e); CAPTURE(d); CAPTURE(xy);
        Certificate c = a3::tc(ctx, rank, head, i, eh, j, e, k, d, xy);
        auto rep = c.verify();
        CHECK(rep.valid);
        CHECK(is_null_homotopic(amb, c.target()));
        CHECK(rep.area <= 64);
    }
}

TEST_CASE("a3 quadruple commutators all coincidences") {
    TacticCtx ctx(3);
    std::mt19937_64 rng(3);
    Ambient amb(3, 5);
    int checked = 0;
    for (int trial = 0; trial < 1500 && checked < 600; ++trial) {
        int rank = 5;
        std::uniform_int_distribution<int> idx(1, rank);
        int i = idx(rng), j = idx(rng), k = idx(rng), h = idx(rng);
        if (i == k && j == h && i == j) continue;
        int e = rsign(rng), d = rsign(rng), s = rsign(rng), t = rsign(rng);
        CAPTURE(i); CAPTURE(j); CAPTURE(k); CAPTURE(h);
        CAPTURE(e); CAPTURE(d); CAPTURE(s); CAPTURE(t);
        Certificate c = a3::qc(ctx, rank, i, j, k, h, e, d, s, t);
        auto rep = c.verify();
        CHECK(rep.valid);
        CHECK(is_null_homotopic(amb, c.target()));
        ++checked;
    }
}

TEST_CASE("a3 symmetric relations items 7-9") {
    TacticCtx ctx(3);
    std::mt19937_64 rng(4);
    Ambient amb(3, 4);
    for (int trial = 0; trial < 400; ++trial) {
        int rank = 4;
        std::uniform_int_distribution<int> idx(1, rank);
        int i = idx(rng), j = idx(rng), k = idx(rng), h = idx(rng);
        int e = rsign(rng), d = rsign(rng), s = rsign(rng), t = rsign(rng);
        CAPTURE(i); CAPTURE(j); CAPTURE(k); CAPTURE(h);
        {
            Certificate c = a3::sym1(ctx, rank, i, j, k, e, d, s);
            CHECK(c.verify().valid);
            CHECK(is_null_homotopic(amb, c.target()));
        }
        {
            Certificate c = a3::sym2(ctx, rank, i, j, k, h, e, d, s, t);
            CHECK(c.verify().valid);
            CHECK(is_null_homotopic(amb, c.target()));
        }
        {
            Certificate c = a3::sym3(ctx, rank, i, j, k, h, e, d, s, t);
            CHECK(c.verify().valid);
            CHECK(is_null_homotopic(amb, c.target()));
        }
    }
}

TEST_CASE("a3 doubling lemmas") {
    TacticCtx ctx(3);
    std::mt19937_64 rng(5);
    Ambient amb(3, 6);
    int rank = 6;
    std::uniform_int_distribution<int> idx(1, rank);
    for (int trial = 0; trial < 150; ++trial) {
        int i = idx(rng), i2 = idx(rng);
        {
            Certificate c = a3::doubling_o1(ctx, rank, i, i2);
            CAPTURE(i); CAPTURE(i2);
            CHECK(c.verify().valid);
            CHECK(is_null_homotopic(amb, c.target()));
        }
        int j = idx(rng), e = rsign(rng), d = rsign(rng);
        {
            CAPTURE(i); CAPTURE(i2); CAPTURE(j); CAPTURE(e); CAPTURE(d);
            Certificate c = a3::doubling_o3(ctx, rank, i, i2, j, e, d);
            CHECK(c.verify().valid);
            CHECK(is_null_homotopic(amb, c.target()));
        }
    }
    // distinct-slot items (the rho-image shapes)
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<int> pool{1, 2, 3, 4, 5, 6};
        std::shuffle(pool.begin(), pool.end(), rng);
        int i = pool[0], i2 = pool[1], j = pool[2], j2 = pool[3], k = pool[4], k2 = pool[5];
        int e = rsign(rng), d = rsign(rng), s = rsign(rng), t = rsign(rng);
        for (int item : {1, 2, 3}) {
            CAPTURE(item); CAPTURE(i); CAPTURE(j); CAPTURE(k); CAPTURE(e); CAPTURE(d);
            Certificate cx = a3::doubling_o4x(ctx, rank, item, i, i2, j, j2, k, k2, e, d);
            CHECK(cx.verify().valid);
            CHECK(is_null_homotopic(amb, cx.target()));
            Certificate cy = a3::doubling_o4y(ctx, rank, item, i, i2, j, j2, k, k2, e, d);
            CHECK(cy.verify().valid);
        }
        // o5 needs 4 distinct index slots plus the doubled one; reuse pool
        int h = j2, h2 = k2;  // i,i2 | j | k | h with doubles i2,k2 reused as partners
        for (int item : {1, 2, 3, 4}) {
            CAPTURE(item); CAPTURE(i); CAPTURE(j); CAPTURE(k); CAPTURE(h);
            Certificate c5 = a3::doubling_o5(ctx, rank, item, i, i2, j, j2, k, k2, h, h2, e, d, s, t);
            CHECK(c5.verify().valid);
            CHECK(is_null_homotopic(amb, c5.target()));
        }
    }
}
