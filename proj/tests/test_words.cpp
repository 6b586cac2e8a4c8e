#include <random>

#include "doctest.h"
#include "kfill/word.hpp"

using namespace kfill;

namespace {

Word random_word(std::mt19937_64& rng, Alphabet alph, int len) {
    std::uniform_int_distribution<int> fac(1, alph.kind == AlphabetKind::T ? 1 : alph.factors());
    std::uniform_int_distribution<int> idx(1, alph.r);
    std::uniform_int_distribution<int> sgn(0, 1);
    Word w(alph);
    for (int c = 0; c < len; ++c) {
        Letter l = alph.kind == AlphabetKind::T ? tl(idx(rng)) : xl(fac(rng), idx(rng));
        w.append(l, sgn(rng) ? 1 : -1);
    }
    return w;
}

// Reference reducer: expand to single letters, cancel adjacent inverse pairs
// in a random order until none remain.
std::vector<std::pair<Letter, int>> slow_reduce(const Word& w, std::mt19937_64& rng) {
    std::vector<std::pair<Letter, int>> seq;
    for (const auto& s : w.syllables()) {
        for (std::int64_t c = 0; c < (s.exp < 0 ? -s.exp : s.exp); ++c) seq.emplace_back(s.letter, s.exp > 0 ? 1 : -1);
    }
    while (true) {
        std::vector<std::size_t> sites;
        for (std::size_t p = 0; p + 1 < seq.size(); ++p)
            if (seq[p].first == seq[p + 1].first && seq[p].second == -seq[p + 1].second) sites.push_back(p);
        if (sites.empty()) break;
        std::size_t pick = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
        seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(pick), seq.begin() + static_cast<std::ptrdiff_t>(pick) + 2);
    }
    return seq;
}

std::vector<std::pair<Letter, int>> expand(const Word& w) {
    std::vector<std::pair<Letter, int>> seq;
    for (const auto& s : w.syllables())
        for (std::int64_t c = 0; c < (s.exp < 0 ? -s.exp : s.exp); ++c) seq.emplace_back(s.letter, s.exp > 0 ? 1 : -1);
    return seq;
}

}  // namespace

TEST_CASE("free reduction basics") {
    Alphabet xa = Alphabet::X(3, 2);
    Word w(xa);
    w.append(xl(1, 1), 1);
    w.append(xl(1, 1), -1);
    CHECK(w.empty());

    Word v(xa);
    v.append(xl(1, 1), 1);
    v.append(xl(2, 1), 1);
    v.append(xl(2, 1), -1);
    v.append(xl(1, 1), 1);
    CHECK(v == Word::letter(xa, xl(1, 1), 2));

    Word u(xa);
    u.append(xl(1, 1), 1);
    u.append(xl(2, 1), 1);
    CHECK(u.length() == 2);
    CHECK(free_reduce(u) == u);
}

TEST_CASE("word operations") {
    Alphabet xa = Alphabet::X(3, 2);
    Word x11 = Word::letter(xa, xl(1, 1));
    Word x21 = Word::letter(xa, xl(2, 1));

    Word c = commutator(x11, x21);
    CHECK(c.str() == "x[1,1] x[2,1] x[1,1]^-1 x[2,1]^-1");

    Word w = Word::letter(xa, xl(1, 1), 2) * x21;
    CHECK(w.inverse().str() == "x[2,1]^-1 x[1,1]^-2");

    CHECK(conjugate(Word(xa), w).empty());
    CHECK((w * w.inverse()).empty());

    Word lhs = commutator(x11, x21).inverse();
    Word rhs = commutator(x21, x11);
    CHECK(lhs == rhs);
}

TEST_CASE("word text syntax round trip") {
    Alphabet xa = Alphabet::X(4, 3);
    Word w = Word::parse(xa, "x[1,1]^-2 x[2,3]");
    CHECK(w.length() == 3);
    CHECK(w.str() == "x[1,1]^-2 x[2,3]");
    CHECK(Word::parse(xa, w.str()) == w);
    CHECK(Word::parse(xa, "\xce\xb5").empty());
    CHECK(Word(xa).str() == "\xce\xb5");

    CHECK_THROWS_AS(Word::parse(xa, "x[5,1]"), error);
    CHECK_THROWS_AS(Word::parse(xa, "t[1]"), error);
}

TEST_CASE("reduction confluence against randomized cancellation") {
    std::mt19937_64 rng(20240811);
    Alphabet xa = Alphabet::X(3, 2);
    for (int trial = 0; trial < 10000; ++trial) {
        Word w(xa);
        // build an unreduced sequence, then reduce eagerly and slowly
        std::vector<std::pair<Letter, int>> raw;
        std::uniform_int_distribution<int> len(0, 24);
        std::uniform_int_distribution<int> fac(1, 2), idx(1, 2), sgn(0, 1);
        int m = len(rng);
        Word eager(xa);
        for (int c = 0; c < m; ++c) {
            Letter l = xl(fac(rng), idx(rng));
            int e = sgn(rng) ? 1 : -1;
            raw.emplace_back(l, e);
            eager.append(l, e);
        }
        Word unred(xa);  // same content, reconstructed for slow path
        std::vector<std::pair<Letter, int>> seq = raw;
        // slow random-order cancellation on the raw sequence
        while (true) {
            std::vector<std::size_t> sites;
            for (std::size_t p = 0; p + 1 < seq.size(); ++p)
                if (seq[p].first == seq[p + 1].first && seq[p].second == -seq[p + 1].second) sites.push_back(p);
            if (sites.empty()) break;
            std::size_t pick = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
            seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(pick),
                      seq.begin() + static_cast<std::ptrdiff_t>(pick) + 2);
        }
        CHECK(seq == expand(eager));
    }
}

TEST_CASE("length subadditivity") {
    std::mt19937_64 rng(7);
    Alphabet xa = Alphabet::X(4, 3);
    for (int trial = 0; trial < 2000; ++trial) {
        Word u = random_word(rng, xa, 12);
        Word v = random_word(rng, xa, 12);
        CHECK((u * v).length() <= u.length() + v.length());
    }
}

TEST_CASE("homomorphism application and norm") {
    Alphabet t2 = Alphabet::T(2);
    GroupHom phi(t2, t2);
    phi.set_image(tl(1), Word::parse(t2, "t[1] t[2]"));
    phi.set_image(tl(2), Word::parse(t2, "t[2]"));
    CHECK(phi.norm() == 2);
    CHECK(phi.apply(Word::letter(t2, tl(1), 2)).str() == "t[1] t[2] t[1] t[2]");

    GroupHom id = GroupHom::identity(t2);
    CHECK(id.norm() == 1);
    Word w = Word::parse(t2, "t[1] t[2]^-3 t[1]");
    CHECK(id.apply(w) == w);

    GroupHom kill(t2, t2);
    kill.set_image(tl(1), Word(t2));
    kill.set_image(tl(2), Word::letter(t2, tl(2)));
    CHECK(kill.apply(commutator(Word::letter(t2, tl(1)), Word::letter(t2, tl(2)))).empty());

    GroupHom pw(t2, t2);
    pw.set_image(tl(1), Word::letter(t2, tl(1), -5));
    pw.set_image(tl(2), Word::letter(t2, tl(2), 5));
    CHECK(pw.norm() == 5);
}

TEST_CASE("hom norm of basic doubling") {
    Alphabet t3 = Alphabet::T(3);
    Alphabet t4 = Alphabet::T(4);
    GroupHom rho(t3, t4);
    rho.set_image(tl(1), Word::parse(t4, "t[1] t[2]"));
    rho.set_image(tl(2), Word::letter(t4, tl(3)));
    rho.set_image(tl(3), Word::letter(t4, tl(4)));
    CHECK(rho.norm() == 2);
}

TEST_CASE("image length bound") {
    std::mt19937_64 rng(99);
    Alphabet t3 = Alphabet::T(3);
    for (int trial = 0; trial < 500; ++trial) {
        GroupHom phi(t3, t3);
        for (int i = 1; i <= 3; ++i) phi.set_image(tl(i), random_word(rng, t3, 4));
        Word w = random_word(rng, t3, 15);
        CHECK(phi.apply(w).length() <= phi.norm() * w.length());
    }
}

TEST_CASE("symmetrize examples") {
    Alphabet t2 = Alphabet::T(2);
    GroupHom id = GroupHom::identity(t2);
    GroupHom idh = symmetrize_hom(id, 3);
    CHECK(idh.source() == Alphabet::X(3, 2));
    CHECK(idh.image(xl(2, 1)) == Word::letter(Alphabet::X(3, 2), xl(2, 1)));

    GroupHom phi(t2, t2);
    phi.set_image(tl(1), Word::parse(t2, "t[1] t[2]"));
    phi.set_image(tl(2), Word::letter(t2, tl(2)));
    GroupHom phih = symmetrize_hom(phi, 4);
    for (int a = 1; a <= 3; ++a) {
        Word expect(Alphabet::X(4, 2));
        expect.append(xl(a, 1), 1);
        expect.append(xl(a, 2), 1);
        CHECK(phih.image(xl(a, 1)) == expect);
    }

    GroupHom neg(t2, t2);
    neg.set_image(tl(1), Word::letter(t2, tl(2), -1));
    neg.set_image(tl(2), Word::letter(t2, tl(1)));
    GroupHom negh = symmetrize_hom(neg, 3);
    CHECK(negh.image(xl(1, 1)) == Word::letter(Alphabet::X(3, 2), xl(1, 2), -1));
}

TEST_CASE("symmetrize respects composition and norm") {
    std::mt19937_64 rng(4242);
    Alphabet t2 = Alphabet::T(2);
    Alphabet t3 = Alphabet::T(3);
    for (int trial = 0; trial < 300; ++trial) {
        GroupHom phi(t2, t3);
        for (int i = 1; i <= 2; ++i) phi.set_image(tl(i), random_word(rng, t3, 3));
        GroupHom psi(t3, t2);
        for (int i = 1; i <= 3; ++i) psi.set_image(tl(i), random_word(rng, t2, 3));
        GroupHom comp = psi.compose_after(phi);
        GroupHom lhs = symmetrize_hom(comp, 3);
        GroupHom rhs = symmetrize_hom(psi, 3).compose_after(symmetrize_hom(phi, 3));
        Word w = random_word(rng, Alphabet::X(3, 2), 10);
        CHECK(lhs.apply(w) == rhs.apply(w));
        CHECK(symmetrize_hom(phi, 3).norm() == phi.norm());
    }
}
