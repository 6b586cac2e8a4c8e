#include <random>
#include <sstream>

#include "doctest.h"
#include "kfill/certificate.hpp"
#include "kfill/oracle.hpp"

using namespace kfill;

namespace {

Ambient amb3() { return Ambient(3, 2); }

Relator o1(const Ambient& amb, int i) { return make_relator(amb, RelatorKey{Family::O1, {.i = i, .a = 1, .b = 2}}); }

Word rword(std::mt19937_64& rng, Alphabet alph, int len) {
    std::uniform_int_distribution<int> fac(1, alph.factors()), idx(1, alph.r), sgn(0, 1);
    Word w(alph);
    for (int c = 0; c < len; ++c) w.append(xl(fac(rng), idx(rng)), sgn(rng) ? 1 : -1);
    return w;
}

// random valid certificate built from conjugated relators
Certificate random_cert(std::mt19937_64& rng, const Ambient& amb, const std::vector<Relator>& rels, int steps) {
    std::uniform_int_distribution<std::size_t> pick(0, rels.size() - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    std::vector<Step> out;
    for (int s = 0; s < steps; ++s) {
        Step st;
        st.conj = rword(rng, amb.xalph(), 4);
        const Relator& rel = rels[pick(rng)];
        st.rel = rel.word;
        st.key = rel.key;
        st.orient = sgn(rng) ? 1 : -1;
        out.push_back(std::move(st));
    }
    return Certificate::from_steps(amb.xalph(), std::move(out));
}

}  // namespace

TEST_CASE("verify basics") {
    Ambient amb = amb3();
    Relator rel = o1(amb, 1);
    Certificate c = Certificate::relator_step(amb.xalph(), rel);
    auto rep = c.verify();
    CHECK(rep.valid);
    CHECK(rep.area == 1);
    CHECK(rep.radius == 0);
    CHECK(c.target() == rel.word);

    // same steps, wrong target
    std::vector<Step> steps;
    Step s;
    s.conj = Word(amb.xalph());
    s.rel = rel.word;
    s.orient = 1;
    s.key = rel.key;
    steps.push_back(s);
    std::ostringstream os;
    Certificate::from_steps(amb.xalph(), steps).write(os);
    std::string text = os.str();
    // corrupt the target line
    auto pos = text.find("target ");
    std::string bad = text.substr(0, pos) + "target \xce\xb5\n" + text.substr(text.find('\n', pos) + 1);
    std::istringstream is(bad);
    Certificate loaded = Certificate::read(is);
    CHECK_FALSE(loaded.verify().valid);
}

TEST_CASE("certificate algebra identities") {
    std::mt19937_64 rng(2024);
    Ambient amb = amb3();
    auto rels = enumerate_relators(amb);
    for (int trial = 0; trial < 100; ++trial) {
        Certificate a = random_cert(rng, amb, rels, 3);
        Certificate b = random_cert(rng, amb, rels, 2);
        CHECK(a.verify().valid);

        Certificate ab = concat_cert(a, b);
        CHECK(ab.verify().valid);
        CHECK(ab.area() == a.area() + b.area());
        CHECK(ab.target() == a.target() * b.target());

        Word u = rword(rng, amb.xalph(), 3);
        Certificate cu = conjugate_cert(a, u);
        CHECK(cu.verify().valid);
        CHECK(cu.target() == conjugate(a.target(), u));
        CHECK(conjugate_cert(a, Word(amb.xalph())).target() == a.target());

        Certificate ia = invert_cert(a);
        CHECK(ia.verify().valid);
        CHECK(ia.target() == a.target().inverse());
        Certificate iia = invert_cert(ia);
        CHECK(iia.verify().valid);
        CHECK(iia.area() == a.area());
        CHECK(iia.target() == a.target());
    }
}

TEST_CASE("substitute respects the area product bound") {
    std::mt19937_64 rng(99);
    Ambient amb = amb3();
    auto rels = enumerate_relators(amb);
    for (int trial = 0; trial < 60; ++trial) {
        // outer certificate over two "abstract relators": the realized words
        // of certs x and y
        Certificate x = random_cert(rng, amb, rels, 1 + static_cast<int>(rng() % 3));
        Certificate y = random_cert(rng, amb, rels, 1 + static_cast<int>(rng() % 3));
        if (x.target().empty() || y.target().empty() || x.target() == y.target()) continue;

        std::vector<Step> outer_steps;
        std::uniform_int_distribution<int> sgn(0, 1);
        int uses = 2 + static_cast<int>(rng() % 3);
        for (int s = 0; s < uses; ++s) {
            Step st;
            st.conj = rword(rng, amb.xalph(), 3);
            st.rel = (s % 2 == 0) ? x.target() : y.target();
            st.orient = sgn(rng) ? 1 : -1;
            outer_steps.push_back(std::move(st));
        }
        Certificate outer = Certificate::from_steps(amb.xalph(), outer_steps);
        std::unordered_map<Word, Certificate, WordHash> exp;
        exp.emplace(x.target(), x);
        exp.emplace(y.target(), y);
        // also an unused expansion: ignored
        exp.emplace(rword(rng, amb.xalph(), 5), random_cert(rng, amb, rels, 1));

        Certificate flat = substitute(outer, exp);
        CHECK(flat.verify().valid);
        CHECK(flat.target() == outer.target());
        CHECK(flat.area() <= outer.area() * std::max(x.area(), y.area()));
    }

    // missing expansion errors out
    Certificate x = random_cert(rng, amb, rels, 1);
    Step st;
    st.conj = Word(amb.xalph());
    st.rel = x.target();
    st.orient = 1;
    Certificate outer = Certificate::from_steps(amb.xalph(), {st});
    std::unordered_map<Word, Certificate, WordHash> none;
    CHECK_THROWS_AS(substitute(outer, none), error);
}

TEST_CASE("map_hom preserves validity and never increases area") {
    std::mt19937_64 rng(123);
    Ambient amb = amb3();
    auto rels = enumerate_relators(amb);

    // identity
    GroupHom id = GroupHom::identity(amb.xalph());
    Certificate a = random_cert(rng, amb, rels, 4);
    Certificate ida = map_hom(a, id);
    CHECK(ida.verify().valid);
    CHECK(ida.area() == a.area());
    CHECK(ida.target() == a.target());

    // generator-killing symmetrized hom
    Alphabet t2 = Alphabet::T(2);
    GroupHom kill(t2, t2);
    kill.set_image(tl(1), Word(t2));
    kill.set_image(tl(2), Word::letter(t2, tl(2)));
    GroupHom killh = symmetrize_hom(kill, 3);
    for (int trial = 0; trial < 50; ++trial) {
        Certificate c = random_cert(rng, amb, rels, 5);
        Certificate m = map_hom(c, killh);
        CHECK(m.verify().valid);
        CHECK(m.area() <= c.area());
        CHECK(m.target() == killh.apply(c.target()));
    }
}

TEST_CASE("certificate file round trip") {
    std::mt19937_64 rng(7);
    Ambient amb = amb3();
    auto rels = enumerate_relators(amb);
    Certificate c = random_cert(rng, amb, rels, 6);
    std::ostringstream os;
    c.write(os);
    std::string text = os.str();
    CHECK(text.find("alphabet X n=3 r=2") == 0);
    CHECK(text.find("end area=6") != std::string::npos);

    std::istringstream is(text);
    Certificate back = Certificate::read(is);
    CHECK(back.verify().valid);
    CHECK(back.target() == c.target());
    CHECK(back.area() == c.area());

    std::ostringstream os2;
    back.write(os2);
    CHECK(os2.str() == text);  // bit-exact round trip
}

TEST_CASE("transcript") {
    Ambient amb = amb3();
    const Alphabet xa = amb.xalph();
    Relator rel = o1(amb, 1);
    // [x1^2, y1] = x1 [x1,y1] x1^-1 . [x1,y1]
    Word target = commutator(Word::letter(xa, xl(1, 1), 2), Word::letter(xa, xl(2, 1)));
    Transcript tr(target);
    // current = x1^2 y1 x1^-2 y1^-1; insert rel^-1 after x1 to cancel
    Word left = Word::letter(xa, xl(1, 1), 1);
    Word right = left * Word::parse(xa, "x[2,1] x[1,1]^-2 x[2,1]^-1");
    tr.insert(left, right, rel, -1);
    CHECK(tr.current() == commutator(Word::letter(xa, xl(1, 1)), Word::letter(xa, xl(2, 1))));
    Word l2(xa);
    tr.insert(l2, tr.current(), rel, -1);
    Certificate cert = std::move(tr).finish();
    CHECK(cert.verify().valid);
    CHECK(cert.target() == target);
    CHECK(cert.area() == 2);

    Transcript bad(target);
    CHECK_THROWS_AS(std::move(bad).finish(), error);
}
