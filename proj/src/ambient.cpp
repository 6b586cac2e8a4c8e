#include "kfill/ambient.hpp"

#include <algorithm>
#include <sstream>

namespace kfill {

Ambient::Ambient(int n_, int r_) : n(n_), r(r_) {
    if (n < 3 || r < 2) throw error("ambient product requires n >= 3 and r >= 2");
}

std::int64_t ZVector::max_abs() const {
    std::int64_t m = 0;
    for (auto v : c) m = std::max(m, v < 0 ? -v : v);
    return m;
}

bool ZVector::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

ZVector ZVector::operator+(const ZVector& o) const {
    if (c.size() != o.c.size()) throw error("ZVector rank mismatch");
    ZVector out(rank());
    for (std::size_t i = 0; i < c.size(); ++i) out.c[i] = c[i] + o.c[i];
    return out;
}

ZVector ZVector::operator-() const {
    ZVector out(rank());
    for (std::size_t i = 0; i < c.size(); ++i) out.c[i] = -c[i];
    return out;
}

std::string ZVector::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ')';
    return os.str();
}

ZVector basis_vector(int r, int j, std::int64_t value) {
    ZVector q(r);
    q[j] = value;
    return q;
}

Word project(const Ambient& amb, const Word& w, int factor) {
    if (factor < 1 || factor > amb.n) throw error("projection factor out of range");
    const auto kind = w.alphabet().kind;
    if (kind == AlphabetKind::T) throw error("cannot project an abstract word");
    Word out(amb.talph());
    for (const auto& s : w.syllables()) {
        if (kind == AlphabetKind::A) {
            if (s.letter.factor == factor) out.append(tl(s.letter.index), s.exp);
        } else {
            // x[a,i] lifts to a[a,i] a[n,i]^-1
            if (s.letter.factor == factor) out.append(tl(s.letter.index), s.exp);
            else if (factor == amb.n) out.append(tl(s.letter.index), -s.exp);
        }
    }
    return out;
}

ZVector psi_image(const Ambient& amb, const Word& w) {
    ZVector q(amb.r);
    if (w.alphabet().kind == AlphabetKind::A) {
        for (const auto& s : w.syllables()) q[s.letter.index] += s.exp;
    }
    return q;
}

bool equal_in_G(const Ambient& amb, const Word& u, const Word& w) {
    for (int a = 1; a <= amb.n; ++a)
        if (!(project(amb, u, a) == project(amb, w, a))) return false;
    return true;
}

Word lift_iota(const Ambient& amb, const Word& w) {
    if (!(w.alphabet() == amb.xalph())) throw error("lift_iota expects a word over the X-alphabet");
    Word out(amb.aalph());
    for (const auto& s : w.syllables()) {
        std::int64_t k = s.exp < 0 ? -s.exp : s.exp;
        for (std::int64_t c = 0; c < k; ++c) {
            if (s.exp > 0) {
                out.append(xl(s.letter.factor, s.letter.index), 1);
                out.append(xl(amb.n, s.letter.index), -1);
            } else {
                out.append(xl(amb.n, s.letter.index), 1);
                out.append(xl(s.letter.factor, s.letter.index), -1);
            }
        }
    }
    return out;
}

Word u_q(const Ambient& amb, const ZVector& q) {
    if (q.rank() != amb.r) throw error("u_q: vector rank mismatch");
    Word out(amb.aalph());
    for (int j = 1; j <= amb.r; ++j) out.append(xl(amb.n, j), q[j]);
    return out;
}

namespace {

struct Slet {
    int gen;
    int sign;
};

}  // namespace

std::vector<CommutatorTerm> commutator_decompose(const Word& v) {
    if (v.alphabet().kind != AlphabetKind::T) throw error("commutator_decompose expects an abstract word");
    const Alphabet alph = v.alphabet();
    {
        ZVector sums(alph.r);
        for (const auto& s : v.syllables()) sums[s.letter.index] += s.exp;
        if (!sums.is_zero()) throw error("commutator_decompose: nonzero exponent sum");
    }

    std::vector<Slet> seq;
    for (const auto& s : v.syllables()) {
        std::int64_t k = s.exp < 0 ? -s.exp : s.exp;
        for (std::int64_t c = 0; c < k; ++c) seq.push_back(Slet{s.letter.index, s.exp > 0 ? 1 : -1});
    }

    std::vector<CommutatorTerm> terms;
    // Bubble letters into generator-sorted order; each swap of distinct
    // generators contributes one conjugated basic commutator.
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t p = 0; p + 1 < seq.size(); ++p) {
            if (seq[p].gen <= seq[p + 1].gen) continue;
            moved = true;
            const Slet a = seq[p];      // t_a^eps
            const Slet b = seq[p + 1];  // t_b^del
            // [a^eps, b^del] = cbar [t_a, t_b]^sigma c
            Word c(alph);
            int sigma = 1;
            if (a.sign > 0 && b.sign < 0) {
                c.append(tl(b.gen), 1);
                sigma = -1;
            } else if (a.sign < 0 && b.sign > 0) {
                c.append(tl(a.gen), 1);
                sigma = -1;
            } else if (a.sign < 0 && b.sign < 0) {
                c.append(tl(b.gen), 1);
                c.append(tl(a.gen), 1);
            }
            Word prefix(alph);
            for (std::size_t i = 0; i < p; ++i) prefix.append(tl(seq[i].gen), seq[i].sign);
            // term = prefix . cbar [t_a,t_b]^sigma c . prefix^-1 = zbar [..] z
            // with z = c . prefix^-1
            CommutatorTerm term;
            term.conjugator = c * prefix.inverse();
            term.s = a.gen;
            term.t = b.gen;
            term.sign = sigma;
            if (term.sign < 0) {  // [t_s,t_t]^-1 = [t_t,t_s]
                std::swap(term.s, term.t);
                term.sign = 1;
            }
            terms.push_back(std::move(term));
            std::swap(seq[p], seq[p + 1]);
        }
    }
    return terms;
}

Word rewrite_in_kernel_generators(const Ambient& amb, const Word& w) {
    if (!(w.alphabet() == amb.aalph())) throw error("rewrite_in_kernel_generators expects an A-word");
    if (!psi_image(amb, w).is_zero()) throw error("rewrite_in_kernel_generators: nonzero psi-image");

    const Alphabet xa = amb.xalph();
    // w' = w(X^(1),...,X^(n-1),1)
    Word wprime(xa);
    for (const auto& s : w.syllables()) {
        if (s.letter.factor < amb.n) wprime.append(s.letter, s.exp);
    }

    Word v = w * lift_iota(amb, wprime).inverse();
    Word vn = project(amb, v, amb.n);

    Word out(xa);
    for (const auto& term : commutator_decompose(vn)) {
        // z(t_k -> x[1,k]^-1)
        Word z(xa);
        for (const auto& s : term.conjugator.syllables()) z.append(xl(1, s.letter.index), -s.exp);
        Word comm = commutator(Word::letter(xa, xl(1, term.s), -1), Word::letter(xa, xl(2, term.t), -1));
        out.append(conjugate(term.sign >= 0 ? comm : comm.inverse(), z));
    }
    out.append(wprime);
    return out;
}

}  // namespace kfill
