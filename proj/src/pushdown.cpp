#include "kfill/pushdown.hpp"

#include <algorithm>

#include "kfill/oracle.hpp"

namespace kfill {

// prod_{i=lo..hi} x[factor,i]^{-q_i}  (the q-vector words of section 3.2)
Word qword(Alphabet xalph, int factor, const ZVector& q, int lo, int hi) {
    Word out(xalph);
    for (int i = lo; i <= hi; ++i) out.append(xl(factor, i), -q[i]);
    return out;
}

namespace {

// push_q of a single letter a[f,j]^{+1}
Word push_letter(const PushContext& pc, int f, int j) {
    const Alphabet xa = pc.amb.xalph();
    if (f < pc.amb.n) {
        Word p = qword(xa, pc.sigma(f), pc.q, 1, j - 1);
        Word out = p;
        out.append(xl(f, j), 1);
        out.append_inverse(p);
        return out;
    }
    Word out = qword(xa, 2, pc.q, 1, pc.amb.r);
    out.append(xl(1, j), -1);
    out.append_inverse(qword(xa, 2, pc.q, j, pc.amb.r));
    out.append(xl(1, j), 1);
    out.append_inverse(qword(xa, 2, pc.q, 1, j - 1));
    return out;
}

}  // namespace

Word push(const PushContext& pc, const Word& w) {
    if (!(w.alphabet() == pc.amb.aalph())) throw error("push expects a word over the A-alphabet");
    Word out(pc.amb.xalph());
    ZVector q = pc.q;
    for (const auto& s : w.syllables()) {
        const int f = s.letter.factor, j = s.letter.index;
        if (f < pc.amb.n && s.exp != 0) {
            // the conjugating prefix only involves coordinates < j, so the
            // whole run shares it
            PushContext cur(pc.amb, q);
            Word p = qword(pc.amb.xalph(), cur.sigma(f), q, 1, j - 1);
            out.append(p);
            out.append(xl(f, j), s.exp);
            out.append_inverse(p);
            q[j] += s.exp;
            continue;
        }
        std::int64_t k = s.exp < 0 ? -s.exp : s.exp;
        for (std::int64_t c = 0; c < k; ++c) {
            if (s.exp > 0) {
                out.append(push_letter(PushContext(pc.amb, q), f, j));
                q[j] += 1;
            } else {
                q[j] -= 1;
                out.append_inverse(push_letter(PushContext(pc.amb, q), f, j));
            }
        }
    }
    return out;
}

namespace {

// (relator, orient, inner conj c) with [u^e, v^d] = cbar C^orient c, where u,v
// are ambient letters from distinct factors.
struct CommAsRelator {
    Relator rel;
    int orient;
    Word conj;
};

CommAsRelator comm_to_product_relator(const Ambient& amb, Letter u, int e, Letter v, int d) {
    const Alphabet aa = amb.aalph();
    bool flip = u.factor > v.factor;
    Letter a = flip ? v : u;
    Letter b = flip ? u : v;
    Relator rel = make_relator(amb, RelatorKey{Family::C, RelParams{.i = a.index, .j = b.index, .a = a.factor, .b = b.factor}});
    // [a,b] base; signs via [u,v^-1] = v^-1 [v,u] v etc.
    Word ua = Word::letter(aa, u, 1), vb = Word::letter(aa, v, 1);
    int orient = flip ? -1 : 1;
    Word conj(aa);
    int ee = e, dd = d;
    if (ee > 0 && dd > 0) {
        // conj empty
    } else if (ee > 0 && dd < 0) {
        conj = Word::letter(aa, v, 1);
        orient = -orient;
    } else if (ee < 0 && dd > 0) {
        conj = Word::letter(aa, u, 1);
        orient = -orient;
    } else {
        conj = Word::letter(aa, v, 1) * Word::letter(aa, u, 1);
    }
    return CommAsRelator{std::move(rel), orient, std::move(conj)};
}

}  // namespace

Certificate fill_product(const Ambient& amb, const Word& w) {
    if (!(w.alphabet() == amb.aalph())) throw error("fill_product expects a word over the A-alphabet");
    Word start = free_reduce(w);
    if (!equal_in_G(amb, start, Word(amb.aalph()))) throw error("fill_product: word is nontrivial in G");

    Transcript tr(start);
    // Bubble letters into factor-sorted order; each swap costs one product
    // relator and the sorted word reduces freely to the empty word.
    while (true) {
        const Word& cur = tr.current();
        bool swapped = false;
        Word left(amb.aalph());
        const auto& syl = cur.syllables();
        for (std::size_t si = 0; si + 1 < syl.size(); ++si) {
            const Syllable& s1 = syl[si];
            const Syllable& s2 = syl[si + 1];
            if (s1.letter.factor > s2.letter.factor) {
                // left takes everything before the last letter of s1
                int e1 = s1.exp > 0 ? 1 : -1;
                int e2 = s2.exp > 0 ? 1 : -1;
                left.append(s1.letter, s1.exp - e1);
                Word right(amb.aalph());
                right.append(s1.letter, e1);
                right.append(s2.letter, s2.exp);
                for (std::size_t sj = si + 2; sj < syl.size(); ++sj) right.append(syl[sj].letter, syl[sj].exp);
                auto cr = comm_to_product_relator(amb, s1.letter, e1, s2.letter, e2);
                // u v = [u,v] v u, so inserting [u,v]^-1 swaps the pair
                Word ins_left = left * cr.conj.inverse();
                Word ins_right = cr.conj * right;
                tr.insert(ins_left, ins_right, cr.rel, -cr.orient);
                swapped = true;
                break;
            }
            left.append(s1.letter, s1.exp);
        }
        if (!swapped) break;
    }
    return std::move(tr).finish();
}

Certificate fill_pushed_product_relator(TacticCtx& ctx, const PushContext& pc, int fa, int i, int fb, int j) {
    (void)ctx;
    (void)pc;
    (void)fa;
    (void)i;
    (void)fb;
    (void)j;
    throw error("fill_pushed_product_relator: not yet implemented");
}

Certificate fill_kernel_word(TacticCtx& ctx, const Ambient& amb, const Word& w) {
    (void)ctx;
    (void)amb;
    (void)w;
    throw error("fill_kernel_word: not yet implemented");
}

}  // namespace kfill
