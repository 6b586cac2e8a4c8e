#include "kfill/tactics.hpp"

#include <sstream>

#include "tactics_detail.hpp"

namespace kfill {

namespace detail {

Certificate cp_split_right(const Word& v1, const Certificate& c1, const Certificate& c2) {
    return concat_cert(c1, conjugate_cert(c2, v1.inverse()));
}

Certificate cp_split_left(const Word& u1, const Certificate& c1, const Certificate& c2) {
    return concat_cert(conjugate_cert(c2, u1.inverse()), c1);
}

Certificate cp_inv_right(const Word& v, const Certificate& c) { return conjugate_cert(invert_cert(c), v); }

Certificate cp_inv_left(const Word& u, const Certificate& c) { return conjugate_cert(invert_cert(c), u); }

Certificate comm_right_filled(const Word& u, const Certificate& cB) {
    return concat_cert(conjugate_cert(cB, u.inverse()), invert_cert(cB));
}

Certificate comm_left_filled(const Certificate& cB, const Word& v) {
    return concat_cert(cB, conjugate_cert(invert_cert(cB), v.inverse()));
}

const Certificate& expect(const Certificate& c, const Word& w, const char* where) {
    if (!(c.target() == w))
        throw error(std::string("tactic '") + where + "': built certificate for '" + c.target().str() +
                    "' but wanted '" + w.str() + "'");
    return c;
}

Certificate comm_prod_right(const std::vector<Word>& pieces, const std::vector<Certificate>& certs) {
    if (pieces.empty() || pieces.size() != certs.size()) throw error("comm_prod_right: piece/cert mismatch");
    Certificate acc = certs.back();
    for (std::size_t l = pieces.size() - 1; l-- > 0;) acc = cp_split_right(pieces[l], certs[l], acc);
    return acc;
}

Certificate comm_prod_left(const std::vector<Word>& pieces, const std::vector<Certificate>& certs) {
    if (pieces.empty() || pieces.size() != certs.size()) throw error("comm_prod_left: piece/cert mismatch");
    Certificate acc = certs.back();
    for (std::size_t l = pieces.size() - 1; l-- > 0;) acc = cp_split_left(pieces[l], certs[l], acc);
    return acc;
}

SignedComm signed_comm(Alphabet alph, Letter l1, int e1, Letter l2, int e2) {
    SignedComm out{1, Word(alph)};
    if (e1 > 0 && e2 < 0) {
        out.conj = Word::letter(alph, l2);
        out.orient = -1;
    } else if (e1 < 0 && e2 > 0) {
        out.conj = Word::letter(alph, l1);
        out.orient = -1;
    } else if (e1 < 0 && e2 < 0) {
        out.conj = Word::letter(alph, l2) * Word::letter(alph, l1);
    }
    return out;
}

Word permute_factors_word(const Word& w, const std::vector<int>& perm) {
    Word out(w.alphabet());
    for (const auto& s : w.syllables()) out.append(xl(perm[static_cast<std::size_t>(s.letter.factor)], s.letter.index), s.exp);
    return out;
}

Certificate permute_factors(const TacticCtx& ctx, int rank, const Certificate& c, const std::vector<int>& perm) {
    const Ambient amb = ctx.amb(rank);
    std::vector<Step> steps;
    c.for_each_step([&](const Step& s, const Word& cx) {
        Step t;
        t.conj = permute_factors_word(s.conj * cx, perm);
        t.orient = s.orient;
        if (s.key && s.key->family != Family::C) {
            RelatorKey k = *s.key;
            k.p.a = perm[static_cast<std::size_t>(k.p.a)];
            k.p.b = perm[static_cast<std::size_t>(k.p.b)];
            if (k.p.c) k.p.c = perm[static_cast<std::size_t>(k.p.c)];
            if (k.family == Family::O1 && k.p.a > k.p.b) {
                std::swap(k.p.a, k.p.b);
                t.orient = -t.orient;
            }
            t.key = k;
            t.rel = realize(amb, k);
        } else {
            t.rel = permute_factors_word(s.rel, perm);
        }
        steps.push_back(std::move(t));
    });
    Certificate out = Certificate::from_steps(amb.xalph(), std::move(steps));
    return expect(out, permute_factors_word(c.target(), perm), "permute_factors");
}

Certificate permute_indices(const TacticCtx& ctx, int rank_src, int rank_dst, const Certificate& c,
                            const std::vector<int>& perm) {
    const Ambient amb = ctx.amb(rank_dst);
    auto mapw = [&](const Word& w) {
        Word out(amb.xalph());
        for (const auto& s : w.syllables()) out.append(xl(s.letter.factor, perm[static_cast<std::size_t>(s.letter.index)]), s.exp);
        return out;
    };
    std::vector<Step> steps;
    c.for_each_step([&](const Step& s, const Word& cx) {
        Step t;
        t.conj = mapw(s.conj * cx);
        t.orient = s.orient;
        if (s.key && s.key->family != Family::C) {
            RelatorKey k = *s.key;
            auto m = [&](int v) { return v ? perm[static_cast<std::size_t>(v)] : 0; };
            k.p.i = m(k.p.i);
            k.p.j = m(k.p.j);
            k.p.k = m(k.p.k);
            k.p.h = m(k.p.h);
            t.key = k;
            t.rel = realize(amb, k);
        } else {
            t.rel = mapw(s.rel);
        }
        steps.push_back(std::move(t));
    });
    (void)rank_src;
    Certificate out = Certificate::from_steps(amb.xalph(), std::move(steps));
    return expect(out, mapw(c.target()), "permute_indices");
}

Word flip_signs_word(const Word& w, const std::vector<int>& flips) {
    auto flipped = [&](int idx) { return std::find(flips.begin(), flips.end(), idx) != flips.end(); };
    Word out(w.alphabet());
    for (const auto& s : w.syllables()) out.append(s.letter, flipped(s.letter.index) ? -s.exp : s.exp);
    return out;
}

Certificate flip_signs_cert(TacticCtx& ctx, int rank, const Certificate& c, const std::vector<int>& flips) {
    const Ambient amb = ctx.amb(rank);
    const Alphabet xa = amb.xalph();
    auto flipped = [&](int idx) { return std::find(flips.begin(), flips.end(), idx) != flips.end(); };
    std::vector<Certificate> parts;
    c.for_each_step([&](const Step& s, const Word& cx) {
        Word conj = flip_signs_word(s.conj * cx, flips);
        Certificate piece;
        if (s.key && s.key->family != Family::C) {
            RelatorKey k = *s.key;
            int orient = s.orient;
            Word pre(xa);
            switch (k.family) {
                case Family::O1: {
                    if (flipped(k.p.i)) {
                        // [xbar, ybar] = (yx)^-1 [x,y] (yx)
                        pre = Word::letter(xa, xl(k.p.b, k.p.i)) * Word::letter(xa, xl(k.p.a, k.p.i));
                    }
                    break;
                }
                case Family::O3: {
                    if (flipped(k.p.i)) k.p.e = -k.p.e;
                    if (flipped(k.p.j)) k.p.d = -k.p.d;
                    break;
                }
                case Family::O4: {
                    if (flipped(k.p.j)) k.p.e = -k.p.e;
                    if (flipped(k.p.k)) k.p.d = -k.p.d;
                    if (flipped(k.p.i)) {
                        // [xbar_i, B] = xbar_i [x_i, B]^-1 x_i
                        pre = Word::letter(xa, xl(k.p.a, k.p.i));
                        orient = -orient;
                    }
                    break;
                }
                case Family::O5: {
                    if (flipped(k.p.i)) k.p.e = -k.p.e;
                    if (flipped(k.p.j)) k.p.s = -k.p.s;
                    if (flipped(k.p.k)) k.p.d = -k.p.d;
                    if (flipped(k.p.h)) k.p.t = -k.p.t;
                    break;
                }
                case Family::O2: {
                    if (flipped(k.p.i) || flipped(k.p.j)) {
                        // images are multi-step; fill them through the n>=4
                        // same-index layer
                        int e = flipped(k.p.i) ? -1 : 1;
                        int d = flipped(k.p.j) ? -1 : 1;
                        Certificate img =
                            bc::same_index_b(ctx, rank, k.p.i, k.p.j, k.p.a, k.p.b, k.p.c, e, d);
                        piece = conjugate_cert(s.orient >= 0 ? img : invert_cert(img), conj);
                        parts.push_back(std::move(piece));
                        return;
                    }
                    break;
                }
                case Family::C: break;
            }
            Relator rel = make_relator(amb, k);
            // conj by pre: flipped relator word = pre^-1 rel^orient' pre
            piece = Certificate::relator_step(xa, rel, orient, pre * conj);
            parts.push_back(std::move(piece));
            return;
        }
        Step t;
        t.conj = conj;
        t.rel = flip_signs_word(s.rel, flips);
        t.orient = s.orient;
        parts.push_back(Certificate::from_steps(xa, {std::move(t)}));
    });
    Certificate out = concat_certs(xa, parts);
    return expect(out, flip_signs_word(c.target(), flips), "flip_signs_cert");
}

// [X, Y B Ybar] given certificates for [X, B] and [[Xbar, Ybar], B].
Certificate comm_conj_chunk(const Word& X, const Word& Y, const Word& B, const Certificate& c_xb,
                            const Certificate& c_symb) {
    Certificate head = cp_split_left(X, c_xb, c_symb);  // [X [Xbar,Ybar], B] = [Ybar X Y, B]
    Certificate mid = conjugate_cert(head, Y.inverse());
    return expect(mid, commutator(X, conjugate(B, Y.inverse())), "comm_conj_chunk");
}

// [X, [Y, B]] given certificates for [X, B] and [[Xbar, Ybar], B]; X, Y
// arbitrary words. This is the conjugation move the appendix uses when the
// head does not commute with the inner bracket's first argument.
Certificate tc_via_conj(const Word& X, const Word& Y, const Word& B, const Certificate& c_xb,
                        const Certificate& c_symb) {
    Certificate mid = comm_conj_chunk(X, Y, B, c_xb, c_symb);
    Certificate c = cp_split_right(conjugate(B, Y.inverse()), mid, cp_inv_right(B, c_xb));
    return expect(c, commutator(X, commutator(Y, B)), "tc_via_conj");
}

// [U, Y B Ybar] given certificates for [U, Y] and [U, B].
Certificate comm_conj_chunk_u(const Word& U, const Word& Y, const Word& B, const Certificate& c_uy,
                              const Certificate& c_ub) {
    Certificate om = cp_inv_left(U, c_uy);  // [Ubar, Y]
    Certificate head = cp_split_left(U, c_ub, comm_left_filled(om, B));
    Certificate mid = conjugate_cert(head, Y.inverse());
    return expect(mid, commutator(U, conjugate(B, Y.inverse())), "comm_conj_chunk_u");
}

// [U, [Y, B]] given certificates for [U, Y] and [U, B].
Certificate comm_nested(const Word& U, const Word& Y, const Word& B, const Certificate& c_uy,
                        const Certificate& c_ub) {
    Certificate om = cp_inv_left(U, c_uy);  // [Ubar, Y]
    Certificate head = cp_split_left(U, c_ub, comm_left_filled(om, B));
    Certificate mid = conjugate_cert(head, Y.inverse());
    Certificate c = cp_split_right(conjugate(B, Y.inverse()), mid, cp_inv_right(B, c_ub));
    return expect(c, commutator(U, commutator(Y, B)), "comm_nested");
}

// [u^N, V] by peeling one u at a time; base fills [u^{sgn N}, V].
Certificate peel_power_left(const Word& u, std::int64_t N, const Certificate& base) {
    if (N == 0) throw error("peel_power_left: N must be nonzero");
    Word u1 = N > 0 ? u : u.inverse();
    Certificate acc = base;
    for (std::int64_t L = 1; L < std::llabs(N); ++L) acc = cp_split_left(u1, base, acc);
    return acc;
}

// [U, v^N] by peeling; base fills [U, v^{sgn N}].
Certificate peel_power_right(const Word& v, std::int64_t N, const Certificate& base) {
    if (N == 0) throw error("peel_power_right: N must be nonzero");
    Word v1 = N > 0 ? v : v.inverse();
    Certificate acc = base;
    for (std::int64_t L = 1; L < std::llabs(N); ++L) acc = cp_split_right(v1, base, acc);
    return acc;
}

}  // namespace detail

std::string TacticParams::str() const {
    std::ostringstream os;
    os << "r=" << rank;
    if (i) os << " i=" << i;
    if (j) os << " j=" << j;
    if (k) os << " k=" << k;
    if (h) os << " h=" << h;
    if (a) os << " a=" << a;
    if (b) os << " b=" << b;
    if (c) os << " c=" << c;
    if (g) os << " g=" << g;
    os << " e=" << e << " d=" << d << " s=" << s << " t=" << t;
    os << " N=" << N << " M=" << M << " P=" << P << " Q=" << Q;
    if (q.rank()) os << " q=" << q.str();
    if (qp.rank()) os << " q'=" << qp.str();
    if (m) os << " m=" << m;
    return os.str();
}

Certificate& TacticCtx::memo(const std::string& key, const std::function<Certificate()>& build) {
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Certificate c = build();
    return memo_.emplace(key, std::move(c)).first->second;
}

Certificate fill_comm(const Word& u, const Word& v, const AtomFiller& atom) {
    const Alphabet alph = u.alphabet();
    if (u.empty() || v.empty()) return Certificate::empty(alph);
    const auto& us = u.syllables();
    if (us.size() > 1 || std::llabs(us.front().exp) > 1) {
        // [u1 u2, v] = u1 [u2,v] u1^-1 . [u1,v]
        const Syllable& s = us.front();
        int e = s.exp > 0 ? 1 : -1;
        Word u1 = Word::letter(alph, s.letter, e);
        Word u2 = Word::letter(alph, s.letter, s.exp - e);
        for (std::size_t i = 1; i < us.size(); ++i) u2.append(us[i].letter, us[i].exp);
        Certificate rest = fill_comm(u2, v, atom);
        Certificate first = fill_comm(u1, v, atom);
        std::vector<Certificate> parts;
        if (!rest.target().empty() || rest.area() > 0) parts.push_back(conjugate_cert(rest, u1.inverse()));
        parts.push_back(std::move(first));
        return concat_certs(alph, parts);
    }
    const auto& vs = v.syllables();
    if (vs.size() > 1 || std::llabs(vs.front().exp) > 1) {
        // [u, v1 v2] = [u,v1] . v1 [u,v2] v1^-1
        const Syllable& s = vs.front();
        int e = s.exp > 0 ? 1 : -1;
        Word v1 = Word::letter(alph, s.letter, e);
        Word v2 = Word::letter(alph, s.letter, s.exp - e);
        for (std::size_t i = 1; i < vs.size(); ++i) v2.append(vs[i].letter, vs[i].exp);
        Certificate first = fill_comm(u, v1, atom);
        Certificate rest = fill_comm(u, v2, atom);
        std::vector<Certificate> parts;
        parts.push_back(std::move(first));
        if (!rest.target().empty() || rest.area() > 0) parts.push_back(conjugate_cert(rest, v1.inverse()));
        return concat_certs(alph, parts);
    }
    return atom(us.front().letter, us.front().exp > 0 ? 1 : -1, vs.front().letter, vs.front().exp > 0 ? 1 : -1);
}

Certificate fill_o1_power(const TacticCtx& ctx, int rank, int a, int b, int i, std::int64_t p, std::int64_t q) {
    const Ambient amb = ctx.amb(rank);
    const Alphabet xa = amb.xalph();
    Relator base = ctx.rel(rank, Family::O1, RelParams{.i = i, .a = std::min(a, b), .b = std::max(a, b)});
    int flip = a < b ? 1 : -1;
    AtomFiller atom = [&](Letter l1, int e1, Letter l2, int e2) {
        // [x[a,i]^e1, x[b,i]^e2] as a conjugate of the O1 relator
        Word u = Word::letter(xa, l1, 1);
        Word v = Word::letter(xa, l2, 1);
        int orient = flip;
        Word conj(xa);
        if (e1 > 0 && e2 < 0) {
            conj = v;
            orient = -orient;
        } else if (e1 < 0 && e2 > 0) {
            conj = u;
            orient = -orient;
        } else if (e1 < 0 && e2 < 0) {
            conj = v * u;
        }
        return Certificate::relator_step(xa, base, orient, conj);
    };
    return fill_comm(Word::letter(xa, xl(a, i), p), Word::letter(xa, xl(b, i), q), atom);
}

// Placeholder bodies; filled in by the per-appendix translation units.
Certificate fill_lemma(TacticCtx&, const LemmaId& id, const TacticParams&) {
    throw error("fill_lemma: unknown lemma " + id.str());
}

}  // namespace kfill
