#pragma once

// Internal machinery shared by the appendix translation units.

#include "kfill/tactics.hpp"

namespace kfill::detail {

// [U, V1 V2] from certificates for [U,V1] and [U,V2].
Certificate cp_split_right(const Word& v1, const Certificate& c1, const Certificate& c2);
// [U1 U2, V] from certificates for [U1,V] and [U2,V].
Certificate cp_split_left(const Word& u1, const Certificate& c1, const Certificate& c2);
// [U, V^-1] from [U, V].
Certificate cp_inv_right(const Word& v, const Certificate& c);
// [U^-1, V] from [U, V].
Certificate cp_inv_left(const Word& u, const Certificate& c);
// [U, B] where B is itself fillable: (U B U^-1) . B^-1.
Certificate comm_right_filled(const Word& u, const Certificate& cB);
// [B, V] where B is fillable: B . (V B^-1 V^-1).
Certificate comm_left_filled(const Certificate& cB, const Word& v);

// Asserts the certificate target equals the expected (reduced) word.
const Certificate& expect(const Certificate& c, const Word& w, const char* where);

// [U, P_1 ... P_m] from certificates for each [U, P_l]; pieces[l] holds the
// words P_l and certs[l] the matching certificates.
Certificate comm_prod_right(const std::vector<Word>& pieces, const std::vector<Certificate>& certs);
// [P_1 ... P_m, V] from certificates for each [P_l, V].
Certificate comm_prod_left(const std::vector<Word>& pieces, const std::vector<Certificate>& certs);

// [X, Y B Ybar] given certificates for [X, B] and [[Xbar, Ybar], B].
Certificate comm_conj_chunk(const Word& X, const Word& Y, const Word& B, const Certificate& c_xb,
                            const Certificate& c_symb);
// [X, [Y, B]] given certificates for [X, B] and [[Xbar, Ybar], B].
Certificate tc_via_conj(const Word& X, const Word& Y, const Word& B, const Certificate& c_xb,
                        const Certificate& c_symb);
// [U, Y B Ybar] and [U, [Y, B]] given certificates for [U, Y] and [U, B].
Certificate comm_conj_chunk_u(const Word& U, const Word& Y, const Word& B, const Certificate& c_uy,
                              const Certificate& c_ub);
Certificate comm_nested(const Word& U, const Word& Y, const Word& B, const Certificate& c_uy, const Certificate& c_ub);
// [u^N, V] and [U, v^N] by peeling one letter at a time from a base filler.
Certificate peel_power_left(const Word& u, std::int64_t N, const Certificate& base);
Certificate peel_power_right(const Word& v, std::int64_t N, const Certificate& base);

// Signed single-relator presentation [l1^e1, l2^e2] = conj^-1 R^orient conj of
// the base relator word [l1, l2].
struct SignedComm {
    int orient;
    Word conj;
};
SignedComm signed_comm(Alphabet alph, Letter l1, int e1, Letter l2, int e2);

// Factor permutation: maps x[a,i] |-> x[perm[a],i], remapping relator keys.
Certificate permute_factors(const TacticCtx& ctx, int rank, const Certificate& c, const std::vector<int>& perm);
Word permute_factors_word(const Word& w, const std::vector<int>& perm);

// Index permutation: maps x[a,i] |-> x[a,perm[i]], remapping relator keys.
Certificate permute_indices(const TacticCtx& ctx, int rank_src, int rank_dst, const Certificate& c,
                            const std::vector<int>& perm);

// The sign-flip automorphism x[a,i] -> x[a,i]^-1 for i in the flip set,
// applied to a certificate with keys preserved.
Certificate flip_signs_cert(TacticCtx& ctx, int rank, const Certificate& c, const std::vector<int>& flips);
Word flip_signs_word(const Word& w, const std::vector<int>& flips);

// ---- appendix A (n = 3) ------------------------------------------------

namespace a3 {

// same-index items; heads carry explicit signs.
Certificate swap12(TacticCtx& ctx, int rank, int i, int j, int e, int d);
Certificate swap21(TacticCtx& ctx, int rank, int i, int j, int e, int d);
Certificate swap_mixed_x(TacticCtx& ctx, int rank, int i, int j, int e, int d);  // A.1(2)
Certificate swap_mixed_y(TacticCtx& ctx, int rank, int i, int j, int e, int d);  // A.1(3)

// [x-or-y head_i^{eh}, [mid_j^e, inner_k^d-form]]; head=1 means the head
// letter lives in factor 1. xy_inner selects x_k^d ybar_k^d vs y_k^d xbar_k^d.
Certificate tc(TacticCtx& ctx, int rank, int head, int i, int eh, int j, int e, int k, int d, bool xy_inner);

// quadruple commutators [[x_i^e, x_k^d ybar_k^d], [y_j^s, x_h^t ybar_h^t]]
// for arbitrary index coincidences (A.1 item 6).
Certificate qc(TacticCtx& ctx, int rank, int i, int j, int k, int h, int e, int d, int s, int t);

// A.1 items 7-9.
Certificate sym1(TacticCtx& ctx, int rank, int i, int j, int k, int e, int d, int s);
Certificate sym2(TacticCtx& ctx, int rank, int i, int j, int k, int h, int e, int d, int s, int t);
Certificate sym3(TacticCtx& ctx, int rank, int i, int j, int k, int h, int e, int d, int s, int t);

// doubling lemmas
Certificate doubling_o1(TacticCtx& ctx, int rank, int i, int i2);
Certificate doubling_o3(TacticCtx& ctx, int rank, int i, int i2, int j, int e, int d);
Certificate doubling_o4x(TacticCtx& ctx, int rank, int item, int i, int i2, int j, int j2, int k, int k2, int e, int d);
Certificate doubling_o4y(TacticCtx& ctx, int rank, int item, int i, int i2, int j, int j2, int k, int k2, int e, int d);
Certificate doubling_o5(TacticCtx& ctx, int rank, int item, int i, int i2, int j, int j2, int k, int k2, int h, int h2,
                        int e, int d, int s, int t);

// power lemmas
Certificate power_o1(TacticCtx& ctx, int rank, int i, std::int64_t N);
Certificate power_swap(TacticCtx& ctx, int rank, int item, int i, int j, int e, std::int64_t N);
Certificate power_quad(TacticCtx& ctx, int rank, int item, int i, int j, int k, int h, int e, int d, int s, int t,
                       std::int64_t N);
Certificate power_triple(TacticCtx& ctx, int rank, int item, int i, int j, int k, int e, std::int64_t N);

// Lemma prop:thick-3 items 1-4
Certificate thick3(TacticCtx& ctx, int rank, int item, int i, int j, int k, int h, std::int64_t N, std::int64_t M,
                   std::int64_t P, std::int64_t Q);

// thick-word lemma items 1-4 (certificates over thick relations)
Certificate thick_word(TacticCtx& ctx, int rank, int item, int i, int j, int e, int d, const ZVector& q,
                       const ZVector& qp);

// generic [U, V] with every letter pair filled through the same-index layer
Certificate comm_by_relators(TacticCtx& ctx, int rank, const Word& u, const Word& v);

}  // namespace a3

// ---- appendix B (n >= 5) and C (n = 4) ----------------------------------

namespace bc {

// B: same-index lemma  [x^a_i^e, x^b_j^d xbar^c_j^d] for any i,j.
Certificate same_index_b(TacticCtx& ctx, int rank, int i, int j, int a, int b, int c, int e, int d);

Certificate doubling_o1_b(TacticCtx& ctx, int rank, int i, int i2, int a, int b);
Certificate doubling_o2_b(TacticCtx& ctx, int rank, int i, int i2, int j, int a, int b, int c);

Certificate power_o1_b(TacticCtx& ctx, int rank, int i, int a, int b, std::int64_t N);
Certificate power_o2_b(TacticCtx& ctx, int rank, int i, int j, int a, int b, int c, std::int64_t M, std::int64_t N);

// C: trivial-words lemma items 1-3 and the recycling of n=3 certificates.
Certificate tw4_item1(TacticCtx& ctx, int rank, int i, int j, int a, int b, int e, int d);
Certificate tw4_item2(TacticCtx& ctx, int rank, int i, int j, int k, int a, int b, int e, int d);
Certificate tw4_item3(TacticCtx& ctx, int rank, int i, int j, int k, int h, int a, int b, int e, int d, int s, int t);
Certificate trivial_words_4(TacticCtx& ctx, int rank, int item, int i, int j, int k, int h, int a, int b, int e, int d,
                            int s, int t);
Certificate recycle_three_factors(TacticCtx& ctx, int rank, const Certificate& c3, int a, int b);

// [x^hf_i^eh, [(x^b_j)^e, (x^ff_k)^d (xbar^b_k)^d]] for n = 4.
Certificate tc4(TacticCtx& ctx, int rank, int hf, int i, int eh, int b, int j, int e, int ff, int k, int d);

Certificate power_tc_4(TacticCtx& ctx, int rank, int i, int j, int k, int a, int b, std::int64_t N, std::int64_t M,
                       std::int64_t P);

}  // namespace bc

}  // namespace kfill::detail
