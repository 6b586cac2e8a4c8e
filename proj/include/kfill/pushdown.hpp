#pragma once

#include "kfill/tactics.hpp"

namespace kfill {

// Parameterizes push_q; sigma is the fixed-point-free map a |-> (a mod (n-1)) + 1,
// which reproduces the appendix formulas for n = 3.
struct PushContext {
    Ambient amb;
    ZVector q;

    PushContext(Ambient a, ZVector q_) : amb(a), q(std::move(q_)) {
        if (q.rank() != amb.r) throw error("push context: vector rank mismatch");
    }
    int sigma(int a) const { return (a % (amb.n - 1)) + 1; }
};

// push_q(w) for w over the A-alphabet; exact cocycle map into F(X).
Word push(const PushContext& ctx, const Word& w);

// Quadratic area-radius filler for the ambient product: certificate over the
// product relators C_r for a word trivial in G. area <= |w|^2, radius <= |w|.
Certificate fill_product(const Ambient& amb, const Word& w);

// Prop 3.12: certificate for push_q([a[a,i],a[b,j]]) whose steps are thick
// relations of R_r^n(m); step count bounded by a constant.
Certificate fill_pushed_product_relator(TacticCtx& ctx, const PushContext& pc, int fa, int i, int fb, int j);

struct FillStats {
    std::int64_t area = 0;
    std::int64_t radius = 0;
};

// Theorem 2.8 pipeline: lift, fill in G, push every conjugated product
// relator, expand thick relations. Returns a certificate over R_r^n.
Certificate fill_kernel_word(TacticCtx& ctx, const Ambient& amb, const Word& w);

}  // namespace kfill
