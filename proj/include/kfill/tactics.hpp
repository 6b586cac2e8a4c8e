#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>

#include "kfill/certificate.hpp"

namespace kfill {

// Identifier for an entry of the appendix lemma library. tag: A (n=3),
// B (n>=5), C (n=4), S3 (section 3 propositions). item is 0 when a lemma has
// a single statement.
struct LemmaId {
    std::string name;  // e.g. "A.same_index"
    int item = 0;

    std::string str() const { return item ? name + "." + std::to_string(item) : name; }
};

struct TacticParams {
    int rank = 2;  // r of the ambient instance the lemma is drawn at
    int i = 0, j = 0, k = 0, h = 0;
    int a = 0, b = 0, c = 0, g = 0;  // factors (g = a fourth factor)
    int e = 1, d = 1, s = 1, t = 1;  // signs
    std::int64_t N = 1, M = 1, P = 1, Q = 1;
    ZVector q, qp;
    int m = 1;
    std::vector<std::pair<int, int>> phi;  // norm <= 1 self-map images
    std::optional<RelatorKey> base;        // base relator for thick instances

    std::string str() const;
};

// Shared caches for one number-of-factors n; certificates at every rank r'
// are built against Ambient(n, r').
class TacticCtx {
  public:
    explicit TacticCtx(int n) : n_(n) {}

    int n() const { return n_; }
    Ambient amb(int rank) const { return Ambient(n_, rank); }
    Relator rel(int rank, Family f, RelParams p) const { return make_relator(amb(rank), RelatorKey{f, p}); }

    Certificate& memo(const std::string& key, const std::function<Certificate()>& build);

  private:
    int n_;
    std::unordered_map<std::string, Certificate> memo_;
};

// ---- generic commutator machinery -------------------------------------

// Certificate for [u, v] assembled from certificates for letter pairs;
// atom(l1,e1,l2,e2) must fill [l1^e1, l2^e2] for e in {+-1}.
using AtomFiller = std::function<Certificate(Letter, int, Letter, int)>;
Certificate fill_comm(const Word& u, const Word& v, const AtomFiller& atom);

// [x[a,i]^p, x[b,i]^q] from the same-index relator O1; area |p q|.
Certificate fill_o1_power(const TacticCtx& ctx, int rank, int a, int b, int i, std::int64_t p, std::int64_t q);

// ---- the lemma library -------------------------------------------------

Certificate fill_lemma(TacticCtx& ctx, const LemmaId& id, const TacticParams& p);

// Prop 3.3: target phi^(R.word) for norm(phi) <= 1, R in R_{rank}; the
// returned certificate is over R_{rank'}.
Certificate fill_symmetric_image(TacticCtx& ctx, const GroupHom& phi, const Relator& R);

// Prop 3.7 (via 3.4/3.5/3.6): arbitrary phi.
Certificate fill_hom_image(TacticCtx& ctx, const GroupHom& phi, const Relator& R);

// Prop 3.8: omega(g_i) = g_i^{N_i}; exps is 1-based per index.
Certificate fill_power(TacticCtx& ctx, const Relator& R, const std::vector<std::int64_t>& exps);

// Defs 3.9/3.10: the thick relation word kappa_{q,q'}(phi^(base)).
Word thick_relator(const TacticCtx& ctx, const ThickKey& key);

// Prop 3.11: certificate over R_r for a thick relation.
Certificate fill_thick(TacticCtx& ctx, const ThickKey& key);

// kappa_{q,q'} as a hom F(X_{r+2}) -> F(X_r) on symmetrized letters.
GroupHom kappa_hom(const TacticCtx& ctx, const ZVector& q, const ZVector& qp);

// Maps a certificate over R_{r+2} through kappa^; relator steps become
// thick-relation steps carrying their ThickKey.
Certificate kappa_map_cert(const TacticCtx& ctx, const Certificate& c, const ZVector& q, const ZVector& qp);

// Expand every thick-relation step via fill_thick.
Certificate expand_thick_steps(TacticCtx& ctx, const Certificate& c);

// ---- inventory (for the acceptance sweep) ------------------------------

struct LemmaSpec {
    LemmaId id;
    // admissible randomized parameters under the acceptance caps
    std::function<TacticParams(std::mt19937_64&)> sample;
    std::function<Certificate(TacticCtx&, const TacticParams&)> build;
    // area bound shape evaluated at the params (constant factors free)
    std::function<double(const TacticParams&)> shape;
};

const std::vector<LemmaSpec>& lemma_inventory(int n);

}  // namespace kfill
