#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "kfill/relators.hpp"

namespace kfill {

// kappa_{q,q'}(phi^(R))-style reference carried by thick-relation steps so a
// later pass can expand them; phi is a norm <= 1 self-map of F_{r+2} given by
// images (target index, sign), or (0,0) when a generator is killed.
struct ThickKey {
    RelatorKey base;  // relator of R_{r+2}^n
    std::vector<std::pair<int, int>> phi;
    ZVector q, qp;
    std::string str() const;
};

struct Step {
    Word conj;       // u; the step contributes ubar R^orient u
    Word rel;        // realized relator word
    int orient = 1;  // +-1
    std::optional<RelatorKey> key;
    std::shared_ptr<const ThickKey> thick;
};

class Certificate;

struct VerifyReport {
    bool valid = false;
    std::int64_t area = 0;
    std::int64_t radius = 0;
    std::string message;
};

namespace detail {
struct CertNode;
using CertPtr = std::shared_ptr<const CertNode>;

struct LeafData {
    std::vector<Step> steps;
};
struct ConcatData {
    std::vector<CertPtr> parts;
};
struct ConjData {
    CertPtr child;
    Word by;
};
struct InvData {
    CertPtr child;
};

struct CertNode {
    Word target;
    std::variant<LeafData, ConcatData, ConjData, InvData> data;
    std::int64_t area = 0;
};
}  // namespace detail

// A filling certificate: the claim that target equals the left-to-right
// product of the steps' ubar R^s u in the free group. Stored as a DAG so the
// step stream may be far longer than the in-memory representation.
class Certificate {
  public:
    Certificate() = default;

    static Certificate empty(Alphabet alph);
    static Certificate from_steps(Alphabet alph, std::vector<Step> steps);
    static Certificate relator_step(Alphabet alph, const Relator& rel, int orient = 1, const Word& conj = Word());

    const Word& target() const;
    Alphabet alphabet() const { return target().alphabet(); }
    std::int64_t area() const;
    bool is_null() const { return !node_; }

    // Walks the step stream; cb receives (step, context conjugator). The
    // flat conjugator of the emitted step is reduce(step.conj * ctx).
    void for_each_step(const std::function<void(const Step&, const Word& ctx)>& cb) const;

    // Materializes the flat step list (refuses beyond max_steps).
    std::vector<Step> flat_steps(std::int64_t max_steps = 1 << 22) const;

    // Streaming verification with a cancellation stack; exact.
    VerifyReport verify() const;

    friend Certificate concat_cert(const Certificate& a, const Certificate& b);
    friend Certificate concat_certs(Alphabet alph, const std::vector<Certificate>& parts);
    friend Certificate conjugate_cert(const Certificate& c, const Word& u);
    friend Certificate invert_cert(const Certificate& c);
    friend Certificate substitute(const Certificate& outer,
                                  const std::unordered_map<Word, Certificate, WordHash>& expansions, bool strict);
    friend Certificate map_hom(const Certificate& c, const GroupHom& phi);
    friend Certificate with_target(const Certificate& c, const Word& target);

    void write(std::ostream& os) const;
    static Certificate read(std::istream& is);

  private:
    explicit Certificate(detail::CertPtr node) : node_(std::move(node)) {}
    detail::CertPtr node_;
};

Certificate concat_cert(const Certificate& a, const Certificate& b);
Certificate concat_certs(Alphabet alph, const std::vector<Certificate>& parts);
// Certificate for ubar . target . u
Certificate conjugate_cert(const Certificate& c, const Word& u);
Certificate invert_cert(const Certificate& c);
// Lemma 2.2: replace every step whose relator word has an expansion by that
// expansion's steps. strict = every step must have one.
Certificate substitute(const Certificate& outer, const std::unordered_map<Word, Certificate, WordHash>& expansions,
                       bool strict = true);
// Lemma 2.4: apply phi to target, conjugators and relators; steps whose
// relator image reduces to the empty word are dropped.
Certificate map_hom(const Certificate& c, const GroupHom& phi);
// Replaces the stated target (callers must know the words are freely equal).
Certificate with_target(const Certificate& c, const Word& target);

// Builds certificates the way the appendix proofs run: keep a current word,
// insert relators at split points, end at the empty word.  The certificate
// certifies the starting word.
class Transcript {
  public:
    explicit Transcript(Word start);

    const Word& current() const { return cur_; }

    // current == reduce(left . right) must hold; inserts cbar rel^orient c
    // between the two halves and records the compensating step.
    void insert(const Word& left, const Word& right, const Relator& rel, int orient, const Word& inner_conj,
                std::shared_ptr<const ThickKey> thick = nullptr);
    void insert(const Word& left, const Word& right, const Relator& rel, int orient,
                std::shared_ptr<const ThickKey> thick = nullptr);

    // Splices a whole fillable word: current == reduce(left . right) becomes
    // reduce(left . target^orient . right), recording the certificate's steps.
    void insert_cert(const Word& left, const Word& right, const Certificate& cert, int orient = 1);

    // The word must now be empty; returns the certificate.
    Certificate finish() &&;
    // Returns a certificate for start * current^-1 without requiring
    // emptiness.
    Certificate finish_partial() &&;

  private:
    Word start_;
    Word cur_;
    std::vector<Step> steps_;
};

}  // namespace kfill
