#include "kfill/certificate.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace kfill {

using detail::CertNode;
using detail::CertPtr;
using detail::ConcatData;
using detail::ConjData;
using detail::InvData;
using detail::LeafData;

std::string ThickKey::str() const {
    std::ostringstream os;
    os << "thick{" << base.str() << ",q=" << q.str() << ",q'=" << qp.str() << ",phi=";
    for (std::size_t i = 0; i < phi.size(); ++i) {
        if (i) os << ' ';
        os << phi[i].first * phi[i].second;
    }
    os << '}';
    return os.str();
}

namespace {

CertPtr make_leaf(Word target, std::vector<Step> steps) {
    auto n = std::make_shared<CertNode>();
    n->target = std::move(target);
    n->area = static_cast<std::int64_t>(steps.size());
    n->data = LeafData{std::move(steps)};
    return n;
}

using StepCb = std::function<void(const Step&, const Word& ctx, int flip)>;

void walk(const CertPtr& n, const Word& ctx, int flip, bool rev, const StepCb& cb) {
    if (!n) return;
    if (const auto* leaf = std::get_if<LeafData>(&n->data)) {
        if (!rev) {
            for (const auto& s : leaf->steps) cb(s, ctx, flip);
        } else {
            for (auto it = leaf->steps.rbegin(); it != leaf->steps.rend(); ++it) cb(*it, ctx, flip);
        }
    } else if (const auto* cat = std::get_if<ConcatData>(&n->data)) {
        if (!rev) {
            for (const auto& p : cat->parts) walk(p, ctx, flip, rev, cb);
        } else {
            for (auto it = cat->parts.rbegin(); it != cat->parts.rend(); ++it) walk(*it, ctx, flip, rev, cb);
        }
    } else if (const auto* cj = std::get_if<ConjData>(&n->data)) {
        Word inner = cj->by * ctx;
        walk(cj->child, inner, flip, rev, cb);
    } else if (const auto* iv = std::get_if<InvData>(&n->data)) {
        walk(iv->child, ctx, -flip, !rev, cb);
    }
}

}  // namespace

Certificate Certificate::empty(Alphabet alph) { return Certificate(make_leaf(Word(alph), {})); }

Certificate Certificate::from_steps(Alphabet alph, std::vector<Step> steps) {
    // Target is the folded step product: a certificate that is valid by
    // construction. Loading from a file goes through read() instead, which
    // keeps the stated target.
    Word acc(alph);
    for (const auto& s : steps) {
        acc.append_inverse(s.conj);
        if (s.orient >= 0)
            acc.append(s.rel);
        else
            acc.append_inverse(s.rel);
        acc.append(s.conj);
    }
    return Certificate(make_leaf(std::move(acc), std::move(steps)));
}

Certificate Certificate::relator_step(Alphabet alph, const Relator& rel, int orient, const Word& conj) {
    Step s;
    s.conj = conj.empty() ? Word(alph) : conj;
    s.rel = rel.word;
    s.orient = orient;
    s.key = rel.key;
    return from_steps(alph, {std::move(s)});
}

const Word& Certificate::target() const {
    static const Word kEmpty;
    return node_ ? node_->target : kEmpty;
}

std::int64_t Certificate::area() const { return node_ ? node_->area : 0; }

void Certificate::for_each_step(const std::function<void(const Step&, const Word& ctx)>& cb) const {
    if (!node_) return;
    Word ctx(alphabet());
    walk(
        node_, ctx, 1, false,
        [&](const Step& s, const Word& c, int flip) {
            if (flip > 0) {
                cb(s, c);
            } else {
                Step t = s;
                t.orient = -t.orient;
                cb(t, c);
            }
        });
}

std::vector<Step> Certificate::flat_steps(std::int64_t max_steps) const {
    if (area() > max_steps) throw error("certificate too large to flatten");
    std::vector<Step> out;
    out.reserve(static_cast<std::size_t>(area()));
    for_each_step([&](const Step& s, const Word& ctx) {
        Step t = s;
        t.conj = s.conj * ctx;
        out.push_back(std::move(t));
    });
    return out;
}

VerifyReport Certificate::verify() const {
    VerifyReport rep;
    if (!node_) {
        rep.valid = true;
        return rep;
    }
    Word acc(alphabet());
    Word ctx0(alphabet());
    walk(node_, ctx0, 1, false, [&](const Step& s, const Word& ctx, int flip) {
        acc.append_inverse(ctx);
        acc.append_inverse(s.conj);
        if (s.orient * flip >= 0)
            acc.append(s.rel);
        else
            acc.append_inverse(s.rel);
        acc.append(s.conj);
        acc.append(ctx);
        ++rep.area;
        Word u = s.conj * ctx;
        rep.radius = std::max(rep.radius, u.length());
    });
    rep.valid = (acc == target());
    if (!rep.valid) {
        std::ostringstream os;
        os << "product reduces to '" << acc.str() << "' but target is '" << target().str() << "'";
        rep.message = os.str();
    }
    return rep;
}

Certificate concat_cert(const Certificate& a, const Certificate& b) {
    if (a.is_null()) return b;
    if (b.is_null()) return a;
    auto n = std::make_shared<CertNode>();
    n->target = a.target() * b.target();
    n->area = a.area() + b.area();
    n->data = ConcatData{{a.node_, b.node_}};
    return Certificate(std::move(n));
}

Certificate concat_certs(Alphabet alph, const std::vector<Certificate>& parts) {
    auto n = std::make_shared<CertNode>();
    Word t(alph);
    std::int64_t area = 0;
    ConcatData cat;
    cat.parts.reserve(parts.size());
    for (const auto& p : parts) {
        if (p.is_null()) continue;
        t.append(p.target());
        area += p.area();
        cat.parts.push_back(p.node_);
    }
    n->target = std::move(t);
    n->area = area;
    n->data = std::move(cat);
    return Certificate(std::move(n));
}

Certificate conjugate_cert(const Certificate& c, const Word& u) {
    if (c.is_null()) throw error("conjugate_cert on empty certificate");
    if (u.empty()) return c;
    auto n = std::make_shared<CertNode>();
    n->target = conjugate(c.target(), u);
    n->area = c.area();
    n->data = ConjData{c.node_, u};
    return Certificate(std::move(n));
}

Certificate invert_cert(const Certificate& c) {
    if (c.is_null()) throw error("invert_cert on empty certificate");
    auto n = std::make_shared<CertNode>();
    n->target = c.target().inverse();
    n->area = c.area();
    n->data = InvData{c.node_};
    return Certificate(std::move(n));
}

Certificate substitute(const Certificate& outer, const std::unordered_map<Word, Certificate, WordHash>& expansions,
                       bool strict) {
    if (outer.is_null()) throw error("substitute on empty certificate");
    const Alphabet alph = outer.alphabet();
    std::vector<Certificate> parts;
    std::vector<Step> pending;
    auto flush_pending = [&]() {
        if (pending.empty()) return;
        parts.push_back(Certificate::from_steps(alph, std::move(pending)));
        pending.clear();
    };
    outer.for_each_step([&](const Step& s, const Word& ctx) {
        auto it = expansions.find(s.rel);
        if (it == expansions.end()) {
            if (strict) throw error("substitute: missing expansion for relator " + s.rel.str());
            Step t = s;
            t.conj = s.conj * ctx;
            pending.push_back(std::move(t));
            return;
        }
        const Certificate& exp = it->second;
        if (!(exp.target() == s.rel)) throw error("substitute: expansion target does not match relator word");
        flush_pending();
        Certificate piece = s.orient >= 0 ? exp : invert_cert(exp);
        parts.push_back(conjugate_cert(piece, s.conj * ctx));
    });
    flush_pending();
    Certificate out = concat_certs(alph, parts);
    if (!(out.target() == outer.target()))
        throw error("substitute: outer certificate does not fold to its target (invalid input?)");
    return out;
}

Certificate map_hom(const Certificate& c, const GroupHom& phi) {
    if (c.is_null()) throw error("map_hom on empty certificate");
    std::vector<Step> steps;
    c.for_each_step([&](const Step& s, const Word& ctx) {
        Word rel2 = phi.apply(s.rel);
        if (rel2.empty()) return;
        Step t;
        t.conj = phi.apply(s.conj * ctx);
        t.rel = std::move(rel2);
        t.orient = s.orient;
        steps.push_back(std::move(t));
    });
    Word target2 = phi.apply(c.target());
    auto n = make_leaf(std::move(target2), std::move(steps));
    return Certificate(std::move(n));
}

Certificate with_target(const Certificate& c, const Word& target) {
    if (!(c.target() == target)) throw error("with_target: words differ: " + c.target().str() + " vs " + target.str());
    return c;
}

Transcript::Transcript(Word start) : start_(start), cur_(std::move(start)) {}

void Transcript::insert(const Word& left, const Word& right, const Relator& rel, int orient, const Word& inner_conj,
                        std::shared_ptr<const ThickKey> thick) {
    Word glued = left * right;
    if (!(glued == cur_))
        throw error("transcript: split mismatch; current='" + cur_.str() + "' split='" + glued.str() + "'");
    Step s;
    s.conj = inner_conj * left.inverse();
    s.rel = rel.word;
    s.orient = -orient;
    s.key = rel.key;
    s.thick = std::move(thick);
    steps_.push_back(std::move(s));
    Word next = left;
    next.append_inverse(inner_conj);
    if (orient >= 0)
        next.append(rel.word);
    else
        next.append_inverse(rel.word);
    next.append(inner_conj);
    next.append(right);
    cur_ = std::move(next);
}

void Transcript::insert(const Word& left, const Word& right, const Relator& rel, int orient,
                        std::shared_ptr<const ThickKey> thick) {
    insert(left, right, rel, orient, Word(cur_.alphabet()), std::move(thick));
}

void Transcript::insert_cert(const Word& left, const Word& right, const Certificate& cert, int orient) {
    Word glued = left * right;
    if (!(glued == cur_))
        throw error("transcript: split mismatch; current='" + cur_.str() + "' split='" + glued.str() + "'");
    Certificate piece = conjugate_cert(orient >= 0 ? invert_cert(cert) : cert, left.inverse());
    piece.for_each_step([&](const Step& s, const Word& ctx) {
        Step t = s;
        t.conj = s.conj * ctx;
        steps_.push_back(std::move(t));
    });
    Word next = left;
    if (orient >= 0)
        next.append(cert.target());
    else
        next.append_inverse(cert.target());
    next.append(right);
    cur_ = std::move(next);
}

Certificate Transcript::finish() && {
    if (!cur_.empty()) throw error("transcript did not reach the empty word; residue: " + cur_.str());
    return Certificate::from_steps(start_.alphabet(), std::move(steps_));
}

Certificate Transcript::finish_partial() && {
    return Certificate::from_steps(start_.alphabet(), std::move(steps_));
}

void Certificate::write(std::ostream& os) const {
    const Alphabet alph = alphabet();
    os << "alphabet " << alph.str() << '\n';
    os << "target " << target().str() << '\n';
    std::int64_t area = 0, radius = 0;
    for_each_step([&](const Step& s, const Word& ctx) {
        Word u = s.conj * ctx;
        radius = std::max(radius, u.length());
        ++area;
        os << "step " << u.str() << " | ";
        if (s.key)
            os << s.key->str();
        else
            os << s.rel.str();
        os << " | " << (s.orient >= 0 ? "+1" : "-1") << '\n';
    });
    os << "end area=" << area << " radius=" << radius << '\n';
}

namespace {

Alphabet parse_alphabet_line(const std::string& line) {
    std::istringstream is(line);
    std::string tag, kind;
    is >> tag >> kind;
    if (tag != "alphabet") throw error("certificate file: expected 'alphabet' line");
    auto field = [&](const char* name) {
        std::string tok;
        is >> tok;
        std::string prefix = std::string(name) + "=";
        if (tok.rfind(prefix, 0) != 0) throw error("certificate file: expected " + prefix);
        return std::stoi(tok.substr(prefix.size()));
    };
    if (kind == "X") {
        int n = field("n"), r = field("r");
        return Alphabet::X(n, r);
    }
    if (kind == "A") {
        int n = field("n"), r = field("r");
        return Alphabet::A(n, r);
    }
    if (kind == "T") {
        int k = field("k");
        return Alphabet::T(k);
    }
    throw error("certificate file: unknown alphabet kind " + kind);
}

}  // namespace

Certificate Certificate::read(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw error("certificate file: empty");
    Alphabet alph = parse_alphabet_line(line);
    if (!std::getline(is, line) || line.rfind("target ", 0) != 0) throw error("certificate file: expected target line");
    Word target = Word::parse(alph, line.substr(7));

    std::vector<Step> steps;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.rfind("end", 0) == 0) break;
        if (line.rfind("step ", 0) != 0) throw error("certificate file: expected step line, got: " + line);
        std::string body = line.substr(5);
        auto p1 = body.find(" | ");
        auto p2 = body.rfind(" | ");
        if (p1 == std::string::npos || p2 == p1) throw error("certificate file: malformed step line");
        std::string conj_s = body.substr(0, p1);
        std::string rel_s = body.substr(p1 + 3, p2 - p1 - 3);
        std::string orient_s = body.substr(p2 + 3);
        Step s;
        s.conj = Word::parse(alph, conj_s);
        s.orient = (orient_s.rfind('-', 0) == 0) ? -1 : 1;
        if (!rel_s.empty() && (rel_s[0] == 'O' || rel_s[0] == 'C')) {
            RelatorKey key = parse_relator_key(rel_s);
            if (alph.kind == AlphabetKind::T) throw error("certificate file: relator key over abstract alphabet");
            Ambient amb(alph.kind == AlphabetKind::X ? alph.n : alph.n, alph.r);
            s.key = key;
            s.rel = realize(amb, key);
        } else {
            s.rel = Word::parse(alph, rel_s);
        }
        steps.push_back(std::move(s));
    }
    auto n = make_leaf(std::move(target), std::move(steps));
    return Certificate(std::move(n));
}

}  // namespace kfill
