#include "kfill/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace kfill {

Alphabet Alphabet::X(int n, int r) {
    if (n < 3 || r < 2) throw error("X-alphabet requires n >= 3 and r >= 2");
    return Alphabet{AlphabetKind::X, n, r};
}

Alphabet Alphabet::A(int n, int r) {
    if (n < 3 || r < 2) throw error("A-alphabet requires n >= 3 and r >= 2");
    return Alphabet{AlphabetKind::A, n, r};
}

Alphabet Alphabet::T(int k) {
    if (k < 1) throw error("abstract alphabet requires k >= 1");
    return Alphabet{AlphabetKind::T, 0, k};
}

std::string Alphabet::str() const {
    std::ostringstream os;
    switch (kind) {
        case AlphabetKind::X: os << "X n=" << n << " r=" << r; break;
        case AlphabetKind::A: os << "A n=" << n << " r=" << r; break;
        case AlphabetKind::T: os << "T k=" << r; break;
    }
    return os.str();
}

void Word::check_letter(Letter l) const {
    const bool ok = (alph_.kind == AlphabetKind::T)
                        ? (l.factor == 0 && l.index >= 1 && l.index <= alph_.r)
                        : (l.factor >= 1 && l.factor <= alph_.factors() && l.index >= 1 && l.index <= alph_.r);
    if (!ok) {
        std::ostringstream os;
        os << "letter (" << l.factor << "," << l.index << ") not in alphabet " << alph_.str();
        throw error(os.str());
    }
}

Word Word::letter(Alphabet alph, Letter l, std::int64_t exp) {
    Word w(alph);
    w.append(l, exp);
    return w;
}

std::int64_t Word::length() const {
    std::int64_t len = 0;
    for (const auto& s : syl_) len += std::llabs(s.exp);
    return len;
}

void Word::append(Letter l, std::int64_t exp) {
    if (exp == 0) return;
    check_letter(l);
    if (!syl_.empty() && syl_.back().letter == l) {
        syl_.back().exp += exp;
        if (syl_.back().exp == 0) syl_.pop_back();
        return;
    }
    syl_.push_back(Syllable{l, exp});
}

void Word::append(const Word& w) {
    if (!(alph_ == w.alph_)) throw error("alphabet mismatch in word product");
    if (syl_.empty()) {
        syl_ = w.syl_;
        return;
    }
    for (const auto& s : w.syl_) append(s.letter, s.exp);
}

void Word::append_inverse(const Word& w) {
    if (!(alph_ == w.alph_)) throw error("alphabet mismatch in word product");
    for (auto it = w.syl_.rbegin(); it != w.syl_.rend(); ++it) append(it->letter, -it->exp);
}

Word Word::inverse() const {
    Word out(alph_);
    out.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) out.syl_.push_back(Syllable{it->letter, -it->exp});
    return out;
}

Word Word::operator*(const Word& w) const {
    Word out = *this;
    out.append(w);
    return out;
}

std::size_t Word::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& s : syl_) {
        std::size_t k = (static_cast<std::size_t>(static_cast<std::uint16_t>(s.letter.factor)) << 48) ^
                        (static_cast<std::size_t>(static_cast<std::uint16_t>(s.letter.index)) << 32) ^
                        static_cast<std::size_t>(s.exp);
        h ^= k + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::string Word::str() const {
    if (syl_.empty()) return "\xce\xb5";  // epsilon
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syl_) {
        if (!first) os << ' ';
        first = false;
        switch (alph_.kind) {
            case AlphabetKind::X: os << "x[" << s.letter.factor << ',' << s.letter.index << ']'; break;
            case AlphabetKind::A: os << "a[" << s.letter.factor << ',' << s.letter.index << ']'; break;
            case AlphabetKind::T: os << "t[" << s.letter.index << ']'; break;
        }
        if (s.exp != 1) os << '^' << s.exp;
    }
    return os.str();
}

namespace {

void skip_ws(const std::string& s, std::size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

std::int64_t parse_int(const std::string& s, std::size_t& p) {
    std::size_t start = p;
    if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) throw error("expected integer in word at offset " + std::to_string(start));
    return std::stoll(s.substr(start, p - start));
}

}  // namespace

Word Word::parse(Alphabet alph, const std::string& text) {
    Word w(alph);
    std::size_t p = 0;
    skip_ws(text, p);
    // lone epsilon (UTF-8 or ASCII "eps") denotes the empty word
    if (text.compare(p, 2, "\xce\xb5") == 0) {
        p += 2;
        skip_ws(text, p);
        if (p == text.size()) return w;
        throw error("unexpected text after empty-word symbol");
    }
    if (text.compare(p, 3, "eps") == 0 && p + 3 == text.size()) return w;
    while (p < text.size()) {
        char c = text[p];
        Letter l;
        if (c == 'x' || c == 'a') {
            AlphabetKind want = (c == 'x') ? AlphabetKind::X : AlphabetKind::A;
            if (alph.kind != want) throw error(std::string("letter '") + c + "' not valid in alphabet " + alph.str());
            ++p;
            if (p >= text.size() || text[p] != '[') throw error("expected '[' after letter name");
            ++p;
            std::int64_t f = parse_int(text, p);
            if (p >= text.size() || text[p] != ',') throw error("expected ',' in letter");
            ++p;
            std::int64_t i = parse_int(text, p);
            if (p >= text.size() || text[p] != ']') throw error("expected ']' in letter");
            ++p;
            l = Letter{static_cast<std::int16_t>(f), static_cast<std::int16_t>(i)};
        } else if (c == 't') {
            if (alph.kind != AlphabetKind::T) throw error("letter 't' not valid in alphabet " + alph.str());
            ++p;
            if (p >= text.size() || text[p] != '[') throw error("expected '[' after letter name");
            ++p;
            std::int64_t i = parse_int(text, p);
            if (p >= text.size() || text[p] != ']') throw error("expected ']' in letter");
            ++p;
            l = Letter{0, static_cast<std::int16_t>(i)};
        } else {
            throw error(std::string("unexpected character '") + c + "' in word");
        }
        std::int64_t e = 1;
        if (p < text.size() && text[p] == '^') {
            ++p;
            e = parse_int(text, p);
        }
        w.append(l, e);
        skip_ws(text, p);
    }
    return w;
}

Word free_reduce(const Word& w) {
    Word out(w.alphabet());
    for (const auto& s : w.syllables()) out.append(s.letter, s.exp);
    return out;
}

Word inverse(const Word& w) { return w.inverse(); }

Word product(const Word& u, const Word& w) { return u * w; }

Word conjugate(const Word& w, const Word& u) {
    Word out = u.inverse();
    out.append(w);
    out.append(u);
    return out;
}

Word commutator(const Word& u, const Word& w) {
    Word out = u;
    out.append(w);
    out.append_inverse(u);
    out.append_inverse(w);
    return out;
}

Word power(const Word& w, std::int64_t e) {
    if (e == 0 || w.empty()) return Word(w.alphabet());
    if (w.syllables().size() == 1) {
        const auto& s = w.syllables().front();
        return Word::letter(w.alphabet(), s.letter, s.exp * e);
    }
    Word base = e > 0 ? w : w.inverse();
    std::int64_t k = std::llabs(e);
    Word out(w.alphabet());
    for (std::int64_t i = 0; i < k; ++i) out.append(base);
    return out;
}

GroupHom::GroupHom(Alphabet source, Alphabet target) : src_(source), dst_(target) {
    images_.assign(static_cast<std::size_t>(src_.size()), Word(dst_));
}

GroupHom GroupHom::identity(Alphabet alph) {
    GroupHom h(alph, alph);
    if (alph.kind == AlphabetKind::T) {
        for (int i = 1; i <= alph.r; ++i) h.set_image(tl(i), Word::letter(alph, tl(i)));
    } else {
        for (int f = 1; f <= alph.factors(); ++f)
            for (int i = 1; i <= alph.r; ++i) h.set_image(xl(f, i), Word::letter(alph, xl(f, i)));
    }
    return h;
}

int GroupHom::letter_slot(Letter l) const {
    Word probe(src_);
    probe.check_letter(l);
    if (src_.kind == AlphabetKind::T) return l.index - 1;
    return (l.factor - 1) * src_.r + (l.index - 1);
}

void GroupHom::set_image(Letter l, const Word& w) {
    if (!(w.alphabet() == dst_)) throw error("hom image over wrong alphabet");
    images_[static_cast<std::size_t>(letter_slot(l))] = free_reduce(w);
}

const Word& GroupHom::image(Letter l) const { return images_[static_cast<std::size_t>(letter_slot(l))]; }

std::int64_t GroupHom::norm() const {
    std::int64_t m = 0;
    for (const auto& w : images_) m = std::max(m, w.length());
    return m;
}

Word GroupHom::apply(const Word& w) const {
    if (!(w.alphabet() == src_)) throw error("alphabet mismatch in hom application");
    Word out(dst_);
    for (const auto& s : w.syllables()) {
        const Word& img = image(s.letter);
        if (img.syllables().size() <= 1) {
            if (!img.empty()) {
                const auto& t = img.syllables().front();
                out.append(t.letter, t.exp * s.exp);
            }
            continue;
        }
        std::int64_t k = std::llabs(s.exp);
        for (std::int64_t c = 0; c < k; ++c) {
            if (s.exp > 0)
                out.append(img);
            else
                out.append_inverse(img);
        }
    }
    return out;
}

GroupHom GroupHom::compose_after(const GroupHom& other) const {
    if (!(other.dst_ == src_)) throw error("hom composition: alphabets do not match");
    GroupHom out(other.src_, dst_);
    for (std::size_t slot = 0; slot < other.images_.size(); ++slot) out.images_[slot] = apply(other.images_[slot]);
    return out;
}

GroupHom symmetrize_hom(const GroupHom& phi, int n) {
    if (phi.source().kind != AlphabetKind::T || phi.target().kind != AlphabetKind::T)
        throw error("symmetrize_hom expects an abstract homomorphism");
    Alphabet src = Alphabet::X(n, phi.source().r);
    Alphabet dst = Alphabet::X(n, phi.target().r);
    GroupHom out(src, dst);
    for (int a = 1; a < n; ++a) {
        for (int i = 1; i <= phi.source().r; ++i) {
            Word img(dst);
            for (const auto& s : phi.image(tl(i)).syllables()) img.append(xl(a, s.letter.index), s.exp);
            out.set_image(xl(a, i), img);
        }
    }
    return out;
}

}  // namespace kfill
