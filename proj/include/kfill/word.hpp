#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kfill {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Alphabets:
//   X(n,r): letters x[a,i], a in 1..n-1, i in 1..r  (kernel generators)
//   A(n,r): letters a[a,i], a in 1..n,   i in 1..r  (ambient product)
//   T(k):   letters t[i],   i in 1..k                (abstract free group)
enum class AlphabetKind : std::uint8_t { X, A, T };

struct Alphabet {
    AlphabetKind kind = AlphabetKind::T;
    int n = 0;  // factor count (0 for abstract)
    int r = 0;  // rank per factor, or k for abstract

    static Alphabet X(int n, int r);
    static Alphabet A(int n, int r);
    static Alphabet T(int k);

    int factors() const { return kind == AlphabetKind::A ? n : (kind == AlphabetKind::X ? n - 1 : 0); }
    // Number of distinct letters.
    int size() const { return kind == AlphabetKind::T ? r : factors() * r; }

    bool operator==(const Alphabet& o) const = default;
    std::string str() const;
};

// A letter is (factor, index); factor is 0 for abstract alphabets.
struct Letter {
    std::int16_t factor = 0;
    std::int16_t index = 0;

    bool operator==(const Letter& o) const = default;
    auto operator<=>(const Letter& o) const = default;
};

struct Syllable {
    Letter letter;
    std::int64_t exp = 0;  // nonzero in a normalized word

    bool operator==(const Syllable& o) const = default;
};

// Freely reduced word, run-length encoded. All constructors and operations
// return reduced words; adjacent syllables never share a letter.
class Word {
  public:
    Word() = default;
    explicit Word(Alphabet alph) : alph_(alph) {}

    static Word letter(Alphabet alph, Letter l, std::int64_t exp = 1);

    const Alphabet& alphabet() const { return alph_; }
    const std::vector<Syllable>& syllables() const { return syl_; }
    bool empty() const { return syl_.empty(); }
    std::int64_t length() const;  // |w| = sum of |exp|

    // Appends l^exp, merging and cancelling against the tail.
    void append(Letter l, std::int64_t exp);
    void append(const Word& w);
    void append_inverse(const Word& w);

    Word inverse() const;
    Word operator*(const Word& w) const;
    bool operator==(const Word& o) const { return alph_ == o.alph_ && syl_ == o.syl_; }

    std::string str() const;
    static Word parse(Alphabet alph, const std::string& text);

    // Hash of the syllable sequence (alphabet not mixed in).
    std::size_t hash() const;

    void check_letter(Letter l) const;

  private:
    Alphabet alph_;
    std::vector<Syllable> syl_;
};

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word product(const Word& u, const Word& w);
// ubar * w * u  (conjugator on the right acts first)
Word conjugate(const Word& w, const Word& u);
// [u,w] = u w ubar wbar
Word commutator(const Word& u, const Word& w);
Word power(const Word& w, std::int64_t e);

struct WordHash {
    std::size_t operator()(const Word& w) const { return w.hash(); }
};

// Finite map from source letters to target words.
class GroupHom {
  public:
    GroupHom() = default;
    GroupHom(Alphabet source, Alphabet target);

    static GroupHom identity(Alphabet alph);

    const Alphabet& source() const { return src_; }
    const Alphabet& target() const { return dst_; }

    void set_image(Letter l, const Word& w);
    const Word& image(Letter l) const;

    std::int64_t norm() const;  // max image length
    Word apply(const Word& w) const;

    // this after other: (this o other)(w) = this(other(w))
    GroupHom compose_after(const GroupHom& other) const;

  private:
    int letter_slot(Letter l) const;

    Alphabet src_, dst_;
    std::vector<Word> images_;
};

// Diagonal extension of an abstract hom F_r -> F_r' to X-alphabets:
// x[a,i] |-> phi(t[i]) written in the letters x[a,*].
GroupHom symmetrize_hom(const GroupHom& phi, int n);

inline Letter xl(int factor, int index) { return Letter{static_cast<std::int16_t>(factor), static_cast<std::int16_t>(index)}; }
inline Letter tl(int index) { return Letter{0, static_cast<std::int16_t>(index)}; }

}  // namespace kfill
