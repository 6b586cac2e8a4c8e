#include "kfill/relators.hpp"

#include <array>
#include <sstream>

namespace kfill {

std::string family_name(Family f) {
    switch (f) {
        case Family::O1: return "O1";
        case Family::O2: return "O2";
        case Family::O3: return "O3";
        case Family::O4: return "O4";
        case Family::O5: return "O5";
        case Family::C: return "C";
    }
    return "?";
}

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw error(msg);
}

void check_sign(int s) { require(s == 1 || s == -1, "relator sign must be +-1"); }

std::string sgn(int s) { return s > 0 ? "+1" : "-1"; }

Word xw(const Alphabet& xa, int factor, int index, std::int64_t exp) { return Word::letter(xa, xl(factor, index), exp); }

}  // namespace

std::string RelatorKey::str() const {
    std::ostringstream os;
    os << family_name(family) << '[';
    const RelParams& q = p;
    switch (family) {
        case Family::O1: os << "i=" << q.i << ",a=" << q.a << ",b=" << q.b; break;
        case Family::O2: os << "i=" << q.i << ",j=" << q.j << ",a=" << q.a << ",b=" << q.b << ",c=" << q.c; break;
        case Family::O3:
            os << "i=" << q.i << ",j=" << q.j << ",e=" << sgn(q.e) << ",d=" << sgn(q.d) << ",a=" << q.a << ",b=" << q.b;
            break;
        case Family::O4:
            os << "i=" << q.i << ",j=" << q.j << ",k=" << q.k << ",e=" << sgn(q.e) << ",d=" << sgn(q.d) << ",a=" << q.a
               << ",b=" << q.b;
            break;
        case Family::O5:
            os << "i=" << q.i << ",j=" << q.j << ",k=" << q.k << ",h=" << q.h << ",e=" << sgn(q.e) << ",d=" << sgn(q.d)
               << ",s=" << sgn(q.s) << ",t=" << sgn(q.t) << ",a=" << q.a << ",b=" << q.b;
            break;
        case Family::C: os << "a=" << q.a << ",i=" << q.i << ";b=" << q.b << ",j=" << q.j; break;
    }
    os << ']';
    return os.str();
}

Word realize(const Ambient& amb, const RelatorKey& key) {
    const RelParams& q = key.p;
    const int n = amb.n, r = amb.r;
    const Alphabet xa = amb.xalph();
    auto in_idx = [&](int v) { return v >= 1 && v <= r; };
    auto in_fac = [&](int v) { return v >= 1 && v <= n - 1; };

    switch (key.family) {
        case Family::O1: {
            require(in_idx(q.i) && in_fac(q.a) && in_fac(q.b) && q.a != q.b, "O1 needs i in 1..r, a != b in 1..n-1");
            return commutator(xw(xa, q.a, q.i, 1), xw(xa, q.b, q.i, 1));
        }
        case Family::O2: {
            require(in_idx(q.i) && in_idx(q.j) && q.i != q.j, "O2 needs distinct i,j in 1..r");
            require(in_fac(q.a) && in_fac(q.b) && in_fac(q.c) && q.a != q.b && q.a != q.c && q.b != q.c,
                    "O2 needs pairwise distinct factors a,b,c in 1..n-1");
            return commutator(xw(xa, q.a, q.i, 1), xw(xa, q.b, q.j, 1) * xw(xa, q.c, q.j, -1));
        }
        case Family::O3: {
            require(in_idx(q.i) && in_idx(q.j) && q.i != q.j, "O3 needs distinct i,j in 1..r");
            require(in_fac(q.a) && in_fac(q.b) && q.a != q.b, "O3 needs a != b in 1..n-1");
            check_sign(q.e);
            check_sign(q.d);
            Word w = commutator(xw(xa, q.a, q.i, q.e), xw(xa, q.b, q.j, q.d));
            w.append(commutator(xw(xa, q.a, q.j, q.d), xw(xa, q.b, q.i, q.e)));
            return w;
        }
        case Family::O4: {
            require(in_idx(q.i) && in_idx(q.j) && in_idx(q.k) && q.i != q.j && q.i != q.k && q.j != q.k,
                    "O4 needs pairwise distinct i,j,k in 1..r");
            require(in_fac(q.a) && in_fac(q.b) && q.a != q.b, "O4 needs a != b in 1..n-1");
            check_sign(q.e);
            check_sign(q.d);
            Word inner = commutator(xw(xa, q.b, q.j, q.e), xw(xa, q.a, q.k, q.d) * xw(xa, q.b, q.k, -q.d));
            return commutator(xw(xa, q.a, q.i, 1), inner);
        }
        case Family::O5: {
            require(in_idx(q.i) && in_idx(q.j) && in_idx(q.k) && in_idx(q.h), "O5 indices out of range");
            require(q.i != q.j && q.i != q.k && q.i != q.h && q.j != q.k && q.j != q.h && q.k != q.h,
                    "O5 needs pairwise distinct i,j,k,h");
            require(in_fac(q.a) && in_fac(q.b) && q.a != q.b, "O5 needs a != b in 1..n-1");
            check_sign(q.e);
            check_sign(q.d);
            check_sign(q.s);
            check_sign(q.t);
            Word left = commutator(xw(xa, q.a, q.i, q.e), xw(xa, q.a, q.k, q.d) * xw(xa, q.b, q.k, -q.d));
            Word right = commutator(xw(xa, q.b, q.j, q.s), xw(xa, q.a, q.h, q.t) * xw(xa, q.b, q.h, -q.t));
            return commutator(left, right);
        }
        case Family::C: {
            require(in_idx(q.i) && in_idx(q.j), "C indices out of range");
            require(q.a >= 1 && q.b >= 1 && q.a <= n && q.b <= n && q.a != q.b, "C needs distinct factors in 1..n");
            const Alphabet aa = amb.aalph();
            return commutator(Word::letter(aa, xl(q.a, q.i)), Word::letter(aa, xl(q.b, q.j)));
        }
    }
    throw error("unknown relator family");
}

Relator make_relator(const Ambient& amb, const RelatorKey& key) { return Relator{key, realize(amb, key)}; }

std::vector<Relator> enumerate_relators(const Ambient& amb) {
    const int n = amb.n, r = amb.r;
    std::vector<Relator> out;
    const std::array<int, 2> signs{1, -1};

    auto add = [&](Family f, RelParams p) { out.push_back(make_relator(amb, RelatorKey{f, p})); };

    // O1 is part of every presentation; keep a < b (the swapped pair realizes
    // the inverse word).
    for (int i = 1; i <= r; ++i)
        for (int a = 1; a <= n - 1; ++a)
            for (int b = a + 1; b <= n - 1; ++b) add(Family::O1, RelParams{.i = i, .a = a, .b = b});

    const bool use_o2 = n >= 4;
    const bool use_o3 = n == 3;
    const bool use_o4 = n <= 4;
    const bool use_o5 = n == 3;

    if (use_o2) {
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) {
                if (i == j) continue;
                for (int a = 1; a <= n - 1; ++a)
                    for (int b = 1; b <= n - 1; ++b)
                        for (int c = 1; c <= n - 1; ++c) {
                            if (a == b || a == c || b == c) continue;
                            add(Family::O2, RelParams{.i = i, .j = j, .a = a, .b = b, .c = c});
                        }
            }
    }
    if (use_o3) {
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) {
                if (i == j) continue;
                for (int e : signs)
                    for (int d : signs)
                        for (int a = 1; a <= n - 1; ++a)
                            for (int b = 1; b <= n - 1; ++b) {
                                if (a == b) continue;
                                add(Family::O3, RelParams{.i = i, .j = j, .a = a, .b = b, .e = e, .d = d});
                            }
            }
    }
    if (use_o4) {
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j)
                for (int k = 1; k <= r; ++k) {
                    if (i == j || i == k || j == k) continue;
                    for (int e : signs)
                        for (int d : signs)
                            for (int a = 1; a <= n - 1; ++a)
                                for (int b = 1; b <= n - 1; ++b) {
                                    if (a == b) continue;
                                    add(Family::O4, RelParams{.i = i, .j = j, .k = k, .a = a, .b = b, .e = e, .d = d});
                                }
                }
    }
    if (use_o5) {
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j)
                for (int k = 1; k <= r; ++k)
                    for (int h = 1; h <= r; ++h) {
                        if (i == j || i == k || i == h || j == k || j == h || k == h) continue;
                        for (int e : signs)
                            for (int d : signs)
                                for (int s : signs)
                                    for (int t : signs)
                                        for (int a = 1; a <= n - 1; ++a)
                                            for (int b = 1; b <= n - 1; ++b) {
                                                if (a == b) continue;
                                                add(Family::O5, RelParams{.i = i,
                                                                          .j = j,
                                                                          .k = k,
                                                                          .h = h,
                                                                          .a = a,
                                                                          .b = b,
                                                                          .e = e,
                                                                          .d = d,
                                                                          .s = s,
                                                                          .t = t});
                                            }
                    }
    }
    return out;
}

std::vector<Relator> product_relators(const Ambient& amb) {
    std::vector<Relator> out;
    for (int a = 1; a <= amb.n; ++a)
        for (int b = a + 1; b <= amb.n; ++b)
            for (int i = 1; i <= amb.r; ++i)
                for (int j = 1; j <= amb.r; ++j)
                    out.push_back(make_relator(amb, RelatorKey{Family::C, RelParams{.i = i, .j = j, .a = a, .b = b}}));
    return out;
}

namespace {

int parse_val(const std::string& text, std::size_t& pos, char field) {
    if (pos >= text.size() || text[pos] != field) throw error(std::string("relator key: expected field ") + field);
    ++pos;
    if (pos >= text.size() || text[pos] != '=') throw error("relator key: expected '='");
    ++pos;
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw error("relator key: expected integer");
    int v = std::stoi(text.substr(start, pos - start));
    if (pos < text.size() && (text[pos] == ',' || text[pos] == ';')) ++pos;
    return v;
}

}  // namespace

RelatorKey parse_relator_key(const std::string& text) {
    RelatorKey key;
    std::size_t pos = 0;
    if (text.compare(0, 1, "C") == 0 && text.size() > 1 && text[1] == '[') {
        key.family = Family::C;
        pos = 2;
        key.p.a = parse_val(text, pos, 'a');
        key.p.i = parse_val(text, pos, 'i');
        key.p.b = parse_val(text, pos, 'b');
        key.p.j = parse_val(text, pos, 'j');
    } else if (text.size() > 2 && text[0] == 'O' && text[2] == '[') {
        pos = 3;
        switch (text[1]) {
            case '1':
                key.family = Family::O1;
                key.p.i = parse_val(text, pos, 'i');
                key.p.a = parse_val(text, pos, 'a');
                key.p.b = parse_val(text, pos, 'b');
                break;
            case '2':
                key.family = Family::O2;
                key.p.i = parse_val(text, pos, 'i');
                key.p.j = parse_val(text, pos, 'j');
                key.p.a = parse_val(text, pos, 'a');
                key.p.b = parse_val(text, pos, 'b');
                key.p.c = parse_val(text, pos, 'c');
                break;
            case '3':
                key.family = Family::O3;
                key.p.i = parse_val(text, pos, 'i');
                key.p.j = parse_val(text, pos, 'j');
                key.p.e = parse_val(text, pos, 'e');
                key.p.d = parse_val(text, pos, 'd');
                key.p.a = parse_val(text, pos, 'a');
                key.p.b = parse_val(text, pos, 'b');
                break;
            case '4':
                key.family = Family::O4;
                key.p.i = parse_val(text, pos, 'i');
                key.p.j = parse_val(text, pos, 'j');
                key.p.k = parse_val(text, pos, 'k');
                key.p.e = parse_val(text, pos, 'e');
                key.p.d = parse_val(text, pos, 'd');
                key.p.a = parse_val(text, pos, 'a');
                key.p.b = parse_val(text, pos, 'b');
                break;
            case '5':
                key.family = Family::O5;
                key.p.i = parse_val(text, pos, 'i');
                key.p.j = parse_val(text, pos, 'j');
                key.p.k = parse_val(text, pos, 'k');
                key.p.h = parse_val(text, pos, 'h');
                key.p.e = parse_val(text, pos, 'e');
                key.p.d = parse_val(text, pos, 'd');
                key.p.s = parse_val(text, pos, 's');
                key.p.t = parse_val(text, pos, 't');
                key.p.a = parse_val(text, pos, 'a');
                key.p.b = parse_val(text, pos, 'b');
                break;
            default: throw error("unknown relator family in key: " + text);
        }
    } else {
        throw error("malformed relator key: " + text);
    }
    if (pos >= text.size() || text[pos] != ']') throw error("relator key: expected ']'");
    return key;
}

std::string alias_str(const Word& w) {
    if (w.alphabet().kind != AlphabetKind::X || w.alphabet().n > 4) return w.str();
    if (w.empty()) return "1";
    static const char* names = "xyz";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : w.syllables()) {
        if (!first) os << ' ';
        first = false;
        os << names[s.letter.factor - 1] << s.letter.index;
        if (s.exp != 1) os << '^' << s.exp;
    }
    return os.str();
}

}  // namespace kfill
