#include "kfill/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace kfill {

bool is_null_homotopic(const Ambient& amb, const Word& w) {
    for (int a = 1; a <= amb.n; ++a)
        if (!project(amb, w, a).empty()) return false;
    return true;
}

namespace {

struct Move {
    std::size_t prefix_letters;
    std::size_t rel;
    int orient;
};

struct SearchState {
    const std::vector<Relator>* rels = nullptr;
    SearchBudget budget;
    std::int64_t max_rel_len = 0;
    std::unordered_map<Word, std::int64_t, WordHash> seen;  // word -> best remaining explored with
    bool truncated = false;
    std::vector<Move> path;
    std::vector<Move> found;
};

Word prefix_word(const Word& w, std::size_t letters) {
    Word out(w.alphabet());
    std::size_t left = letters;
    for (const auto& s : w.syllables()) {
        if (!left) break;
        std::size_t run = static_cast<std::size_t>(s.exp < 0 ? -s.exp : s.exp);
        std::size_t take = std::min(run, left);
        out.append(s.letter, s.exp < 0 ? -static_cast<std::int64_t>(take) : static_cast<std::int64_t>(take));
        left -= take;
    }
    return out;
}

Word suffix_word(const Word& w, std::size_t skip_letters) {
    Word out(w.alphabet());
    std::size_t left = skip_letters;
    for (const auto& s : w.syllables()) {
        std::size_t run = static_cast<std::size_t>(s.exp < 0 ? -s.exp : s.exp);
        if (left >= run) {
            left -= run;
            continue;
        }
        std::size_t take = run - left;
        out.append(s.letter, s.exp < 0 ? -static_cast<std::int64_t>(take) : static_cast<std::int64_t>(take));
        left = 0;
    }
    return out;
}

// Depth-limited search over relator insertions; true once the empty word is
// reached (path holds the insertion sequence).
bool dfs(SearchState& st, const Word& cur, std::int64_t remaining) {
    if (cur.empty()) {
        st.found = st.path;
        return true;
    }
    if (remaining <= 0) return false;
    if (cur.length() > remaining * st.max_rel_len) return false;

    auto it = st.seen.find(cur);
    if (it != st.seen.end()) {
        if (it->second >= remaining) return false;
        it->second = remaining;
    } else if (static_cast<std::int64_t>(st.seen.size()) >= st.budget.max_frontier) {
        st.truncated = true;
        return false;
    } else {
        st.seen.emplace(cur, remaining);
    }

    const std::size_t len = static_cast<std::size_t>(cur.length());
    for (std::size_t pos = 0; pos <= len; ++pos) {
        Word pre = prefix_word(cur, pos);
        if (pre.length() > st.budget.max_conj) break;  // positions only get deeper
        Word suf = suffix_word(cur, pos);
        for (std::size_t ri = 0; ri < st.rels->size(); ++ri) {
            const Word& rw = (*st.rels)[ri].word;
            for (int orient : {1, -1}) {
                Word next = pre;
                if (orient > 0)
                    next.append(rw);
                else
                    next.append_inverse(rw);
                next.append(suf);
                st.path.push_back(Move{pos, ri, orient});
                if (dfs(st, next, remaining - 1)) return true;
                st.path.pop_back();
            }
        }
    }
    return false;
}

}  // namespace

OracleResult exact_area(const Ambient& amb, const Word& w, const std::vector<Relator>& relators,
                        const SearchBudget& budget) {
    OracleResult res;
    Word start = free_reduce(w);
    if (start.empty()) {
        res.area = 0;
        res.witness = Certificate::empty(start.alphabet());
        return res;
    }
    if (start.alphabet().kind != AlphabetKind::T && !is_null_homotopic(amb, start)) {
        res.exhausted = true;  // no budget can ever fill a nontrivial word
        return res;
    }

    SearchState st;
    st.rels = &relators;
    st.budget = budget;
    for (const auto& r : relators) st.max_rel_len = std::max(st.max_rel_len, r.word.length());
    if (st.max_rel_len == 0) {
        res.exhausted = true;
        return res;
    }

    bool any_truncation = false;
    for (std::int64_t depth = 1; depth <= budget.max_area; ++depth) {
        st.seen.clear();
        st.truncated = false;
        st.path.clear();
        st.found.clear();
        if (dfs(st, start, depth)) {
            Transcript tr(start);
            for (const Move& mv : st.found) {
                Word pre = prefix_word(tr.current(), mv.prefix_letters);
                Word suf = suffix_word(tr.current(), mv.prefix_letters);
                tr.insert(pre, suf, relators[mv.rel], mv.orient);
            }
            res.area = static_cast<std::int64_t>(st.found.size());
            res.witness = std::move(tr).finish();
            res.exhausted = any_truncation;  // minimality uncertified if true
            return res;
        }
        if (st.truncated) any_truncation = true;
    }
    res.exhausted = any_truncation;
    return res;
}

}  // namespace kfill
