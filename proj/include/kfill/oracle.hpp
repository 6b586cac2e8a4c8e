#pragma once

#include <optional>

#include "kfill/certificate.hpp"

namespace kfill {

struct SearchBudget {
    std::int64_t max_area = 4;
    std::int64_t max_conj = 3;
    std::int64_t max_frontier = 2'000'000;
};

struct OracleResult {
    bool exhausted = false;  // budget ran out before a decision
    std::optional<std::int64_t> area;
    std::optional<Certificate> witness;
};

// w is trivial in K iff every factor projection of its lift reduces to the
// empty word.
bool is_null_homotopic(const Ambient& amb, const Word& w);

// Exact bounded area search: breadth-first over products of conjugated
// relators, minimal within the budget.
OracleResult exact_area(const Ambient& amb, const Word& w, const std::vector<Relator>& relators,
                        const SearchBudget& budget);

}  // namespace kfill
