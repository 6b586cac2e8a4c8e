#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kfill/ambient.hpp"
#include "kfill/word.hpp"

namespace kfill {

// Candidate relator families for K_r^n(r), plus the product-group
// commutator relators C.
enum class Family : std::uint8_t { O1, O2, O3, O4, O5, C };

std::string family_name(Family f);

// Parameter bundle; fields unused by a family stay 0.
struct RelParams {
    int i = 0, j = 0, k = 0, h = 0;  // indices in 1..r
    int a = 0, b = 0, c = 0;         // factors
    int e = 0, d = 0, s = 0, t = 0;  // signs +-1

    bool operator==(const RelParams& o) const = default;
};

struct RelatorKey {
    Family family = Family::O1;
    RelParams p;

    bool operator==(const RelatorKey& o) const = default;
    std::string str() const;
};

struct Relator {
    RelatorKey key;
    Word word;
};

// Realizes family templates (section 3.1.2 displays); validates constraints.
Word realize(const Ambient& amb, const RelatorKey& key);
Relator make_relator(const Ambient& amb, const RelatorKey& key);

// Complete, duplicate-free, deterministic enumeration of R_r^n.
std::vector<Relator> enumerate_relators(const Ambient& amb);

// [a[a,i], a[b,j]] for a < b; these present the ambient product.
std::vector<Relator> product_relators(const Ambient& amb);

RelatorKey parse_relator_key(const std::string& text);

// n=3 alias rendering: x_i = x[1,i], y_i = x[2,i], z_i = x[3,i] (n=4).
std::string alias_str(const Word& w);

}  // namespace kfill
