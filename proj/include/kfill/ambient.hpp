#pragma once

#include <cstdint>
#include <vector>

#include "kfill/word.hpp"

namespace kfill {

// The ambient product G = F_r^(1) x ... x F_r^(n) with psi: G -> Z^r
// sending a[a,j] to e_j, and the kernel K = ker(psi).
struct Ambient {
    int n = 0;
    int r = 0;

    Ambient(int n_, int r_);

    Alphabet xalph() const { return Alphabet::X(n, r); }
    Alphabet aalph() const { return Alphabet::A(n, r); }
    Alphabet talph() const { return Alphabet::T(r); }
};

struct ZVector {
    std::vector<std::int64_t> c;

    ZVector() = default;
    explicit ZVector(int r) : c(static_cast<std::size_t>(r), 0) {}

    int rank() const { return static_cast<int>(c.size()); }
    std::int64_t& operator[](int i) { return c[static_cast<std::size_t>(i - 1)]; }  // 1-based
    std::int64_t operator[](int i) const { return c[static_cast<std::size_t>(i - 1)]; }
    std::int64_t max_abs() const;
    bool is_zero() const;

    ZVector operator+(const ZVector& o) const;
    ZVector operator-() const;
    bool operator==(const ZVector& o) const = default;
    std::string str() const;
};

ZVector basis_vector(int r, int j, std::int64_t value = 1);

// Projection onto the a-th factor; accepts words over the A- or X-alphabet.
Word project(const Ambient& amb, const Word& w, int factor);

// psi-image; every X-letter maps to 0, a[a,j] to e_j.
ZVector psi_image(const Ambient& amb, const Word& w);

bool equal_in_G(const Ambient& amb, const Word& u, const Word& w);

// The fixed lift: x[a,i] |-> a[a,i] a[n,i]^-1.
Word lift_iota(const Ambient& amb, const Word& w);

// u_q = a[n,1]^{q_1} ... a[n,r]^{q_r}.
Word u_q(const Ambient& amb, const ZVector& q);

// One factor zbar [t_s, t_t]^sign z of a commutator decomposition.
struct CommutatorTerm {
    Word conjugator;  // z, over the abstract alphabet
    int s = 0;
    int t = 0;
    int sign = 1;
};

// Writes v (zero exponent sum in every generator) as a product of conjugated
// basic commutators; the product freely reduces to v.
std::vector<CommutatorTerm> commutator_decompose(const Word& v);

// Lemma 3.1: rewrite a psi-trivial A-word as an X-word representing the
// same element of G.
Word rewrite_in_kernel_generators(const Ambient& amb, const Word& w);

}  // namespace kfill
