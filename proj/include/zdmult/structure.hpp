#pragma once

#include "zdmult/multiplication.hpp"

namespace zdmult {

// Either integer witnesses (v, w, T) with x*v*y = x@w@y for all x, y, or the
// rank of the lattice intersection of the vectorized representation images
// proving non-alignment.
struct AlignmentCertificate {
    bool aligned = false;

    // aligned branch
    IntVec v, w;      // content-reduced integer witnesses
    RatVec v_rational;  // phi = psi o right_rep(v_rational)
    RatMatrix T;        // = right_rep(v_rational)
    int samples_checked = 0;

    // not-aligned branch
    std::size_t intersection_rank = 0;
    IntLattice intersection;  // of the scaled vectorized images
    Int denominator_scale;    // both images were scaled by this before intersecting
};

// Decides alignment by solving the linear system phi(e_i) = psi(psi(e_i) v)
// for v; witnesses are cleared to integers and divided by their common
// content.  The not-aligned branch carries the lattice-intersection rank.
AlignmentCertificate are_aligned(const Multiplication& a, const Multiplication& b,
                                 int verify_samples = 100);

// v with right_rep(v) = T when T commutes with the left representation;
// nullopt otherwise.
std::optional<RatVec> in_centralizer(const Multiplication& m, const RatMatrix& T);

// T^{-1} psi(e_i) T inside the rational span of the representation image,
// for every i.
bool in_normalizer(const Multiplication& m, const RatMatrix& T);

// Factors a normalizer element as T = A * right_rep(v) with A a unital
// algebra automorphism; post-verified.
std::pair<RatMatrix, RatVec> decompose_normalizer(const Multiplication& m,
                                                  const RatMatrix& T);

// T(e_i *1 e_j) = T(e_i) *2 T(e_j) on all basis pairs.
bool is_homomorphism(const RatMatrix& T, const Multiplication& m1,
                     const Multiplication& m2);

bool is_automorphism(const Multiplication& m, const RatMatrix& T);

// All integer matrices with entries in [-bound, bound] and nonzero
// determinant acting as algebra (iso)morphisms; results are checked to be
// unimodular and returned in lexicographic order.  Completeness holds only
// within the entry bound.
std::vector<IntMatrix> enumerate_integral_automorphisms(const Multiplication& m,
                                                        long entry_bound);
std::vector<IntMatrix> enumerate_integral_isos_to_opposite(const Multiplication& m,
                                                           long entry_bound);

struct PreservesResult {
    bool preserved = false;
    std::string cls;
    std::string reason;
};

// Dispatch for which integer matrices preserve a class of multiplicative
// largeness: the translation-style classes go through the normalizer, the
// IP/IP* pair through the automorphism group, and the bounded IP classes
// through automorphism-or-iso-to-opposite.
// Accepted class names: S, T, PS, PS*, D, D*, IP, IP*, IP_0, IP_0*, IP_r,
// IP_r* for r >= 2 (e.g. "IP_2*").
PreservesResult preserves_class(const Multiplication& m, const IntMatrix& T,
                                const std::string& cls);

}  // namespace zdmult
