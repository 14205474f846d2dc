#pragma once

#include "zdmult/matrix.hpp"
#include "zdmult/numeric.hpp"

#include <optional>

namespace zdmult {

// --- exact rational linear algebra ---

// Solves Ax = b exactly.  Returns nullopt when inconsistent.  When the
// solution space is positive-dimensional the free variables are set to zero,
// so the result is deterministic.
std::optional<RatVec> solve_rational(const RatMatrix& A, const RatVec& b);

// Basis of the right null space of A; empty means trivial kernel.
std::vector<RatVec> kernel_rational(const RatMatrix& A);

std::size_t rank(const RatMatrix& A);
Rat det(const RatMatrix& A);
std::optional<RatMatrix> inverse(const RatMatrix& A);

// --- integer lattices ---

// A finitely generated subgroup of Z^m.  The stored basis is the unique
// Hermite normal form representative: trailing pivots positive with strictly
// increasing pivot columns, entries below each pivot reduced into [0, pivot).
// For a full-rank square basis this is the lower-triangular form.
class IntLattice {
public:
    IntLattice() : ambient_(0) {}
    explicit IntLattice(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<IntVec>& basis() const { return basis_; }

    bool operator==(const IntLattice& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }

    // Membership decided by solving over Q and checking integrality of the
    // unique coefficient vector (basis rows are independent).
    bool contains(const IntVec& x) const;

private:
    friend IntLattice hnf(std::size_t ambient_dim, const std::vector<IntVec>& generators);
    std::size_t ambient_;
    std::vector<IntVec> basis_;
};

// Hermite normal form of the lattice generated by the given rows; zero rows
// dropped.  Independent of generator order.
IntLattice hnf(std::size_t ambient_dim, const std::vector<IntVec>& generators);
IntLattice hnf(const IntMatrix& generators);

// Basis of the integer left kernel {u : uA = 0}, computed from the unimodular
// transform of a Hermite reduction.  The kernel lattice is saturated.
std::vector<IntVec> integer_left_kernel(const IntMatrix& A);

IntLattice lattice_intersect(const IntLattice& a, const IntLattice& b);

}  // namespace zdmult
