#pragma once

#include "zdmult/finite_set.hpp"
#include "zdmult/multiplication.hpp"

#include <optional>

namespace zdmult {

// The two semigroups under study: (Z^d, +) and (Z^d \ {0}, *).
class SemigroupOp {
public:
    static SemigroupOp additive(int dim) { return SemigroupOp(dim, nullptr); }
    static SemigroupOp multiplicative(const Multiplication& m) {
        return SemigroupOp(m.dim(), &m);
    }

    int dim() const { return dim_; }
    bool is_multiplicative() const { return mult_ != nullptr; }
    const Multiplication& mult() const {
        if (!mult_) throw UsageError("additive operation has no multiplication");
        return *mult_;
    }

    IntVec apply(const IntVec& a, const IntVec& b) const {
        return mult_ ? mult_->multiply(a, b) : add(a, b);
    }

    // The unique z with s . z = a, if integral: exact division test.
    std::optional<IntVec> left_quotient(const IntVec& s, const IntVec& a) const;

    std::string name() const {
        return mult_ ? "multiplicative(" + mult_->label() + ")" : "additive";
    }

private:
    SemigroupOp(int dim, const Multiplication* m) : dim_(dim), mult_(m) {}
    int dim_;
    const Multiplication* mult_;
};

struct WitnessReport {
    std::string property;
    enum class Verdict { Witnessed, RefutedOnWindow, Inconclusive } verdict =
        Verdict::Inconclusive;
    std::vector<IntVec> witness_vectors;  // shifts, generators, or a dilator
    std::string window;                   // human-readable search scope
    std::vector<std::string> details;     // per-sample / per-candidate notes
    bool reverified = false;              // witnesses re-checked by direct evaluation

    bool witnessed() const { return verdict == Verdict::Witnessed; }
};

std::string to_string(WitnessReport::Verdict v);

// All 2^r - 1 products of the generators with indices in increasing order,
// deduplicated.  Requires an integral multiplication and nonzero generators.
FiniteSet fp_set(const Multiplication& m, const std::vector<IntVec>& gens);

// Additive variant: all subset sums.
FiniteSet fs_set(const std::vector<IntVec>& gens);

// Searches subsets {s_1..s_k} of the candidates, k <= max_k, whose left
// quotients cover the window; a witness is re-verified pointwise.
WitnessReport syndetic_witness(const FiniteSet& A, const SemigroupOp& op,
                               const FiniteSet& shift_candidates, long window_radius,
                               int max_k = 4);

// Finds x in the search box with F . x inside A.
WitnessReport thick_witness(const FiniteSet& A, const SemigroupOp& op, const FiniteSet& F,
                            long search_radius);

// For each sampled x, searches z in cube(N) with F * z * x inside A.
// Evidence is per-sample, never a global claim.
WitnessReport psstar_window_check(const FiniteSet& A, const Multiplication& m,
                                  const FiniteSet& F, long N,
                                  const std::vector<IntVec>& x_samples);

// Exhaustive search for generator tuples (from A intersected with the box;
// every generator must itself lie in A) whose FP set is inside A.
WitnessReport contains_ipr(const FiniteSet& A, const Multiplication& m, int r,
                           long gen_radius, long tuple_cap = 1'000'000);

// max over s in the sample box of |(F . s) ∩ A| / |F| — a certified lower
// bound for the density of A restricted to the sampled shifts.
Rat density_estimate(const FiniteSet& A, const SemigroupOp& op, const FiniteSet& F,
                     long sample_radius);

}  // namespace zdmult
