#pragma once

#include "zdmult/finite_set.hpp"
#include "zdmult/largeness.hpp"
#include "zdmult/multiplication.hpp"

namespace zdmult {

long default_search_radius();  // ZDMULT_SEARCH_RADIUS, default 10000

// One stage of a staged construction: H = cube(n) * x under the stage's
// multiplication, with the squared Euclidean norm extremes on record.
struct Stage {
    int n = 0;
    std::size_t mult_index = 0;  // into the builder's multiplication list
    std::string mult_label;
    IntVec x;
    FiniteSet H;
    Int min_norm_sq, max_norm_sq;
    Int aux_min_norm_sq;  // min over cube(2n) * x when the builder uses it, else 0
};

struct StagedSet {
    std::vector<Multiplication> mults;
    std::vector<Stage> stages;
    FiniteSet union_set() const;
};

struct IpSequence {
    Multiplication builder;                 // the multiplication taking the products
    std::vector<IntVec> generators;         // x_1..x_n
    std::vector<Int> scales;                // scaling constant applied at each step
};

// Incidence data from the exact avoiding check.
struct AvoidingReport {
    bool avoiding = true;
    IntVec z;                        // violating dilator, when not avoiding
    std::vector<IntVec> violating;   // d independent points f with f*z in A
    std::size_t candidates_checked = 0;
    std::vector<std::string> incidences;  // per-candidate counts
};

// EXACT decision: A meets every admissible dilate F @ z (F from G with no d
// points dependent) in at most d-1 points.  All incidences occur at the
// finitely many z solving left_rep(f) z = a, so the universal quantifier
// over z is decided, not sampled.
AvoidingReport verify_avoiding(const FiniteSet& A, const FiniteSet& G,
                               const Multiplication& other);

// Smallest x (canonical order) outside every null space
// Null(T_{@,f,g} - T_{@,f',g'}) with T_{@,f,g} = phi(f)^{-1} psi(g); the
// dilate G * x then avoids every listed multiplication.  Post-verified.
IntVec find_avoiding_dilator(const Multiplication& base,
                             const std::vector<Multiplication>& others,
                             const FiniteSet& G, long search_radius = 0);

// Stages H_n = cube(n) *_n x_n with *_n cycling through `thick_for`, each
// stage avoiding every multiplication in `avoid` on G = cube(n) and
// satisfying min-norm(H_n) > n * max-norm(H_{n-1}).
StagedSet build_thick_avoiding(const std::vector<Multiplication>& thick_for,
                               const std::vector<Multiplication>& avoid, int stages,
                               long search_radius = 0);

// Stages satisfying min-norm(cube(2n) *_n x_n) > n and
// min-norm(H_n) > 2 max-norm(H_{n-1}).
StagedSet build_ipstar_nonsyndetic(const std::vector<Multiplication>& mults, int stages,
                                   long search_radius = 0);

struct DifferenceBoundReport {
    bool ok = true;
    std::vector<std::string> lines;  // per-x findings
};

// For every nonzero x in cube(window): every pair b, b+x inside the union
// lies in a single stage, and no stage at or beyond the first stage whose
// min norm exceeds |x| contributes.
DifferenceBoundReport verify_difference_bound(const StagedSet& s, long window);

// Sequence x_1..x_n with x_a @ x_b != x_c for all nonempty increasing-index
// products x_a under mA and all index sets a, b, c; follows the inductive
// null-space construction with minimal scaling constants.
IpSequence build_ip_separating(const Multiplication& mA, const Multiplication& mB, int n,
                               long search_radius = 0);

// Every solved x_a * x_b = x_c forces max(a) < min(b); requires a
// non-commutative multiplication.
IpSequence build_ip_order_separating(const Multiplication& m, int n,
                                     long search_radius = 0);

// Exhaustive verifiers over all nonempty index-set triples.
bool verify_ip_separating(const Multiplication& mA, const Multiplication& mB,
                          const std::vector<IntVec>& gens);
bool verify_ip_order_separating(const Multiplication& m, const std::vector<IntVec>& gens);

// K with K^{-1} max(|x*y|, |y*x|) <= |x| <= K min(|x*y|, |y*x|) for all x,
// from rational operator-norm bounds of the representations of y and their
// inverses.
Rat norm_constant(const Multiplication& m, const IntVec& y);

}  // namespace zdmult
