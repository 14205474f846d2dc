#pragma once

#include "zdmult/finite_set.hpp"
#include "zdmult/largeness.hpp"
#include "zdmult/numeric.hpp"

#include <memory>
#include <optional>

namespace zdmult {

// --- symbolic coefficients ---
// Named constants appearing in linear-form leaves: exact rationals, pi, e,
// sqrt(k), root(k, j) (the j-th root of k), and products of these.
struct ConstExpr;
using ConstPtr = std::shared_ptr<const ConstExpr>;

struct ConstExpr {
    enum class Kind { Rational, Pi, E, Sqrt, Root, Product } kind;
    Rat value;           // Rational
    std::string lexeme;  // original literal text for round-trip printing
    Int radicand, index;  // Sqrt / Root
    ConstPtr lhs, rhs;    // Product

    static ConstPtr rational(const Rat& q, std::string lexeme);
    static ConstPtr pi();
    static ConstPtr e();
    static ConstPtr sqrt(const Int& k);
    static ConstPtr root(const Int& k, const Int& j);
    static ConstPtr product(ConstPtr a, ConstPtr b);

    bool is_rational() const { return kind == Kind::Rational; }
    std::string print() const;
};

// --- expression trees ---
// Constant-free generalized polynomials: leaves are single-variable scaled
// coordinates c * x_i (sums of leaves give general linear forms), combined by
// +, * and the fractional part [.].
struct GenPolyExpr;
using GenPolyPtr = std::shared_ptr<const GenPolyExpr>;

struct GenPolyExpr {
    enum class Kind { Leaf, Add, Mul, FracPart } kind;
    int var = 0;      // Leaf: variable index (0-based)
    ConstPtr coeff;   // Leaf
    GenPolyPtr lhs, rhs;  // Add / Mul; FracPart uses lhs

    static GenPolyPtr leaf(int var, ConstPtr coeff);
    static GenPolyPtr add(GenPolyPtr a, GenPolyPtr b);
    static GenPolyPtr mul(GenPolyPtr a, GenPolyPtr b);
    static GenPolyPtr frac(GenPolyPtr a);
};

struct ParseError : UsageError {
    ParseError(const std::string& msg, std::size_t pos)
        : UsageError(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// Grammar: variables n, m or x1..xd; infix + and * (* binds tighter),
// [ expr ] is the fractional part; constants: integers, decimals, pi, e,
// sqrt(k), root(k,j).  Every additive term must carry a variable: "n + 1" is
// rejected as a constant leaf.
GenPolyPtr parse_genpoly(const std::string& text);

std::string pretty(const GenPolyPtr& e);

// 1 for leaves; nodes add one level.
int depth(const GenPolyPtr& e);

// Number of variables the expression mentions (max index + 1).
int var_count(const GenPolyPtr& e);

// --- rigorous evaluation ---
// Interval with exact rational endpoints.  Arithmetic on intervals is exact;
// only irrational constants are enclosed, at the working precision.
struct RatInterval {
    Rat lo, hi;
    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
};

struct EvalResult {
    bool ok = false;  // false: a fractional part straddled an integer at every precision
    RatInterval value;
    long used_bits = 0;
    std::string straddle_note;
};

// Adaptive evaluation: starts at `bits` working precision for the irrational
// constants, doubling (up to `max_bits`) while a fractional part straddles
// an integer.  A persistent straddle is reported, never rounded away.
EvalResult eval_genpoly(const GenPolyPtr& e, const IntVec& x, long bits = 128,
                        long max_bits = 2048);

// Enclosure of the distance from f(x) to the nearest integer, in [0, 1/2].
EvalResult nearest_int_distance(const GenPolyPtr& e, const IntVec& x, long bits = 128,
                                long max_bits = 2048);

struct ScanResult {
    FiniteSet below;               // x with certified distance < epsilon
    std::vector<IntVec> straddles;  // x undecided at the precision cap
    long points_scanned = 0;
};

// Per-dimension inclusive ranges.
struct BoxSpec {
    std::vector<std::pair<long, long>> ranges;
    int dim() const { return static_cast<int>(ranges.size()); }
};

ScanResult return_set_scan(const GenPolyPtr& e, const Rat& epsilon, const BoxSpec& box,
                           long bits = 128, long max_bits = 2048);

// Reports which elements of FS(generators) certify distance < epsilon.
// Desk-scale evidence for one FS set at a time, never a global claim.
WitnessReport fs_intersection_check(const GenPolyPtr& e, const Rat& epsilon,
                                    const std::vector<IntVec>& generators,
                                    long bits = 128, long max_bits = 2048);

}  // namespace zdmult
