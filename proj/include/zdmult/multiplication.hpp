#pragma once

#include "zdmult/linalg.hpp"
#include "zdmult/matrix.hpp"
#include "zdmult/numeric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zdmult {

enum class ProvenanceKind { Polynomial, Quaternion, ScaledZ, Raw, Acted };

std::string to_string(ProvenanceKind k);

enum class ZeroDivisorStatus { ProvenFree, Unknown, Witness };

struct ZeroDivisorInfo {
    ZeroDivisorStatus status = ZeroDivisorStatus::Unknown;
    IntVec x, y;       // witness pair with x*y = 0, both nonzero
    std::string note;  // how the status was established
};

// Outcome of a bounded zero-divisor search on a raw tensor.
struct ZeroDivisorSearchResult {
    enum class Kind { Witness, NoneInBox, ProvenFree } kind;
    IntVec x, y;
    std::string note;
};

class Multiplication;

struct Provenance {
    ProvenanceKind kind = ProvenanceKind::Raw;
    std::vector<Int> poly_coeffs;  // polynomial: a_0..a_{d-1} of x^d - sum a_i x^i
    Int scale;                     // scaled-z: n
    std::shared_ptr<const Multiplication> base;  // acted
    RatMatrix matrix;                            // acted
};

// A bilinear product on Z^d (or Q^d) stored as a d x d x d rational
// structure-constant tensor: e_i * e_j = sum_k sc[i][j][k] e_k.  The tensor
// is the single source of truth; representations are always derived from it.
// Values are immutable after construction.
class Multiplication {
public:
    static Multiplication from_tensor(int dim, std::vector<Rat> sc,
                                      std::string label = "raw");

    int dim() const { return dim_; }
    const Rat& sc(int i, int j, int k) const { return sc_[(i * dim_ + j) * dim_ + k]; }
    const std::vector<Rat>& tensor() const { return sc_; }
    bool integral() const { return integral_; }
    bool associative() const { return associative_; }
    bool assoc_checked() const { return assoc_checked_; }
    const ZeroDivisorInfo& zero_divisors() const { return zd_; }
    const Provenance& provenance() const { return prov_; }
    const std::string& label() const { return label_; }

    bool operator==(const Multiplication& o) const {
        return dim_ == o.dim_ && sc_ == o.sc_;
    }
    bool operator!=(const Multiplication& o) const { return !(*this == o); }

    // Associative with certified absence of zero divisors.
    bool proper_certified() const {
        return associative_ && zd_.status == ZeroDivisorStatus::ProvenFree;
    }
    // Throws unless properness is settled one way or the other.
    void require_properness_known(const std::string& where) const;
    void require_proper(const std::string& where) const;

    // e_i * e_j as the tensor row (i,j).
    RatVec basis_product(int i, int j) const;

    RatVec multiply(const RatVec& x, const RatVec& y) const;
    IntVec multiply(const IntVec& x, const IntVec& y) const;

    // Columns of left_rep(x) are x * e_j; columns of right_rep(x) are e_j * x.
    RatMatrix left_rep(const RatVec& x) const;
    RatMatrix right_rep(const RatVec& x) const;
    RatMatrix left_rep(const IntVec& x) const { return left_rep(to_rat(x)); }
    RatMatrix right_rep(const IntVec& x) const { return right_rep(to_rat(x)); }

    bool check_associative() const;  // exhaustive over basis triples
    bool is_commutative() const;
    bool is_left_amenable() const;  // equals is_commutative; requires proper

    // Minimal b with b * left_rep(x)^{-1} = left_rep(z) for integer z.
    std::pair<Int, IntVec> reaches_identity(const IntVec& x) const;

    // Minimal c admitting integer w with left_rep(w) = right_rep(w) = c*Id.
    std::pair<Int, IntVec> central_scalar() const;

    // Rational unit u with left_rep(u) = Id, when the algebra has one.
    std::optional<RatVec> unit() const;

    Multiplication opposite() const;

    // x *_T y = T^{-1}(Tx * Ty); a right action of the invertible rationals.
    Multiplication acted(const RatMatrix& T) const;

    // Bounded exact search for zero divisors; decides exactly for d <= 2.
    ZeroDivisorSearchResult zero_divisor_search(long box_radius) const;

    Multiplication with_label(std::string label) const;

private:
    Multiplication() = default;
    void finalize();  // computes integral/associativity flags

    int dim_ = 0;
    std::vector<Rat> sc_;
    bool integral_ = false;
    bool associative_ = false;
    bool assoc_checked_ = false;
    ZeroDivisorInfo zd_;
    Provenance prov_;
    std::string label_;

    friend Multiplication make_multiplication(int, std::vector<Rat>, Provenance,
                                              ZeroDivisorInfo, std::string);
};

// Internal factory used by the catalog constructors.
Multiplication make_multiplication(int dim, std::vector<Rat> sc, Provenance prov,
                                   ZeroDivisorInfo zd, std::string label);

}  // namespace zdmult
