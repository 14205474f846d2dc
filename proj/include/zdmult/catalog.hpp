#pragma once

#include "zdmult/multiplication.hpp"

#include <span>

namespace zdmult {

struct IrreducibilityCertificate {
    enum class Status { Irreducible, Reducible, Unverified } status = Status::Unverified;
    std::vector<Int> factor;  // monic factor, low to high degree, when reducible
    std::string method;
    Int coeff_bound;  // factor-coefficient bound used by the exhaustive search
};

// Monic integer polynomial p(x) = x^d - sum_{i<d} a_i x^i.  For d = 2 this is
// the x^2 - b x - c parameterization with b = a_1, c = a_0.
class MonicPoly {
public:
    // a = (a_0, ..., a_{d-1}) of the subtracted part.
    explicit MonicPoly(std::vector<Int> a);
    static MonicPoly quadratic(const Int& b, const Int& c) { return MonicPoly({c, b}); }

    int degree() const { return static_cast<int>(a_.size()); }
    const std::vector<Int>& subtracted_coeffs() const { return a_; }
    const IrreducibilityCertificate& certificate() const { return cert_; }

    // Coefficients of p itself, constant term first (degree+1 entries).
    std::vector<Int> poly_coeffs() const;
    std::string display() const;

private:
    void certify();
    std::vector<Int> a_;
    IrreducibilityCertificate cert_;
};

// The ring Z[x]/(p) on the basis 1, x, ..., x^{d-1}.  Multiplicative identity
// e_1; the zero-divisor flag follows the irreducibility certificate.
Multiplication from_polynomial(const MonicPoly& p);
Multiplication from_polynomial(const MonicPoly& p, std::string label);

// Lipschitz integral quaternions on Z^4.
Multiplication quaternion();

// x * y = n x y on Z.
Multiplication scaled_z(const Int& n);

// Convenience for the quadratic family x^2 - b x - c.
Multiplication quadratic_ring(const Int& b, const Int& c);
Multiplication gaussian();  // b = 0, c = -1

// The quadratic family over the given parameter lists.  Rejects any c that
// is a perfect square, which the family excludes.
std::vector<Multiplication> quadratic_catalog(const std::vector<Int>& c_values,
                                              const std::vector<Int>& b_values);

}  // namespace zdmult
