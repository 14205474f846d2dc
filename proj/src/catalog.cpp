#include "zdmult/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace zdmult {

namespace {

// Divides the monic polynomial p (constant first, monic leading 1) by the
// monic polynomial g; returns the remainder coefficients.
std::vector<Int> monic_remainder(std::vector<Int> p, const std::vector<Int>& g) {
    int dp = static_cast<int>(p.size()) - 1;
    int dg = static_cast<int>(g.size()) - 1;
    for (int k = dp - dg; k >= 0; --k) {
        Int q = p[k + dg];
        if (q == 0) continue;
        for (int i = 0; i <= dg; ++i) p[k + i] -= q * g[i];
    }
    p.resize(dg);
    return p;
}

bool is_zero_poly(const std::vector<Int>& p) {
    return std::all_of(p.begin(), p.end(), [](const Int& c) { return c == 0; });
}

// 2^k * ceil(sqrt(sum p_i^2)) + 1, a bound on the coefficients of any monic
// degree-k factor of the monic polynomial p.
Int factor_coeff_bound(const std::vector<Int>& p, int k) {
    Int s = 0;
    for (const Int& c : p) s += c * c;
    Int root;
    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
    Int bound = (root + 1);
    for (int i = 0; i < k; ++i) bound *= 2;
    return bound + 1;
}

}  // namespace

MonicPoly::MonicPoly(std::vector<Int> a) : a_(std::move(a)) {
    if (a_.empty()) throw UsageError("monic polynomial must have positive degree");
    certify();
}

std::vector<Int> MonicPoly::poly_coeffs() const {
    std::vector<Int> p(a_.size() + 1);
    for (size_t i = 0; i < a_.size(); ++i) p[i] = -a_[i];
    p[a_.size()] = 1;
    return p;
}

std::string MonicPoly::display() const {
    std::ostringstream os;
    os << "x^" << degree();
    for (int i = degree() - 1; i >= 0; --i) {
        const Int& c = a_[i];
        if (c == 0) continue;
        Int d = -c;
        os << (d < 0 ? " - " : " + ") << abs(d);
        if (i > 0) os << "*x";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

void MonicPoly::certify() {
    using Status = IrreducibilityCertificate::Status;
    int d = degree();
    std::vector<Int> p = poly_coeffs();

    if (d == 1) {
        cert_ = {Status::Irreducible, {}, "linear", Int(0)};
        return;
    }
    if (d == 2) {
        // roots of x^2 - b x - c are (b +- sqrt(b^2 + 4c)) / 2
        Int b = a_[1], c = a_[0];
        Int disc = b * b + 4 * c;
        Int s;
        if (!is_perfect_square(disc, &s)) {
            cert_ = {Status::Irreducible, {}, "discriminant not a perfect square", Int(0)};
        } else {
            Int root = (b + s) / 2;
            cert_ = {Status::Reducible, {-root, Int(1)}, "discriminant is a perfect square",
                     Int(0)};
        }
        return;
    }

    // Rational root test: integer roots of a monic polynomial divide p(0).
    if (p[0] == 0) {
        cert_ = {Status::Reducible, {Int(0), Int(1)}, "zero constant term", Int(0)};
        return;
    }
    Int a0 = abs(p[0]);
    for (Int r = 1; r <= a0; ++r) {
        if (a0 % r != 0) continue;
        for (int sign = 0; sign < 2; ++sign) {
            Int root = sign ? Int(-r) : r;
            Int val = 0;
            for (int i = d; i >= 0; --i) val = val * root + p[i];
            if (val == 0) {
                cert_ = {Status::Reducible, {-root, Int(1)}, "rational root", Int(0)};
                return;
            }
        }
    }

    // Exhaustive bounded search over monic factors of degree 2..d/2.
    Int total_candidates = 0;
    for (int k = 2; 2 * k <= d; ++k) {
        Int bound = factor_coeff_bound(p, k);
        Int per_coeff = 2 * bound + 1;
        Int count = 1;
        for (int i = 0; i < k; ++i) count *= per_coeff;
        total_candidates += count;
        if (total_candidates > 10'000'000) {
            std::ostringstream os;
            os << "factor search space exceeds cap (bound " << bound << ", degree " << k << ")";
            cert_ = {Status::Unverified, {}, os.str(), bound};
            return;
        }
        std::vector<Int> g(k + 1);
        g[k] = 1;
        std::vector<long> idx(k, 0);
        long span = 2 * bound.get_si() + 1;
        for (;;) {
            for (int i = 0; i < k; ++i) g[i] = Int(idx[i]) - bound;
            if (g[0] != 0 && is_zero_poly(monic_remainder(p, g))) {
                cert_ = {Status::Reducible, g, "bounded factor search", bound};
                return;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == span - 1) idx[i--] = 0;
            if (i < 0) break;
            ++idx[i];
        }
    }
    std::ostringstream os;
    os << "no rational root and no monic factor of degree <= " << d / 2
       << " within the coefficient bound";
    cert_ = {Status::Irreducible, {}, os.str(), d >= 4 ? factor_coeff_bound(p, d / 2) : Int(0)};
}

Multiplication from_polynomial(const MonicPoly& p) {
    return from_polynomial(p, "Z[x]/(" + p.display() + ")");
}

Multiplication from_polynomial(const MonicPoly& p, std::string label) {
    int d = p.degree();
    // powers x^k mod p for k <= 2d-2
    std::vector<std::vector<Int>> pow(2 * d - 1, std::vector<Int>(d, Int(0)));
    pow[0][0] = 1;
    for (int k = 1; k <= 2 * d - 2; ++k) {
        // multiply previous power by x
        std::vector<Int> shifted(d + 1, Int(0));
        for (int i = 0; i < d; ++i) shifted[i + 1] = pow[k - 1][i];
        if (shifted[d] != 0) {
            // x^d = sum a_i x^i
            Int lead = shifted[d];
            for (int i = 0; i < d; ++i) shifted[i] += lead * p.subtracted_coeffs()[i];
        }
        for (int i = 0; i < d; ++i) pow[k][i] = shifted[i];
    }

    std::vector<Rat> sc(static_cast<size_t>(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                sc[(static_cast<size_t>(i) * d + j) * d + k] = Rat(pow[i + j][k]);

    Provenance prov;
    prov.kind = ProvenanceKind::Polynomial;
    prov.poly_coeffs = p.subtracted_coeffs();

    ZeroDivisorInfo zd;
    using Status = IrreducibilityCertificate::Status;
    const auto& cert = p.certificate();
    switch (cert.status) {
        case Status::Irreducible:
            zd.status = ZeroDivisorStatus::ProvenFree;
            zd.note = "irreducible polynomial (" + cert.method + ")";
            break;
        case Status::Reducible: {
            // p = g * h gives the zero-divisor pair (g mod p, h mod p).
            std::vector<Int> pc = p.poly_coeffs();
            const std::vector<Int>& g = cert.factor;
            int dg = static_cast<int>(g.size()) - 1;
            // synthetic division p / g
            std::vector<Int> q(d - dg + 1, Int(0));
            std::vector<Int> rem = pc;
            for (int k = d - dg; k >= 0; --k) {
                q[k] = rem[k + dg];
                if (q[k] == 0) continue;
                for (int i = 0; i <= dg; ++i) rem[k + i] -= q[k] * g[i];
            }
            IntVec gx(d, Int(0)), hx(d, Int(0));
            for (int i = 0; i <= dg && i < d; ++i) gx[i] = g[i];
            for (int i = 0; i < static_cast<int>(q.size()) && i < d; ++i) hx[i] = q[i];
            zd.status = ZeroDivisorStatus::Witness;
            zd.x = gx;
            zd.y = hx;
            zd.note = "reducible polynomial (" + cert.method + ")";
            break;
        }
        case Status::Unverified:
            zd.status = ZeroDivisorStatus::Unknown;
            zd.note = "irreducibility unverified: " + cert.method;
            break;
    }
    return make_multiplication(d, std::move(sc), std::move(prov), std::move(zd),
                               std::move(label));
}

Multiplication quaternion() {
    const int d = 4;
    std::vector<Rat> sc(64, Rat(0));
    auto set = [&](int i, int j, int k, int v) { sc[(i * d + j) * d + k] = Rat(v); };
    // basis 1, i, j, k
    for (int j = 0; j < 4; ++j) {
        set(0, j, j, 1);
        set(j, 0, j, 1);
    }
    set(1, 1, 0, -1);
    set(2, 2, 0, -1);
    set(3, 3, 0, -1);
    set(1, 2, 3, 1);
    set(2, 1, 3, -1);
    set(2, 3, 1, 1);
    set(3, 2, 1, -1);
    set(3, 1, 2, 1);
    set(1, 3, 2, -1);

    Provenance prov;
    prov.kind = ProvenanceKind::Quaternion;
    ZeroDivisorInfo zd;
    zd.status = ZeroDivisorStatus::ProvenFree;
    zd.note = "quaternion division algebra";
    return make_multiplication(d, std::move(sc), std::move(prov), std::move(zd),
                               "quaternion");
}

Multiplication scaled_z(const Int& n) {
    if (n == 0) throw UsageError("scaled_z: scale must be nonzero");
    Provenance prov;
    prov.kind = ProvenanceKind::ScaledZ;
    prov.scale = n;
    ZeroDivisorInfo zd;
    zd.status = ZeroDivisorStatus::ProvenFree;
    zd.note = "nonzero scale on Z";
    return make_multiplication(1, {Rat(n)}, std::move(prov), std::move(zd),
                               "scaled_z(" + n.get_str() + ")");
}

Multiplication quadratic_ring(const Int& b, const Int& c) {
    return from_polynomial(MonicPoly::quadratic(b, c));
}

Multiplication gaussian() {
    return from_polynomial(MonicPoly::quadratic(Int(0), Int(-1)), "gaussian");
}

std::vector<Multiplication> quadratic_catalog(const std::vector<Int>& c_values,
                                              const std::vector<Int>& b_values) {
    for (const Int& b : b_values)
        if (b != 0 && b != 1) throw UsageError("quadratic_catalog: b must be 0 or 1");
    std::vector<Multiplication> out;
    for (const Int& b : b_values)
        for (const Int& c : c_values) {
            if (is_perfect_square(c))
                throw UsageError("quadratic_catalog: c = " + c.get_str() +
                                 " is a perfect square, which the quadratic family excludes");
            out.push_back(quadratic_ring(b, c));
        }
    return out;
}

}  // namespace zdmult
