#include "zdmult/multiplication.hpp"

#include "zdmult/box.hpp"

#include <sstream>

namespace zdmult {

std::string to_string(ProvenanceKind k) {
    switch (k) {
        case ProvenanceKind::Polynomial: return "polynomial";
        case ProvenanceKind::Quaternion: return "quaternion";
        case ProvenanceKind::ScaledZ: return "scaled_z";
        case ProvenanceKind::Raw: return "raw";
        case ProvenanceKind::Acted: return "acted";
    }
    return "?";
}

Multiplication make_multiplication(int dim, std::vector<Rat> sc, Provenance prov,
                                   ZeroDivisorInfo zd, std::string label) {
    if (dim < 1) throw UsageError("multiplication dimension must be positive");
    if (sc.size() != static_cast<size_t>(dim) * dim * dim)
        throw UsageError("structure tensor has wrong size");
    Multiplication m;
    m.dim_ = dim;
    m.sc_ = std::move(sc);
    m.prov_ = std::move(prov);
    m.zd_ = std::move(zd);
    m.label_ = std::move(label);
    m.finalize();
    return m;
}

void Multiplication::finalize() {
    integral_ = true;
    for (const Rat& q : sc_)
        if (!is_integral(q)) {
            integral_ = false;
            break;
        }
    associative_ = check_associative();
    assoc_checked_ = true;
}

Multiplication Multiplication::from_tensor(int dim, std::vector<Rat> sc, std::string label) {
    Multiplication m = make_multiplication(dim, std::move(sc), Provenance{},
                                           ZeroDivisorInfo{}, std::move(label));
    if (m.associative_ && m.dim_ <= 2) {
        // Exactly decidable in low dimension.
        ZeroDivisorSearchResult r = m.zero_divisor_search(0);
        if (r.kind == ZeroDivisorSearchResult::Kind::ProvenFree)
            m.zd_ = {ZeroDivisorStatus::ProvenFree, {}, {}, r.note};
        else if (r.kind == ZeroDivisorSearchResult::Kind::Witness)
            m.zd_ = {ZeroDivisorStatus::Witness, r.x, r.y, r.note};
    }
    return m;
}

Multiplication Multiplication::with_label(std::string label) const {
    Multiplication m = *this;
    m.label_ = std::move(label);
    return m;
}

void Multiplication::require_properness_known(const std::string& where) const {
    if (!assoc_checked_)
        throw UsageError(where + ": associativity of '" + label_ + "' not checked");
    if (zd_.status == ZeroDivisorStatus::Unknown)
        throw UsageError(where + ": properness of '" + label_ + "' is unverified");
}

void Multiplication::require_proper(const std::string& where) const {
    require_properness_known(where);
    if (!associative_)
        throw UsageError(where + ": '" + label_ + "' is not associative");
    if (zd_.status != ZeroDivisorStatus::ProvenFree)
        throw UsageError(where + ": '" + label_ + "' has zero divisors");
}

RatVec Multiplication::basis_product(int i, int j) const {
    RatVec r(dim_);
    for (int k = 0; k < dim_; ++k) r[k] = sc(i, j, k);
    return r;
}

RatVec Multiplication::multiply(const RatVec& x, const RatVec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw UsageError("multiply: dimension mismatch");
    RatVec r(dim_, Rat(0));
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Rat xy = x[i] * y[j];
            for (int k = 0; k < dim_; ++k) {
                const Rat& c = sc(i, j, k);
                if (c != 0) r[k] += xy * c;
            }
        }
    }
    return r;
}

IntVec Multiplication::multiply(const IntVec& x, const IntVec& y) const {
    RatVec r = multiply(to_rat(x), to_rat(y));
    if (!all_integral(r))
        throw UsageError("multiply: non-integral product under a rational tensor");
    return to_int_vec(r);
}

RatMatrix Multiplication::left_rep(const RatVec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw UsageError("left_rep: dimension mismatch");
    RatMatrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                const Rat& c = sc(i, j, k);
                if (c != 0) m(k, j) += x[i] * c;
            }
    }
    return m;
}

RatMatrix Multiplication::right_rep(const RatVec& x) const {
    if (static_cast<int>(x.size()) != dim_) throw UsageError("right_rep: dimension mismatch");
    RatMatrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) {
                const Rat& c = sc(j, i, k);
                if (c != 0) m(k, j) += x[i] * c;
            }
    }
    return m;
}

bool Multiplication::check_associative() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            RatVec ij = basis_product(i, j);
            for (int k = 0; k < dim_; ++k) {
                RatVec lhs = multiply(ij, to_rat(unit_vector(dim_, k)));
                RatVec rhs = multiply(to_rat(unit_vector(dim_, i)), basis_product(j, k));
                if (lhs != rhs) return false;
            }
        }
    return true;
}

bool Multiplication::is_commutative() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (basis_product(i, j) != basis_product(j, i)) return false;
    return true;
}

bool Multiplication::is_left_amenable() const {
    require_proper("is_left_amenable");
    return is_commutative();
}

std::optional<RatVec> Multiplication::unit() const {
    // Solve left_rep(u) = Id, a d^2 x d linear system in u.
    RatMatrix A(dim_ * dim_, dim_);
    RatVec b(dim_ * dim_, Rat(0));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) A(k * dim_ + j, i) = sc(i, j, k);
    for (int k = 0; k < dim_; ++k) b[k * dim_ + k] = 1;
    auto u = solve_rational(A, b);
    if (!u) return std::nullopt;
    // A unit must act as identity on the right as well.
    if (right_rep(*u) != RatMatrix::identity(dim_)) return std::nullopt;
    return u;
}

std::pair<Int, IntVec> Multiplication::reaches_identity(const IntVec& x) const {
    require_proper("reaches_identity");
    if (is_zero(x)) throw UsageError("reaches_identity: x must be nonzero");
    RatMatrix px = left_rep(x);
    auto pinv = inverse(px);
    if (!pinv) throw UsageError("reaches_identity: left_rep(x) is singular");
    // Solve left_rep(z') = left_rep(x)^{-1} entrywise, linear in z'.
    RatMatrix A(dim_ * dim_, dim_);
    RatVec b(dim_ * dim_, Rat(0));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k) A(k * dim_ + j, i) = sc(i, j, k);
    for (int k = 0; k < dim_; ++k)
        for (int j = 0; j < dim_; ++j) b[k * dim_ + j] = (*pinv)(k, j);
    auto z = solve_rational(A, b);
    if (!z) throw UsageError("reaches_identity: inverse is not in the representation image");
    Int bscale = lcm_of_denominators(*z);
    IntVec zi(dim_);
    for (int i = 0; i < dim_; ++i) zi[i] = to_int(Rat((*z)[i] * bscale));
    return {bscale, zi};
}

std::pair<Int, IntVec> Multiplication::central_scalar() const {
    require_proper("central_scalar");
    auto u = unit();
    if (!u) throw UsageError("central_scalar: no unit found");
    Int c = lcm_of_denominators(*u);
    IntVec w(dim_);
    for (int i = 0; i < dim_; ++i) w[i] = to_int(Rat((*u)[i] * c));
    RatMatrix cid = RatMatrix::identity(dim_) * Rat(c);
    if (left_rep(w) != cid || right_rep(w) != cid)
        throw UsageError("central_scalar: post-check failed");
    return {c, w};
}

Multiplication Multiplication::opposite() const {
    std::vector<Rat> sc2(sc_.size());
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                sc2[(i * dim_ + j) * dim_ + k] = sc(j, i, k);
    Multiplication m;
    m.dim_ = dim_;
    m.sc_ = std::move(sc2);
    m.prov_ = prov_;
    m.zd_ = zd_;
    if (zd_.status == ZeroDivisorStatus::Witness) {
        m.zd_.x = zd_.y;
        m.zd_.y = zd_.x;
    }
    m.label_ = label_ + "_op";
    m.finalize();
    return m;
}

Multiplication Multiplication::acted(const RatMatrix& T) const {
    if (T.rows() != static_cast<size_t>(dim_) || T.cols() != static_cast<size_t>(dim_))
        throw UsageError("acted: matrix size mismatch");
    auto Tinv = inverse(T);
    if (!Tinv) throw UsageError("acted: matrix is singular");
    std::vector<Rat> sc2(sc_.size());
    for (int i = 0; i < dim_; ++i) {
        RatVec ti = T.col(i);
        for (int j = 0; j < dim_; ++j) {
            RatVec tj = T.col(j);
            RatVec prod = (*Tinv) * multiply(ti, tj);
            for (int k = 0; k < dim_; ++k) sc2[(i * dim_ + j) * dim_ + k] = prod[k];
        }
    }
    Multiplication m;
    m.dim_ = dim_;
    m.sc_ = std::move(sc2);
    m.prov_.kind = ProvenanceKind::Acted;
    m.prov_.base = std::make_shared<Multiplication>(*this);
    m.prov_.matrix = T;
    m.zd_.status = zd_.status;
    m.zd_.note = zd_.note.empty() ? "" : "inherited through invertible action: " + zd_.note;
    if (zd_.status == ZeroDivisorStatus::Witness) {
        // A zero-divisor pair maps through T^{-1} after clearing denominators.
        RatVec xr = (*Tinv) * to_rat(zd_.x);
        RatVec yr = (*Tinv) * to_rat(zd_.y);
        Int cx = lcm_of_denominators(xr), cy = lcm_of_denominators(yr);
        IntVec xi(dim_), yi(dim_);
        for (int i = 0; i < dim_; ++i) {
            xi[i] = to_int(Rat(xr[i] * cx));
            yi[i] = to_int(Rat(yr[i] * cy));
        }
        m.zd_.x = xi;
        m.zd_.y = yi;
    }
    m.label_ = label_ + "_acted";
    m.finalize();
    return m;
}

namespace {

// det(left_rep(x)) for d = 2 is the binary quadratic form
// a x1^2 + b x1 x2 + c x2^2.
struct QuadForm {
    Rat a, b, c;
};

QuadForm det_form_2d(const Multiplication& m) {
    RatMatrix A = m.left_rep(unit_vector(2, 0));
    RatMatrix B = m.left_rep(unit_vector(2, 1));
    Rat da = det(A);
    Rat dc = det(B);
    Rat dab = det(A + B);
    return {da, dab - da - dc, dc};
}

}  // namespace

ZeroDivisorSearchResult Multiplication::zero_divisor_search(long box_radius) const {
    using Kind = ZeroDivisorSearchResult::Kind;
    if (!assoc_checked_ || !associative_)
        throw UsageError("zero_divisor_search: multiplication is not associative");
    if (zd_.status == ZeroDivisorStatus::ProvenFree)
        return {Kind::ProvenFree, {}, {}, zd_.note};
    if (zd_.status == ZeroDivisorStatus::Witness)
        return {Kind::Witness, zd_.x, zd_.y, zd_.note};

    auto witness_from_singular = [&](const IntVec& x) -> ZeroDivisorSearchResult {
        auto ker = kernel_rational(left_rep(x));
        if (ker.empty()) throw UsageError("zero_divisor_search: internal kernel failure");
        Int c = lcm_of_denominators(ker[0]);
        IntVec y(dim_);
        for (int i = 0; i < dim_; ++i) y[i] = to_int(Rat(ker[0][i] * c));
        RatVec prod = multiply(to_rat(x), to_rat(y));
        if (!is_zero(prod)) throw UsageError("zero_divisor_search: witness verification failed");
        return {Kind::Witness, x, y, "left_rep(x) singular"};
    };

    if (dim_ == 1) {
        if (sc(0, 0, 0) == 0)
            return {Kind::Witness, {Int(1)}, {Int(1)}, "zero product on Z"};
        return {Kind::ProvenFree, {}, {}, "nonzero scale on Z"};
    }

    if (dim_ == 2) {
        // det(left_rep(x)) is a binary quadratic form; zero divisors exist
        // iff it has a nontrivial rational zero, decided by a perfect-square
        // test on the discriminant.
        QuadForm f = det_form_2d(*this);
        if (f.a == 0 && f.b == 0 && f.c == 0) {
            for (long r = 1; r <= 4; ++r)
                for (const IntVec& x : box_points(2, r))
                    if (!left_rep(x).is_zero() && det(left_rep(x)) == 0)
                        return witness_from_singular(x);
            // Entire left action vanishes; e_1 * e_1 = 0.
            return {Kind::Witness, unit_vector(2, 0), unit_vector(2, 0), "zero left action"};
        }
        if (f.a == 0) return witness_from_singular(unit_vector(2, 0));
        if (f.c == 0) return witness_from_singular(unit_vector(2, 1));
        Rat disc = f.b * f.b - 4 * f.a * f.c;
        Rat s;
        if (!rat_is_square(disc, &s))
            return {Kind::ProvenFree, {}, {},
                    "norm form discriminant " + to_string(disc) + " is not a rational square"};
        Rat t1 = s - f.b, t2 = 2 * f.a;
        Int c = lcm(t1.get_den(), t2.get_den());
        IntVec x = {to_int(Rat(t1 * c)), to_int(Rat(t2 * c))};
        Int g = gcd(abs(x[0]), abs(x[1]));
        if (g > 1) {
            x[0] /= g;
            x[1] /= g;
        }
        return witness_from_singular(x);
    }

    for (long r = 1; r <= box_radius; ++r)
        for (const IntVec& x : box_points(dim_, r))
            if (det(left_rep(x)) == 0) return witness_from_singular(x);
    std::ostringstream os;
    os << "no singular left_rep(x) for sup-norm(x) <= " << box_radius;
    return {Kind::NoneInBox, {}, {}, os.str()};
}

}  // namespace zdmult
