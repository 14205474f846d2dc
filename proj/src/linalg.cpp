#include "zdmult/linalg.hpp"

#include <algorithm>

namespace zdmult {

namespace {

// Reduced row echelon form in place.  Returns the pivot column of each pivot
// row, in order.
std::vector<std::size_t> rref(RatMatrix& A) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        std::size_t p = r;
        while (p < A.rows() && A(p, c) == 0) ++p;
        if (p == A.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(p, j), A(r, j));
        Rat inv = A(r, c);
        for (std::size_t j = c; j < A.cols(); ++j) A(r, j) /= inv;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r || A(i, c) == 0) continue;
            Rat f = A(i, c);
            for (std::size_t j = c; j < A.cols(); ++j) A(i, j) -= f * A(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<RatVec> solve_rational(const RatMatrix& A, const RatVec& b) {
    if (A.rows() != b.size()) throw UsageError("solve: dimension mismatch");
    RatMatrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // 0 = 1 row
    RatVec x(A.cols(), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, A.cols());
    return x;
}

std::vector<RatVec> kernel_rational(const RatMatrix& A) {
    RatMatrix R = A;
    std::vector<std::size_t> pivots = rref(R);
    std::vector<bool> is_pivot(A.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t c = 0; c < A.cols(); ++c) {
        if (is_pivot[c]) continue;
        RatVec v(A.cols(), Rat(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R(r, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const RatMatrix& A) {
    RatMatrix R = A;
    return rref(R).size();
}

Rat det(const RatMatrix& A) {
    if (A.rows() != A.cols()) throw UsageError("det: non-square matrix");
    RatMatrix M = A;
    Rat d(1);
    std::size_t n = M.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && M(p, c) == 0) ++p;
        if (p == n) return Rat(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M(p, j), M(c, j));
            d = -d;
        }
        d *= M(c, c);
        Rat inv = M(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (M(i, c) == 0) continue;
            Rat f = M(i, c) / inv;
            for (std::size_t j = c; j < n; ++j) M(i, j) -= f * M(c, j);
        }
    }
    return d;
}

std::optional<RatMatrix> inverse(const RatMatrix& A) {
    if (A.rows() != A.cols()) throw UsageError("inverse: non-square matrix");
    std::size_t n = A.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

namespace {

// Standard row-style Hermite reduction: leading pivots positive, pivot
// columns strictly increasing, entries above each pivot reduced into
// [0, pivot).  U tracks the unimodular row transform when requested.
std::size_t hermite_leading(IntMatrix& A, IntMatrix* U) {
    std::size_t rows = A.rows(), cols = A.cols();
    auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < cols; ++j) A(dst, j) -= q * A(src, j);
        if (U)
            for (std::size_t j = 0; j < U->cols(); ++j) (*U)(dst, j) -= q * (*U)(src, j);
    };
    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols; ++j) std::swap(A(a, j), A(b, j));
        if (U)
            for (std::size_t j = 0; j < U->cols(); ++j) std::swap((*U)(a, j), (*U)(b, j));
    };
    auto negate_row = [&](std::size_t r) {
        for (std::size_t j = 0; j < cols; ++j) A(r, j) = -A(r, j);
        if (U)
            for (std::size_t j = 0; j < U->cols(); ++j) (*U)(r, j) = -(*U)(r, j);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclidean reduction within the column.
        for (;;) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (A(i, c) == 0) continue;
                if (best == rows || abs(A(i, c)) < abs(A(best, c))) best = i;
            }
            if (best == rows) break;
            swap_rows(r, best);
            bool all_zero_below = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (A(i, c) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A(i, c).get_mpz_t(), A(r, c).get_mpz_t());
                row_op(i, r, q);
                if (A(i, c) != 0) all_zero_below = false;
            }
            if (all_zero_below) break;
        }
        if (A(r, c) == 0) continue;
        if (A(r, c) < 0) negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), A(i, c).get_mpz_t(), A(r, c).get_mpz_t());
            if (q != 0) row_op(i, r, q);
        }
        ++r;
    }
    return r;  // rank
}

IntMatrix reverse_cols(const IntMatrix& A) {
    IntMatrix R(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) R(i, j) = A(i, A.cols() - 1 - j);
    return R;
}

IntMatrix reverse_rows(const IntMatrix& A) {
    IntMatrix R(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) R(i, j) = A(A.rows() - 1 - i, j);
    return R;
}

}  // namespace

IntLattice hnf(std::size_t ambient_dim, const std::vector<IntVec>& generators) {
    for (const IntVec& g : generators)
        if (g.size() != ambient_dim) throw UsageError("hnf: generator dimension mismatch");
    IntMatrix A(generators.size(), ambient_dim);
    for (std::size_t i = 0; i < generators.size(); ++i) A.set_row(i, generators[i]);

    // Trailing-pivot convention realized by reversing the column order for a
    // leading-pivot reduction and mapping the result back.
    IntMatrix rev = reverse_cols(A);
    std::size_t rk = hermite_leading(rev, nullptr);
    IntMatrix H = reverse_rows(reverse_cols(rev));

    IntLattice L(ambient_dim);
    std::size_t zero_rows = A.rows() - rk;
    for (std::size_t i = zero_rows; i < H.rows(); ++i) L.basis_.push_back(H.row(i));
    return L;
}

IntLattice hnf(const IntMatrix& generators) {
    std::vector<IntVec> rows;
    rows.reserve(generators.rows());
    for (std::size_t i = 0; i < generators.rows(); ++i) rows.push_back(generators.row(i));
    return hnf(generators.cols(), rows);
}

bool IntLattice::contains(const IntVec& x) const {
    if (x.size() != ambient_) throw UsageError("lattice membership: dimension mismatch");
    if (is_zero(x)) return true;
    if (basis_.empty()) return false;
    // Solve y^T B = x over Q; the basis rows are independent.
    RatMatrix Bt(ambient_, basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) Bt(j, i) = Rat(basis_[i][j]);
    auto y = solve_rational(Bt, to_rat(x));
    return y && all_integral(*y);
}

std::vector<IntVec> integer_left_kernel(const IntMatrix& A) {
    IntMatrix M = A;
    IntMatrix U = IntMatrix::identity(A.rows());
    std::size_t rk = hermite_leading(M, &U);
    std::vector<IntVec> kernel;
    for (std::size_t i = rk; i < A.rows(); ++i) kernel.push_back(U.row(i));
    return kernel;
}

IntLattice lattice_intersect(const IntLattice& a, const IntLattice& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw UsageError("lattice_intersect: ambient dimension mismatch");
    std::size_t m = a.ambient_dim();
    std::size_t ra = a.rank(), rb = b.rank();
    if (ra == 0 || rb == 0) return IntLattice(m);

    IntMatrix stacked(ra + rb, m);
    for (std::size_t i = 0; i < ra; ++i) stacked.set_row(i, a.basis()[i]);
    for (std::size_t i = 0; i < rb; ++i) stacked.set_row(ra + i, b.basis()[i]);

    std::vector<IntVec> gens;
    for (const IntVec& uw : integer_left_kernel(stacked)) {
        IntVec point(m, Int(0));
        for (std::size_t i = 0; i < ra; ++i)
            for (std::size_t j = 0; j < m; ++j) point[j] += uw[i] * a.basis()[i][j];
        gens.push_back(std::move(point));
    }
    return hnf(m, gens);
}

}  // namespace zdmult
