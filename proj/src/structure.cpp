#include "zdmult/structure.hpp"

#include "zdmult/box.hpp"

#include <algorithm>
#include <functional>

namespace zdmult {

namespace {

// Vectorized representation image psi(Z^d) as a lattice in Z^{d^2}, after
// scaling away denominators.  Returns the scale used.
Int vectorized_image(const Multiplication& m, std::vector<IntVec>& rows_out) {
    int d = m.dim();
    std::vector<RatMatrix> mats;
    Int scale = 1;
    for (int i = 0; i < d; ++i) {
        RatMatrix p = m.left_rep(unit_vector(d, i));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) scale = lcm(scale, p(r, c).get_den());
        mats.push_back(std::move(p));
    }
    for (const RatMatrix& p : mats) {
        IntVec row(d * d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) row[r * d + c] = to_int(Rat(p(r, c) * scale));
        rows_out.push_back(std::move(row));
    }
    return scale;
}

// d^2 x d matrix whose columns are the vectorized psi(e_i).
RatMatrix vectorized_columns(const Multiplication& m) {
    int d = m.dim();
    RatMatrix P(d * d, d);
    for (int i = 0; i < d; ++i) {
        RatMatrix p = m.left_rep(unit_vector(d, i));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) P(r * d + c, i) = p(r, c);
    }
    return P;
}

RatVec vec_of(const RatMatrix& M) {
    RatVec v(M.rows() * M.cols());
    for (std::size_t r = 0; r < M.rows(); ++r)
        for (std::size_t c = 0; c < M.cols(); ++c) v[r * M.cols() + c] = M(r, c);
    return v;
}

}  // namespace

AlignmentCertificate are_aligned(const Multiplication& a, const Multiplication& b,
                                 int verify_samples) {
    if (a.dim() != b.dim()) throw UsageError("are_aligned: dimension mismatch");
    a.require_properness_known("are_aligned");
    b.require_properness_known("are_aligned");
    int d = a.dim();

    AlignmentCertificate cert;

    // Solve phi(e_i) = psi(psi(e_i) v) for rational v: d^3 equations.
    RatMatrix A(d * d * d, d);
    RatVec rhs(d * d * d, Rat(0));
    for (int i = 0; i < d; ++i) {
        RatMatrix pei = a.left_rep(unit_vector(d, i));
        RatMatrix phi = b.left_rep(unit_vector(d, i));
        // psi(psi(e_i) v) = sum_t (psi(e_i) v)_t psi(e_t); entry (r,c) is
        // linear in v with coefficient sum_t psi(e_t)(r,c) * pei(t, s).
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) rhs[(i * d + r) * d + c] = phi(r, c);
        for (int t = 0; t < d; ++t) {
            RatMatrix pet = a.left_rep(unit_vector(d, t));
            for (int s = 0; s < d; ++s) {
                const Rat& coef = pei(t, s);
                if (coef == 0) continue;
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c)
                        A((i * d + r) * d + c, s) += coef * pet(r, c);
            }
        }
    }
    auto v = solve_rational(A, rhs);

    bool solvable = v.has_value() && !is_zero(*v);
    if (solvable) {
        RatMatrix T = a.right_rep(*v);
        if (!inverse(T)) solvable = false;
        if (solvable) {
            // Integer witnesses per the clearing step: w' is the unit of b.
            auto u = b.unit();
            if (!u) throw UsageError("are_aligned: second multiplication has no unit");
            Int c = lcm(lcm_of_denominators(*v), lcm_of_denominators(*u));
            IntVec V(d), W(d);
            for (int i = 0; i < d; ++i) {
                V[i] = to_int(Rat((*v)[i] * c));
                W[i] = to_int(Rat((*u)[i] * c));
            }
            IntVec both = V;
            both.insert(both.end(), W.begin(), W.end());
            Int g = content(both);
            if (g > 1)
                for (int i = 0; i < d; ++i) {
                    V[i] /= g;
                    W[i] /= g;
                }
            cert.aligned = true;
            cert.v = V;
            cert.w = W;
            cert.v_rational = *v;
            cert.T = T;

            // Re-verify the witness identity on random pairs.
            Rng rng(0x5eedu);
            for (int s = 0; s < verify_samples; ++s) {
                IntVec x = rng.nonzero_vec(d, -20, 20);
                IntVec y = rng.nonzero_vec(d, -20, 20);
                RatVec lhs = a.multiply(a.multiply(to_rat(x), to_rat(V)), to_rat(y));
                RatVec rhsv = b.multiply(b.multiply(to_rat(x), to_rat(W)), to_rat(y));
                if (lhs != rhsv)
                    throw UsageError("are_aligned: witness identity failed to re-verify");
            }
            cert.samples_checked = verify_samples;
            return cert;
        }
    }

    // Not aligned: certify with the rank of the intersection of the
    // vectorized representation lattices.
    std::vector<IntVec> rows_a, rows_b;
    Int sa = vectorized_image(a, rows_a);
    Int sb = vectorized_image(b, rows_b);
    Int s = lcm(sa, sb);
    for (IntVec& r : rows_a)
        for (Int& x : r) x *= s / sa;
    for (IntVec& r : rows_b)
        for (Int& x : r) x *= s / sb;
    IntLattice la = hnf(d * d, rows_a);
    IntLattice lb = hnf(d * d, rows_b);
    cert.aligned = false;
    cert.intersection = lattice_intersect(la, lb);
    cert.intersection_rank = cert.intersection.rank();
    cert.denominator_scale = s;
    if (cert.intersection_rank >= static_cast<std::size_t>(d))
        throw UsageError("are_aligned: inconsistent certificate (full-rank intersection)");
    return cert;
}

std::optional<RatVec> in_centralizer(const Multiplication& m, const RatMatrix& T) {
    if (!inverse(T)) throw UsageError("in_centralizer: matrix is singular");
    int d = m.dim();
    // Solve right_rep(v) = T, linear in v.
    RatMatrix A(d * d, d);
    RatVec b(d * d);
    for (int i = 0; i < d; ++i) {
        RatMatrix ri = m.right_rep(unit_vector(d, i));
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) A(r * d + c, i) = ri(r, c);
    }
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) b[r * d + c] = T(r, c);
    auto v = solve_rational(A, b);
    if (!v) return std::nullopt;
    if (m.right_rep(*v) != T) return std::nullopt;
    return v;
}

bool in_normalizer(const Multiplication& m, const RatMatrix& T) {
    auto Tinv = inverse(T);
    if (!Tinv) throw UsageError("in_normalizer: matrix is singular");
    int d = m.dim();
    RatMatrix P = vectorized_columns(m);
    for (int i = 0; i < d; ++i) {
        RatMatrix conj = (*Tinv) * m.left_rep(unit_vector(d, i)) * T;
        if (!solve_rational(P, vec_of(conj))) return false;
    }
    return true;
}

bool is_homomorphism(const RatMatrix& T, const Multiplication& m1,
                     const Multiplication& m2) {
    if (m1.dim() != m2.dim()) throw UsageError("is_homomorphism: dimension mismatch");
    int d = m1.dim();
    if (T.rows() != static_cast<std::size_t>(d) || T.cols() != static_cast<std::size_t>(d))
        throw UsageError("is_homomorphism: matrix size mismatch");
    for (int i = 0; i < d; ++i) {
        RatVec ti = T.col(i);
        for (int j = 0; j < d; ++j) {
            RatVec lhs = T * m1.basis_product(i, j);
            RatVec rhs = m2.multiply(ti, T.col(j));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool is_automorphism(const Multiplication& m, const RatMatrix& T) {
    return inverse(T).has_value() && is_homomorphism(T, m, m);
}

std::pair<RatMatrix, RatVec> decompose_normalizer(const Multiplication& m,
                                                  const RatMatrix& T) {
    if (!in_normalizer(m, T))
        throw UsageError("decompose_normalizer: matrix is not in the normalizer");
    Multiplication acted = m.acted(T);
    AlignmentCertificate cert = are_aligned(m, acted, 8);
    if (!cert.aligned)
        throw UsageError("decompose_normalizer: internal alignment failure");
    RatMatrix S = m.right_rep(cert.v_rational);
    auto Sinv = inverse(S);
    if (!Sinv) throw UsageError("decompose_normalizer: central factor is singular");
    RatMatrix A = T * (*Sinv);
    if (!is_automorphism(m, A) || A * S != T)
        throw UsageError("decompose_normalizer: post-verification failed");
    return {A, cert.v_rational};
}

namespace {

// DFS over columns with early pruning: a basis-pair relation is checked as
// soon as every column it mentions is assigned.
void enumerate_morphisms(const Multiplication& m1, const Multiplication& m2,
                         long bound, std::vector<IntMatrix>& out) {
    int d = m1.dim();
    std::vector<IntVec> candidates = cube_points(d, bound);  // nonzero columns

    // relations[(i,j)] may be checked once max(i, j, support of sc row) < col
    // count; precompute for each column count c the pairs newly checkable.
    std::vector<std::vector<std::pair<int, int>>> checkable(d + 1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            int needed = std::max(i, j);
            RatVec prod = m1.basis_product(i, j);
            for (int k = 0; k < d; ++k)
                if (prod[k] != 0) needed = std::max(needed, k);
            checkable[needed + 1].push_back({i, j});
        }

    std::vector<RatVec> cols(d);
    IntMatrix T(d, d);

    auto check_pair = [&](int i, int j) {
        RatVec lhs(d, Rat(0));
        RatVec prod = m1.basis_product(i, j);
        for (int k = 0; k < d; ++k) {
            if (prod[k] == 0) continue;
            for (int r = 0; r < d; ++r) lhs[r] += prod[k] * cols[k][r];
        }
        return lhs == m2.multiply(cols[i], cols[j]);
    };

    std::function<void(int)> dfs = [&](int c) {
        if (c == d) {
            RatMatrix Tr = to_rat(T);
            Rat dt = det(Tr);
            if (dt != 1 && dt != -1) return;
            out.push_back(T);
            return;
        }
        for (const IntVec& cand : candidates) {
            T.set_col(c, cand);
            cols[c] = to_rat(cand);
            bool ok = true;
            for (auto [i, j] : checkable[c + 1]) {
                if (!check_pair(i, j)) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(c + 1);
        }
    };
    dfs(0);

    std::sort(out.begin(), out.end(),
              [](const IntMatrix& a, const IntMatrix& b) { return a.flat() < b.flat(); });
}

}  // namespace

std::vector<IntMatrix> enumerate_integral_automorphisms(const Multiplication& m,
                                                        long entry_bound) {
    if (entry_bound < 1) throw UsageError("enumerate: entry bound must be >= 1");
    std::vector<IntMatrix> out;
    enumerate_morphisms(m, m, entry_bound, out);
    return out;
}

std::vector<IntMatrix> enumerate_integral_isos_to_opposite(const Multiplication& m,
                                                           long entry_bound) {
    if (entry_bound < 1) throw UsageError("enumerate: entry bound must be >= 1");
    std::vector<IntMatrix> out;
    Multiplication op = m.opposite();
    enumerate_morphisms(m, op, entry_bound, out);
    return out;
}

namespace {

struct ParsedClass {
    enum class Family { Translation, IpInfinite, IpBounded } family;
    std::string canonical;
};

ParsedClass parse_class_name(const std::string& cls) {
    std::string base = cls;
    bool star = !base.empty() && base.back() == '*';
    if (star) base.pop_back();
    if (base == "S" || base == "T" || base == "PS" || base == "D")
        return {ParsedClass::Family::Translation, cls};
    if (base == "IP") return {ParsedClass::Family::IpInfinite, cls};
    if (base.rfind("IP_", 0) == 0) {
        std::string idx = base.substr(3);
        if (idx == "0") return {ParsedClass::Family::IpBounded, cls};
        try {
            long r = std::stol(idx);
            if (r >= 2) return {ParsedClass::Family::IpBounded, cls};
            throw UsageError("class IP_" + idx + " requires r >= 2 (or r = 0)");
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
    }
    throw UsageError("unknown largeness class '" + cls +
                     "' (expected S, T, PS, PS*, D, D*, IP, IP*, IP_0, IP_0*, "
                     "IP_r, IP_r* with r >= 2)");
}

}  // namespace

PreservesResult preserves_class(const Multiplication& m, const IntMatrix& T,
                                const std::string& cls) {
    RatMatrix Tr = to_rat(T);
    if (det(Tr) == 0) throw UsageError("preserves_class: matrix is singular");
    ParsedClass pc = parse_class_name(cls);
    PreservesResult res;
    res.cls = cls;
    switch (pc.family) {
        case ParsedClass::Family::Translation: {
            res.preserved = in_normalizer(m, Tr);
            res.reason = std::string(res.preserved ? "matrix is in" : "matrix is not in") +
                         " the normalizer of the representation image";
            if ((cls == "D" || cls == "D*") && !m.is_commutative())
                res.reason += "; density classes presuppose a left amenable semigroup, "
                              "which fails for non-commutative multiplications";
            break;
        }
        case ParsedClass::Family::IpInfinite: {
            res.preserved = is_automorphism(m, Tr);
            res.reason = std::string("matrix is ") + (res.preserved ? "" : "not ") +
                         "a unital algebra automorphism";
            break;
        }
        case ParsedClass::Family::IpBounded: {
            bool aut = is_automorphism(m, Tr);
            bool iso_op = !aut && is_homomorphism(Tr, m, m.opposite()) && inverse(Tr);
            res.preserved = aut || iso_op;
            if (aut)
                res.reason = "matrix is a unital algebra automorphism";
            else if (iso_op)
                res.reason = "matrix is an isomorphism onto the opposite multiplication";
            else
                res.reason = "matrix is neither an automorphism nor an isomorphism "
                             "onto the opposite multiplication";
            break;
        }
    }
    return res;
}

}  // namespace zdmult
