#include "zdmult/constructions.hpp"

#include "zdmult/box.hpp"
#include "zdmult/linalg.hpp"
#include "zdmult/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <sstream>

namespace zdmult {

long default_search_radius() {
    if (const char* env = std::getenv("ZDMULT_SEARCH_RADIUS")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 10000;
}

namespace {

long effective_radius(long radius) { return radius > 0 ? radius : default_search_radius(); }

IntVec clear_to_int(const RatVec& v) {
    Int c = lcm_of_denominators(v);
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = to_int(Rat(v[i] * c));
    return out;
}

}  // namespace

FiniteSet StagedSet::union_set() const {
    FiniteSet u;
    for (const Stage& s : stages) u = u.united(s.H);
    return u;
}

AvoidingReport verify_avoiding(const FiniteSet& A, const FiniteSet& G,
                               const Multiplication& other) {
    AvoidingReport rep;
    if (A.empty() || G.empty()) return rep;
    int d = other.dim();

    // Candidate dilators: integral solutions of left_rep(f) z = a.
    std::vector<IntVec> candidates;
    for (const IntVec& f : G.elements()) {
        RatMatrix pf = other.left_rep(f);
        for (const IntVec& a : A.elements()) {
            auto z = solve_rational(pf, to_rat(a));
            if (!z || !all_integral(*z)) continue;
            IntVec zi = to_int_vec(*z);
            if (is_zero(zi)) continue;
            if (other.multiply(to_rat(f), *z) != to_rat(a)) continue;
            candidates.push_back(std::move(zi));
        }
    }
    std::sort(candidates.begin(), candidates.end(), lex_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    rep.candidates_checked = candidates.size();

    for (const IntVec& z : candidates) {
        std::vector<IntVec> incident;
        for (const IntVec& f : G.elements())
            if (A.contains(other.multiply(f, z))) incident.push_back(f);
        // The dilate of an admissible F meets A in >= d points exactly when
        // the incident set contains d independent points.
        RatMatrix M(incident.size(), d);
        for (size_t i = 0; i < incident.size(); ++i)
            for (int j = 0; j < d; ++j) M(i, j) = Rat(incident[i][j]);
        std::size_t rk = incident.empty() ? 0 : rank(M);
        std::ostringstream line;
        line << "z=" << to_string(z) << " incidences=" << incident.size()
             << " rank=" << rk;
        rep.incidences.push_back(line.str());
        if (rk >= static_cast<std::size_t>(d)) {
            rep.avoiding = false;
            rep.z = z;
            // greedy independent subset of size d
            std::vector<IntVec> chosen;
            for (const IntVec& f : incident) {
                std::vector<IntVec> trial = chosen;
                trial.push_back(f);
                RatMatrix T(trial.size(), d);
                for (size_t i = 0; i < trial.size(); ++i)
                    for (int j = 0; j < d; ++j) T(i, j) = Rat(trial[i][j]);
                if (rank(T) == trial.size()) chosen = trial;
                if (chosen.size() == static_cast<size_t>(d)) break;
            }
            rep.violating = chosen;
            return rep;
        }
    }
    return rep;
}

namespace {

// The nonzero difference matrices T_{@,f,g} - T_{@,f',g'}.
std::vector<RatMatrix> avoiding_null_maps(const Multiplication& base,
                                          const std::vector<Multiplication>& others,
                                          const FiniteSet& G) {
    std::vector<RatMatrix> diffs;
    for (const Multiplication& other : others) {
        std::vector<RatMatrix> ts;
        for (const IntVec& f : G.elements()) {
            auto finv = inverse(other.left_rep(f));
            if (!finv) throw UsageError("avoiding: singular representation of a dilate");
            for (const IntVec& g : G.elements()) ts.push_back((*finv) * base.left_rep(g));
        }
        for (size_t i = 0; i < ts.size(); ++i)
            for (size_t j = i + 1; j < ts.size(); ++j) {
                RatMatrix diff = ts[i] - ts[j];
                if (!diff.is_zero()) diffs.push_back(std::move(diff));
            }
    }
    // dedupe to keep the candidate filter small
    std::sort(diffs.begin(), diffs.end(), [](const RatMatrix& a, const RatMatrix& b) {
        return a.flat() < b.flat();
    });
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    return diffs;
}

bool outside_all_null_spaces(const std::vector<RatMatrix>& maps, const IntVec& x) {
    RatVec xr = to_rat(x);
    for (const RatMatrix& m : maps)
        if (is_zero(m * xr)) return false;
    return true;
}

}  // namespace

IntVec find_avoiding_dilator(const Multiplication& base,
                             const std::vector<Multiplication>& others,
                             const FiniteSet& G, long search_radius) {
    base.require_proper("find_avoiding_dilator");
    if (G.empty()) throw UsageError("find_avoiding_dilator: G must be nonempty");
    if (G.contains(IntVec(base.dim(), Int(0))))
        throw UsageError("find_avoiding_dilator: G must not contain 0");
    for (const Multiplication& other : others) {
        other.require_proper("find_avoiding_dilator");
        if (are_aligned(base, other, 8).aligned)
            throw HypothesisViolation("find_avoiding_dilator: '" + other.label() +
                                      "' is aligned with '" + base.label() + "'");
    }
    long radius = effective_radius(search_radius);
    std::vector<RatMatrix> maps = avoiding_null_maps(base, others, G);
    for (long r = 1; r <= radius; ++r) {
        for (const IntVec& x : box_points(base.dim(), r)) {
            if (!outside_all_null_spaces(maps, x)) continue;
            // post-verification via the exact incidence check
            std::vector<IntVec> gx;
            for (const IntVec& g : G.elements()) gx.push_back(base.multiply(g, x));
            FiniteSet A(base.dim(), gx);
            for (const Multiplication& other : others)
                if (!verify_avoiding(A, G, other).avoiding)
                    throw UsageError("find_avoiding_dilator: post-verification failed");
            return x;
        }
    }
    throw SearchExhausted("find_avoiding_dilator: no dilator with sup-norm <= " +
                          std::to_string(radius));
}

namespace {

// min over f in F of |f * x|^2, with early exit once <= threshold.
Int min_dilate_norm_sq(const Multiplication& m, const FiniteSet& F, const IntVec& x,
                       const Int& early_below) {
    Int best = -1;
    for (const IntVec& f : F.elements()) {
        Int n = norm_sq(m.multiply(f, x));
        if (best < 0 || n < best) best = n;
        if (best <= early_below) break;
    }
    return best;
}

Stage make_stage(int n, std::size_t mult_index, const Multiplication& m, const IntVec& x,
                 const FiniteSet& cube_n) {
    std::vector<IntVec> hx;
    for (const IntVec& f : cube_n.elements()) hx.push_back(m.multiply(f, x));
    Stage st;
    st.n = n;
    st.mult_index = mult_index;
    st.mult_label = m.label();
    st.x = x;
    st.H = FiniteSet(m.dim(), std::move(hx));
    st.min_norm_sq = st.H.min_norm_sq();
    st.max_norm_sq = st.H.max_norm_sq();
    st.aux_min_norm_sq = 0;
    return st;
}

}  // namespace

StagedSet build_thick_avoiding(const std::vector<Multiplication>& thick_for,
                               const std::vector<Multiplication>& avoid, int stages,
                               long search_radius) {
    if (thick_for.empty()) throw UsageError("build_thick_avoiding: need a multiplication");
    if (stages < 1) throw UsageError("build_thick_avoiding: stages must be >= 1");
    for (const Multiplication& t : thick_for) t.require_proper("build_thick_avoiding");
    for (const Multiplication& a : avoid) {
        a.require_proper("build_thick_avoiding");
        for (const Multiplication& t : thick_for)
            if (are_aligned(t, a, 8).aligned)
                throw HypothesisViolation("build_thick_avoiding: '" + a.label() +
                                          "' is aligned with '" + t.label() + "'");
    }
    long radius = effective_radius(search_radius);
    int d = thick_for[0].dim();

    StagedSet out;
    out.mults = thick_for;
    Int prev_max_sq = 0;
    for (int n = 1; n <= stages; ++n) {
        std::size_t mi = static_cast<std::size_t>(n - 1) % thick_for.size();
        const Multiplication& m = thick_for[mi];
        FiniteSet G = FiniteSet::cube(d, n);
        std::vector<RatMatrix> maps = avoiding_null_maps(m, avoid, G);
        Int need_above = Int(n) * Int(n) * prev_max_sq;  // min^2 must exceed this

        bool placed = false;
        for (long r = 1; r <= radius && !placed; ++r) {
            for (const IntVec& x : box_points(d, r)) {
                if (!outside_all_null_spaces(maps, x)) continue;
                if (min_dilate_norm_sq(m, G, x, need_above) <= need_above) continue;
                Stage st = make_stage(n, mi, m, x, G);
                for (const Multiplication& a : avoid)
                    if (!verify_avoiding(st.H, G, a).avoiding)
                        throw UsageError("build_thick_avoiding: avoiding post-check failed");
                out.stages.push_back(std::move(st));
                placed = true;
                break;
            }
        }
        if (!placed) {
            std::ostringstream os;
            os << "build_thick_avoiding: stage " << n
               << " exhausted the search box (sup-norm <= " << radius
               << ") under the norm constraint min^2 > " << need_above;
            throw SearchExhausted(os.str());
        }
        prev_max_sq = out.stages.back().max_norm_sq;
    }
    return out;
}

StagedSet build_ipstar_nonsyndetic(const std::vector<Multiplication>& mults, int stages,
                                   long search_radius) {
    if (mults.empty()) throw UsageError("build_ipstar_nonsyndetic: need a multiplication");
    if (stages < 1) throw UsageError("build_ipstar_nonsyndetic: stages must be >= 1");
    for (const Multiplication& m : mults) m.require_proper("build_ipstar_nonsyndetic");
    long radius = effective_radius(search_radius);
    int d = mults[0].dim();

    StagedSet out;
    out.mults = mults;
    Int prev_max_sq = 0;
    for (int n = 1; n <= stages; ++n) {
        std::size_t mi = static_cast<std::size_t>(n - 1) % mults.size();
        const Multiplication& m = mults[mi];
        FiniteSet G = FiniteSet::cube(d, n);
        FiniteSet G2 = FiniteSet::cube(d, 2 * n);
        Int need_above = 4 * prev_max_sq;        // min^2(H_n) > (2 max(H_{n-1}))^2
        Int need_above_2n = Int(n) * Int(n);     // min^2(cube(2n) * x) > n^2

        bool placed = false;
        for (long r = 1; r <= radius && !placed; ++r) {
            for (const IntVec& x : box_points(d, r)) {
                Int m2n = min_dilate_norm_sq(m, G2, x, need_above_2n);
                if (m2n <= need_above_2n) continue;
                Int mn = min_dilate_norm_sq(m, G, x, need_above);
                if (mn <= need_above) continue;
                Stage st = make_stage(n, mi, m, x, G);
                st.aux_min_norm_sq = m2n;
                out.stages.push_back(std::move(st));
                placed = true;
                break;
            }
        }
        if (!placed) {
            std::ostringstream os;
            os << "build_ipstar_nonsyndetic: stage " << n
               << " exhausted the search box (sup-norm <= " << radius << ")";
            throw SearchExhausted(os.str());
        }
        prev_max_sq = out.stages.back().max_norm_sq;
    }
    return out;
}

DifferenceBoundReport verify_difference_bound(const StagedSet& s, long window) {
    DifferenceBoundReport rep;
    if (s.stages.empty()) return rep;
    int d = s.stages[0].H.dim();

    std::map<IntVec, int> stage_of;
    for (size_t i = 0; i < s.stages.size(); ++i)
        for (const IntVec& e : s.stages[i].H.elements()) {
            auto it = stage_of.find(e);
            if (it != stage_of.end() && it->second != static_cast<int>(i)) {
                rep.ok = false;
                rep.lines.push_back("element " + to_string(e) + " lies in two stages");
            }
            stage_of[e] = static_cast<int>(i);
        }

    FiniteSet B = s.union_set();
    for (const IntVec& x : cube_points(d, window)) {
        Int xsq = norm_sq(x);
        // first stage that the norm argument excludes: stage number n with
        // n >= |x| and min-norm(H_n) > |x|
        int cutoff = -1;
        for (size_t i = 0; i < s.stages.size(); ++i) {
            const Stage& st = s.stages[i];
            if (Int(st.n) * Int(st.n) >= xsq && st.min_norm_sq > xsq) {
                cutoff = static_cast<int>(i);
                break;
            }
        }
        int count = 0;
        bool bad = false;
        for (const IntVec& b : B.elements()) {
            IntVec c = add(b, x);
            if (!B.contains(c)) continue;
            ++count;
            int sb = stage_of.at(b), sc = stage_of.at(c);
            if (sb != sc) {
                bad = true;
                rep.lines.push_back("x=" + to_string(x) + ": pair spans stages " +
                                    std::to_string(sb) + " and " + std::to_string(sc));
            } else if (cutoff >= 0 && sb >= cutoff) {
                bad = true;
                rep.lines.push_back("x=" + to_string(x) + ": incidence in stage " +
                                    std::to_string(sb) + " at or beyond cutoff " +
                                    std::to_string(cutoff));
            }
        }
        if (bad) rep.ok = false;
        if (count > 0 && !bad)
            rep.lines.push_back("x=" + to_string(x) + ": " + std::to_string(count) +
                                " incidences, single stage, below cutoff");
    }
    return rep;
}

namespace {

// A linear map z -> matrix, stored through its values on the basis.
struct MatrixValuedMap {
    std::vector<RatMatrix> on_basis;

    bool zero_map() const {
        for (const RatMatrix& m : on_basis)
            if (!m.is_zero()) return false;
        return true;
    }
    bool vanishes_at(const RatVec& z) const {
        RatMatrix acc = on_basis[0] * z[0];
        for (size_t i = 1; i < on_basis.size(); ++i) acc = acc + on_basis[i] * z[i];
        return acc.is_zero();
    }
};

struct SeparatingContext {
    const Multiplication& mA;
    const Multiplication* mB;  // null for the order-separating variant
    std::vector<IntVec> gens;

    int dim() const { return mA.dim(); }

    // products x_mask under mA; mask 0 is absent (identity only in reps)
    std::vector<IntVec> products() const {
        size_t n = gens.size();
        std::vector<IntVec> prod(size_t(1) << n);
        for (size_t mask = 1; mask < prod.size(); ++mask) {
            size_t low = mask & (~mask + 1);
            size_t rest = mask ^ low;
            int li = std::countr_zero(low);
            prod[mask] = rest == 0 ? gens[li] : mA.multiply(gens[li], prod[rest]);
        }
        return prod;
    }

    RatMatrix psi(const std::vector<IntVec>& prod, size_t mask) const {
        return mask == 0 ? RatMatrix::identity(dim()) : mA.left_rep(prod[mask]);
    }
    RatMatrix psi_r(const std::vector<IntVec>& prod, size_t mask) const {
        return mask == 0 ? RatMatrix::identity(dim()) : mA.right_rep(prod[mask]);
    }
    RatMatrix phi(const std::vector<IntVec>& prod, size_t mask) const {
        return mask == 0 ? RatMatrix::identity(dim()) : mB->left_rep(prod[mask]);
    }
    RatMatrix phi_r(const std::vector<IntVec>& prod, size_t mask) const {
        return mask == 0 ? RatMatrix::identity(dim()) : mB->right_rep(prod[mask]);
    }
};

// Null-space family for the next step of the two-multiplication induction.
std::vector<MatrixValuedMap> separating_null_family(const SeparatingContext& ctx) {
    int d = ctx.dim();
    const Multiplication& mA = ctx.mA;
    const Multiplication& mB = *ctx.mB;
    std::vector<IntVec> prod = ctx.products();
    size_t nmask = size_t(1) << ctx.gens.size();
    std::vector<MatrixValuedMap> fam;

    std::vector<RatMatrix> psi_e(d);  // per basis vector
    for (int i = 0; i < d; ++i) psi_e[i] = mA.left_rep(unit_vector(d, i));

    for (size_t a = 0; a < nmask; ++a)
        for (size_t b = 0; b < nmask; ++b)
            for (size_t g = 0; g < nmask; ++g) {
                RatMatrix pb = ctx.psi(prod, b);
                RatMatrix pg = ctx.psi(prod, g);
                if (a != 0) {
                    // matrices whose kernels the candidate must avoid
                    MatrixValuedMap m1;
                    RatMatrix M = ctx.phi(prod, a) * pb - pg;
                    MatrixValuedMap m2;
                    RatMatrix Mr = ctx.phi_r(prod, a) * pb - pg;
                    // store as maps z -> (M z) viewed one column at a time
                    m1.on_basis.resize(d);
                    m2.on_basis.resize(d);
                    for (int i = 0; i < d; ++i) {
                        RatMatrix c1(d, 1), c2(d, 1);
                        for (int r = 0; r < d; ++r) {
                            c1(r, 0) = M(r, i);
                            c2(r, 0) = Mr(r, i);
                        }
                        m1.on_basis[i] = c1;
                        m2.on_basis[i] = c2;
                    }
                    fam.push_back(std::move(m1));
                    fam.push_back(std::move(m2));
                }
                // sigma(z) = phi(psi(x_a) z) psi(x_b) - psi(x_g) psi(z), and
                // the phi_r variant
                RatMatrix pa = ctx.psi(prod, a);
                MatrixValuedMap s1, s2;
                s1.on_basis.resize(d);
                s2.on_basis.resize(d);
                for (int i = 0; i < d; ++i) {
                    RatVec paz = pa * to_rat(unit_vector(d, i));
                    s1.on_basis[i] = mB.left_rep(paz) * pb - pg * psi_e[i];
                    s2.on_basis[i] = mB.right_rep(paz) * pb - pg * psi_e[i];
                }
                fam.push_back(std::move(s1));
                fam.push_back(std::move(s2));
            }
    return fam;
}

// Null-space family for the single-multiplication order induction.
std::vector<MatrixValuedMap> order_null_family(const SeparatingContext& ctx) {
    int d = ctx.dim();
    const Multiplication& mA = ctx.mA;
    std::vector<IntVec> prod = ctx.products();
    size_t nmask = size_t(1) << ctx.gens.size();
    std::vector<MatrixValuedMap> fam;

    std::vector<RatMatrix> psi_e(d), psir_e(d);
    for (int i = 0; i < d; ++i) {
        psi_e[i] = mA.left_rep(unit_vector(d, i));
        psir_e[i] = mA.right_rep(unit_vector(d, i));
    }

    for (size_t a = 0; a < nmask; ++a)
        for (size_t b = 0; b < nmask; ++b) {
            RatMatrix pa = ctx.psi(prod, a);
            RatMatrix prb = ctx.psi_r(prod, b);
            for (size_t g = 0; g < nmask; ++g) {
                RatMatrix pg = ctx.psi(prod, g);
                if (b != 0) {
                    RatMatrix M = pa * prb - pg;
                    MatrixValuedMap m1;
                    m1.on_basis.resize(d);
                    for (int i = 0; i < d; ++i) {
                        RatMatrix c(d, 1);
                        for (int r = 0; r < d; ++r) c(r, 0) = M(r, i);
                        m1.on_basis[i] = c;
                    }
                    fam.push_back(std::move(m1));
                }
                // sigma(z) = psi(x_a) psi_r(z) psi_r(x_b) - psi(x_g) psi(z)
                MatrixValuedMap s;
                s.on_basis.resize(d);
                for (int i = 0; i < d; ++i)
                    s.on_basis[i] = pa * psir_e[i] * prb - pg * psi_e[i];
                fam.push_back(std::move(s));
            }
            if (a != 0 && b != 0) {
                RatMatrix M = pa * ctx.psi(prod, b) - RatMatrix::identity(d);
                MatrixValuedMap m3;
                m3.on_basis.resize(d);
                for (int i = 0; i < d; ++i) {
                    RatMatrix c(d, 1);
                    for (int r = 0; r < d; ++r) c(r, 0) = M(r, i);
                    m3.on_basis[i] = c;
                }
                fam.push_back(std::move(m3));
            }
        }
    return fam;
}

bool statements_hold_separating(const SeparatingContext& ctx) {
    const Multiplication& mA = ctx.mA;
    const Multiplication& mB = *ctx.mB;
    std::vector<IntVec> prod = ctx.products();
    size_t nmask = size_t(1) << ctx.gens.size();
    int d = ctx.dim();

    for (size_t a = 1; a < nmask; ++a)
        for (size_t b = 1; b < nmask; ++b)
            for (size_t g = 1; g < nmask; ++g)
                if (mB.multiply(prod[a], prod[b]) == prod[g]) return false;

    for (size_t a = 1; a < nmask; ++a) {
        RatMatrix fa = ctx.phi(prod, a);
        RatMatrix fra = ctx.phi_r(prod, a);
        for (size_t b = 0; b < nmask; ++b) {
            RatMatrix pb = ctx.psi(prod, b);
            RatMatrix lhs1 = fa * pb;
            RatMatrix lhs2 = fra * pb;
            for (size_t g = 0; g < nmask; ++g) {
                RatMatrix pg = ctx.psi(prod, g);
                if (lhs1 == pg || lhs2 == pg) return false;
            }
        }
    }

    for (size_t a = 0; a < nmask; ++a) {
        RatMatrix pa = ctx.psi(prod, a);
        bool g_eq = true, gr_eq = true;
        for (int i = 0; i < d && (g_eq || gr_eq); ++i) {
            RatMatrix pe = mA.left_rep(unit_vector(d, i));
            RatVec ei = to_rat(unit_vector(d, i));
            if (mB.left_rep(ei) != pa * pe) g_eq = false;
            if (mB.right_rep(ei) != pa * pe) gr_eq = false;
        }
        if (g_eq || gr_eq) return false;
    }
    return true;
}

bool statements_hold_order(const SeparatingContext& ctx) {
    const Multiplication& m = ctx.mA;
    std::vector<IntVec> prod = ctx.products();
    size_t nmask = size_t(1) << ctx.gens.size();
    int d = ctx.dim();
    RatMatrix id = RatMatrix::identity(d);

    auto max_idx = [](size_t mask) { return 63 - std::countl_zero((unsigned long long)mask); };
    auto min_idx = [](size_t mask) { return std::countr_zero((unsigned long long)mask); };

    for (size_t a = 1; a < nmask; ++a)
        for (size_t b = 1; b < nmask; ++b)
            for (size_t g = 1; g < nmask; ++g)
                if (m.multiply(prod[a], prod[b]) == prod[g] && max_idx(a) >= min_idx(b))
                    return false;

    for (size_t a = 0; a < nmask; ++a) {
        RatMatrix pa = ctx.psi(prod, a);
        for (size_t b = 1; b < nmask; ++b) {
            RatMatrix lhs = pa * ctx.psi_r(prod, b);
            for (size_t g = 0; g < nmask; ++g)
                if (lhs == ctx.psi(prod, g)) return false;
        }
    }

    for (size_t a = 1; a < nmask; ++a) {
        RatMatrix pa = ctx.psi(prod, a);
        for (size_t b = 1; b < nmask; ++b)
            if (pa * ctx.psi(prod, b) == id) return false;
    }
    return true;
}

IpSequence build_inductive(const Multiplication& mA, const Multiplication* mB, int n,
                           long search_radius) {
    long radius = effective_radius(search_radius);
    int d = mA.dim();
    SeparatingContext ctx{mA, mB, {}};
    IpSequence seq;
    seq.builder = mA;

    const long scale_cap = 100000;
    for (int step = 1; step <= n; ++step) {
        std::vector<MatrixValuedMap> fam =
            mB ? separating_null_family(ctx) : order_null_family(ctx);
        for (const MatrixValuedMap& f : fam)
            if (f.zero_map())
                throw UsageError("ip construction: an excluded map vanished identically");

        bool placed = false;
        for (long r = 1; r <= radius && !placed; ++r) {
            for (const IntVec& x0 : box_points(d, r)) {
                RatVec xr = to_rat(x0);
                bool outside = true;
                for (const MatrixValuedMap& f : fam)
                    if (f.vanishes_at(xr)) {
                        outside = false;
                        break;
                    }
                if (!outside) continue;
                // minimal scaling constant keeping every determined equation false
                for (long c = 1; c <= scale_cap; ++c) {
                    ctx.gens.push_back(scale(Int(c), x0));
                    bool ok = mB ? statements_hold_separating(ctx) : statements_hold_order(ctx);
                    if (ok) {
                        seq.generators.push_back(ctx.gens.back());
                        seq.scales.push_back(Int(c));
                        placed = true;
                        break;
                    }
                    ctx.gens.pop_back();
                }
                if (placed) break;
            }
        }
        if (!placed) {
            std::ostringstream os;
            os << "ip construction: step " << step << " exhausted the search box (sup-norm <= "
               << radius << ")";
            throw SearchExhausted(os.str());
        }
    }
    return seq;
}

}  // namespace

IpSequence build_ip_separating(const Multiplication& mA, const Multiplication& mB, int n,
                               long search_radius) {
    if (n < 1) throw UsageError("build_ip_separating: n must be >= 1");
    mA.require_proper("build_ip_separating");
    mB.require_proper("build_ip_separating");
    if (mA.dim() != mB.dim()) throw UsageError("build_ip_separating: dimension mismatch");
    if (mB == mA || mB == mA.opposite())
        throw HypothesisViolation(
            "build_ip_separating: second multiplication equals the first or its opposite");
    IpSequence seq = build_inductive(mA, &mB, n, search_radius);
    if (!verify_ip_separating(mA, mB, seq.generators))
        throw UsageError("build_ip_separating: exhaustive verification failed");
    return seq;
}

IpSequence build_ip_order_separating(const Multiplication& m, int n, long search_radius) {
    if (n < 1) throw UsageError("build_ip_order_separating: n must be >= 1");
    m.require_proper("build_ip_order_separating");
    if (m.is_commutative())
        throw HypothesisViolation("build_ip_order_separating: multiplication is commutative");
    IpSequence seq = build_inductive(m, nullptr, n, search_radius);
    if (!verify_ip_order_separating(m, seq.generators))
        throw UsageError("build_ip_order_separating: exhaustive verification failed");
    return seq;
}

bool verify_ip_separating(const Multiplication& mA, const Multiplication& mB,
                          const std::vector<IntVec>& gens) {
    SeparatingContext ctx{mA, &mB, gens};
    std::vector<IntVec> prod = ctx.products();
    size_t nmask = size_t(1) << gens.size();
    for (size_t a = 1; a < nmask; ++a)
        for (size_t b = 1; b < nmask; ++b)
            for (size_t g = 1; g < nmask; ++g)
                if (mB.multiply(prod[a], prod[b]) == prod[g]) return false;
    return true;
}

bool verify_ip_order_separating(const Multiplication& m, const std::vector<IntVec>& gens) {
    SeparatingContext ctx{m, nullptr, gens};
    std::vector<IntVec> prod = ctx.products();
    size_t nmask = size_t(1) << gens.size();
    auto max_idx = [](size_t mask) { return 63 - std::countl_zero((unsigned long long)mask); };
    auto min_idx = [](size_t mask) { return std::countr_zero((unsigned long long)mask); };
    for (size_t a = 1; a < nmask; ++a)
        for (size_t b = 1; b < nmask; ++b)
            for (size_t g = 1; g < nmask; ++g)
                if (m.multiply(prod[a], prod[b]) == prod[g] && max_idx(a) >= min_idx(b))
                    return false;
    return true;
}

Rat norm_constant(const Multiplication& m, const IntVec& y) {
    m.require_proper("norm_constant");
    if (is_zero(y)) throw UsageError("norm_constant: y must be nonzero");
    auto op_bound = [](const RatMatrix& A) {
        // |A|_2 <= max(max row abs sum, max col abs sum)
        Rat best(0);
        for (std::size_t i = 0; i < A.rows(); ++i) {
            Rat rs(0);
            for (std::size_t j = 0; j < A.cols(); ++j) rs += abs(A(i, j));
            if (rs > best) best = rs;
        }
        for (std::size_t j = 0; j < A.cols(); ++j) {
            Rat cs(0);
            for (std::size_t i = 0; i < A.rows(); ++i) cs += abs(A(i, j));
            if (cs > best) best = cs;
        }
        return best;
    };
    RatMatrix L = m.left_rep(y), R = m.right_rep(y);
    auto Li = inverse(L), Ri = inverse(R);
    if (!Li || !Ri) throw UsageError("norm_constant: representation of y is singular");
    Rat K = op_bound(L);
    K = std::max(K, op_bound(R));
    K = std::max(K, op_bound(*Li));
    K = std::max(K, op_bound(*Ri));
    return K;
}

}  // namespace zdmult
