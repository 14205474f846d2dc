#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdmult {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Errors shared across the library.  The CLI maps these to exit codes.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HypothesisViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mpq_class(num, den) does not canonicalize; this does.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw UsageError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline Int to_int(const Rat& q) {
    if (!is_integral(q)) throw UsageError("rational is not an integer: " + q.get_str());
    return q.get_num();
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

// A rational is a square in Q iff numerator and denominator are both squares.
inline bool rat_is_square(const Rat& q, Rat* root = nullptr) {
    if (q < 0) return false;
    Int ns, ds;
    if (!is_perfect_square(q.get_num(), &ns)) return false;
    if (!is_perfect_square(q.get_den(), &ds)) return false;
    if (root) *root = make_rat(ns, ds);
    return true;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline Int lcm_of_denominators(const RatVec& v) {
    Int l = 1;
    for (const Rat& q : v) l = lcm(l, q.get_den());
    return l;
}

// --- vector helpers ---

inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline bool all_integral(const RatVec& v) {
    for (const Rat& q : v)
        if (!is_integral(q)) return false;
    return true;
}

inline IntVec to_int_vec(const RatVec& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = to_int(v[i]);
    return r;
}

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline bool is_zero(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

inline IntVec unit_vector(int dim, int i) {
    IntVec v(dim, Int(0));
    v[i] = 1;
    return v;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec neg(const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVec scale(const Int& c, const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Int norm_sq(const IntVec& v) {
    Int s = 0;
    for (const Int& x : v) s += x * x;
    return s;
}

inline Int sup_norm(const IntVec& v) {
    Int m = 0;
    for (const Int& x : v) {
        Int a = abs(x);
        if (a > m) m = a;
    }
    return m;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return a.size() < b.size();
}

// Canonical candidate order used by every bounded search: increasing
// sup-norm shells, lexicographic within a shell.
inline bool canonical_less(const IntVec& a, const IntVec& b) {
    Int sa = sup_norm(a), sb = sup_norm(b);
    if (sa != sb) return sa < sb;
    return lex_less(a, b);
}

// --- parsing / printing ---

Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

std::string to_string(const Rat& q);
std::string to_string(const Int& n);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

// Deterministic splitmix64-based generator for sampled identities; the
// standard <random> distributions are not portable bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long uniform(long lo, long hi) {  // inclusive range
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    IntVec vec(int dim, long lo, long hi) {
        IntVec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = Int(uniform(lo, hi));
        return v;
    }

    IntVec nonzero_vec(int dim, long lo, long hi) {
        for (;;) {
            IntVec v = vec(dim, lo, hi);
            if (!is_zero(v)) return v;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace zdmult
