#pragma once

#include "zdmult/numeric.hpp"

#include <iosfwd>
#include <optional>

namespace zdmult {

// An explicit finite subset of Z^d, stored sorted (lexicographic) and
// deduplicated.  The optional window radius records the box on which the set
// is a faithful restriction of an ambient set.
class FiniteSet {
public:
    FiniteSet() : dim_(0) {}
    explicit FiniteSet(int dim) : dim_(dim) {}
    FiniteSet(int dim, std::vector<IntVec> elems, bool exclude_zero = false);

    // {-N..N}^d minus the origin.
    static FiniteSet cube(int dim, long radius);

    // One vector per line, whitespace-separated coordinates, '#' comments.
    static FiniteSet from_stream(std::istream& in);
    static FiniteSet from_file(const std::string& path);
    void to_stream(std::ostream& out) const;
    void to_file(const std::string& path) const;

    int dim() const { return dim_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<IntVec>& elements() const { return elems_; }
    bool contains(const IntVec& x) const;

    bool operator==(const FiniteSet& o) const {
        return dim_ == o.dim_ && elems_ == o.elems_;
    }

    std::optional<long> window() const { return window_; }
    void set_window(long radius) { window_ = radius; }

    // Squared Euclidean norms; exact.
    Int min_norm_sq() const;
    Int max_norm_sq() const;

    FiniteSet united(const FiniteSet& o) const;

private:
    int dim_;
    std::vector<IntVec> elems_;
    std::optional<long> window_;
};

}  // namespace zdmult
