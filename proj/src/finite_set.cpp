#include "zdmult/finite_set.hpp"

#include "zdmult/box.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace zdmult {

FiniteSet::FiniteSet(int dim, std::vector<IntVec> elems, bool exclude_zero) : dim_(dim) {
    for (const IntVec& v : elems) {
        if (static_cast<int>(v.size()) != dim)
            throw UsageError("finite set element has wrong dimension");
        if (exclude_zero && is_zero(v))
            throw UsageError("finite set of nonzero vectors contains the origin");
    }
    std::sort(elems.begin(), elems.end(), lex_less);
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    elems_ = std::move(elems);
}

FiniteSet FiniteSet::cube(int dim, long radius) {
    FiniteSet s(dim, cube_points(dim, radius), true);
    s.set_window(radius);
    return s;
}

bool FiniteSet::contains(const IntVec& x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x, lex_less);
}

Int FiniteSet::min_norm_sq() const {
    if (empty()) throw UsageError("min_norm_sq of empty set");
    Int m = norm_sq(elems_[0]);
    for (const IntVec& v : elems_) m = std::min(m, norm_sq(v));
    return m;
}

Int FiniteSet::max_norm_sq() const {
    if (empty()) throw UsageError("max_norm_sq of empty set");
    Int m = norm_sq(elems_[0]);
    for (const IntVec& v : elems_) m = std::max(m, norm_sq(v));
    return m;
}

FiniteSet FiniteSet::united(const FiniteSet& o) const {
    if (dim_ != o.dim_ && !empty() && !o.empty())
        throw UsageError("union of sets with different dimensions");
    std::vector<IntVec> all = elems_;
    all.insert(all.end(), o.elems_.begin(), o.elems_.end());
    return FiniteSet(empty() ? o.dim_ : dim_, std::move(all));
}

FiniteSet FiniteSet::from_stream(std::istream& in) {
    std::vector<IntVec> elems;
    int dim = -1;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        IntVec v;
        std::string tok;
        while (ls >> tok) v.push_back(parse_int(tok));
        if (v.empty()) continue;
        if (dim == -1) dim = static_cast<int>(v.size());
        if (static_cast<int>(v.size()) != dim)
            throw UsageError("finite set file has inconsistent dimensions");
        elems.push_back(std::move(v));
    }
    if (dim == -1) throw UsageError("finite set file contains no vectors");
    return FiniteSet(dim, std::move(elems));
}

FiniteSet FiniteSet::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open finite set file: " + path);
    return from_stream(in);
}

void FiniteSet::to_stream(std::ostream& out) const {
    for (const IntVec& v : elems_) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out << " ";
            out << v[i];
        }
        out << "\n";
    }
}

void FiniteSet::to_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write finite set file: " + path);
    to_stream(out);
}

}  // namespace zdmult
