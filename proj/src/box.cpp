#include "zdmult/box.hpp"

namespace zdmult {

namespace {

void shell_rec(int dim, long radius, int pos, bool saturated, IntVec& cur,
               std::vector<IntVec>& out) {
    if (pos == dim) {
        out.push_back(cur);
        return;
    }
    bool last = (pos == dim - 1);
    for (long v = -radius; v <= radius; ++v) {
        bool sat = saturated || v == radius || v == -radius;
        if (last && !sat) {
            // only the extreme values keep the point on the shell
            if (v > -radius && v < radius) continue;
        }
        cur[pos] = v;
        shell_rec(dim, radius, pos + 1, sat, cur, out);
    }
}

}  // namespace

std::vector<IntVec> box_points(int dim, long radius) {
    std::vector<IntVec> out;
    if (radius < 0) return out;
    if (radius == 0) {
        out.push_back(IntVec(dim, Int(0)));
        return out;
    }
    IntVec cur(dim, Int(0));
    shell_rec(dim, radius, 0, false, cur, out);
    return out;
}

std::vector<IntVec> cube_points(int dim, long radius) {
    std::vector<IntVec> out;
    IntVec cur(dim, Int(0));
    // plain lexicographic sweep of the full box, origin skipped
    std::vector<long> v(dim, -radius);
    for (;;) {
        bool zero = true;
        for (long x : v)
            if (x != 0) {
                zero = false;
                break;
            }
        if (!zero) {
            IntVec p(dim);
            for (int i = 0; i < dim; ++i) p[i] = Int(v[i]);
            out.push_back(std::move(p));
        }
        int i = dim - 1;
        while (i >= 0 && v[i] == radius) {
            v[i] = -radius;
            --i;
        }
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

}  // namespace zdmult
