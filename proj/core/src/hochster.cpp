#include "veronese/hochster.hpp"

#include <algorithm>

namespace veronese {

namespace {

/* residual -= a^i if the result stays nonnegative; otherwise leave it alone. */
bool try_subtract(std::vector<Int>& residual, const Exponent& a) {
    for (std::size_t t = 0; t < residual.size(); ++t)
        if (residual[t] < a.coords[t]) return false;
    for (std::size_t t = 0; t < residual.size(); ++t) residual[t] -= a.coords[t];
    return true;
}

}  // namespace

bool is_face(const Lattice& lat, const MultiDegree& b, const Face& sigma) {
    if (b.coords.size() != static_cast<std::size_t>(lat.m()) + 1)
        throw std::invalid_argument("hochster: degree has wrong length");
    std::vector<Int> residual = b.coords;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        const Int i = sigma[k];
        if (i < 1 || i > lat.n())
            throw std::invalid_argument("hochster: face index out of range");
        if (k > 0 && sigma[k - 1] >= i)
            throw std::invalid_argument("hochster: face indices must be strictly increasing");
        const Exponent& a = lat.point(i);
        for (std::size_t t = 0; t < residual.size(); ++t) residual[t] -= a.coords[t];
    }
    return std::all_of(residual.begin(), residual.end(), [](Int c) { return c >= 0; });
}

FaceSet enumerate_faces(const Lattice& lat, const MultiDegree& b,
                        const EnumLimits& limits) {
    if (!lat.semigroup_member(b))
        throw std::invalid_argument("hochster: degree is not in the semigroup");
    if (lat.n() > limits.max_points)
        throw CapExceeded("hochster: point count exceeds enumeration cap");
    const Int j = lat.slice_index(b);
    if (j > limits.max_slice)
        throw CapExceeded("hochster: slice index exceeds enumeration cap");

    std::vector<std::vector<Face>> grouped(1);
    grouped[0].push_back(Face{});
    std::vector<std::vector<Int>> residuals{b.coords};
    std::size_t total = 1;

    while (!grouped.back().empty()) {
        const auto& level = grouped.back();
        const auto& level_res = residuals;
        std::vector<Face> next;
        std::vector<std::vector<Int>> next_res;
        for (std::size_t f = 0; f < level.size(); ++f) {
            const Int start = level[f].empty() ? 1 : level[f].back() + 1;
            for (Int i = start; i <= lat.n(); ++i) {
                std::vector<Int> residual = level_res[f];
                if (!try_subtract(residual, lat.point(i))) continue;
                Face child = level[f];
                child.push_back(i);
                next.push_back(std::move(child));
                next_res.push_back(std::move(residual));
                if (++total > limits.max_faces)
                    throw CapExceeded("hochster: face count exceeds enumeration cap");
            }
        }
        if (next.empty()) break;
        grouped.push_back(std::move(next));
        residuals = std::move(next_res);
    }
    return make_face_set(std::move(grouped));
}

}  // namespace veronese
