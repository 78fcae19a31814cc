#include "veronese/bounds.hpp"

#include <algorithm>

namespace veronese {

Int compute_A(const Lattice& lat, Int j) {
    if (j < 1) throw std::invalid_argument("bounds: A_j needs j >= 1");
    return lat.prefix_coord_sum(0, j);
}

Int compute_A_closed_form_m2(Int d, Int j) {
    if (d < 2 || j < 1) throw std::invalid_argument("bounds: closed form needs d >= 2, j >= 1");
    const Int n = binomial(d + 2, 2);
    if (j >= n) return binomial(d + 2, 3);
    for (Int k = 1; k <= d; ++k)
        if (binomial(k + 1, 2) <= j && j <= binomial(k + 2, 2))
            return (d - k) * j + binomial(k + 2, 3);
    throw std::logic_error("bounds: no block contains j");  // unreachable for j in [1, n)
}

KnapsackProfile knapsack_profile(const Lattice& lat, Int value_coord) {
    if (value_coord < 1 || value_coord > lat.m())
        throw std::invalid_argument("bounds: knapsack value coordinate must be in 1..m");
    const Int A = lat.prefix_coord_sum(0, lat.n());
    constexpr Int kUnreachable = -1;
    std::vector<Int> f(static_cast<std::size_t>(A) + 1, kUnreachable);
    f[0] = 0;
    for (const Exponent& a : lat.points()) {
        const Int w = a.coords[0];
        const Int v = a.coords[static_cast<std::size_t>(value_coord)];
        for (Int l = A; l >= w; --l) {
            const Int from = f[static_cast<std::size_t>(l - w)];
            if (from >= 0) f[static_cast<std::size_t>(l)] =
                std::max(f[static_cast<std::size_t>(l)], from + v);
        }
    }
    // Every level is reachable (each of (1,0,..,d-1),...,(d,0,...,0) swaps in);
    // the DP marker must not survive.
    for (Int l = 0; l <= A; ++l)
        if (f[static_cast<std::size_t>(l)] == kUnreachable)
            throw std::logic_error("bounds: knapsack level unreachable");
    return KnapsackProfile{A, std::move(f)};
}

Int l_tilde_threshold(const Lattice& lat) {
    return binomial(lat.d() + lat.m() - 1, lat.m() - 1);
}

Int compute_l_tilde(const Lattice& lat, Int j) {
    if (j < l_tilde_threshold(lat))
        throw std::invalid_argument("bounds: l~_j needs j >= C(d+m-1, m-1)");
    const Int a_j = compute_A(lat, j);
    const KnapsackProfile profile = knapsack_profile(lat);
    const Int dj = lat.d() * j;

    Int best = -1;
    Int prev_phi = 0;
    for (Int l = 0; l < a_j; ++l) {
        const Int phi = ceil_div(dj - l, lat.m()) - profile.f[static_cast<std::size_t>(l)];
        if (l > 0 && phi > prev_phi)
            throw std::logic_error("bounds: phi is not nonincreasing");
        prev_phi = phi;
        if (phi >= 0) best = l;
    }
    return best;
}

VanishingStatus vanishing_status(const Lattice& lat, const MultiDegree& b) {
    if (!lat.semigroup_member(b))
        throw std::invalid_argument("bounds: degree is not in the semigroup");
    const Int j = lat.slice_index(b);
    if (j < 1) throw std::invalid_argument("bounds: vanishing status needs |b| >= d");

    const Int a_j = compute_A(lat, j);
    for (Int c : b.coords)
        if (c >= a_j) return VanishingStatus::vanish_upper;

    if (j >= l_tilde_threshold(lat)) {
        const Int lt = compute_l_tilde(lat, j);
        if (lt >= 0)
            for (Int c : b.coords)
                if (c <= lt) return VanishingStatus::vanish_lower;
    }
    return VanishingStatus::undetermined;
}

BoundsTable bounds_table(const Lattice& lat, Int j_max) {
    if (j_max < 1) throw std::invalid_argument("bounds: table needs j_max >= 1");
    BoundsTable table;
    table.d = lat.d();
    table.m = lat.m();
    table.j_threshold = l_tilde_threshold(lat);
    table.rows.reserve(static_cast<std::size_t>(j_max));
    for (Int j = 1; j <= j_max; ++j) {
        BoundsTable::Row row;
        row.j = j;
        row.A = compute_A(lat, j);
        if (j >= table.j_threshold) row.l_tilde = compute_l_tilde(lat, j);
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace veronese
