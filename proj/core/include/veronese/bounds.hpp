#ifndef VERONESE_BOUNDS_HPP
#define VERONESE_BOUNDS_HPP

#include <optional>
#include <vector>

#include "veronese/lattice.hpp"

namespace veronese {

/* A_j = sum of the first min(j, n) first coordinates. b_0 >= A_j forces
 * Delta_b to be a cone over (d,0,...,0). */
Int compute_A(const Lattice& lat, Int j);

/* Closed form of A_j for m = 2: (d-k)j + C(k+2,3) on j in [C(k+1,2), C(k+2,2)],
 * and C(d+2,3) for j >= n. Regression anchor for compute_A. */
Int compute_A_closed_form_m2(Int d, Int j);

/*
 * Exact-weight 0/1 knapsack over the n points: f[l] is the maximum total of
 * coordinate value_coord over subsets whose first coordinates sum to exactly
 * l. Every level 0..A is reachable and f is nondecreasing.
 */
struct KnapsackProfile {
    Int A = 0;
    std::vector<Int> f;  // indexed 0..A
};

KnapsackProfile knapsack_profile(const Lattice& lat, Int value_coord = 1);

/* Threshold C(d+m-1, m-1) below which the lower bound does not apply. */
Int l_tilde_threshold(const Lattice& lat);

/*
 * Largest l in {0,...,A_j-1} with ceil((dj-l)/m) - f_l >= 0, or -1 when no
 * such l exists. Requires j >= l_tilde_threshold. phi is verified to be
 * nonincreasing on the range; a violation throws rather than being assumed
 * away.
 */
Int compute_l_tilde(const Lattice& lat, Int j);

enum class VanishingStatus { vanish_upper, vanish_lower, undetermined };

/* Checks every coordinate against A_j (upper) and l~_j (lower, when j is
 * above threshold). Either verdict forces beta_{p,b} = 0 for all p. */
VanishingStatus vanishing_status(const Lattice& lat, const MultiDegree& b);

struct BoundsTable {
    Int d = 0;
    Int m = 0;
    Int j_threshold = 0;

    struct Row {
        Int j = 0;
        Int A = 0;
        std::optional<Int> l_tilde;  // only for j >= j_threshold
    };
    std::vector<Row> rows;
};

BoundsTable bounds_table(const Lattice& lat, Int j_max);

}  // namespace veronese

#endif
