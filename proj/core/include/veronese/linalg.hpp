#ifndef VERONESE_LINALG_HPP
#define VERONESE_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "veronese/lattice.hpp"

namespace veronese {

using BigInt = boost::multiprecision::cpp_int;

/*
 * Sparse integer matrix (row-major adjacency). Built once, then queried
 * for exact rank. Boundary matrices feed this with +-1 entries; the
 * fraction-free elimination keeps all intermediate values integral.
 */
class SparseIntMatrix {
public:
    SparseIntMatrix(Int rows, Int cols);

    /* Entries must be added in column-major sweeps or sorted per row. */
    void add_entry(Int r, Int c, Int value);

    Int rows() const { return rows_; }
    Int cols() const { return cols_; }
    std::size_t nonzeros() const;

    /* Rank over Q via fraction-free (Bareiss) elimination with
     * Markowitz-style minimal-fill pivoting. Exact. */
    Int rank_exact() const;

    /* Rank over Z_p, division-based elimination. Requires prime < 2^31. */
    Int rank_mod(std::uint64_t prime) const;

    /* True iff (this * rhs) is the zero matrix. 64-bit arithmetic. */
    bool multiply_is_zero(const SparseIntMatrix& rhs) const;

    const std::vector<std::pair<Int, Int>>& row(Int r) const;

private:
    Int rows_, cols_;
    std::vector<std::vector<std::pair<Int, Int>>> entries_;  // per row, sorted by column
};

/* Deterministic prime >= lower derived from the seed (Miller-Rabin). */
std::uint64_t deterministic_prime_at_least(std::uint64_t lower, std::uint64_t seed);

}  // namespace veronese

#endif
