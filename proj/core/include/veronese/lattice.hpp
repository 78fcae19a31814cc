#ifndef VERONESE_LATTICE_HPP
#define VERONESE_LATTICE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace veronese {

using Int = std::int64_t;

/* Thrown when an instance is too large for explicit enumeration. */
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/* Exact binomial coefficient with overflow checks. Returns 0 for k < 0 or k > n. */
Int binomial(Int n, Int k);

/* ceil(a / b) for a >= 0, b > 0. */
Int ceil_div(Int a, Int b);

/* A lattice point a in N^{m+1} with |a| = d; a vertex label of Delta_b. */
struct Exponent {
    std::vector<Int> coords;

    Int total() const;
    bool operator==(const Exponent&) const = default;
};

/* A target degree b in N^{m+1}. */
struct MultiDegree {
    std::vector<Int> coords;

    MultiDegree() = default;
    explicit MultiDegree(std::vector<Int> c) : coords(std::move(c)) {}

    Int total() const;
    Int operator[](std::size_t t) const { return coords[t]; }
    std::size_t size() const { return coords.size(); }
    auto operator<=>(const MultiDegree&) const = default;
};

std::string to_string(const MultiDegree& b);

struct Parameters {
    Int m = 2;  // projective-space dimension, >= 2
    Int d = 2;  // Veronese degree, >= 2
};

/*
 * The generating set A = {a in N^{m+1} : |a| = d}, enumerated once in
 * decreasing lexicographic order, together with per-coordinate prefix
 * sums. Point indices are 1-based in the public interface, matching
 * the index set {1,...,n}. Immutable after construction.
 */
class Lattice {
public:
    explicit Lattice(Parameters params);

    Int m() const { return params_.m; }
    Int d() const { return params_.d; }
    Int n() const { return static_cast<Int>(points_.size()); }

    /* i-th point in decreasing lex order, 1-based; point(1) = (d,0,...,0). */
    const Exponent& point(Int i) const;
    const std::vector<Exponent>& points() const { return points_; }

    /* sum_{i=1}^{min(j,n)} a^i_t */
    Int prefix_coord_sum(Int t, Int j) const;

    /* b lies in the semigroup NA iff b >= 0 coordinatewise and d | |b|. */
    bool semigroup_member(const MultiDegree& b) const;

    /* j = |b|/d for b in NA. */
    Int slice_index(const MultiDegree& b) const;

private:
    Parameters params_;
    std::vector<Exponent> points_;
    std::vector<std::vector<Int>> prefix_;  // prefix_[t][j], j = 0..n
};

/* All b in N^k with |b| = total, in decreasing lexicographic order. */
std::vector<MultiDegree> degrees_of_total(Int k, Int total);

}  // namespace veronese

#endif
