#include "veronese/lattice.hpp"

#include <numeric>
#include <sstream>

namespace veronese {

namespace {

constexpr Int kMaxPointCount = Int{1} << 20;  // desk-scale guard on n = C(d+m, m)

void enumerate_rec(std::vector<Int>& cur, Int remaining, std::size_t pos,
                   std::vector<Exponent>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.push_back(Exponent{cur});
        return;
    }
    for (Int c = remaining; c >= 0; --c) {
        cur[pos] = c;
        enumerate_rec(cur, remaining - c, pos + 1, out);
    }
}

}  // namespace

Int checked_add(Int a, Int b) {
    Int r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (Int i = 1; i <= k; ++i) {
        // result * (n - k + i) is divisible by i at every step
        result = checked_mul(result, n - k + i) / i;
    }
    return result;
}

Int ceil_div(Int a, Int b) {
    return (a + b - 1) / b;
}

Int Exponent::total() const {
    return std::accumulate(coords.begin(), coords.end(), Int{0});
}

Int MultiDegree::total() const {
    return std::accumulate(coords.begin(), coords.end(), Int{0});
}

std::string to_string(const MultiDegree& b) {
    std::ostringstream os;
    os << '(';
    for (std::size_t t = 0; t < b.coords.size(); ++t) {
        if (t > 0) os << ',';
        os << b.coords[t];
    }
    os << ')';
    return os.str();
}

Lattice::Lattice(Parameters params) : params_(params) {
    if (params.m < 2) throw std::invalid_argument("lattice: require m >= 2");
    if (params.d < 2) throw std::invalid_argument("lattice: require d >= 2");
    const Int expected = binomial(params.d + params.m, params.m);
    if (expected > kMaxPointCount)
        throw std::invalid_argument("lattice: C(d+m,m) exceeds the desk-scale guard");

    std::vector<Int> cur(static_cast<std::size_t>(params.m) + 1, 0);
    points_.reserve(static_cast<std::size_t>(expected));
    enumerate_rec(cur, params.d, 0, points_);
    if (static_cast<Int>(points_.size()) != expected)
        throw std::logic_error("lattice: enumeration count mismatch");

    prefix_.assign(static_cast<std::size_t>(params.m) + 1,
                   std::vector<Int>(points_.size() + 1, 0));
    for (std::size_t t = 0; t <= static_cast<std::size_t>(params.m); ++t)
        for (std::size_t i = 0; i < points_.size(); ++i)
            prefix_[t][i + 1] = checked_add(prefix_[t][i], points_[i].coords[t]);
}

const Exponent& Lattice::point(Int i) const {
    if (i < 1 || i > n())
        throw std::invalid_argument("lattice: point index out of range");
    return points_[static_cast<std::size_t>(i - 1)];
}

Int Lattice::prefix_coord_sum(Int t, Int j) const {
    if (t < 0 || t > m())
        throw std::invalid_argument("lattice: coordinate out of range");
    if (j < 0) throw std::invalid_argument("lattice: prefix length must be >= 0");
    return prefix_[static_cast<std::size_t>(t)][static_cast<std::size_t>(std::min(j, n()))];
}

bool Lattice::semigroup_member(const MultiDegree& b) const {
    if (b.coords.size() != static_cast<std::size_t>(m()) + 1) return false;
    Int sum = 0;
    for (Int c : b.coords) {
        if (c < 0) return false;
        sum = checked_add(sum, c);
    }
    return sum % d() == 0;
}

Int Lattice::slice_index(const MultiDegree& b) const {
    if (!semigroup_member(b))
        throw std::invalid_argument("lattice: degree is not in the semigroup");
    return b.total() / d();
}

std::vector<MultiDegree> degrees_of_total(Int k, Int total) {
    if (k < 1 || total < 0) throw std::invalid_argument("degrees_of_total: bad arguments");
    std::vector<MultiDegree> out;
    std::vector<Int> cur(static_cast<std::size_t>(k), 0);
    std::vector<Exponent> tmp;
    enumerate_rec(cur, total, 0, tmp);
    out.reserve(tmp.size());
    for (auto& e : tmp) out.push_back(MultiDegree{std::move(e.coords)});
    return out;
}

}  // namespace veronese
