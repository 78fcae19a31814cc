#include "veronese/linalg.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace veronese {

namespace {

using BigRow = std::vector<std::pair<Int, BigInt>>;

/* (pv * lhs - w * rhs) / prev, merged over sorted columns; exact division. */
BigRow combine_rows(const BigInt& pv, const BigRow& lhs, const BigInt& w,
                    const BigRow& rhs, const BigInt& prev) {
    BigRow out;
    out.reserve(lhs.size() + rhs.size());
    std::size_t i = 0, k = 0;
    while (i < lhs.size() || k < rhs.size()) {
        Int col;
        BigInt val;
        if (k == rhs.size() || (i < lhs.size() && lhs[i].first < rhs[k].first)) {
            col = lhs[i].first;
            val = pv * lhs[i].second;
            ++i;
        } else if (i == lhs.size() || rhs[k].first < lhs[i].first) {
            col = rhs[k].first;
            val = -w * rhs[k].second;
            ++k;
        } else {
            col = lhs[i].first;
            val = pv * lhs[i].second - w * rhs[k].second;
            ++i;
            ++k;
        }
        if (val == 0) continue;
        BigInt q, r;
        boost::multiprecision::divide_qr(val, prev, q, r);
        if (r != 0) throw std::logic_error("linalg: non-exact division in Bareiss step");
        out.emplace_back(col, std::move(q));
    }
    return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime_u64(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (x % p == 0) return x == p;
    }
    std::uint64_t d = x - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                            23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t v = powmod(a, d, x);
        if (v == 1 || v == x - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            v = mulmod(v, v, x);
            if (v == x - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

SparseIntMatrix::SparseIntMatrix(Int rows, Int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("linalg: negative dimension");
    entries_.resize(static_cast<std::size_t>(rows));
}

void SparseIntMatrix::add_entry(Int r, Int c, Int value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::invalid_argument("linalg: entry out of range");
    if (value == 0) return;
    auto& row = entries_[static_cast<std::size_t>(r)];
    if (!row.empty() && row.back().first >= c)
        throw std::invalid_argument("linalg: entries must arrive with increasing columns");
    row.emplace_back(c, value);
}

std::size_t SparseIntMatrix::nonzeros() const {
    std::size_t total = 0;
    for (const auto& row : entries_) total += row.size();
    return total;
}

const std::vector<std::pair<Int, Int>>& SparseIntMatrix::row(Int r) const {
    return entries_.at(static_cast<std::size_t>(r));
}

Int SparseIntMatrix::rank_exact() const {
    std::vector<BigRow> rows;
    rows.reserve(entries_.size());
    for (const auto& src : entries_) {
        if (src.empty()) continue;
        BigRow row;
        row.reserve(src.size());
        for (auto [c, v] : src) row.emplace_back(c, BigInt(v));
        rows.push_back(std::move(row));
    }

    std::vector<char> alive(rows.size(), 1);
    std::vector<Int> col_count(static_cast<std::size_t>(cols_), 0);
    BigInt prev = 1;
    Int rank = 0;

    for (;;) {
        std::fill(col_count.begin(), col_count.end(), 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (alive[r])
                for (const auto& [c, v] : rows[r]) ++col_count[static_cast<std::size_t>(c)];

        // Markowitz: minimize (row_nnz - 1) * (col_nnz - 1); prefer small pivot values.
        std::size_t best_row = rows.size();
        std::size_t best_pos = 0;
        Int best_cost = std::numeric_limits<Int>::max();
        BigInt best_abs = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r]) continue;
            const Int rn = static_cast<Int>(rows[r].size()) - 1;
            for (std::size_t pos = 0; pos < rows[r].size(); ++pos) {
                const Int cost = rn * (col_count[static_cast<std::size_t>(rows[r][pos].first)] - 1);
                if (cost > best_cost) continue;
                BigInt mag = abs(rows[r][pos].second);
                if (cost < best_cost || mag < best_abs) {
                    best_cost = cost;
                    best_abs = std::move(mag);
                    best_row = r;
                    best_pos = pos;
                }
            }
        }
        if (best_row == rows.size()) break;

        const Int pc = rows[best_row][best_pos].first;
        const BigInt pv = rows[best_row][best_pos].second;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r] || r == best_row) continue;
            auto it = std::lower_bound(
                rows[r].begin(), rows[r].end(), pc,
                [](const std::pair<Int, BigInt>& e, Int c) { return e.first < c; });
            if (it != rows[r].end() && it->first == pc) {
                rows[r] = combine_rows(pv, rows[r], it->second, rows[best_row], prev);
            } else if (!(prev == 1 && pv == 1)) {
                // Bareiss scales every active entry, pivot column present or not.
                for (auto& [c, v] : rows[r]) {
                    BigInt q, rem;
                    boost::multiprecision::divide_qr(BigInt(v * pv), prev, q, rem);
                    if (rem != 0)
                        throw std::logic_error("linalg: non-exact division in Bareiss scaling");
                    v = std::move(q);
                }
            }
            if (rows[r].empty()) alive[r] = 0;
        }
        alive[best_row] = 0;
        prev = pv;
        ++rank;
    }
    return rank;
}

Int SparseIntMatrix::rank_mod(std::uint64_t prime) const {
    if (prime < 3 || prime >= (1ull << 31) || !is_prime_u64(prime))
        throw std::invalid_argument("linalg: modulus must be an odd prime below 2^31");

    using ModRow = std::vector<std::pair<Int, std::uint64_t>>;
    std::vector<ModRow> rows;
    rows.reserve(entries_.size());
    for (const auto& src : entries_) {
        if (src.empty()) continue;
        ModRow row;
        row.reserve(src.size());
        for (auto [c, v] : src) {
            std::int64_t red = v % static_cast<std::int64_t>(prime);
            if (red < 0) red += static_cast<std::int64_t>(prime);
            if (red != 0) row.emplace_back(c, static_cast<std::uint64_t>(red));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }

    std::vector<char> alive(rows.size(), 1);
    Int rank = 0;
    for (;;) {
        std::size_t best_row = rows.size();
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (alive[r] && rows[r].size() < best_size) {
                best_size = rows[r].size();
                best_row = r;
            }
        if (best_row == rows.size()) break;

        const Int pc = rows[best_row].front().first;
        const std::uint64_t pv = rows[best_row].front().second;
        const std::uint64_t inv = powmod(pv, prime - 2, prime);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!alive[r] || r == best_row) continue;
            auto it = std::lower_bound(
                rows[r].begin(), rows[r].end(), pc,
                [](const std::pair<Int, std::uint64_t>& e, Int c) { return e.first < c; });
            if (it == rows[r].end() || it->first != pc) continue;
            const std::uint64_t factor = mulmod(it->second, inv, prime);
            ModRow merged;
            merged.reserve(rows[r].size() + rows[best_row].size());
            std::size_t i = 0, k = 0;
            const ModRow& a = rows[r];
            const ModRow& b = rows[best_row];
            while (i < a.size() || k < b.size()) {
                Int col;
                std::uint64_t val;
                if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
                    col = a[i].first;
                    val = a[i].second;
                    ++i;
                } else if (i == a.size() || b[k].first < a[i].first) {
                    col = b[k].first;
                    val = prime - mulmod(factor, b[k].second, prime);
                    ++k;
                } else {
                    col = a[i].first;
                    val = (a[i].second + prime - mulmod(factor, b[k].second, prime)) % prime;
                    ++i;
                    ++k;
                }
                if (val % prime != 0) merged.emplace_back(col, val % prime);
            }
            rows[r] = std::move(merged);
            if (rows[r].empty()) alive[r] = 0;
        }
        alive[best_row] = 0;
        ++rank;
    }
    return rank;
}

bool SparseIntMatrix::multiply_is_zero(const SparseIntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("linalg: incompatible shapes in product");
    for (Int i = 0; i < rows_; ++i) {
        std::map<Int, Int> acc;
        for (auto [j, a] : entries_[static_cast<std::size_t>(i)])
            for (auto [k, b] : rhs.entries_[static_cast<std::size_t>(j)])
                acc[k] = checked_add(acc[k], checked_mul(a, b));
        for (auto& [k, v] : acc)
            if (v != 0) return false;
    }
    return true;
}

std::uint64_t deterministic_prime_at_least(std::uint64_t lower, std::uint64_t seed) {
    std::uint64_t state = seed;
    std::uint64_t x = lower + splitmix64(state) % lower;
    x |= 1;
    while (!is_prime_u64(x)) x += 2;
    return x;
}

}  // namespace veronese
