#include "veronese/homology.hpp"

#include <algorithm>

namespace veronese {

ChainComplexData build_chain_complex(const FaceSet& faces) {
    if (faces.of_card(0).size() != 1)
        throw std::invalid_argument("homology: complex must contain the empty face");

    ChainComplexData cc;
    cc.faces = faces.face_vector();
    const Int top_card = faces.max_card();
    cc.boundary.reserve(static_cast<std::size_t>(std::max<Int>(top_card, 0)));

    for (Int q = 0; q < top_card; ++q) {
        const auto& cols = faces.of_card(q + 1);
        const auto& rows = faces.of_card(q);
        SparseIntMatrix mat(static_cast<Int>(rows.size()), static_cast<Int>(cols.size()));
        Face facet;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Face& f = cols[c];
            // entries per column arrive with increasing row index after sorting
            std::vector<std::pair<Int, Int>> col_entries;
            for (std::size_t k = 0; k < f.size(); ++k) {
                facet.assign(f.begin(), f.end());
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(k));
                const auto it = std::lower_bound(rows.begin(), rows.end(), facet);
                if (it == rows.end() || *it != facet)
                    throw std::invalid_argument("homology: faces are not downward closed");
                col_entries.emplace_back(static_cast<Int>(it - rows.begin()),
                                         (k % 2 == 0) ? 1 : -1);
            }
            std::sort(col_entries.begin(), col_entries.end());
            for (auto [r, s] : col_entries) mat.add_entry(r, static_cast<Int>(c), s);
        }
        cc.boundary.push_back(std::move(mat));
    }

    for (std::size_t q = 1; q < cc.boundary.size(); ++q)
        if (!cc.boundary[q - 1].multiply_is_zero(cc.boundary[q]))
            throw std::logic_error("homology: boundary composition is nonzero");

    return cc;
}

Int boundary_rank(const ChainComplexData& cc, Int q) {
    if (q < 0 || q > cc.top_dim()) return 0;
    return cc.boundary[static_cast<std::size_t>(q)].rank_exact();
}

Int reduced_betti(const ChainComplexData& cc, Int q) {
    if (q < -1) return 0;
    const Int nq = (q == -1) ? cc.faces.at_card(0) : cc.faces_in_dim(q);
    if (nq == 0) return 0;
    return nq - boundary_rank(cc, q) - boundary_rank(cc, q + 1);
}

std::vector<Int> reduced_betti_profile(const ChainComplexData& cc) {
    const Int top = cc.top_dim();
    std::vector<Int> rank(static_cast<std::size_t>(top) + 2, 0);
    for (Int q = 0; q <= top; ++q)
        rank[static_cast<std::size_t>(q)] = boundary_rank(cc, q);

    std::vector<Int> profile;
    profile.reserve(static_cast<std::size_t>(top) + 2);
    for (Int q = -1; q <= top; ++q) {
        const Int nq = (q == -1) ? cc.faces.at_card(0) : cc.faces_in_dim(q);
        const Int r_out = (q >= 0) ? rank[static_cast<std::size_t>(q)] : 0;
        const Int r_in = (q + 1 <= top) ? rank[static_cast<std::size_t>(q + 1)] : 0;
        profile.push_back(nq == 0 ? 0 : nq - r_out - r_in);
    }
    return profile;
}

std::vector<Int> boundary_ranks_mod(const ChainComplexData& cc, std::uint64_t prime) {
    std::vector<Int> out;
    out.reserve(cc.boundary.size());
    for (const auto& mat : cc.boundary) out.push_back(mat.rank_mod(prime));
    return out;
}

BettiRecord betti_hochster(const Lattice& lat, const MultiDegree& b, Int p,
                           const EnumLimits& limits) {
    if (p < 0) throw std::invalid_argument("homology: homological index must be >= 0");
    const FaceSet faces = enumerate_faces(lat, b, limits);
    const ChainComplexData cc = build_chain_complex(faces);
    return BettiRecord{p, b, reduced_betti(cc, p - 1), BettiMethod::oracle};
}

std::vector<Int> betti_hochster_all(const Lattice& lat, const MultiDegree& b,
                                    const EnumLimits& limits) {
    const Int j = lat.slice_index(b);
    const FaceSet faces = enumerate_faces(lat, b, limits);
    const ChainComplexData cc = build_chain_complex(faces);
    const std::vector<Int> profile = reduced_betti_profile(cc);

    std::vector<Int> betti(static_cast<std::size_t>(j) + 1, 0);
    for (Int p = 0; p <= j; ++p) {
        const std::size_t idx = static_cast<std::size_t>(p);  // profile[p] = dim H~_{p-1}
        if (idx < profile.size()) betti[static_cast<std::size_t>(p)] = profile[idx];
    }
    return betti;
}

}  // namespace veronese
