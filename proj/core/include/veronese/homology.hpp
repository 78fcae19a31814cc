#ifndef VERONESE_HOMOLOGY_HPP
#define VERONESE_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "veronese/faces.hpp"
#include "veronese/hochster.hpp"
#include "veronese/linalg.hpp"

namespace veronese {

/*
 * Simplicial chain complex over Q with the augmentation map to the empty
 * face at q = 0. boundary[q] sends q-faces to (q-1)-faces; column order
 * follows the sorted face lists, signs are (-1)^k for dropping the k-th
 * smallest vertex. The composition of consecutive boundaries is checked
 * to be zero at construction time.
 */
struct ChainComplexData {
    FaceVector faces;
    std::vector<SparseIntMatrix> boundary;  // boundary[q], q = 0..top_dim

    Int top_dim() const { return static_cast<Int>(boundary.size()) - 1; }
    Int faces_in_dim(Int q) const { return faces.at_dim(q); }
};

ChainComplexData build_chain_complex(const FaceSet& faces);

/* rank of boundary[q] over Q; 0 outside the valid range. */
Int boundary_rank(const ChainComplexData& cc, Int q);

/* dim H~_q = #q-faces - rank d_q - rank d_{q+1}; accepts q >= -1. */
Int reduced_betti(const ChainComplexData& cc, Int q);

/* profile[q + 1] = dim H~_q for q = -1..top_dim; each rank computed once. */
std::vector<Int> reduced_betti_profile(const ChainComplexData& cc);

/* Mod-p ranks of all boundary matrices; diagnostic cross-check against
 * the exact ranks (they agree with probability 1 - eps; a disagreement
 * is reported, never silently accepted). */
std::vector<Int> boundary_ranks_mod(const ChainComplexData& cc, std::uint64_t prime);

enum class BettiMethod { oracle, morse_bound, theorem };

struct BettiRecord {
    Int p = 0;
    MultiDegree b;
    Int value = 0;
    BettiMethod method = BettiMethod::oracle;
};

/* Hochster's formula: beta_{p,b} = dim H~_{p-1}(Delta_b). */
BettiRecord betti_hochster(const Lattice& lat, const MultiDegree& b, Int p,
                           const EnumLimits& limits = {});

/* All beta_{p,b} for p = 0..|b|/d from a single enumeration. */
std::vector<Int> betti_hochster_all(const Lattice& lat, const MultiDegree& b,
                                    const EnumLimits& limits = {});

}  // namespace veronese

#endif
