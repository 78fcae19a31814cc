#ifndef VERONESE_MORSE_HPP
#define VERONESE_MORSE_HPP

#include <utility>
#include <vector>

#include "veronese/faces.hpp"

namespace veronese {

/* A discrete vector field: pairs (alpha, beta) with alpha a facet of beta;
 * each nonempty face appears in at most one pair. The empty face is never
 * paired. */
struct VectorField {
    std::vector<std::pair<Face, Face>> pairs;
};

struct MorseReport {
    std::vector<Face> critical;  // nonempty faces not covered by any pair
    std::vector<Int> counts;     // counts[q] = critical cells of dimension q
    bool acyclic = false;

    Int count_at(Int q) const;
};

/* The pairing {sigma < sigma u {v}} over nonempty sigma not containing v.
 * Critical cells are {v} and the anti-star of v. */
VectorField vertex_matching(const FaceSet& faces, Int v);

/* True iff the field has no non-trivial closed V-path. Cycle detection on
 * the pair graph: alpha_i -> beta_i, then beta_i -> alpha_k over facets
 * alpha_k != alpha_i. */
bool check_acyclic(const VectorField& field, const FaceSet& faces);

/* N_q = min over vertices v of the anti-star count N_{v,q}; the witness is
 * the first vertex index attaining the minimum. N_q >= beta_{q+1,b}. */
struct MorseBound {
    Int value = 0;
    Int witness_vertex = 0;
};

MorseBound morse_bound(const FaceSet& faces, Int q);

/* vertex_matching(v) plus extra pairs; rejects pairing conflicts, checks
 * acyclicity, and reports the critical cells. */
MorseReport augmented_matching(const FaceSet& faces, Int v,
                               const std::vector<std::pair<Face, Face>>& extra_pairs);

}  // namespace veronese

#endif
