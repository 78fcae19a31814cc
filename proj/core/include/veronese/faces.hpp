#ifndef VERONESE_FACES_HPP
#define VERONESE_FACES_HPP

#include <cstddef>
#include <vector>

#include "veronese/lattice.hpp"

namespace veronese {

/* A face: strictly increasing 1-based point indices. {} is the empty face. */
using Face = std::vector<Int>;

/* Face counts per cardinality; counts[k] = number of faces with k vertices,
 * so counts[0] = 1 records the empty face (dimension -1). */
struct FaceVector {
    std::vector<Int> counts;

    Int at_card(Int k) const;
    Int at_dim(Int q) const { return at_card(q + 1); }
};

/*
 * An explicitly enumerated simplicial complex: faces grouped by cardinality,
 * each group sorted lexicographically. Immutable snapshot; membership is a
 * binary search. The empty face is always present.
 */
class FaceSet {
public:
    static FaceSet from_faces(std::vector<Face> faces);

    const std::vector<std::vector<Face>>& by_card() const { return by_card_; }
    const std::vector<Face>& of_card(Int k) const;

    Int max_card() const { return static_cast<Int>(by_card_.size()) - 1; }
    std::size_t total() const;
    bool contains(const Face& f) const;
    bool has_vertex(Int v) const;

    FaceVector face_vector() const;
    std::vector<Int> vertices() const;

private:
    friend FaceSet make_face_set(std::vector<std::vector<Face>> grouped);
    std::vector<std::vector<Face>> by_card_;  // by_card_[k] = faces with k vertices
};

FaceSet make_face_set(std::vector<std::vector<Face>> grouped);

/* True iff every face stays a face after inserting v (v must be a vertex). */
bool is_cone_over(const FaceSet& faces, Int v);

/* {sigma : sigma u {v} is not a face} with per-dimension cell counts N_{v,q}. */
struct AntiStar {
    std::vector<Face> faces;
    std::vector<Int> counts;  // counts[q] = N_{v,q}

    Int count_at(Int q) const;
};

AntiStar anti_star(const FaceSet& faces, Int v);

Face face_union(const Face& sigma, Int v);

}  // namespace veronese

#endif
