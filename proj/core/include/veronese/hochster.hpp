#ifndef VERONESE_HOCHSTER_HPP
#define VERONESE_HOCHSTER_HPP

#include "veronese/faces.hpp"
#include "veronese/lattice.hpp"

namespace veronese {

/* Limits for explicit face enumeration; beyond them CapExceeded is thrown.
 * The explicit oracle is deliberately desk-scale. */
struct EnumLimits {
    Int max_points = 64;                       // reject n > 64
    Int max_slice = 12;                        // reject j = |b|/d > 12
    std::size_t max_faces = std::size_t{1} << 22;
};

/* sigma is a face of Delta_b iff b - sum_{i in sigma} a^i >= 0 coordinatewise. */
bool is_face(const Lattice& lat, const MultiDegree& b, const Face& sigma);

/*
 * All faces of Delta_b including the empty face, grouped by cardinality.
 * Breadth-first extension by indices above the current maximum; downward
 * closure of Delta_b makes the pruning complete. Max cardinality <= |b|/d.
 */
FaceSet enumerate_faces(const Lattice& lat, const MultiDegree& b,
                        const EnumLimits& limits = {});

}  // namespace veronese

#endif
