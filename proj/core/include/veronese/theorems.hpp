#ifndef VERONESE_THEOREMS_HPP
#define VERONESE_THEOREMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "veronese/bounds.hpp"
#include "veronese/homology.hpp"
#include "veronese/morse.hpp"

namespace veronese {

/*
 * The set D on the sharp line b_0 = A_{p+1} - 1: subsets I of the block
 * {C(r+m-2,m)+1, ..., C(r+m-1,m)} of size p+1-C(r+m-2,m) whose coordinate
 * sums land in the admissible window for every coordinate 1..m-1. Delta_b
 * is then a wedge of #D spheres S^{p-1}.
 */
struct DWitness {
    Int p = 0;
    MultiDegree b;
    Int r = 0;
    Int block_lo = 0;
    Int block_hi = 0;
    std::vector<Face> members;
    Int cardinality = 0;
};

DWitness compute_D(const Lattice& lat, Int p, const MultiDegree& b);

/* beta_{p,b} = #D under the wedge hypotheses; zero in every other
 * homological degree >= 1. */
BettiRecord predict_betti_wedge(const Lattice& lat, Int p, const MultiDegree& b);

struct Interval {
    Int lo = 0;
    Int hi = 0;

    bool contains(Int x) const { return lo <= x && x <= hi; }
};

/* m = 2: beta_{p,b} != 0 iff b_1 lies in this closed interval (on the
 * sharp line with |b| = d(p+1)). */
Interval nonvanishing_range_m2(const Lattice& lat, Int p);

/* m = 2, p = C(d+1,2): beta_{p,b} is 1 on the stated b_1 window and 0 off it. */
BettiRecord extremal_case_m2(const Lattice& lat, const MultiDegree& b);

/* Gradient-field certificate for the extremal case: the vertex matching at 1
 * plus the one extra pair from the anti-star, when it is nonempty. */
MorseReport extremal_morse_certificate(const Lattice& lat, const MultiDegree& b,
                                       const FaceSet& faces);

enum class SharpnessRegime { low, middle, high };

/* Witness degree with b_0 = A_{p+1} - 1 and a nonzero predicted Betti
 * number: p copies (low), #D copies (middle) or one copy (high) of S^{p-1}. */
struct SharpnessWitness {
    Int p = 0;
    MultiDegree b;
    Int predicted_betti = 0;
    SharpnessRegime regime = SharpnessRegime::low;
};

SharpnessWitness sharpness_witness(const Lattice& lat, Int p);

/* Acyclic matching certifying the witness's homotopy type; the critical
 * cells are {1} plus predicted_betti cells of dimension p-1. */
MorseReport sharpness_morse_certificate(const Lattice& lat, const SharpnessWitness& witness,
                                        const FaceSet& faces);

/* Wedge-homotopy prediction when some coordinate of b sits on the sharp
 * line A_j - 1 and the wedge or extremal hypotheses hold: Delta_b is a
 * wedge of `copies` spheres S^{p-1} (contractible when copies = 0). */
struct WedgePrediction {
    Int p = 0;
    Int copies = 0;
};

std::optional<WedgePrediction> predict_homotopy(const Lattice& lat, const MultiDegree& b);

enum class CellClass { vanish_upper, vanish_lower, theorem, oracle, unknown };

std::string to_string(CellClass c);
std::string to_string(VanishingStatus s);

struct CellOptions {
    bool check = false;          // confirm bound/theorem predictions by oracle
    bool oracle_fallback = true; // compute undetermined cells by oracle
    EnumLimits limits;
    unsigned threads = 0;        // 0 = hardware concurrency
    Int upper_bound_offset = 0;  // testing hook: offset added to A_j in the bound test
};

struct CellEval {
    std::optional<Int> value;
    CellClass classification = CellClass::unknown;
    std::string provenance = "none";  // bound | theorem | oracle | theorem+oracle | none
    std::optional<Int> oracle_value;
    bool mismatch = false;
    bool infeasible = false;
};

/* Classify one degree for all requested p: bounds first, then the wedge
 * theorems, then the oracle. */
std::vector<CellEval> evaluate_degree(const Lattice& lat, const MultiDegree& b,
                                      const std::vector<Int>& p_list,
                                      const CellOptions& options = {});

enum class CellVerdict { confirmed, computed, mismatch, unknown };

struct SliceCellReport {
    MultiDegree b;
    Int p = 0;
    CellEval eval;
    CellVerdict verdict = CellVerdict::unknown;
};

struct SliceReport {
    Int j = 0;
    std::vector<SliceCellReport> cells;
    Int confirmed = 0;
    Int computed = 0;
    Int mismatches = 0;
    Int unknown = 0;

    bool ok() const { return mismatches == 0; }
};

/* Every degree with |b| = dj against every p in p_list, theorem predictions
 * compared with the oracle; any mismatch is a hard failure for callers. */
SliceReport verify_slice(const Lattice& lat, Int j, const std::vector<Int>& p_list,
                         const CellOptions& options = {});

}  // namespace veronese

#endif
