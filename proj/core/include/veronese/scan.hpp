#ifndef VERONESE_SCAN_HPP
#define VERONESE_SCAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "veronese/theorems.hpp"

namespace veronese {

/* One scanned cell: a degree b on the slice |b| = dj at homological index p.
 * Exactly one classification per cell. */
struct ScanRow {
    MultiDegree b;
    Int j = 0;
    Int p = 0;
    std::optional<Int> value;
    CellClass classification = CellClass::unknown;
    std::string provenance = "none";
};

struct ScanResult {
    Int j = 0;
    Int p = 0;
    std::vector<ScanRow> rows;  // decreasing lex order in b
    Int mismatches = 0;
    Int infeasible = 0;
};

ScanResult scan_slice(const Lattice& lat, Int j, Int p, const CellOptions& options = {});

/* Columns b0,...,bm,j,p,value,classification,provenance; LF endings; stable
 * row order, so identical reruns are byte-identical. */
std::string scan_to_csv(const Lattice& lat, const ScanResult& scan);

/* Same rows as an array of objects keyed by the CSV headers. */
std::string scan_to_json(const Lattice& lat, const ScanResult& scan);

/* m = 2 only: the triangular slice with per-cell status dots and the A_j /
 * l~_j bound lines, carrying machine-readable data- attributes. */
std::string scan_to_svg(const Lattice& lat, const ScanResult& scan);

std::string bounds_to_csv(const BoundsTable& table);
std::string bounds_to_text(const BoundsTable& table);

}  // namespace veronese

#endif
