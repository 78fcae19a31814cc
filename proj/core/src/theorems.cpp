#include "veronese/theorems.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace veronese {

namespace {

void require(bool cond, const char* message) {
    if (!cond) throw std::invalid_argument(message);
}

/* smallest r >= 1 with p+1 <= C(r+m-1, m); then C(r+m-2, m) < p+1 holds too */
Int block_parameter(Int p, Int m) {
    Int r = 1;
    while (binomial(r + m - 1, m) < p + 1) ++r;
    return r;
}

void combinations_rec(Int from, Int hi, Int need, Face& cur,
                      const std::function<void(const Face&)>& emit) {
    if (need == 0) {
        emit(cur);
        return;
    }
    for (Int i = from; i + need - 1 <= hi; ++i) {
        cur.push_back(i);
        combinations_rec(i + 1, hi, need - 1, cur, emit);
        cur.pop_back();
    }
}

MultiDegree rotate_coordinate_front(const MultiDegree& b, std::size_t s) {
    std::vector<Int> coords;
    coords.reserve(b.coords.size());
    coords.push_back(b.coords[s]);
    for (std::size_t t = 0; t < b.coords.size(); ++t)
        if (t != s) coords.push_back(b.coords[t]);
    return MultiDegree{std::move(coords)};
}

}  // namespace

DWitness compute_D(const Lattice& lat, Int p, const MultiDegree& b) {
    const Int m = lat.m();
    const Int cap = binomial(lat.d() + m - 1, m);
    require(p >= m && p <= cap - 1, "theorems: p outside [m, C(d+m-1,m)-1]");
    require(lat.semigroup_member(b), "theorems: degree is not in the semigroup");
    require(b.total() == lat.d() * (p + 1), "theorems: |b| must equal d(p+1)");
    require(b[0] == lat.prefix_coord_sum(0, p + 1) - 1,
            "theorems: b_0 must equal A_{p+1} - 1");

    DWitness w;
    w.p = p;
    w.b = b;
    w.r = block_parameter(p, m);
    const Int base = binomial(w.r + m - 2, m);
    w.block_lo = base + 1;
    w.block_hi = binomial(w.r + m - 1, m);
    const Int need = p + 1 - base;

    std::vector<Int> lo_target(static_cast<std::size_t>(m)), hi_target(static_cast<std::size_t>(m));
    for (Int t = 1; t <= m - 1; ++t) {
        const Int shifted = b[static_cast<std::size_t>(t)] - lat.prefix_coord_sum(t, base);
        lo_target[static_cast<std::size_t>(t)] = shifted - 1;
        hi_target[static_cast<std::size_t>(t)] = shifted;
    }

    Face cur;
    combinations_rec(w.block_lo, w.block_hi, need, cur, [&](const Face& pick) {
        for (Int t = 1; t <= m - 1; ++t) {
            Int sum = 0;
            for (Int i : pick) sum += lat.point(i).coords[static_cast<std::size_t>(t)];
            if (sum < lo_target[static_cast<std::size_t>(t)] ||
                sum > hi_target[static_cast<std::size_t>(t)])
                return;
        }
        w.members.push_back(pick);
    });
    w.cardinality = static_cast<Int>(w.members.size());
    return w;
}

BettiRecord predict_betti_wedge(const Lattice& lat, Int p, const MultiDegree& b) {
    return BettiRecord{p, b, compute_D(lat, p, b).cardinality, BettiMethod::theorem};
}

Interval nonvanishing_range_m2(const Lattice& lat, Int p) {
    require(lat.m() == 2, "theorems: range formula is specific to m = 2");
    const Int cap = binomial(lat.d() + 1, 2);
    require(p >= 2 && p <= cap - 1, "theorems: p outside [2, C(d+1,2)-1]");
    return Interval{lat.prefix_coord_sum(2, p + 1), 1 + lat.prefix_coord_sum(1, p + 1)};
}

BettiRecord extremal_case_m2(const Lattice& lat, const MultiDegree& b) {
    require(lat.m() == 2, "theorems: extremal case is specific to m = 2");
    const Int p = binomial(lat.d() + 1, 2);
    require(lat.semigroup_member(b), "theorems: degree is not in the semigroup");
    require(b.total() == lat.d() * (p + 1), "theorems: |b| must equal d(p+1)");
    require(b[0] == lat.prefix_coord_sum(0, p + 1) - 1,
            "theorems: b_0 must equal A_{p+1} - 1");
    const Int lo = lat.prefix_coord_sum(1, p) + 1;
    const Int hi = lat.prefix_coord_sum(1, p + 1);
    const Int value = (b[1] >= lo && b[1] <= hi) ? 1 : 0;
    return BettiRecord{p, b, value, BettiMethod::theorem};
}

MorseReport extremal_morse_certificate(const Lattice& lat, const MultiDegree& b,
                                       const FaceSet& faces) {
    extremal_case_m2(lat, b);  // hypothesis check
    const AntiStar anti = anti_star(faces, 1);
    std::vector<std::pair<Face, Face>> extra;
    if (anti.faces.size() >= 2) extra.emplace_back(anti.faces[0], anti.faces[1]);
    return augmented_matching(faces, 1, extra);
}

SharpnessWitness sharpness_witness(const Lattice& lat, Int p) {
    const Int m = lat.m();
    const Int cap = binomial(lat.d() + m - 1, m);
    require(p >= 1 && p <= cap + m - 2, "theorems: p outside [1, C(d+m-1,m)+m-2]");

    SharpnessWitness w;
    w.p = p;
    std::vector<Int> coords(static_cast<std::size_t>(m) + 1);
    coords[0] = lat.prefix_coord_sum(0, p + 1) - 1;
    for (Int s = 1; s <= m - 1; ++s)
        coords[static_cast<std::size_t>(s)] = lat.prefix_coord_sum(s, p + 1);
    coords[static_cast<std::size_t>(m)] = lat.prefix_coord_sum(m, p + 1) + 1;
    w.b = MultiDegree{std::move(coords)};

    if (p <= m - 1) {
        w.regime = SharpnessRegime::low;
        w.predicted_betti = p;
    } else if (p <= cap - 1) {
        w.regime = SharpnessRegime::middle;
        w.predicted_betti = compute_D(lat, p, w.b).cardinality;
    } else {
        w.regime = SharpnessRegime::high;
        w.predicted_betti = 1;
    }
    return w;
}

MorseReport sharpness_morse_certificate(const Lattice& lat, const SharpnessWitness& witness,
                                        const FaceSet& faces) {
    std::vector<std::pair<Face, Face>> extra;
    switch (witness.regime) {
        case SharpnessRegime::low: {
            Face beta;
            for (Int i = 2; i <= witness.p + 1; ++i) beta.push_back(i);
            beta.push_back(lat.m() + 1);
            Face alpha(beta.begin() + 1, beta.end());
            extra.emplace_back(std::move(alpha), std::move(beta));
            break;
        }
        case SharpnessRegime::middle:
            break;  // vertex matching alone: critical = {1} plus the anti-star
        case SharpnessRegime::high: {
            const Int pivot = binomial(lat.d() + lat.m() - 1, lat.m()) + 1;
            const AntiStar anti = anti_star(faces, 1);
            std::vector<Face> members = anti.faces;
            std::sort(members.begin(), members.end());
            for (const Face& tau : anti.faces) {
                if (std::binary_search(tau.begin(), tau.end(), pivot)) continue;
                Face up = face_union(tau, pivot);
                if (std::binary_search(members.begin(), members.end(), up))
                    extra.emplace_back(tau, std::move(up));
            }
            break;
        }
    }
    return augmented_matching(faces, 1, extra);
}

std::optional<WedgePrediction> predict_homotopy(const Lattice& lat, const MultiDegree& b) {
    if (!lat.semigroup_member(b)) return std::nullopt;
    const Int j = lat.slice_index(b);
    const Int p = j - 1;
    if (p < 2) return std::nullopt;

    const Int m = lat.m();
    const Int cap = binomial(lat.d() + m - 1, m);
    const Int sharp_line = compute_A(lat, j) - 1;  // A_{p+1} - 1
    for (std::size_t s = 0; s < b.coords.size(); ++s) {
        if (b.coords[s] != sharp_line) continue;
        const MultiDegree rotated = rotate_coordinate_front(b, s);
        if (p >= m && p <= cap - 1)
            return WedgePrediction{p, compute_D(lat, p, rotated).cardinality};
        if (m == 2 && p == binomial(lat.d() + 1, 2))
            return WedgePrediction{p, extremal_case_m2(lat, rotated).value};
    }
    return std::nullopt;
}

std::string to_string(CellClass c) {
    switch (c) {
        case CellClass::vanish_upper: return "vanish_upper";
        case CellClass::vanish_lower: return "vanish_lower";
        case CellClass::theorem: return "theorem";
        case CellClass::oracle: return "oracle";
        case CellClass::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(VanishingStatus s) {
    switch (s) {
        case VanishingStatus::vanish_upper: return "vanish_upper";
        case VanishingStatus::vanish_lower: return "vanish_lower";
        case VanishingStatus::undetermined: return "undetermined";
    }
    return "undetermined";
}

namespace {

VanishingStatus status_with_offset(const Lattice& lat, const MultiDegree& b, Int offset) {
    if (offset == 0) return vanishing_status(lat, b);
    // testing hook: shifted upper bound, used to prove the harness can fail
    const Int j = lat.slice_index(b);
    const Int a_eff = compute_A(lat, j) + offset;
    for (Int c : b.coords)
        if (c >= a_eff) return VanishingStatus::vanish_upper;
    if (j >= l_tilde_threshold(lat)) {
        const Int lt = compute_l_tilde(lat, j);
        if (lt >= 0)
            for (Int c : b.coords)
                if (c <= lt) return VanishingStatus::vanish_lower;
    }
    return VanishingStatus::undetermined;
}

}  // namespace

std::vector<CellEval> evaluate_degree(const Lattice& lat, const MultiDegree& b,
                                      const std::vector<Int>& p_list,
                                      const CellOptions& options) {
    const VanishingStatus status = status_with_offset(lat, b, options.upper_bound_offset);
    std::optional<WedgePrediction> pred;
    if (status == VanishingStatus::undetermined) pred = predict_homotopy(lat, b);

    const bool have_prediction = status != VanishingStatus::undetermined || pred.has_value();
    const bool need_oracle = (options.check || !have_prediction) && options.oracle_fallback;
    std::optional<std::vector<Int>> oracle;
    bool oracle_infeasible = false;
    if (need_oracle) {
        try {
            oracle = betti_hochster_all(lat, b, options.limits);
        } catch (const CapExceeded&) {
            oracle_infeasible = true;
        }
    }
    const auto oracle_at = [&](Int p) -> Int {
        if (p < 0 || p >= static_cast<Int>(oracle->size())) return 0;
        return (*oracle)[static_cast<std::size_t>(p)];
    };

    std::vector<CellEval> out;
    out.reserve(p_list.size());
    for (Int p : p_list) {
        CellEval e;
        if (status != VanishingStatus::undetermined) {
            e.value = 0;
            e.classification = status == VanishingStatus::vanish_upper
                                   ? CellClass::vanish_upper
                                   : CellClass::vanish_lower;
            e.provenance = "bound";
            if (oracle) {
                e.oracle_value = oracle_at(p);
                e.mismatch = *e.oracle_value != 0;
            } else if (options.check) {
                e.infeasible = oracle_infeasible;
            }
        } else if (pred) {
            e.value = (p == pred->p) ? pred->copies : 0;
            e.classification = CellClass::theorem;
            e.provenance = "theorem";
            if (oracle) {
                e.oracle_value = oracle_at(p);
                e.mismatch = *e.oracle_value != *e.value;
                e.provenance = "theorem+oracle";
            } else if (options.check) {
                e.infeasible = oracle_infeasible;
            }
        } else if (oracle) {
            e.value = oracle_at(p);
            e.classification = CellClass::oracle;
            e.provenance = "oracle";
        } else {
            e.classification = CellClass::unknown;
            e.provenance = "none";
            e.infeasible = oracle_infeasible;
        }
        out.push_back(std::move(e));
    }
    return out;
}

SliceReport verify_slice(const Lattice& lat, Int j, const std::vector<Int>& p_list,
                         const CellOptions& options) {
    if (j < 1) throw std::invalid_argument("theorems: slice index must be >= 1");
    CellOptions checked = options;
    checked.check = true;

    const std::vector<MultiDegree> degrees = degrees_of_total(lat.m() + 1, lat.d() * j);
    std::vector<std::vector<CellEval>> evals(degrees.size());
    detail::parallel_for_index(degrees.size(), options.threads, [&](std::size_t i) {
        evals[i] = evaluate_degree(lat, degrees[i], p_list, checked);
    });

    SliceReport report;
    report.j = j;
    report.cells.reserve(degrees.size() * p_list.size());
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        for (std::size_t k = 0; k < p_list.size(); ++k) {
            SliceCellReport cell;
            cell.b = degrees[i];
            cell.p = p_list[k];
            cell.eval = evals[i][k];
            if (cell.eval.mismatch) {
                cell.verdict = CellVerdict::mismatch;
                ++report.mismatches;
            } else if (cell.eval.classification == CellClass::oracle) {
                cell.verdict = CellVerdict::computed;
                ++report.computed;
            } else if (cell.eval.oracle_value.has_value()) {
                cell.verdict = CellVerdict::confirmed;
                ++report.confirmed;
            } else {
                cell.verdict = CellVerdict::unknown;
                ++report.unknown;
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

}  // namespace veronese
