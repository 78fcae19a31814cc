#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "veronese/theorems.hpp"

using namespace veronese;

namespace {

MultiDegree deg(std::vector<Int> c) { return MultiDegree{std::move(c)}; }

}  // namespace

TEST_CASE("D-set on the sharp line") {
    const Lattice lat(Parameters{2, 3});

    const DWitness w = compute_D(lat, 4, deg({8, 4, 3}));
    CHECK(w.r == 3);
    CHECK(w.block_lo == 4);
    CHECK(w.block_hi == 6);
    CHECK(w.cardinality == 2);
    CHECK(w.members == std::vector<Face>{{4, 5}, {4, 6}});

    CHECK(compute_D(lat, 4, deg({8, 0, 7})).cardinality == 0);
    CHECK(compute_D(lat, 4, deg({8, 5, 2})).cardinality == 1);
}

TEST_CASE("D-set structural invariants") {
    const Lattice lat(Parameters{2, 3});
    const Int cap = binomial(4, 2);
    for (Int p = 2; p <= cap - 1; ++p) {
        const Int b0 = lat.prefix_coord_sum(0, p + 1) - 1;
        const Int rest = 3 * (p + 1) - b0;
        for (Int b1 = 0; b1 <= rest; ++b1) {
            const DWitness w = compute_D(lat, p, deg({b0, b1, rest - b1}));
            // r is pinned by p+1 in (C(r+m-2,m), C(r+m-1,m)]
            CHECK(binomial(w.r, 2) < p + 1);
            CHECK(p + 1 <= binomial(w.r + 1, 2));
            CHECK(w.block_lo == binomial(w.r, 2) + 1);
            CHECK(w.block_hi == binomial(w.r + 1, 2));
            for (const Face& I : w.members) {
                CHECK(static_cast<Int>(I.size()) == p + 1 - binomial(w.r, 2));
                for (Int i : I) {
                    CHECK(i >= w.block_lo);
                    CHECK(i <= w.block_hi);
                }
            }
        }
    }
}

TEST_CASE("D-set hypothesis validation") {
    const Lattice lat(Parameters{2, 3});
    CHECK_THROWS_AS(compute_D(lat, 1, deg({4, 1, 1})), std::invalid_argument);   // p < m
    CHECK_THROWS_AS(compute_D(lat, 6, deg({9, 6, 6})), std::invalid_argument);   // p > cap-1
    CHECK_THROWS_AS(compute_D(lat, 4, deg({7, 5, 3})), std::invalid_argument);   // wrong b_0
    CHECK_THROWS_AS(compute_D(lat, 4, deg({8, 4, 6})), std::invalid_argument);   // wrong |b|
}

TEST_CASE("wedge prediction equals the oracle") {
    const Lattice lat(Parameters{2, 3});
    CHECK(predict_betti_wedge(lat, 4, deg({8, 4, 3})).value == 2);
    CHECK(predict_betti_wedge(lat, 4, deg({8, 1, 6})).value == 0);
    CHECK(predict_betti_wedge(lat, 4, deg({8, 2, 5})).value == 1);

    for (Int b1 = 0; b1 <= 7; ++b1) {
        const MultiDegree b = deg({8, b1, 7 - b1});
        const std::vector<Int> oracle = betti_hochster_all(lat, b);
        CHECK(predict_betti_wedge(lat, 4, b).value == oracle[4]);
        for (Int q = 1; q <= 5; ++q)
            if (q != 4) CHECK(oracle[static_cast<std::size_t>(q)] == 0);
    }
}

TEST_CASE("anti-star realizes D'") {
    const Lattice lat(Parameters{2, 3});
    const MultiDegree b = deg({8, 4, 3});
    const DWitness w = compute_D(lat, 4, b);
    const AntiStar anti = anti_star(enumerate_faces(lat, b), 1);

    // {tau \ {1} : tau in D'} with D' = {1,...,C(r,2)} u I
    std::vector<Face> expected;
    for (const Face& I : w.members) {
        Face tau;
        for (Int i = 2; i <= w.block_lo - 1; ++i) tau.push_back(i);
        tau.insert(tau.end(), I.begin(), I.end());
        expected.push_back(tau);
    }
    std::vector<Face> got = anti.faces;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
    CHECK(anti.count_at(w.p - 1) == w.cardinality);
}

TEST_CASE("nonvanishing window for m = 2") {
    const Lattice lat3(Parameters{2, 3});
    const Interval r34 = nonvanishing_range_m2(lat3, 4);
    CHECK(r34.lo == 2);
    CHECK(r34.hi == 5);

    const Lattice lat2(Parameters{2, 2});
    const Interval r22 = nonvanishing_range_m2(lat2, 2);
    CHECK(r22.lo == 1);
    CHECK(r22.hi == 2);

    // the window is exactly where #D > 0, across the whole sharp line
    for (Int b1 = 0; b1 <= 7; ++b1) {
        const bool inside = r34.contains(b1);
        CHECK(inside == (compute_D(lat3, 4, deg({8, b1, 7 - b1})).cardinality > 0));
    }

    CHECK_THROWS_AS(nonvanishing_range_m2(lat3, 1), std::invalid_argument);
    const Lattice lat32(Parameters{3, 2});
    CHECK_THROWS_AS(nonvanishing_range_m2(lat32, 2), std::invalid_argument);
}

TEST_CASE("extremal case p = C(d+1,2)") {
    const Lattice lat(Parameters{2, 2});
    CHECK(extremal_case_m2(lat, deg({3, 2, 3})).value == 1);
    CHECK(extremal_case_m2(lat, deg({3, 3, 2})).value == 1);
    CHECK(extremal_case_m2(lat, deg({3, 1, 4})).value == 0);
    CHECK(extremal_case_m2(lat, deg({3, 4, 1})).value == 0);

    for (Int b1 = 0; b1 <= 5; ++b1) {
        const MultiDegree b = deg({3, b1, 5 - b1});
        CHECK(extremal_case_m2(lat, b).value == betti_hochster(lat, b, 3).value);
    }

    CHECK_THROWS_AS(extremal_case_m2(lat, deg({4, 2, 2})), std::invalid_argument);
}

TEST_CASE("extremal Morse certificates") {
    const Lattice lat(Parameters{2, 2});

    // interior of the window: critical cells {1} and one (p-1)-cell
    const FaceSet interior = enumerate_faces(lat, deg({3, 2, 3}));
    const MorseReport cert = extremal_morse_certificate(lat, deg({3, 2, 3}), interior);
    CHECK(cert.acyclic);
    REQUIRE(cert.critical.size() == 2);
    CHECK(cert.critical[0] == Face{1});
    CHECK(cert.count_at(2) == 1);

    // boundary of the window: contractible, only {1} survives
    for (Int b1 : {Int{1}, Int{4}}) {
        const MultiDegree b = deg({3, b1, 5 - b1});
        const MorseReport c = extremal_morse_certificate(lat, b, enumerate_faces(lat, b));
        CHECK(c.acyclic);
        CHECK(c.critical == std::vector<Face>{{1}});
    }
}

TEST_CASE("sharpness witnesses") {
    const Lattice lat22(Parameters{2, 2});
    const SharpnessWitness low = sharpness_witness(lat22, 1);
    CHECK(low.regime == SharpnessRegime::low);
    CHECK(low.b == deg({2, 1, 1}));
    CHECK(low.predicted_betti == 1);

    const SharpnessWitness mid = sharpness_witness(lat22, 2);
    CHECK(mid.regime == SharpnessRegime::middle);
    CHECK(mid.b == deg({3, 1, 2}));
    CHECK(mid.predicted_betti == 1);

    const SharpnessWitness high = sharpness_witness(lat22, 3);
    CHECK(high.regime == SharpnessRegime::high);
    CHECK(high.b == deg({3, 3, 2}));
    CHECK(high.predicted_betti == 1);

    const Lattice lat23(Parameters{2, 3});
    const SharpnessWitness mid3 = sharpness_witness(lat23, 4);
    CHECK(mid3.b == deg({8, 4, 3}));
    CHECK(mid3.predicted_betti == 2);

    CHECK_THROWS_AS(sharpness_witness(lat22, 0), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_witness(lat22, 4), std::invalid_argument);

    // every witness sits on the sharp line and the oracle confirms it
    for (Int p = 1; p <= 3; ++p) {
        const SharpnessWitness w = sharpness_witness(lat22, p);
        CHECK(w.b[0] == compute_A(lat22, p + 1) - 1);
        CHECK(w.b.total() == lat22.d() * (p + 1));
        CHECK(w.predicted_betti >= 1);
        CHECK(betti_hochster(lat22, w.b, p).value == w.predicted_betti);
    }
}

TEST_CASE("sharpness witnesses for m = 3") {
    const Lattice lat(Parameters{3, 2});
    const std::vector<Int> expected = {1, 2, 1, 1, 1};  // p = 1..5
    for (Int p = 1; p <= 5; ++p) {
        const SharpnessWitness w = sharpness_witness(lat, p);
        CHECK(w.predicted_betti == expected[static_cast<std::size_t>(p - 1)]);
        CHECK(w.b[0] == compute_A(lat, p + 1) - 1);
        CHECK(betti_hochster(lat, w.b, p).value == w.predicted_betti);
    }
    CHECK(sharpness_witness(lat, 1).regime == SharpnessRegime::low);
    CHECK(sharpness_witness(lat, 2).regime == SharpnessRegime::low);
    CHECK(sharpness_witness(lat, 3).regime == SharpnessRegime::middle);
    CHECK(sharpness_witness(lat, 4).regime == SharpnessRegime::high);
    CHECK(sharpness_witness(lat, 5).regime == SharpnessRegime::high);
}

TEST_CASE("sharpness Morse certificates") {
    // low regime: {1} plus p cells of dimension p-1
    const Lattice lat32(Parameters{3, 2});
    for (Int p = 1; p <= 2; ++p) {
        const SharpnessWitness w = sharpness_witness(lat32, p);
        const MorseReport cert =
            sharpness_morse_certificate(lat32, w, enumerate_faces(lat32, w.b));
        CHECK(cert.acyclic);
        CHECK(static_cast<Int>(cert.critical.size()) == p + 1);
        CHECK(cert.count_at(p - 1) == p + (p == 1 ? 1 : 0));
    }

    // high regime: {1} plus a single (p-1)-cell
    const Lattice lat22(Parameters{2, 2});
    const SharpnessWitness high = sharpness_witness(lat22, 3);
    const MorseReport cert =
        sharpness_morse_certificate(lat22, high, enumerate_faces(lat22, high.b));
    CHECK(cert.acyclic);
    CHECK(cert.critical == std::vector<Face>{{1}, {2, 3, 5}});

    // middle regime: {1} plus #D cells of dimension p-1
    const Lattice lat23(Parameters{2, 3});
    const SharpnessWitness mid = sharpness_witness(lat23, 4);
    const MorseReport mcert =
        sharpness_morse_certificate(lat23, mid, enumerate_faces(lat23, mid.b));
    CHECK(mcert.acyclic);
    CHECK(mcert.count_at(3) == 2);
    CHECK(static_cast<Int>(mcert.critical.size()) == 3);
}

TEST_CASE("homotopy prediction picks up any sharp coordinate") {
    const Lattice lat(Parameters{2, 3});
    const auto direct = predict_homotopy(lat, deg({8, 4, 3}));
    REQUIRE(direct.has_value());
    CHECK(direct->p == 4);
    CHECK(direct->copies == 2);

    // the same degree with coordinates permuted
    const auto rotated = predict_homotopy(lat, deg({4, 8, 3}));
    REQUIRE(rotated.has_value());
    CHECK(rotated->copies == 2);

    CHECK_FALSE(predict_homotopy(lat, deg({9, 3, 3})).has_value());
    CHECK_FALSE(predict_homotopy(lat, deg({7, 4, 4})).has_value());

    // extremal line is covered as well
    const Lattice lat22(Parameters{2, 2});
    const auto extremal = predict_homotopy(lat22, deg({3, 2, 3}));
    REQUIRE(extremal.has_value());
    CHECK(extremal->p == 3);
    CHECK(extremal->copies == 1);
}

TEST_CASE("evaluate_degree classification") {
    const Lattice lat(Parameters{2, 3});
    const std::vector<Int> ps = {0, 1, 2, 3, 4, 5};

    CellOptions check_opts;
    check_opts.check = true;
    const auto vanish = evaluate_degree(lat, deg({11, 2, 2}), ps, check_opts);
    for (const CellEval& e : vanish) {
        CHECK(e.classification == CellClass::vanish_upper);
        CHECK(e.value == 0);
        CHECK_FALSE(e.mismatch);
        CHECK(e.oracle_value.has_value());
    }

    const auto theorem = evaluate_degree(lat, deg({8, 4, 3}), ps, check_opts);
    CHECK(theorem[4].classification == CellClass::theorem);
    CHECK(theorem[4].value == 2);
    CHECK(theorem[4].provenance == "theorem+oracle");
    CHECK_FALSE(theorem[4].mismatch);

    const auto oracle_only = evaluate_degree(lat, deg({7, 4, 4}), ps, CellOptions{});
    CHECK(oracle_only[4].classification == CellClass::oracle);

    CellOptions predict_only;
    predict_only.oracle_fallback = false;
    const auto unknown = evaluate_degree(lat, deg({7, 4, 4}), ps, predict_only);
    CHECK(unknown[4].classification == CellClass::unknown);
    CHECK_FALSE(unknown[4].value.has_value());
    CHECK_FALSE(unknown[4].infeasible);
}

TEST_CASE("slice verification") {
    const Lattice lat(Parameters{2, 3});
    const SliceReport report = verify_slice(lat, 5, {4});
    CHECK(report.ok());
    CHECK(report.cells.size() == 136);
    CHECK(report.mismatches == 0);
    CHECK(report.unknown == 0);

    // the sharp line values, straight from the report
    const std::vector<Int> expected = {0, 0, 1, 2, 2, 1, 0, 0};
    for (Int b1 = 0; b1 <= 7; ++b1) {
        const MultiDegree b = deg({8, b1, 7 - b1});
        const auto it = std::find_if(report.cells.begin(), report.cells.end(),
                                     [&](const SliceCellReport& c) { return c.b == b; });
        REQUIRE(it != report.cells.end());
        CHECK(it->eval.value == expected[static_cast<std::size_t>(b1)]);
        CHECK(it->verdict == CellVerdict::confirmed);
    }

    // the corrupt hook makes verification fail
    CellOptions corrupt;
    corrupt.upper_bound_offset = -1;
    CHECK_FALSE(verify_slice(lat, 5, {4}, corrupt).ok());
}
