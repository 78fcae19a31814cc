#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "veronese/hochster.hpp"

using namespace veronese;

namespace {

MultiDegree deg(std::vector<Int> c) { return MultiDegree{std::move(c)}; }

std::vector<Face> flatten(const FaceSet& faces) {
    std::vector<Face> out;
    for (Int k = 0; k <= faces.max_card(); ++k)
        for (const Face& f : faces.of_card(k)) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("membership test") {
    const Lattice lat(Parameters{2, 2});
    const MultiDegree b = deg({2, 1, 1});
    CHECK(is_face(lat, b, Face{1, 5}));
    CHECK_FALSE(is_face(lat, b, Face{1, 2}));
    CHECK(is_face(lat, b, Face{}));
    CHECK_THROWS_AS(is_face(lat, b, Face{0}), std::invalid_argument);
    CHECK_THROWS_AS(is_face(lat, b, Face{7}), std::invalid_argument);
    CHECK_THROWS_AS(is_face(lat, b, Face{5, 1}), std::invalid_argument);
}

TEST_CASE("explicit enumeration of small complexes") {
    const Lattice lat(Parameters{2, 2});

    const FaceSet f211 = enumerate_faces(lat, deg({2, 1, 1}));
    CHECK(flatten(f211) == std::vector<Face>{{}, {1}, {1, 5}, {2}, {2, 3}, {3}, {5}});

    const FaceSet f220 = enumerate_faces(lat, deg({2, 2, 0}));
    CHECK(flatten(f220) == std::vector<Face>{{}, {1}, {1, 4}, {2}, {4}});

    const FaceSet fd00 = enumerate_faces(lat, deg({2, 0, 0}));
    CHECK(flatten(fd00) == std::vector<Face>{{}, {1}});
}

TEST_CASE("enumeration equals the brute-force subset oracle") {
    const std::vector<std::pair<Parameters, Int>> sweeps = {
        {Parameters{2, 2}, 3}, {Parameters{2, 3}, 2}, {Parameters{3, 2}, 2}};
    for (const auto& [params, j_max] : sweeps) {
        const Lattice lat(params);
        for (Int j = 0; j <= j_max; ++j) {
            for (const MultiDegree& b : degrees_of_total(lat.m() + 1, lat.d() * j)) {
                std::vector<Face> brute = testing::brute_force_faces(lat, b);
                std::sort(brute.begin(), brute.end());
                CHECK(flatten(enumerate_faces(lat, b)) == brute);
            }
        }
    }
}

TEST_CASE("downward closure and cardinality cap") {
    const Lattice lat(Parameters{2, 3});
    for (const MultiDegree& b : degrees_of_total(3, 9)) {
        const FaceSet faces = enumerate_faces(lat, b);
        CHECK(faces.max_card() <= 3);  // |b|/d
        for (Int k = 1; k <= faces.max_card(); ++k) {
            for (const Face& f : faces.of_card(k)) {
                for (std::size_t drop = 0; drop < f.size(); ++drop) {
                    Face facet = f;
                    facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
                    CHECK(faces.contains(facet));
                }
            }
        }
    }
}

TEST_CASE("cone detection") {
    const Lattice lat3(Parameters{2, 3});
    const FaceSet cone = enumerate_faces(lat3, deg({11, 2, 2}));
    CHECK(is_cone_over(cone, 1));

    const Lattice lat2(Parameters{2, 2});
    const FaceSet f211 = enumerate_faces(lat2, deg({2, 1, 1}));
    CHECK_FALSE(is_cone_over(f211, 1));

    const FaceSet single = enumerate_faces(lat2, deg({2, 0, 0}));
    CHECK(is_cone_over(single, 1));

    CHECK_THROWS_AS(is_cone_over(f211, 4), std::invalid_argument);  // not a vertex
}

TEST_CASE("anti-star contents and counts") {
    const Lattice lat2(Parameters{2, 2});
    const FaceSet f211 = enumerate_faces(lat2, deg({2, 1, 1}));
    const AntiStar anti = anti_star(f211, 1);
    CHECK(anti.faces == std::vector<Face>{{2}, {3}, {2, 3}});
    CHECK(anti.count_at(0) == 2);
    CHECK(anti.count_at(1) == 1);
    CHECK(anti.count_at(2) == 0);

    const FaceSet single = enumerate_faces(lat2, deg({2, 0, 0}));
    CHECK(anti_star(single, 1).faces.empty());

    const Lattice lat3(Parameters{2, 3});
    const FaceSet f843 = enumerate_faces(lat3, deg({8, 4, 3}));
    const AntiStar anti843 = anti_star(f843, 1);
    REQUIRE(anti843.faces.size() == 2);
    CHECK(anti843.count_at(3) == 2);  // both faces have dimension 3
}

TEST_CASE("anti-star equals the brute-force set difference") {
    const Lattice lat(Parameters{2, 2});
    for (const MultiDegree& b : degrees_of_total(3, 6)) {
        const FaceSet faces = enumerate_faces(lat, b);
        for (Int v : faces.vertices()) {
            const AntiStar anti = anti_star(faces, v);
            std::vector<Face> expected;
            for (const Face& f : flatten(faces)) {
                if (std::binary_search(f.begin(), f.end(), v)) continue;
                if (!faces.contains(face_union(f, v))) expected.push_back(f);
            }
            std::vector<Face> got = anti.faces;
            std::sort(got.begin(), got.end());
            std::sort(expected.begin(), expected.end());
            CHECK(got == expected);
        }
    }
}

TEST_CASE("enumeration caps") {
    const Lattice big(Parameters{2, 10});  // n = 66 > 64
    CHECK_THROWS_AS(enumerate_faces(big, deg({10, 0, 0})), CapExceeded);

    const Lattice lat(Parameters{2, 2});
    CHECK_THROWS_AS(enumerate_faces(lat, deg({26, 0, 0})), CapExceeded);  // j = 13

    EnumLimits tight;
    tight.max_faces = 4;
    CHECK_THROWS_AS(enumerate_faces(lat, deg({2, 1, 1}), tight), CapExceeded);

    CHECK_THROWS_AS(enumerate_faces(lat, deg({1, 1, 1})), std::invalid_argument);  // not in NA
}
