#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include <ringcode/codes.hpp>
#include <ringcode/graymaps.hpp>
#include <ringcode/ring.hpp>
#include <ringcode/weights.hpp>

using namespace ringcode;

namespace {

// reference value tables, transcribed by hand
const std::vector<std::pair<std::uint64_t, std::uint64_t>> kEtaS2 = {
    {0, 0}, {0, 1}, {1, 1}, {1, 0},
};
const std::vector<std::pair<std::uint64_t, std::uint64_t>> kEtaS3 = {
    {0, 0}, {1, 1}, {0, 2}, {1, 3}, {2, 2}, {3, 3}, {2, 0}, {3, 1},
};
const std::vector<std::pair<std::uint64_t, std::uint64_t>> kEtaS4 = {
    {0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7},
    {4, 4}, {5, 5}, {6, 6}, {7, 7}, {4, 0}, {5, 1}, {6, 2}, {7, 3},
};
const std::vector<std::pair<std::uint64_t, std::uint64_t>> kXiS2 = {
    {0, 0}, {1, 0}, {1, 1}, {0, 1},
};
const std::vector<std::pair<std::uint64_t, std::uint64_t>> kXiS3 = {
    {0, 0}, {1, 1}, {2, 0}, {1, 3}, {2, 2}, {3, 1}, {0, 2}, {3, 3},
};
const std::vector<std::pair<std::uint64_t, std::uint64_t>> kXiS4 = {
    {0, 0}, {1, 1}, {2, 2}, {1, 3}, {4, 0}, {1, 5}, {2, 6}, {1, 7},
    {4, 4}, {7, 1}, {6, 2}, {7, 3}, {0, 4}, {7, 5}, {6, 6}, {7, 7},
};

const std::vector<std::vector<long long>> kOctocodeRows = {
    {5, 7, 5, 6, 1, 0, 0, 0},
    {5, 0, 7, 5, 6, 1, 0, 0},
    {5, 0, 0, 7, 5, 6, 1, 0},
    {5, 0, 0, 0, 7, 5, 6, 1},
};

const std::vector<std::vector<long long>> kOctocodeImageRows = {
    {3, 3, 3, 0, 1, 0, 0, 0, 1, 3, 1, 2, 1, 0, 0, 0},
    {3, 0, 3, 3, 0, 1, 0, 0, 1, 0, 3, 1, 2, 1, 0, 0},
    {3, 0, 0, 3, 3, 0, 1, 0, 1, 0, 0, 3, 1, 2, 1, 0},
    {3, 0, 0, 0, 3, 3, 0, 1, 1, 0, 0, 0, 3, 1, 2, 1},
};

LinearCode octocode() { return LinearCode(RingMatrix(RingSpec(2, 3), 8, kOctocodeRows)); }

}  // namespace

TEST_CASE("eta reproduces the reference tables for s = 2, 3, 4") {
    CHECK(ModularGrayMap::eta(2).table() == kEtaS2);
    CHECK(ModularGrayMap::eta(3).table() == kEtaS3);
    CHECK(ModularGrayMap::eta(4).table() == kEtaS4);
}

TEST_CASE("eta spot values") {
    CHECK(ModularGrayMap::eta(3).apply(2) == std::pair<std::uint64_t, std::uint64_t>{0, 2});
    CHECK(ModularGrayMap::eta(3).apply(6) == std::pair<std::uint64_t, std::uint64_t>{2, 0});
    CHECK(ModularGrayMap::eta(4).apply(12) == std::pair<std::uint64_t, std::uint64_t>{4, 0});
    CHECK(ModularGrayMap::eta(2).apply(3) == std::pair<std::uint64_t, std::uint64_t>{1, 0});
}

TEST_CASE("eta is injective for s up to 10") {
    for (unsigned s = 2; s <= 10; ++s) {
        ModularGrayMap map = ModularGrayMap::eta(s);
        std::set<std::pair<std::uint64_t, std::uint64_t>> images;
        for (std::uint64_t u = 0; u < map.domain().modulus(); ++u) images.insert(map.apply(u));
        CHECK(images.size() == map.domain().modulus());
    }
}

TEST_CASE("eta rejects bad parameters and inputs") {
    CHECK_THROWS_AS(ModularGrayMap::eta(1), std::invalid_argument);
    CHECK_THROWS_AS(ModularGrayMap::eta(3).apply(8), std::invalid_argument);
}

TEST_CASE("xi reproduces the reference tables for s = 2, 3, 4") {
    CHECK(ModularGrayMap::xi(2).table() == kXiS2);
    CHECK(ModularGrayMap::xi(3).table() == kXiS3);
    CHECK(ModularGrayMap::xi(4).table() == kXiS4);
}

TEST_CASE("xi is undefined past s = 4") {
    CHECK_THROWS_AS(ModularGrayMap::xi(5), std::domain_error);
    CHECK_THROWS_AS(ModularGrayMap::xi(1), std::invalid_argument);
    CHECK_THROWS_WITH(ModularGrayMap::xi(6),
                      "xi is tabulated only for s in {2, 3, 4}; no rule beyond s = 4 is available");
}

TEST_CASE("generalized map at p = 2, s = 2 equals eta") {
    CarletMap carlet(2, 2);
    ModularGrayMap eta = ModularGrayMap::eta(2);
    for (std::uint64_t u = 0; u < 4; ++u) {
        auto [a, b] = eta.apply(u);
        CHECK(carlet.apply(u) == RingVector(eta.codomain(), std::vector<std::uint64_t>{a, b}));
    }
}

TEST_CASE("generalized map spot values") {
    CarletMap c23(2, 3);
    CHECK(c23.image_length() == 4);
    CHECK(c23.apply(4) == RingVector(RingSpec(2, 1), std::vector<long long>{1, 1, 1, 1}));
    CHECK(c23.apply(0).is_zero());

    CarletMap c32(3, 2);
    CHECK(c32.image_length() == 3);
    CHECK(c32.apply(5) == RingVector(RingSpec(3, 1), std::vector<long long>{1, 0, 2}));
}

TEST_CASE("generalized map honors a custom point order") {
    CarletMap forward(2, 3);
    CarletMap reversed(2, 3, {3, 2, 1, 0});
    for (std::uint64_t u = 0; u < 8; ++u) {
        RingVector f = forward.apply(u);
        RingVector r = reversed.apply(u);
        REQUIRE(f.size() == r.size());
        for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i] == r[f.size() - 1 - i]);
    }
}

TEST_CASE("generalized map validates its point order") {
    CHECK_THROWS_AS(CarletMap(2, 3, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CarletMap(2, 3, {0, 1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(CarletMap(2, 3, {0, 1, 2, 4}), std::invalid_argument);
    CHECK_THROWS_AS(CarletMap(2, 1), std::invalid_argument);
}

TEST_CASE("staged product reference values") {
    CHECK(compose_modular(3, 3) == RingVector(RingSpec(2, 1), std::vector<long long>{0, 1, 1, 0}));
    CHECK(compose_modular(3, 0).is_zero());
    CHECK(compose_modular(2, 1) == RingVector(RingSpec(2, 1), std::vector<long long>{0, 1}));
    CHECK_THROWS_AS(compose_modular(1, 0), std::invalid_argument);
}

TEST_CASE("staged product equals the generalized map for s up to 6") {
    for (unsigned s = 2; s <= 6; ++s) {
        CarletMap carlet(2, s);
        const std::uint64_t m = std::uint64_t{1} << s;
        for (std::uint64_t u = 0; u < m; ++u) {
            CHECK(compose_modular(s, u) == carlet.apply(u));
        }
    }
}

TEST_CASE("composition verdicts are exact for s up to 8") {
    for (unsigned s = 2; s <= 8; ++s) {
        CompositionReport report = verify_composition_theorem(s);
        CHECK(report.match == CompositionMatch::Exact);
        CHECK(report.inputs_checked == (std::uint64_t{1} << s));
        CHECK(report.permutation.empty());
    }
    CHECK_THROWS_AS(verify_composition_theorem(1), std::invalid_argument);
    CHECK_THROWS_AS(verify_composition_theorem(13), std::invalid_argument);
}

TEST_CASE("partial product stops at Z_4") {
    ModularGrayMap eta3 = ModularGrayMap::eta(3);
    for (std::uint64_t u = 0; u < 8; ++u) {
        auto [a, b] = eta3.apply(u);
        CHECK(vega_map(3, u) == RingVector(eta3.codomain(), std::vector<std::uint64_t>{a, b}));
    }
    CHECK(vega_map(4, 5) == RingVector(RingSpec(2, 2), std::vector<long long>{1, 1, 3, 3}));
    CHECK(vega_map(4, 0).is_zero());
    CHECK_THROWS_AS(vega_map(2, 0), std::invalid_argument);

    // vega followed by one more stage is the full product
    for (unsigned s = 3; s <= 6; ++s) {
        for (std::uint64_t u = 0; u < (std::uint64_t{1} << s); ++u) {
            RingVector z4 = vega_map(s, u);
            RingVector expected = extend(ModularGrayMap::eta(2), ExtensionLayout::Blockwise, z4);
            CHECK(compose_modular(s, u) == expected);
        }
    }
}

TEST_CASE("extension layouts order the halves differently") {
    ModularGrayMap eta3 = ModularGrayMap::eta(3);
    RingVector word(eta3.domain(), std::vector<long long>{5, 6});
    CHECK(extend(eta3, ExtensionLayout::Blockwise, word) ==
          RingVector(eta3.codomain(), std::vector<long long>{3, 3, 2, 0}));
    CHECK(extend(eta3, ExtensionLayout::Split, word) ==
          RingVector(eta3.codomain(), std::vector<long long>{3, 2, 3, 0}));

    CHECK(extend(eta3, ExtensionLayout::Split, RingVector::zero(eta3.domain(), 0)).size() == 0);
    CHECK_THROWS_AS(extend(eta3, ExtensionLayout::Blockwise, RingVector(RingSpec(2, 2), std::vector<long long>{1})),
                    std::invalid_argument);
}

TEST_CASE("both layouts carry the same weights") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned s = 2 + rng() % 3;
        ModularGrayMap map = ModularGrayMap::eta(s);
        std::vector<std::uint64_t> e(1 + rng() % 6);
        for (auto& v : e) v = rng() % map.domain().modulus();
        RingVector word(map.domain(), e);
        RingVector block = extend(map, ExtensionLayout::Blockwise, word);
        RingVector split = extend(map, ExtensionLayout::Split, word);
        for (WeightKind kind : {WeightKind::Hamming, WeightKind::Lee, WeightKind::Euclidean,
                                WeightKind::ChineseEuclidean, WeightKind::Homogeneous}) {
            CHECK(weight(block, kind).equals(weight(split, kind)));
        }
    }
}

TEST_CASE("xi with split layout reproduces the recorded octocode image") {
    RingMatrix image = map_generator_rows(ModularGrayMap::xi(3), ExtensionLayout::Split, octocode());
    CHECK(image == RingMatrix(RingSpec(2, 2), 16, kOctocodeImageRows));
}

TEST_CASE("eta with split layout does not reproduce the recorded octocode image") {
    RingMatrix image = map_generator_rows(ModularGrayMap::eta(3), ExtensionLayout::Split, octocode());
    CHECK_FALSE(image == RingMatrix(RingSpec(2, 2), 16, kOctocodeImageRows));
}

TEST_CASE("mapping codeword sets") {
    RingSpec R8(2, 3);
    ModularGrayMap eta3 = ModularGrayMap::eta(3);

    std::set<RingVector> image =
        map_codeword_set(eta3, ExtensionLayout::Blockwise, LinearCode(RingMatrix(R8, 1, {{4}})));
    std::set<RingVector> expected{RingVector(eta3.codomain(), std::vector<long long>{0, 0}),
                                  RingVector(eta3.codomain(), std::vector<long long>{2, 2})};
    CHECK(image == expected);

    std::set<RingVector> full = map_codeword_set(eta3, ExtensionLayout::Blockwise, LinearCode(RingMatrix(R8, 1, {{1}})));
    CHECK(full.size() == 8);
    CHECK(is_additively_closed(full));
}

TEST_CASE("one-coordinate eta image spans the expected two-generator code") {
    for (unsigned s = 2; s <= 10; ++s) CHECK(image_is_rm2(s));
}

TEST_CASE("eta preserves homogeneous distances") {
    for (unsigned s : {2u, 3u, 4u}) {
        IsometryReport report = verify_isometry(ModularGrayMap::eta(s), ExtensionLayout::Blockwise,
                                                WeightKind::Homogeneous, WeightKind::Homogeneous);
        CHECK(report.pairs_checked == (std::uint64_t{1} << (2 * s)));
        CHECK(report.isometric());
    }

    IsometryReport longer = verify_isometry(ModularGrayMap::eta(3), ExtensionLayout::Split,
                                            WeightKind::Homogeneous, WeightKind::Homogeneous, 2);
    CHECK(longer.pairs_checked == 4096);
    CHECK(longer.isometric());
}

TEST_CASE("eta at s = 2 carries Lee distance to Hamming distance") {
    for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
        IsometryReport report = verify_isometry(ModularGrayMap::eta(2), ExtensionLayout::Blockwise, WeightKind::Lee,
                                                WeightKind::Hamming, n);
        CHECK(report.isometric());
    }
}

TEST_CASE("xi at s = 2 is a homogeneous isometry, at s = 3 it is not") {
    CHECK(verify_isometry(ModularGrayMap::xi(2), ExtensionLayout::Blockwise, WeightKind::Homogeneous,
                          WeightKind::Homogeneous)
              .isometric());

    IsometryReport report = verify_isometry(ModularGrayMap::xi(3), ExtensionLayout::Blockwise,
                                            WeightKind::Homogeneous, WeightKind::Homogeneous);
    CHECK_FALSE(report.isometric());

    bool found_3_5 = false;
    for (const auto& v : report.violations) {
        if (v.u.size() == 1 && v.u[0] == 3 && v.v[0] == 5) {
            found_3_5 = true;
            CHECK(v.source_distance == WeightValue::exact(2));
            CHECK(v.image_distance == WeightValue::exact(4));
        }
    }
    CHECK(found_3_5);
}

TEST_CASE("isometry checking respects the pair cap") {
    CHECK_THROWS_AS(verify_isometry(ModularGrayMap::eta(3), ExtensionLayout::Blockwise, WeightKind::Homogeneous,
                                    WeightKind::Homogeneous, 2, 1000),
                    CapExceeded);
    CHECK_THROWS_AS(verify_isometry(ModularGrayMap::eta(3), ExtensionLayout::Blockwise, WeightKind::Homogeneous,
                                    WeightKind::Homogeneous, 0),
                    std::invalid_argument);
}

TEST_CASE("the staged product carries homogeneous distance to Hamming distance") {
    for (unsigned s = 2; s <= 6; ++s) {
        RingSpec R(2, s);
        const std::uint64_t m = R.modulus();
        for (std::uint64_t u = 0; u < m; ++u) {
            for (std::uint64_t v = 0; v < m; ++v) {
                RingVector du(R, std::vector<std::uint64_t>{R.sub(u, v)});
                std::uint64_t lhs = homogeneous_weight(du);
                std::uint64_t rhs = hamming_weight(compose_modular(s, u) - compose_modular(s, v));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("mapped p-basis rows stay independent") {
    CHECK(verify_mapped_basis_independence(octocode(), ExtensionLayout::Blockwise));
    CHECK(verify_mapped_basis_independence(octocode(), ExtensionLayout::Split));

    RingSpec R8(2, 3);
    CHECK(verify_mapped_basis_independence(LinearCode(RingMatrix(R8, 2, {{1, 1}, {0, 2}})),
                                           ExtensionLayout::Blockwise));
    CHECK(verify_mapped_basis_independence(LinearCode::zero(R8, 3), ExtensionLayout::Blockwise));

    CHECK_THROWS_AS(verify_mapped_basis_independence(LinearCode::zero(RingSpec(3, 2), 2),
                                                     ExtensionLayout::Blockwise),
                    std::invalid_argument);
}

TEST_CASE("mapped p-basis rows of random codes stay independent") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 30; ++trial) {
        const unsigned s = 2 + rng() % 3;
        RingSpec R(2, s);
        const std::size_t n = 1 + rng() % 4;
        RingMatrix gen(R, n);
        for (int i = 0; i < 2; ++i) {
            std::vector<std::uint64_t> row(n);
            for (auto& e : row) e = rng() % R.modulus();
            gen.append_row(RingVector(R, row));
        }
        const ExtensionLayout layout = (rng() % 2 == 0) ? ExtensionLayout::Blockwise : ExtensionLayout::Split;
        CHECK(verify_mapped_basis_independence(LinearCode(gen), layout));
    }
}
