#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include <ringcode/ring.hpp>
#include <ringcode/weights.hpp>

using namespace ringcode;

namespace {

RingVector single(const RingSpec& R, std::uint64_t u) { return RingVector(R, std::vector<std::uint64_t>{u}); }

std::vector<std::pair<std::uint64_t, unsigned>> prime_powers_up_to(std::uint64_t limit) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61}) {
        std::uint64_t m = p;
        unsigned s = 1;
        while (m <= limit) {
            out.emplace_back(p, s);
            m *= p;
            ++s;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("weights of a fixed Z_8 word") {
    RingSpec R(2, 3);
    RingVector x(R, std::vector<long long>{5, 7, 0, 1});
    CHECK(hamming_weight(x) == 3);
    CHECK(lee_weight(x) == 5);
    CHECK(euclidean_weight(x) == 11);
    CHECK(homogeneous_weight(x) == 6);
    CHECK(chinese_euclidean_weight(x) == Catch::Approx(6.0 - std::sqrt(2.0)).margin(1e-9));
}

TEST_CASE("single-coordinate reference values") {
    RingSpec R8(2, 3);
    CHECK(lee_weight(RingVector(R8, std::vector<long long>{5, 7})) == 4);
    CHECK(euclidean_weight(single(R8, 5)) == 9);

    RingSpec R4(2, 2);
    CHECK(chinese_euclidean_weight(single(R4, 2)) == Catch::Approx(4.0).margin(1e-9));
    CHECK(chinese_euclidean_weight(single(R4, 1)) == Catch::Approx(2.0).margin(1e-9));
}

TEST_CASE("homogeneous weight per element of Z_8") {
    RingSpec R(2, 3);
    const std::uint64_t expected[8] = {0, 2, 2, 2, 4, 2, 2, 2};
    for (std::uint64_t u = 0; u < 8; ++u) CHECK(homogeneous_weight(single(R, u)) == expected[u]);
}

TEST_CASE("homogeneous weight equals the Lee weight on Z_4") {
    RingSpec R(2, 2);
    for (std::uint64_t u = 0; u < 4; ++u) CHECK(homogeneous_weight(single(R, u)) == lee_weight(single(R, u)));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint64_t> e(6);
        for (auto& v : e) v = rng() % 4;
        RingVector w(R, e);
        CHECK(homogeneous_weight(w) == lee_weight(w));
    }
}

TEST_CASE("homogeneous weight degenerates to Hamming at s = 1") {
    for (std::uint64_t p : {2, 3, 5}) {
        RingSpec R(p, 1);
        for (std::uint64_t u = 0; u < p; ++u) {
            CHECK(homogeneous_weight(single(R, u)) == hamming_weight(single(R, u)));
        }
    }
}

TEST_CASE("per-coordinate ordering: Hamming <= Lee <= Euclidean") {
    for (auto [p, s] : prime_powers_up_to(64)) {
        RingSpec R(p, s);
        for (std::uint64_t u = 0; u < R.modulus(); ++u) {
            RingVector w = single(R, u);
            CHECK(hamming_weight(w) <= lee_weight(w));
            CHECK(lee_weight(w) <= euclidean_weight(w));
        }
    }
}

TEST_CASE("Chinese-Euclidean weight is symmetric under negation") {
    for (auto [p, s] : prime_powers_up_to(64)) {
        RingSpec R(p, s);
        for (std::uint64_t u = 0; u < R.modulus(); ++u) {
            double a = chinese_euclidean_weight(single(R, u));
            double b = chinese_euclidean_weight(single(R, R.neg(u)));
            CHECK(std::fabs(a - b) <= 1e-9);
        }
    }
}

TEST_CASE("distances are translation invariant") {
    RingSpec R(3, 2);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::uint64_t> xe(5), ye(5), ze(5);
        for (std::size_t i = 0; i < 5; ++i) {
            xe[i] = rng() % 9;
            ye[i] = rng() % 9;
            ze[i] = rng() % 9;
        }
        RingVector x(R, xe), y(R, ye), z(R, ze);
        for (WeightKind kind : {WeightKind::Hamming, WeightKind::Lee, WeightKind::Euclidean,
                                WeightKind::ChineseEuclidean, WeightKind::Homogeneous}) {
            CHECK(distance(x, y, kind).equals(distance(x + z, y + z, kind)));
        }
    }
}

TEST_CASE("weight enumerator of the full ring Z_4") {
    RingSpec R(2, 2);
    std::vector<RingVector> words;
    for (std::uint64_t u = 0; u < 4; ++u) words.push_back(single(R, u));

    WeightHistogram lee = weight_enumerator(words, WeightKind::Lee);
    REQUIRE(lee.size() == 3);
    CHECK(lee.at(WeightValue::exact(0)) == 1);
    CHECK(lee.at(WeightValue::exact(1)) == 2);
    CHECK(lee.at(WeightValue::exact(2)) == 1);

    WeightHistogram ce = weight_enumerator(words, WeightKind::ChineseEuclidean);
    REQUIRE(ce.size() == 3);
    CHECK(ce.at(WeightValue::real(0.0)) == 1);
    CHECK(ce.at(WeightValue::real(2.0)) == 2);
    CHECK(ce.at(WeightValue::real(4.0)) == 1);
}

TEST_CASE("minimum weights of the repetition code over Z_4") {
    RingSpec R(2, 2);
    std::vector<RingVector> words;
    for (std::uint64_t u = 0; u < 4; ++u) {
        words.push_back(RingVector(R, std::vector<std::uint64_t>{u, u}));
    }
    CHECK(min_weight(words, WeightKind::Hamming).integer_value() == 2);
    CHECK(min_weight(words, WeightKind::Lee).integer_value() == 2);
    CHECK(min_weight(words, WeightKind::Euclidean).integer_value() == 2);
    CHECK(min_weight(words, WeightKind::Homogeneous).integer_value() == 2);
    CHECK(min_weight(words, WeightKind::ChineseEuclidean).as_double() == Catch::Approx(4.0).margin(1e-9));
}

TEST_CASE("a trivial code has no minimum weight") {
    RingSpec R(2, 2);
    std::vector<RingVector> words{RingVector::zero(R, 3)};
    CHECK_THROWS_AS(min_weight(words, WeightKind::Lee), std::domain_error);
}

TEST_CASE("weight values compare with tolerance") {
    CHECK(WeightValue::exact(3) == WeightValue::exact(3));
    CHECK(WeightValue::exact(3) != WeightValue::exact(4));
    CHECK(WeightValue::real(2.0000000005) == WeightValue::exact(2));
    CHECK(WeightValue::real(2.00000001) != WeightValue::exact(2));
    CHECK(WeightValue::exact(2) < WeightValue::exact(3));
    CHECK(WeightValueLess{}(WeightValue::real(1.5), WeightValue::exact(2)));
    CHECK(WeightValue::exact(7).to_string() == "7");
    CHECK(WeightValue::real(0.5).to_string() == "0.500000000");
    CHECK_THROWS_AS(WeightValue::real(0.5).integer_value(), std::logic_error);
}

TEST_CASE("weight kind names round-trip") {
    for (WeightKind kind : {WeightKind::Hamming, WeightKind::Lee, WeightKind::Euclidean,
                            WeightKind::ChineseEuclidean, WeightKind::Homogeneous}) {
        CHECK(parse_weight_kind(weight_kind_name(kind)) == kind);
    }
    CHECK_THROWS_AS(parse_weight_kind("manhattan"), std::invalid_argument);
}
