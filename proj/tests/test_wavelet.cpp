#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "waveaug/wavelet.hpp"

using namespace waveaug;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("filter_bank db1 is the Haar pair") {
    const FilterBank fb = filter_bank("db1");
    REQUIRE(fb.length() == 2);
    CHECK(fb.dec_lo[0] == doctest::Approx(0.7071067812).epsilon(1e-9));
    CHECK(fb.dec_lo[1] == doctest::Approx(0.7071067812).epsilon(1e-9));
}

TEST_CASE("filter_bank invariants hold for every supported wavelet") {
    for (int n = 1; n <= 26; ++n) {
        const FilterBank fb = filter_bank("db" + std::to_string(n));
        const Eigen::Index f = fb.length();
        REQUIRE(f == 2 * n);
        REQUIRE(fb.dec_hi.size() == f);
        REQUIRE(fb.rec_lo.size() == f);
        REQUIRE(fb.rec_hi.size() == f);

        CHECK(fb.dec_lo.sum() == doctest::Approx(kSqrt2).epsilon(1e-10));
        CHECK(fb.dec_lo.squaredNorm() == doctest::Approx(1.0).epsilon(1e-10));
        for (Eigen::Index k = 0; k < f; ++k) {
            CHECK(fb.dec_hi[k] == (k % 2 == 0 ? 1.0 : -1.0) * fb.dec_lo[f - 1 - k]);
            CHECK(fb.rec_lo[k] == fb.dec_lo[f - 1 - k]);
            CHECK(fb.rec_hi[k] == fb.dec_hi[f - 1 - k]);
        }
        // shift orthogonality and vanishing moments, the independent
        // conditions that pin the embedded tables down
        for (Eigen::Index m = 1; m < n; ++m) {
            double dot = 0.0;
            for (Eigen::Index k = 0; k + 2 * m < f; ++k) dot += fb.dec_lo[k] * fb.dec_lo[k + 2 * m];
            CHECK(std::abs(dot) < 1e-12);
        }
        for (int p = 0; p < n; ++p) {
            double mom = 0.0;
            for (Eigen::Index k = 0; k < f; ++k)
                mom += std::pow(static_cast<double>(k), p) * fb.dec_hi[k];
            CHECK(std::abs(mom) < 1e-7 * std::pow(static_cast<double>(f), p));
        }
    }
}

TEST_CASE("filter_bank rejects unknown identifiers") {
    CHECK_THROWS_WITH_AS(filter_bank("db99"), doctest::Contains("db99"), std::invalid_argument);
    CHECK_THROWS_AS(filter_bank("db0"), std::invalid_argument);
    CHECK_THROWS_AS(filter_bank("haar"), std::invalid_argument);
    CHECK_THROWS_AS(filter_bank("db"), std::invalid_argument);
}

TEST_CASE("dwt_step on a constant signal has zero detail") {
    const FilterBank fb = filter_bank("db1");
    const double c = 3.25;
    const auto [a, d] = dwt_step(Eigen::VectorXd::Constant(4, c), fb);
    REQUIRE(a.size() == 2);
    CHECK(a[0] == doctest::Approx(c * kSqrt2));
    CHECK(a[1] == doctest::Approx(c * kSqrt2));
    CHECK(d.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dwt_step db1 on [2,4,6,8] matches the convolution oracle") {
    const FilterBank fb = filter_bank("db1");
    Eigen::VectorXd x(4);
    x << 2, 4, 6, 8;
    const auto [a, d] = dwt_step(x, fb);
    CHECK(a[0] == doctest::Approx(4.2426).epsilon(1e-4));
    CHECK(a[1] == doctest::Approx(9.8995).epsilon(1e-4));
    CHECK(std::abs(d[0]) == doctest::Approx(1.4142).epsilon(1e-4));
    CHECK(std::abs(d[1]) == doctest::Approx(1.4142).epsilon(1e-4));
}

TEST_CASE("dwt_step output length is floor((n + f - 1) / 2)") {
    const FilterBank fb = filter_bank("db2");
    Rng rng(11);
    const auto [a, d] = dwt_step(oracles::random_vector(rng, 8), fb);
    CHECK(a.size() == 5);
    CHECK(d.size() == 5);
}

TEST_CASE("dwt_step rejects signals shorter than 2 samples") {
    const FilterBank fb = filter_bank("db1");
    CHECK_THROWS_AS(dwt_step(Eigen::VectorXd::Constant(1, 1.0), fb), std::invalid_argument);
}

TEST_CASE("idwt_step inverts dwt_step") {
    Rng rng(5);
    const FilterBank fb = filter_bank("db3");
    const Eigen::VectorXd x = oracles::random_vector(rng, 96);
    const auto [a, d] = dwt_step(x, fb);
    CHECK((idwt_step(a, d, fb, 96) - x).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("idwt_step constant and zero cases") {
    const FilterBank fb = filter_bank("db1");
    const double c = -1.5;
    const Eigen::VectorXd a = Eigen::VectorXd::Constant(2, c * kSqrt2);
    const Eigen::VectorXd d = Eigen::VectorXd::Zero(2);
    const Eigen::VectorXd back = idwt_step(a, d, fb, 4);
    CHECK((back.array() - c).abs().maxCoeff() < 1e-12);

    const Eigen::VectorXd zero = idwt_step(Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(2),
                                           fb, 4);
    CHECK(zero.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("idwt_step rejects bad inputs") {
    const FilterBank fb = filter_bank("db1");
    CHECK_THROWS_AS(idwt_step(Eigen::VectorXd::Zero(3), Eigen::VectorXd::Zero(2), fb, 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(idwt_step(Eigen::VectorXd::Zero(2), Eigen::VectorXd::Zero(2), fb, 9),
                    std::invalid_argument);
}

TEST_CASE("max_level examples") {
    CHECK(max_level(48, 2) == 5);
    CHECK(max_level(8, 4) == 1);
    CHECK(max_level(2, 4) == 0);
    CHECK_THROWS_AS(max_level(1, 2), std::invalid_argument);
}

TEST_CASE("wavedec shapes follow the stage length formula") {
    const FilterBank fb = filter_bank("db1");
    Rng rng(7);

    const auto one = wavedec(oracles::random_vector(rng, 8), fb, 1);
    CHECK(one.approx.size() == 4);
    REQUIRE(one.details.size() == 1);
    CHECK(one.details[0].size() == 4);
    CHECK(one.original_len == 8);

    const auto three = wavedec(oracles::random_vector(rng, 48), fb, 3);
    CHECK(three.approx.size() == 6);
    REQUIRE(three.details.size() == 3);
    CHECK(three.details[0].size() == 6);   // coarsest first
    CHECK(three.details[1].size() == 12);
    CHECK(three.details[2].size() == 24);
}

TEST_CASE("wavedec rejects levels beyond max_level") {
    const FilterBank fb = filter_bank("db2");
    Rng rng(7);
    CHECK_THROWS_AS(wavedec(oracles::random_vector(rng, 8), fb, 5), std::invalid_argument);
    CHECK_THROWS_AS(wavedec(oracles::random_vector(rng, 8), fb, 0), std::invalid_argument);
}

TEST_CASE("waverec is the exact inverse of wavedec") {
    Rng rng(13);
    for (const char* name : {"db1", "db2", "db3", "db5", "db25", "db26"}) {
        const FilterBank fb = filter_bank(name);
        for (Eigen::Index len : {48, 360, 1056}) {
            const int lmax = std::min(4, max_level(len, fb.length()));
            for (int level = 1; level <= lmax; ++level) {
                const Eigen::VectorXd x = oracles::random_vector(rng, len);
                const auto wc = wavedec(x, fb, level);
                CAPTURE(name);
                CAPTURE(len);
                CAPTURE(level);
                CHECK((waverec(wc, fb) - x).cwiseAbs().maxCoeff() < 1e-8);
            }
        }
    }
}

TEST_CASE("waverec linearity: zeroed and scaled pyramids") {
    Rng rng(17);
    const FilterBank fb = filter_bank("db2");
    const Eigen::VectorXd x = oracles::random_vector(rng, 100);
    WaveletCoeffs wc = wavedec(x, fb, 2);

    WaveletCoeffs zeroed = wc;
    zeroed.approx.setZero();
    for (auto& d : zeroed.details) d.setZero();
    CHECK(waverec(zeroed, fb).cwiseAbs().maxCoeff() == 0.0);

    const double alpha = -2.75;
    WaveletCoeffs scaled = wc;
    scaled.approx *= alpha;
    for (auto& d : scaled.details) d *= alpha;
    CHECK((waverec(scaled, fb) - alpha * x).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("waverec rejects inconsistent coefficient chains") {
    Rng rng(19);
    const FilterBank fb = filter_bank("db2");
    WaveletCoeffs wc = wavedec(oracles::random_vector(rng, 64), fb, 2);
    wc.details[1].conservativeResize(wc.details[1].size() - 1);
    CHECK_THROWS_AS(waverec(wc, fb), std::invalid_argument);
}

TEST_CASE("wavedec is linear") {
    Rng rng(23);
    const FilterBank fb = filter_bank("db3");
    const Eigen::VectorXd x = oracles::random_vector(rng, 80);
    const Eigen::VectorXd y = oracles::random_vector(rng, 80);
    const double a = 0.7, b = -1.3;
    const auto wx = wavedec(x, fb, 2);
    const auto wy = wavedec(y, fb, 2);
    const auto wz = wavedec(a * x + b * y, fb, 2);
    CHECK((wz.approx - a * wx.approx - b * wy.approx).cwiseAbs().maxCoeff() < 1e-9);
    for (size_t i = 0; i < wz.details.size(); ++i)
        CHECK((wz.details[i] - a * wx.details[i] - b * wy.details[i]).cwiseAbs().maxCoeff() <
              1e-9);
}

TEST_CASE("db1 level-1 energy conservation on power-of-two lengths") {
    Rng rng(29);
    const FilterBank fb = filter_bank("db1");
    for (Eigen::Index len : {64, 128}) {
        const Eigen::VectorXd x = oracles::random_vector(rng, len);
        const auto wc = wavedec(x, fb, 1);
        const double coeff_energy = wc.approx.squaredNorm() + wc.details[0].squaredNorm();
        CHECK(coeff_energy == doctest::Approx(x.squaredNorm()).epsilon(1e-8));
    }
    const Eigen::VectorXd c = Eigen::VectorXd::Constant(64, 2.0);
    const auto wc = wavedec(c, fb, 1);
    CHECK(wc.approx.squaredNorm() + wc.details[0].squaredNorm() ==
          doctest::Approx(c.squaredNorm()).epsilon(1e-10));
}
