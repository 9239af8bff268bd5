#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harvestkit/faddeeva.hpp"

using namespace harvestkit;

// Reference values computed with an independent implementation of w(z).
static const double kReference[][4] = {
    {0.0, 0.0, 1.0, 0.0},
    {0.5, 0.0, 0.7788007830714049, 0.4789251729010434},
    {1.0, 0.0, 0.36787944117144233, 0.6071577058413937},
    {3.0, 0.0, 0.00012340980408667956, 0.20115731703760037},
    {6.2, 0.0, 2.0217158486953322e-17, 0.09223146376024231},
    {0.0, 0.5, 0.6156903441929258, 0.0},
    {0.0, 3.0, 0.17900115118138998, 0.0},
    {0.3, 0.2, 0.7528947901368793, 0.2296531523490698},
    {1.5, 1.0, 0.21183658596851057, 0.23317097740444248},
    {2.0, 0.01, 0.020620065445569127, 0.3392813705802114},
    {4.0, 0.0001, 4.037490347118385e-06, 0.14595358969967875},
    {5.5, 2.5, 0.039913386367779885, 0.08534994689831508},
    {7.9, 0.1, 0.000926498028641041, 0.07199086697264716},
    {8.5, 0.0, 4.1900931944943974e-32, 0.06684447298834638},
    {12.0, 3.0, 0.011163889644607903, 0.04436123799496351},
    {0.1, 9.0, 0.06230025976869191, 0.0006839324471088426},
    {25.0, 1.0, 0.0009034249050849368, 0.022549456792260194},
    {3.0, -2.0, -0.08133907992862746, 0.12108616246299858},
    {-3.0, 2.0, 0.09271076642644344, -0.1283169622282617},
    {-3.0, -2.0, -0.08133907992862746, -0.12108616246299858},
    {0.05, 0.05, 0.9437569804542508, 0.051606665719484},
    {0.001, 0.001, 0.9988716223354106, 0.001126380671599899},
    {6.3, 4.4, 0.0426414418336238, 0.060018251452217626},
    {2.9, 1e-08, 0.00022263071697355534, 0.2093766609824674},
    {-7.0, 0.3, 0.003558727261161993, -0.0812899578144977},
    {0.0, -1.0, 5.008980080762283, 0.0},
    {10.0, -0.5, -0.002856953699322313, 0.05656032893530876},
};

TEST_CASE("w(z) against reference table") {
    for (const auto& row : kReference) {
        const cplx z{row[0], row[1]};
        const cplx want{row[2], row[3]};
        const cplx got = faddeeva_w(z);
        const double scale = std::max(std::abs(want), 1e-300);
        INFO("z = " << row[0] << " + " << row[1] << "i");
        // the tiny real part at large real z is below the imaginary part's
        // rounding floor; compare it absolutely against |w|
        CHECK(std::abs(got.real() - want.real()) < 1e-12 * scale);
        CHECK(std::abs(got.imag() - want.imag()) < 1e-12 * scale);
    }
}

TEST_CASE("reflection symmetries") {
    const cplx zs[] = {{0.7, 0.3}, {2.5, 1.5}, {6.0, 0.01}, {0.1, 4.0}};
    for (const cplx z : zs) {
        const cplx a = faddeeva_w(cplx{-z.real(), z.imag()});
        const cplx b = std::conj(faddeeva_w(z));
        CHECK(std::abs(a - b) < 1e-14 * std::abs(b));
        // w(-z) = 2 exp(-z^2) - w(z)
        const cplx lhs = faddeeva_w(-z);
        const cplx rhs = 2.0 * std::exp(-z * z) - faddeeva_w(z);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("real axis: Re w(x) = exp(-x^2)") {
    for (double x : {0.0, 0.3, 1.0, 2.7, 5.0}) {
        CHECK(faddeeva_w(cplx{x, 0.0}).real() == doctest::Approx(std::exp(-x * x)).epsilon(1e-13));
    }
}

TEST_CASE("overflow guard for large negative imaginary part") {
    CHECK_THROWS_AS(faddeeva_w(cplx{0.0, -30.0}), SpecialFunctionOverflow);
}

TEST_CASE("erfc through w") {
    CHECK(erfc_complex(cplx{0.5, 0.0}).real() == doctest::Approx(std::erfc(0.5)).epsilon(1e-13));
    CHECK(erfc_complex(cplx{2.0, 0.0}).real() == doctest::Approx(std::erfc(2.0)).epsilon(1e-13));
    const cplx z{1.0, 1.0};
    const cplx sum = erfc_complex(z) + erfc_complex(-z);
    CHECK(std::abs(sum - 2.0) < 1e-12);
}
