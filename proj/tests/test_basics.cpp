#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "mchrift/airy.hpp"
#include "mchrift/common.hpp"
#include "mchrift/config.hpp"
#include "mchrift/fft.hpp"
#include "mchrift/linalg.hpp"
#include "mchrift/ode.hpp"

using namespace mchrift;

TEST_CASE("Mat2 algebra") {
    Mat2 m{cx(1, 1), cx(0, 2), cx(3, 0), cx(1, -1)};
    Mat2 p = m * m.inv();
    CHECK(std::abs(p.a11 - 1.0) < 1e-14);
    CHECK(std::abs(p.a12) < 1e-14);
    CHECK(std::abs(p.a21) < 1e-14);
    CHECK(std::abs(p.a22 - 1.0) < 1e-14);
    CHECK(std::abs(m.trace() - cx(2, 0)) < 1e-15);
    CHECK(std::abs(m.entry_sum() - cx(5, 2)) < 1e-15);
}

TEST_CASE("dense complex solve") {
    // 3x3 with known solution
    std::vector<cx> A = {cx(2, 0), cx(0, 1), cx(1, 0),
                         cx(0, -1), cx(3, 0), cx(0, 0),
                         cx(1, 0), cx(0, 0), cx(1, 1)};
    std::vector<cx> xref = {cx(1, 2), cx(-1, 0), cx(0, 3)};
    std::vector<cx> b(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b[i] += A[i * 3 + j] * xref[j];
    auto x = solve_dense(A, b);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(x[i] - xref[i]) < 1e-13);
}

TEST_CASE("fft roundtrip and derivative") {
    const int n = 256;
    const double L = 5.0;  // half width
    auto k = fft_wavenumbers(n, L);
    std::vector<cx> f(n);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = -L + 2.0 * L * i / n;
        f[i] = std::exp(-x[i] * x[i]);
    }
    auto g = f;
    fft_inplace(g, -1);
    fft_inplace(g, +1);
    for (int i = 0; i < n; ++i) CHECK(std::abs(g[i] - f[i]) < 1e-13);

    fft_inplace(f, -1);
    for (int i = 0; i < n; ++i) f[i] *= I * k[i];
    fft_inplace(f, +1);
    for (int i = 0; i < n; ++i)
        CHECK(std::abs(f[i].real() - (-2.0 * x[i] * std::exp(-x[i] * x[i]))) < 1e-9);
}

TEST_CASE("dp54 integrates oscillator to tolerance") {
    // y' = i y, y(0) = 1 -> y(T) = e^{iT}
    auto rhs = [](double, const std::vector<cx>& y, std::vector<cx>& dy) { dy[0] = I * y[0]; };
    std::vector<cx> y = {1.0};
    dp54_integrate(rhs, 0.0, 10.0, y, 1e-11, 1e-13);
    CHECK(std::abs(y[0] - std::exp(I * 10.0)) < 1e-9);
}

TEST_CASE("rk4 fixed-step order") {
    auto rhs = [](double t, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = std::cos(t) * y[0];
    };
    auto run = [&](int n) {
        std::vector<double> y = {1.0};
        rk4_fixed(rhs, 0.0, 2.0, y, n, [](double, const std::vector<double>&) {});
        return y[0];
    };
    const double exact = std::exp(std::sin(2.0));
    const double e1 = std::abs(run(50) - exact);
    const double e2 = std::abs(run(100) - exact);
    CHECK(e1 / e2 > 14.0);  // ~2^4
}

TEST_CASE("airy values") {
    struct Row { double s, ai, aip; };
    const Row rows[] = {
        {0.0, 0.35502805388781723926, -0.25881940379280679841},
        {1.0, 0.13529241631288141552, -0.15914744129679321279},
        {-1.0, 0.5355608832923521188, -0.010160567116645209395},
        {2.5, 0.015725923380470489995, -0.026250881035903230365},
        {-3.5, -0.37553382314043191193, -0.34344343345404814629},
        {6.0, 9.9476943602528895702e-6, -2.4765200397034954754e-5},
        {10.0, 1.1047532552898685934e-10, -3.5206336767389236366e-10},
        {-10.0, 0.040241238486443190689, 0.9962650441327900559},
        {29.5, 4.9257973928177147424e-48, -2.6795510627099846436e-47},
        {-29.5, 0.17161453239606635303, -0.9259315343790728079},
    };
    for (const auto& r : rows) {
        auto [ai, aip] = airy_ai(r.s);
        CHECK(std::abs(ai - r.ai) < 1e-12 * std::max(1.0, std::abs(r.ai)) + 1e-14 * std::abs(r.aip));
        CHECK(std::abs(aip - r.aip) < 1e-12 * std::max(1.0, std::abs(r.aip)) + 1e-14);
    }
    CHECK_THROWS_AS(airy_ai(31.0), numeric_error);
}

TEST_CASE("config parsing") {
    auto cfg = Config::from_string("a = 1.5\n# comment\nname= gauss\nn=42\nflag=true\n");
    CHECK(cfg.get_double("a") == 1.5);
    CHECK(cfg.get_string("name") == "gauss");
    CHECK(cfg.get_int("n") == 42);
    CHECK(cfg.get_bool("flag", false));
    cfg.assert_all_consumed();

    auto cfg2 = Config::from_string("a=1\nb=2\n");
    cfg2.get_double("a");
    CHECK_THROWS_AS(cfg2.assert_all_consumed(), numeric_error);  // b unread

    CHECK_THROWS_AS(Config::from_string("a=1\na=2\n"), numeric_error);
    CHECK_THROWS_AS(Config::from_string("justakey\n"), numeric_error);
    auto cfg3 = Config::from_string("x=notanumber\n");
    CHECK_THROWS_AS(cfg3.get_double("x"), numeric_error);
    CHECK_THROWS_AS(cfg3.get_double("missing"), numeric_error);
}
