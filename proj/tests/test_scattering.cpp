#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mchrift/datum.hpp"
#include "mchrift/scattering.hpp"

using namespace mchrift;

namespace {

const InitialDatum& gaussian_datum() {
    static InitialDatum d = [] {
        DatumSpec spec;
        spec.kind = DatumKind::gaussian;
        spec.A = 0.3;
        spec.w = 2.0;
        return build_initial_datum(spec, 40.0, 2048);
    }();
    return d;
}

}  // namespace

TEST_CASE("datum construction sanity") {
    const auto& d = gaussian_datum();
    CHECK(d.N == 2048);
    // m = u - u_xx at the origin for A e^{-x^2/w^2}: u(0)(1 + 2/w^2)
    CHECK(std::abs(d.fm0(0.0) - 0.3 * 1.5) < 1e-9);
    CHECK(d.fu0(0.0) == Catch::Approx(0.3).margin(1e-12));
    // c_plus is the decaying tail integral: zero at the right end, intq at the left
    CHECK(std::abs(d.c_plus.back()) < 1e-10);
    CHECK(std::abs(d.c_plus.front() - d.intq) < 1e-6);
    CHECK(d.intq > 0.0);

    DatumSpec bad;
    bad.kind = DatumKind::gaussian;
    bad.A = 0.3;
    bad.w = 2.0;
    CHECK_THROWS_AS(build_initial_datum(bad, 4.0, 256), numeric_error);  // no decay at +-L
}

TEST_CASE("zero datum scatters trivially") {
    DatumSpec spec;
    spec.kind = DatumKind::zero;
    auto d = build_initial_datum(spec, 20.0, 256);
    for (double z : {0.5, 1.0, 2.0, -3.0}) {
        auto s = scattering_pair(d, z);
        CHECK(std::abs(s.a - 1.0) < 1e-12);
        CHECK(std::abs(s.b) < 1e-12);
    }
}

TEST_CASE("frozen reflection values") {
    const auto& d = gaussian_datum();
    auto s1 = scattering_pair(d, 1.0);
    CHECK(s1.r.real() == Catch::Approx(-0.58825156).margin(2e-6));
    CHECK(std::abs(s1.r.imag()) < 1e-6);

    auto sm = scattering_pair(d, 2.0 + std::sqrt(3.0));
    CHECK(sm.r.real() == Catch::Approx(-0.12209041).margin(5e-6));
    CHECK(sm.r.imag() == Catch::Approx(-0.03308428).margin(5e-6));
}

TEST_CASE("unitarity and symmetries on a small grid") {
    const auto& d = gaussian_datum();
    std::vector<double> grid;
    for (double z = -4.0; z <= 4.0 + 1e-9; z += 0.5) grid.push_back(z);
    auto data = reflection_grid(d, grid);
    auto audit = symmetry_audit(d, data);
    CHECK(audit.unitarity < 1e-8);
    CHECK(audit.sym_recip < 1e-6);
    CHECK(audit.sym_neg_recip < 1e-6);
    CHECK(audit.sym_neg < 1e-6);
}

TEST_CASE("a at i equals the area identity") {
    const auto& d = gaussian_datum();
    const cx ai_val = a_direct(d, I);
    CHECK(std::abs(ai_val.imag()) < 1e-8);
    CHECK(ai_val.real() == Catch::Approx(std::exp(-0.5 * d.intq)).margin(1e-8));
    CHECK(ai_val.real() == Catch::Approx(0.912130909404275).margin(1e-6));
}

TEST_CASE("trace formula reproduces a off the axis") {
    const auto& d = gaussian_datum();
    std::vector<double> grid;
    for (double z = 0.05; z <= 15.0 + 1e-9; z += 0.05) {
        grid.push_back(-z);
        grid.push_back(z);
    }
    std::sort(grid.begin(), grid.end());
    auto data = reflection_grid(d, grid);
    for (cx z : {cx(0.0, 1.0), cx(1.2, 0.8), cx(-2.0, 0.5)}) {
        const cx lhs = trace_formula_eval(data, z);
        const cx rhs = a_direct(d, z);
        CHECK(std::abs(lhs - rhs) < 1e-4 * std::abs(rhs));
    }
}

TEST_CASE("argument-principle search finds analytic zeros") {
    const cx z1(0.4, 1.1), z2(-1.3, 0.6);
    auto f = [&](cx z) { return (z - z1) * (z - z2) * std::exp(z); };
    auto roots = locate_discrete_spectrum(f, SearchBox{-3.0, 3.0, 0.1, 3.0});
    REQUIRE(roots.size() == 2);
    double best1 = 1e9, best2 = 1e9;
    for (const auto& r : roots) {
        best1 = std::min(best1, std::abs(r.zeta - z1));
        best2 = std::min(best2, std::abs(r.zeta - z2));
    }
    CHECK(best1 < 1e-8);
    CHECK(best2 < 1e-8);

    auto none = locate_discrete_spectrum(f, SearchBox{1.0, 2.0, 1.5, 2.5});
    CHECK(none.empty());
    CHECK_THROWS_AS(locate_discrete_spectrum(f, SearchBox{-1.0, 1.0, -1.0, 1.0}), numeric_error);
}
