#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mchrift/airy.hpp"
#include "mchrift/painleve2.hpp"

using namespace mchrift;

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(solve_pii(1.0, -4.0, 8.0), numeric_error);
    CHECK_THROWS_AS(solve_pii(0.5, -4.0, 4.0), numeric_error);
    CHECK_THROWS_AS(solve_pii(0.5, -20.0, 8.0), numeric_error);
    CHECK_THROWS_AS(solve_pii(0.5, -4.0, 8.0, 2), numeric_error);
}

TEST_CASE("residual and Airy tail for the standard family") {
    for (double kappa : {0.1, -0.5, 0.9}) {
        auto sol = solve_pii(kappa, -4.0, 8.0);
        CHECK_FALSE(sol.truncated);
        CHECK(pii_residual(sol) < 1e-8);
        auto [ai6, aip6] = airy_ai(6.0);
        CHECK(std::abs(sol.eval_v(6.0) - kappa * ai6) < 1e-6);
        CHECK(std::abs(sol.eval_vp(6.0) - kappa * aip6) < 1e-6);
    }
}

TEST_CASE("odd symmetry in kappa") {
    auto sp = solve_pii(0.5, -4.0, 8.0);
    auto sm = solve_pii(-0.5, -4.0, 8.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < sp.s.size(); ++i)
        worst = std::max(worst, std::abs(sp.v[i] + sm.v[i]));
    CHECK(worst < 1e-10);
}

TEST_CASE("tail integral matches its derivative identity") {
    auto sol = solve_pii(0.7, -6.0, 8.0);
    // d/ds tail = -v^2 via 4th order central differences of the stored tail
    const double h = sol.ds;
    double worst = 0.0;
    for (std::size_t i = 2; i + 2 < sol.s.size(); ++i) {
        double d1 = (sol.tail[i - 2] - 8.0 * sol.tail[i - 1] + 8.0 * sol.tail[i + 1] -
                     sol.tail[i + 2]) / (12.0 * h);
        worst = std::max(worst, std::abs(d1 + sol.v[i] * sol.v[i]));
    }
    CHECK(worst < 1e-6);
    // tail is nonnegative and decreasing in s
    CHECK(sol.tail.front() > sol.tail.back());
    CHECK(sol.eval_tail(8.0) >= 0.0);
    // closed-form seed at the right end
    auto [ai, aip] = airy_ai(8.0);
    CHECK(std::abs(sol.tail.back() - 0.49 * (aip * aip - 8.0 * ai * ai)) < 1e-12);
}

TEST_CASE("opposite-sign cubic family stays bounded for the front amplitude") {
    // the transition-front local model: v'' = sv - 2v^3 with v ~ 0.588 Ai
    auto sol = solve_pii(0.588, -12.0, 8.0, -1);
    CHECK_FALSE(sol.truncated);
    CHECK(pii_residual(sol) < 1e-8);
    // oscillatory on the left, first zeros near the observed front zeros
    CHECK(sol.eval_v(-2.0) * sol.eval_v(-2.4) < 0.0);  // zero near -2.22
    CHECK(sol.eval_v(-3.8) * sol.eval_v(-4.1) < 0.0);  // zero near -3.98
}

TEST_CASE("interpolation consistency between nodes") {
    auto sol = solve_pii(0.5, -4.0, 8.0);
    auto fine = solve_pii(0.5, -4.0, 8.0, +1, 2.5e-4);
    for (double s : {-3.3217, -1.004, 0.5551, 4.2}) {
        CHECK(std::abs(sol.eval_v(s) - fine.eval_v(s)) < 1e-9);
        CHECK(std::abs(sol.eval_tail(s) - fine.eval_tail(s)) < 1e-9);
    }
    CHECK_THROWS_AS(sol.eval_v(9.0), numeric_error);
}
