#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mchrift/asymptotics.hpp"
#include "mchrift/common.hpp"
#include "mchrift/datum.hpp"
#include "mchrift/painleve2.hpp"
#include "mchrift/scattering.hpp"

namespace mchrift {

using json = nlohmann::json;

namespace detail {

// 17 significant digits round-trips doubles exactly
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw numeric_error("cannot open for writing: " + path);
    return f;
}

}  // namespace detail

inline void write_datum_csv(const std::string& path, const InitialDatum& d) {
    auto f = detail::open_out(path);
    f << "x,u0\n";
    for (int i = 0; i < d.N; ++i)
        f << detail::fmt17(d.xs[i]) << ',' << detail::fmt17(d.u0[i]) << '\n';
}

inline void write_scattering_csv(const std::string& path, const ScatteringData& data) {
    auto f = detail::open_out(path);
    f << "z,Re_a,Im_a,Re_b,Im_b,Re_r,Im_r\n";
    for (const auto& s : data.samples) {
        f << detail::fmt17(s.z) << ',' << detail::fmt17(s.a.real()) << ','
          << detail::fmt17(s.a.imag()) << ',' << detail::fmt17(s.b.real()) << ','
          << detail::fmt17(s.b.imag()) << ',' << detail::fmt17(s.r.real()) << ','
          << detail::fmt17(s.r.imag()) << '\n';
    }
}

inline void write_spectrum_csv(const std::string& path, const std::vector<DiscreteEigen>& eig) {
    auto f = detail::open_out(path);
    f << "Re_zeta,Im_zeta,Re_C,Im_C\n";
    for (const auto& e : eig)
        f << detail::fmt17(e.zeta.real()) << ',' << detail::fmt17(e.zeta.imag()) << ','
          << detail::fmt17(e.C.real()) << ',' << detail::fmt17(e.C.imag()) << '\n';
}

inline void write_painleve_csv(const std::string& path, const PainleveSolution& sol) {
    auto f = detail::open_out(path);
    f << "s,v,v_prime,tail\n";
    for (std::size_t i = 0; i < sol.s.size(); ++i)
        f << detail::fmt17(sol.s[i]) << ',' << detail::fmt17(sol.v[i]) << ','
          << detail::fmt17(sol.v_prime[i]) << ',' << detail::fmt17(sol.tail[i]) << '\n';
}

inline void write_report_csv(const std::string& path,
                             const std::vector<AsymptoticExpansion>& rows) {
    auto f = detail::open_out(path);
    f << "x,t,region,u_asym,u_p,corr_re,corr_im,s_scaled,err_order\n";
    for (const auto& r : rows) {
        const char* reg = (r.region == Region::P1) ? "P1"
                          : (r.region == Region::P2) ? "P2" : "none";
        f << detail::fmt17(r.x) << ',' << detail::fmt17(r.t) << ',' << reg << ','
          << detail::fmt17(r.u_value) << ',' << detail::fmt17(r.u_p) << ','
          << detail::fmt17(r.corr_re) << ',' << detail::fmt17(r.corr_im) << ','
          << detail::fmt17(r.s_scaled) << ',' << detail::fmt17(r.err_order) << '\n';
    }
}

inline void write_pde_csv(const std::string& path, const std::vector<double>& x,
                          const std::vector<double>& u, const std::vector<double>& m) {
    auto f = detail::open_out(path);
    f << "x,u,m\n";
    for (std::size_t i = 0; i < x.size(); ++i)
        f << detail::fmt17(x[i]) << ',' << detail::fmt17(u[i]) << ',' << detail::fmt17(m[i])
          << '\n';
}

inline void write_summary_json(const std::string& path, const json& j) {
    auto f = detail::open_out(path);
    f << j.dump(2) << '\n';
}

}  // namespace mchrift
