#include "weldlab/suite.hpp"

#include "weldlab/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

namespace weldlab::suite
{
namespace
{
using io::Json;

// Pinned tolerances.
constexpr Real tol_fourier_split = 1e-12;
constexpr Real tol_weld_identity = 1e-10;
constexpr Real tol_weld_fixture = 1e-6;
constexpr Real weld_tol = 1e-8;
constexpr Real tol_grunsky_coeff_zero = 1e-12;
constexpr Real tol_grunsky_proj_zero = 1e-6;
constexpr Real tol_zw_entry = 1e-10;
constexpr Real tol_cross_route = 1e-5;
constexpr Real tol_operator_identity = 1e-6;
constexpr Real pi_rank_tol = 1e-8;
constexpr Real tol_pairing = 1e-8;
constexpr Real tol_gr_blocks = 1e-5;
constexpr Real tol_cocycle = 1e-5;
constexpr Real tol_trend = 0.01;
constexpr Real tol_sew_cut = 1e-6;
constexpr Real tol_mobius = 1e-9;
constexpr Real probe_slope_target = 2.0;
constexpr Real probe_slope_window = 0.3;
constexpr Real probe_floor = 1e-3;

std::string fmt(const char* f, Real v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Real max_abs(const MatrixXcd& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Relative change |a - b| / max(|a|, |b|), 0 when both vanish.
Real relative_change(Real a, Real b)
{
    const Real s = std::max(std::abs(a), std::abs(b));
    return s > 1e-300 ? std::abs(a - b) / s : 0.0;
}

Real max_coefficient_error(const PowerSeriesMap& a, const PowerSeriesMap& b)
{
    Real e = 0.0;
    const int n = std::max(a.order(), b.order());
    if (a.kind() == MapKind::disk_plus)
        for (int k = 1; k <= n; ++k)
            e = std::max(e, std::abs(a.coeff(k) - b.coeff(k)));
    else
        for (int k = 1; k >= -n; --k)
            e = std::max(e, std::abs(a.coeff(k) - b.coeff(k)));
    return e;
}

CriterionResult fourier_split(std::uint64_t seed)
{
    CriterionResult r{1, "fourier-split", false, {}, {}};
    std::mt19937_64 rng(seed);
    const int N = 32;
    const PowerSeriesMap id = PowerSeriesMap::identity_plus();
    Real worst = 0.0;
    for (int t = 0; t < 50; ++t)
    {
        const FourierFunction h = fixtures::random_band_limited(rng, N);
        const JumpResult j = jump_decompose(id, {h}, N);
        const DiskSeries plus = project(h, Side::plus);
        const DiskSeries minus = project(h, Side::minus);
        for (int n = 0; n <= N; ++n)
            worst = std::max(worst, std::abs(j.plus.mode(n) - plus.mode(n)));
        for (int n = 1; n <= N; ++n)
            worst = std::max(worst, std::abs(-j.minus.mode(-n) - minus.mode(-n)));
    }
    r.pass = worst < tol_fourier_split;
    r.summary = "max coefficient error " + fmt("%.3e", worst) + " over 50 functions at N = 32";
    r.metrics = {{"samples", 50}, {"order", N}, {"max_error", worst}, {"tolerance", tol_fourier_split}};
    return r;
}

CriterionResult welding_identity(std::uint64_t)
{
    CriterionResult r{2, "welding", false, {}, {}};
    const int N = 32;
    const WeldingResult wid = weld(CircleHomeo::identity(), N, weld_tol);
    Real id_err = std::max(std::abs(wid.F.coeff(1) - 1.0), std::abs(wid.G.coeff(1) - 1.0));
    for (int k = 2; k <= wid.F.order(); ++k)
        id_err = std::max(id_err, std::abs(wid.F.coeff(k)));
    for (int k = 0; k >= -wid.G.order(); --k)
        id_err = std::max(id_err, std::abs(wid.G.coeff(k)));

    // literal forward-compose fixture
    const PowerSeriesMap F0 = fixtures::fixture_interior();
    const PowerSeriesMap G0 = fixtures::fixture_exterior();
    const CircleHomeo h0 = homeo_from_pair(F0, G0, 64, 512);
    const WeldingResult w0 = weld(h0, N, weld_tol);
    const Real fix_err = std::max(max_coefficient_error(w0.F, F0), max_coefficient_error(w0.G, G0));

    // consistent variant: F0 with its true exterior partner
    const ExteriorMap ex = exterior_map(F0);
    const WeldingResult w1 = weld(invert(ex.alpha), N, weld_tol);
    const Real var_err = std::max(max_coefficient_error(w1.F, F0), max_coefficient_error(w1.G, ex.G));

    const bool id_ok = id_err < tol_weld_identity;
    const bool fix_ok = fix_err < tol_weld_fixture && w0.residual < weld_tol;
    r.pass = id_ok && fix_ok;
    r.summary = "identity error " + fmt("%.2e", id_err) + ", fixture (F0 = z + 0.1z^2, G0 = w + 0.05/w) error " +
                fmt("%.3e", fix_err) + " (weld residual " + fmt("%.1e", w0.residual) +
                "); consistent exterior partner error " + fmt("%.2e", var_err);
    r.metrics = {{"order", N},
                 {"tol", weld_tol},
                 {"identity_error", id_err},
                 {"identity_tolerance", tol_weld_identity},
                 {"fixture_error", fix_err},
                 {"fixture_residual", w0.residual},
                 {"fixture_tolerance", tol_weld_fixture},
                 {"fixture_boundary_gap", std::abs(F0(1.0) - G0(1.0))},
                 {"consistent_variant_error", var_err},
                 {"consistent_variant_residual", w1.residual}};
    return r;
}

CriterionResult grunsky_vanishing(std::uint64_t)
{
    CriterionResult r{3, "grunsky-vanishing", false, {}, {}};
    const PowerSeriesMap F = fixtures::mobius_map(0.3, 64);
    const Real c = max_abs(grunsky_matrix_coeff(F, 16).entries);
    const Real p = max_abs(grunsky_matrix_proj(F, 16).entries);
    r.pass = c < tol_grunsky_coeff_zero && p < tol_grunsky_proj_zero;
    r.summary = "z/(1-0.3z): coeff route max " + fmt("%.2e", c) + ", projection route max " + fmt("%.2e", p);
    r.metrics = {{"order", 16}, {"coeff_max", c}, {"proj_max", p}, {"coeff_tolerance", tol_grunsky_coeff_zero},
                 {"proj_tolerance", tol_grunsky_proj_zero}};
    return r;
}

CriterionResult grunsky_entry(std::uint64_t)
{
    CriterionResult r{4, "grunsky-entry", false, {}, {}};
    const Real t = 0.2;
    const MatrixXcd L = grunsky_log_coefficients(fixtures::polynomial({1.0, t}), 16);
    const Real err = std::abs(L(1, 1) - Complex(-t * t));
    r.pass = err < tol_zw_entry;
    r.summary = "zw coefficient " + fmt("%.17g", L(1, 1).real()) + " vs -0.04, error " + fmt("%.2e", err);
    r.metrics = {{"value", io::complex_to_json(L(1, 1))}, {"expected", -t * t}, {"error", err}, {"tolerance", tol_zw_entry}};
    return r;
}

CriterionResult cross_route(std::uint64_t)
{
    CriterionResult r{5, "cross-route", false, {}, {}};
    Real worst = 0.0;
    Json per = Json::array();
    for (const auto& m : fixtures::standard_maps())
    {
        const Real d = hs_norm(grunsky_matrix_coeff(m.map, 16).entries - grunsky_matrix_proj(m.map, 16).entries);
        worst = std::max(worst, d);
        per.push_back({{"map", m.name}, {"frobenius_difference", d}});
    }
    r.pass = worst < tol_cross_route;
    r.summary = "max Frobenius difference " + fmt("%.2e", worst) + " over 5 maps at N = 16";
    r.metrics = {{"order", 16}, {"maps", per}, {"max", worst}, {"tolerance", tol_cross_route}};
    return r;
}

CriterionResult operator_identities(std::uint64_t)
{
    CriterionResult r{6, "operator-identities", false, {}, {}};
    Real worst = 0.0;
    bool index_ok = true;
    Json per = Json::array();
    for (const auto& m : fixtures::standard_maps())
    {
        const GraphCheck g = graph_subspace_check(m.map, 16);
        const DetLineReport d = pi_report(m.map, 16, pi_rank_tol);
        worst = std::max({worst, g.id_residual, g.graph_residual, d.fiber_residual});
        index_ok = index_ok && d.dim_kernel == 1 && d.dim_cokernel == 0 && d.index == 1;
        per.push_back({{"map", m.name},
                       {"id_residual", g.id_residual},
                       {"graph_residual", g.graph_residual},
                       {"fiber_residual", d.fiber_residual},
                       {"dim_kernel", d.dim_kernel},
                       {"dim_cokernel", d.dim_cokernel},
                       {"index", d.index}});
    }
    r.pass = worst < tol_operator_identity && index_ok;
    r.summary = "max residual " + fmt("%.2e", worst) + ", (ker, coker, index) = (1, 0, 1) on all maps: " +
                (index_ok ? "yes" : "no");
    r.metrics = {{"order", 16}, {"rank_tol", pi_rank_tol}, {"maps", per}, {"max_residual", worst},
                 {"tolerance", tol_operator_identity}};
    return r;
}

CriterionResult symplectic(std::uint64_t seed)
{
    CriterionResult r{7, "symplectomorphism", false, {}, {}};
    std::mt19937_64 rng(seed + 7);
    Real pair_err = 0.0;
    for (int t = 0; t < 10; ++t)
    {
        const CircleHomeo phi = fixtures::random_analytic_homeo(rng, 6, 0.3, 0.5);
        const FourierFunction g = fixtures::random_band_limited(rng, 8);
        const FourierFunction h = fixtures::random_band_limited(rng, 8);
        const Complex before = symplectic_pairing(g, h);
        const Complex after = symplectic_pairing(compose_function(g, phi, 128), compose_function(h, phi, 128));
        pair_err = std::max(pair_err, std::abs(after - before));
    }
    Real gr_err = 0.0;
    Json per = Json::array();
    for (const auto& m : fixtures::standard_maps())
    {
        const CircleHomeo phi = invert(exterior_map(m.map).alpha);
        const MatrixXcd X = gr_from_blocks(block_decompose(comp_operator_matrix(phi, 16)));
        const Real d = operator_norm(X - grunsky_matrix_coeff(m.map, 16).entries);
        gr_err = std::max(gr_err, d);
        per.push_back({{"map", m.name}, {"difference", d}});
    }
    r.pass = pair_err < tol_pairing && gr_err < tol_gr_blocks;
    r.summary = "pairing change " + fmt("%.2e", pair_err) + " over 10 pairs; |conj(b) a^-1 - Gr| max " + fmt("%.2e", gr_err);
    r.metrics = {{"pairing_error", pair_err}, {"pairing_tolerance", tol_pairing}, {"gr_maps", per},
                 {"gr_error", gr_err}, {"gr_tolerance", tol_gr_blocks}, {"order", 16}};
    return r;
}

CriterionResult shale(std::uint64_t seed)
{
    CriterionResult r{8, "shale-cocycle", false, {}, {}};
    const int N = 16;
    const BlockDecomposition R1 = block_decompose(comp_operator_matrix(CircleHomeo::rotation(0.4), N));
    const BlockDecomposition R2 = block_decompose(comp_operator_matrix(CircleHomeo::rotation(-1.3), N));
    std::mt19937_64 rng(seed + 8);
    std::vector< BlockDecomposition > A;
    for (int k = 0; k < 3; ++k)
        A.push_back(block_decompose(comp_operator_matrix(fixtures::random_analytic_homeo(rng, 6, 0.3, 0.5), N)));
    const Complex rr = shale_cocycle_det(R1, R2);
    const Complex ra = shale_cocycle_det(R1, A[0]);
    const bool rot_exact = rr == Complex(1.0) && ra == Complex(1.0);

    const BlockDecomposition AB = compose_blocks(A[0], A[1]);
    const BlockDecomposition BC = compose_blocks(A[1], A[2]);
    const Complex left = shale_cocycle_det(A[0], A[1]) * shale_cocycle_det(AB, A[2]);
    const Complex right = shale_cocycle_det(A[1], A[2]) * shale_cocycle_det(A[0], BC);
    const Real assoc = std::abs(left - right);
    const Real nontrivial = std::abs(shale_cocycle_det(A[0], A[1]) - 1.0);
    r.pass = rot_exact && assoc < tol_cocycle;
    r.summary = std::string("rotations give det = 1 exactly: ") + (rot_exact ? "yes" : "no") + "; associativity gap " +
                fmt("%.2e", assoc) + " (|det - 1| = " + fmt("%.2e", nontrivial) + ")";
    r.metrics = {{"order", N},
                 {"rotation_rotation", io::complex_to_json(rr)},
                 {"rotation_generic", io::complex_to_json(ra)},
                 {"left_route", io::complex_to_json(left)},
                 {"right_route", io::complex_to_json(right)},
                 {"associativity_gap", assoc},
                 {"tolerance", tol_cocycle}};
    return r;
}

CriterionResult wp_trends(std::uint64_t)
{
    CriterionResult r{9, "wp-trends", false, {}, {}};
    Real worst_hs = 0.0, worst_a12 = 0.0;
    Json per = Json::array();
    for (const auto& m : fixtures::standard_maps())
    {
        const Real h16 = hs_norm(grunsky_matrix_coeff(m.map, 16));
        const Real h32 = hs_norm(grunsky_matrix_coeff(m.map, 32));
        const MapDiagnostics d = map_diagnostics(m.map);
        const Real dh = relative_change(h16, h32);
        worst_hs = std::max(worst_hs, dh);
        worst_a12 = std::max(worst_a12, d.a12_relative_change);
        per.push_back({{"map", m.name}, {"hs16", h16}, {"hs32", h32}, {"hs_change", dh}, {"a12", d.a12_norm},
                       {"a12_change", d.a12_relative_change}});
    }
    // corner control
    const CircleHomeo corner = fixtures::corner_homeo();
    std::vector< Real > hs_b;
    for (const int N : {16, 32, 64})
        hs_b.push_back(hs_norm(block_decompose(comp_operator_matrix(corner, N)).b));
    std::vector< Real > energy;
    WpEnergyGrid g;
    for (int level = 0; level < 3; ++level)
    {
        energy.push_back(wp_energy(corner, g));
        g.radial *= 2;
        g.angular *= 2;
        g.y_min /= 2;
    }
    const bool hs_grows = hs_b[0] < hs_b[1] && hs_b[1] < hs_b[2];
    const bool energy_grows = energy[0] < energy[1] && energy[1] < energy[2];
    r.pass = worst_hs < tol_trend && worst_a12 < tol_trend && hs_grows && energy_grows;
    r.summary = "analytic maps: Gr HS change " + fmt("%.2e", worst_hs) + ", A1^2 change " + fmt("%.2e", worst_a12) +
                "; corner map HS(b) " + fmt("%.4f", hs_b[0]) + " -> " + fmt("%.4f", hs_b[1]) + " -> " +
                fmt("%.4f", hs_b[2]) + ", energy " + fmt("%.4f", energy[0]) + " -> " + fmt("%.4f", energy[1]) + " -> " +
                fmt("%.4f", energy[2]);
    r.metrics = {{"maps", per},
                 {"tolerance", tol_trend},
                 {"corner_hs_b", hs_b},
                 {"corner_orders", {16, 32, 64}},
                 {"corner_energy", energy},
                 {"corner_hs_monotone", hs_grows},
                 {"corner_energy_monotone", energy_grows}};
    return r;
}

CriterionResult sewing(std::uint64_t seed)
{
    CriterionResult r{10, "sewing", false, {}, {}};
    const int N = 32;
    // E o E^-1
    const RiggedSphere P = fixtures::probe_left(0.1);
    const bool bit_exact = sew_caps(cut_caps(P)) == P && cut_caps(sew_caps(cut_caps(P))) == cut_caps(P);

    // sew then cut
    const SewResult sewn = sew_two(P, 0, fixtures::probe_right(), 0, N, weld_tol);
    const RiggedSphere back = cut_seam(sewn, N, weld_tol);
    const Real cut_err = invariants_distance(moduli_invariants(P), moduli_invariants(back));

    // Moebius invariance
    std::mt19937_64 rng(seed + 10);
    std::uniform_real_distribution< Real > u(-1.0, 1.0);
    Real mob_err = 0.0;
    for (int t = 0; t < 5; ++t)
    {
        Mobius m{{1.0 + 0.3 * u(rng), 0.3 * u(rng)}, {u(rng), u(rng)}, {0.1 * u(rng), 0.1 * u(rng)}, {1.0, 0.3 * u(rng)}};
        mob_err = std::max(mob_err, invariants_distance(moduli_invariants(P), moduli_invariants(apply_mobius(P, m))));
        mob_err = std::max(mob_err, invariants_distance(sewn.invariants, moduli_invariants(apply_mobius(sewn.sphere, m))));
    }

    // holomorphy probe
    const ProbeReport hol = holomorphy_probe(fixtures::probe_left, 0, fixtures::probe_right(), 0, 0.1, 0.02, N, weld_tol);
    const ProbeReport anti = holomorphy_probe([](Complex t) { return fixtures::probe_left(std::conj(t)); }, 0,
                                              fixtures::probe_right(), 0, 0.1, 0.02, N, weld_tol);
    const bool slope_ok = std::abs(hol.slope - probe_slope_target) <= probe_slope_window;
    const Real anti_min = *std::min_element(anti.residuals.begin(), anti.residuals.end());
    const bool anti_ok = anti_min > probe_floor;

    r.pass = bit_exact && cut_err < tol_sew_cut && mob_err < tol_mobius && slope_ok && anti_ok;
    r.summary = std::string("E o E^-1 bit-exact: ") + (bit_exact ? "yes" : "no") + "; sew-cut " + fmt("%.2e", cut_err) +
                "; Moebius " + fmt("%.2e", mob_err) + "; probe slope " + fmt("%.3f", hol.slope) +
                ", anti-holomorphic residual >= " + fmt("%.3e", anti_min);
    r.metrics = {{"order", N},
                 {"bit_exact", bit_exact},
                 {"sew_cut_error", cut_err},
                 {"sew_cut_tolerance", tol_sew_cut},
                 {"mobius_error", mob_err},
                 {"mobius_tolerance", tol_mobius},
                 {"weld_residual", sewn.welding.residual},
                 {"seam_winding", sewn.seam_winding},
                 {"holomorphic", io::to_json(hol)},
                 {"anti_holomorphic", io::to_json(anti)},
                 {"slope_target", probe_slope_target},
                 {"slope_window", probe_slope_window},
                 {"anti_floor", probe_floor}};
    return r;
}

const std::vector< std::function< CriterionResult(std::uint64_t) > >& table()
{
    static const std::vector< std::function< CriterionResult(std::uint64_t) > > t = {
        fourier_split, welding_identity, grunsky_vanishing, grunsky_entry, cross_route,
        operator_identities, symplectic, shale, wp_trends, sewing};
    return t;
}

const char* criterion_names[] = {"fourier-split", "welding", "grunsky-vanishing", "grunsky-entry", "cross-route",
                                 "operator-identities", "symplectomorphism", "shale-cocycle", "wp-trends", "sewing"};
} // namespace

bool SuiteReport::all_pass() const
{
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

CriterionResult run_criterion(int id, std::uint64_t seed)
{
    require(id >= 1 && id <= 10, "suite: criterion id must be in 1..10");
    try
    {
        return table()[id - 1](seed);
    }
    catch (const Error& e)
    {
        CriterionResult r{id, criterion_names[id - 1], false, std::string("error (") + to_string(e.kind()) + "): " + e.what(),
                          Json::object()};
        r.metrics["error_kind"] = to_string(e.kind());
        r.metrics["error"] = e.what();
        return r;
    }
}

SuiteReport run(std::uint64_t seed, const std::vector< int >& only)
{
    SuiteReport rep;
    rep.seed = seed;
    for (int id = 1; id <= 10; ++id)
        if (only.empty() || std::find(only.begin(), only.end(), id) != only.end())
            rep.criteria.push_back(run_criterion(id, seed));
    return rep;
}

io::Json to_json(const SuiteReport& r)
{
    Json c = Json::array();
    for (const CriterionResult& x : r.criteria)
        c.push_back({{"id", x.id}, {"name", x.name}, {"pass", x.pass}, {"summary", x.summary}, {"metrics", x.metrics}});
    return {{"seed", r.seed}, {"pass", r.all_pass()}, {"criteria", c}};
}

std::string format_line(const CriterionResult& c)
{
    return std::string(c.pass ? "PASS" : "FAIL") + " " + std::to_string(c.id) + " " + c.name + ": " + c.summary;
}
} // namespace weldlab::suite
