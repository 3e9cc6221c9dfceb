#include "weldlab/cauchy.hpp"
#include "weldlab/grunsky.hpp"
#include "weldlab/io.hpp"
#include "weldlab/sewing.hpp"
#include "weldlab/suite.hpp"
#include "weldlab/welding.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

using namespace weldlab;
using io::Json;

namespace
{
struct RunConfig
{
    std::string command;
    int order = 16;
    Real tol = 1e-8;
    int grid = 0;
    std::uint64_t seed = 7;
    std::string out;
    std::string csv;
    std::string route = "coeff";
    std::string map, homeo, boundary, sphere, left, right;
    std::size_t i = 0, j = 0;
    std::vector< int > only;
};

void emit(const RunConfig& cfg, const Json& doc)
{
    const std::string text = io::dump(doc);
    if (cfg.out.empty())
        std::cout << text;
    else
        io::write_text_file(cfg.out, text);
}

/// Interior maps fed to the Cauchy machinery must be univalent on the closed disk.
PowerSeriesMap read_univalent_map(const std::string& path)
{
    const PowerSeriesMap F = io::map_from_json(io::read_json_file(path));
    require(F.kind() == MapKind::disk_plus, "expected a disk_plus map in " + path);
    if (!univalence_check(F).ok)
        fail(ErrorKind::invalid_input, "map in " + path + " is not univalent on the closed disk");
    return F;
}

Json header(const RunConfig& cfg, Json config)
{
    config["command"] = cfg.command;
    return {{"program", "weldlab"}, {"config", config}};
}

int cmd_weld(const RunConfig& cfg)
{
    const CircleHomeo h = io::homeo_from_json(io::read_json_file(cfg.homeo));
    require(cfg.order >= 1 && cfg.tol > 0, "weld: need --order >= 1 and --tol > 0");
    WeldOptions opts;
    opts.grid = cfg.grid;
    const WeldingResult w = weld(h, cfg.order, cfg.tol, opts);
    Json doc = header(cfg, {{"homeo", cfg.homeo}, {"order", cfg.order}, {"tol", cfg.tol}, {"grid", cfg.grid}});
    doc["result"] = io::to_json(w);
    emit(cfg, doc);
    return 0;
}

int cmd_grunsky(const RunConfig& cfg)
{
    const PowerSeriesMap F = read_univalent_map(cfg.map);
    require(cfg.order >= 1, "grunsky: need --order >= 1");
    require(cfg.route == "coeff" || cfg.route == "proj" || cfg.route == "both", "grunsky: --route must be coeff, proj or both");
    Json doc = header(cfg, {{"map", cfg.map}, {"order", cfg.order}, {"route", cfg.route}});
    const bool coeff = cfg.route != "proj";
    const bool proj = cfg.route != "coeff";
    OperatorMatrix mc, mp;
    if (coeff)
    {
        mc = grunsky_matrix_coeff(F, cfg.order);
        doc["coeff"] = io::to_json(mc);
        doc["coeff_hs_norm"] = hs_norm(mc);
        if (!cfg.csv.empty())
            io::write_text_file(cfg.csv + ".coeff.csv", io::to_csv(mc.entries));
    }
    if (proj)
    {
        mp = grunsky_matrix_proj(F, cfg.order);
        doc["proj"] = io::to_json(mp);
        doc["proj_hs_norm"] = hs_norm(mp);
        if (!cfg.csv.empty())
            io::write_text_file(cfg.csv + ".proj.csv", io::to_csv(mp.entries));
    }
    if (coeff && proj)
        doc["route_difference_frobenius"] = hs_norm(mc.entries - mp.entries);
    emit(cfg, doc);
    return 0;
}

int cmd_jump(const RunConfig& cfg)
{
    const PowerSeriesMap F = read_univalent_map(cfg.map);
    const FourierFunction h = io::fourier_from_json(io::read_json_file(cfg.boundary));
    require(cfg.order >= 1, "jump: need --order >= 1");
    JumpOptions opts;
    opts.quadrature = cfg.grid;
    const JumpResult j = jump_decompose(F, {h}, cfg.order, opts);
    Json doc = header(cfg, {{"map", cfg.map}, {"boundary", cfg.boundary}, {"order", cfg.order}, {"grid", cfg.grid}});
    doc["result"] = io::to_json(j);
    const FourierFunction back = reconstruct_boundary(j);
    const FourierFunction hN = h.resized(cfg.order);
    Real err = 0.0;
    for (int n = -cfg.order; n <= cfg.order; ++n)
        err = std::max(err, std::abs(back.coeff(n) - hN.coeff(n)));
    doc["reconstruction_error"] = err;
    emit(cfg, doc);
    return 0;
}

int cmd_sew(const RunConfig& cfg)
{
    const RiggedSphere S1 = io::sphere_from_json(io::read_json_file(cfg.left));
    const RiggedSphere S2 = io::sphere_from_json(io::read_json_file(cfg.right));
    require(cfg.order >= 1 && cfg.tol > 0, "sew: need --order >= 1 and --tol > 0");
    const SewResult r = sew_two(S1, cfg.i, S2, cfg.j, cfg.order, cfg.tol);
    Json doc = header(cfg, {{"left", cfg.left}, {"i", cfg.i}, {"right", cfg.right}, {"j", cfg.j}, {"order", cfg.order},
                            {"tol", cfg.tol}});
    doc["sphere"] = io::to_json(r.sphere);
    doc["invariants"] = io::to_json(r.invariants);
    doc["welding"] = io::to_json(r.welding);
    doc["seam_winding"] = r.seam_winding;
    doc["sewing_homeo"] = io::to_json(r.homeo);
    emit(cfg, doc);
    return 0;
}

int cmd_periods(const RunConfig& cfg)
{
    const RiggedSphere S = io::sphere_from_json(io::read_json_file(cfg.sphere));
    require(cfg.order >= 1, "periods: need --order >= 1");
    const OperatorMatrix M = multi_grunsky(S, cfg.order);
    const Real norm = operator_norm(M.entries);
    Json doc = header(cfg, {{"sphere", cfg.sphere}, {"order", cfg.order}});
    doc["matrix"] = io::to_json(M);
    doc["spectral_norm"] = norm;
    doc["hs_norm"] = hs_norm(M);
    doc["symmetry_defect"] = hs_norm(M.entries - M.entries.transpose());
    doc["below_one"] = norm < 1.0 + 1e-9;
    if (!cfg.csv.empty())
        io::write_text_file(cfg.csv, io::to_csv(M.entries));
    emit(cfg, doc);
    return 0;
}

int cmd_diag(const RunConfig& cfg)
{
    const PowerSeriesMap F = io::map_from_json(io::read_json_file(cfg.map));
    require(cfg.order >= 1, "diag: need --order >= 1");
    DiagnosticsGrid grid;
    if (cfg.grid > 0)
        grid.angular = cfg.grid;
    Json doc = header(cfg, {{"map", cfg.map}, {"order", cfg.order}, {"grid", cfg.grid}});
    const UnivalenceReport u = univalence_check(F);
    doc["univalence"] = {{"ok", u.ok}, {"simple_boundary", u.simple_boundary}, {"derivative_winding", u.derivative_winding},
                         {"min_derivative", u.min_derivative}};
    if (!u.ok)
        fail(ErrorKind::invalid_input, "diag: map is not univalent on the closed disk");
    if (F.kind() == MapKind::disk_plus)
    {
        doc["diagnostics"] = io::to_json(map_diagnostics(F, grid));
        const OperatorMatrix gr = grunsky_matrix_coeff(F, cfg.order);
        doc["grunsky_hs_norm"] = hs_norm(gr);
        doc["grunsky_max_abs"] = gr.entries.cwiseAbs().maxCoeff();
        doc["pi"] = io::to_json(pi_report(F, cfg.order));
        doc["graph"] = io::to_json(graph_subspace_check(F, cfg.order));
        doc["wp_kahler_potential"] = wp_kahler_potential(F, cfg.order);
    }
    emit(cfg, doc);
    return 0;
}

int cmd_suite(const RunConfig& cfg)
{
    const suite::SuiteReport rep = suite::run(cfg.seed, cfg.only);
    Json doc = header(cfg, {{"seed", cfg.seed}, {"only", cfg.only}});
    doc["report"] = suite::to_json(rep);
    emit(cfg, doc);
    for (const auto& c : rep.criteria)
        std::cerr << suite::format_line(c) << "\n";
    return 0;
}
} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"weldlab: conformal welding, Grunsky operators and sewing of rigged spheres"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool with_tol) {
        sub->add_option("--order", cfg.order, "truncation order N")->check(CLI::PositiveNumber);
        if (with_tol)
            sub->add_option("--tol", cfg.tol, "residual tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out, "output file (default stdout)");
    };

    auto* weld_cmd = app.add_subcommand("weld", "solve the welding problem for a circle homeomorphism");
    weld_cmd->add_option("--homeo", cfg.homeo, "CircleHomeo JSON")->required();
    weld_cmd->add_option("--grid", cfg.grid, "collocation points (0: automatic)")->check(CLI::NonNegativeNumber);
    common(weld_cmd, true);

    auto* gr_cmd = app.add_subcommand("grunsky", "Grunsky matrix of an interior map");
    gr_cmd->add_option("--map", cfg.map, "PowerSeriesMap JSON")->required();
    gr_cmd->add_option("--route", cfg.route, "coeff, proj or both")->check(CLI::IsMember({"coeff", "proj", "both"}));
    gr_cmd->add_option("--csv", cfg.csv, "CSV prefix for the matrices");
    common(gr_cmd, false);

    auto* jump_cmd = app.add_subcommand("jump", "jump decomposition of a boundary function");
    jump_cmd->add_option("--map", cfg.map, "PowerSeriesMap JSON")->required();
    jump_cmd->add_option("--boundary", cfg.boundary, "FourierFunction JSON (pullback to the circle)")->required();
    jump_cmd->add_option("--grid", cfg.grid, "curve quadrature nodes (0: automatic)")->check(CLI::NonNegativeNumber);
    common(jump_cmd, false);

    auto* sew_cmd = app.add_subcommand("sew", "sew two rigged spheres");
    sew_cmd->add_option("--left", cfg.left, "RiggedSphere JSON")->required();
    sew_cmd->add_option("--i", cfg.i, "boundary index on the left sphere");
    sew_cmd->add_option("--right", cfg.right, "RiggedSphere JSON")->required();
    sew_cmd->add_option("--j", cfg.j, "boundary index on the right sphere");
    common(sew_cmd, true);

    auto* per_cmd = app.add_subcommand("periods", "block Grunsky matrix of a rigged sphere");
    per_cmd->add_option("--sphere", cfg.sphere, "RiggedSphere JSON")->required();
    per_cmd->add_option("--csv", cfg.csv, "CSV file for the matrix");
    common(per_cmd, false);

    auto* diag_cmd = app.add_subcommand("diag", "diagnostics of a map");
    diag_cmd->add_option("--map", cfg.map, "PowerSeriesMap JSON")->required();
    diag_cmd->add_option("--grid", cfg.grid, "angular quadrature nodes (0: default)")->check(CLI::NonNegativeNumber);
    common(diag_cmd, false);

    auto* suite_cmd = app.add_subcommand("suite", "run the acceptance suite");
    suite_cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
    suite_cmd->add_option("--only", cfg.only, "criterion ids to run")->check(CLI::Range(1, 10));
    suite_cmd->add_option("--out", cfg.out, "output file (default stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try
    {
        cfg.command = app.get_subcommands().front()->get_name();
        if (cfg.command == "weld")
            return cmd_weld(cfg);
        if (cfg.command == "grunsky")
            return cmd_grunsky(cfg);
        if (cfg.command == "jump")
            return cmd_jump(cfg);
        if (cfg.command == "sew")
            return cmd_sew(cfg);
        if (cfg.command == "periods")
            return cmd_periods(cfg);
        if (cfg.command == "diag")
            return cmd_diag(cfg);
        return cmd_suite(cfg);
    }
    catch (const Error& e)
    {
        std::cerr << "weldlab: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e.kind());
    }
    catch (const nlohmann::json::exception& e)
    {
        std::cerr << "weldlab: invalid-input: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "weldlab: internal: " << e.what() << "\n";
        return 4;
    }
}
