#include "weldlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace weldlab::io
{
namespace
{
const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        fail(ErrorKind::invalid_input, std::string("json: missing field '") + key + "'");
    return j.at(key);
}

int as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        fail(ErrorKind::invalid_input, std::string("json: expected an integer for ") + what);
    return j.get< int >();
}

Real as_real(const Json& j, const char* what)
{
    if (!j.is_number())
        fail(ErrorKind::invalid_input, std::string("json: expected a number for ") + what);
    const Real v = j.get< Real >();
    if (!std::isfinite(v))
        fail(ErrorKind::invalid_input, std::string("json: non-finite value for ") + what);
    return v;
}

/// [[k, x, y], ...] -> ordered map k -> (x, y), rejecting duplicates.
std::map< int, std::pair< Real, Real > > triples(const Json& arr, const char* what)
{
    if (!arr.is_array())
        fail(ErrorKind::invalid_input, std::string("json: expected an array for ") + what);
    std::map< int, std::pair< Real, Real > > out;
    for (const Json& e : arr)
    {
        if (!e.is_array() || e.size() != 3)
            fail(ErrorKind::invalid_input, std::string("json: entries of ") + what + " must be [k, x, y]");
        const int k = as_int(e[0], what);
        if (!out.emplace(k, std::make_pair(as_real(e[1], what), as_real(e[2], what))).second)
            fail(ErrorKind::invalid_input, std::string("json: duplicate index in ") + what);
    }
    return out;
}

Json triple(int k, Complex c)
{
    return Json::array({k, c.real(), c.imag()});
}
} // namespace

Json complex_to_json(Complex z)
{
    return Json::array({z.real(), z.imag()});
}

Json to_json(const FourierFunction& f)
{
    Json c = Json::array();
    for (int n = -f.order(); n <= f.order(); ++n)
        c.push_back(triple(n, f.coeff(n)));
    return {{"N", f.order()}, {"coeffs", c}};
}

FourierFunction fourier_from_json(const Json& j)
{
    const int N = as_int(field(j, "N"), "N");
    require(N >= 0, "json: N must be nonnegative");
    FourierFunction f(N);
    for (const auto& [n, v] : triples(field(j, "coeffs"), "coeffs"))
    {
        require(std::abs(n) <= N, "json: Fourier mode exceeds N");
        f.set_coeff(n, {v.first, v.second});
    }
    return f;
}

Json to_json(const DiskSeries& s)
{
    Json c = Json::array();
    if (s.side() == Side::plus)
        for (int n = 0; n <= s.order(); ++n)
            c.push_back(triple(n, s.mode(n)));
    else
        for (int n = 1; n <= s.order(); ++n)
            c.push_back(triple(-n, s.mode(-n)));
    return {{"N", s.order()}, {"side", to_string(s.side())}, {"coeffs", c}};
}

DiskSeries disk_series_from_json(const Json& j)
{
    const int N = as_int(field(j, "N"), "N");
    require(N >= 0, "json: N must be nonnegative");
    Side side = Side::plus;
    if (j.contains("side"))
    {
        const std::string s = j.at("side").is_string() ? j.at("side").get< std::string >() : "";
        require(s == "plus" || s == "minus", "json: side must be 'plus' or 'minus'");
        side = s == "plus" ? Side::plus : Side::minus;
    }
    DiskSeries out(side, N);
    for (const auto& [n, v] : triples(field(j, "coeffs"), "coeffs"))
    {
        require(side == Side::plus ? (n >= 0 && n <= N) : (n <= -1 && n >= -N), "json: disk series mode out of range");
        out.set_mode(n, {v.first, v.second});
    }
    return out;
}

Json to_json(const CircleHomeo& h)
{
    Json c = Json::array();
    for (int k = 0; k <= h.modes(); ++k)
        c.push_back(Json::array({k, h.cos_coeffs()[k], h.sin_coeffs()[k]}));
    return {{"lift_coeffs", c}, {"grid", h.grid()}};
}

CircleHomeo homeo_from_json(const Json& j)
{
    const int grid = as_int(field(j, "grid"), "grid");
    require(grid >= 8, "json: grid must be at least 8");
    const auto t = triples(field(j, "lift_coeffs"), "lift_coeffs");
    int K = 0;
    for (const auto& [k, v] : t)
    {
        require(k >= 0, "json: lift mode must be nonnegative");
        K = std::max(K, k);
    }
    VectorXd a = VectorXd::Zero(K + 1), b = VectorXd::Zero(K + 1);
    for (const auto& [k, v] : t)
    {
        a[k] = v.first;
        b[k] = v.second;
    }
    b[0] = 0.0;
    CircleHomeo h(a, b, grid);
    try
    {
        h.check_monotone();
    }
    catch (const Error& e)
    {
        fail(ErrorKind::invalid_input, std::string("json: lift is not monotone: ") + e.what());
    }
    return h;
}

Json to_json(const PowerSeriesMap& f)
{
    Json c = Json::array();
    if (f.kind() == MapKind::disk_plus)
        for (int k = 1; k <= f.order(); ++k)
            c.push_back(triple(k, f.coeff(k)));
    else
        for (int k = 1; k >= -f.order(); --k)
            c.push_back(triple(k, f.coeff(k)));
    return {{"kind", to_string(f.kind())}, {"coeffs", c}};
}

PowerSeriesMap map_from_json(const Json& j)
{
    const Json& kj = field(j, "kind");
    const std::string kind = kj.is_string() ? kj.get< std::string >() : "";
    const auto t = triples(field(j, "coeffs"), "coeffs");
    if (kind == "disk_plus" || kind == "plus")
    {
        int K = 1;
        for (const auto& [k, v] : t)
        {
            require(k >= 0, "json: disk_plus powers must be nonnegative");
            require(k >= 1 || (v.first == 0 && v.second == 0), "json: disk_plus map must vanish at 0");
            K = std::max(K, k);
        }
        VectorXcd a = VectorXcd::Zero(K + 1);
        for (const auto& [k, v] : t)
            a[k] = {v.first, v.second};
        return PowerSeriesMap::disk_plus(a);
    }
    if (kind == "disk_minus" || kind == "minus")
    {
        int K = 0;
        Complex c1 = 0.0;
        for (const auto& [k, v] : t)
        {
            require(k <= 1, "json: disk_minus powers must be at most 1");
            if (k == 1)
                c1 = {v.first, v.second};
            else
                K = std::max(K, -k);
        }
        VectorXcd m = VectorXcd::Zero(K + 1);
        for (const auto& [k, v] : t)
            if (k <= 0)
                m[-k] = {v.first, v.second};
        return PowerSeriesMap::disk_minus(c1, m);
    }
    fail(ErrorKind::invalid_input, "json: kind must be 'disk_plus' or 'disk_minus'");
}

Json to_json(const SpherePoint& p)
{
    if (p.infinite)
        return "inf";
    return complex_to_json(p.z);
}

SpherePoint point_from_json(const Json& j)
{
    if (j.is_string() && (j.get< std::string >() == "inf" || j.get< std::string >() == "infinity"))
        return SpherePoint::infinity();
    if (j.is_array() && j.size() == 2)
        return SpherePoint::finite({as_real(j[0], "puncture"), as_real(j[1], "puncture")});
    if (j.is_number())
        return SpherePoint::finite(as_real(j, "puncture"));
    fail(ErrorKind::invalid_input, "json: puncture must be [re, im], a number or \"inf\"");
}

Json to_json(const RiggedSphere& s)
{
    Json p = Json::array(), r = Json::array();
    for (const SpherePoint& q : s.punctures)
        p.push_back(to_json(q));
    for (const PowerSeriesMap& f : s.riggings)
        r.push_back(to_json(f));
    return {{"punctures", p}, {"riggings", r}, {"model", to_string(s.model)}};
}

RiggedSphere sphere_from_json(const Json& j)
{
    RiggedSphere s;
    const Json& p = field(j, "punctures");
    const Json& r = field(j, "riggings");
    require(p.is_array() && r.is_array() && p.size() == r.size(), "json: punctures and riggings must be arrays of equal length");
    for (const Json& q : p)
        s.punctures.push_back(point_from_json(q));
    for (const Json& f : r)
    {
        PowerSeriesMap m = map_from_json(f);
        require(m.kind() == MapKind::disk_plus, "json: riggings must be disk_plus maps");
        s.riggings.push_back(m);
    }
    const std::string model = j.contains("model") && j.at("model").is_string() ? j.at("model").get< std::string >() : "puncture";
    require(model == "puncture" || model == "border", "json: model must be 'puncture' or 'border'");
    s.model = model == "puncture" ? SurfaceModel::puncture : SurfaceModel::border;
    s.validate();
    return s;
}

Json matrix_to_json(const MatrixXcd& m)
{
    Json e = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            e.push_back(Json::array({r, c, m(r, c).real(), m(r, c).imag()}));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

Json to_json(const OperatorMatrix& m)
{
    Json j = matrix_to_json(m.entries);
    j["row_basis"] = {{"kind", m.rows.kind}, {"modes", m.rows.modes}};
    j["col_basis"] = {{"kind", m.cols.kind}, {"modes", m.cols.modes}};
    j["order"] = m.order;
    return j;
}

OperatorMatrix operator_matrix_from_json(const Json& j)
{
    OperatorMatrix m;
    const int rows = as_int(field(j, "rows"), "rows");
    const int cols = as_int(field(j, "cols"), "cols");
    require(rows >= 0 && cols >= 0, "json: negative matrix size");
    m.entries = MatrixXcd::Zero(rows, cols);
    for (const Json& e : field(j, "entries"))
    {
        require(e.is_array() && e.size() == 4, "json: matrix entries must be [row, col, re, im]");
        const int r = as_int(e[0], "row"), c = as_int(e[1], "col");
        require(r >= 0 && r < rows && c >= 0 && c < cols, "json: matrix index out of range");
        m.entries(r, c) = {as_real(e[2], "re"), as_real(e[3], "im")};
    }
    const Json& rb = field(j, "row_basis");
    const Json& cb = field(j, "col_basis");
    m.rows.kind = field(rb, "kind").get< std::string >();
    m.rows.modes = field(rb, "modes").get< std::vector< int > >();
    m.cols.kind = field(cb, "kind").get< std::string >();
    m.cols.modes = field(cb, "modes").get< std::vector< int > >();
    m.order = as_int(field(j, "order"), "order");
    m.validate();
    return m;
}

Json to_json(const WeldingResult& w)
{
    return {{"F", to_json(w.F)}, {"G", to_json(w.G)}, {"residual", w.residual}, {"iterations", w.iterations}, {"grid", w.grid}};
}

Json to_json(const JumpResult& j)
{
    Json reg = Json::array();
    for (Eigen::Index k = 0; k < j.regular.size(); ++k)
        reg.push_back(triple(static_cast< int >(k), j.regular[k]));
    return {{"order", j.order},
            {"plus", to_json(j.plus)},
            {"minus", to_json(j.minus)},
            {"regular", reg},
            {"condition", j.condition},
            {"rho_plus", j.rho_plus},
            {"rho_minus", j.rho_minus}};
}

Json to_json(const GraphCheck& g)
{
    return {{"id_residual", g.id_residual}, {"graph_residual", g.graph_residual}};
}

Json to_json(const DetLineReport& d)
{
    return {{"dim_kernel", d.dim_kernel},
            {"dim_cokernel", d.dim_cokernel},
            {"index", d.index},
            {"rank_tol", d.rank_tol},
            {"fiber_residual", d.fiber_residual},
            {"singular_values", d.singular_values}};
}

Json to_json(const MapDiagnostics& d)
{
    Json phi = Json::array();
    for (Eigen::Index k = 0; k < d.phi_series.size(); ++k)
        phi.push_back(triple(static_cast< int >(k), d.phi_series[k]));
    return {{"a1inf_norm", d.a1inf_norm},
            {"a12_norm", d.a12_norm},
            {"a12_norm_coarse", d.a12_norm_coarse},
            {"a12_relative_change", d.a12_relative_change},
            {"fprime0", complex_to_json(d.fprime0)},
            {"phi_series", phi}};
}

Json to_json(const ModuliInvariants& m)
{
    Json cr = Json::array(), pts = Json::array(), jets = Json::array();
    for (const Complex& c : m.cross_ratios)
        cr.push_back(complex_to_json(c));
    for (const SpherePoint& p : m.points)
        pts.push_back(to_json(p));
    for (const VectorXcd& v : m.jets)
    {
        Json row = Json::array();
        for (Eigen::Index k = 0; k < v.size(); ++k)
            row.push_back(triple(static_cast< int >(k) + 1, v[k]));
        jets.push_back(row);
    }
    return {{"cross_ratios", cr}, {"points", pts}, {"rigging_jets", jets}};
}

Json to_json(const CurveSamples& c)
{
    Json pts = Json::array();
    for (Eigen::Index k = 0; k < c.points.size(); ++k)
        pts.push_back(Json::array({c.params[k], c.points[k].real(), c.points[k].imag()}));
    return {{"radius", c.radius}, {"closed", c.closed}, {"simple", c.simple}, {"points", pts}};
}

Json to_json(const ProbeReport& p)
{
    Json vals = Json::array();
    for (const Complex& c : p.values)
        vals.push_back(complex_to_json(c));
    return {{"steps", p.steps}, {"cr_residuals", p.residuals}, {"values", vals}, {"slope", p.slope}};
}

void write_csv(std::ostream& out, const MatrixXcd& m)
{
    out << "row,col,re,im\n";
    char buf[128];
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
        {
            std::snprintf(buf, sizeof buf, "%ld,%ld,%.17g,%.17g\n", static_cast< long >(r), static_cast< long >(c),
                          m(r, c).real(), m(r, c).imag());
            out << buf;
        }
}

std::string to_csv(const MatrixXcd& m)
{
    std::ostringstream s;
    write_csv(s, m);
    return s.str();
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::invalid_input, "cannot open input file: " + path);
    try
    {
        return Json::parse(in);
    }
    catch (const nlohmann::json::exception& e)
    {
        fail(ErrorKind::invalid_input, "malformed JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrorKind::invalid_input, "cannot open output file: " + path);
    out << text;
    if (!out)
        fail(ErrorKind::internal, "failed writing output file: " + path);
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}
} // namespace weldlab::io
