#ifndef WELDLAB_IO_HPP
#define WELDLAB_IO_HPP

#include "weldlab/cauchy.hpp"
#include "weldlab/grunsky.hpp"
#include "weldlab/sewing.hpp"
#include "weldlab/welding.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace weldlab::io
{
using Json = nlohmann::ordered_json;

// Malformed documents raise invalid-input errors.

Json to_json(const FourierFunction& f);
FourierFunction fourier_from_json(const Json& j);

Json to_json(const DiskSeries& s);
DiskSeries disk_series_from_json(const Json& j);

Json to_json(const CircleHomeo& h);
CircleHomeo homeo_from_json(const Json& j);

Json to_json(const PowerSeriesMap& f);
PowerSeriesMap map_from_json(const Json& j);

Json to_json(const SpherePoint& p);
SpherePoint point_from_json(const Json& j);

Json to_json(const RiggedSphere& s);
RiggedSphere sphere_from_json(const Json& j);

Json to_json(const OperatorMatrix& m);
OperatorMatrix operator_matrix_from_json(const Json& j);
Json matrix_to_json(const MatrixXcd& m);
Json complex_to_json(Complex z);

Json to_json(const WeldingResult& w);
Json to_json(const JumpResult& j);
Json to_json(const GraphCheck& g);
Json to_json(const DetLineReport& d);
Json to_json(const MapDiagnostics& d);
Json to_json(const ModuliInvariants& m);
Json to_json(const CurveSamples& c);
Json to_json(const ProbeReport& p);

/// Rows "row,col,re,im" with a header line, 17 significant digits.
void write_csv(std::ostream& out, const MatrixXcd& m);
std::string to_csv(const MatrixXcd& m);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
/// Deterministic serialization: two-space indent and a trailing newline.
std::string dump(const Json& j);
} // namespace weldlab::io

#endif // WELDLAB_IO_HPP
