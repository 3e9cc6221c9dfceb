#ifndef WELDLAB_POWER_SERIES_MAP_HPP
#define WELDLAB_POWER_SERIES_MAP_HPP

#include "weldlab/common.hpp"

#include <string>

namespace weldlab
{
enum class MapKind
{
    disk_plus, // F(z) = sum_{k>=1} a_k z^k on the unit disk
    disk_minus // G(w) = c_1 w + c_0 + sum_{k>=1} c_{-k} w^{-k} outside it
};

const char* to_string(MapKind kind);

class PowerSeriesMap
{
public:
    PowerSeriesMap();

    /// a[k] is the coefficient of z^k; a[0] must be 0.
    static PowerSeriesMap disk_plus(const VectorXcd& a);
    /// minus[k] is c_{-k} for k = 0..N (minus[0] = c_0).
    static PowerSeriesMap disk_minus(Complex c1, const VectorXcd& minus);
    static PowerSeriesMap identity_plus() { return disk_plus(VectorXcd::Unit(2, 1)); }

    MapKind kind() const { return kind_; }
    /// Highest stored power (plus) or highest negative power (minus).
    int order() const { return static_cast< int >(coeffs_.size()) - 1; }
    const VectorXcd& coeffs() const { return coeffs_; }
    Complex lead() const { return kind_ == MapKind::disk_plus ? coeffs_[1] : lead_; }
    /// Signed-power coefficient: k >= 1 on plus; k = 1, 0, -1.. on minus.
    Complex coeff(int k) const;

    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const;
    Complex second_derivative(Complex z) const;

    /// Plus: z -> F(r z) as a new series.
    PowerSeriesMap scaled(Real r) const;

    bool operator==(const PowerSeriesMap& o) const
    {
        return kind_ == o.kind_ && lead_ == o.lead_ && coeffs_ == o.coeffs_;
    }

private:
    MapKind kind_;
    Complex lead_;
    VectorXcd coeffs_;
};

struct UnivalenceReport
{
    bool simple_boundary = false;
    int derivative_winding = 0;
    Real min_derivative = 0.0;
    bool ok = false;
};

/// Necessary univalence checks on |z| = r: simple boundary polygon with m points,
/// derivative winding zero and bounded away from zero.
UnivalenceReport univalence_check(const PowerSeriesMap& f, int m = 0, Real r = 1.0);
/// Throws invalid-result if univalence_check fails.
void require_univalent(const PowerSeriesMap& f, const std::string& what);

bool polygon_is_simple(const VectorXcd& pts);
/// Winding number of the closed polygon around z.
int winding_number(const VectorXcd& pts, Complex z);
} // namespace weldlab

#endif // WELDLAB_POWER_SERIES_MAP_HPP
