#include "pbwos/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace pbwos {

namespace {

void require_finite(const Vec3& p) {
    if (!p.finite()) throw std::domain_error("geometry: point has non-finite components");
}

std::string format_param(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return buf;
}

}  // namespace

double Domain::signed_distance(const Vec3& p) const {
    require_finite(p);
    return sdf(p);
}

double Domain::distance_to_boundary(const Vec3& p) const {
    const double d = signed_distance(p);
    if (d <= 0.0) throw std::domain_error("geometry: walker position is on or outside the boundary");
    return d;
}

Vec3 Domain::nearest_boundary_point(const Vec3& p) const {
    if (signed_distance(p) <= 0.0)
        throw std::domain_error("geometry: walker position is on or outside the boundary");
    return project_impl(p);
}

Vec3 Domain::project(const Vec3& p) const {
    require_finite(p);
    return project_impl(p);
}

double Domain::boundary_value(const Vec3& b) const {
    if (std::abs(signed_distance(b)) > kBoundaryTol)
        throw std::domain_error("geometry: point is not on the boundary");
    return value_on_boundary(b);
}

std::string HalfSpace::describe() const { return "half_space"; }

Slab::Slab(double half_width, double psi_top, double psi_bottom)
    : half_width_(half_width), psi_top_(psi_top), psi_bottom_(psi_bottom) {
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::invalid_argument("slab: half-width must be positive");
}

std::string Slab::describe() const { return "slab L=" + format_param("%.9g", half_width_); }

CylinderExterior::CylinderExterior(double radius, double psi0) : radius_(radius), psi0_(psi0) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("cylinder: radius must be positive");
}

Vec3 CylinderExterior::project_impl(const Vec3& p) const {
    const double rho = p.norm_xy();
    if (rho == 0.0) return {radius_, 0.0, p.z};  // degenerate axis point
    const double s = radius_ / rho;
    return {s * p.x, s * p.y, p.z};
}

std::string CylinderExterior::describe() const { return "cylinder R=" + format_param("%.9g", radius_); }

SphereExterior::SphereExterior(double radius, double psi0) : radius_(radius), psi0_(psi0) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw std::invalid_argument("sphere: radius must be positive");
}

Vec3 SphereExterior::project_impl(const Vec3& p) const {
    const double r = p.norm();
    if (r == 0.0) return {0.0, 0.0, radius_};  // degenerate center point
    const double s = radius_ / r;
    return {s * p.x, s * p.y, s * p.z};
}

std::string SphereExterior::describe() const { return "sphere R=" + format_param("%.9g", radius_); }

std::unique_ptr<Domain> make_domain(const std::string& name, double param) {
    if (name == "half_space") return std::make_unique<HalfSpace>();
    if (name == "slab") return std::make_unique<Slab>(param);
    if (name == "cylinder") return std::make_unique<CylinderExterior>(param);
    if (name == "sphere") return std::make_unique<SphereExterior>(param);
    throw std::invalid_argument("unknown geometry: " + name);
}

}  // namespace pbwos
