#pragma once

#include <algorithm>
#include <memory>
#include <string>

#include "pbwos/vec3.hpp"

namespace pbwos {

/// Absolute distance tolerance for deciding that a point sits on the boundary.
inline constexpr double kBoundaryTol = 1e-9;

/// A domain with Dirichlet data on its boundary.
///
/// Concrete geometries expose the whole shape through four queries:
/// an inside test, the distance to the boundary, the nearest boundary
/// point, and the prescribed potential on the boundary. The random walk
/// never sees anything else. Instances are immutable after construction
/// and safe for concurrent reads.
class Domain {
public:
    virtual ~Domain() = default;

    /// True when p lies strictly inside the domain.
    bool contains(const Vec3& p) const { return signed_distance(p) > 0.0; }

    /// Distance from p to the boundary; defined only for strictly interior
    /// points. Throws std::domain_error for points on or outside the boundary.
    double distance_to_boundary(const Vec3& p) const;

    /// Point on the boundary closest to the strictly interior point p.
    /// Throws std::domain_error for points on or outside the boundary.
    Vec3 nearest_boundary_point(const Vec3& p) const;

    /// Prescribed potential at a boundary point b. Throws std::domain_error
    /// when b is farther than kBoundaryTol from the boundary.
    double boundary_value(const Vec3& b) const;

    /// Signed distance to the boundary: positive inside, zero on the
    /// boundary, negative outside. No interior precondition.
    double signed_distance(const Vec3& p) const;

    /// Nearest boundary point without the interior precondition. Defined for
    /// any finite p except degenerate axis/center points of exterior domains.
    Vec3 project(const Vec3& p) const;

    /// True when a walker can diffuse arbitrarily far from the boundary
    /// (the supremum of distance_to_boundary over the domain is infinite).
    virtual bool is_open() const = 0;

    /// Short parameter summary, e.g. "slab L=1".
    virtual std::string describe() const = 0;

protected:
    virtual double sdf(const Vec3& p) const = 0;
    virtual Vec3 project_impl(const Vec3& p) const = 0;
    virtual double value_on_boundary(const Vec3& b) const = 0;
};

/// Region z > 0 bounded by the plane z = 0 (charged flat plate).
class HalfSpace final : public Domain {
public:
    explicit HalfSpace(double psi0 = 1.0) : psi0_(psi0) {}

    bool is_open() const override { return true; }
    std::string describe() const override;

protected:
    double sdf(const Vec3& p) const override { return p.z; }
    Vec3 project_impl(const Vec3& p) const override { return {p.x, p.y, 0.0}; }
    double value_on_boundary(const Vec3&) const override { return psi0_; }

private:
    double psi0_;
};

/// Region |z| < L between two parallel plates at z = +L and z = -L.
class Slab final : public Domain {
public:
    explicit Slab(double half_width, double psi_top = 1.0, double psi_bottom = 1.0);

    double half_width() const { return half_width_; }
    bool is_open() const override { return false; }
    std::string describe() const override;

protected:
    double sdf(const Vec3& p) const override { return std::min(half_width_ - p.z, p.z + half_width_); }
    // Ties at the exact midplane resolve toward the z = +L plate.
    Vec3 project_impl(const Vec3& p) const override {
        return {p.x, p.y, p.z >= 0.0 ? half_width_ : -half_width_};
    }
    double value_on_boundary(const Vec3& b) const override { return b.z >= 0.0 ? psi_top_ : psi_bottom_; }

private:
    double half_width_;
    double psi_top_;
    double psi_bottom_;
};

/// Region sqrt(x^2+y^2) > R outside an infinite cylinder along the z-axis.
class CylinderExterior final : public Domain {
public:
    explicit CylinderExterior(double radius, double psi0 = 1.0);

    double radius() const { return radius_; }
    bool is_open() const override { return true; }
    std::string describe() const override;

protected:
    double sdf(const Vec3& p) const override { return p.norm_xy() - radius_; }
    Vec3 project_impl(const Vec3& p) const override;
    double value_on_boundary(const Vec3&) const override { return psi0_; }

private:
    double radius_;
    double psi0_;
};

/// Region |p| > R outside a sphere centered at the origin.
class SphereExterior final : public Domain {
public:
    explicit SphereExterior(double radius, double psi0 = 1.0);

    double radius() const { return radius_; }
    bool is_open() const override { return true; }
    std::string describe() const override;

protected:
    double sdf(const Vec3& p) const override { return p.norm() - radius_; }
    Vec3 project_impl(const Vec3& p) const override;
    double value_on_boundary(const Vec3&) const override { return psi0_; }

private:
    double radius_;
    double psi0_;
};

/// Builds one of the named benchmark geometries: "half_space", "slab",
/// "cylinder" or "sphere". `param` is the slab half-width L or the
/// cylinder/sphere radius R; it is ignored for the half space.
std::unique_ptr<Domain> make_domain(const std::string& name, double param = 1.0);

}  // namespace pbwos
