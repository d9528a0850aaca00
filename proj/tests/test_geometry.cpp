#include <doctest.h>

#include <cmath>
#include <limits>
#include <memory>
#include <vector>

#include "pbwos/geometry.hpp"
#include "pbwos/rng.hpp"

using namespace pbwos;

namespace {

// Random point inside `domain`, at most max_depth from the boundary.
Vec3 random_interior_point(const Domain& domain, RngStream& rng, double max_depth) {
    while (true) {
        const Vec3 p{20.0 * rng.uniform() - 10.0, 20.0 * rng.uniform() - 10.0,
                     20.0 * rng.uniform() - 10.0};
        if (domain.contains(p) && domain.distance_to_boundary(p) <= max_depth) return p;
    }
}

std::vector<std::unique_ptr<Domain>> all_domains() {
    std::vector<std::unique_ptr<Domain>> ds;
    ds.push_back(make_domain("half_space"));
    ds.push_back(make_domain("slab", 1.0));
    ds.push_back(make_domain("cylinder", 1.0));
    ds.push_back(make_domain("sphere", 1.0));
    return ds;
}

}  // namespace

TEST_CASE("half space: basic queries") {
    HalfSpace hs;
    CHECK(hs.contains({0.0, 0.0, 0.5}));
    CHECK_FALSE(hs.contains({0.0, 0.0, 0.0}));
    CHECK_FALSE(hs.contains({0.0, 0.0, -0.5}));
    CHECK(hs.distance_to_boundary({3.0, -2.0, 0.5}) == 0.5);
    CHECK(hs.nearest_boundary_point({3.0, -2.0, 0.5}) == Vec3{3.0, -2.0, 0.0});
    CHECK(hs.boundary_value({7.0, 1.0, 0.0}) == 1.0);
    CHECK(hs.is_open());
}

TEST_CASE("slab: distance, nearest point and plate values") {
    Slab slab(1.0);
    CHECK(slab.distance_to_boundary({0.3, -5.0, 0.25}) == 0.75);
    CHECK(slab.nearest_boundary_point({0.3, -5.0, 0.25}) == Vec3{0.3, -5.0, 1.0});
    CHECK(slab.nearest_boundary_point({2.0, 3.0, -0.4}) == Vec3{2.0, 3.0, -1.0});
    // Midplane tie resolves to the top plate.
    CHECK(slab.nearest_boundary_point({0.0, 0.0, 0.0}) == Vec3{0.0, 0.0, 1.0});
    CHECK(slab.boundary_value({9.0, 9.0, 1.0}) == 1.0);
    CHECK(slab.boundary_value({9.0, 9.0, -1.0}) == 1.0);
    CHECK_FALSE(slab.is_open());

    Slab biased(2.0, 1.0, 0.25);
    CHECK(biased.boundary_value({0.0, 0.0, 2.0}) == 1.0);
    CHECK(biased.boundary_value({0.0, 0.0, -2.0}) == 0.25);
}

TEST_CASE("cylinder exterior: distance ignores z") {
    CylinderExterior cyl(1.0);
    CHECK(cyl.distance_to_boundary({3.0, 4.0, 17.0}) == 4.0);
    const Vec3 b = cyl.nearest_boundary_point({3.0, 4.0, 17.0});
    CHECK(b.x == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(b.y == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(b.z == 17.0);
    CHECK(cyl.is_open());
    CHECK_FALSE(cyl.contains({0.5, 0.5, 0.0}));
}

TEST_CASE("sphere exterior: distance and projection") {
    SphereExterior sph(1.0);
    CHECK(sph.distance_to_boundary({0.0, 0.0, 2.0}) == 1.0);
    CHECK(sph.nearest_boundary_point({0.0, 0.0, 2.0}) == Vec3{0.0, 0.0, 1.0});
    CHECK(sph.boundary_value(sph.project({3.0, 0.0, 4.0})) == 1.0);
    CHECK(sph.is_open());
    CHECK_FALSE(sph.contains({0.2, 0.2, 0.2}));
}

TEST_CASE("interior preconditions are enforced") {
    SphereExterior sph(1.0);
    CHECK_THROWS_AS(sph.distance_to_boundary({0.0, 0.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(sph.distance_to_boundary({0.0, 0.0, 0.5}), std::domain_error);
    CHECK_THROWS_AS(sph.nearest_boundary_point({0.0, 0.0, 0.2}), std::domain_error);
    CHECK_THROWS_AS(sph.boundary_value({0.0, 0.0, 2.0}), std::domain_error);

    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(sph.signed_distance({inf, 0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(sph.contains({0.0, nan, 0.0}), std::domain_error);
}

TEST_CASE("constructor and factory validation") {
    CHECK_THROWS_AS(Slab(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Slab(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(CylinderExterior(0.0), std::invalid_argument);
    CHECK_THROWS_AS(SphereExterior(-2.0), std::invalid_argument);
    CHECK_THROWS_AS(make_domain("torus", 1.0), std::invalid_argument);
    CHECK(make_domain("half_space")->describe() == "half_space");
    CHECK(make_domain("slab", 2.5)->describe() == "slab L=2.5");
    CHECK(make_domain("cylinder", 3.0)->describe() == "cylinder R=3");
    CHECK(make_domain("sphere", 0.5)->describe() == "sphere R=0.5");
}

TEST_CASE("largest empty ball: the reported distance is achievable") {
    RngStream rng(12345, 0);
    for (const auto& domain : all_domains()) {
        for (int i = 0; i < 2000; ++i) {
            const Vec3 p = random_interior_point(*domain, rng, 8.0);
            const double d = domain->distance_to_boundary(p);

            // The nearest boundary point realizes the distance and sits on the boundary.
            const Vec3 b = domain->nearest_boundary_point(p);
            CHECK(distance(p, b) == doctest::Approx(d).epsilon(1e-12));
            CHECK(std::abs(domain->signed_distance(b)) <= kBoundaryTol);

            // Every direction at radius d*(1 - 1e-9) stays inside the domain.
            for (int k = 0; k < 64; ++k) {
                const Vec3 q = p + (d * (1.0 - 1e-9)) * sample_unit_sphere(rng);
                CHECK(domain->signed_distance(q) >= 0.0);
            }
        }
    }
}

TEST_CASE("translation invariance along the unbounded directions") {
    HalfSpace hs;
    Slab slab(1.5);
    CylinderExterior cyl(2.0);
    const Vec3 p{0.4, -0.7, 0.9};
    CHECK(hs.distance_to_boundary(p) == hs.distance_to_boundary(p + Vec3{100.0, -40.0, 0.0}));
    CHECK(slab.distance_to_boundary(p) == slab.distance_to_boundary(p + Vec3{-3.0, 55.0, 0.0}));
    const Vec3 q{2.0, 2.0, 0.0};
    CHECK(cyl.distance_to_boundary(q) == cyl.distance_to_boundary(q + Vec3{0.0, 0.0, 1e6}));
}
