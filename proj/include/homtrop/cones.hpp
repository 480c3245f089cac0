#ifndef HOMTROP_CONES_HPP
#define HOMTROP_CONES_HPP

#include <homtrop/exactlp.hpp>
#include <homtrop/rat.hpp>

#include <optional>
#include <string>
#include <vector>

namespace homtrop::cones {

class DimensionLimitError : public std::runtime_error {
public:
    explicit DimensionLimitError(const std::string & what) : std::runtime_error(what) {}
};

// Polyhedral cone { y : a.y >= 0 for every labelled row a }.
struct ConeH {
    int dim = 0;
    std::vector<exactlp::Row> rows; // rhs is always 0, kept for label reuse

    void add_row(std::string label, RatVector coeffs);
};

// Generator form: cone = span(lineality) + nonneg combinations of rays.
// Rays are primitive integer vectors; lineality basis vectors are primitive
// with positive leading coordinate (their sign carries no information).
struct RaySet {
    int dim = 0;
    std::vector<RatVector> rays;
    std::vector<RatVector> lineality;

    bool pointed() const { return lineality.empty(); }
};

constexpr int default_dim_limit = 16;

// Double description: complete irredundant extreme rays, with the lineality
// space split off first.
RaySet extreme_rays(const ConeH & cone, int dim_limit = default_dim_limit);

// Dual cone of an H-cone, as generators (= extreme rays of cone(A^T)).
RaySet dual_cone(const ConeH & cone, int dim_limit = default_dim_limit);

// Dual cone of a generator set, as an H-description: { z : r.z >= 0 }.
ConeH dual_cone_of_rays(const RaySet & rays);

RatVector tropical_sum(const RatVector & x, const RatVector & y);

// Smallest max-closed cone containing cone(rays): intersection of the
// Minkowski sums cone(rays) + Q_i over the sign-flipped orthants Q_i.
// Requires rays in the nonnegative orthant.
ConeH max_closure(const RaySet & rays, int dim_limit = default_dim_limit);

// Smallest max-closed convex cone containing the rays; same generator
// construction as max_closure (the conic hull is implicit in the Minkowski
// sums).
ConeH double_hull(const RaySet & rays, int dim_limit = default_dim_limit);

bool cones_equal(const ConeH & a, const ConeH & b, int dim_limit = default_dim_limit);

bool member(const ConeH & cone, const RatVector & point);

struct HullMembership {
    RatVector coefficients; // per ray, then per lineality vector (signed)
};

// Conic-combination membership; nullopt with a separating functional when
// the point is outside.
std::optional<HullMembership> member_hull(const RaySet & rays, const RatVector & point,
    RatVector * separating = nullptr);

// Fourier-Motzkin projection onto the first `keep` coordinates, with
// LP-based redundancy pruning after each elimination. Exponential in general:
// guarded by a row budget.
ConeH project_cone(const ConeH & cone, int keep, std::size_t row_budget = 20000);

std::string cone_to_json(const ConeH & cone);
std::string rayset_to_json(const RaySet & rays);

}

#endif
