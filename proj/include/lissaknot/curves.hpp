#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lissaknot/exact_angle.hpp"
#include "lissaknot/tolerance.hpp"

namespace lissaknot {
namespace curves {

// K(t) = (cos(nx t + phx), cos(ny t + phy), cos(nz t + phz)), t in [0, 2pi).
struct LissajousParams {
    int nx = 0, ny = 0, nz = 0;
    ExactAngle phx, phy, phz;
};

struct ValidationResult {
    bool valid = true;
    std::string reason; // empty when valid
};

// Singularity test: frequencies must be pairwise coprime, and after the time
// shift that clears phz the shifted phases must avoid
//   phx' = k pi/nz,   phy' = k pi/nz,   phx' = (nx/ny) phy' + k pi/ny.
// All three conditions are decided exactly on ExactAngle arithmetic.
ValidationResult validate_params(const LissajousParams& p);

enum class PointKind { TypeI, TypeII };

// A double point of the x-y projection.  TypeI pairs satisfy the frequency-nx
// difference condition, TypeII the frequency-ny one; (k, j) are the integer
// indices of the closed form, t1 < t2 the exact parameter times.
struct DoublePoint {
    PointKind kind = PointKind::TypeI;
    long long k = 0, j = 0;
    ExactAngle t1, t2;
    double x = 0, y = 0;
};

// Exact double point enumeration from the closed forms.  Result is sorted by
// t1.  Throws DegenerateProjection on boundary ties, coincident positions
// (within 1e-7) or coincident visit times.
std::vector<DoublePoint> double_points(int nx, int ny, const ExactAngle& phx,
                                       const ExactAngle& phy);

// Independent numeric double point finder: dense sampling, close-approach
// detection and 2D Newton refinement to 1e-10.  Returns (t1, t2) pairs with
// t1 < t2, sorted by t1.
std::vector<std::pair<long double, long double>>
double_points_oracle(int nx, int ny, long double phx, long double phy, int grid_size);

enum class OverAt { T1, T2 };

struct CrossingSite {
    DoublePoint dp;
    OverAt over = OverAt::T1; // which visit carries the larger z
    int sign = 0;             // +1 right-handed, -1 left-handed
};

// sign[(x'(t1) y'(t2) - x'(t2) y'(t1)) * (z(t1) - z(t2))], evaluated in long
// double.  Either factor below the crossing margin raises SingularCrossing.
int crossing_sign(const LissajousParams& p, const DoublePoint& dp);

struct Visit {
    int site = 0;       // index into Traversal::sites
    bool second = false; // false: the t1 visit, true: the t2 visit
};

struct Traversal {
    std::vector<CrossingSite> sites; // sorted by t1
    std::vector<Visit> order;        // all 2C visits sorted by time
};

// Decorate every double point with over/under and sign and lay the visits out
// in time order.
Traversal build_crossings(const LissajousParams& p);

// ---- the nx = 2, phx = 0, ny = 2m+1, phy = 1/2 twist family ----

// Parameters of the family member; nz defaults to 6m+7 with
// phz = (nz - 3 pi)/(4m + 2).
LissajousParams twist_params(int m);
LissajousParams twist_params(int m, int nz);

struct FamilyPhases {
    // z-phases in (0, pi) at which some crossing degenerates, ascending.
    std::vector<ExactAngle> singular;
    // phz = 0 or pi additionally degenerates the middle band of TypeII
    // crossings, so the open interval endpoints are excluded too.
    bool endpoints_singular = true;
};

// The 2m+2 singular z-phases of the family (2m+1 TypeI values plus pi/2).
FamilyPhases family_singular_phases(int m, int nz);

struct PhaseInterval {
    ExactAngle lo, hi, mid;
};

// The 2m+3 maximal safe open intervals of (0, pi), each with its midpoint
// representative.
std::vector<PhaseInterval> family_phase_intervals(int m, int nz);

// Structure of the family diagram used by the half-plane handedness checks.
// Returns human-readable violation descriptions; empty means every rule holds.
std::vector<std::string> family_claims_check(int m, const Traversal& tr);

// ---- symmetry ----

struct SymmetryReport {
    bool all_odd = false;
    int even_axis = -1; // 0/1/2 when exactly one frequency is even, else -1
    // all frequencies odd: K(t + pi) = -K(t)
    bool amphicheiral_identity = false;
    // one even frequency: that coordinate is fixed and the other two negate
    // under t -> t + pi
    bool two_periodic_identity = false;
    long double max_deviation = 0;
    std::optional<int> axis_winding; // winding of the two odd coordinates
};

// Sampled verification (1000 points, tolerance 1e-9) of the period-shift
// symmetry, plus the winding number about the rotation axis when one
// frequency is even.
SymmetryReport symmetry_check(const LissajousParams& p);

// ---- the zero-phase half-period arc t in [0, pi] ----

struct ArcDoublePoint {
    PointKind kind = PointKind::TypeI;
    long long k = 0, j = 0;
    ExactAngle t1, t2; // 0 < t1 < t2 < pi, pure pi-rational
    double x = 0, y = 0;
};

// Self-intersections of (cos nx t, cos ny t), t in [0, pi]; there are exactly
// (nx-1)(ny-1)/2.  Sorted in braid-reading order: y descending, ties by x
// ascending.
std::vector<ArcDoublePoint> arc_double_points(int nx, int ny);

} // namespace curves
} // namespace lissaknot
