#pragma once

// Points of CP^2 correctly separated from [0,1,-w] and [0,1,-w^2] form a
// torus pinched at [0,1,-1]. This header parametrizes it and encodes the
// condition for two of its points to be correctly separated.

#include "sicp/projective.hpp"

#include <optional>
#include <vector>

namespace sicp {

/// (sigma, phi) with sigma in (-pi, pi] and phi in (-pi/2, pi/2].
/// phi = pi/2 is the pinch; sigma is then forced to 0.
class TorusCoord {
public:
    TorusCoord(double sigma, double phi);
    double sigma() const { return sigma_; }
    double phi() const { return phi_; }
    bool is_pinch() const;

private:
    double sigma_;
    double phi_;
};

/// sqrt(2/3) (e^{i sigma} cos phi, cos(phi + 2pi/3), cos(phi + 4pi/3)) on raw angles.
CVector torus_vector(double sigma, double phi);
ProjectivePoint z_of(const TorusCoord& c);
inline ProjectivePoint z_of(double sigma, double phi) { return z_of(TorusCoord(sigma, phi)); }

/// Inverse of z_of for a point that lies on the torus. Throws if it does not.
TorusCoord torus_coord_of(const ProjectivePoint& p, double tol = default_tolerances.geometric);

/// The two base points [0,1,-w], [0,1,-w^2] and the pinch [0,1,-1].
ProjectivePoint base_point_1();
ProjectivePoint base_point_2();
ProjectivePoint pinch_point();

/// (2/3)(cos^2 t, cos^2(t + 2pi/3), cos^2(t + 4pi/3)).
std::vector<double> incircle_point(double theta);

/// The value cos(sigma - tau) forced on z[sigma, atan x] and z[tau, atan y]
/// by correct separation. nullopt when 1 + 3xy vanishes: then both points sit
/// on the circles through zero coordinates and the phases are unconstrained.
std::optional<double> separation_cos(double x, double y, double tol = 1e-12);

/// The same quantity from the trigonometric form in phi, psi. Undefined at +-pi/6.
double separation_cos_trig(double phi, double psi);

struct SigmaSet {
    bool unconstrained = false;
    std::vector<double> values;  // ascending, in (-pi, pi]
};

/// All sigma with z[sigma, phi] correctly separated from z[tau, psi].
/// Throws std::domain_error if phi or psi is the pinch.
SigmaSet sigma_solutions(double phi, double psi, double tau);

struct CurveSample {
    double sigma;
    double phi;
    int component;
};

struct SeparationCurve {
    TorusCoord anchor{0.0, 0.0};
    std::vector<CurveSample> samples;
    int components = 0;
};

/// Sweeps phi over `resolution` cell centres of (-pi/2, pi/2). Connected
/// components are found from gaps in phi (more than two grid steps); a run that
/// reaches both ends of the phi range closes up through the pinch.
SeparationCurve separation_curve(const TorusCoord& anchor, int resolution);

struct PinchVerdict {
    bool pinch_present = false;
    bool admissible = true;
    std::vector<double> admissible_phis;  // empty = no restriction from this rule
};

/// When the configuration contains [0,1,-1] along with the two base points,
/// any further correctly separated point has sin(phi) = +-1/2.
PinchVerdict pinch_rule(const Configuration& partial, double phi, double tol = default_tolerances.geometric);

/// Wrap an angle into (-pi, pi].
double wrap_pi(double a);

}  // namespace sicp
