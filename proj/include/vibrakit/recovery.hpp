#pragma once

#include "vibrakit/assembly.hpp"
#include "vibrakit/solve.hpp"

namespace vibrakit {

/// Forces exerted on a beam element at each end, in the element's local
/// frame (x axial). Sum of end forces plus the applied element load is zero.
struct BeamEndForces {
    int element_id = 0;
    // per end: [N axial, V1 shear-y, V2 shear-z, T torque, M1 moment-y, M2 moment-z]
    Eigen::Matrix<double, 6, 1> end_a = Eigen::Matrix<double, 6, 1>::Zero();
    Eigen::Matrix<double, 6, 1> end_b = Eigen::Matrix<double, 6, 1>::Zero();

    double srss_a() const { return std::hypot(end_a(1), end_a(2)); }
    double srss_b() const { return std::hypot(end_b(1), end_b(2)); }
};

/// Plane-stress state at the element centroid, top and bottom surfaces.
struct ShellStress {
    int element_id = 0;
    // sigma_x, sigma_y, tau_xy in Pa
    Eigen::Vector3d top = Eigen::Vector3d::Zero();
    Eigen::Vector3d bottom = Eigen::Vector3d::Zero();

    static double von_mises(const Eigen::Vector3d& s);
    double von_mises_top() const { return von_mises(top); }
    double von_mises_bottom() const { return von_mises(bottom); }
};

/// Local end forces via K_e(local) u_e(local) minus the consistent body
/// load of the case (zero case name = no body load).
BeamEndForces recover_beam_end_forces(const Model& model, const AssembledSystem& system,
                                      const StaticSolution& solution, int element_id);

ShellStress recover_shell_stress(const Model& model, const AssembledSystem& system,
                                 const StaticSolution& solution, int element_id);

/// Extreme-fiber normal stress |N/A| + |M| c / I with a circular-equivalent
/// fiber distance c = sqrt(A/pi); used only for the S_max search.
double beam_fiber_stress(const BeamEndForces& forces, const BeamSection& section);

}  // namespace vibrakit
