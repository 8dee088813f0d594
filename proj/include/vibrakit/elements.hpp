#pragma once

#include "vibrakit/types.hpp"

#include <Eigen/Dense>

namespace vibrakit {

using Matrix12d = Eigen::Matrix<double, 12, 12>;
using Matrix24d = Eigen::Matrix<double, 24, 24>;
using Vector12d = Eigen::Matrix<double, 12, 1>;
using Vector24d = Eigen::Matrix<double, 24, 1>;

/// Local frame of a beam: rows of R are the local x (axis), y, z directions.
struct BeamFrame {
    Eigen::Matrix3d R;
    double length = 0;
};

BeamFrame beam_frame(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2,
                     const Eigen::Vector3d& orientation);

/// 3-D Euler–Bernoulli beam with axial and St-Venant torsion terms and a
/// consistent mass matrix. DOF order per node: TX,TY,TZ,RX,RY,RZ in the
/// local frame.
struct BeamMatrices {
    Matrix12d K_local;
    Matrix12d M_local;
    Matrix12d K_global;
    Matrix12d M_global;
    BeamFrame frame;
};

BeamMatrices beam_matrices(const BeamElement& element, const Material& material,
                           const Eigen::Vector3d& p1, const Eigen::Vector3d& p2);

/// Local frame of a flat shell; nodes are projected onto the mid plane.
struct ShellFrame {
    Eigen::Matrix3d R;                   // rows: local x, y, z (normal)
    Eigen::Vector3d origin;              // element centroid
    std::array<Eigen::Vector2d, 4> xy;   // projected corner coordinates
    double area = 0;
};

ShellFrame shell_frame(const std::array<Eigen::Vector3d, 4>& corners);

/// Flat 4-node shell: bilinear plane-stress membrane + discrete-Kirchhoff
/// plate bending, drilling DOF held by a small diagonal penalty
/// (drill_penalty × max bending diagonal). Consistent translational mass.
struct ShellMatrices {
    Matrix24d K_local;
    Matrix24d M_local;
    Matrix24d K_global;
    Matrix24d M_global;
    ShellFrame frame;
};

ShellMatrices shell_matrices(const ShellElement& element, const Material& material,
                             const std::array<Eigen::Vector3d, 4>& corners,
                             double drill_penalty = 1e-6);

/// Membrane strain-displacement rows (3x8) at a quad point; used for both
/// stiffness integration and centroid stress recovery.
Eigen::Matrix<double, 3, 8> membrane_b_matrix(const std::array<Eigen::Vector2d, 4>& xy,
                                              double xi, double eta, double* det_j = nullptr);

/// Plate curvature-displacement rows (3x12, DKQ) at a quad point.
Eigen::Matrix<double, 3, 12> plate_b_matrix(const std::array<Eigen::Vector2d, 4>& xy,
                                            double xi, double eta, double* det_j = nullptr);

}  // namespace vibrakit
