#pragma once

#include "vibrakit/assembly.hpp"

#include <Eigen/Dense>

namespace vibrakit {

/// Solution of K u = f for one load case, kept in full coordinates.
struct StaticSolution {
    std::string case_name;
    Eigen::VectorXd u_full;          // every nodal DOF, slaves expanded, SPCs zero
    Eigen::VectorXd reactions_full;  // K_full u - f_full
    double residual = 0;             // |K u - f| / |f| on the free system
};

/// Direct sparse solve with residual check (<= 1e-10 relative).
/// A singular stiffness reports the zero-energy mode count.
StaticSolution solve_static(const AssembledSystem& system, const std::string& case_name);

/// Variant for a caller-supplied free-DOF load vector.
StaticSolution solve_static(const AssembledSystem& system, const std::string& case_name,
                            const Eigen::VectorXd& f_full);

struct ModeShape {
    double frequency_hz = 0;
    Eigen::VectorXd phi_free;  // mass-normalized: phi' M phi = 1
};

struct EigenSolution {
    std::vector<ModeShape> modes;  // ascending frequency
};

/// Generalized symmetric eigен solve K phi = (2 pi f)^2 M phi via a shifted
/// dense Cholesky reduction; returns up to n_modes finite modes ascending.
/// Massless DOFs (infinite frequencies) are dropped; a DOF with neither
/// stiffness nor mass is diagnosed before solving.
EigenSolution solve_modes(const AssembledSystem& system, int n_modes);

/// First natural frequency; convenience for templates and checks.
double first_frequency(const AssembledSystem& system);

}  // namespace vibrakit
