#pragma once

#include "vibrakit/solve.hpp"

#include <string>
#include <vector>

namespace vibrakit {

enum class ModeAxis { X, Y, Z, mixed, none };
const char* to_string(ModeAxis axis);

struct ModeRecord {
    int index = 0;  // 1-based
    double frequency_hz = 0;
    Eigen::Vector3d effective_mass = Eigen::Vector3d::Zero();  // kg per axis
    ModeAxis axis = ModeAxis::none;
};

struct ModalResult {
    std::string constraint_name;
    std::vector<ModeRecord> modes;  // ascending frequency
    Eigen::Vector3d total_mass = Eigen::Vector3d::Zero();  // unconstrained per axis
};

/// Normal-mode workflow: assemble under the constraint set, solve modes,
/// attach effective masses and dominant-axis classification.
ModalResult normal_modes(const Model& model, const ConstraintSet& constraint, int n_modes,
                         double dominance_threshold = 2.0);

/// Gamma^2 for a mass-normalized shape, Gamma = phi' M r.
double effective_mass(const Eigen::VectorXd& phi, const Eigen::SparseMatrix<double>& M,
                      const Eigen::VectorXd& r);

/// Argmax axis when max/second >= threshold, "mixed" otherwise (ties
/// included); all-zero input reports "none".
ModeAxis classify_mode(const Eigen::Vector3d& effective_masses, double threshold = 2.0);

struct FrequencyCheck {
    bool pass = false;
    double f1_hz = 0;
    double floor_hz = 0;
    double margin_hz = 0;  // f1 - floor
};

/// Pass iff f1 >= floor (inclusive).
FrequencyCheck check_min_frequency(const ModalResult& result, double floor_hz);

struct SeparationCheck {
    bool pass = false;
    double ratio = 0;  // f_fixture / f_article
    double min_ratio = 0;
};

SeparationCheck frequency_separation(double f_article_hz, double f_fixture_hz,
                                     double min_ratio = 2.0);

}  // namespace vibrakit
