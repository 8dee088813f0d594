#pragma once

#include "vibrakit/recovery.hpp"

#include <limits>
#include <string>
#include <vector>

namespace vibrakit {

struct SafetyFactors {
    double fs_yield = 1.5;
    double fs_ultimate = 2.0;
    double ratio_limit = 0.30;  // S_max / F_tu must stay strictly below
};

struct Margins {
    double ms_yield = std::numeric_limits<double>::infinity();
    double ms_ultimate = std::numeric_limits<double>::infinity();
    bool unbounded = false;  // zero applied stress
};

/// MS_ty = F_ty / (S_max FS_yield) - 1, MS_tu = F_tu / (S_max FS_ultimate) - 1.
Margins margin_of_safety(double s_max, const Material& material,
                         const SafetyFactors& factors = {});

struct RatioCheck {
    double ratio = 0;  // S_max / F_tu
    bool pass = false; // strict: ratio < limit
};

RatioCheck stress_ratio_check(double s_max, double f_tu, double limit = 0.30);

enum class StressSurface { shell_top, shell_bottom, beam_fiber };
const char* to_string(StressSurface s);

struct MaxStress {
    double value = 0;  // Pa, von Mises (shells) or fiber stress (beams)
    int element_id = 0;
    StressSurface surface = StressSurface::shell_top;
};

/// Global maximum over all recovered stresses; ties go to the lowest
/// element id (surface order: top, bottom, fiber within an element).
MaxStress max_von_mises(const std::vector<ShellStress>& shells,
                        const std::vector<std::pair<int, double>>& beam_fiber);

struct StaticResult {
    std::string case_name;
    StaticSolution solution;
    std::vector<ShellStress> shell_stresses;
    std::vector<BeamEndForces> beam_forces;
    MaxStress s_max;
    Margins margins;
    RatioCheck ratio;
    Material governing_material;  // owner of the S_max element
};

/// assemble -> solve_static -> recover every element -> locate S_max ->
/// margins from the material owning the governing element.
StaticResult run_static_case(const Model& model, const ConstraintSet& constraint,
                             const LoadCase& load_case, const SafetyFactors& factors = {});

/// Same, reusing a prebuilt system (repeated cases under one constraint).
StaticResult run_static_case(const Model& model, const AssembledSystem& system,
                             const LoadCase& load_case, const SafetyFactors& factors = {});

}  // namespace vibrakit
