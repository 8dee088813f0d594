#pragma once

#include "vibrakit/bolts.hpp"
#include "vibrakit/modal.hpp"
#include "vibrakit/randvib.hpp"
#include "vibrakit/strength.hpp"

#include <string>
#include <vector>

namespace vibrakit {

/// %.{decimals}f via snprintf; locale-independent, deterministic.
std::string fmt_fixed(double v, int decimals);
/// Shortest decimal that round-trips the exact double (std::to_chars).
std::string fmt_shortest(double v);

/// Table-3-shaped mode listing. With exactly two results a per-mode
/// frequency delta column is appended. em_floor hides (not drops) modes
/// whose largest effective mass falls below the floor.
std::string modal_report_text(const std::vector<ModalResult>& results,
                              double em_floor = 0.0);
std::string modal_report_csv(const std::vector<ModalResult>& results);

std::string frequency_check_line(const FrequencyCheck& check);
std::string separation_line(const SeparationCheck& check, double f_article, double f_fixture);

/// Table-4-shaped margins: S_max in MPa, margins to 2 decimals, ratio to
/// one decimal; unbounded margins print as "unbounded".
std::string static_report_text(const std::vector<StaticResult>& results,
                               const SafetyFactors& factors);
std::string static_report_csv(const std::vector<StaticResult>& results,
                              const SafetyFactors& factors);

/// Single margin row for an injected S_max (margin-algebra checks).
std::string margin_row_text(const std::string& label, double s_max_pa,
                            const Material& material, const SafetyFactors& factors);

/// Table-6-shaped group shear with observed-loosening flags and a risk
/// ranking appended per case.
std::string bolt_report_text(const BoltGroupReport& report);
std::string bolt_report_csv(const BoltGroupReport& report);

/// Table-5-shaped magnification rows.
struct MagnificationRow {
    std::string channel;
    MagnificationResult result;
};
std::string magnification_report_text(const std::vector<MagnificationRow>& rows);
std::string magnification_report_csv(const std::vector<MagnificationRow>& rows);

std::string stackup_report_text(const std::vector<StackUp>& stacks,
                                const std::vector<StackUpResult>& results);
std::string stackup_report_csv(const std::vector<StackUp>& stacks,
                               const std::vector<StackUpResult>& results);

}  // namespace vibrakit
