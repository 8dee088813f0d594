#pragma once

#include "vibrakit/types.hpp"

namespace vibrakit {

/// Simplified-panel bookkeeping: a flat plate of the given planform area
/// and thickness carrying the real structure + mounted component mass via
/// a dummy density.
struct PanelEquivalent {
    double real_mass = 0;       // kg, structure alone
    double component_mass = 0;  // kg, mounted equipment
    double area = 0;            // m^2
    double thickness = 0;       // m
    double density = 0;         // kg/m^3

    double total_mass() const { return real_mass + component_mass; }
    /// density * area * thickness must reproduce the total mass within 0.5%.
    bool mass_consistent(double tolerance = 0.005) const;
};

/// total_mass / volume; rejects non-positive input.
double equivalent_density(double total_mass, double volume);

PanelEquivalent make_panel_equivalent(double real_mass, double component_mass,
                                      double area, double thickness);

/// Single-panel model whose shells share one adjustable material: setting a
/// trial thickness co-adjusts the density so the panel mass stays constant.
struct PlateTemplate {
    Model model;
    std::string constraint_name;
    double held_mass = 0;  // kg, target panel + component mass
    double area = 0;       // m^2, planform

    /// Copy of the model with every shell at thickness t and the shared
    /// material's density set to held_mass / (area * t).
    Model with_thickness(double t) const;
    /// First natural frequency at thickness t under the template constraint.
    double f1_at(double t) const;
};

PlateTemplate make_plate_template(const Model& model, const std::string& constraint_name,
                                  double held_mass);

/// Bisection on thickness until |f1(t) - target| <= tolerance. The target
/// must be bracketed by f1 at the bounds; f1 grows with t at constant mass.
double match_equivalent_thickness(const PlateTemplate& tmpl, double target_f1_hz,
                                  double t_lower, double t_upper, double tolerance_hz,
                                  int max_iterations = 80);

}  // namespace vibrakit
