#pragma once

#include "vibrakit/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace vibrakit {

/// Piecewise power-law input spectrum: straight segments in log-log space.
struct PsdProfile {
    std::vector<std::pair<double, double>> breakpoints;  // (Hz, G^2/Hz) ascending

    void validate() const;  // strictly increasing f > 0, PSD > 0
    double f_min() const { return breakpoints.front().first; }
    double f_max() const { return breakpoints.back().first; }
};

/// Sampled measurement channel; PSD may touch zero.
struct PsdCurve {
    std::string channel;
    std::vector<std::pair<double, double>> samples;  // (Hz, G^2/Hz) ascending

    void validate() const;
    /// Linear interpolation between samples; out-of-range is an error.
    double value_at(double f) const;
};

/// Log-log interpolation: P(f) = P1 (f/f1)^m, m = ln(P2/P1)/ln(f2/f1).
double psd_at(const PsdProfile& profile, double f);

/// Exact per-segment power-law integral; Grms = sqrt(sum of areas).
double grms(const PsdProfile& profile);

/// sqrt((pi/2) f_n Q PSD(f_n)) — SDOF random response estimate.
double miles_acceleration(double f_n, double q, const PsdProfile& profile);

/// 3-sigma peak design acceleration.
double three_sigma(double rms);

struct Peak {
    double frequency = 0;
    double psd = 0;
};

/// Sample of maximum PSD within the band; ties go to the lowest frequency.
Peak find_peak(const PsdCurve& curve, double band_lo, double band_hi);

struct MagnificationResult {
    double peak_frequency = 0;
    double sensor_psd = 0;
    double reference_psd = 0;
    double magnification = 0;  // PSD ratio at the peak
};

/// Peak of the sensor in band over the reference interpolated at the same
/// frequency. Reference below `reference_floor` is an error.
MagnificationResult response_magnification(const PsdCurve& sensor, const PsdCurve& reference,
                                           double band_lo, double band_hi,
                                           double reference_floor = 1e-12);

/// 2-column CSV (frequency Hz, PSD G^2/Hz), `#` comments allowed.
std::vector<std::pair<double, double>> parse_psd_csv(const std::string& text);
PsdProfile parse_psd_profile(const std::string& text);
PsdCurve parse_psd_curve(const std::string& text, const std::string& channel = "");

}  // namespace vibrakit
