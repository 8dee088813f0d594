#pragma once

#include "vibrakit/types.hpp"

#include <string>
#include <vector>

namespace vibrakit {

enum class Severity { warning, error };

struct Finding {
    Severity severity = Severity::error;
    std::string entity;   // e.g. "beam 12", "shell 3", "spcset A"
    std::string message;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool clean() const { return findings.empty(); }
    int error_count() const;
    std::string to_string() const;
};

/// Checks every structural invariant: referential integrity, positive
/// sections and thicknesses, non-degenerate quads, orientation vectors,
/// bolt-group membership, constraint-set consistency, total mass > 0.
/// Findings are data; nothing throws.
ValidationReport validate_model(const Model& model);

}  // namespace vibrakit
