#pragma once

#include "vibrakit/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vibrakit {

/// Maps fixed-width punch fields onto named values: the record line carries
/// the `first` names (up to three), continuation lines carry `cont` names
/// three per line.
struct FormatDescriptor {
    std::string kind = "ELEMENT FORCES";
    std::vector<std::string> first;
    std::vector<std::string> cont;

    int value_count() const { return int(first.size() + cont.size()); }
    int index_of(const std::string& name) const;  // -1 when absent
    void validate() const;  // unique non-empty names, 1..3 first names
};

/// Descriptor file: one field name per line under `[first]` / `[cont]`.
FormatDescriptor parse_descriptor(const std::string& text);
std::string write_descriptor(const FormatDescriptor& d);

struct PunchRecord {
    int element_id = 0;
    int subcase = 1;
    std::vector<double> values;  // descriptor order
};

struct PunchDocument {
    std::string title;
    std::string subtitle;
    std::string label;
    std::string output_kind;
    std::vector<int> subcases;  // in order of appearance
    std::vector<PunchRecord> records;
};

/// Parses punch-format text. `$`-prefixed lines are headers; a data record
/// starts with an integer element id in the first 18 columns followed by
/// 18-character real fields; `-CONT-` lines continue a record. Columns
/// beyond 80 and the trailing sequence field (73-80) are ignored.
PunchDocument parse_punch(const std::string& text, const FormatDescriptor& descriptor);

/// Canonical fixed-width emission; parse_punch(write_punch(d)) == d.
std::string write_punch(const PunchDocument& doc, const FormatDescriptor& descriptor);

struct BeamForceInput {
    int element_id = 0;
    double v1 = 0;
    double v2 = 0;
};

struct ExtractResult {
    std::vector<BeamForceInput> forces;
    std::vector<std::string> warnings;  // e.g. empty subcase
};

/// Pulls (id, V1, V2) triples for one subcase using the descriptor's two
/// shear field names.
ExtractResult extract_beam_forces(const PunchDocument& doc, int subcase,
                                  const FormatDescriptor& descriptor,
                                  const std::string& shear1_name = "shear-1",
                                  const std::string& shear2_name = "shear-2");

}  // namespace vibrakit
