#pragma once

#include "vibrakit/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace vibrakit {

struct BoltShearRecord {
    int element_id = 0;
    std::string load_case;
    double v1 = 0;    // N, shear components orthogonal to the bolt axis
    double v2 = 0;
    double srss = 0;  // sqrt(v1^2 + v2^2)
};

/// Overflow-safe sqrt(v1^2 + v2^2); rejects non-finite input.
double srss_shear(double v1, double v2);

BoltShearRecord make_shear_record(int element_id, const std::string& load_case,
                                  double v1, double v2);

struct GroupCaseMax {
    double max_srss = 0;
    int governing_element = 0;
};

struct BoltGroupRow {
    std::string label;
    int bolt_count = 0;
    // keyed by load case name; every queried case is present
    std::map<std::string, GroupCaseMax> per_case;
};

struct BoltGroupReport {
    std::vector<BoltGroupRow> rows;  // group declaration order
    std::vector<std::string> cases;  // column order
    // observed loosening flags: (group, case) pairs from an annotations file
    std::vector<std::pair<std::string, std::string>> observed_loosening;

    bool observed(const std::string& group, const std::string& load_case) const;
};

/// Per-group maximum SRSS shear and governing element for each case.
/// Row order follows group declaration order; a group member without a
/// record for a case is an error naming element and case.
BoltGroupReport group_max_shear(const std::vector<BoltShearRecord>& records,
                                const std::vector<BoltGroupDef>& groups,
                                const std::vector<std::string>& cases);

struct RankedGroup {
    std::string label;
    double max_srss = 0;
};

/// Groups sorted descending by max SRSS for the case; stable on ties.
/// A heuristic ranking, not an absolute loosening criterion.
std::vector<RankedGroup> rank_loosening_risk(const BoltGroupReport& report,
                                             const std::string& load_case);

/// Parses `LOOSE,<group>,<case>` annotation lines into the report.
void merge_annotations(BoltGroupReport& report, const std::string& text);

struct StackItem {
    std::string name;
    double thickness_mm = 0;
};

struct StackUp {
    std::string label;
    double bolt_length_mm = 0;      // under head
    std::vector<StackItem> stack;   // washers, insulating plates, panel...
    double helicoil_length_mm = 8.0;
    double available_depth_mm = 0;  // tapped depth
    double margin_mm = 4.0;         // required engagement beyond the helicoil, strict

    double stack_thickness_mm() const;
};

struct StackUpResult {
    std::string label;
    bool pass = false;
    double engaged_mm = 0;  // bolt length - stack thickness
    std::vector<std::string> findings;
};

/// Engaged length must strictly exceed helicoil + margin and must not
/// exceed the available tapped depth.
StackUpResult stackup_check(const StackUp& stack);

/// Stack-up file: `STACK,label,bolt_mm,helicoil_mm,margin_mm,depth_mm`
/// followed by `ITEM,label,name,thickness_mm` lines.
std::vector<StackUp> parse_stackup_file(const std::string& text);

}  // namespace vibrakit
