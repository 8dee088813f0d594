#include "vibrakit/types.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <bit>

namespace vibrakit {

DofMask DofMask::from_digits(const std::string& digits) {
    DofMask m;
    if (digits == "0") return m;
    for (char c : digits) {
        if (c < '1' || c > '6')
            throw InputError("invalid DOF mask '" + digits + "' (digits 1-6 expected)");
        m.set(c - '1');
    }
    return m;
}

int DofMask::count() const { return std::popcount(bits_); }

std::string DofMask::to_digits() const {
    if (bits_ == 0) return "0";
    std::string s;
    for (int d = 0; d < 6; ++d)
        if (has(d)) s += char('1' + d);
    return s;
}

const char* to_string(BeamTag tag) {
    switch (tag) {
        case BeamTag::bolt: return "bolt";
        case BeamTag::rail: return "rail";
        default: return "generic";
    }
}

std::optional<BeamTag> beam_tag_from_string(const std::string& s) {
    if (s == "bolt") return BeamTag::bolt;
    if (s == "rail") return BeamTag::rail;
    if (s == "generic") return BeamTag::generic;
    return std::nullopt;
}

DofMask ConstraintSet::effective_fixed(int node) const {
    DofMask fixed, released;
    for (const auto& e : spcs)
        if (e.node == node) fixed = fixed | e.fixed;
    for (const auto& e : releases)
        if (e.node == node) released = released | e.released;
    return fixed.minus(released);
}

void ConstraintSet::fix(int node, DofMask mask) {
    for (auto& e : spcs) {
        if (e.node == node) {
            e.fixed = e.fixed | mask;
            return;
        }
    }
    spcs.push_back({node, mask});
}

void ConstraintSet::release(int node, DofMask mask) {
    for (auto& e : releases) {
        if (e.node == node) {
            e.released = e.released | mask;
            return;
        }
    }
    releases.push_back({node, mask});
}

namespace {
template <class Vec, class Pred>
auto find_by(const Vec& v, Pred pred) -> const typename Vec::value_type* {
    auto it = std::find_if(v.begin(), v.end(), pred);
    return it == v.end() ? nullptr : &*it;
}
}  // namespace

const Material* Model::find_material(int id) const {
    return find_by(materials, [id](const Material& m) { return m.id == id; });
}

const NodeRec* Model::find_node(int id) const {
    return find_by(nodes, [id](const NodeRec& n) { return n.id == id; });
}

const BeamElement* Model::find_beam(int id) const {
    return find_by(beams, [id](const BeamElement& b) { return b.id == id; });
}

const ShellElement* Model::find_shell(int id) const {
    return find_by(shells, [id](const ShellElement& s) { return s.id == id; });
}

const ConstraintSet* Model::find_constraint_set(const std::string& name) const {
    return find_by(constraint_sets, [&](const ConstraintSet& c) { return c.name == name; });
}

const LoadCase* Model::find_load_case(const std::string& name) const {
    return find_by(load_cases, [&](const LoadCase& c) { return c.name == name; });
}

const BoltGroupDef* Model::find_bolt_group(const std::string& label) const {
    return find_by(bolt_groups, [&](const BoltGroupDef& g) { return g.label == label; });
}

double Model::beam_length(const BeamElement& b) const {
    const NodeRec* a = find_node(b.n1);
    const NodeRec* c = find_node(b.n2);
    if (!a || !c) return 0;
    return (c->pos - a->pos).norm();
}

double Model::shell_area(const ShellElement& s) const {
    const NodeRec* p[4];
    for (int i = 0; i < 4; ++i) {
        p[i] = find_node(s.nodes[i]);
        if (!p[i]) return 0;
    }
    // two triangles of the quad
    Eigen::Vector3d a = p[1]->pos - p[0]->pos;
    Eigen::Vector3d b = p[2]->pos - p[0]->pos;
    Eigen::Vector3d c = p[3]->pos - p[0]->pos;
    return 0.5 * (a.cross(b).norm() + b.cross(c).norm());
}

double Model::total_mass() const {
    double m = 0;
    for (const auto& b : beams) {
        const Material* mat = find_material(b.material);
        if (mat) m += mat->rho * b.section.A * beam_length(b);
    }
    for (const auto& s : shells) {
        const Material* mat = find_material(s.material);
        if (mat) m += mat->rho * s.t * shell_area(s);
    }
    for (const auto& pm : masses) m += pm.mass;
    return m;
}

}  // namespace vibrakit
