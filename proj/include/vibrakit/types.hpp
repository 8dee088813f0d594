#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vibrakit {

inline constexpr double kGravity = 9.80665;  // m/s^2 per G

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed deck / fixture / descriptor input. CLI exit code 2.
struct InputError : Error {
    using Error::Error;
};

/// Assembly or solver failure (singular system, bad constraints). CLI exit code 3.
struct SolveError : Error {
    using Error::Error;
};

/// Set of nodal degrees of freedom: TX,TY,TZ,RX,RY,RZ as bits 0..5.
class DofMask {
public:
    DofMask() = default;
    explicit DofMask(std::uint8_t bits) : bits_(bits & 0x3f) {}

    /// Parses digit notation, e.g. "123456" fixes all six DOFs.
    static DofMask from_digits(const std::string& digits);

    static DofMask all() { return DofMask(0x3f); }
    static DofMask translations() { return DofMask(0x07); }

    bool has(int dof) const { return (bits_ >> dof) & 1; }
    void set(int dof) { bits_ |= std::uint8_t(1u << dof); }
    void clear(int dof) { bits_ &= std::uint8_t(~(1u << dof)); }
    bool none() const { return bits_ == 0; }
    int count() const;
    std::uint8_t bits() const { return bits_; }

    DofMask operator&(DofMask o) const { return DofMask(std::uint8_t(bits_ & o.bits_)); }
    DofMask operator|(DofMask o) const { return DofMask(std::uint8_t(bits_ | o.bits_)); }
    /// DOFs in *this not present in o.
    DofMask minus(DofMask o) const { return DofMask(std::uint8_t(bits_ & ~o.bits_)); }
    bool operator==(const DofMask&) const = default;

    /// Digit notation, e.g. "123456"; empty mask renders as "0".
    std::string to_digits() const;

private:
    std::uint8_t bits_ = 0;
};

struct Material {
    int id = 0;
    double E = 0;     // Pa
    double nu = 0;
    double rho = 0;   // kg/m^3
    double f_ty = 0;  // Pa
    double f_tu = 0;  // Pa
};

struct NodeRec {
    int id = 0;
    Eigen::Vector3d pos = Eigen::Vector3d::Zero();  // m
};

struct BeamSection {
    double A = 0;   // m^2
    double Iy = 0;  // m^4
    double Iz = 0;  // m^4
    double J = 0;   // m^4
};

enum class BeamTag { generic, bolt, rail };

const char* to_string(BeamTag tag);
std::optional<BeamTag> beam_tag_from_string(const std::string& s);

struct BeamElement {
    int id = 0;
    int material = 0;
    int n1 = 0;
    int n2 = 0;
    BeamSection section;
    Eigen::Vector3d orientation = Eigen::Vector3d::UnitY();  // local y hint
    BeamTag tag = BeamTag::generic;
};

struct ShellElement {
    int id = 0;
    int material = 0;
    std::array<int, 4> nodes{};  // counter-clockwise quad
    double t = 0;                // m
};

struct PointMass {
    int id = 0;
    int node = 0;
    double mass = 0;                                     // kg
    Eigen::Vector3d inertia = Eigen::Vector3d::Zero();   // kg m^2 about global axes
};

struct RigidLink {
    int id = 0;
    int master = 0;
    DofMask mask;  // slave DOFs tied to the master
    std::vector<int> slaves;
};

struct SpcEntry {
    int node = 0;
    DofMask fixed;
};

struct ReleaseEntry {
    int node = 0;
    DofMask released;
};

struct PreloadEntry {
    int node = 0;
    Eigen::Vector3d force = Eigen::Vector3d::Zero();  // N
};

struct ConstraintSet {
    std::string name;
    std::vector<SpcEntry> spcs;
    std::vector<ReleaseEntry> releases;  // override earlier SPC masks of this set
    std::vector<PreloadEntry> preloads;

    /// Fixed DOFs for a node after release overrides.
    DofMask effective_fixed(int node) const;
    /// Adds an entry, or widens the mask of an existing entry for the node.
    void fix(int node, DofMask mask);
    void release(int node, DofMask mask);
};

struct LoadCase {
    std::string name;
    Eigen::Vector3d accel_g = Eigen::Vector3d::Zero();  // G units
};

struct BoltGroupDef {
    std::string label;
    std::vector<int> elements;  // beam element ids, all bolt-tagged
};

/// Complete analyzable structure. Plain data; immutable once parsed —
/// every analysis operation is a pure function of a const Model.
struct Model {
    std::vector<Material> materials;
    std::vector<NodeRec> nodes;
    std::vector<BeamElement> beams;
    std::vector<ShellElement> shells;
    std::vector<PointMass> masses;
    std::vector<RigidLink> rigid_links;
    std::vector<ConstraintSet> constraint_sets;  // declaration order
    std::vector<LoadCase> load_cases;            // declaration order
    std::vector<BoltGroupDef> bolt_groups;       // declaration order

    const Material* find_material(int id) const;
    const NodeRec* find_node(int id) const;
    const BeamElement* find_beam(int id) const;
    const ShellElement* find_shell(int id) const;
    const ConstraintSet* find_constraint_set(const std::string& name) const;
    const LoadCase* find_load_case(const std::string& name) const;
    const BoltGroupDef* find_bolt_group(const std::string& label) const;

    double beam_length(const BeamElement& b) const;
    double shell_area(const ShellElement& s) const;

    /// Structural + point mass in kg.
    double total_mass() const;
};

}  // namespace vibrakit
