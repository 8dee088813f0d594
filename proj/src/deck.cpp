#include "vibrakit/deck.hpp"

#include "vibrakit/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace vibrakit {

namespace {

// deck-unit -> SI factors
constexpr double kGPa = 1e9;
constexpr double kMPa = 1e6;
constexpr double kGcc = 1000.0;   // g/cm^3 -> kg/m^3
constexpr double kMm = 1e-3;
constexpr double kMm2 = 1e-6;
constexpr double kMm4 = 1e-12;
constexpr double kKgMm2 = 1e-6;   // kg mm^2 -> kg m^2

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

struct Parser {
    explicit Parser(const std::string& t) : text(t) {}

    const std::string& text;
    Model model;
    bool units_seen = false;

    // source lines for reference diagnostics, parallel to the model vectors
    std::vector<int> beam_lines;
    std::vector<int> shell_lines;
    std::vector<int> mass_lines;
    std::vector<int> rigid_lines;
    struct SetRef {
        int line;
        std::string set;
        int node;
    };
    std::vector<SetRef> set_refs;
    std::vector<int> group_lines;

    int line_no = 0;
    std::string card;

    [[noreturn]] void fail(const std::string& msg) const { throw DeckError(line_no, msg); }

    double num(const std::string& f, const char* what) const {
        double v = 0;
        auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (ec != std::errc() || p != f.data() + f.size())
            fail(card + ": " + what + " is not a number: '" + f + "'");
        return v;
    }

    int integer(const std::string& f, const char* what) const {
        int v = 0;
        auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (ec != std::errc() || p != f.data() + f.size())
            fail(card + ": " + what + " is not an integer: '" + f + "'");
        return v;
    }

    DofMask mask(const std::string& f) const {
        try {
            return DofMask::from_digits(f);
        } catch (const InputError& e) {
            fail(card + ": " + e.what());
        }
    }

    ConstraintSet* find_set(const std::string& name) {
        for (auto& s : model.constraint_sets)
            if (s.name == name) return &s;
        fail(card + " references undeclared set '" + name + "'");
    }

    void arity(const std::vector<std::string>& f, size_t lo, size_t hi) const {
        size_t n = f.size() - 1;  // card name excluded
        if (n < lo || n > hi) {
            std::string want = std::to_string(lo);
            if (hi != lo) want += (hi == SIZE_MAX ? "+" : "-" + std::to_string(hi));
            fail(card + ": expects " + want + " fields, got " + std::to_string(n));
        }
    }

    void run();
    void dispatch(const std::vector<std::string>& f);
    void link();
};

void Parser::run() {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        auto fields = split_fields(t);
        card = fields[0];
        if (!units_seen && card != "UNITS") fail("deck must start with a UNITS card");
        dispatch(fields);
    }
    if (!units_seen) throw DeckError(1, "deck must start with a UNITS card");
    link();
}

void Parser::dispatch(const std::vector<std::string>& f) {
    if (card == "UNITS") {
        arity(f, 3, 3);
        if (units_seen) fail("duplicate UNITS card");
        if (f[1] != "mm" || f[2] != "g" || f[3] != "N")
            fail("unsupported units '" + f[1] + "," + f[2] + "," + f[3] +
                 "' (only mm,g,N decks are accepted)");
        units_seen = true;
    } else if (card == "MAT") {
        arity(f, 6, 6);
        Material m;
        m.id = integer(f[1], "id");
        if (model.find_material(m.id)) fail("duplicate material id " + std::to_string(m.id));
        m.E = num(f[2], "E_GPa") * kGPa;
        m.nu = num(f[3], "nu");
        m.rho = num(f[4], "rho_gcc") * kGcc;
        m.f_ty = num(f[5], "Fty_MPa") * kMPa;
        m.f_tu = num(f[6], "Ftu_MPa") * kMPa;
        model.materials.push_back(m);
    } else if (card == "NODE") {
        arity(f, 4, 4);
        NodeRec n;
        n.id = integer(f[1], "id");
        if (model.find_node(n.id)) fail("duplicate node id " + std::to_string(n.id));
        n.pos = Eigen::Vector3d(num(f[2], "x"), num(f[3], "y"), num(f[4], "z")) * kMm;
        model.nodes.push_back(n);
    } else if (card == "BEAM") {
        arity(f, 11, 12);
        BeamElement b;
        b.id = integer(f[1], "id");
        if (model.find_beam(b.id) || model.find_shell(b.id))
            fail("duplicate element id " + std::to_string(b.id));
        b.material = integer(f[2], "mat");
        b.n1 = integer(f[3], "n1");
        b.n2 = integer(f[4], "n2");
        b.section.A = num(f[5], "A_mm2") * kMm2;
        b.section.Iy = num(f[6], "Iy_mm4") * kMm4;
        b.section.Iz = num(f[7], "Iz_mm4") * kMm4;
        b.section.J = num(f[8], "J_mm4") * kMm4;
        b.orientation = Eigen::Vector3d(num(f[9], "vx"), num(f[10], "vy"), num(f[11], "vz"));
        if (f.size() == 13) {
            auto tag = beam_tag_from_string(f[12]);
            if (!tag) fail("unknown beam tag '" + f[12] + "'");
            b.tag = *tag;
        }
        model.beams.push_back(b);
        beam_lines.push_back(line_no);
    } else if (card == "SHELL") {
        arity(f, 7, 7);
        ShellElement s;
        s.id = integer(f[1], "id");
        if (model.find_beam(s.id) || model.find_shell(s.id))
            fail("duplicate element id " + std::to_string(s.id));
        s.material = integer(f[2], "mat");
        for (int i = 0; i < 4; ++i) s.nodes[i] = integer(f[3 + i], "node");
        s.t = num(f[7], "t_mm") * kMm;
        model.shells.push_back(s);
        shell_lines.push_back(line_no);
    } else if (card == "MASS") {
        arity(f, 3, 6);
        if (f.size() == 5) fail("MASS: rotary inertia needs all of Ixx,Iyy,Izz");
        PointMass pm;
        pm.id = integer(f[1], "id");
        for (const auto& other : model.masses)
            if (other.id == pm.id) fail("duplicate mass id " + std::to_string(pm.id));
        pm.node = integer(f[2], "node");
        pm.mass = num(f[3], "kg");
        if (f.size() == 7)
            pm.inertia = Eigen::Vector3d(num(f[4], "Ixx"), num(f[5], "Iyy"), num(f[6], "Izz")) *
                         kKgMm2;
        model.masses.push_back(pm);
        mass_lines.push_back(line_no);
    } else if (card == "RIGID") {
        arity(f, 4, SIZE_MAX);
        RigidLink r;
        r.id = integer(f[1], "id");
        for (const auto& other : model.rigid_links)
            if (other.id == r.id) fail("duplicate rigid link id " + std::to_string(r.id));
        r.master = integer(f[2], "master");
        r.mask = mask(f[3]);
        if (r.mask.none()) fail("RIGID: empty DOF mask");
        for (size_t i = 4; i < f.size(); ++i) r.slaves.push_back(integer(f[i], "slave"));
        model.rigid_links.push_back(r);
        rigid_lines.push_back(line_no);
    } else if (card == "SPCSET") {
        arity(f, 1, 1);
        if (model.find_constraint_set(f[1])) fail("duplicate constraint set '" + f[1] + "'");
        model.constraint_sets.push_back(ConstraintSet{f[1], {}, {}, {}});
    } else if (card == "SPC") {
        arity(f, 3, 3);
        ConstraintSet* set = find_set(f[1]);
        SpcEntry e{integer(f[2], "node"), mask(f[3])};
        set->spcs.push_back(e);
        set_refs.push_back({line_no, f[1], e.node});
    } else if (card == "RELEASE") {
        arity(f, 3, 3);
        ConstraintSet* set = find_set(f[1]);
        ReleaseEntry e{integer(f[2], "node"), mask(f[3])};
        set->releases.push_back(e);
        set_refs.push_back({line_no, f[1], e.node});
    } else if (card == "PRELOAD") {
        arity(f, 5, 5);
        ConstraintSet* set = find_set(f[1]);
        PreloadEntry e;
        e.node = integer(f[2], "node");
        e.force = Eigen::Vector3d(num(f[3], "Fx"), num(f[4], "Fy"), num(f[5], "Fz"));
        set->preloads.push_back(e);
        set_refs.push_back({line_no, f[1], e.node});
    } else if (card == "ACCEL") {
        arity(f, 4, 4);
        if (model.find_load_case(f[1])) fail("duplicate load case '" + f[1] + "'");
        LoadCase c;
        c.name = f[1];
        c.accel_g = Eigen::Vector3d(num(f[2], "gx"), num(f[3], "gy"), num(f[4], "gz"));
        model.load_cases.push_back(c);
    } else if (card == "GROUP") {
        arity(f, 2, SIZE_MAX);
        if (model.find_bolt_group(f[1])) fail("duplicate bolt group '" + f[1] + "'");
        BoltGroupDef g;
        g.label = f[1];
        for (size_t i = 2; i < f.size(); ++i) g.elements.push_back(integer(f[i], "eid"));
        model.bolt_groups.push_back(g);
        group_lines.push_back(line_no);
    } else {
        fail("unknown card " + card);
    }
}

void Parser::link() {
    auto need_node = [&](int line, int id, const std::string& who) {
        if (!model.find_node(id))
            throw DeckError(line, who + " references missing node " + std::to_string(id));
    };
    auto need_material = [&](int line, int id, const std::string& who) {
        if (!model.find_material(id))
            throw DeckError(line, who + " references missing material " + std::to_string(id));
    };
    for (size_t i = 0; i < model.beams.size(); ++i) {
        const BeamElement& b = model.beams[i];
        int line = beam_lines[i];
        std::string who = "beam " + std::to_string(b.id);
        need_material(line, b.material, who);
        need_node(line, b.n1, who);
        need_node(line, b.n2, who);
    }
    for (size_t i = 0; i < model.shells.size(); ++i) {
        const ShellElement& s = model.shells[i];
        int line = shell_lines[i];
        std::string who = "shell " + std::to_string(s.id);
        need_material(line, s.material, who);
        for (int n : s.nodes) need_node(line, n, who);
    }
    for (size_t i = 0; i < model.masses.size(); ++i)
        need_node(mass_lines[i], model.masses[i].node,
                  "mass " + std::to_string(model.masses[i].id));
    for (size_t i = 0; i < model.rigid_links.size(); ++i) {
        const RigidLink& r = model.rigid_links[i];
        int line = rigid_lines[i];
        std::string who = "rigid link " + std::to_string(r.id);
        need_node(line, r.master, who);
        for (int s : r.slaves) need_node(line, s, who);
    }
    for (auto& ref : set_refs) need_node(ref.line, ref.node, "constraint set '" + ref.set + "'");
    for (size_t i = 0; i < model.bolt_groups.size(); ++i) {
        const BoltGroupDef& g = model.bolt_groups[i];
        for (int eid : g.elements)
            if (!model.find_beam(eid))
                throw DeckError(group_lines[i], "group '" + g.label +
                                                    "' references missing beam element " +
                                                    std::to_string(eid));
    }
}

}  // namespace

Model parse_deck(const std::string& text) {
    Parser p(text);
    p.run();
    return std::move(p.model);
}

Model parse_deck_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open deck file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_deck(ss.str());
}

namespace {

std::string n(double si_value, double factor = 1.0) { return fmt_shortest(si_value / factor); }

}  // namespace

std::string serialize_deck(const Model& model) {
    std::ostringstream out;
    out << "UNITS,mm,g,N\n";

    auto mats = model.materials;
    std::sort(mats.begin(), mats.end(), [](auto& a, auto& b) { return a.id < b.id; });
    for (const auto& m : mats)
        out << "MAT," << m.id << ',' << n(m.E, kGPa) << ',' << n(m.nu) << ',' << n(m.rho, kGcc)
            << ',' << n(m.f_ty, kMPa) << ',' << n(m.f_tu, kMPa) << '\n';

    auto nodes = model.nodes;
    std::sort(nodes.begin(), nodes.end(), [](auto& a, auto& b) { return a.id < b.id; });
    for (const auto& nd : nodes)
        out << "NODE," << nd.id << ',' << n(nd.pos.x(), kMm) << ',' << n(nd.pos.y(), kMm) << ','
            << n(nd.pos.z(), kMm) << '\n';

    auto beams = model.beams;
    std::sort(beams.begin(), beams.end(), [](auto& a, auto& b) { return a.id < b.id; });
    for (const auto& b : beams) {
        out << "BEAM," << b.id << ',' << b.material << ',' << b.n1 << ',' << b.n2 << ','
            << n(b.section.A, kMm2) << ',' << n(b.section.Iy, kMm4) << ',' << n(b.section.Iz, kMm4)
            << ',' << n(b.section.J, kMm4) << ',' << n(b.orientation.x()) << ','
            << n(b.orientation.y()) << ',' << n(b.orientation.z());
        if (b.tag != BeamTag::generic) out << ',' << to_string(b.tag);
        out << '\n';
    }

    auto shells = model.shells;
    std::sort(shells.begin(), shells.end(), [](auto& a, auto& b) { return a.id < b.id; });
    for (const auto& s : shells) {
        out << "SHELL," << s.id << ',' << s.material;
        for (int nd : s.nodes) out << ',' << nd;
        out << ',' << n(s.t, kMm) << '\n';
    }

    auto masses = model.masses;
    std::sort(masses.begin(), masses.end(), [](auto& a, auto& b) { return a.id < b.id; });
    for (const auto& pm : masses) {
        out << "MASS," << pm.id << ',' << pm.node << ',' << n(pm.mass);
        if (!pm.inertia.isZero())
            out << ',' << n(pm.inertia.x(), kKgMm2) << ',' << n(pm.inertia.y(), kKgMm2) << ','
                << n(pm.inertia.z(), kKgMm2);
        out << '\n';
    }

    auto rigids = model.rigid_links;
    std::sort(rigids.begin(), rigids.end(), [](auto& a, auto& b) { return a.id < b.id; });
    for (const auto& r : rigids) {
        out << "RIGID," << r.id << ',' << r.master << ',' << r.mask.to_digits();
        for (int s : r.slaves) out << ',' << s;
        out << '\n';
    }

    for (const auto& set : model.constraint_sets) {
        out << "SPCSET," << set.name << '\n';
        for (const auto& e : set.spcs)
            out << "SPC," << set.name << ',' << e.node << ',' << e.fixed.to_digits() << '\n';
        for (const auto& e : set.releases)
            out << "RELEASE," << set.name << ',' << e.node << ',' << e.released.to_digits() << '\n';
        for (const auto& e : set.preloads)
            out << "PRELOAD," << set.name << ',' << e.node << ',' << n(e.force.x()) << ','
                << n(e.force.y()) << ',' << n(e.force.z()) << '\n';
    }

    for (const auto& c : model.load_cases)
        out << "ACCEL," << c.name << ',' << n(c.accel_g.x()) << ',' << n(c.accel_g.y()) << ','
            << n(c.accel_g.z()) << '\n';

    for (const auto& g : model.bolt_groups) {
        out << "GROUP," << g.label;
        for (int e : g.elements) out << ',' << e;
        out << '\n';
    }
    return out.str();
}

}  // namespace vibrakit
