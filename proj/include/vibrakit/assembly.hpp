#pragma once

#include "vibrakit/types.hpp"

#include <Eigen/SparseCore>
#include <map>
#include <string>
#include <vector>

namespace vibrakit {

/// Maps (node, local DOF) to equation indices. "Full" indices cover every
/// nodal DOF; "free" indices cover the reduced system after rigid-link
/// elimination and SPC removal.
class DofMap {
public:
    int full_index(int node_id, int dof) const;
    /// Free equation index, or -1 when the DOF is constrained/eliminated.
    int free_index(int node_id, int dof) const;
    int n_full() const { return int(node_ids_.size()) * 6; }
    int n_free() const { return n_free_; }
    const std::vector<int>& node_ids() const { return node_ids_; }
    /// Inverse of free_index: (node, dof) owning a free equation.
    std::pair<int, int> free_origin(int eq) const;

private:
    friend struct Assembler;
    std::vector<int> node_ids_;           // ascending
    std::map<int, int> node_order_;       // id -> position
    std::vector<int> full_to_free_;       // -1 = constrained or eliminated
    std::vector<int> free_to_full_;
    int n_free_ = 0;
};

/// Global system reduced to free DOFs. K and M are exactly symmetric by
/// construction (symmetrized storage); loads carry gravity + preload per case.
struct AssembledSystem {
    DofMap dofs;
    Eigen::SparseMatrix<double> K;       // n_free x n_free
    Eigen::SparseMatrix<double> M;       // n_free x n_free
    Eigen::SparseMatrix<double> T;       // n_full x n_free expansion
    Eigen::SparseMatrix<double> K_full;  // n_full x n_full, for reactions
    Eigen::SparseMatrix<double> M_full;
    std::string constraint_name;
    Eigen::Vector3d total_translational_mass = Eigen::Vector3d::Zero();  // of M_full
    std::vector<std::string> case_names;
    std::vector<Eigen::VectorXd> case_loads_full;  // gravity + preload, n_full
    Eigen::VectorXd preload_full;                  // preload alone, n_full

    Eigen::VectorXd reduce(const Eigen::VectorXd& full) const { return T.transpose() * full; }
    Eigen::VectorXd expand(const Eigen::VectorXd& free) const { return T * free; }
    /// Rigid-body translation of the free DOFs along axis 0..2.
    Eigen::VectorXd rigid_translation(int axis) const;
    const Eigen::VectorXd& case_load(const std::string& name) const;
};

/// Assembles K, M and per-case load vectors under one constraint set.
/// Element scatter runs in ascending element id so repeated runs are
/// bit-identical. Rigid links are imposed by master-slave elimination;
/// SPC DOFs are removed; preloads land in every load vector.
AssembledSystem assemble(const Model& model, const ConstraintSet& constraint);

}  // namespace vibrakit
