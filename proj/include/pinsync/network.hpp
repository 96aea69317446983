#pragma once

#include <string>

#include <Eigen/Dense>

namespace pinsync {

// Undirected, nonnegatively weighted graph with its Laplacian cached at
// construction. Storage is dense; intended for node counts up to ~1e4.
//
// Laplacian convention: L_ij = A_ij for i != j, L_ii = -k_i with
// k_i = sum_j A_ij, so L annihilates homogeneous vectors (L 1 = 0) and
// diffusive coupling vanishes on synchronized states.
class Network {
public:
    // Validates the adjacency (square, symmetric, nonnegative, zero diagonal)
    // and derives the Laplacian. Throws ConfigError on violation.
    explicit Network(Eigen::MatrixXd adjacency);

    int n() const { return static_cast<int>(adjacency_.rows()); }
    const Eigen::MatrixXd& adjacency() const { return adjacency_; }
    const Eigen::MatrixXd& laplacian() const { return laplacian_; }
    const Eigen::VectorXd& degrees() const { return degrees_; }

    // Number of undirected edges (pairs i<j with A_ij > 0).
    long edge_count() const;

private:
    Eigen::MatrixXd adjacency_;
    Eigen::MatrixXd laplacian_;
    Eigen::VectorXd degrees_;
};

// Laplacian of a validated adjacency matrix. Degrees are accumulated with
// compensated summation so row sums of the result stay below 1e-15 even for
// weighted graphs.
Eigen::MatrixXd laplacian_of(const Eigen::MatrixXd& adjacency);

// Ring lattice on n >= 3 nodes where every node links with weight 1 to the
// k/2 nearest neighbors on each side (indices mod n). k must be even and
// less than n; the result is k-regular.
Network ring_lattice(int n, int k);

// Adjacency from a text edge list: one "i j [weight]" triple per line,
// whitespace- or comma-separated, weight defaulting to 1. '#' starts a
// comment. Node count is max index + 1, or min_nodes if larger.
Network load_edge_list(const std::string& path, int min_nodes = 0);

// max_i |sum_j M_ij|, accumulated with compensated summation.
double max_abs_row_sum(const Eigen::MatrixXd& m);

} // namespace pinsync
