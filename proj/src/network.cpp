#include "pinsync/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "pinsync/errors.hpp"

namespace pinsync {

namespace {

// Neumaier compensated summation; keeps Laplacian row sums at the
// correctly-rounded level instead of accumulating one ulp per entry.
double compensated_sum(const double* values, long count) {
    double sum = 0.0;
    double comp = 0.0;
    for (long i = 0; i < count; ++i) {
        const double v = values[i];
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

void validate_adjacency(const Eigen::MatrixXd& a) {
    if (a.rows() != a.cols())
        throw ConfigError("adjacency matrix must be square");
    const long n = a.rows();
    for (long i = 0; i < n; ++i) {
        if (a(i, i) != 0.0)
            throw ConfigError("adjacency diagonal must be zero (node " + std::to_string(i) + ")");
        for (long j = 0; j < n; ++j) {
            const double w = a(i, j);
            if (!std::isfinite(w))
                throw ConfigError("adjacency entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not finite");
            if (w < 0.0)
                throw ConfigError("adjacency entry (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is negative");
            if (a(i, j) != a(j, i))
                throw ConfigError("adjacency matrix must be symmetric; entry (" + std::to_string(i) +
                                  "," + std::to_string(j) + ") differs from its transpose");
        }
    }
}

} // namespace

Eigen::MatrixXd laplacian_of(const Eigen::MatrixXd& adjacency) {
    validate_adjacency(adjacency);
    const long n = adjacency.rows();
    Eigen::MatrixXd lap = adjacency;
    for (long i = 0; i < n; ++i) {
        // Row of a column-major matrix is strided; copy for the compensated pass.
        Eigen::VectorXd row = adjacency.row(i);
        lap(i, i) = -compensated_sum(row.data(), n);
    }
    return lap;
}

Network::Network(Eigen::MatrixXd adjacency) : adjacency_(std::move(adjacency)) {
    laplacian_ = laplacian_of(adjacency_);
    degrees_ = -laplacian_.diagonal();
}

long Network::edge_count() const {
    long count = 0;
    const int nn = n();
    for (int i = 0; i < nn; ++i)
        for (int j = i + 1; j < nn; ++j)
            if (adjacency_(i, j) > 0.0)
                ++count;
    return count;
}

Network ring_lattice(int n, int k) {
    if (n < 3)
        throw ConfigError("ring_lattice: need at least 3 nodes, got " + std::to_string(n));
    if (k < 0 || k % 2 != 0)
        throw ConfigError("ring_lattice: coordination number must be even and nonnegative, got " +
                          std::to_string(k));
    if (k >= n)
        throw ConfigError("ring_lattice: coordination number " + std::to_string(k) +
                          " must be smaller than the node count " + std::to_string(n));
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int d = 1; d <= k / 2; ++d) {
            const int j = (i + d) % n;
            a(i, j) = 1.0;
            a(j, i) = 1.0;
        }
    }
    return Network(a);
}

Network load_edge_list(const std::string& path, int min_nodes) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open edge list file: " + path);

    struct Edge {
        int i, j;
        double w;
    };
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    int max_index = -1;

    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        for (char& c : line)
            if (c == ',')
                c = ' ';
        std::istringstream ls(line);
        long i = 0, j = 0;
        if (!(ls >> i))
            continue; // blank or comment-only line
        double w = 1.0;
        if (!(ls >> j))
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'i j [weight]'");
        if (ls >> w) {
            std::string rest;
            if (ls >> rest)
                throw ConfigError(path + ":" + std::to_string(lineno) + ": trailing tokens after weight");
        }
        if (i < 0 || j < 0)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": negative node index");
        if (i == j)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": self-loops are not allowed");
        if (!std::isfinite(w) || w < 0.0)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": weight must be finite and >= 0");
        const std::pair<int, int> key{static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j))};
        if (!seen.insert(key).second)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": duplicate edge " +
                              std::to_string(key.first) + "-" + std::to_string(key.second));
        edges.push_back({static_cast<int>(i), static_cast<int>(j), w});
        max_index = std::max(max_index, key.second);
    }
    if (edges.empty() && min_nodes <= 0)
        throw ConfigError(path + ": no edges found");

    const int n = std::max(max_index + 1, min_nodes);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : edges) {
        a(e.i, e.j) = e.w;
        a(e.j, e.i) = e.w;
    }
    return Network(a);
}

double max_abs_row_sum(const Eigen::MatrixXd& m) {
    double worst = 0.0;
    for (long i = 0; i < m.rows(); ++i) {
        Eigen::VectorXd row = m.row(i);
        worst = std::max(worst, std::abs(compensated_sum(row.data(), m.cols())));
    }
    return worst;
}

} // namespace pinsync
