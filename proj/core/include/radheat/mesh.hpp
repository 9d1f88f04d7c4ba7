#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <vector>

namespace radheat {

/// Spatial partition of [0,1] with nodes x_0 = 0 < x_1 < ... < x_m = 1.
///
/// The right endpoint x_m carries the homogeneous Dirichlet condition and
/// holds no unknown; all matrix and vector indexing runs over the free
/// nodes x_0..x_{m-1}. Meshes are immutable after construction.
class Mesh {
public:
    /// Build from an explicit ascending node list {0, ..., 1}.
    /// Throws std::invalid_argument if the list is not a valid partition.
    static Mesh from_nodes(std::vector<double> nodes);

    const std::vector<double>& nodes() const { return nodes_; }
    /// Element widths h_j = x_j - x_{j-1}, j = 1..m (stored 0-based).
    const std::vector<double>& widths() const { return widths_; }

    /// Number of elements; also the number of free nodes.
    std::size_t element_count() const { return widths_.size(); }
    std::size_t free_node_count() const { return widths_.size(); }

    double node(std::size_t j) const { return nodes_[j]; }
    double width(std::size_t j) const { return widths_[j]; }

    /// Granularity h = max_j h_j.
    double h() const { return h_max_; }
    double min_width() const { return h_min_; }

    bool is_uniform(double rel_tol = 1e-12) const;

    /// Index k of the element (x_{k}, x_{k+1}] containing x, clamped to [0, m-1].
    std::size_t element_of(double x) const;

    /// One node coordinate per line.
    void write_nodes(std::ostream& os) const;

private:
    explicit Mesh(std::vector<double> nodes);

    std::vector<double> nodes_;
    std::vector<double> widths_;
    double h_max_ = 0.0;
    double h_min_ = 0.0;
};

using MeshPtr = std::shared_ptr<const Mesh>;

/// Uniform partition x_j = j/m. Requires m >= 2.
Mesh build_uniform_mesh(std::size_t m);

/// Power-law graded partition x_j = (j/m)^grading. Requires m >= 2 and
/// grading >= 1; grading = 1 reduces to the uniform mesh.
Mesh build_graded_mesh(std::size_t m, double grading);

/// beta = max_j h_j / min_j h_j >= 1.
double quasi_uniformity_ratio(const Mesh& mesh);

inline MeshPtr make_uniform_mesh(std::size_t m) {
    return std::make_shared<const Mesh>(build_uniform_mesh(m));
}
inline MeshPtr make_graded_mesh(std::size_t m, double grading) {
    return std::make_shared<const Mesh>(build_graded_mesh(m, grading));
}

} // namespace radheat
