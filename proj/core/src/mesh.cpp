#include "radheat/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace radheat {

Mesh::Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.size() < 2)
        throw std::invalid_argument("mesh: need at least two nodes");
    if (nodes_.front() != 0.0)
        throw std::invalid_argument("mesh: first node must be exactly 0");
    if (nodes_.back() != 1.0)
        throw std::invalid_argument("mesh: last node must be exactly 1");

    widths_.resize(nodes_.size() - 1);
    for (std::size_t j = 0; j + 1 < nodes_.size(); ++j) {
        widths_[j] = nodes_[j + 1] - nodes_[j];
        if (!(widths_[j] > 0.0))
            throw std::invalid_argument("mesh: nodes must be strictly increasing");
    }
    h_max_ = *std::max_element(widths_.begin(), widths_.end());
    h_min_ = *std::min_element(widths_.begin(), widths_.end());
}

Mesh Mesh::from_nodes(std::vector<double> nodes) {
    return Mesh(std::move(nodes));
}

bool Mesh::is_uniform(double rel_tol) const {
    return h_max_ - h_min_ <= rel_tol * h_max_;
}

std::size_t Mesh::element_of(double x) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    if (it == nodes_.begin()) return 0;
    std::size_t k = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    return std::min(k, element_count() - 1);
}

void Mesh::write_nodes(std::ostream& os) const {
    char buf[40];
    for (double x : nodes_) {
        std::snprintf(buf, sizeof buf, "%.17g\n", x);
        os << buf;
    }
}

Mesh build_uniform_mesh(std::size_t m) {
    if (m < 2)
        throw std::invalid_argument("build_uniform_mesh: m must be >= 2");
    std::vector<double> nodes(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
        nodes[j] = static_cast<double>(j) / static_cast<double>(m);
    nodes[m] = 1.0;
    return Mesh::from_nodes(std::move(nodes));
}

Mesh build_graded_mesh(std::size_t m, double grading) {
    if (m < 2)
        throw std::invalid_argument("build_graded_mesh: m must be >= 2");
    if (!(grading >= 1.0))
        throw std::invalid_argument("build_graded_mesh: grading must be >= 1");
    std::vector<double> nodes(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
        nodes[j] = std::pow(static_cast<double>(j) / static_cast<double>(m), grading);
    nodes[0] = 0.0;
    nodes[m] = 1.0;
    return Mesh::from_nodes(std::move(nodes));
}

double quasi_uniformity_ratio(const Mesh& mesh) {
    // equal-width partitions report exactly 1 (widths differ by ulps only)
    if (mesh.is_uniform()) return 1.0;
    return mesh.h() / mesh.min_width();
}

} // namespace radheat
