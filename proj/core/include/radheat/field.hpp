#pragma once

#include "radheat/mesh.hpp"

#include <span>
#include <vector>

namespace radheat {

/// Continuous piecewise-linear function on a mesh, vanishing at x = 1.
/// Stores nodal values at the free nodes x_0..x_{m-1}; the value at x_m
/// is implicitly zero.
class NodalField {
public:
    NodalField(MeshPtr mesh, std::vector<double> values);

    static NodalField zeros(MeshPtr mesh);

    const Mesh& mesh() const { return *mesh_; }
    const MeshPtr& mesh_ptr() const { return mesh_; }

    std::span<const double> values() const { return values_; }
    std::vector<double> values_copy() const { return values_; }
    std::size_t size() const { return values_.size(); }

    double operator[](std::size_t j) const { return values_[j]; }

    /// Nodal value including the pinned boundary node (j = m gives 0).
    double node_value(std::size_t j) const {
        return j < values_.size() ? values_[j] : 0.0;
    }

    /// Piecewise-linear evaluation; x is clamped to [0, 1].
    double eval(double x) const;

    /// Slope on element j (between x_j and x_{j+1}), j = 0..m-1.
    double slope(std::size_t element) const;

    double min_value() const;
    double max_abs_value() const;

private:
    MeshPtr mesh_;
    std::vector<double> values_;
};

} // namespace radheat
