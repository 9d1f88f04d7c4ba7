#include "radheat/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace radheat {

NodalField::NodalField(MeshPtr mesh, std::vector<double> values)
    : mesh_(std::move(mesh)), values_(std::move(values)) {
    if (!mesh_)
        throw std::invalid_argument("NodalField: null mesh");
    if (values_.size() != mesh_->free_node_count())
        throw std::invalid_argument("NodalField: values size must equal free node count");
}

NodalField NodalField::zeros(MeshPtr mesh) {
    if (!mesh)
        throw std::invalid_argument("NodalField::zeros: null mesh");
    std::vector<double> v(mesh->free_node_count(), 0.0);
    return NodalField(std::move(mesh), std::move(v));
}

double NodalField::eval(double x) const {
    x = std::clamp(x, 0.0, 1.0);
    const std::size_t k = mesh_->element_of(x);
    const double xl = mesh_->node(k);
    const double va = node_value(k);
    const double vb = node_value(k + 1);
    const double t = (x - xl) / mesh_->width(k);
    return va + t * (vb - va);
}

double NodalField::slope(std::size_t element) const {
    return (node_value(element + 1) - node_value(element)) / mesh_->width(element);
}

double NodalField::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double NodalField::max_abs_value() const {
    double m = 0.0;
    for (double v : values_) m = std::max(m, std::abs(v));
    return m;
}

} // namespace radheat
