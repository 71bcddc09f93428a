#pragma once

#include <cmath>
#include <vector>

#include "hadamard/geometry.hpp"
#include "hadamard/tolerance.hpp"

namespace hadamard {

// Product of n spaces of a common type with the 1/n-normalized metric
//   d(x,y) = ( sum_i d_i(x_i,y_i)^2 / n )^{1/2}.
// Geodesics act componentwise. Component instances may differ (e.g. different
// trees); the component type is fixed.
template <GeodesicSpace S>
class ProductSpace {
  public:
    using component_point = typename S::point_type;
    using point_type = std::vector<component_point>;

    explicit ProductSpace(std::vector<S> components)
        : components_(std::move(components)) {
        require(!components_.empty(), "product space needs at least one component");
    }
    // n copies of one space
    ProductSpace(std::size_t n, const S& space) : components_(n, space) {
        require(n > 0, "product space needs at least one component");
    }

    std::size_t size() const { return components_.size(); }
    const S& component(std::size_t i) const { return components_[i]; }
    const std::vector<S>& components() const { return components_; }

    void check_point(const point_type& x) const {
        require(x.size() == components_.size(),
                "product point has wrong component count");
    }

    double distance(const point_type& a, const point_type& b) const {
        check_point(a);
        check_point(b);
        double s = 0.0;
        for (std::size_t i = 0; i < components_.size(); ++i) {
            double d = components_[i].distance(a[i], b[i]);
            s += d * d;
        }
        return std::sqrt(s / static_cast<double>(components_.size()));
    }

    // sum_i d_i(a_i,b_i)^2, the unnormalized form used by shrinkage weights
    double squared_distance_sum(const point_type& a, const point_type& b) const {
        check_point(a);
        check_point(b);
        double s = 0.0;
        for (std::size_t i = 0; i < components_.size(); ++i) {
            double d = components_[i].distance(a[i], b[i]);
            s += d * d;
        }
        return s;
    }

    point_type interpolate(const point_type& a, const point_type& b, double t) const {
        require(t >= 0.0 && t <= 1.0, "t outside [0,1]");
        check_point(a);
        check_point(b);
        point_type out;
        out.reserve(components_.size());
        for (std::size_t i = 0; i < components_.size(); ++i)
            out.push_back(components_[i].interpolate(a[i], b[i], t));
        return out;
    }

    bool points_equal(const point_type& a, const point_type& b, double tol) const {
        check_point(a);
        check_point(b);
        for (std::size_t i = 0; i < components_.size(); ++i)
            if (!components_[i].points_equal(a[i], b[i], tol)) return false;
        return true;
    }

  private:
    std::vector<S> components_;
};

template <GeodesicSpace S>
double product_distance(const typename ProductSpace<S>::point_type& a,
                        const typename ProductSpace<S>::point_type& b,
                        const ProductSpace<S>& spaces) {
    return spaces.distance(a, b);
}

template <GeodesicSpace S>
typename ProductSpace<S>::point_type product_interpolate(
    const typename ProductSpace<S>::point_type& a,
    const typename ProductSpace<S>::point_type& b, double t,
    const ProductSpace<S>& spaces) {
    return spaces.interpolate(a, b, t);
}

}  // namespace hadamard
