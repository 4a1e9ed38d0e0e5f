#include "isores/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace isores {

Grid::Grid(double t_min, double t_max, std::size_t n_points)
    : t_min_(t_min), t_max_(t_max), n_(n_points), step_(0.0) {
    if (!std::isfinite(t_min) || !std::isfinite(t_max) || !(t_min < t_max)) {
        throw std::invalid_argument("grid: need finite t_min < t_max");
    }
    if (n_points < min_points) {
        throw std::invalid_argument("grid: need at least " + std::to_string(min_points) + " points");
    }
    step_ = (t_max - t_min) / static_cast<double>(n_points - 1);
}

Grid Grid::symmetric(double half_width, std::size_t n_points) {
    if (!(half_width > 0.0)) {
        throw std::invalid_argument("grid: half width must be positive");
    }
    if (n_points % 2 == 0) {
        ++n_points;
    }
    return Grid(-half_width, half_width, n_points);
}

Grid Grid::symmetric_with_step(double half_width, double step) {
    if (!(step > 0.0) || !(half_width > 0.0)) {
        throw std::invalid_argument("grid: step and half width must be positive");
    }
    const auto m = static_cast<std::size_t>(std::ceil(half_width / step - 1e-9));
    return Grid(-static_cast<double>(m) * step, static_cast<double>(m) * step, 2 * m + 1);
}

double Grid::operator[](std::size_t i) const noexcept {
    // Symmetric grids are evaluated about the centre so mirrored nodes are
    // exact negatives of each other.
    if (is_symmetric() && n_ % 2 == 1) {
        const auto mid = static_cast<std::ptrdiff_t>(n_ / 2);
        return static_cast<double>(static_cast<std::ptrdiff_t>(i) - mid) * step_;
    }
    if (i + 1 == n_) {
        return t_max_;
    }
    return t_min_ + static_cast<double>(i) * step_;
}

bool Grid::is_symmetric() const noexcept { return t_min_ == -t_max_; }

std::size_t Grid::nearest(double t) const noexcept {
    const double x = std::round((t - t_min_) / step_);
    if (x <= 0.0) {
        return 0;
    }
    return std::min(static_cast<std::size_t>(x), n_ - 1);
}

std::size_t Grid::window_offset(double half_width) const {
    const double lo = -half_width;
    auto first = static_cast<std::size_t>(std::max(0.0, std::ceil((lo - t_min_) / step_ - 1e-9)));
    return std::min(first, n_ - 1);
}

Grid Grid::window(double half_width) const {
    const std::size_t first = window_offset(half_width);
    const double x = std::floor((half_width - t_min_) / step_ + 1e-9);
    const std::size_t last = x < 0.0 ? 0 : std::min(static_cast<std::size_t>(x), n_ - 1);
    if (last < first || last - first + 1 < min_points) {
        throw std::invalid_argument("grid: window holds fewer than " + std::to_string(min_points) + " nodes");
    }
    return Grid((*this)[first], (*this)[last], last - first + 1);
}

bool Grid::same_as(const Grid& other) const noexcept {
    if (n_ != other.n_) {
        return false;
    }
    const double scale = std::max(std::abs(t_max_ - t_min_), 1e-300);
    return std::abs(t_min_ - other.t_min_) <= 1e-12 * scale &&
           std::abs(t_max_ - other.t_max_) <= 1e-12 * scale;
}

}  // namespace isores
