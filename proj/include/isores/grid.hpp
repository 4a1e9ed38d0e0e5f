#pragma once

#include <cstddef>

namespace isores {

// Uniform sampling of a finite interval [t_min, t_max] with n_points nodes,
// both ends included.
class Grid {
public:
    static constexpr std::size_t min_points = 16;

    Grid(double t_min, double t_max, std::size_t n_points);

    // Symmetric grid [-half_width, half_width]. An even point count is bumped
    // to the next odd number so that t = 0 is a node.
    static Grid symmetric(double half_width, std::size_t n_points);

    // Symmetric grid with the given step; the half width is rounded up to a
    // whole number of steps.
    static Grid symmetric_with_step(double half_width, double step);

    double t_min() const noexcept { return t_min_; }
    double t_max() const noexcept { return t_max_; }
    std::size_t size() const noexcept { return n_; }
    double step() const noexcept { return step_; }

    double operator[](std::size_t i) const noexcept;

    bool is_symmetric() const noexcept;
    std::size_t mirror(std::size_t i) const noexcept { return n_ - 1 - i; }

    // Index of the node nearest to t, clamped to the grid.
    std::size_t nearest(double t) const noexcept;

    // Contiguous sub-grid of the nodes with |t| <= half_width (same step).
    Grid window(double half_width) const;
    // First index of window(half_width) within this grid.
    std::size_t window_offset(double half_width) const;

    // Equality up to relative rounding (1e-12 of the extent).
    bool same_as(const Grid& other) const noexcept;

private:
    double t_min_;
    double t_max_;
    std::size_t n_;
    double step_;
};

}  // namespace isores
