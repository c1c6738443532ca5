#ifndef GSM_GRID_HPP
#define GSM_GRID_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "gsm/params.hpp"

namespace gsm {

/// Uniform grid on the reduced domain [0, 1].
class Grid {
public:
    explicit Grid(std::size_t n) : n_(n) {
        if (n < 3) throw std::invalid_argument("grid needs at least 3 points");
        h_ = 1.0 / static_cast<double>(n - 1);
    }

    std::size_t size() const noexcept { return n_; }
    double spacing() const noexcept { return h_; }

    /// X_i = i/(n-1); the endpoints are exactly 0 and 1.
    double point(std::size_t i) const noexcept {
        return static_cast<double>(i) / static_cast<double>(n_ - 1);
    }

private:
    std::size_t n_;
    double h_;
};

/// Reduced concentrations sampled on a grid at time tau.
struct ConcentrationField {
    std::vector<double> u;
    std::vector<double> v;
    std::vector<double> w;
    double tau = 0.0;

    std::size_t size() const noexcept { return u.size(); }
};

/// Field at tau = 0 built from initial_profile.
inline ConcentrationField initial_field(const Grid& grid) {
    ConcentrationField f;
    const std::size_t n = grid.size();
    f.u.resize(n);
    f.v.resize(n);
    f.w.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const InitialValues iv = initial_profile(grid.point(i));
        f.u[i] = iv.u;
        f.v[i] = iv.v;
        f.w[i] = iv.w;
    }
    return f;
}

}  // namespace gsm

#endif  // GSM_GRID_HPP
