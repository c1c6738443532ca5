#ifndef GSM_BANDED_HPP
#define GSM_BANDED_HPP

#include <cstddef>
#include <vector>

namespace gsm {

/// Square banded matrix in band storage with room for pivoting fill
/// (the factored upper bandwidth grows to lower+upper).
class BandedMatrix {
public:
    BandedMatrix(std::size_t n, std::size_t lower, std::size_t upper);

    std::size_t size() const noexcept { return n_; }
    std::size_t lower() const noexcept { return kl_; }
    std::size_t upper() const noexcept { return ku_; }

    /// Writable in-band entry; throws ContractError outside the band.
    double& at(std::size_t row, std::size_t col);

    /// Entry value; 0 outside the band.
    double get(std::size_t row, std::size_t col) const;

    /// Max row-sum norm over the stored band.
    double inf_norm() const;

private:
    std::size_t n_, kl_, ku_, stride_;
    std::vector<double> ab_;

    double& entry(std::size_t row, std::size_t col) { return ab_[col * stride_ + kl_ + ku_ + row - col]; }
    double entry(std::size_t row, std::size_t col) const { return ab_[col * stride_ + kl_ + ku_ + row - col]; }

    friend std::vector<double> banded_solve(BandedMatrix matrix, std::vector<double> rhs);
};

/// Solves matrix * x = rhs by banded LU with partial pivoting. The matrix is
/// taken by value and factored in place. Throws ContractError on a size
/// mismatch and NumericError (naming the pivot index) on a singular pivot.
std::vector<double> banded_solve(BandedMatrix matrix, std::vector<double> rhs);

}  // namespace gsm

#endif  // GSM_BANDED_HPP
