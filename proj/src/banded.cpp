#include "gsm/banded.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "gsm/errors.hpp"

namespace gsm {

BandedMatrix::BandedMatrix(std::size_t n, std::size_t lower, std::size_t upper)
    : n_(n), kl_(lower), ku_(upper), stride_(2 * lower + upper + 1) {
    if (n == 0) throw ContractError("banded matrix must be nonempty");
    ab_.assign(stride_ * n_, 0.0);
}

double& BandedMatrix::at(std::size_t row, std::size_t col) {
    if (row >= n_ || col >= n_ || row + ku_ < col || col + kl_ < row) {
        throw ContractError("banded entry (" + std::to_string(row) + ", " + std::to_string(col) +
                            ") outside band");
    }
    return entry(row, col);
}

double BandedMatrix::get(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_) {
        throw ContractError("banded index out of range");
    }
    if (row + ku_ < col || col + kl_ < row) return 0.0;
    return entry(row, col);
}

double BandedMatrix::inf_norm() const {
    double norm = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double sum = 0.0;
        const std::size_t lo = (i > kl_) ? i - kl_ : 0;
        const std::size_t hi = std::min(n_ - 1, i + ku_);
        for (std::size_t j = lo; j <= hi; ++j) sum += std::abs(entry(i, j));
        norm = std::max(norm, sum);
    }
    return norm;
}

std::vector<double> banded_solve(BandedMatrix m, std::vector<double> b) {
    const std::size_t n = m.n_;
    if (b.size() != n) throw ContractError("rhs length does not match matrix size");
    const std::size_t kl = m.kl_;
    const std::size_t ext = m.kl_ + m.ku_;  // upper bandwidth after pivoting fill

    std::vector<std::size_t> piv(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t km = std::min(kl, n - 1 - j);

        std::size_t p = j;
        for (std::size_t i = j + 1; i <= j + km; ++i) {
            if (std::abs(m.entry(i, j)) > std::abs(m.entry(p, j))) p = i;
        }
        piv[j] = p;
        if (m.entry(p, j) == 0.0) {
            throw NumericError("banded_solve: singular pivot at index " + std::to_string(j));
        }
        const std::size_t chi = std::min(n - 1, j + ext);
        if (p != j) {
            for (std::size_t c = j; c <= chi; ++c) std::swap(m.entry(j, c), m.entry(p, c));
        }

        const double pivot = m.entry(j, j);
        for (std::size_t i = j + 1; i <= j + km; ++i) m.entry(i, j) /= pivot;
        for (std::size_t c = j + 1; c <= chi; ++c) {
            const double f = m.entry(j, c);
            if (f == 0.0) continue;
            for (std::size_t i = j + 1; i <= j + km; ++i) m.entry(i, c) -= m.entry(i, j) * f;
        }
    }

    // forward substitution with the recorded row swaps
    for (std::size_t j = 0; j < n; ++j) {
        if (piv[j] != j) std::swap(b[j], b[piv[j]]);
        const std::size_t km = std::min(kl, n - 1 - j);
        for (std::size_t i = j + 1; i <= j + km; ++i) b[i] -= m.entry(i, j) * b[j];
    }
    // back substitution
    for (std::size_t jj = n; jj-- > 0;) {
        b[jj] /= m.entry(jj, jj);
        const std::size_t lo = (jj > ext) ? jj - ext : 0;
        for (std::size_t i = lo; i < jj; ++i) b[i] -= m.entry(i, jj) * b[jj];
    }
    return b;
}

}  // namespace gsm
