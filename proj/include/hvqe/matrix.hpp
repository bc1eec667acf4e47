// Dense complex matrices sized for small qubit registers, plus a
// self-contained Jacobi eigensolver for hermitian matrices. Registers are
// capped at 8 qubits, so everything here is at most 256x256 and a plain
// row-major vector is ample.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hvqe {

using cdouble = std::complex<double>;

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cdouble& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cdouble& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CMatrix adjoint() const;

    CMatrix& operator+=(const CMatrix& other);
    CMatrix& operator*=(cdouble scale);

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

    std::vector<cdouble> apply(std::span<const cdouble> v) const;

    // Tensor (Kronecker) product, a's indices most significant.
    friend CMatrix kron(const CMatrix& a, const CMatrix& b);

    double max_abs_diff(const CMatrix& other) const;
    bool is_hermitian(double tol) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cdouble> data_;
};

// Eigenvalues of a hermitian matrix, ascending, via cyclic Jacobi sweeps with
// complex plane rotations. Accurate to ~1e-14 relative at the sizes used here.
std::vector<double> hermitian_eigenvalues(CMatrix a);

}  // namespace hvqe
