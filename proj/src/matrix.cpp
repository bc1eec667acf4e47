#include "hvqe/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hvqe {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = std::conj(at(r, c));
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch in addition");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cdouble scale) {
    for (auto& x : data_) x *= scale;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    CMatrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const cdouble ark = a.at(r, k);
            if (ark == cdouble{}) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) m.at(r, c) += ark * b.at(k, c);
        }
    }
    return m;
}

std::vector<cdouble> CMatrix::apply(std::span<const cdouble> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<cdouble> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        cdouble acc = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ar = 0; ar < a.rows_; ++ar)
        for (std::size_t ac = 0; ac < a.cols_; ++ac) {
            const cdouble f = a.at(ar, ac);
            if (f == cdouble{}) continue;
            for (std::size_t br = 0; br < b.rows_; ++br)
                for (std::size_t bc = 0; bc < b.cols_; ++bc)
                    m.at(ar * b.rows_ + br, ac * b.cols_ + bc) = f * b.at(br, bc);
        }
    return m;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch in comparison");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        m = std::max(m, std::abs(data_[i] - other.data_[i]));
    return m;
}

bool CMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    return true;
}

namespace {

double off_diagonal_norm_sq(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a.at(r, c));
    return s;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(CMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("eigenvalues need a square matrix");
    if (!a.is_hermitian(1e-10)) throw std::invalid_argument("matrix is not hermitian");
    const std::size_t n = a.rows();

    double scale = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) scale = std::max(scale, std::abs(a.at(r, c)));
    const double stop = std::max(scale, 1.0) * 1e-15;

    // Each rotation is U = diag(e^{i phi}, 1) * [[c, s], [-s, c]] on the (p, q)
    // plane, chosen to zero A[p][q]; the phase factor reduces the complex pivot
    // to the real symmetric case.
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (std::sqrt(off_diagonal_norm_sq(a)) <= stop) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble apq = a.at(p, q);
                const double r = std::abs(apq);
                if (r <= stop * 1e-2) continue;
                const cdouble phase = apq / r;  // e^{i phi}

                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const cdouble upp = phase * c;
                const cdouble upq = phase * s;
                const cdouble uqp = -s;
                const cdouble uqq = c;

                // A <- U^dagger A U : transform columns p,q then rows p,q.
                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble aip = a.at(i, p);
                    const cdouble aiq = a.at(i, q);
                    a.at(i, p) = aip * upp + aiq * uqp;
                    a.at(i, q) = aip * upq + aiq * uqq;
                }
                for (std::size_t j = 0; j < n; ++j) {
                    const cdouble apj = a.at(p, j);
                    const cdouble aqj = a.at(q, j);
                    a.at(p, j) = std::conj(upp) * apj + std::conj(uqp) * aqj;
                    a.at(q, j) = std::conj(upq) * apj + std::conj(uqq) * aqj;
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a.at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace hvqe
