// Copyright 2026 The ncqiso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncqiso/numlin.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>

namespace ncqiso {

std::string shape_str(Index rows, Index cols) {
    std::ostringstream s;
    s << rows << "x" << cols;
    return s.str();
}

void require_shape(const CMatrix &m, Index rows, Index cols, const std::string &what) {
    if (m.rows() != rows || m.cols() != cols) {
        throw ShapeError(what + ": expected " + shape_str(rows, cols) + ", got " + shape_str(m.rows(), m.cols()));
    }
}

void require_finite(const CMatrix &m, const std::string &what) {
    if (!m.allFinite()) {
        throw ContractError(what + ": non-finite entry");
    }
}

CMatrix identity(Index n) { return CMatrix::Identity(n, n); }

CMatrix zeros(Index rows, Index cols) { return CMatrix::Zero(rows, cols); }

CMatrix unit(Index k, Index i, Index j) {
    CMatrix m = CMatrix::Zero(k, k);
    m(i, j) = 1.0;
    return m;
}

CMatrix kron(const CMatrix &a, const CMatrix &b, Index cap) {
    Index r = a.rows() * b.rows();
    Index c = a.cols() * b.cols();
    if (r > cap || c > cap) {
        throw ShapeError("kron: result " + shape_str(r, c) + " exceeds cap " + std::to_string(cap));
    }
    CMatrix out = CMatrix::Zero(r, c);
    for (Index i = 0; i < a.rows(); i++) {
        for (Index j = 0; j < a.cols(); j++) {
            cplx v = a(i, j);
            if (v == cplx(0)) {
                continue;
            }
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = v * b;
        }
    }
    return out;
}

Involutions involutions(const CMatrix &a) {
    Involutions r;
    r.transpose = a.transpose();
    r.conjugate = a.conjugate();
    r.adjoint = r.conjugate.transpose();
    return r;
}

BlockMatrix::BlockMatrix(Index block_rows, Index block_cols, Index block_dim)
    : blockRows(block_rows), blockCols(block_cols), blockDim(block_dim),
      data(CMatrix::Zero(block_rows * block_dim, block_cols * block_dim)) {}

BlockMatrix::BlockMatrix(Index block_rows, Index block_cols, Index block_dim, CMatrix m)
    : blockRows(block_rows), blockCols(block_cols), blockDim(block_dim), data(std::move(m)) {
    require_shape(data, block_rows * block_dim, block_cols * block_dim, "BlockMatrix data");
}

BlockMatrix BlockMatrix::scalar(const CMatrix &m, Index block_dim) {
    return BlockMatrix(m.rows(), m.cols(), block_dim, kron(m, identity(block_dim)));
}

BlockMatrix block_transpose(const BlockMatrix &b) {
    if (!b.square()) {
        throw ShapeError("block_transpose: block grid " + shape_str(b.blockRows, b.blockCols) + " is not square");
    }
    BlockMatrix out(b.blockCols, b.blockRows, b.blockDim);
    for (Index i = 0; i < b.blockRows; i++) {
        for (Index j = 0; j < b.blockCols; j++) {
            out.block(j, i) = b.block(i, j);
        }
    }
    return out;
}

BlockMatrix block_bar(const BlockMatrix &b) {
    BlockMatrix out(b.blockRows, b.blockCols, b.blockDim);
    for (Index i = 0; i < b.blockRows; i++) {
        for (Index j = 0; j < b.blockCols; j++) {
            out.block(i, j) = b.block(i, j).adjoint();
        }
    }
    return out;
}

double unitarity_residual(const CMatrix &u) {
    if (u.rows() != u.cols()) {
        throw ShapeError("unitarity_residual: non-square " + shape_str(u.rows(), u.cols()));
    }
    CMatrix id = identity(u.rows());
    double a = (u * u.adjoint() - id).norm();
    double b = (u.adjoint() * u - id).norm();
    return std::max(a, b);
}

bool is_unitary(const CMatrix &u, double tol) {
    return unitarity_residual(u) < tol * std::sqrt(double(u.rows()));
}

BiunitaryReport is_biunitary(const BlockMatrix &b, double tol) {
    if (!b.square()) {
        throw ShapeError("is_biunitary: block grid " + shape_str(b.blockRows, b.blockCols) + " is not square");
    }
    BiunitaryReport r;
    const CMatrix &m = b.data;
    CMatrix t = block_transpose(b).data;
    CMatrix id = identity(m.rows());
    r.residuals[0] = (m * m.adjoint() - id).norm();
    r.residuals[1] = (m.adjoint() * m - id).norm();
    r.residuals[2] = (t * t.adjoint() - id).norm();
    r.residuals[3] = (t.adjoint() * t - id).norm();
    double bound = tol * std::sqrt(double(m.rows()));
    r.isUnitary = r.residuals[0] < bound && r.residuals[1] < bound;
    r.isTransposeUnitary = r.residuals[2] < bound && r.residuals[3] < bound;
    return r;
}

namespace {

void check_hermitian(const CMatrix &a, double tol) {
    if (a.rows() != a.cols()) {
        throw ShapeError("hermitian_eigensystem: non-square " + shape_str(a.rows(), a.cols()));
    }
    double dev = (a - a.adjoint()).norm();
    if (dev > tol * std::max(1.0, a.norm())) {
        throw ContractError("hermitian_eigensystem: input is not hermitian (deviation " + std::to_string(dev) + ")");
    }
}

}  // namespace

Eigensystem hermitian_eigensystem(const CMatrix &a, double tol) {
    check_hermitian(a, tol);
    Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigensystem r;
    r.values = es.eigenvalues();
    r.vectors = es.eigenvectors();
    // Phase convention: first component with non-negligible modulus is real positive.
    for (Index c = 0; c < r.vectors.cols(); c++) {
        auto col = r.vectors.col(c);
        double cutoff = 1e-12 * col.norm();
        for (Index i = 0; i < col.size(); i++) {
            double mag = std::abs(col(i));
            if (mag > cutoff) {
                col *= std::conj(col(i)) / mag;
                col(i) = mag;
                break;
            }
        }
    }
    return r;
}

RVector hermitian_eigenvalues(const CMatrix &a, double tol) {
    check_hermitian(a, tol);
    Eigen::MatrixXcd h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

namespace {

template <typename Mat>
Mat nullspace_impl(const Mat &a, double tol) {
    Index n = a.cols();
    if (n == 0) {
        return Mat(0, 0);
    }
    if (a.rows() == 0) {
        return Mat::Identity(n, n);
    }
    Eigen::BDCSVD<Mat> svd(a, Eigen::ComputeFullV);
    const auto &s = svd.singularValues();
    double smax = s.size() > 0 ? s(0) : 0.0;
    if (smax == 0.0) {
        smax = 1.0;
    }
    Index rank = 0;
    for (Index i = 0; i < s.size(); i++) {
        if (s(i) >= tol * smax) {
            rank++;
        }
    }
    return svd.matrixV().rightCols(n - rank);
}

}  // namespace

SMatrix sparse_of(const CMatrix &m) { return m.sparseView(cplx(0.0), 0.0); }

std::vector<std::vector<Index>> coupled_blocks(const CMatrix &a) {
    Index n = a.rows();
    std::vector<Index> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), Index(0));
    auto find = [&](Index x) {
        while (parent[size_t(x)] != x) {
            parent[size_t(x)] = parent[size_t(parent[size_t(x)])];
            x = parent[size_t(x)];
        }
        return x;
    };
    for (Index i = 0; i < n; i++) {
        for (Index j = i + 1; j < n; j++) {
            if (a(i, j) != cplx(0) || a(j, i) != cplx(0)) {
                Index ri = find(i), rj = find(j);
                if (ri != rj) {
                    parent[size_t(std::max(ri, rj))] = std::min(ri, rj);
                }
            }
        }
    }
    std::vector<std::vector<Index>> byRoot(static_cast<size_t>(n));
    for (Index i = 0; i < n; i++) {
        byRoot[size_t(find(i))].push_back(i);
    }
    std::vector<std::vector<Index>> out;
    for (auto &b : byRoot) {
        if (!b.empty()) {
            out.push_back(std::move(b));
        }
    }
    return out;
}

SpectralFunction hermitian_function(const CMatrix &a, const std::function<double(double)> &f, double tol) {
    Index n = a.rows();
    require_shape(a, n, n, "hermitian_function");
    SpectralFunction out;
    out.value = CMatrix::Zero(n, n);
    std::vector<double> spec;
    for (const auto &idx : coupled_blocks(a)) {
        Index m = Index(idx.size());
        CMatrix sub(m, m);
        for (Index i = 0; i < m; i++) {
            for (Index j = 0; j < m; j++) {
                sub(i, j) = a(idx[size_t(i)], idx[size_t(j)]);
            }
        }
        Eigensystem es = hermitian_eigensystem(sub, tol);
        CVector fv(m);
        for (Index k = 0; k < m; k++) {
            fv(k) = f(es.values(k));
            spec.push_back(es.values(k));
        }
        CMatrix fs = es.vectors * fv.asDiagonal() * es.vectors.adjoint();
        for (Index i = 0; i < m; i++) {
            for (Index j = 0; j < m; j++) {
                out.value(idx[size_t(i)], idx[size_t(j)]) = fs(i, j);
            }
        }
    }
    std::sort(spec.begin(), spec.end());
    out.spectrum = Eigen::Map<RVector>(spec.data(), Index(spec.size()));
    return out;
}

CMatrix nullspace(const CMatrix &a, double tol) {
    Eigen::MatrixXcd m = a;
    return nullspace_impl<Eigen::MatrixXcd>(m, tol);
}

RMatrix nullspace_real(const RMatrix &a, double tol) { return nullspace_impl<RMatrix>(a, tol); }

CMatrix partial_trace_left(const CMatrix &m, Index dim_h, Index dim_k) {
    require_shape(m, dim_h * dim_k, dim_h * dim_k, "partial_trace_left");
    CMatrix out = CMatrix::Zero(dim_k, dim_k);
    for (Index h = 0; h < dim_h; h++) {
        out += m.block(h * dim_k, h * dim_k, dim_k, dim_k);
    }
    return out;
}

double rms_norm(const CMatrix &m) {
    if (m.rows() == 0) {
        return 0.0;
    }
    return m.norm() / std::sqrt(double(m.rows()));
}

double scaled_residual(const CMatrix &r, double scale) {
    if (r.rows() == 0) {
        return 0.0;
    }
    return r.norm() / (std::sqrt(double(r.rows())) * std::max(1.0, scale));
}

CMatrix commutator(const CMatrix &a, const CMatrix &b) { return a * b - b * a; }

}  // namespace ncqiso
