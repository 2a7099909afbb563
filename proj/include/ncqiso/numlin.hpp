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

#ifndef NCQISO_NUMLIN_HPP
#define NCQISO_NUMLIN_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace ncqiso {

using cplx = std::complex<double>;
using Index = Eigen::Index;
using CMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr Index kDimCap = 100000;

using SMatrix = Eigen::SparseMatrix<cplx, Eigen::RowMajor>;

// Sparse copy keeping the exact nonzeros.
SMatrix sparse_of(const CMatrix &m);

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ContractError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string shape_str(Index rows, Index cols);
void require_shape(const CMatrix &m, Index rows, Index cols, const std::string &what);
void require_finite(const CMatrix &m, const std::string &what);

CMatrix identity(Index n);
CMatrix zeros(Index rows, Index cols);
// Matrix unit e_{ij} of size k (0-based).
CMatrix unit(Index k, Index i, Index j);

CMatrix kron(const CMatrix &a, const CMatrix &b, Index cap = kDimCap);

struct Involutions {
    CMatrix transpose;
    CMatrix conjugate;
    CMatrix adjoint;
};
Involutions involutions(const CMatrix &a);

// Square grid of blockDim x blockDim blocks, each block standing for one
// algebra element.
struct BlockMatrix {
    Index blockRows = 0;
    Index blockCols = 0;
    Index blockDim = 1;
    CMatrix data;

    BlockMatrix() = default;
    BlockMatrix(Index block_rows, Index block_cols, Index block_dim);
    BlockMatrix(Index block_rows, Index block_cols, Index block_dim, CMatrix m);

    static BlockMatrix scalar(const CMatrix &m, Index block_dim);

    auto block(Index i, Index j) { return data.block(i * blockDim, j * blockDim, blockDim, blockDim); }
    auto block(Index i, Index j) const { return data.block(i * blockDim, j * blockDim, blockDim, blockDim); }
    bool square() const { return blockRows == blockCols; }
};

BlockMatrix block_transpose(const BlockMatrix &b);
BlockMatrix block_bar(const BlockMatrix &b);

struct BiunitaryReport {
    bool isUnitary = false;
    bool isTransposeUnitary = false;
    // ||BB*-I||, ||B*B-I||, ||B^t B^t* - I||, ||B^t* B^t - I||
    double residuals[4] = {0, 0, 0, 0};
    bool biunitary() const { return isUnitary && isTransposeUnitary; }
};
BiunitaryReport is_biunitary(const BlockMatrix &b, double tol = kDefaultTol);
bool is_unitary(const CMatrix &u, double tol = kDefaultTol);
double unitarity_residual(const CMatrix &u);

struct Eigensystem {
    RVector values;
    CMatrix vectors;
};
Eigensystem hermitian_eigensystem(const CMatrix &a, double tol = kDefaultTol);
RVector hermitian_eigenvalues(const CMatrix &a, double tol = kDefaultTol);

// Index sets of the connected components of the nonzero pattern of a square matrix.
std::vector<std::vector<Index>> coupled_blocks(const CMatrix &a);

struct SpectralFunction {
    RVector spectrum;  // ascending
    CMatrix value;     // f(A)
};
// f(A) for hermitian A, diagonalizing each coupled block separately.
SpectralFunction hermitian_function(const CMatrix &a, const std::function<double(double)> &f,
                                    double tol = kDefaultTol);

CMatrix nullspace(const CMatrix &a, double tol = kDefaultTol);
RMatrix nullspace_real(const RMatrix &a, double tol = kDefaultTol);

CMatrix partial_trace_left(const CMatrix &m, Index dim_h, Index dim_k);

// ||r||_F / (sqrt(rows) * max(1, scale)).
double scaled_residual(const CMatrix &r, double scale = 1.0);
// ||m||_F / sqrt(rows), the scale used when comparing against m.
double rms_norm(const CMatrix &m);

CMatrix commutator(const CMatrix &a, const CMatrix &b);

}  // namespace ncqiso

#endif
