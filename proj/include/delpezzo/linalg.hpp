#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "delpezzo/scalar.hpp"

namespace dp {

using IMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// coefficients from the constant term upward
using Poly = std::vector<Integer>;

IMat imat(std::initializer_list<std::initializer_list<long long>> rows);
IVec ivec(std::initializer_list<long long> xs);
IMat identity(int n);
IMat zeros(int rows, int cols);
IMat diagonal(const std::vector<long long> &d);

QMat to_rational(const IMat &m);
bool equal(const IMat &a, const IMat &b);
bool is_zero(const IMat &m);
IMat hstack(const IMat &a, const IMat &b);
IMat vstack(const IMat &a, const IMat &b);

// V * A = H with V unimodular and H in row echelon form; rank = number of nonzero rows of H
struct Echelon {
    IMat H;
    IMat V;
    int rank = 0;
};
Echelon row_echelon(const IMat &A);

int rank(const IMat &A);
int rank_mod2(const IMat &A);
Integer determinant(const IMat &A);
QMat inverse(const QMat &A);
// inverse of a unimodular integer matrix
IMat inverse_unimodular(const IMat &A);

// columns form a basis of {x in Z^n : A x = 0}
IMat integer_kernel(const IMat &A);
// canonical basis (columns) of the saturation of the column span of B
IMat saturate(const IMat &B);
// canonical basis (columns) of the lattice spanned by the columns of B
IMat column_hnf(const IMat &B);
// saturated intersection of two column spans
IMat intersect_spans(const IMat &A, const IMat &B);
// unimodular U whose first r columns span the saturated span of the columns of K
IMat complete_basis(const IMat &K);

struct Inertia {
    int plus = 0;
    int minus = 0;
    int zero = 0;
    int signature() const { return plus - minus; }
    friend bool operator==(const Inertia &, const Inertia &) = default;
};
// congruence diagonalization over Q
Inertia inertia(const IMat &gram);

Poly char_poly(const IMat &A);
Poly cyclotomic(int k);
int euler_phi(int k);
bool poly_divides(const Poly &d, const Poly &p, Poly &quotient);
std::string poly_string(const Poly &p);

// cyclotomic indices whose product is p (with multiplicity), or false if a non-cyclotomic factor remains
bool cyclotomic_factorization(const Poly &p, std::vector<int> &indices);

IMat power(const IMat &A, long long e);

std::string matrix_string(const IMat &m);
std::string vector_string(const IVec &v);
// flat row-major key for hashing small matrices
std::vector<long long> matrix_key(const IMat &m);

} // namespace dp
