#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nutgraph {

// Exact scalar types.  All spectral computation in this library is integer
// or rational arithmetic; there is no floating point anywhere on the kernel
// path.  Intermediate values of fraction-free elimination are minors of the
// input and overflow any fixed-width type already around order 40, hence the
// arbitrary-precision default.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = DenseMatrix<Int>;
using IntVector = DenseVector<Int>;

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
    return x < Scalar(0) ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
    a = abs_value(a);
    b = abs_value(b);
    while (b != Scalar(0)) {
        Scalar r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Canonical representative of the ray through v: entries divided by their
/// gcd, sign chosen so the first nonzero entry is positive.  The zero vector
/// maps to itself.
template <typename Scalar>
DenseVector<Scalar> normalize_primitive(const DenseVector<Scalar>& v) {
    DenseVector<Scalar> out = v;
    Scalar g(0);
    for (Eigen::Index i = 0; i < out.size(); ++i)
        g = gcd_value(g, out[i]);
    if (g == Scalar(0))
        return out;
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out[i] /= g;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (out[i] == Scalar(0))
            continue;
        if (out[i] < Scalar(0))
            out = -out;
        break;
    }
    return out;
}

/// Exact matrix-vector product with an explicit dimension check.
template <typename Scalar>
DenseVector<Scalar> mat_vec_mul(const DenseMatrix<Scalar>& m,
                                const DenseVector<Scalar>& v) {
    if (v.size() != m.cols())
        throw std::invalid_argument("mat_vec_mul: vector length " +
                                    std::to_string(v.size()) +
                                    " does not match matrix columns " +
                                    std::to_string(m.cols()));
    DenseVector<Scalar> out = DenseVector<Scalar>::Zero(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Scalar acc(0);
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != Scalar(0))
                acc += m(i, j) * v[j];
        out[i] = std::move(acc);
    }
    return out;
}

template <typename Scalar>
bool is_zero_vector(const DenseVector<Scalar>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] != Scalar(0))
            return false;
    return true;
}

template <typename Scalar>
bool vectors_equal(const DenseVector<Scalar>& a, const DenseVector<Scalar>& b) {
    if (a.size() != b.size())
        return false;
    return std::equal(a.data(), a.data() + a.size(), b.data());
}

}  // namespace nutgraph
