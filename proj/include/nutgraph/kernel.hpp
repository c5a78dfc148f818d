#pragma once

#include <nutgraph/numeric.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace nutgraph {

/// Exact description of the nullspace of an integer matrix.  Basis vectors
/// are integer, primitive (entry gcd 1) and sign-normalized (first nonzero
/// entry positive), so comparing a one-dimensional kernel against a published
/// generator is a plain equality test.
template <typename Scalar>
struct KernelDescription {
    Eigen::Index rank = 0;
    Eigen::Index nullity = 0;
    std::vector<DenseVector<Scalar>> basis;
};

/// Exact rank, nullity and kernel basis of a rectangular integer matrix.
///
/// Row echelon form is computed by fraction-free (Bareiss) elimination: every
/// intermediate entry is a minor of the input, so all divisions are exact and
/// the growth of intermediates stays polynomially bounded.  Pivots are chosen
/// as the first nonzero entry in column order, which keeps elimination traces
/// deterministic.  Kernel vectors are then obtained per free column by
/// back-substitution, clearing denominators as we go (multiply through by the
/// pivot instead of dividing), and canonicalized with normalize_primitive.
template <typename Scalar>
KernelDescription<Scalar> kernel_basis(const DenseMatrix<Scalar>& m) {
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("kernel_basis: empty matrix");

    std::vector<std::vector<Scalar>> w(static_cast<size_t>(rows));
    for (Eigen::Index i = 0; i < rows; ++i) {
        w[static_cast<size_t>(i)].resize(static_cast<size_t>(cols));
        for (Eigen::Index j = 0; j < cols; ++j)
            w[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);
    }

    std::vector<Eigen::Index> pivot_cols;
    Scalar prev(1);
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = -1;
        for (Eigen::Index i = r; i < rows; ++i) {
            if (w[static_cast<size_t>(i)][static_cast<size_t>(c)] != Scalar(0)) {
                p = i;
                break;
            }
        }
        if (p < 0)
            continue;
        if (p != r)
            std::swap(w[static_cast<size_t>(p)], w[static_cast<size_t>(r)]);

        // Every trailing row is updated, zero head or not: the one-step
        // fraction-free identity keeps all entries equal to minors of m,
        // which is exactly what makes the division by the previous pivot
        // exact.
        const std::vector<Scalar>& pivot_row = w[static_cast<size_t>(r)];
        const Scalar& pivot = pivot_row[static_cast<size_t>(c)];
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            std::vector<Scalar>& row = w[static_cast<size_t>(i)];
            Scalar& head = row[static_cast<size_t>(c)];
            if (head == Scalar(0)) {
                for (Eigen::Index j = c + 1; j < cols; ++j) {
                    Scalar& x = row[static_cast<size_t>(j)];
                    if (x != Scalar(0))
                        x = (pivot * x) / prev;
                }
                continue;
            }
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                Scalar& x = row[static_cast<size_t>(j)];
                x = (pivot * x - head * pivot_row[static_cast<size_t>(j)]) / prev;
            }
            head = Scalar(0);
        }
        prev = pivot;
        pivot_cols.push_back(c);
        ++r;
    }

    KernelDescription<Scalar> out;
    out.rank = static_cast<Eigen::Index>(pivot_cols.size());
    out.nullity = cols - out.rank;

    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (Eigen::Index c : pivot_cols)
        is_pivot[static_cast<size_t>(c)] = true;

    for (Eigen::Index f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)])
            continue;
        DenseVector<Scalar> v = DenseVector<Scalar>::Zero(cols);
        v[f] = Scalar(1);
        for (Eigen::Index j = out.rank - 1; j >= 0; --j) {
            const std::vector<Scalar>& row = w[static_cast<size_t>(j)];
            const Eigen::Index c = pivot_cols[static_cast<size_t>(j)];
            Scalar s(0);
            for (Eigen::Index l = c + 1; l < cols; ++l) {
                const Scalar& coeff = row[static_cast<size_t>(l)];
                if (coeff != Scalar(0) && v[l] != Scalar(0))
                    s += coeff * v[l];
            }
            const Scalar& pivot = row[static_cast<size_t>(c)];
            for (Eigen::Index l = 0; l < cols; ++l)
                if (v[l] != Scalar(0))
                    v[l] *= pivot;
            v[c] = -s;
        }
        out.basis.push_back(normalize_primitive(v));
    }
    return out;
}

}  // namespace nutgraph
