#include "gccha/shift.hpp"
#include "gccha/errors.hpp"

#include <string>
#include <utility>

namespace gccha {

ShiftOperator::ShiftOperator(MatC matrix, ShiftKind kind)
    : matrix_(std::move(matrix)), kind_(kind) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
        throw InvalidInput("shift operator must be a nonempty square matrix");
    frobenius_ = matrix_.norm();

    const MatC commutator = matrix_ * matrix_.adjoint() - matrix_.adjoint() * matrix_;
    const double scale = frobenius_ * frobenius_;
    if (scale > 0.0 && commutator.norm() > 1e-10 * scale)
        throw NotNormal("shift operator is not normal: ||[S,S^H]||_F = " +
                        std::to_string(commutator.norm()) + ", ||S||_F^2 = " +
                        std::to_string(scale));

    is_real_ = is_effectively_real(matrix_);
    if (is_real_) real_matrix_ = matrix_.real();

    if (kind_ == ShiftKind::Laplacian) {
        if (!is_real_ || (real_matrix_ - real_matrix_.transpose()).norm() > 1e-12 * frobenius_)
            throw InvalidInput("laplacian shift operator must be real symmetric");
        if (real_matrix_.rowwise().sum().cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, frobenius_))
            throw InvalidInput("laplacian rows must sum to zero");
    }
}

ShiftOperator laplacian(const Graph& g) {
    if (g.directed())
        throw DirectedGraphUnsupported("the Laplacian is defined for undirected graphs only");
    const MatR& w = g.weights();
    MatR l = MatR(g.degrees().asDiagonal());
    l -= w;
    return ShiftOperator(l.cast<Complex>(), ShiftKind::Laplacian);
}

ShiftOperator adjacency_operator(const Graph& g) {
    return ShiftOperator(g.weights().cast<Complex>(), ShiftKind::Adjacency);
}

ShiftOperator custom_shift(MatC matrix) {
    return ShiftOperator(std::move(matrix), ShiftKind::CustomNormal);
}

}  // namespace gccha
