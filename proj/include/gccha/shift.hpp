#ifndef GCCHA_SHIFT_HPP
#define GCCHA_SHIFT_HPP

#include "gccha/graph.hpp"
#include "gccha/types.hpp"

namespace gccha {

enum class ShiftKind { Laplacian, Adjacency, CustomNormal };

/// Normal graph shift operator S. Normality is validated at construction:
/// ||S S^H - S^H S||_F <= 1e-10 ||S||_F^2.
class ShiftOperator {
public:
    ShiftOperator(MatC matrix, ShiftKind kind);

    const MatC& matrix() const { return matrix_; }
    ShiftKind kind() const { return kind_; }
    Index size() const { return matrix_.rows(); }
    double frobenius_norm() const { return frobenius_; }

    /// True when S has no imaginary part; such operators take the real
    /// symmetric eigendecomposition fast path.
    bool is_real() const { return is_real_; }
    const MatR& real_matrix() const { return real_matrix_; }

private:
    MatC matrix_;
    MatR real_matrix_;
    ShiftKind kind_;
    double frobenius_ = 0.0;
    bool is_real_ = false;
};

/// L = diag(W 1) - W for an undirected graph. Rejects directed input.
ShiftOperator laplacian(const Graph& g);

/// The weighted adjacency matrix as GSO; must be normal.
ShiftOperator adjacency_operator(const Graph& g);

/// A user-supplied normal operator.
ShiftOperator custom_shift(MatC matrix);

}  // namespace gccha

#endif
