#ifndef GCCHA_SIGNAL_HPP
#define GCCHA_SIGNAL_HPP

#include "gccha/types.hpp"

#include <string>
#include <vector>

namespace gccha {

/// n-node x d-dimension value table with M >= 1 independent realizations.
/// Values are complex-capable; is_real() reports whether every entry is real
/// so downstream code can pick the real fast path.
class MultivariateGraphSignal {
public:
    explicit MultivariateGraphSignal(std::vector<MatC> realizations,
                                     std::vector<std::string> dimension_labels = {});

    static MultivariateGraphSignal single(MatC values,
                                          std::vector<std::string> dimension_labels = {});

    Index node_count() const { return realizations_.front().rows(); }
    Index dimension() const { return realizations_.front().cols(); }
    Index realization_count() const { return static_cast<Index>(realizations_.size()); }

    const MatC& realization(Index m) const { return realizations_.at(static_cast<size_t>(m)); }
    const std::vector<MatC>& realizations() const { return realizations_; }
    const std::vector<std::string>& dimension_labels() const { return labels_; }

    bool is_real() const;

    /// One dimension across all realizations as an n x M matrix.
    MatC dimension_table(Index d) const;

    /// Column subset [first, first+count) of every realization.
    MultivariateGraphSignal slice_dimensions(Index first, Index count) const;

    /// Per-dimension sample mean across realizations (n x d).
    MatC mean() const;

private:
    std::vector<MatC> realizations_;
    std::vector<std::string> labels_;
};

/// Concatenate dimensions of two signals defined on the same nodes with the
/// same realization count.
MultivariateGraphSignal concat_dimensions(const MultivariateGraphSignal& a,
                                          const MultivariateGraphSignal& b);

}  // namespace gccha

#endif
