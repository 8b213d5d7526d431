#ifndef GCCHA_FILTER_HPP
#define GCCHA_FILTER_HPP

#include "gccha/basis.hpp"
#include "gccha/signal.hpp"
#include "gccha/types.hpp"

#include <vector>

namespace gccha {

/// Bank of LSI graph filters: one r_out x r_in frequency-response matrix per
/// graph frequency. Entry (i, j) of response(l) is h_ij(lambda_l).
class FilterBank {
public:
    explicit FilterBank(std::vector<MatC> responses);

    Index frequency_count() const { return static_cast<Index>(responses_.size()); }
    Index output_dim() const { return responses_.front().rows(); }
    Index input_dim() const { return responses_.front().cols(); }

    const MatC& response(Index l) const { return responses_.at(static_cast<size_t>(l)); }
    const std::vector<MatC>& responses() const { return responses_; }
    MatC& mutable_response(Index l) { return responses_.at(static_cast<size_t>(l)); }

private:
    std::vector<MatC> responses_;
};

FilterBank identity_filter_bank(Index frequency_count, Index dim);

/// (G o H)(lambda) = G(lambda) H(lambda).
FilterBank compose(const FilterBank& g, const FilterBank& h);

/// Spectral-domain application: per frequency, output coefficients are
/// response(lambda_l) times input coefficients, then inverse GFT. Applied to
/// every realization.
MultivariateGraphSignal apply_filter_bank(const FilterBank& f, const MultivariateGraphSignal& x,
                                          const SpectralBasis& b);

/// Same operation on a single n x d value table.
MatC apply_filter_bank(const FilterBank& f, const MatC& values, const SpectralBasis& b);

}  // namespace gccha

#endif
