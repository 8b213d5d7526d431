#include "gccha/filter.hpp"
#include "gccha/errors.hpp"

#include <string>
#include <utility>

namespace gccha {

FilterBank::FilterBank(std::vector<MatC> responses) : responses_(std::move(responses)) {
    if (responses_.empty()) throw InvalidInput("filter bank needs one response per frequency");
    const Index rows = responses_.front().rows();
    const Index cols = responses_.front().cols();
    if (rows < 1 || cols < 1) throw InvalidInput("filter responses must be nonempty");
    for (const MatC& r : responses_)
        if (r.rows() != rows || r.cols() != cols)
            throw DimensionMismatch("all filter responses must share one shape");
}

FilterBank identity_filter_bank(Index frequency_count, Index dim) {
    std::vector<MatC> responses(static_cast<size_t>(frequency_count), MatC::Identity(dim, dim));
    return FilterBank(std::move(responses));
}

FilterBank compose(const FilterBank& g, const FilterBank& h) {
    if (g.frequency_count() != h.frequency_count())
        throw DimensionMismatch("compose: frequency counts differ");
    if (g.input_dim() != h.output_dim())
        throw DimensionMismatch("compose: inner dimensions differ");
    std::vector<MatC> responses;
    responses.reserve(static_cast<size_t>(g.frequency_count()));
    for (Index l = 0; l < g.frequency_count(); ++l)
        responses.push_back(g.response(l) * h.response(l));
    return FilterBank(std::move(responses));
}

MatC apply_filter_bank(const FilterBank& f, const MatC& values, const SpectralBasis& b) {
    if (values.cols() != f.input_dim())
        throw DimensionMismatch("apply_filter_bank: signal dimension " +
                                std::to_string(values.cols()) + " does not match filter input " +
                                std::to_string(f.input_dim()));
    if (values.rows() != b.size() || f.frequency_count() != b.size())
        throw DimensionMismatch("apply_filter_bank: node/frequency count mismatch");

    const MatC coeffs = gft(b, values);            // n x d
    MatC out_coeffs(b.size(), f.output_dim());     // n x r
    for (Index l = 0; l < b.size(); ++l)
        out_coeffs.row(l) = coeffs.row(l) * f.response(l).transpose();
    return inverse_gft(b, out_coeffs);
}

MultivariateGraphSignal apply_filter_bank(const FilterBank& f, const MultivariateGraphSignal& x,
                                          const SpectralBasis& b) {
    std::vector<MatC> out;
    out.reserve(static_cast<size_t>(x.realization_count()));
    for (Index m = 0; m < x.realization_count(); ++m)
        out.push_back(apply_filter_bank(f, x.realization(m), b));
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(f.output_dim()));
    for (Index i = 0; i < f.output_dim(); ++i) labels.push_back("out" + std::to_string(i + 1));
    return MultivariateGraphSignal(std::move(out), std::move(labels));
}

}  // namespace gccha
