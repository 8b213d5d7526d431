#include "gccha/signal.hpp"
#include "gccha/errors.hpp"

#include <string>
#include <utility>

namespace gccha {

MultivariateGraphSignal::MultivariateGraphSignal(std::vector<MatC> realizations,
                                                 std::vector<std::string> dimension_labels)
    : realizations_(std::move(realizations)), labels_(std::move(dimension_labels)) {
    if (realizations_.empty()) throw InvalidInput("signal needs at least one realization");
    const Index n = realizations_.front().rows();
    const Index d = realizations_.front().cols();
    if (n < 1 || d < 1) throw InvalidInput("signal must be at least 1 node x 1 dimension");
    for (const MatC& r : realizations_)
        if (r.rows() != n || r.cols() != d)
            throw DimensionMismatch("realizations must share the same shape");
    if (labels_.empty()) {
        labels_.reserve(static_cast<size_t>(d));
        for (Index j = 0; j < d; ++j) labels_.push_back("x" + std::to_string(j + 1));
    } else if (static_cast<Index>(labels_.size()) != d) {
        throw DimensionMismatch("dimension label count does not match dimension");
    }
}

MultivariateGraphSignal MultivariateGraphSignal::single(MatC values,
                                                        std::vector<std::string> dimension_labels) {
    std::vector<MatC> one;
    one.push_back(std::move(values));
    return MultivariateGraphSignal(std::move(one), std::move(dimension_labels));
}

bool MultivariateGraphSignal::is_real() const {
    for (const MatC& r : realizations_)
        if (!is_effectively_real(r)) return false;
    return true;
}

MatC MultivariateGraphSignal::dimension_table(Index d) const {
    if (d < 0 || d >= dimension()) throw DimensionMismatch("dimension index out of range");
    MatC table(node_count(), realization_count());
    for (Index m = 0; m < realization_count(); ++m) table.col(m) = realizations_[static_cast<size_t>(m)].col(d);
    return table;
}

MultivariateGraphSignal MultivariateGraphSignal::slice_dimensions(Index first, Index count) const {
    if (first < 0 || count < 1 || first + count > dimension())
        throw DimensionMismatch("dimension slice out of range");
    std::vector<MatC> out;
    out.reserve(realizations_.size());
    for (const MatC& r : realizations_) out.push_back(r.middleCols(first, count));
    std::vector<std::string> labels(labels_.begin() + first, labels_.begin() + first + count);
    return MultivariateGraphSignal(std::move(out), std::move(labels));
}

MatC MultivariateGraphSignal::mean() const {
    MatC acc = MatC::Zero(node_count(), dimension());
    for (const MatC& r : realizations_) acc += r;
    return acc / static_cast<double>(realization_count());
}

MultivariateGraphSignal concat_dimensions(const MultivariateGraphSignal& a,
                                          const MultivariateGraphSignal& b) {
    if (a.node_count() != b.node_count() || a.realization_count() != b.realization_count())
        throw DimensionMismatch("concat_dimensions: signals must share nodes and realizations");
    std::vector<MatC> out;
    out.reserve(static_cast<size_t>(a.realization_count()));
    for (Index m = 0; m < a.realization_count(); ++m) {
        MatC r(a.node_count(), a.dimension() + b.dimension());
        r << a.realization(m), b.realization(m);
        out.push_back(std::move(r));
    }
    std::vector<std::string> labels = a.dimension_labels();
    labels.insert(labels.end(), b.dimension_labels().begin(), b.dimension_labels().end());
    return MultivariateGraphSignal(std::move(out), std::move(labels));
}

}  // namespace gccha
