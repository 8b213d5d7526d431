#include "gccha/canonical.hpp"
#include "gccha/errors.hpp"
#include "gccha/parallel.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace gccha {

CanonicalSolution run_gccha(const MultivariateGraphSignal& x, const MultivariateGraphSignal& y,
                            const SpectralBasis& b, const SpectralMatrixField& field, Index r,
                            const MatC& means_x, const MatC& means_y, const SolveOptions& opts) {
    const Index n = b.size();
    const Index p = x.dimension();
    const Index q = y.dimension();
    if (x.node_count() != n || y.node_count() != n)
        throw DimensionMismatch("run_gccha: signals and basis disagree on node count");
    if (field.x_dim() != p || field.y_dim() != q || field.frequency_count() != n)
        throw DimensionMismatch("run_gccha: field does not match signals");
    if (r == 0) r = std::min(p, q);
    if (r < 1 || r > std::min(p, q)) throw RankTooLarge("run_gccha: invalid rank");

    std::vector<FrequencySolution> per_freq(static_cast<size_t>(n));
    parallel_for(0, n, [&](Index l) {
        try {
            per_freq[static_cast<size_t>(l)] = solve_field_frequency(field, l, r, opts);
        } catch (const Error& e) {
            throw SingularSpectralMatrix("frequency " + std::to_string(l) + ": " + e.what());
        }
    });

    // Phase continuity: rotate each pair (h_i, f_i) by a common unit phase
    // maximizing the real part of its inner product with the previous
    // frequency's pair. The per-frequency solve leaves h_i^H P_XY f_i >= 0
    // and a joint rotation keeps it that way.
    for (Index l = 1; l < n; ++l) {
        auto& cur = per_freq[static_cast<size_t>(l)];
        const auto& prev = per_freq[static_cast<size_t>(l - 1)];
        for (Index i = 0; i < r; ++i) {
            const Complex a = prev.h_vectors.col(i).dot(cur.h_vectors.col(i)) +
                              prev.f_vectors.col(i).dot(cur.f_vectors.col(i));
            const double mag = std::abs(a);
            if (mag < 1e-12) continue;
            const Complex rot = std::conj(a) / mag;
            cur.h_vectors.col(i) *= rot;
            cur.f_vectors.col(i) *= rot;
        }
    }

    std::vector<MatC> h_resp(static_cast<size_t>(n));
    std::vector<MatC> f_resp(static_cast<size_t>(n));
    MatR curves(r, n);
    for (Index l = 0; l < n; ++l) {
        const auto& fs = per_freq[static_cast<size_t>(l)];
        h_resp[static_cast<size_t>(l)] = fs.h_vectors.adjoint();
        f_resp[static_cast<size_t>(l)] = fs.f_vectors.adjoint();
        curves.col(l) = fs.coherences;
    }
    FilterBank h_bank(std::move(h_resp));
    FilterBank f_bank(std::move(f_resp));

    MultivariateGraphSignal z = apply_filter_bank(h_bank, x, b);
    MultivariateGraphSignal w = apply_filter_bank(f_bank, y, b);

    std::vector<VecC> mu(static_cast<size_t>(r), VecC::Zero(n));
    if (means_x.size() > 0 || means_y.size() > 0) {
        MatC mx = means_x.size() > 0 ? means_x : MatC::Zero(n, p);
        MatC my = means_y.size() > 0 ? means_y : MatC::Zero(n, q);
        if (mx.rows() != n || mx.cols() != p || my.rows() != n || my.cols() != q)
            throw DimensionMismatch("run_gccha: mean tables have wrong shape");
        const MatC fx = apply_filter_bank(h_bank, mx, b);
        const MatC fy = apply_filter_bank(f_bank, my, b);
        for (Index i = 0; i < r; ++i) mu[static_cast<size_t>(i)] = fy.col(i) - fx.col(i);
    }

    return CanonicalSolution{std::move(h_bank), std::move(f_bank), std::move(z), std::move(w),
                             std::move(curves), std::move(mu), field.frequencies()};
}

}  // namespace gccha
