#include "gccha/interpretation.hpp"
#include "gccha/errors.hpp"

#include <cmath>

namespace gccha {

namespace {

double safe_div(double num, double den) { return den > 0.0 ? num / den : 0.0; }

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

LoadingsReport loadings(const CanonicalSolution& sol, const SpectralMatrixField& field) {
    const Index r = sol.h_bank.output_dim();
    const Index p = field.x_dim();
    const Index q = field.y_dim();
    const Index n = field.frequency_count();
    if (sol.h_bank.input_dim() != p || sol.f_bank.input_dim() != q ||
        sol.h_bank.frequency_count() != n)
        throw DimensionMismatch("loadings: solution does not match field");

    LoadingsReport rep;
    rep.loadings_zx.assign(static_cast<size_t>(r), MatR::Zero(p, n));
    rep.loadings_wy.assign(static_cast<size_t>(r), MatR::Zero(q, n));
    rep.cross_loadings_zy.assign(static_cast<size_t>(r), MatR::Zero(q, n));
    rep.cross_loadings_wx.assign(static_cast<size_t>(r), MatR::Zero(p, n));
    rep.signed_zx.assign(static_cast<size_t>(r), MatR::Zero(p, n));
    rep.signed_wy.assign(static_cast<size_t>(r), MatR::Zero(q, n));
    rep.signed_zy.assign(static_cast<size_t>(r), MatR::Zero(q, n));
    rep.signed_wx.assign(static_cast<size_t>(r), MatR::Zero(p, n));

    for (Index l = 0; l < n; ++l) {
        const MatC p_x = field.P_X(l);
        const MatC p_y = field.P_Y(l);
        const MatC p_xy = field.P_XY(l);
        const MatC& h = sol.h_bank.response(l);  // r x p
        const MatC& f = sol.f_bank.response(l);  // r x q

        const MatC s_zx = h * p_x;            // p^ZX, r x p
        const MatC s_wy = f * p_y;            // p^WY, r x q
        const MatC s_zy = h * p_xy;           // p^ZY, r x q
        const MatC s_wx = f * p_xy.adjoint(); // p^WX, r x p

        for (Index i = 0; i < r; ++i) {
            for (Index j = 0; j < p; ++j) {
                const double den = p_x(j, j).real();
                const double c = safe_div(std::norm(s_zx(i, j)), den);
                rep.loadings_zx[static_cast<size_t>(i)](j, l) = c;
                rep.signed_zx[static_cast<size_t>(i)](j, l) =
                    sign_of(s_zx(i, j).real()) * std::sqrt(c);
                const double cw = safe_div(std::norm(s_wx(i, j)), den);
                rep.cross_loadings_wx[static_cast<size_t>(i)](j, l) = cw;
                rep.signed_wx[static_cast<size_t>(i)](j, l) =
                    sign_of(s_wx(i, j).real()) * std::sqrt(cw);
            }
            for (Index j = 0; j < q; ++j) {
                const double den = p_y(j, j).real();
                const double c = safe_div(std::norm(s_wy(i, j)), den);
                rep.loadings_wy[static_cast<size_t>(i)](j, l) = c;
                rep.signed_wy[static_cast<size_t>(i)](j, l) =
                    sign_of(s_wy(i, j).real()) * std::sqrt(c);
                const double cz = safe_div(std::norm(s_zy(i, j)), den);
                rep.cross_loadings_zy[static_cast<size_t>(i)](j, l) = cz;
                rep.signed_zy[static_cast<size_t>(i)](j, l) =
                    sign_of(s_zy(i, j).real()) * std::sqrt(cz);
            }
        }
    }

    auto comm = communality(rep);
    rep.communality_x = std::move(comm.first);
    rep.communality_y = std::move(comm.second);
    auto adq = adequacy(rep);
    rep.adequacy_z = std::move(adq.adequacy_z);
    rep.adequacy_w = std::move(adq.adequacy_w);
    rep.cumulative_z = std::move(adq.cumulative_z);
    rep.cumulative_w = std::move(adq.cumulative_w);
    return rep;
}

std::pair<MatR, MatR> communality(const LoadingsReport& rep) {
    if (rep.loadings_zx.empty()) throw InvalidInput("communality: empty report");
    MatR cx = MatR::Zero(rep.loadings_zx.front().rows(), rep.loadings_zx.front().cols());
    for (const MatR& t : rep.loadings_zx) cx += t;
    MatR cy = MatR::Zero(rep.loadings_wy.front().rows(), rep.loadings_wy.front().cols());
    for (const MatR& t : rep.loadings_wy) cy += t;
    return {std::move(cx), std::move(cy)};
}

AdequacyTables adequacy(const LoadingsReport& rep) {
    if (rep.loadings_zx.empty()) throw InvalidInput("adequacy: empty report");
    const Index r = static_cast<Index>(rep.loadings_zx.size());
    const Index n = rep.loadings_zx.front().cols();
    AdequacyTables t;
    t.adequacy_z.resize(r, n);
    t.adequacy_w.resize(r, n);
    for (Index i = 0; i < r; ++i) {
        t.adequacy_z.row(i) = rep.loadings_zx[static_cast<size_t>(i)].colwise().mean();
        t.adequacy_w.row(i) = rep.loadings_wy[static_cast<size_t>(i)].colwise().mean();
    }
    t.cumulative_z = t.adequacy_z;
    t.cumulative_w = t.adequacy_w;
    for (Index i = 1; i < r; ++i) {
        t.cumulative_z.row(i) += t.cumulative_z.row(i - 1);
        t.cumulative_w.row(i) += t.cumulative_w.row(i - 1);
    }
    return t;
}

}  // namespace gccha
