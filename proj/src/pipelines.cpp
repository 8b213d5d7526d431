#include "gccha/pipelines.hpp"

#include "gccha/canonical.hpp"
#include "gccha/errors.hpp"
#include "gccha/interpretation.hpp"
#include "gccha/io.hpp"
#include "gccha/knn.hpp"
#include "gccha/parallel.hpp"
#include "gccha/rng.hpp"
#include "gccha/similarity.hpp"
#include "gccha/synth.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace gccha {

using nlohmann::json;

namespace {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const SingularSpectralMatrix*>(&e) != nullptr ||
        dynamic_cast<const EigenFailure*>(&e) != nullptr ||
        dynamic_cast<const SingularInput*>(&e) != nullptr)
        return 3;
    return 2;
}

ShiftOperator make_shift(GsoChoice gso, const std::string& graph_path,
                         const std::string& matrix_path, bool directed) {
    if (gso == GsoChoice::Custom) {
        if (matrix_path.empty())
            throw InvalidInput("gso=custom requires a GSO matrix CSV");
        return custom_shift(read_matrix_csv(matrix_path));
    }
    Graph g = read_edge_list_csv(graph_path, directed);
    return gso == GsoChoice::Laplacian ? laplacian(g) : adjacency_operator(g);
}

std::ofstream open_artifact(const std::filesystem::path& dir, const std::string& name) {
    std::ofstream out(dir / name);
    if (!out) throw InvalidInput("cannot write " + (dir / name).string());
    return out;
}

json real_matrix_rows(const MatR& m) {
    json rows = json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

json complex_pair(Complex v) { return json::array({v.real(), v.imag()}); }

json bank_to_json(const FilterBank& bank) {
    json per_freq = json::array();
    for (Index l = 0; l < bank.frequency_count(); ++l) {
        const MatC& m = bank.response(l);
        json rows = json::array();
        for (Index i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_pair(m(i, j)));
            rows.push_back(std::move(row));
        }
        per_freq.push_back(std::move(rows));
    }
    return per_freq;
}

void write_loading_rows(std::ostream& out, const std::vector<MatR>& tables, const VecC& freqs,
                        const std::string& quantity) {
    for (size_t i = 0; i < tables.size(); ++i) {
        const MatR& t = tables[i];
        for (Index j = 0; j < t.rows(); ++j)
            for (Index l = 0; l < t.cols(); ++l)
                out << (i + 1) << "," << (j + 1) << "," << l << ","
                    << format_double(freqs(l).real()) << "," << quantity << ","
                    << format_double(t(j, l)) << "\n";
    }
}

void write_channel_rows(std::ostream& out, const MatR& table, const VecC& freqs,
                        const std::string& quantity) {
    for (Index j = 0; j < table.rows(); ++j)
        for (Index l = 0; l < table.cols(); ++l)
            out << "," << (j + 1) << "," << l << "," << format_double(freqs(l).real()) << ","
                << quantity << "," << format_double(table(j, l)) << "\n";
}

void write_component_rows(std::ostream& out, const MatR& table, const VecC& freqs,
                          const std::string& quantity) {
    for (Index i = 0; i < table.rows(); ++i)
        for (Index l = 0; l < table.cols(); ++l)
            out << (i + 1) << ",," << l << "," << format_double(freqs(l).real()) << ","
                << quantity << "," << format_double(table(i, l)) << "\n";
}

json flagged_loadings(const LoadingsReport& rep, const VecC& freqs, double threshold) {
    json flagged = json::array();
    auto scan = [&](const std::vector<MatR>& signed_tables, const std::vector<MatR>& raw_tables,
                    const char* set_name) {
        for (size_t i = 0; i < signed_tables.size(); ++i) {
            const MatR& s = signed_tables[i];
            for (Index j = 0; j < s.rows(); ++j) {
                for (Index l = 0; l < s.cols(); ++l) {
                    if (std::abs(s(j, l)) <= threshold) continue;
                    flagged.push_back(json{{"set", set_name},
                                           {"component", i + 1},
                                           {"channel", j + 1},
                                           {"frequency_index", l},
                                           {"lambda", freqs(l).real()},
                                           {"signed_loading", s(j, l)},
                                           {"coherence", raw_tables[i](j, l)}});
                }
            }
        }
    };
    scan(rep.signed_zx, rep.loadings_zx, "ZX");
    scan(rep.signed_wy, rep.loadings_wy, "WY");
    scan(rep.signed_zy, rep.cross_loadings_zy, "ZY");
    scan(rep.signed_wx, rep.cross_loadings_wx, "WX");
    return flagged;
}

}  // namespace

int cli_analyze(const AnalysisConfig& cfg, std::ostream& log) {
    try {
        ShiftOperator shift =
            make_shift(cfg.gso, cfg.graph_path, cfg.gso_matrix_path, cfg.directed);
        SpectralBasis basis = spectral_basis(shift);
        log << "basis: n = " << basis.size() << "\n";

        MultivariateGraphSignal x = read_signal_csv(cfg.x_path);
        MultivariateGraphSignal y = read_signal_csv(cfg.y_path);
        if (x.node_count() != basis.size() || y.node_count() != basis.size())
            throw DimensionMismatch("signals do not match the graph's node count");
        if (x.realization_count() != y.realization_count())
            throw DimensionMismatch("X and Y must have the same realization count");
        const Index m_count = x.realization_count();

        EstimatorConfig est = cfg.estimator;
        if (!cfg.mode_explicit)
            est.mode = m_count >= 2 ? EstimatorMode::RealizationAverage
                                    : EstimatorMode::RandomWindow;
        if (est.mode == EstimatorMode::RealizationAverage && m_count < 2)
            throw TooFewRealizations("realization-average mode needs at least 2 realizations");

        std::vector<std::string> warnings;
        if (m_count < 2 && est.center) {
            warnings.push_back("single realization: signals left uncentered");
            log << "warning: " << warnings.back() << "\n";
        }

        const Index p = x.dimension();
        const Index q = y.dimension();
        Index rank = cfg.rank == 0 ? std::min(p, q) : cfg.rank;
        if (rank < 1 || rank > std::min(p, q))
            throw InvalidInput("rank must be in [1, min(p,q)]");

        log << "estimating spectral matrices (mode = "
            << (est.mode == EstimatorMode::RealizationAverage ? "realization-average"
                                                              : "random-window")
            << ", M = " << m_count << ")\n";
        SpectralMatrixField field = spectral_matrix_field(x, y, basis, est);

        MatC means_x, means_y;
        if (est.center && m_count >= 2) {
            means_x = x.mean();
            means_y = y.mean();
        }

        CanonicalSolution sol = run_gccha(x, y, basis, field, rank, means_x, means_y);
        LoadingsReport rep = loadings(sol, field);

        MatR diag_x, diag_y;
        if (m_count >= 2) {
            diag_x = stationarity_diagnostic(x, basis);
            diag_y = stationarity_diagnostic(y, basis);
            const double worst = std::max(diag_x.maxCoeff(), diag_y.maxCoeff());
            if (worst > 0.05) {
                std::ostringstream msg;
                msg << "stationarity diagnostic ratio " << worst
                    << " exceeds 0.05; results may be unreliable";
                warnings.push_back(msg.str());
                log << "warning: " << warnings.back() << "\n";
            }
        }

        const std::filesystem::path dir(cfg.output_dir);
        std::filesystem::create_directories(dir);

        {
            auto out = open_artifact(dir, "coherence_curves.csv");
            out << "component,frequency_index,lambda,coherence\n";
            for (Index i = 0; i < rank; ++i)
                for (Index l = 0; l < basis.size(); ++l)
                    out << (i + 1) << "," << l << ","
                        << format_double(sol.frequencies(l).real()) << ","
                        << format_double(sol.coherence_curves(i, l)) << "\n";
        }
        {
            auto out = open_artifact(dir, "loadings.csv");
            out << "component,channel,frequency_index,lambda,quantity,value\n";
            write_loading_rows(out, rep.loadings_zx, sol.frequencies, "loading_zx");
            write_loading_rows(out, rep.loadings_wy, sol.frequencies, "loading_wy");
            write_loading_rows(out, rep.cross_loadings_zy, sol.frequencies, "cross_loading_zy");
            write_loading_rows(out, rep.cross_loadings_wx, sol.frequencies, "cross_loading_wx");
            write_loading_rows(out, rep.signed_zx, sol.frequencies, "signed_loading_zx");
            write_loading_rows(out, rep.signed_wy, sol.frequencies, "signed_loading_wy");
            write_loading_rows(out, rep.signed_zy, sol.frequencies, "signed_loading_zy");
            write_loading_rows(out, rep.signed_wx, sol.frequencies, "signed_loading_wx");
            write_channel_rows(out, rep.communality_x, sol.frequencies, "communality_x");
            write_channel_rows(out, rep.communality_y, sol.frequencies, "communality_y");
            write_component_rows(out, rep.adequacy_z, sol.frequencies, "adequacy_z");
            write_component_rows(out, rep.adequacy_w, sol.frequencies, "adequacy_w");
            write_component_rows(out, rep.cumulative_z, sol.frequencies, "cumulative_z");
            write_component_rows(out, rep.cumulative_w, sol.frequencies, "cumulative_w");
        }
        {
            MultivariateGraphSignal zw = concat_dimensions(sol.z, sol.w);
            std::vector<std::string> labels;
            for (Index i = 0; i < rank; ++i) labels.push_back("Z" + std::to_string(i + 1));
            for (Index i = 0; i < rank; ++i) labels.push_back("W" + std::to_string(i + 1));
            std::vector<MatC> tables;
            for (Index m = 0; m < zw.realization_count(); ++m) tables.push_back(zw.realization(m));
            write_signal_csv((dir / "canonical_signals.csv").string(),
                             MultivariateGraphSignal(std::move(tables), std::move(labels)));
        }
        write_field_json((dir / "field.json").string(), field);
        if (cfg.dump_basis) {
            write_matrix_csv((dir / "basis.csv").string(), basis.eigenvectors());
            write_matrix_csv((dir / "gso.csv").string(), shift.matrix());
        }

        json summary;
        summary["config"] = {
            {"gso", cfg.gso == GsoChoice::Laplacian   ? "laplacian"
                    : cfg.gso == GsoChoice::Adjacency ? "adjacency"
                                                      : "custom"},
            {"mode", est.mode == EstimatorMode::RealizationAverage ? "realization-average"
                                                                   : "random-window"},
            {"windows", est.window_count},
            {"seed", est.seed},
            {"ridge", est.ridge},
            {"center", est.center},
            {"rank", rank},
            {"loading_threshold", cfg.loading_threshold},
            {"realizations", m_count},
            {"p", p},
            {"q", q}};
        json freqs = json::array();
        for (Index l = 0; l < basis.size(); ++l) freqs.push_back(sol.frequencies(l).real());
        summary["frequencies"] = std::move(freqs);
        summary["coherence_curves"] = real_matrix_rows(sol.coherence_curves);
        summary["cumulative_explanatory_power"] = {
            {"Z", real_matrix_rows(rep.cumulative_z)}, {"W", real_matrix_rows(rep.cumulative_w)}};
        summary["flagged_loadings"] = flagged_loadings(rep, sol.frequencies, cfg.loading_threshold);
        summary["filters"] = {{"H", bank_to_json(sol.h_bank)}, {"F", bank_to_json(sol.f_bank)}};
        json mu = json::array();
        for (const VecC& v : sol.mu) {
            json col = json::array();
            for (Index i = 0; i < v.size(); ++i) col.push_back(complex_pair(v(i)));
            mu.push_back(std::move(col));
        }
        summary["mu"] = std::move(mu);
        if (diag_x.size() > 0)
            summary["stationarity"] = {{"x", real_matrix_rows(diag_x)},
                                       {"y", real_matrix_rows(diag_y)}};
        else
            summary["stationarity"] = nullptr;
        summary["warnings"] = warnings;
        {
            auto out = open_artifact(dir, "summary.json");
            out << summary.dump(1) << "\n";
        }

        log << "wrote artifacts to " << dir.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

void synthetic_two_cluster_images(Index per_class, std::uint64_t seed, MatR& pixels,
                                  std::vector<int>& labels) {
    const Index side = 16;
    const Index d = side * side;
    pixels.resize(2 * per_class, d);
    labels.assign(static_cast<size_t>(2 * per_class), 0);
    std::mt19937_64 rng = substream(seed, 0xC1A55ULL);
    std::normal_distribution<double> noise(0.0, 0.45);
    auto blob = [&](double cr, double cc, Index r, Index c) {
        const double dr = static_cast<double>(r) - cr;
        const double dc = static_cast<double>(c) - cc;
        return 3.5 * std::exp(-(dr * dr + dc * dc) / 12.0);
    };
    for (Index img = 0; img < 2 * per_class; ++img) {
        const int label = img < per_class ? 0 : 1;
        labels[static_cast<size_t>(img)] = label;
        for (Index r = 0; r < side; ++r) {
            for (Index c = 0; c < side; ++c) {
                const double mean =
                    2.0 + (label == 0 ? blob(5.0, 5.0, r, c) : blob(10.0, 10.0, r, c));
                pixels(img, r * side + c) = std::max(0.01, mean + noise(rng));
            }
        }
    }
}

std::vector<ClassificationCell> run_classification(const ClassificationConfig& cfg,
                                                   const MatR& pixels,
                                                   const std::vector<int>& labels,
                                                   std::ostream& log) {
    const Index d = pixels.cols();
    if (cfg.row_width < 1 || d % cfg.row_width != 0)
        throw InvalidInput("row_width must divide the pixel count");
    const Index total_rows = d / cfg.row_width;
    if (cfg.images_per_class < 2) throw InvalidInput("images_per_class must be >= 2");
    if (cfg.repetitions < 1) throw InvalidInput("repetitions must be >= 1");

    std::map<int, std::vector<Index>> pool;
    for (Index i = 0; i < pixels.rows(); ++i) pool[labels[static_cast<size_t>(i)]].push_back(i);
    for (const auto& [label, members] : pool)
        if (static_cast<Index>(members.size()) < cfg.images_per_class)
            throw InvalidInput("class " + std::to_string(label) + " has only " +
                               std::to_string(members.size()) + " images, need " +
                               std::to_string(cfg.images_per_class));

    const Index n_nodes = static_cast<Index>(pool.size()) * cfg.images_per_class;

    std::vector<ClassificationCell> cells;
    for (Index rank : cfg.ranks) {
        for (int split : cfg.split_rows) {
            const Index px = static_cast<Index>(split) * cfg.row_width;
            if (px < 1 || px >= d)
                throw InvalidInput("split_rows must leave both views nonempty");
            const Index qx = d - px;
            if (rank < 1 || rank > std::min(px, qx))
                throw InvalidInput("rank must be in [1, min(view dims)]");

            ClassificationCell cell;
            cell.rank = rank;
            cell.split_rows = split;
            cell.per_repetition.assign(static_cast<size_t>(cfg.repetitions), 0.0);

            // Cap worker count so concurrent spectral fields stay within a
            // sane memory envelope.
            const double field_bytes =
                static_cast<double>(n_nodes) * static_cast<double>(d) * d * 8.0;
            const int mem_cap = std::max(1, static_cast<int>(1.5e9 / std::max(1.0, field_bytes)));
            const int workers = std::min(thread_budget(), mem_cap);

            parallel_for(0, cfg.repetitions, [&](Index rep) {
                std::mt19937_64 rng = substream(cfg.seed, static_cast<std::uint64_t>(rep));
                std::vector<Index> chosen;
                chosen.reserve(static_cast<size_t>(n_nodes));
                for (const auto& [label, members] : pool) {
                    (void)label;
                    std::vector<Index> shuffled = members;
                    for (Index i = 0; i < cfg.images_per_class; ++i) {
                        std::uniform_int_distribution<Index> pick(
                            i, static_cast<Index>(shuffled.size()) - 1);
                        std::swap(shuffled[static_cast<size_t>(i)],
                                  shuffled[static_cast<size_t>(pick(rng))]);
                    }
                    shuffled.resize(static_cast<size_t>(cfg.images_per_class));
                    std::sort(shuffled.begin(), shuffled.end());
                    chosen.insert(chosen.end(), shuffled.begin(), shuffled.end());
                }

                MatR table(n_nodes, d);
                std::vector<int> node_labels(static_cast<size_t>(n_nodes));
                for (Index i = 0; i < n_nodes; ++i) {
                    table.row(i) = pixels.row(chosen[static_cast<size_t>(i)]);
                    node_labels[static_cast<size_t>(i)] =
                        labels[static_cast<size_t>(chosen[static_cast<size_t>(i)])];
                }

                Graph g = build_similarity_graph(table, node_labels, cfg.bridge);
                SpectralBasis basis = spectral_basis(laplacian(g));

                MultivariateGraphSignal xs =
                    MultivariateGraphSignal::single(table.leftCols(px).cast<Complex>());
                MultivariateGraphSignal ys =
                    MultivariateGraphSignal::single(table.rightCols(qx).cast<Complex>());

                EstimatorConfig est;
                est.mode = EstimatorMode::RandomWindow;
                est.window_count = cfg.windows;
                est.ridge = cfg.ridge;
                est.smoothing_bandwidth = cfg.smoothing_bandwidth >= 0
                                              ? cfg.smoothing_bandwidth
                                              : std::max<Index>(1, n_nodes / 4);
                est.seed = derive_stream_seed(cfg.seed, 0x77DEAD00ULL + static_cast<std::uint64_t>(rep));
                SpectralMatrixField field = spectral_matrix_field(xs, ys, basis, est);
                CanonicalSolution sol = run_gccha(xs, ys, basis, field, rank);

                // Feature extraction uses unit-Euclidean filter rows (plain
                // eigenvector scaling): low-coherence pairs then carry little
                // energy instead of being inflated to unit power per
                // frequency, which keeps them from washing out neighbor
                // distances.
                std::vector<MatC> h_resp, f_resp;
                h_resp.reserve(static_cast<size_t>(n_nodes));
                f_resp.reserve(static_cast<size_t>(n_nodes));
                for (Index l = 0; l < n_nodes; ++l) {
                    MatC h = sol.h_bank.response(l);
                    MatC f = sol.f_bank.response(l);
                    for (Index i = 0; i < rank; ++i) {
                        const double hn = h.row(i).norm();
                        if (hn > 0) h.row(i) /= hn;
                        const double fn = f.row(i).norm();
                        if (fn > 0) f.row(i) /= fn;
                    }
                    h_resp.push_back(std::move(h));
                    f_resp.push_back(std::move(f));
                }
                MultivariateGraphSignal zf =
                    apply_filter_bank(FilterBank(std::move(h_resp)), xs, basis);
                MultivariateGraphSignal wf =
                    apply_filter_bank(FilterBank(std::move(f_resp)), ys, basis);

                MatR features(n_nodes, 2 * rank);
                features << zf.realization(0).real(), wf.realization(0).real();
                const std::vector<int> predicted = knn_classify(features, node_labels, cfg.knn_k);
                Index correct = 0;
                for (Index i = 0; i < n_nodes; ++i)
                    if (predicted[static_cast<size_t>(i)] == node_labels[static_cast<size_t>(i)])
                        ++correct;
                cell.per_repetition[static_cast<size_t>(rep)] =
                    static_cast<double>(correct) / static_cast<double>(n_nodes);
            }, workers);

            double mean = 0.0;
            for (double a : cell.per_repetition) mean += a;
            mean /= static_cast<double>(cfg.repetitions);
            double var = 0.0;
            for (double a : cell.per_repetition) var += (a - mean) * (a - mean);
            var = cfg.repetitions > 1 ? var / static_cast<double>(cfg.repetitions - 1) : 0.0;
            cell.mean_accuracy = mean;
            cell.std_accuracy = std::sqrt(var);
            log << "rank " << rank << ", split " << split << "/" << total_rows << ": accuracy "
                << cell.mean_accuracy << " (" << cell.std_accuracy << ")\n";
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

int cli_classify(const ClassificationConfig& cfg, std::ostream& log) {
    try {
        MatR pixels;
        std::vector<int> labels;
        if (cfg.image_path.empty()) {
            log << "no image CSV given; using the synthetic two-cluster set\n";
            synthetic_two_cluster_images(std::max<Index>(cfg.images_per_class, 120), cfg.seed,
                                         pixels, labels);
        } else {
            read_image_csv(cfg.image_path, pixels, labels);
        }

        const auto cells = run_classification(cfg, pixels, labels, log);

        const std::filesystem::path dir(cfg.output_dir);
        std::filesystem::create_directories(dir);
        {
            auto out = open_artifact(dir, "accuracy.csv");
            out << "rank,split_rows,repetition,accuracy\n";
            for (const auto& cell : cells)
                for (size_t rep = 0; rep < cell.per_repetition.size(); ++rep)
                    out << cell.rank << "," << cell.split_rows << "," << rep << ","
                        << format_double(cell.per_repetition[rep]) << "\n";
        }
        {
            auto out = open_artifact(dir, "accuracy_summary.csv");
            out << "rank,split_rows,mean,std\n";
            for (const auto& cell : cells)
                out << cell.rank << "," << cell.split_rows << ","
                    << format_double(cell.mean_accuracy) << ","
                    << format_double(cell.std_accuracy) << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cli_synth(const std::string& spec_path, const std::string& out_dir, std::ostream& log) {
    try {
        SynthesisSpec spec = read_synthesis_spec_json(spec_path);
        auto [x, y] = synthesize_stationary(spec);

        const std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        write_signal_csv((dir / "x.csv").string(), x);
        write_signal_csv((dir / "y.csv").string(), y);

        // Population canonical coherences implied by the prescribed field.
        const Index p = spec.x_dim;
        const Index q = static_cast<Index>(spec.joint_field.front().rows()) - p;
        const Index r = std::min(p, q);
        auto out = open_artifact(dir, "population_coherence.csv");
        out << "component,frequency_index,lambda,coherence\n";
        for (Index l = 0; l < spec.basis.size(); ++l) {
            const MatC& j = spec.joint_field[static_cast<size_t>(l)];
            FrequencySolution fs = solve_frequency(j.topLeftCorner(p, p),
                                                   j.bottomRightCorner(q, q),
                                                   j.topRightCorner(p, q), r);
            for (Index i = 0; i < r; ++i)
                out << (i + 1) << "," << l << ","
                    << format_double(spec.basis.eigenvalues()(l).real()) << ","
                    << format_double(fs.coherences(i)) << "\n";
        }
        log << "wrote " << x.realization_count() << " realizations to " << dir.string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cli_diagnose(const DiagnoseConfig& cfg, std::ostream& log) {
    try {
        ShiftOperator shift =
            make_shift(cfg.gso, cfg.graph_path, cfg.gso_matrix_path, false);
        SpectralBasis basis = spectral_basis(shift);
        MultivariateGraphSignal x = read_signal_csv(cfg.x_path);
        if (x.node_count() != basis.size())
            throw DimensionMismatch("signal does not match the graph's node count");
        const MatR ratios = stationarity_diagnostic(x, basis);

        std::ostringstream csv;
        csv << "i,j,ratio\n";
        for (Index i = 0; i < ratios.rows(); ++i)
            for (Index j = 0; j < ratios.cols(); ++j)
                csv << (i + 1) << "," << (j + 1) << "," << format_double(ratios(i, j)) << "\n";
        if (cfg.output_path.empty()) {
            log << csv.str();
        } else {
            std::ofstream out(cfg.output_path);
            if (!out) throw InvalidInput("cannot write " + cfg.output_path);
            out << csv.str();
        }
        const double worst = ratios.maxCoeff();
        if (worst > 0.05)
            log << "warning: off-diagonal energy ratio " << worst
                << " exceeds 0.05; weak stationarity is questionable\n";
        else
            log << "max off-diagonal energy ratio: " << worst << "\n";
        return 0;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace gccha
