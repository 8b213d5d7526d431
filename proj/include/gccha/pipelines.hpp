#ifndef GCCHA_PIPELINES_HPP
#define GCCHA_PIPELINES_HPP

#include "gccha/estimation.hpp"
#include "gccha/graph.hpp"
#include "gccha/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gccha {

enum class GsoChoice { Laplacian, Adjacency, Custom };

struct AnalysisConfig {
    std::string graph_path;
    std::string x_path;
    std::string y_path;
    GsoChoice gso = GsoChoice::Laplacian;
    std::string gso_matrix_path;  ///< required for gso == Custom
    bool directed = false;
    EstimatorConfig estimator;
    bool mode_explicit = false;   ///< when false the mode is picked from M
    Index rank = 0;               ///< 0 selects min(p, q)
    std::string output_dir = ".";
    double loading_threshold = 0.2;
    bool dump_basis = false;
};

/// End-to-end analysis: ingest, estimate, solve, interpret, write
/// coherence_curves.csv, loadings.csv, canonical_signals.csv, field.json and
/// summary.json. Returns 0 on success, 2 on input validation failure, 3 on
/// numerical failure.
int cli_analyze(const AnalysisConfig& cfg, std::ostream& log);

struct ClassificationConfig {
    std::string image_path;       ///< empty selects the synthetic two-cluster set
    int images_per_class = 40;
    std::vector<int> split_rows = {4};
    int row_width = 16;
    std::vector<Index> ranks = {20};
    int knn_k = 10;
    int repetitions = 50;
    std::uint64_t seed = 0;
    int windows = 50;
    double ridge = 1e-8;
    /// Frequency-smoothing half-width for the field estimate; -1 selects
    /// max(1, n/4) for the n sampled per repetition. Per-frequency canonical
    /// solves on a single windowed table are only stable when neighboring
    /// frequencies share estimation noise.
    Index smoothing_bandwidth = -1;
    bool bridge = true;
    std::string output_dir = ".";
};

struct ClassificationCell {
    Index rank = 0;
    int split_rows = 0;
    double mean_accuracy = 0.0;
    double std_accuracy = 0.0;
    std::vector<double> per_repetition;
};

/// One classification experiment: per repetition, sample images per class,
/// build the label-similarity graph, split pixel rows into the two views,
/// run the canonical solve, and score leave-one-out k-NN on the
/// concatenated canonical features.
std::vector<ClassificationCell> run_classification(const ClassificationConfig& cfg,
                                                   const MatR& pixels,
                                                   const std::vector<int>& labels,
                                                   std::ostream& log);

int cli_classify(const ClassificationConfig& cfg, std::ostream& log);

/// Deterministic two-cluster image pool (two labels, 16x16 blobs) used when
/// no image CSV is supplied.
void synthetic_two_cluster_images(Index per_class, std::uint64_t seed, MatR& pixels,
                                  std::vector<int>& labels);

int cli_synth(const std::string& spec_path, const std::string& out_dir, std::ostream& log);

struct DiagnoseConfig {
    std::string x_path;
    std::string graph_path;
    GsoChoice gso = GsoChoice::Laplacian;
    std::string gso_matrix_path;
    std::string output_path;  ///< empty prints to the log stream
};

int cli_diagnose(const DiagnoseConfig& cfg, std::ostream& log);

}  // namespace gccha

#endif
