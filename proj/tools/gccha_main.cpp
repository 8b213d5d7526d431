#include "gccha/pipelines.hpp"
#include "gccha/types.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

gccha::GsoChoice parse_gso(const std::string& name) {
    if (name == "laplacian") return gccha::GsoChoice::Laplacian;
    if (name == "adjacency") return gccha::GsoChoice::Adjacency;
    if (name == "custom") return gccha::GsoChoice::Custom;
    throw CLI::ValidationError("--gso must be laplacian, adjacency or custom");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph canonical coherence analysis"};
    app.require_subcommand(1);

    // analyze
    gccha::AnalysisConfig acfg;
    std::string a_gso = "laplacian";
    std::string a_mode;
    auto* analyze = app.add_subcommand("analyze", "run the full analysis pipeline");
    analyze->add_option("--graph", acfg.graph_path, "edge-list CSV (src,dst,weight)");
    analyze->add_option("--x", acfg.x_path, "X signal CSV")->required();
    analyze->add_option("--y", acfg.y_path, "Y signal CSV")->required();
    analyze->add_option("--gso", a_gso, "laplacian | adjacency | custom");
    analyze->add_option("--gso-matrix", acfg.gso_matrix_path, "GSO matrix CSV for --gso custom");
    analyze->add_flag("--directed", acfg.directed, "treat the edge list as directed");
    analyze->add_option("--mode", a_mode,
                        "realization-average | random-window (default: by realization count)");
    analyze->add_option("--windows", acfg.estimator.window_count, "random window count");
    analyze->add_option("--seed", acfg.estimator.seed, "estimator seed");
    analyze->add_option("--ridge", acfg.estimator.ridge, "relative diagonal loading");
    bool no_center = false;
    analyze->add_flag("--no-center", no_center, "skip mean removal");
    analyze->add_option("--rank", acfg.rank, "number of canonical pairs (default min(p,q))");
    analyze->add_option("--loading-threshold", acfg.loading_threshold,
                        "|signed loading| flag level");
    analyze->add_option("--out", acfg.output_dir, "output directory")->required();
    analyze->add_flag("--dump-basis", acfg.dump_basis, "also write basis.csv and gso.csv");

    // classify
    gccha::ClassificationConfig ccfg;
    auto* classify = app.add_subcommand("classify", "split-feature classification experiment");
    classify->add_option("--images", ccfg.image_path,
                         "image CSV (label,p0,...); omit for the synthetic set");
    classify->add_option("--images-per-class", ccfg.images_per_class, "images sampled per class");
    classify->add_option("--split-rows", ccfg.split_rows, "top-row counts K (repeatable)")
        ->delimiter(',');
    classify->add_option("--row-width", ccfg.row_width, "pixels per image row");
    classify->add_option("--rank", ccfg.ranks, "canonical pair counts r (repeatable)")
        ->delimiter(',');
    classify->add_option("--knn", ccfg.knn_k, "neighbor count");
    classify->add_option("--reps", ccfg.repetitions, "repetitions");
    classify->add_option("--seed", ccfg.seed, "experiment seed");
    classify->add_option("--windows", ccfg.windows, "random window count");
    classify->add_option("--ridge", ccfg.ridge, "relative diagonal loading");
    bool no_bridge = false;
    classify->add_flag("--no-bridge", no_bridge, "do not bridge class components");
    classify->add_option("--out", ccfg.output_dir, "output directory");

    // synth
    std::string synth_spec;
    std::string synth_out;
    auto* synth = app.add_subcommand("synth", "draw realizations of a prescribed process");
    synth->add_option("--spec", synth_spec, "synthesis spec JSON")->required();
    synth->add_option("--out", synth_out, "output directory")->required();

    // diagnose
    gccha::DiagnoseConfig dcfg;
    std::string d_gso = "laplacian";
    auto* diagnose = app.add_subcommand("diagnose", "weak-stationarity diagnostic");
    diagnose->add_option("--x", dcfg.x_path, "signal CSV with >= 2 realizations")->required();
    diagnose->add_option("--graph", dcfg.graph_path, "edge-list CSV");
    diagnose->add_option("--gso", d_gso, "laplacian | adjacency | custom");
    diagnose->add_option("--gso-matrix", dcfg.gso_matrix_path, "GSO matrix CSV");
    diagnose->add_option("--out", dcfg.output_path, "ratio CSV path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            acfg.gso = parse_gso(a_gso);
            acfg.estimator.center = !no_center;
            if (!a_mode.empty()) {
                acfg.mode_explicit = true;
                if (a_mode == "realization-average")
                    acfg.estimator.mode = gccha::EstimatorMode::RealizationAverage;
                else if (a_mode == "random-window")
                    acfg.estimator.mode = gccha::EstimatorMode::RandomWindow;
                else {
                    std::cerr << "error: unknown --mode " << a_mode << "\n";
                    return 2;
                }
            }
            return gccha::cli_analyze(acfg, std::cout);
        }
        if (classify->parsed()) {
            ccfg.bridge = !no_bridge;
            return gccha::cli_classify(ccfg, std::cout);
        }
        if (synth->parsed()) return gccha::cli_synth(synth_spec, synth_out, std::cout);
        if (diagnose->parsed()) {
            dcfg.gso = parse_gso(d_gso);
            return gccha::cli_diagnose(dcfg, std::cout);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
