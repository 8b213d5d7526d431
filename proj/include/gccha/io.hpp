#ifndef GCCHA_IO_HPP
#define GCCHA_IO_HPP

#include "gccha/estimation.hpp"
#include "gccha/graph.hpp"
#include "gccha/signal.hpp"
#include "gccha/synth.hpp"
#include "gccha/types.hpp"

#include <string>
#include <vector>

namespace gccha {

/// 17 significant digits; round-trips every double exactly.
std::string format_double(double v);

/// Complex literal "re+imj" / "re-imj"; plain "re" when the value is real.
std::string format_complex(Complex v);
Complex parse_complex(const std::string& text);
double parse_double(const std::string& text);

/// Edge-list CSV with header src,dst,weight; node count is one past the
/// largest index seen.
Graph read_edge_list_csv(const std::string& path, bool directed = false);
void write_edge_list_csv(const std::string& path, const Graph& g);

/// Headerless row-major dump of complex literals.
MatC read_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, const MatC& m);

/// Signal CSV with header node,realization,<dim labels...>; one row per
/// (node, realization) pair, all pairs present exactly once.
MultivariateGraphSignal read_signal_csv(const std::string& path);
void write_signal_csv(const std::string& path, const MultivariateGraphSignal& s);

/// Per-frequency joint spectral matrices, complex entries as [re, im].
void write_field_json(const std::string& path, const SpectralMatrixField& f);
SpectralMatrixField read_field_json(const std::string& path);

/// Image CSV with header label,p0,...; one image per row.
void read_image_csv(const std::string& path, MatR& pixels, std::vector<int>& labels);

/// Synthesis prescription; graph/matrix paths inside resolve relative to the
/// spec file's directory.
SynthesisSpec read_synthesis_spec_json(const std::string& path);

}  // namespace gccha

#endif
