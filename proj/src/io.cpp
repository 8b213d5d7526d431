#include "gccha/io.hpp"
#include "gccha/errors.hpp"
#include "gccha/shift.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace gccha {

using nlohmann::json;

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.pop_back();
        size_t start = field.find_first_not_of(' ');
        out.push_back(start == std::string::npos ? "" : field.substr(start));
    }
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write file: " + path);
    return out;
}

json complex_to_json(Complex v) { return json::array({v.real(), v.imag()}); }

Complex complex_from_json(const json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
        return Complex(j[0].get<double>(), j[1].get<double>());
    throw InvalidInput("expected a number or an [re, im] pair in JSON");
}

MatC matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InvalidInput("expected a JSON matrix");
    const Index rows = static_cast<Index>(j.size());
    const Index cols = static_cast<Index>(j[0].size());
    MatC m(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        if (static_cast<Index>(j[static_cast<size_t>(r)].size()) != cols)
            throw InvalidInput("ragged JSON matrix");
        for (Index c = 0; c < cols; ++c)
            m(r, c) = complex_from_json(j[static_cast<size_t>(r)][static_cast<size_t>(c)]);
    }
    return m;
}

json matrix_to_json(const MatC& m) {
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(Complex v) {
    if (v.imag() == 0.0) return format_double(v.real());
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gj", v.real(), v.imag());
    return buf;
}

double parse_double(const std::string& text) {
    try {
        size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw InvalidInput("malformed number: '" + text + "'");
        return v;
    } catch (const std::logic_error&) {
        throw InvalidInput("malformed number: '" + text + "'");
    }
}

Complex parse_complex(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty numeric field");
    if (text.back() != 'j' && text.back() != 'J') return Complex(parse_double(text), 0.0);
    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last +/- that is not an exponent sign and not leading.
    size_t split = std::string::npos;
    for (size_t i = body.size(); i-- > 1;) {
        const char c = body[i];
        if ((c == '+' || c == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return Complex(0.0, parse_double(body));
    return Complex(parse_double(body.substr(0, split)), parse_double(body.substr(split)));
}

Graph read_edge_list_csv(const std::string& path, bool directed) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("empty edge list: " + path);
    auto header = split_csv_line(line);
    if (header.size() < 3 || header[0] != "src" || header[1] != "dst" || header[2] != "weight")
        throw InvalidInput("edge list must start with header src,dst,weight: " + path);

    std::vector<Edge> edges;
    Index max_node = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (fields.size() < 3) throw InvalidInput("bad edge row: '" + line + "'");
        Edge e;
        e.source = static_cast<Index>(std::stoll(fields[0]));
        e.target = static_cast<Index>(std::stoll(fields[1]));
        e.weight = parse_double(fields[2]);
        max_node = std::max({max_node, e.source, e.target});
        edges.push_back(e);
    }
    if (edges.empty()) throw InvalidInput("edge list has no edges: " + path);
    return build_graph(edges, max_node + 1, directed);
}

void write_edge_list_csv(const std::string& path, const Graph& g) {
    std::ofstream out = open_output(path);
    out << "src,dst,weight\n";
    for (const Edge& e : g.edges())
        out << e.source << "," << e.target << "," << format_double(e.weight) << "\n";
}

MatC read_matrix_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::vector<std::vector<Complex>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        std::vector<Complex> row;
        row.reserve(fields.size());
        for (const auto& f : fields) row.push_back(parse_complex(f));
        if (!rows.empty() && rows.front().size() != row.size())
            throw InvalidInput("ragged matrix CSV: " + path);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidInput("empty matrix CSV: " + path);
    MatC m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            m(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    return m;
}

void write_matrix_csv(const std::string& path, const MatC& m) {
    std::ofstream out = open_output(path);
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) {
            if (c) out << ",";
            out << format_complex(m(r, c));
        }
        out << "\n";
    }
}

MultivariateGraphSignal read_signal_csv(const std::string& path) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("empty signal CSV: " + path);
    auto header = split_csv_line(line);
    if (header.size() < 3 || header[0] != "node" || header[1] != "realization")
        throw InvalidInput("signal CSV must start with header node,realization,...: " + path);
    const Index d = static_cast<Index>(header.size()) - 2;
    std::vector<std::string> labels(header.begin() + 2, header.end());

    struct Row {
        Index node;
        Index realization;
        std::vector<Complex> values;
    };
    std::vector<Row> rows;
    Index max_node = -1, max_real = -1;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (static_cast<Index>(fields.size()) != d + 2)
            throw InvalidInput("signal row has wrong field count: '" + line + "'");
        Row r;
        r.node = static_cast<Index>(std::stoll(fields[0]));
        r.realization = static_cast<Index>(std::stoll(fields[1]));
        if (r.node < 0 || r.realization < 0)
            throw InvalidInput("negative node or realization index in " + path);
        for (Index j = 0; j < d; ++j) r.values.push_back(parse_complex(fields[static_cast<size_t>(j) + 2]));
        max_node = std::max(max_node, r.node);
        max_real = std::max(max_real, r.realization);
        rows.push_back(std::move(r));
    }
    const Index n = max_node + 1;
    const Index m_count = max_real + 1;
    if (n < 1 || m_count < 1) throw InvalidInput("signal CSV has no data rows: " + path);
    if (static_cast<Index>(rows.size()) != n * m_count)
        throw InvalidInput("signal CSV must cover every (node, realization) pair exactly once: " +
                           path);

    std::vector<MatC> tables(static_cast<size_t>(m_count), MatC::Constant(n, d, Complex(0, 0)));
    std::vector<char> seen(static_cast<size_t>(n * m_count), 0);
    for (const Row& r : rows) {
        const size_t key = static_cast<size_t>(r.realization * n + r.node);
        if (seen[key]) throw InvalidInput("duplicate (node, realization) row in " + path);
        seen[key] = 1;
        for (Index j = 0; j < d; ++j)
            tables[static_cast<size_t>(r.realization)](r.node, j) = r.values[static_cast<size_t>(j)];
    }
    return MultivariateGraphSignal(std::move(tables), std::move(labels));
}

void write_signal_csv(const std::string& path, const MultivariateGraphSignal& s) {
    std::ofstream out = open_output(path);
    out << "node,realization";
    for (const auto& label : s.dimension_labels()) out << "," << label;
    out << "\n";
    for (Index m = 0; m < s.realization_count(); ++m) {
        const MatC& table = s.realization(m);
        for (Index i = 0; i < s.node_count(); ++i) {
            out << i << "," << m;
            for (Index j = 0; j < s.dimension(); ++j) out << "," << format_complex(table(i, j));
            out << "\n";
        }
    }
}

void write_field_json(const std::string& path, const SpectralMatrixField& f) {
    json doc;
    doc["x_dim"] = f.x_dim();
    doc["y_dim"] = f.y_dim();
    json freqs = json::array();
    for (Index l = 0; l < f.frequency_count(); ++l)
        freqs.push_back(complex_to_json(f.frequencies()(l)));
    doc["frequencies"] = std::move(freqs);
    json joints = json::array();
    for (Index l = 0; l < f.frequency_count(); ++l) joints.push_back(matrix_to_json(f.joint(l)));
    doc["joint"] = std::move(joints);
    std::ofstream out = open_output(path);
    out << doc.dump(1) << "\n";
}

SpectralMatrixField read_field_json(const std::string& path) {
    std::ifstream in = open_input(path);
    json doc = json::parse(in);
    const Index p = doc.at("x_dim").get<Index>();
    const Index q = doc.at("y_dim").get<Index>();
    const auto& jf = doc.at("frequencies");
    VecC freqs(static_cast<Index>(jf.size()));
    for (Index l = 0; l < freqs.size(); ++l) freqs(l) = complex_from_json(jf[static_cast<size_t>(l)]);
    std::vector<MatC> joints;
    for (const auto& jm : doc.at("joint")) joints.push_back(matrix_from_json(jm));
    return SpectralMatrixField(std::move(freqs), std::move(joints), p, q);
}

void read_image_csv(const std::string& path, MatR& pixels, std::vector<int>& labels) {
    std::ifstream in = open_input(path);
    std::string line;
    if (!std::getline(in, line)) throw InvalidInput("empty image CSV: " + path);
    auto header = split_csv_line(line);
    if (header.size() < 2 || header[0] != "label")
        throw InvalidInput("image CSV must start with header label,p0,...: " + path);
    const Index d = static_cast<Index>(header.size()) - 1;

    std::vector<std::vector<double>> rows;
    labels.clear();
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        auto fields = split_csv_line(line);
        if (static_cast<Index>(fields.size()) != d + 1)
            throw InvalidInput("image row has wrong field count in " + path);
        labels.push_back(static_cast<int>(std::stoll(fields[0])));
        std::vector<double> row;
        row.reserve(static_cast<size_t>(d));
        for (Index j = 0; j < d; ++j) row.push_back(parse_double(fields[static_cast<size_t>(j) + 1]));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InvalidInput("image CSV has no rows: " + path);
    pixels.resize(static_cast<Index>(rows.size()), d);
    for (Index i = 0; i < pixels.rows(); ++i)
        for (Index j = 0; j < d; ++j) pixels(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

SynthesisSpec read_synthesis_spec_json(const std::string& path) {
    std::ifstream in = open_input(path);
    json doc = json::parse(in);
    const auto base = std::filesystem::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        return fp.is_absolute() ? fp.string() : (base / fp).string();
    };

    const std::string gso = doc.value("gso", std::string("laplacian"));
    ShiftOperator shift = [&]() {
        if (gso == "custom") {
            if (!doc.contains("gso_matrix"))
                throw InvalidInput("synthesis spec with gso=custom needs gso_matrix");
            return custom_shift(read_matrix_csv(resolve(doc.at("gso_matrix").get<std::string>())));
        }
        Graph g = read_edge_list_csv(resolve(doc.at("graph").get<std::string>()));
        if (gso == "laplacian") return laplacian(g);
        if (gso == "adjacency") return adjacency_operator(g);
        throw InvalidInput("unknown gso kind: " + gso);
    }();

    std::vector<MatC> joint;
    for (const auto& jm : doc.at("joint_field")) joint.push_back(matrix_from_json(jm));

    SynthesisSpec spec{spectral_basis(shift), std::move(joint),
                       doc.at("x_dim").get<Index>(), doc.at("realizations").get<Index>(),
                       doc.value("seed", std::uint64_t{0}), MatC(), MatC()};
    if (doc.contains("means_x")) spec.means_x = matrix_from_json(doc.at("means_x"));
    if (doc.contains("means_y")) spec.means_y = matrix_from_json(doc.at("means_y"));
    return spec;
}

}  // namespace gccha
