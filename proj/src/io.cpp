#include "sspahp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "sspahp/errors.hpp"

namespace sspahp::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    return in;
}

std::string where(std::string_view source, std::size_t row, std::size_t column) {
    std::ostringstream msg;
    msg << source << ": row " << row << ", column " << column;
    return msg.str();
}

// Quotes a CSV field only when it needs it.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

CsvRows read_csv(std::istream& in) {
    const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::size_t pos = 0;
    if (text.starts_with("\xEF\xBB\xBF")) pos = 3;

    CsvRows rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool any = false;  // current row has content

    const auto end_row = [&] {
        if (any || !field.empty() || !row.empty()) {
            row.push_back(field);
            const bool blank =
                row.size() == 1 && trim(row.front()).empty();
            if (!blank) rows.push_back(std::move(row));
        }
        row.clear();
        field.clear();
        any = false;
    };

    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field += '"';
                    ++pos;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
            any = true;
        } else if (c == ',') {
            row.push_back(field);
            field.clear();
            any = true;
        } else if (c == '\n') {
            end_row();
        } else if (c != '\r') {
            field += c;
        }
    }
    if (quoted) throw InputError("unterminated quoted CSV field");
    end_row();
    return rows;
}

bool parse_number(std::string_view text, double& out, bool allow_fraction) {
    text = trim(text);
    if (text.empty()) return false;
    if (allow_fraction) {
        const auto slash = text.find('/');
        if (slash != std::string_view::npos) {
            double num = 0.0, den = 0.0;
            if (!parse_number(text.substr(0, slash), num) ||
                !parse_number(text.substr(slash + 1), den) || den == 0.0) {
                return false;
            }
            out = num / den;
            return std::isfinite(out);
        }
    }
    if (text.front() == '+') text.remove_prefix(1);
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) throw NumericalError("cannot format number");
    return {buf, ptr};
}

std::string format_fixed(double value, int decimals) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::fixed << std::setprecision(decimals) << value;
    auto s = out.str();
    // -0.0000 reads badly in a ranking table.
    if (s.starts_with('-') && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

DecisionMatrix parse_decision_matrix(std::istream& in, std::string_view source) {
    const auto rows = read_csv(in);
    if (rows.empty()) throw InputError(std::string(source) + ": empty decision matrix file");

    const auto& header = rows.front();
    if (header.empty() || trim(header.front()) != "alternative") {
        throw InputError(std::string(source) +
                         ": row 1, column 1: first header cell must be 'alternative'");
    }
    DecisionMatrix matrix;
    for (std::size_t c = 1; c < header.size(); ++c) {
        matrix.criterion_ids.emplace_back(trim(header[c]));
        if (matrix.criterion_ids.back().empty()) {
            throw InputError(where(source, 1, c + 1) + ": empty criterion id");
        }
    }
    const auto n = matrix.criterion_ids.size();
    const auto m = rows.size() - 1;
    std::vector<double> cells;
    cells.reserve(m * n);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != n + 1) {
            throw InputError(std::string(source) + ": row " + std::to_string(r + 1) + " has " +
                             std::to_string(row.size()) + " fields, expected " +
                             std::to_string(n + 1));
        }
        matrix.alternative_ids.emplace_back(trim(row.front()));
        for (std::size_t c = 1; c < row.size(); ++c) {
            double v = 0.0;
            if (!parse_number(row[c], v)) {
                throw InputError(where(source, r + 1, c + 1) + ": '" + row[c] +
                                 "' is not a number");
            }
            cells.push_back(v);
        }
    }
    matrix.values = Matrix(m, n, std::move(cells));
    matrix.objectives.assign(n, Objective::Profit);

    const auto report = validate_matrix(matrix);
    if (!report.empty()) {
        std::string msg = std::string(source) + ": invalid decision matrix:";
        for (const auto& issue : report) msg += "\n  " + issue.message;
        throw InputError(msg);
    }
    return matrix;
}

DecisionMatrix load_decision_matrix(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_decision_matrix(in, path.string());
}

void write_decision_matrix(std::ostream& out, const DecisionMatrix& matrix) {
    out << "alternative";
    for (const auto& id : matrix.criterion_ids) out << ',' << csv_field(id);
    out << '\n';
    for (std::size_t i = 0; i < matrix.alternatives(); ++i) {
        out << csv_field(matrix.alternative_ids[i]);
        for (std::size_t j = 0; j < matrix.criteria(); ++j) {
            out << ',' << format_number(matrix.values(i, j));
        }
        out << '\n';
    }
}

CriteriaHierarchy parse_hierarchy(std::istream& in, std::string_view source) {
    using nlohmann::json;
    const std::string prefix = std::string(source) + ": ";
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(prefix + "invalid JSON: " + e.what());
    }

    CriteriaHierarchy h;
    try {
        for (const auto& d : doc.at("dimensions")) {
            Dimension dim{d.at("id").get<std::string>(), d.value("name", std::string{}), {}};
            for (const auto& sd : d.at("sub_dimensions")) {
                SubDimension sub{sd.value("name", std::string{}), {}};
                for (const auto& c : sd.at("criteria")) {
                    const auto id = c.at("id").get<std::string>();
                    const auto token = c.at("objective").get<std::string>();
                    Objective objective;
                    if (token == "max") {
                        objective = Objective::Profit;
                    } else if (token == "min") {
                        objective = Objective::Cost;
                    } else {
                        throw StructuralError(prefix + "criterion '" + id + "' has objective '" +
                                              token + "'; expected \"max\" or \"min\"");
                    }
                    if (!h.objectives.emplace(id, objective).second) {
                        throw StructuralError(prefix + "criterion '" + id +
                                              "' appears more than once");
                    }
                    sub.criterion_ids.push_back(id);
                }
                if (sub.criterion_ids.empty()) {
                    throw StructuralError(prefix + "sub-dimension '" + sub.name + "' of '" +
                                          dim.id + "' has no criteria");
                }
                dim.sub_dimensions.push_back(std::move(sub));
            }
            if (dim.sub_dimensions.empty()) {
                throw StructuralError(prefix + "dimension '" + dim.id + "' has no sub-dimensions");
            }
            h.dimensions.push_back(std::move(dim));
        }
    } catch (const json::exception& e) {
        throw StructuralError(prefix + "hierarchy schema error: " + e.what());
    }
    if (h.dimensions.empty()) throw StructuralError(prefix + "hierarchy has no dimensions");
    try {
        flatten_hierarchy(h);
    } catch (const StructuralError& e) {
        throw StructuralError(prefix + e.what());
    }
    return h;
}

CriteriaHierarchy load_hierarchy(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_hierarchy(in, path.string());
}

LabeledPairwise parse_pairwise(std::istream& in, std::string_view source) {
    auto rows = read_csv(in);
    if (rows.empty()) throw InputError(std::string(source) + ": empty pairwise file");

    double scratch = 0.0;
    const auto numeric = [&](const std::string& s) { return parse_number(s, scratch, true); };

    std::vector<std::string> labels;
    std::size_t first_row = 0;
    if (!std::all_of(rows.front().begin(), rows.front().end(), numeric)) first_row = 1;
    // A label column shows up as a non-numeric first cell in the data rows.
    bool label_column = false;
    if (first_row < rows.size() && !rows[first_row].empty() && !numeric(rows[first_row].front())) {
        label_column = true;
    }
    if (first_row == 1) {
        const auto& header = rows.front();
        for (std::size_t c = label_column ? 1 : 0; c < header.size(); ++c) {
            labels.emplace_back(trim(header[c]));
        }
    } else if (label_column) {
        for (const auto& row : rows) labels.emplace_back(trim(row.front()));
    }

    const auto n = rows.size() - first_row;
    const std::size_t offset = label_column ? 1 : 0;
    std::vector<double> cells(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& row = rows[first_row + r];
        if (row.size() != n + offset) {
            throw InputError(std::string(source) + ": row " + std::to_string(first_row + r + 1) +
                             " has " + std::to_string(row.size() - offset) + " values, expected " +
                             std::to_string(n) + " (matrix must be square)");
        }
        for (std::size_t c = 0; c < n; ++c) {
            double v = 0.0;
            if (!parse_number(row[c + offset], v, true) || !(v > 0.0)) {
                throw InputError(where(source, first_row + r + 1, c + offset + 1) + ": '" +
                                 row[c + offset] + "' is not a positive number");
            }
            cells[r * n + c] = v;
        }
    }
    if (!labels.empty() && labels.size() != n) {
        throw InputError(std::string(source) + ": " + std::to_string(labels.size()) +
                         " labels for a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(cells[i * n + i] - 1.0) > kTolerance) {
            throw InputError(std::string(source) + ": diagonal entry " + std::to_string(i + 1) +
                             " must be 1");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const double product = cells[i * n + j] * cells[j * n + i];
            if (std::abs(product - 1.0) > 1e-2) {
                std::ostringstream msg;
                msg << source << ": entries (" << i + 1 << "," << j + 1 << ") and (" << j + 1 << ","
                    << i + 1 << ") are not reciprocal";
                throw InputError(msg.str());
            }
        }
    }
    return {PairwiseMatrix::from_upper(n, cells), std::move(labels)};
}

LabeledPairwise load_pairwise(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_pairwise(in, path.string());
}

std::vector<LabeledPairwise> load_pairwise_batch(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
            files.push_back(entry.path());
        }
    }
    if (ec) throw InputError("cannot read directory '" + dir.string() + "': " + ec.message());
    if (files.empty()) throw InputError("no .csv pairwise files in '" + dir.string() + "'");
    std::sort(files.begin(), files.end());

    std::vector<LabeledPairwise> out;
    for (const auto& f : files) out.push_back(load_pairwise(f));
    return out;
}

WeightVector parse_weights(std::istream& in, std::string_view source) {
    const auto rows = read_csv(in);
    WeightVector weights;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 2) {
            throw InputError(std::string(source) + ": row " + std::to_string(r + 1) +
                             " must have 2 fields (criterion_id, weight)");
        }
        double w = 0.0;
        if (!parse_number(row[1], w)) {
            if (r == 0) continue;  // header
            throw InputError(where(source, r + 1, 2) + ": '" + row[1] + "' is not a number");
        }
        weights.criterion_ids.emplace_back(trim(row[0]));
        weights.weights.push_back(w);
    }
    require_normalized(weights);
    return weights;
}

WeightVector load_weights(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_weights(in, path.string());
}

void write_weights(std::ostream& out, const WeightVector& weights) {
    out << "criterion,weight\n";
    for (std::size_t j = 0; j < weights.size(); ++j) {
        out << csv_field(weights.criterion_ids[j]) << ',' << format_number(weights.weights[j])
            << '\n';
    }
}

std::vector<Bounds> load_bounds(const std::filesystem::path& path,
                                std::span<const std::string> criterion_ids) {
    auto in = open_input(path);
    const auto rows = read_csv(in);
    const auto source = path.string();
    std::unordered_map<std::string, Bounds> by_id;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 3) {
            throw InputError(source + ": row " + std::to_string(r + 1) +
                             " must have 3 fields (criterion_id, lower, upper)");
        }
        Bounds b{};
        const bool ok = parse_number(row[1], b.lower) && parse_number(row[2], b.upper);
        if (!ok) {
            if (r == 0) continue;
            throw InputError(source + ": row " + std::to_string(r + 1) + " has non-numeric bounds");
        }
        by_id[std::string(trim(row[0]))] = b;
    }
    std::vector<Bounds> out;
    for (const auto& id : criterion_ids) {
        const auto it = by_id.find(id);
        if (it == by_id.end()) throw InputError(source + ": no bounds for criterion '" + id + "'");
        out.push_back(it->second);
    }
    return out;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "subset,s,alternative,utility,rank\n";
    for (std::size_t k = 0; k < result.subsets.size(); ++k) {
        const auto label = csv_field(subset_label(result.subsets[k]));
        for (std::size_t g = 0; g < result.s_grid.size(); ++g) {
            const auto& cell = result.at(k, g);
            const auto s = format_number(result.s_grid[g]);
            for (std::size_t a = 0; a < result.alternative_ids.size(); ++a) {
                out << label << ',' << s << ',' << csv_field(result.alternative_ids[a]) << ','
                    << format_number(cell.utilities[a]) << ',' << cell.ranking[a] << '\n';
            }
        }
    }
}

void write_sweep_json(std::ostream& out, const SweepResult& result) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["alternatives"] = result.alternative_ids;
    doc["s_grid"] = result.s_grid;
    doc["subsets"] = ordered_json::array();
    for (std::size_t k = 0; k < result.subsets.size(); ++k) {
        ordered_json subset;
        subset["groups"] = result.subsets[k];
        subset["label"] = subset_label(result.subsets[k]);
        subset["final_ranking"] = result.final_ranking(k);
        subset["cells"] = ordered_json::array();
        for (std::size_t g = 0; g < result.s_grid.size(); ++g) {
            const auto& cell = result.at(k, g);
            subset["cells"].push_back(
                {{"s", result.s_grid[g]}, {"utilities", cell.utilities}, {"ranking", cell.ranking}});
        }
        doc["subsets"].push_back(std::move(subset));
    }
    out << doc.dump(2) << '\n';
}

}  // namespace sspahp::io
