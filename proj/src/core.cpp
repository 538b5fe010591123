#include "sspahp/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "sspahp/errors.hpp"

namespace sspahp {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw InputError("matrix data has " + std::to_string(data_.size()) + " cells, expected " +
                         std::to_string(rows_ * cols_));
    }
}

std::vector<double> Matrix::column(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

namespace {

void report_duplicates(const std::vector<std::string>& ids, ValidationIssue::Kind kind,
                       const char* what, ValidationReport& report) {
    std::set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second) {
            report.push_back({kind, std::string("duplicate ") + what + " id '" + id + "'"});
        }
    }
}

}  // namespace

ValidationReport validate_matrix(const DecisionMatrix& matrix) {
    ValidationReport report;
    const auto m = matrix.values.rows();
    const auto n = matrix.values.cols();

    if (matrix.alternative_ids.size() != m || matrix.criterion_ids.size() != n) {
        std::ostringstream msg;
        msg << "shape mismatch: values are " << m << "x" << n << " but ids are "
            << matrix.alternative_ids.size() << "x" << matrix.criterion_ids.size();
        report.push_back({ValidationIssue::Kind::Shape, msg.str()});
    }
    if (m < 2) {
        report.push_back({ValidationIssue::Kind::TooFewAlternatives,
                          "at least 2 alternatives are required, got " + std::to_string(m)});
    }
    if (n < 1) {
        report.push_back({ValidationIssue::Kind::NoCriteria, "at least 1 criterion is required"});
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(matrix.values(i, j))) {
                std::ostringstream msg;
                msg << "non-finite cell at alternative " << i << ", criterion " << j;
                report.push_back({ValidationIssue::Kind::NonFiniteCell, msg.str()});
            }
        }
    }
    report_duplicates(matrix.alternative_ids, ValidationIssue::Kind::DuplicateAlternative,
                      "alternative", report);
    report_duplicates(matrix.criterion_ids, ValidationIssue::Kind::DuplicateCriterion, "criterion",
                      report);
    if (matrix.objectives.size() != n) {
        report.push_back({ValidationIssue::Kind::ObjectiveArity,
                          "objective arity: " + std::to_string(matrix.objectives.size()) +
                              " objectives for " + std::to_string(n) + " criteria"});
    }
    return report;
}

void require_valid(const DecisionMatrix& matrix) {
    const auto report = validate_matrix(matrix);
    if (report.empty()) return;
    std::string msg = "invalid decision matrix:";
    for (const auto& issue : report) msg += "\n  " + issue.message;
    throw InputError(msg);
}

std::vector<double> normalize_column(std::span<const double> column, Objective objective,
                                     bool* constant) {
    std::vector<double> out(column.size(), 0.5);
    if (column.empty()) return out;
    const auto [lo_it, hi_it] = std::minmax_element(column.begin(), column.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const bool flat = !(hi > lo);
    if (constant) *constant = flat;
    if (flat) return out;

    const double range = hi - lo;
    for (std::size_t i = 0; i < column.size(); ++i) {
        out[i] = objective == Objective::Profit ? (column[i] - lo) / range
                                                : (hi - column[i]) / range;
    }
    return out;
}

NormalizedMatrix normalize_minmax(const DecisionMatrix& matrix) {
    const auto m = matrix.alternatives();
    const auto n = matrix.criteria();
    NormalizedMatrix out{matrix.alternative_ids, matrix.criterion_ids, Matrix(m, n), {}};
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = matrix.values.column(j);
        bool constant = false;
        const auto norm = normalize_column(col, matrix.objectives.at(j), &constant);
        if (constant) {
            out.warnings.push_back("criterion '" + matrix.criterion_ids.at(j) +
                                   "' is constant; normalized to 0.5");
        }
        for (std::size_t i = 0; i < m; ++i) out.values(i, j) = norm[i];
    }
    return out;
}

std::vector<std::string> CriteriaHierarchy::dimension_ids() const {
    std::vector<std::string> ids;
    ids.reserve(dimensions.size());
    for (const auto& d : dimensions) ids.push_back(d.id);
    return ids;
}

std::vector<FlatCriterion> flatten_hierarchy(const CriteriaHierarchy& hierarchy) {
    std::vector<FlatCriterion> flat;
    std::set<std::string> dims;
    std::unordered_map<std::string, std::string> owner;

    for (const auto& dim : hierarchy.dimensions) {
        if (!dims.insert(dim.id).second) {
            throw StructuralError("duplicate dimension id '" + dim.id + "'");
        }
        for (const auto& sub : dim.sub_dimensions) {
            for (const auto& id : sub.criterion_ids) {
                const auto [it, fresh] = owner.emplace(id, dim.id + "/" + sub.name);
                if (!fresh) {
                    throw StructuralError("criterion '" + id + "' listed in both '" + it->second +
                                          "' and '" + dim.id + "/" + sub.name + "'");
                }
                const auto obj = hierarchy.objectives.find(id);
                if (obj == hierarchy.objectives.end()) {
                    throw StructuralError("criterion '" + id + "' has no objective");
                }
                flat.push_back({id, dim.id, obj->second});
            }
        }
    }
    return flat;
}

DecisionMatrix bind_to_hierarchy(const DecisionMatrix& matrix, const CriteriaHierarchy& hierarchy) {
    const auto flat = flatten_hierarchy(hierarchy);

    std::unordered_map<std::string, std::size_t> column_of;
    for (std::size_t j = 0; j < matrix.criterion_ids.size(); ++j) {
        column_of.emplace(matrix.criterion_ids[j], j);
    }
    std::set<std::string> in_hierarchy;
    for (const auto& c : flat) in_hierarchy.insert(c.id);
    for (const auto& id : matrix.criterion_ids) {
        if (!in_hierarchy.contains(id)) {
            throw InputError("criterion '" + id + "' in matrix header is absent from the hierarchy");
        }
    }

    const auto m = matrix.alternatives();
    DecisionMatrix out;
    out.alternative_ids = matrix.alternative_ids;
    out.values = Matrix(m, flat.size());
    for (std::size_t k = 0; k < flat.size(); ++k) {
        const auto it = column_of.find(flat[k].id);
        if (it == column_of.end()) {
            throw InputError("hierarchy criterion '" + flat[k].id + "' has no matrix column");
        }
        out.criterion_ids.push_back(flat[k].id);
        out.objectives.push_back(flat[k].objective);
        for (std::size_t i = 0; i < m; ++i) out.values(i, k) = matrix.values(i, it->second);
    }
    return out;
}

void require_normalized(const WeightVector& weights) {
    if (weights.criterion_ids.size() != weights.weights.size()) {
        throw InputError("weight vector has " + std::to_string(weights.weights.size()) +
                         " weights but " + std::to_string(weights.criterion_ids.size()) + " ids");
    }
    if (weights.weights.empty()) throw InputError("weight vector is empty");
    std::set<std::string> seen;
    for (const auto& id : weights.criterion_ids) {
        if (!seen.insert(id).second) throw InputError("duplicate weight id '" + id + "'");
    }
    for (std::size_t j = 0; j < weights.size(); ++j) {
        const double w = weights.weights[j];
        if (!std::isfinite(w) || w < 0.0) {
            throw InputError("weight for '" + weights.criterion_ids[j] +
                             "' must be finite and non-negative");
        }
    }
    const double total = std::accumulate(weights.weights.begin(), weights.weights.end(), 0.0);
    if (std::abs(total - 1.0) > kTolerance) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "weights sum to " << total << ", expected 1";
        throw InputError(msg.str());
    }
}

std::vector<double> align_weights(const WeightVector& weights, std::span<const std::string> ids) {
    require_normalized(weights);
    if (weights.size() != ids.size()) {
        throw InputError("weight vector covers " + std::to_string(weights.size()) +
                         " criteria, matrix has " + std::to_string(ids.size()));
    }
    std::unordered_map<std::string, double> by_id;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        by_id.emplace(weights.criterion_ids[j], weights.weights[j]);
    }
    std::vector<double> out;
    out.reserve(ids.size());
    for (const auto& id : ids) {
        const auto it = by_id.find(id);
        if (it == by_id.end()) throw InputError("no weight given for criterion '" + id + "'");
        out.push_back(it->second);
    }
    return out;
}

}  // namespace sspahp
