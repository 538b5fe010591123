#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "sspahp/core.hpp"
#include "sspahp/errors.hpp"
#include "support.hpp"

using namespace sspahp;

namespace {

DecisionMatrix two_by_two() {
    DecisionMatrix dm;
    dm.alternative_ids = {"A", "B"};
    dm.criterion_ids = {"C1", "C2"};
    dm.values = Matrix(2, 2, {1.0, 2.0, 3.0, 4.0});
    dm.objectives = {Objective::Profit, Objective::Cost};
    return dm;
}

bool has_kind(const ValidationReport& report, ValidationIssue::Kind kind) {
    for (const auto& issue : report)
        if (issue.kind == kind) return true;
    return false;
}

CriteriaHierarchy small_hierarchy() {
    CriteriaHierarchy h;
    h.dimensions = {{"G1", "first", {{"sd1", {"C1", "C2"}}}}, {"G2", "second", {{"sd1", {"C3"}}}}};
    h.objectives = {{"C1", Objective::Profit}, {"C2", Objective::Cost}, {"C3", Objective::Profit}};
    return h;
}

}  // namespace

TEST(Validate, CleanMatrixHasEmptyReport) {
    EXPECT_TRUE(validate_matrix(two_by_two()).empty());
    EXPECT_NO_THROW(require_valid(two_by_two()));
}

TEST(Validate, NonFiniteCell) {
    auto dm = two_by_two();
    dm.values(1, 0) = std::numeric_limits<double>::quiet_NaN();
    const auto report = validate_matrix(dm);
    ASSERT_EQ(report.size(), 1u);
    EXPECT_EQ(report[0].kind, ValidationIssue::Kind::NonFiniteCell);
    EXPECT_THROW(require_valid(dm), InputError);
}

TEST(Validate, ObjectiveArity) {
    auto dm = two_by_two();
    dm.objectives.pop_back();
    const auto report = validate_matrix(dm);
    ASSERT_EQ(report.size(), 1u);
    EXPECT_EQ(report[0].kind, ValidationIssue::Kind::ObjectiveArity);
}

TEST(Validate, DuplicateIdsAndTooFewRows) {
    auto dm = two_by_two();
    dm.criterion_ids = {"C1", "C1"};
    EXPECT_TRUE(has_kind(validate_matrix(dm), ValidationIssue::Kind::DuplicateCriterion));

    dm = two_by_two();
    dm.alternative_ids = {"A", "A"};
    EXPECT_TRUE(has_kind(validate_matrix(dm), ValidationIssue::Kind::DuplicateAlternative));

    DecisionMatrix one;
    one.alternative_ids = {"A"};
    one.criterion_ids = {"C1"};
    one.values = Matrix(1, 1, 1.0);
    one.objectives = {Objective::Profit};
    EXPECT_TRUE(has_kind(validate_matrix(one), ValidationIssue::Kind::TooFewAlternatives));
}

TEST(Validate, MatrixSizeMismatchThrows) {
    EXPECT_THROW(Matrix(2, 2, std::vector<double>{1.0, 2.0, 3.0}), InputError);
}

TEST(Normalize, ProfitAndCostEndpoints) {
    const std::vector<double> col{2.0, 4.0, 6.0};
    EXPECT_EQ(normalize_column(col, Objective::Profit), (std::vector<double>{0.0, 0.5, 1.0}));
    EXPECT_EQ(normalize_column(col, Objective::Cost), (std::vector<double>{1.0, 0.5, 0.0}));
}

TEST(Normalize, ConstantColumnIsHalfWithWarning) {
    const std::vector<double> col{3.0, 3.0, 3.0};
    for (auto obj : {Objective::Profit, Objective::Cost}) {
        bool constant = false;
        EXPECT_EQ(normalize_column(col, obj, &constant), (std::vector<double>{0.5, 0.5, 0.5}));
        EXPECT_TRUE(constant);
    }
    DecisionMatrix dm;
    dm.alternative_ids = {"A", "B", "C"};
    dm.criterion_ids = {"C1"};
    dm.values = Matrix(3, 1, 3.0);
    dm.objectives = {Objective::Cost};
    const auto n = normalize_minmax(dm);
    EXPECT_EQ(n.warnings.size(), 1u);
    EXPECT_EQ(n.values(2, 0), 0.5);
}

TEST(NormalizeProperty, IdempotentDualShiftScaleAndRange) {
    testsupport::Gen gen(101);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = gen.index(2, 20);
        std::vector<double> col(m);
        for (auto& x : col) x = gen.uniform(-100.0, 100.0);
        const auto p = normalize_column(col, Objective::Profit);
        const auto c = normalize_column(col, Objective::Cost);
        const auto pp = normalize_column(p, Objective::Profit);

        const double a = gen.uniform(0.01, 50.0);
        const double b = gen.uniform(-1000.0, 1000.0);
        std::vector<double> affine(m);
        for (std::size_t i = 0; i < m; ++i) affine[i] = a * col[i] + b;
        const auto pa = normalize_column(affine, Objective::Profit);

        for (std::size_t i = 0; i < m; ++i) {
            EXPECT_NEAR(pp[i], p[i], 1e-12);
            EXPECT_NEAR(p[i] + c[i], 1.0, 1e-12);
            EXPECT_NEAR(pa[i], p[i], 1e-12);
            EXPECT_GE(p[i], 0.0);
            EXPECT_LE(p[i], 1.0);
            EXPECT_GE(c[i], 0.0);
            EXPECT_LE(c[i], 1.0);
        }
    }
}

TEST(Hierarchy, FlattenPreservesOrder) {
    const auto flat = flatten_hierarchy(small_hierarchy());
    ASSERT_EQ(flat.size(), 3u);
    EXPECT_EQ(flat[0].id, "C1");
    EXPECT_EQ(flat[0].dimension_id, "G1");
    EXPECT_EQ(flat[1].id, "C2");
    EXPECT_EQ(flat[1].dimension_id, "G1");
    EXPECT_EQ(flat[1].objective, Objective::Cost);
    EXPECT_EQ(flat[2].id, "C3");
    EXPECT_EQ(flat[2].dimension_id, "G2");
}

TEST(Hierarchy, SingleCriterion) {
    CriteriaHierarchy h;
    h.dimensions = {{"G1", "only", {{"sd", {"C1"}}}}};
    h.objectives = {{"C1", Objective::Profit}};
    EXPECT_EQ(flatten_hierarchy(h).size(), 1u);
}

TEST(Hierarchy, DuplicateMembershipIsStructural) {
    auto h = small_hierarchy();
    h.dimensions[1].sub_dimensions.push_back({"sd2", {"C1"}});
    EXPECT_THROW(flatten_hierarchy(h), StructuralError);

    h = small_hierarchy();
    h.dimensions[1].id = "G1";
    EXPECT_THROW(flatten_hierarchy(h), StructuralError);

    h = small_hierarchy();
    h.objectives.erase("C3");
    EXPECT_THROW(flatten_hierarchy(h), StructuralError);
}

TEST(Hierarchy, BindReordersColumnsById) {
    DecisionMatrix dm;
    dm.alternative_ids = {"A", "B"};
    dm.criterion_ids = {"C3", "C1", "C2"};
    dm.values = Matrix(2, 3, {3.0, 1.0, 2.0, 30.0, 10.0, 20.0});
    const auto bound = bind_to_hierarchy(dm, small_hierarchy());
    EXPECT_EQ(bound.criterion_ids, (std::vector<std::string>{"C1", "C2", "C3"}));
    EXPECT_EQ(bound.values, Matrix(2, 3, {1.0, 2.0, 3.0, 10.0, 20.0, 30.0}));
    EXPECT_EQ(bound.objectives[1], Objective::Cost);

    dm.criterion_ids = {"C3", "C1", "C9"};
    try {
        bind_to_hierarchy(dm, small_hierarchy());
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("C9"), std::string::npos);
    }
}

TEST(Weights, RequireNormalizedAndAlign) {
    WeightVector w{{"C1", "C2"}, {0.25, 0.75}};
    EXPECT_NO_THROW(require_normalized(w));
    const std::vector<std::string> order{"C2", "C1"};
    EXPECT_EQ(align_weights(w, order), (std::vector<double>{0.75, 0.25}));

    EXPECT_THROW(require_normalized(WeightVector{{"C1", "C2"}, {0.5, 0.6}}), InputError);
    EXPECT_THROW(require_normalized(WeightVector{{"C1", "C2"}, {-0.5, 1.5}}), InputError);
    EXPECT_THROW(require_normalized(WeightVector{{"C1", "C1"}, {0.5, 0.5}}), InputError);
    const std::vector<std::string> missing{"C1", "C3"};
    EXPECT_THROW(align_weights(w, missing), InputError);
}
