#include "test_support.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <limits>
#include <sstream>

using namespace flagjac;
using flagjac::testing::as_vector;
using flagjac::testing::reference_calibration;

namespace {

const Provenance kProv{{"command", "test"}, {"seed", "42"}};

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST(Format, NamesRoundTrip) {
    for (Format f : {Format::json, Format::csv, Format::text}) EXPECT_EQ(parse_format(format_name(f)), f);
    EXPECT_FALSE(parse_format("yaml").has_value());
}

TEST(Format, SeventeenDigits) {
    EXPECT_EQ(fmt17(0.1), "0.10000000000000001");
    EXPECT_EQ(fmt17(2.0), "2");
    for (double v : {std::sqrt(2.0), -1.0 / 3.0, 6.02e23, 1e-300}) EXPECT_EQ(std::stod(fmt17(v)), v);
}

TEST(Artifacts, CalibrationRoundTrip) {
    const Calibration& cal = reference_calibration();
    const std::string text = write_calibration(cal, Format::json, kProv);
    const Calibration back = read_calibration(text);
    EXPECT_EQ(back.table.layout, cal.table.layout);
    EXPECT_EQ(back.table.metric, cal.table.metric);
    EXPECT_EQ(back.table.c, cal.table.c);
    EXPECT_EQ(back.curvature_sign, cal.curvature_sign);
    EXPECT_EQ(back.epsilon, cal.epsilon);
    EXPECT_EQ(back.scale, cal.scale);
    EXPECT_EQ(back.order_constants, cal.order_constants);
    EXPECT_EQ(back.matched, cal.matched);
    EXPECT_EQ(back.seed, cal.seed);
    // the same artifact again, byte for byte
    EXPECT_EQ(write_calibration(back, Format::json, kProv), text);
    for (const auto& p : random_unit_vectors(3, 5)) {
        EXPECT_EQ(derivative_chain(as_vector(p), 5, back), derivative_chain(as_vector(p), 5, cal));
    }
}

TEST(Artifacts, CalibrationJsonCarriesProvenance) {
    const auto j = nlohmann::json::parse(write_calibration(reference_calibration(), Format::json, kProv));
    EXPECT_EQ(j.at("provenance").at("seed"), "42");
    EXPECT_EQ(j.at("provenance").at("command"), "test");
    EXPECT_TRUE(j.at("search").at("matched").get<bool>());
}

TEST(Artifacts, MalformedCalibrationIsRejected) {
    EXPECT_THROW(read_calibration("{"), ArtifactError);
    EXPECT_THROW(read_calibration("{}"), ArtifactError);
    EXPECT_THROW(read_calibration("[1, 2]"), ArtifactError);
}

TEST(Artifacts, MatrixInAllFormats) {
    MatrixArtifact m;
    m.k = 3;
    m.x = {0, 1, 0, 0, 0, 0};
    m.matrix = SymMatrix6::Identity() * 0.5;
    const auto j = nlohmann::json::parse(write_matrix(m, Format::json, kProv));
    EXPECT_EQ(j.at("k"), 3);
    EXPECT_EQ(j.at("matrix").size(), 6u);
    EXPECT_EQ(j.at("matrix")[2][2].get<double>(), 0.5);

    const std::string csv = write_matrix(m, Format::csv, kProv);
    std::istringstream in(csv);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) == 0) continue;
        ++rows;
        EXPECT_EQ(std::count(line.begin(), line.end(), ','), 5) << line;
    }
    EXPECT_EQ(rows, 6);
    EXPECT_NE(write_matrix(m, Format::text, kProv).find("seed"), std::string::npos);
}

TEST(Artifacts, TrajectoryCsvHasOneRowPerGridPoint) {
    SolveOptions opt;
    opt.t_max = 1.0;
    opt.h = 0.25;
    const auto tr = solve_fields(JacobiSystem::constant(SymMatrix6::Identity()), Eigen::MatrixXd::Zero(6, 1),
                                 Eigen::MatrixXd::Identity(6, 1), opt);
    const std::string csv = write_trajectory(tr, Format::csv, kProv);
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> data;
    while (std::getline(in, line)) {
        if (line.rfind("# ", 0) != 0) data.push_back(line);
    }
    ASSERT_EQ(data.size(), 1u + tr.t.size());
    EXPECT_EQ(data[0].rfind("t,", 0), 0u);
    // t plus 6 entries of Y and 6 of Y'
    EXPECT_EQ(std::count(data[1].begin(), data[1].end(), ','), 12);
    const auto j = nlohmann::json::parse(write_trajectory(tr, Format::json, kProv));
    EXPECT_EQ(j.dump().find("NaN"), std::string::npos);
}

TEST(Artifacts, ConjugateAndRecurrenceJson) {
    const auto pts = conjugate_points(JacobiSystem::constant(SymMatrix6::Identity()), ConjugateOptions{});
    const auto j = nlohmann::json::parse(write_conjugate(pts, Format::json, kProv));
    ASSERT_TRUE(j.contains("points"));
    EXPECT_EQ(j.at("points").size(), pts.size());

    const Recurrence r = find_recurrence(RecurrenceOptions{}, reference_calibration());
    const auto jr = nlohmann::json::parse(write_recurrence(r, nullptr, Format::json, kProv));
    EXPECT_EQ(jr.at("order"), 4);
    EXPECT_EQ(count_lines(write_recurrence(r, nullptr, Format::json, kProv)) > 5, true);
}

TEST(Artifacts, AuditJsonReportsFailingOrders) {
    const auto j = nlohmann::json::parse(write_audit(audit_go_consistency(Variant::as_printed), Format::json, kProv));
    EXPECT_FALSE(j.at("all_pass").get<bool>());
    EXPECT_EQ(j.at("failing_orders"), nlohmann::json::parse("[3, 4, 5]"));
}
