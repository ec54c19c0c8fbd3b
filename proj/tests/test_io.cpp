#include <cstring>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "rpps/dataset_io.hpp"
#include "rpps/error.hpp"
#include "rpps/selectors.hpp"
#include "rpps/serialization.hpp"

namespace {

rpps::ErrorCode code_of_parse(const nlohmann::json& j) {
    try {
        (void)rpps::parse_block<rpps::GeneratorSpec>(j, "truth");
    } catch (const rpps::Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "accepted: " << j.dump();
    return rpps::ErrorCode::InvalidArgument;
}

TEST(DatasetCsv, RoundTripIsBitwise) {
    const auto data = rpps::sample_dataset({4, {1.0, 0.5, -3.0, -0.5, 2.5}, 0.25}, 200, 3);
    std::stringstream buffer;
    rpps::write_dataset_csv(buffer, data);
    const auto back = rpps::read_dataset_csv(buffer);
    ASSERT_EQ(back.size(), data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        EXPECT_EQ(std::memcmp(&back.points[i].y1, &data.points[i].y1, sizeof(double)), 0);
        EXPECT_EQ(std::memcmp(&back.points[i].y2, &data.points[i].y2, sizeof(double)), 0);
    }
}

TEST(DatasetCsv, RejectsMalformedInput) {
    for (const char* text : {"a,b\n1,2\n", "y1,y2\n1\n", "y1,y2\n0.5,abc\n", "y1,y2\n0.5,1,2\n", ""}) {
        std::stringstream in(text);
        EXPECT_THROW(rpps::read_dataset_csv(in), rpps::Error) << text;
    }
}

TEST(DatasetCsv, AcceptsHeaderOnlyAndTrailingNewlines) {
    std::stringstream empty("y1,y2\n");
    EXPECT_TRUE(rpps::read_dataset_csv(empty).empty());
    std::stringstream crlf("y1,y2\r\n0.25,-1.5\r\n\n");
    const auto d = rpps::read_dataset_csv(crlf);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.points[0].y2, -1.5);
}

TEST(JsonBlocks, GeneratorSpecValidation) {
    const nlohmann::json good = {{"degree", 1}, {"coeffs", {0.0, 1.0}}, {"sigma", 0.3}};
    const auto spec = rpps::parse_block<rpps::GeneratorSpec>(good, "truth");
    EXPECT_EQ(spec.degree, 1);
    EXPECT_EQ(spec.sigma, 0.3);
    EXPECT_EQ(nlohmann::json(spec), good);

    auto bad = good;
    bad["coeffs"] = {0.0};
    EXPECT_EQ(code_of_parse(bad), rpps::ErrorCode::ConfigError);
    bad = good;
    bad["sigma"] = 0.0;
    EXPECT_EQ(code_of_parse(bad), rpps::ErrorCode::ConfigError);
    bad = good;
    bad["degree"] = -1;
    EXPECT_EQ(code_of_parse(bad), rpps::ErrorCode::ConfigError);
    bad = good;
    bad.erase("sigma");
    EXPECT_EQ(code_of_parse(bad), rpps::ErrorCode::ConfigError);
    bad = good;
    bad["sigma"] = "wide";
    EXPECT_EQ(code_of_parse(bad), rpps::ErrorCode::ConfigError);
}

TEST(JsonBlocks, NormalGammaRoundTripAndValidation) {
    const auto prior = rpps::default_prior({2});
    const nlohmann::json j = prior;
    const auto back = rpps::parse_block<rpps::NormalGammaParams>(j, "prior");
    EXPECT_EQ(back.mu, prior.mu);
    EXPECT_EQ(back.lambda, prior.lambda);
    EXPECT_EQ(back.alpha, prior.alpha);
    EXPECT_EQ(back.beta, prior.beta);

    auto bad = j;
    bad["lambda"] = {{1.0, 2.0, 0.0}, {2.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
    EXPECT_THROW(rpps::parse_block<rpps::NormalGammaParams>(bad, "prior"), rpps::Error);
    bad = j;
    bad["alpha"] = -0.5;
    EXPECT_THROW(rpps::parse_block<rpps::NormalGammaParams>(bad, "prior"), rpps::Error);
    bad = j;
    bad["mu"] = {0.0};
    EXPECT_THROW(rpps::parse_block<rpps::NormalGammaParams>(bad, "prior"), rpps::Error);
}

TEST(ScoreRecords, JsonShape) {
    rpps::ScoreEstimate est{1.5, 0.25, rpps::EstimatorKind::Bootstrap, 180, 3};
    const auto j = rpps::to_json(rpps::to_record(est, "boot"));
    EXPECT_EQ(j.at("estimator"), "boot");
    EXPECT_EQ(j.at("value"), 1.5);
    EXPECT_EQ(j.at("std_error"), 0.25);
    EXPECT_EQ(j.at("n_effective"), 180);
    EXPECT_EQ(j.at("floor_engaged"), 3);
    EXPECT_FALSE(j.contains("samples"));

    const auto plain = rpps::to_json(rpps::to_record(rpps::ScoreEstimate{2.0, {}, rpps::EstimatorKind::Delta, 12, 0}));
    EXPECT_EQ(plain.at("estimator"), "delta");
    EXPECT_TRUE(plain.at("std_error").is_null());

    rpps::Criterion crit{rpps::CriterionKind::WAIC, 9.0, 12, 1000};
    const auto c = rpps::to_json(rpps::to_record(crit));
    EXPECT_EQ(c.at("estimator"), "waic");
    EXPECT_EQ(c.at("samples"), 1000);
}

TEST(Selectors, ParseNamesObjectsAndUnknowns) {
    EXPECT_EQ(rpps::parse_selector("delta").label, "delta");
    EXPECT_THROW(rpps::parse_selector("jackknife"), rpps::Error);
    const auto h = rpps::parse_selector({{"kind", "holdout"}, {"n_train", 4}, {"n_valid", 8}, {"label", "h48"}, {"seed", 3}});
    EXPECT_EQ(h.label, "h48");
    EXPECT_EQ(h.seed, 3u);
    EXPECT_EQ(std::get<rpps::HoldOutSelector>(h.kind).n_valid, 8u);
    EXPECT_EQ(std::get<rpps::BootstrapSelector>(rpps::parse_selector("bootstrap").kind).b_resamples, 200u);
    try {
        rpps::parse_selector("loo");
        ADD_FAILURE();
    } catch (const rpps::Error& e) {
        EXPECT_EQ(e.code(), rpps::ErrorCode::ConfigError);
        EXPECT_NE(std::string(e.what()).find("jackknife"), std::string::npos);
    }
    const auto back = rpps::parse_selector(nlohmann::json::parse(rpps::to_json(h).dump()));
    EXPECT_EQ(rpps::to_json(back), rpps::to_json(h));
}

TEST(FormatDouble, RoundTrips) {
    for (double v : {0.1, -1e-300, 1.0 / 3.0, 6.02214076e23}) EXPECT_EQ(std::stod(rpps::format_double(v)), v);
}

}  // namespace
