#pragma once

#include <json.hpp>

#include "hsg/stable.hpp"

namespace hsg {

using Json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& data);

Json json_of(const LengthValue& l); // integer, or the string "inf"
Json json_of(const HilbertFunction& h);
Json json_of(const ThetaReport& r);
Json json_of(const RigidityReport& r);
Json json_of(const BettiTable& b);
Json json_of(const PeriodicityCertificate& c);
Json json_of(const StableTable& t);
Json json_of(const StableIdentityReport& r);
Json json_of(const LengthDualityReport& r);
Json json_of(const DualThetaReport& r);
Json json_of(const DepthFormulaReport& r);
Json json_of(const DimensionInequalityReport& r);
Json json_of(const PushforwardPropertyReport& r);
Json json_of(const JothilingamReport& r);
Json json_of(const McmCriterionReport& r);
Json json_of(const TensorDepthReport& r);
Json json_of(const BiadditivityReport& r);
Json module_summary(const GradedModule& m);

// Top-level report: {tool, version, command, config_digest, seed, results,
// verdict}.  Deterministic for a fixed config and seed (no wall-clock data).
class ReportBuilder {
public:
    ReportBuilder(std::string command, std::string config_digest, uint64_t seed);

    // verdict of a result participates in the overall aggregation
    void add_result(Json result);
    void add_result(Json result, Verdict v);

    Verdict overall() const { return overall_; }
    Json finish() const;

private:
    Json j_;
    Verdict overall_ = Verdict::NotApplicable;
    bool any_holds_ = false, any_violated_ = false;
};

int exit_code_for(Verdict v); // 0 holds / not-applicable, 1 violated

} // namespace hsg
