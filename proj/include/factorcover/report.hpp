#ifndef FACTORCOVER_REPORT_HPP
#define FACTORCOVER_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "factorcover/extremal.hpp"
#include "factorcover/factors.hpp"
#include "factorcover/spectra.hpp"
#include "factorcover/verify.hpp"

namespace fcover {

using Json = nlohmann::ordered_json;

/// Record layout, one JSON object per line:
///
///   schema       "factorcover.report/1"
///   record       spectrum | check | sweep | build | graph
///   tool_version string
///   command      array of strings (argv echo)
///   inputs       object
///   results      object
///   elapsed_ms   number >= 0 (excluded from golden comparisons)
///
/// Every spectral value is a measure object {value, method, residual}
/// with method in {full-eig, power, quotient} and residual a number, or
/// null for quotient roots.
inline constexpr const char* kSchemaId = "factorcover.report/1";

std::string tool_version();

Json measure(const SpectralResult& r);
Json measure(double value, SpectralMethod method, std::optional<double> residual);

Json to_json(const FamilyParams& p);
Json to_json(const Verdict& v);
Json to_json(const SweepReport& r);

Json make_record(const std::string& kind, const std::vector<std::string>& command, Json inputs, Json results,
                 double elapsed_ms);

/// Empty when the record conforms to the schema; otherwise one message per problem.
std::vector<std::string> validate_record(const Json& record);

/// Multi-line human summary for standard error.
std::string summarize(const SweepReport& r);

}  // namespace fcover

#endif  // FACTORCOVER_REPORT_HPP
