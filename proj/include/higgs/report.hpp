#ifndef HIGGS_REPORT_HPP
#define HIGGS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "higgs/betti.hpp"
#include "higgs/errors.hpp"
#include "higgs/spectral.hpp"

namespace higgs {

enum class OutputFormat { Text, Json, Csv };
enum class Section { Dims, Spectral, FixedPoints, Betti };

/// Throws std::invalid_argument on unknown names (rejected at parse time).
Section parse_section(const std::string& name);
OutputFormat parse_format(const std::string& name);
Flavor parse_flavor(const std::string& name);

/**
 * One CLI report request.  When `sections` is empty the set defaults to
 * every section defined for the given (genus, rank); explicitly requested
 * sections are strict and propagate their typed errors.
 */
struct ReportRequest {
    int genus = 0;
    int rank = 0;
    long long degree = 1;
    Flavor flavor = Flavor::GL;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::vector<Section>> sections;
};

struct DimsData {
    long long base = 0;
    long long total = 0;
    std::optional<long long> stable_bundles;  // defined for g >= 2 only
};

struct FixedPointRow {
    VHSType type;
    BigInt index;
};

/// Everything one report can carry; absent sections were not requested
/// (or not defined for the request under the adaptive default).
struct ReportData {
    ModuliSpec spec;
    std::optional<DimsData> dims;
    std::optional<SpectralData> spectral;
    std::optional<std::vector<FixedPointRow>> fixed_points;
    std::optional<BettiReport> betti;
};

ReportData collect_report(const ReportRequest& req);

/// The JSON document for a request; key order is fixed, values are exact
/// 64-bit integers (JsonIntegerRange if a coefficient will not fit).
nlohmann::ordered_json report_json(const ReportRequest& req);

/// Canonical serialization: two-space indent plus trailing newline.
/// Parsing the output and re-serializing it reproduces the bytes.
std::string to_canonical_string(const nlohmann::ordered_json& j);

/// Renders in the requested format.
std::string render_report(const ReportRequest& req);

/// {"error": {"code": ..., "message": ...}} for the CLI's stderr.
std::string error_json(const DomainError& e);

}  // namespace higgs

#endif
