#pragma once

#include "flagjac/jacobi_fields.hpp"
#include "flagjac/osculating_rank.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flagjac {

enum class Format { json, csv, text };

std::optional<Format> parse_format(std::string_view s);
std::string_view format_name(Format f);

/// Decimal with 17 significant digits ("%.17g").
std::string fmt17(double v);

/// Config echo embedded in every artifact, in insertion order.
using Provenance = std::vector<std::pair<std::string, std::string>>;

struct MatrixArtifact {
    int k = 0;
    Variant variant = Variant::repaired;
    Point6 x{};
    SymMatrix6 matrix = SymMatrix6::Zero();
    /// Upper triangle, row-major, when x was given exactly.
    std::optional<std::array<QSqrt2, kUpper>> exact;
    std::optional<RationalPoint> x_exact;
};

std::string write_matrix(const MatrixArtifact& m, Format f, const Provenance& prov);
std::string write_audit(const AuditReport& r, Format f, const Provenance& prov);
std::string write_repair(const RepairSearch& search, const OracleRepair* oracle, Format f, const Provenance& prov);
std::string write_calibration(const Calibration& cal, Format f, const Provenance& prov, const ValidationResult* validation = nullptr);
std::string write_recurrence(const Recurrence& rec, const RecurrenceCheck* check, Format f, const Provenance& prov);
std::string write_trajectory(const FieldTrajectory& tr, Format f, const Provenance& prov);
std::string write_conjugate(const std::vector<ConjugatePoint>& pts, Format f, const Provenance& prov);

class ArtifactError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a calibration written by write_calibration(..., Format::json, ...)
/// and rebuilds its bracket table. Throws ArtifactError.
Calibration read_calibration(std::string_view json_text);

}  // namespace flagjac
