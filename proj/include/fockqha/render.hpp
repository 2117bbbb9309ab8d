#pragma once

// JSON and plain-text renderings. Arbitrary-precision quantities (dimensions,
// counts, coefficients) are emitted as decimal strings; shape parts, residues,
// root coefficients and exponents stay JSON numbers.

#include "fockqha/crystal.hpp"
#include "fockqha/dimension.hpp"
#include "fockqha/fock.hpp"
#include "fockqha/qharep.hpp"
#include "fockqha/reptype.hpp"
#include "fockqha/shifted.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fockqha::render {

using nlohmann::json;

json to_json(const ShiftedDiagram& lambda);
json to_json(const ResidueSequence& nu);
json to_json(const RootElement& beta);
json to_json(const DimTerm& term);
json to_json(const DimReport& report);
json to_json(const FockVector& v);
json to_json(const TypeVerdict& verdict);
json to_json(const BrauerData& data);
/// Entries are JSON integers when integral, otherwise "p/q" strings.
json to_json(const Matrix& m);
json to_json(const Violation& v);
json to_json(const GalleryEntry& entry);

/// Generator tag -> matrix, tags "e(0,1,2,1)", "x_1", "psi_1".
json generators_json(const MatrixRep& rep);

std::string text(const DimReport& report);
std::string text(const TypeVerdict& verdict, const std::optional<BrauerData>& brauer);
std::string text(const Matrix& m);
/// One row per line, hook lengths right-aligned in shifted position.
std::string hook_grid(const ShiftedDiagram& lambda);

}  // namespace fockqha::render
