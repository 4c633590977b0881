#pragma once

// Text encodings for catalogs and tables: JSON, CSV (RFC 4180 quoting),
// Markdown and a human-readable column layout.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "extquot/complex_quotient.hpp"
#include "extquot/real_quotient.hpp"
#include "extquot/topology.hpp"

namespace extquot {

enum class OutputFormat { text, json, csv, markdown };

std::optional<OutputFormat> parse_output_format(std::string_view name);
std::optional<Form> parse_form(std::string_view name);
std::string_view to_string(Form form);

/// "1", "-1" or "zeta_h^e".
std::string omega_string(const OmegaLabel& omega);

/// "A^3/C_4(1,2,3)"; "/C_d(...)" is omitted for the trivial group.
std::string singularity_string(const CyclicSingularity& s);

/// "C*^1 × A^2/C_2(1,1)"; a point is "A^0".
std::string variety_string(const ComplexComponent& c);

/// "T^1 ⋉ (Δ^1×Δ^1)/C_2"; Δ^0 factors are dropped unless nothing is left.
std::string variety_string(const RealComponent& c);

nlohmann::json to_json(const ComplexComponent& c);
nlohmann::json to_json(const RealComponent& c);
nlohmann::json to_json(const ComplexCatalog& catalog);
nlohmann::json to_json(const RealCatalog& catalog);

std::string render_catalog(const ComplexCatalog& catalog, OutputFormat format);
std::string render_catalog(const RealCatalog& catalog, OutputFormat format);

/// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_field(std::string_view field);
std::string csv_row(std::span<const std::string> fields);

/// Betti table: header "n,b_0,...,b_D" with D the largest degree present and
/// blank cells for absent degrees, one row per vector.
std::string render_betti_table(std::span<const BettiVector> rows, OutputFormat format);

/// K-theory table for rows n in [min_n, max_n] and columns k = 1..max_n;
/// cells are "K0/K1" and blank when k does not divide n.
struct KTheoryCell {
  std::int64_t n = 0;
  std::int64_t k = 0;
  KTheoryRanks ranks;
};
std::string render_ktheory_table(std::int64_t min_n, std::int64_t max_n,
                                 std::span<const KTheoryCell> cells, OutputFormat format);

}  // namespace extquot
