#pragma once

// Checked-in reference tables and the engine that recomputes and diffs them.

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace extquot {

enum class TableId { betti_k1, betti_k2, ktheory, sl6_catalogs, sl16_examples, su6_orientability };

std::vector<TableId> all_table_ids();
std::string_view to_string(TableId id);
std::optional<TableId> parse_table_id(std::string_view name);
/// Same as parse_table_id but throws std::invalid_argument for unknown names.
TableId table_id_or_throw(std::string_view name);
std::string fixture_filename(TableId id);

/// EXTQUOT_REFERENCE_DIR from the environment, else the directory compiled in.
std::filesystem::path default_reference_dir();

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column; throws std::runtime_error if absent.
  std::size_t column(std::string_view name) const;
};

/// RFC 4180 reader: quoted fields, doubled quotes, CRLF or LF line ends.
/// Throws std::runtime_error on an unterminated quote or ragged rows.
CsvTable read_csv(std::istream& in);
CsvTable read_csv_file(const std::filesystem::path& path);

struct CellMismatch {
  std::size_t line = 0;  // 1-based line in the fixture (header is line 1); 0 if no fixture row
  std::string row;       // e.g. "n=12" or "k=6 mu=3+3 omega=2/6"
  std::string column;
  std::string expected;  // fixture value
  std::string actual;    // recomputed value
};

struct VerifyReport {
  TableId id{};
  std::filesystem::path file;
  std::size_t rows_checked = 0;
  std::size_t cells_checked = 0;
  std::vector<CellMismatch> mismatches;

  bool clean() const { return mismatches.empty(); }
};

/// Recomputes every cell of the fixture and records each disagreement.
/// Throws std::runtime_error if the fixture cannot be read or parsed.
VerifyReport verify(TableId id, const std::filesystem::path& dir, unsigned jobs = 1);
VerifyReport verify(std::string_view id, const std::filesystem::path& dir, unsigned jobs = 1);

/// One of the built-in property suites run by "verify all".
struct PropertyCheck {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool clean() const { return failures.empty(); }
};

std::vector<PropertyCheck> run_property_checks(unsigned jobs = 1);

}  // namespace extquot
