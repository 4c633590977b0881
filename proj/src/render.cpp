#include "extquot/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace extquot {

namespace {

std::string join(std::span<const std::int64_t> values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string markdown_row(std::span<const std::string> cells) {
  std::string out = "|";
  for (const auto& cell : cells) out += " " + cell + " |";
  return out + "\n";
}

std::string markdown_rule(std::size_t columns) {
  std::string out = "|";
  for (std::size_t i = 0; i < columns; ++i) out += "---|";
  return out + "\n";
}

// Display width counting UTF-8 code points, for column alignment.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char ch) {
    return (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
  }));
}

std::string render_columns(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto grow = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(row[i]));
  };
  grow(header);
  for (const auto& row : rows) grow(row);
  auto line = [&](const std::vector<std::string>& row) {
    std::string out;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out += "  ";
      out += row[i];
      if (i + 1 != row.size()) out.append(width[i] - display_width(row[i]), ' ');
    }
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& row : rows) out += line(row);
  return out;
}

nlohmann::json singularity_json(const CyclicSingularity& s) {
  return {{"ambient_dim", s.ambient_dim}, {"group_order", s.group_order}, {"weights", s.weights}};
}

nlohmann::json base_json(const Partition& mu, const OmegaLabel& omega, std::int64_t torus_dim,
                         std::int64_t multiplicity, const CyclicSingularity& s) {
  return {{"partition", mu.parts()},
          {"omega_exponent", omega.exponent},
          {"omega_order", omega.order},
          {"torus_dim", torus_dim},
          {"multiplicity", multiplicity},
          {"singularity", singularity_json(s)}};
}

template <class Catalog>
nlohmann::json catalog_json(const Catalog& catalog, Form form) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : catalog.entries) entries.push_back(to_json(e));
  return {{"n", catalog.n}, {"k", catalog.k}, {"form", std::string(to_string(form))}, {"entries", entries}};
}

std::vector<std::string> base_csv_header() {
  return {"n", "k", "form", "partition", "omega_exponent", "omega_order", "torus_dim",
          "multiplicity", "ambient_dim", "group_order", "weights"};
}

std::vector<std::string> base_csv_cells(std::int64_t n, std::int64_t k, Form form, const Partition& mu,
                                        const OmegaLabel& omega, std::int64_t torus_dim,
                                        std::int64_t multiplicity, const CyclicSingularity& s) {
  return {std::to_string(n),         std::to_string(k),
          std::string(to_string(form)), mu.to_string(),
          std::to_string(omega.exponent), std::to_string(omega.order),
          std::to_string(torus_dim), std::to_string(multiplicity),
          std::to_string(s.ambient_dim), std::to_string(s.group_order),
          join(s.weights, ";")};
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows, OutputFormat format) {
  std::string out;
  switch (format) {
    case OutputFormat::csv:
      out = csv_row(header);
      for (const auto& row : rows) out += csv_row(row);
      return out;
    case OutputFormat::markdown:
      out = markdown_row(header) + markdown_rule(header.size());
      for (const auto& row : rows) out += markdown_row(row);
      return out;
    case OutputFormat::text:
      return render_columns(header, rows);
    case OutputFormat::json:
      break;
  }
  throw std::invalid_argument("render_table: json is handled by the caller");
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  return std::nullopt;
}

std::optional<Form> parse_form(std::string_view name) {
  if (name == "complex") return Form::complex;
  if (name == "real") return Form::real;
  return std::nullopt;
}

std::string_view to_string(Form form) { return form == Form::complex ? "complex" : "real"; }

std::string omega_string(const OmegaLabel& omega) {
  if (omega.exponent == 0) return "1";
  if (2 * omega.exponent == omega.h) return "-1";
  return "zeta_" + std::to_string(omega.h) + "^" + std::to_string(omega.exponent);
}

std::string singularity_string(const CyclicSingularity& s) {
  std::string out = "A^" + std::to_string(s.ambient_dim);
  if (!s.smooth()) out += "/C_" + std::to_string(s.group_order) + "(" + join(s.weights, ",") + ")";
  return out;
}

std::string variety_string(const ComplexComponent& c) {
  const bool torus = c.torus_dim > 0;
  const bool affine = c.singularity.ambient_dim > 0 || !c.singularity.smooth();
  if (!torus) return singularity_string(c.singularity);
  std::string out = "C*^" + std::to_string(c.torus_dim);
  if (affine) out += " × " + singularity_string(c.singularity);
  return out;
}

std::string variety_string(const RealComponent& c) {
  std::vector<std::string> simplices;
  for (std::int64_t dim : c.fiber_simplex_dims) {
    if (dim > 0) simplices.push_back("Δ^" + std::to_string(dim));
  }
  std::string fiber;
  for (std::size_t i = 0; i < simplices.size(); ++i) fiber += (i == 0 ? "" : "×") + simplices[i];
  if (fiber.empty()) fiber = "Δ^0";
  if (c.cyclic_order > 1) {
    if (simplices.size() > 1) fiber = "(" + fiber + ")";
    fiber += "/C_" + std::to_string(c.cyclic_order);
  }
  if (c.base_torus_dim == 0) return fiber;
  const std::string base = "T^" + std::to_string(c.base_torus_dim);
  return simplices.empty() ? base : base + " ⋉ " + fiber;
}

nlohmann::json to_json(const ComplexComponent& c) {
  return base_json(c.partition, c.omega, c.torus_dim, c.multiplicity, c.singularity);
}

nlohmann::json to_json(const RealComponent& c) {
  nlohmann::json j = base_json(c.partition, c.omega, c.base_torus_dim, c.multiplicity, c.fiber_action);
  j["fiber_simplex_dims"] = c.fiber_simplex_dims;
  j["join_counts"] = c.join_counts;
  j["action_orientation_preserving"] = c.action_orientation_preserving;
  if (c.bundle_orientable) j["bundle_orientable"] = *c.bundle_orientable;
  return j;
}

nlohmann::json to_json(const ComplexCatalog& catalog) { return catalog_json(catalog, Form::complex); }
nlohmann::json to_json(const RealCatalog& catalog) { return catalog_json(catalog, Form::real); }

std::string render_catalog(const ComplexCatalog& catalog, OutputFormat format) {
  if (format == OutputFormat::json) return to_json(catalog).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows;
  if (format == OutputFormat::csv) {
    auto header = base_csv_header();
    header.push_back("variety");
    for (const auto& c : catalog.entries) {
      auto row = base_csv_cells(catalog.n, catalog.k, Form::complex, c.partition, c.omega, c.torus_dim,
                                c.multiplicity, c.singularity);
      row.push_back(variety_string(c));
      rows.push_back(std::move(row));
    }
    return render_table(header, rows, format);
  }
  for (const auto& c : catalog.entries) {
    rows.push_back({c.partition.to_string(), omega_string(c.omega), std::to_string(c.multiplicity),
                    variety_string(c)});
  }
  return render_table({"mu", "omega", "|X|", "variety"}, rows, format);
}

std::string render_catalog(const RealCatalog& catalog, OutputFormat format) {
  if (format == OutputFormat::json) return to_json(catalog).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows;
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  if (format == OutputFormat::csv) {
    auto header = base_csv_header();
    for (const char* extra : {"fiber_simplex_dims", "join_counts", "action_orientation_preserving",
                              "bundle_orientable", "variety"}) {
      header.emplace_back(extra);
    }
    for (const auto& c : catalog.entries) {
      auto row = base_csv_cells(catalog.n, catalog.k, Form::real, c.partition, c.omega, c.base_torus_dim,
                                c.multiplicity, c.fiber_action);
      row.push_back(join(c.fiber_simplex_dims, ";"));
      row.push_back(join(c.join_counts, ";"));
      row.push_back(c.action_orientation_preserving ? "true" : "false");
      row.push_back(c.bundle_orientable ? (*c.bundle_orientable ? "true" : "false") : "");
      row.push_back(variety_string(c));
      rows.push_back(std::move(row));
    }
    return render_table(header, rows, format);
  }
  const bool k1 = catalog.k == 1;
  std::vector<std::string> header{"mu", "omega", "|X|", "component", "action preserves orientation"};
  if (k1) header.emplace_back("bundle orientable");
  for (const auto& c : catalog.entries) {
    std::vector<std::string> row{c.partition.to_string(), omega_string(c.omega), std::to_string(c.multiplicity),
                                 variety_string(c), yes_no(c.action_orientation_preserving)};
    if (k1) row.push_back(yes_no(c.bundle_orientable.value_or(true)));
    rows.push_back(std::move(row));
  }
  return render_table(header, rows, format);
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_row(std::span<const std::string> fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string render_betti_table(std::span<const BettiVector> rows, OutputFormat format) {
  std::size_t columns = 0;
  for (const auto& row : rows) columns = std::max(columns, row.ranks.size());
  if (format == OutputFormat::json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) out.push_back({{"n", row.n}, {"k", row.k}, {"betti", row.ranks}});
    return out.dump(2) + "\n";
  }
  std::vector<std::string> header{"n"};
  for (std::size_t j = 0; j < columns; ++j) header.push_back("b_" + std::to_string(j));
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line{std::to_string(row.n)};
    for (std::size_t j = 0; j < columns; ++j) {
      line.push_back(j < row.ranks.size() ? std::to_string(row.ranks[j]) : "");
    }
    cells.push_back(std::move(line));
  }
  return render_table(header, cells, format);
}

std::string render_ktheory_table(std::int64_t min_n, std::int64_t max_n, std::span<const KTheoryCell> cells,
                                 OutputFormat format) {
  std::map<std::pair<std::int64_t, std::int64_t>, KTheoryRanks> lookup;
  for (const auto& cell : cells) lookup[{cell.n, cell.k}] = cell.ranks;
  if (format == OutputFormat::json) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [key, ranks] : lookup) {
      out.push_back({{"n", key.first}, {"k", key.second}, {"k0", ranks.k0}, {"k1", ranks.k1}});
    }
    return out.dump(2) + "\n";
  }
  std::vector<std::string> header{"n"};
  for (std::int64_t k = 1; k <= max_n; ++k) header.push_back(std::to_string(k));
  std::vector<std::vector<std::string>> rows;
  for (std::int64_t n = std::max<std::int64_t>(min_n, 1); n <= max_n; ++n) {
    std::vector<std::string> line{std::to_string(n)};
    for (std::int64_t k = 1; k <= max_n; ++k) {
      const auto it = lookup.find({n, k});
      line.push_back(it == lookup.end() ? ""
                                        : std::to_string(it->second.k0) + "/" + std::to_string(it->second.k1));
    }
    rows.push_back(std::move(line));
  }
  return render_table(header, rows, format);
}

}  // namespace extquot
