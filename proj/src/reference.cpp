#include "extquot/reference.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "extquot/complex_quotient.hpp"
#include "extquot/numtheory.hpp"
#include "extquot/parallel.hpp"
#include "extquot/partitions.hpp"
#include "extquot/real_quotient.hpp"
#include "extquot/topology.hpp"

#ifndef EXTQUOT_DEFAULT_REFERENCE_DIR
#define EXTQUOT_DEFAULT_REFERENCE_DIR "data/reference"
#endif

namespace extquot {

namespace {

constexpr std::pair<TableId, std::string_view> kTableNames[] = {
    {TableId::betti_k1, "betti_k1"},         {TableId::betti_k2, "betti_k2"},
    {TableId::ktheory, "ktheory"},           {TableId::sl6_catalogs, "sl6_catalogs"},
    {TableId::sl16_examples, "sl16_examples"}, {TableId::su6_orientability, "su6_orientability"},
};

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::runtime_error("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw std::runtime_error("not an integer: '" + text + "'");
  return value;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) out.push_back(parse_int(item));
  return out;
}

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(values[i]);
  }
  return out;
}

// "e/N" reduced to lowest terms, 0 as "0/1".
std::pair<std::int64_t, std::int64_t> reduce_turn(std::int64_t e, std::int64_t d) {
  e %= d;
  const std::int64_t g = std::gcd(e, d);
  return {e / g, d / g};
}

std::pair<std::int64_t, std::int64_t> parse_turn(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw std::runtime_error("bad turn '" + text + "'");
  const std::int64_t d = parse_int(text.substr(slash + 1));
  if (d < 1) throw std::runtime_error("bad turn '" + text + "'");
  return reduce_turn(parse_int(text.substr(0, slash)), d);
}

std::string turn_string(std::pair<std::int64_t, std::int64_t> t) {
  return std::to_string(t.first) + "/" + std::to_string(t.second);
}

class Checker {
 public:
  explicit Checker(VerifyReport& report) : report_(report) {}

  void cell(std::size_t line, const std::string& row, const std::string& column, const std::string& expected,
            const std::string& actual) {
    ++report_.cells_checked;
    if (expected != actual) report_.mismatches.push_back({line, row, column, expected, actual});
  }

 private:
  VerifyReport& report_;
};

void verify_betti(const CsvTable& table, std::int64_t k, unsigned jobs, VerifyReport& report) {
  Checker check(report);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = r + 2;
    const std::int64_t n = parse_int(row[0]);
    const std::string label = "n=" + row[0];
    ++report.rows_checked;
    std::vector<std::int64_t> ranks;
    try {
      ranks = betti(n, k, jobs).ranks;
    } catch (const std::exception& e) {
      check.cell(line, label, "n", row[0], std::string("error: ") + e.what());
      continue;
    }
    const std::size_t columns = table.header.size() - 1;
    for (std::size_t j = 0; j < std::max(columns, ranks.size()); ++j) {
      const std::string actual = j < ranks.size() ? std::to_string(ranks[j]) : "";
      const std::string expected = j < columns ? row[j + 1] : "";
      check.cell(line, label, "b_" + std::to_string(j), expected, actual);
    }
  }
}

void verify_ktheory(const CsvTable& table, unsigned jobs, VerifyReport& report) {
  Checker check(report);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::int64_t n = parse_int(row[0]);
    ++report.rows_checked;
    for (std::size_t c = 1; c < table.header.size(); ++c) {
      const std::int64_t k = parse_int(table.header[c]);
      std::string actual;
      if (n % k == 0) {
        const KTheoryRanks kr = ktheory_ranks(n, k, jobs);
        actual = std::to_string(kr.k0) + "/" + std::to_string(kr.k1);
      }
      check.cell(r + 2, "n=" + row[0], "k=" + table.header[c], row[c], actual);
    }
  }
}

void verify_catalog(const CsvTable& table, bool complete, VerifyReport& report) {
  Checker check(report);
  const std::size_t col_n = table.column("n"), col_k = table.column("k"), col_mu = table.column("partition"),
                    col_turn = table.column("omega_turn"), col_mult = table.column("multiplicity"),
                    col_torus = table.column("torus_dim"), col_root = table.column("generator_root_order"),
                    col_exps = table.column("generator_exponents"), col_amb = table.column("ambient_dim"),
                    col_order = table.column("group_order"), col_weights = table.column("canonical_weights");

  // (n, k, partition) -> fixture row indices
  std::map<std::tuple<std::int64_t, std::int64_t, Partition>, std::vector<std::size_t>> groups;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    groups[{parse_int(row[col_n]), parse_int(row[col_k]), parse_partition(row[col_mu])}].push_back(r);
  }

  if (complete) {
    std::map<std::pair<std::int64_t, std::int64_t>, bool> seen;
    for (const auto& [key, rows] : groups) seen[{std::get<0>(key), std::get<1>(key)}] = true;
    for (const auto& [nk, unused] : seen) {
      for (const Partition& mu : PartitionStream(nk.first)) {
        if (groups.count({nk.first, nk.second, mu})) continue;
        check.cell(0, "n=" + std::to_string(nk.first) + " k=" + std::to_string(nk.second), "partition", "",
                   mu.to_string());
      }
    }
  }

  for (const auto& [key, rows] : groups) {
    const auto& [n, k, mu] = key;
    const std::string group_label = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " mu=" + mu.to_string();
    std::vector<ComplexComponent> computed;
    try {
      require_divides(k, n);
      if (mu.n() != n) throw std::domain_error("partition does not sum to n");
      computed = complex_components(mu, k);
    } catch (const std::exception& e) {
      check.cell(rows.front() + 2, group_label, "partition", mu.to_string(), std::string("error: ") + e.what());
      continue;
    }
    std::map<std::pair<std::int64_t, std::int64_t>, const ComplexComponent*> by_turn;
    for (const auto& c : computed) by_turn[reduce_turn(c.omega.exponent, c.omega.h)] = &c;

    std::map<std::pair<std::int64_t, std::int64_t>, bool> listed;
    for (std::size_t r : rows) {
      const auto& row = table.rows[r];
      const std::size_t line = r + 2;
      ++report.rows_checked;
      const auto turn = parse_turn(row[col_turn]);
      listed[turn] = true;
      const std::string label = group_label + " omega=" + row[col_turn];

      // The printed generator must translate to the stored canonical weights.
      const std::int64_t root = parse_int(row[col_root]);
      const std::vector<std::int64_t> exps = parse_int_list(row[col_exps]);
      std::int64_t common = root;
      for (std::int64_t e : exps) common = std::gcd(common, e);
      CyclicSingularity printed{static_cast<std::int64_t>(exps.size()), root / common, {}};
      for (std::int64_t e : exps) printed.weights.push_back((e / common) % printed.group_order);
      printed = canonical_singularity(printed);
      check.cell(line, label, "generator_exponents",
                 row[col_order] + ":" + row[col_weights],
                 std::to_string(printed.group_order) + ":" + join(printed.weights));

      const auto it = by_turn.find(turn);
      if (it == by_turn.end()) {
        check.cell(line, label, "omega_turn", row[col_turn], "absent");
        continue;
      }
      const ComplexComponent& c = *it->second;
      const CyclicSingularity canonical = canonical_singularity(c.singularity);
      check.cell(line, label, "multiplicity", row[col_mult], std::to_string(c.multiplicity));
      check.cell(line, label, "torus_dim", row[col_torus], std::to_string(c.torus_dim));
      check.cell(line, label, "ambient_dim", row[col_amb], std::to_string(canonical.ambient_dim));
      check.cell(line, label, "group_order", row[col_order], std::to_string(canonical.group_order));
      check.cell(line, label, "canonical_weights", row[col_weights], join(canonical.weights));
    }
    for (const auto& [turn, component] : by_turn) {
      if (!listed.count(turn)) check.cell(rows.front() + 2, group_label, "omega_turn", "", turn_string(turn));
    }
  }
}

void verify_su6(const CsvTable& table, VerifyReport& report) {
  Checker check(report);
  const std::size_t col_mu = table.column("partition"), col_jg = table.column("j_over_g"),
                    col_m1 = table.column("m_minus_1"), col_mult = table.column("multiplicity"),
                    col_torus = table.column("base_torus_dim"), col_fiber = table.column("fiber_simplex_dims"),
                    col_orient = table.column("orientable");
  std::map<Partition, bool> listed;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = r + 2;
    const Partition mu = parse_partition(row[col_mu]);
    listed[mu] = true;
    const std::string label = "mu=" + mu.to_string();
    ++report.rows_checked;
    if (mu.n() != 6) {
      check.cell(line, label, "partition", row[col_mu], "sums to " + std::to_string(mu.n()));
      continue;
    }
    const auto components = real_components(mu, 1);
    const RealComponent& c = components.front();
    const PartitionInvariants inv = invariants(mu);
    std::vector<std::int64_t> j_over_g, nonzero;
    for (const auto& run : mu.runs()) j_over_g.push_back(run.part / inv.g);
    for (std::int64_t dim : c.fiber_simplex_dims) {
      if (dim != 0) nonzero.push_back(dim);
    }
    check.cell(line, label, "j_over_g", row[col_jg], join(j_over_g));
    check.cell(line, label, "m_minus_1", row[col_m1], join(c.fiber_simplex_dims));
    check.cell(line, label, "multiplicity", row[col_mult], std::to_string(c.multiplicity));
    check.cell(line, label, "base_torus_dim", row[col_torus], std::to_string(c.base_torus_dim));
    check.cell(line, label, "fiber_simplex_dims", row[col_fiber], join(nonzero));
    check.cell(line, label, "orientable", row[col_orient], c.bundle_orientable.value_or(true) ? "Yes" : "No");
  }
  for (const Partition& mu : PartitionStream(6)) {
    if (!listed.count(mu)) check.cell(0, "mu=" + mu.to_string(), "partition", "", mu.to_string());
  }
}

}  // namespace

std::vector<TableId> all_table_ids() {
  std::vector<TableId> out;
  for (const auto& [id, name] : kTableNames) out.push_back(id);
  return out;
}

std::string_view to_string(TableId id) {
  for (const auto& [candidate, name] : kTableNames) {
    if (candidate == id) return name;
  }
  throw std::logic_error("unknown table id");
}

std::optional<TableId> parse_table_id(std::string_view name) {
  for (const auto& [id, candidate] : kTableNames) {
    if (candidate == name) return id;
  }
  return std::nullopt;
}

TableId table_id_or_throw(std::string_view name) {
  if (auto id = parse_table_id(name)) return *id;
  throw std::invalid_argument("unknown reference table '" + std::string(name) + "'");
}

std::string fixture_filename(TableId id) { return std::string(to_string(id)) + ".csv"; }

std::filesystem::path default_reference_dir() {
  if (const char* env = std::getenv("EXTQUOT_REFERENCE_DIR"); env && *env) return env;
  return EXTQUOT_DEFAULT_REFERENCE_DIR;
}

std::size_t CsvTable::column(std::string_view name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::runtime_error("missing CSV column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(std::istream& in) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, field_started = false;
  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };
  char ch = 0;
  while (in.get(ch)) {
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          in.get(ch);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    if (ch == '"' && !field_started) {
      quoted = field_started = true;
    } else if (ch == ',') {
      end_field();
    } else if (ch == '\r' && in.peek() == '\n') {
      continue;
    } else if (ch == '\n') {
      end_record();
    } else {
      field += ch;
      field_started = true;
    }
  }
  if (quoted) throw std::runtime_error("CSV: unterminated quoted field");
  if (field_started || !record.empty()) end_record();

  CsvTable table;
  if (records.empty()) throw std::runtime_error("CSV: missing header");
  table.header = std::move(records.front());
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].size() != table.header.size()) {
      throw std::runtime_error("CSV: line " + std::to_string(i + 1) + " has " + std::to_string(records[i].size()) +
                               " fields, expected " + std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(records[i]));
  }
  return table;
}

CsvTable read_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_csv(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

VerifyReport verify(TableId id, const std::filesystem::path& dir, unsigned jobs) {
  VerifyReport report;
  report.id = id;
  report.file = dir / fixture_filename(id);
  const CsvTable table = read_csv_file(report.file);
  try {
    switch (id) {
      case TableId::betti_k1: verify_betti(table, 1, jobs, report); break;
      case TableId::betti_k2: verify_betti(table, 2, jobs, report); break;
      case TableId::ktheory: verify_ktheory(table, jobs, report); break;
      case TableId::sl6_catalogs: verify_catalog(table, true, report); break;
      case TableId::sl16_examples: verify_catalog(table, false, report); break;
      case TableId::su6_orientability: verify_su6(table, report); break;
    }
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(report.file.string() + ": " + e.what());
  }
  return report;
}

VerifyReport verify(std::string_view id, const std::filesystem::path& dir, unsigned jobs) {
  return verify(table_id_or_throw(id), dir, jobs);
}

// ---------------------------------------------------------------------------

std::vector<PropertyCheck> run_property_checks(unsigned jobs) {
  std::vector<PropertyCheck> out;

  {
    PropertyCheck check{"duality n<=30", 0, {}};
    for (std::int64_t n = 1; n <= 30; ++n) {
      for (std::int64_t k : divisors(n)) {
        ++check.cases;
        const DualityReport report = duality_report(n, k);
        if (!report.consistent()) {
          check.failures.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
    out.push_back(std::move(check));
  }

  {
    PropertyCheck check{"component count sum over omega n<=40", 0, {}};
    std::vector<std::vector<std::string>> failures(40);
    std::vector<std::size_t> cases(40, 0);
    parallel_for(40, jobs, [&](std::size_t unit) {
      const auto n = static_cast<std::int64_t>(unit) + 1;
      for (std::int64_t k : divisors(n)) {
        for (const Partition& mu : PartitionStream(n)) {
          ++cases[unit];
          std::int64_t sum = 0;
          for (const auto& c : complex_components(mu, k)) sum += c.multiplicity;
          if (sum != y_mu_count(mu, k)) {
            failures[unit].push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + " mu=" + mu.to_string());
          }
        }
      }
    });
    for (std::size_t u = 0; u < 40; ++u) {
      check.cases += cases[u];
      check.failures.insert(check.failures.end(), failures[u].begin(), failures[u].end());
    }
    out.push_back(std::move(check));
  }

  {
    PropertyCheck check{"pillai sum equals totient form a<=10000", 0, {}};
    for (std::int64_t a = 1; a <= 10000; ++a) {
      ++check.cases;
      if (pillai(a) != pillai_via_totient(a)) check.failures.push_back("a=" + std::to_string(a));
    }
    out.push_back(std::move(check));
  }

  {
    PropertyCheck euler{"euler characteristic equals sigma n<=45", 0, {}};
    PropertyCheck top{"top betti formula n<=45", 0, {}};
    for (std::int64_t n = 1; n <= 45; ++n) {
      const BettiVector b = betti(n, 1, jobs);
      ++euler.cases;
      if (euler_characteristic(b) != divisor_sigma(n)) euler.failures.push_back("n=" + std::to_string(n));
      ++top.cases;
      const TopBetti t = top_betti(n);
      if (static_cast<std::size_t>(t.degree + 1) != b.ranks.size() || t.rank != b.ranks.back()) {
        top.failures.push_back("n=" + std::to_string(n));
      }
    }
    out.push_back(std::move(euler));
    out.push_back(std::move(top));
  }

  {
    PropertyCheck check{"catalog betti equals streamed betti n<=30", 0, {}};
    for (std::int64_t n = 1; n <= 30; ++n) {
      for (std::int64_t k : divisors(n)) {
        ++check.cases;
        const BettiVector streamed = betti(n, k, jobs);
        if (betti_from_catalog(decompose_complex(n, k)) != streamed ||
            betti_from_catalog(decompose_real(n, k)) != streamed) {
          check.failures.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
      }
    }
    out.push_back(std::move(check));
  }

  {
    PropertyCheck check{"unimodular completion 1000 vectors", 0, {}};
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::int64_t> length(1, 8), entry(-50, 50);
    while (check.cases < 1000) {
      std::vector<std::int64_t> v(static_cast<std::size_t>(length(rng)));
      for (auto& x : v) x = entry(rng);
      if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) continue;
      if (v.size() == 1 && v[0] < 0) continue;
      ++check.cases;
      std::vector<std::int64_t> abs_v;
      for (std::int64_t x : v) abs_v.push_back(x < 0 ? -x : x);
      const std::int64_t g = gcd_many(abs_v);
      const UnimodularMatrix u = unimodular_completion(v);
      bool ok = u.determinant() == 1;
      for (std::size_t i = 0; i < v.size(); ++i) ok = ok && u(i, 0) == v[i] / g;
      if (!ok) check.failures.push_back("v=" + join(v));
    }
    out.push_back(std::move(check));
  }

  return out;
}

}  // namespace extquot
