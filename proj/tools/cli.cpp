#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "extquot/complex_quotient.hpp"
#include "extquot/numtheory.hpp"
#include "extquot/parallel.hpp"
#include "extquot/partitions.hpp"
#include "extquot/real_quotient.hpp"
#include "extquot/reference.hpp"
#include "extquot/render.hpp"
#include "extquot/topology.hpp"

namespace extquot {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::optional<unsigned> jobs;
  std::int64_t n = 1;
  std::int64_t k = 1;
  std::string partition;
  std::int64_t omega = 0;
  std::string form = "complex";
  std::string format = "text";
  std::string kind = "betti";
  std::int64_t min_n = 1;
  std::int64_t max_n = 0;
  bool even_only = false;
  std::string suite;
  std::string data_dir;
  std::vector<std::string> tables;
};

OutputFormat format_of(const Config& cfg) { return *parse_output_format(cfg.format); }

std::string join(const std::vector<std::int64_t>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

std::optional<Partition> requested_partition(const Config& cfg) {
  if (cfg.partition.empty()) return std::nullopt;
  Partition mu = parse_partition(cfg.partition);
  if (mu.n() != cfg.n) {
    throw std::domain_error("partition " + mu.to_string() + " sums to " + std::to_string(mu.n()) + ", not " +
                            std::to_string(cfg.n));
  }
  return mu;
}

int cmd_decompose(const Config& cfg, std::ostream& out) {
  require_divides(cfg.k, cfg.n);
  const auto mu = requested_partition(cfg);
  if (*parse_form(cfg.form) == Form::complex) {
    ComplexCatalog catalog{cfg.n, cfg.k, mu ? complex_components(*mu, cfg.k) : decompose_complex(cfg.n, cfg.k).entries};
    out << render_catalog(catalog, format_of(cfg));
  } else {
    RealCatalog catalog{cfg.n, cfg.k, mu ? real_components(*mu, cfg.k) : decompose_real(cfg.n, cfg.k).entries};
    out << render_catalog(catalog, format_of(cfg));
  }
  return kExitOk;
}

int cmd_component(const Config& cfg, std::ostream& out) {
  require_divides(cfg.k, cfg.n);
  const auto mu = requested_partition(cfg);
  if (!mu) throw std::domain_error("--partition is required");
  const auto omegas = enumerate_omegas(*mu, cfg.k);
  const auto h = static_cast<std::int64_t>(omegas.size());
  if (cfg.omega < 0 || cfg.omega >= h) {
    throw std::domain_error("--omega must lie in 0.." + std::to_string(h - 1) + " (h = gcd(g, k) = " +
                            std::to_string(h) + ")");
  }
  const OmegaLabel& omega = omegas[static_cast<std::size_t>(cfg.omega)];
  const OutputFormat format = format_of(cfg);

  if (*parse_form(cfg.form) == Form::complex) {
    const ComplexComponent c = complex_component(*mu, omega, cfg.k);
    if (format != OutputFormat::text) {
      out << render_catalog(ComplexCatalog{cfg.n, cfg.k, {c}}, format);
      return kExitOk;
    }
    out << "partition          " << c.partition.to_string() << "\n"
        << "omega              " << omega_string(c.omega) << " (order " << c.omega.order << ")\n"
        << "|X|                " << c.multiplicity << "\n"
        << "torus_dim          " << c.torus_dim << "\n"
        << "singularity        " << singularity_string(c.singularity) << "\n"
        << "canonical          " << singularity_string(canonical_singularity(c.singularity)) << "\n"
        << "reduced            " << singularity_string(reduced_singularity(c.singularity)) << "\n"
        << "variety            " << variety_string(c) << "\n";
    return kExitOk;
  }
  const RealComponent c = real_component(*mu, omega, cfg.k);
  if (format != OutputFormat::text) {
    out << render_catalog(RealCatalog{cfg.n, cfg.k, {c}}, format);
    return kExitOk;
  }
  out << "partition          " << c.partition.to_string() << "\n"
      << "omega              " << omega_string(c.omega) << " (order " << c.omega.order << ")\n"
      << "|X|                " << c.multiplicity << "\n"
      << "base_torus_dim     " << c.base_torus_dim << "\n"
      << "fiber_simplex_dims " << join(c.fiber_simplex_dims, " ") << "\n"
      << "cyclic_order       " << c.cyclic_order << "\n"
      << "join_counts        " << join(c.join_counts, " ") << "\n"
      << "action_orientation " << (c.action_orientation_preserving ? "preserving" : "reversing") << "\n";
  if (c.bundle_orientable) out << "bundle_orientable  " << (*c.bundle_orientable ? "yes" : "no") << "\n";
  out << "variety            " << variety_string(c) << "\n";
  return kExitOk;
}

int cmd_betti(const Config& cfg, unsigned jobs, std::ostream& out) {
  const BettiVector b = betti(cfg.n, cfg.k, jobs);
  if (format_of(cfg) == OutputFormat::text) {
    out << join(b.ranks, " ") << "\n";
  } else {
    out << render_betti_table(std::span(&b, 1), format_of(cfg));
  }
  return kExitOk;
}

int cmd_ktheory(const Config& cfg, unsigned jobs, std::ostream& out) {
  const KTheoryRanks kr = ktheory_ranks(cfg.n, cfg.k, jobs);
  switch (format_of(cfg)) {
    case OutputFormat::text: out << kr.k0 << " " << kr.k1 << "\n"; break;
    case OutputFormat::json:
      out << nlohmann::json{{"n", cfg.n}, {"k", cfg.k}, {"k0", kr.k0}, {"k1", kr.k1}}.dump(2) << "\n";
      break;
    case OutputFormat::csv:
      out << "n,k,k0,k1\n" << cfg.n << "," << cfg.k << "," << kr.k0 << "," << kr.k1 << "\n";
      break;
    case OutputFormat::markdown:
      out << "| n | k | K0 | K1 |\n|---|---|---|---|\n"
          << "| " << cfg.n << " | " << cfg.k << " | " << kr.k0 << " | " << kr.k1 << " |\n";
      break;
  }
  return kExitOk;
}

int cmd_euler(const Config& cfg, unsigned jobs, std::ostream& out) {
  const std::int64_t chi = euler_characteristic(cfg.n, cfg.k, jobs);
  switch (format_of(cfg)) {
    case OutputFormat::text: out << chi << "\n"; break;
    case OutputFormat::json:
      out << nlohmann::json{{"n", cfg.n}, {"k", cfg.k}, {"euler", chi}}.dump(2) << "\n";
      break;
    case OutputFormat::csv: out << "n,k,euler\n" << cfg.n << "," << cfg.k << "," << chi << "\n"; break;
    case OutputFormat::markdown:
      out << "| n | k | euler |\n|---|---|---|\n| " << cfg.n << " | " << cfg.k << " | " << chi << " |\n";
      break;
  }
  return kExitOk;
}

int cmd_table(const Config& cfg, unsigned jobs, std::ostream& out) {
  if (cfg.k < 1) throw std::domain_error("--k must be positive");
  const std::int64_t first = std::max<std::int64_t>(cfg.min_n, 1);
  auto wanted = [&](std::int64_t n) { return !cfg.even_only || n % 2 == 0; };

  if (cfg.kind == "betti") {
    std::vector<std::int64_t> ns;
    for (std::int64_t n = first; n <= cfg.max_n; ++n) {
      if (n % cfg.k == 0 && wanted(n)) ns.push_back(n);
    }
    std::vector<BettiVector> rows(ns.size());
    // Whole rows are the work units; each row is computed sequentially.
    parallel_for(ns.size(), jobs, [&](std::size_t i) { rows[i] = betti(ns[i], cfg.k, 1); });
    out << render_betti_table(rows, format_of(cfg));
    return kExitOk;
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> keys;
  for (std::int64_t n = first; n <= cfg.max_n; ++n) {
    if (!wanted(n)) continue;
    for (std::int64_t k : divisors(n)) keys.emplace_back(n, k);
  }
  std::vector<KTheoryCell> cells(keys.size());
  parallel_for(keys.size(), jobs, [&](std::size_t i) {
    cells[i] = {keys[i].first, keys[i].second, ktheory_ranks(keys[i].first, keys[i].second, 1)};
  });
  out << render_ktheory_table(first, cfg.max_n, cells, format_of(cfg));
  return kExitOk;
}

std::string torus_counts_string(const std::map<std::int64_t, std::int64_t>& counts) {
  std::string out;
  for (const auto& [dim, count] : counts) out += (out.empty() ? "" : " ") + std::to_string(dim) + ":" + std::to_string(count);
  return out;
}

int cmd_duality(const Config& cfg, std::ostream& out) {
  if (cfg.n < 1) throw std::domain_error("n must be positive");
  bool all_consistent = true;
  nlohmann::json reports = nlohmann::json::array();
  std::ostringstream text;
  for (std::int64_t k : divisors(cfg.n)) {
    const DualityReport r = duality_report(cfg.n, k);
    all_consistent = all_consistent && r.consistent();
    std::vector<std::string> differing;
    for (const auto& mu : r.singularity_differences()) differing.push_back(mu.to_string());
    nlohmann::json mismatched = nlohmann::json::array();
    for (const auto& p : r.partitions) {
      if (p.count != p.dual_count || p.torus_counts != p.dual_torus_counts) {
        mismatched.push_back({{"partition", p.partition.to_string()},
                              {"count", p.count},
                              {"dual_count", p.dual_count},
                              {"torus_counts", torus_counts_string(p.torus_counts)},
                              {"dual_torus_counts", torus_counts_string(p.dual_torus_counts)}});
      }
    }
    reports.push_back({{"k", k},
                       {"dual_k", r.dual_k},
                       {"betti", r.betti.ranks},
                       {"dual_betti", r.dual_betti.ranks},
                       {"betti_equal", r.betti_equal},
                       {"counts_equal", r.counts_equal},
                       {"torus_counts_equal", r.torus_counts_equal},
                       {"mismatched_partitions", mismatched},
                       {"singularity_differences", differing}});
    auto verdict = [](bool ok) { return ok ? "match" : "MISMATCH"; };
    text << "k=" << k << " n/k=" << r.dual_k << "  betti " << verdict(r.betti_equal) << " ("
         << join(r.betti.ranks, " ") << " | " << join(r.dual_betti.ranks, " ") << ")  |Y_mu| "
         << verdict(r.counts_equal) << "  torus dims " << verdict(r.torus_counts_equal) << "\n";
    if (!differing.empty()) {
      text << "  singularities differ at:";
      for (const auto& mu : differing) text << " " << mu;
      text << "\n";
    }
  }
  if (format_of(cfg) == OutputFormat::json) {
    out << nlohmann::json{{"n", cfg.n}, {"consistent", all_consistent}, {"reports", reports}}.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return all_consistent ? kExitOk : kExitMismatch;
}

int cmd_verify(const Config& cfg, unsigned jobs, std::ostream& out) {
  const std::filesystem::path dir = cfg.data_dir.empty() ? default_reference_dir() : std::filesystem::path(cfg.data_dir);
  std::vector<TableId> ids;
  if (cfg.tables.empty()) {
    ids = all_table_ids();
  } else {
    for (const auto& name : cfg.tables) ids.push_back(table_id_or_throw(name));
  }

  std::size_t total = 0;
  nlohmann::json tables = nlohmann::json::array();
  std::ostringstream text;
  for (TableId id : ids) {
    const VerifyReport r = verify(id, dir, jobs);
    total += r.mismatches.size();
    nlohmann::json mismatches = nlohmann::json::array();
    text << to_string(id) << ": " << r.rows_checked << " rows, " << r.cells_checked << " cells, "
         << r.mismatches.size() << " mismatches\n";
    for (const auto& m : r.mismatches) {
      mismatches.push_back({{"line", m.line},
                            {"row", m.row},
                            {"column", m.column},
                            {"expected", m.expected},
                            {"actual", m.actual}});
      text << "  " << r.file.filename().string() << ":" << m.line << " [" << m.row << "] " << m.column
           << ": expected '" << m.expected << "', got '" << m.actual << "'\n";
    }
    tables.push_back({{"id", std::string(to_string(id))},
                      {"file", r.file.string()},
                      {"rows_checked", r.rows_checked},
                      {"cells_checked", r.cells_checked},
                      {"mismatches", mismatches}});
  }

  nlohmann::json properties = nlohmann::json::array();
  if (cfg.suite == "all") {
    for (const auto& p : run_property_checks(jobs)) {
      total += p.failures.size();
      properties.push_back({{"name", p.name}, {"cases", p.cases}, {"failures", p.failures}});
      text << "property " << p.name << ": " << p.cases << " cases, " << p.failures.size() << " failures\n";
      for (const auto& f : p.failures) text << "  " << f << "\n";
    }
  }

  if (format_of(cfg) == OutputFormat::json) {
    out << nlohmann::json{{"suite", cfg.suite},
                          {"data_dir", dir.string()},
                          {"tables", tables},
                          {"properties", properties},
                          {"total_mismatches", total},
                          {"clean", total == 0}}
               .dump(2)
        << "\n";
  } else {
    out << text.str() << (total == 0 ? "clean\n" : std::to_string(total) + " mismatches\n");
  }
  return total == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Extended quotients of SL_n(C)/C_k and SU_n(C)/C_k: components, Betti numbers, K-theory."};
  app.name("extquot");
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--jobs,-j", cfg.jobs, "Worker threads (EXTQUOT_JOBS overrides; default: all cores)")
      ->check(CLI::PositiveNumber);

  const std::vector<std::string> formats{"text", "json", "csv", "markdown", "md"};
  auto add_nk = [&](CLI::App* sub, bool k_flag) {
    sub->add_option("--n", cfg.n, "Rank parameter n")->required()->check(CLI::PositiveNumber);
    if (k_flag) sub->add_option("--k", cfg.k, "Order of the central subgroup C_k (k | n)")->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub, const std::string& fallback) {
    cfg.format = fallback;
    sub->add_option("--format", cfg.format, "text, json, csv or markdown")->check(CLI::IsMember(formats));
  };
  auto add_form = [&](CLI::App* sub) {
    sub->add_option("--form", cfg.form, "complex (S_k//W) or real (T_k//W)")
        ->check(CLI::IsMember({"complex", "real"}));
  };

  auto* decompose = app.add_subcommand("decompose", "List every component of the extended quotient");
  add_nk(decompose, true);
  add_form(decompose);
  add_format(decompose, "text");
  decompose->add_option("--partition", cfg.partition, "Restrict to one partition, e.g. 1+1+2+2 or 2^2,4");

  auto* component = app.add_subcommand("component", "Describe the component for one partition and omega");
  add_nk(component, true);
  add_form(component);
  component->add_option("--partition", cfg.partition, "Partition of n")->required();
  component->add_option("--omega", cfg.omega, "Exponent e of omega = exp(2 pi i e / h), h = gcd(g, k)");
  component->add_option("--format", cfg.format, "text, json, csv or markdown")->check(CLI::IsMember(formats));

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers b_0 .. b_D");
  add_nk(betti_cmd, true);
  betti_cmd->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
  auto* ktheory_cmd = app.add_subcommand("ktheory", "K-theory ranks K0 K1");
  add_nk(ktheory_cmd, true);
  ktheory_cmd->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic");
  add_nk(euler_cmd, true);
  euler_cmd->add_option("--format", cfg.format)->check(CLI::IsMember(formats));

  auto* table = app.add_subcommand("table", "Betti or K-theory table in appendix layout");
  table->add_option("--kind", cfg.kind, "betti or ktheory")->check(CLI::IsMember({"betti", "ktheory"}));
  table->add_option("--max-n", cfg.max_n, "Last row")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--min-n", cfg.min_n, "First row")->check(CLI::PositiveNumber);
  table->add_option("--k", cfg.k, "k for Betti tables")->check(CLI::PositiveNumber);
  table->add_flag("--even-only", cfg.even_only, "Only even n");
  std::string table_format = "csv";
  table->add_option("--format", table_format, "text, json, csv or markdown")->check(CLI::IsMember(formats));

  auto* duality = app.add_subcommand("duality", "Compare k with n/k for every divisor k of n");
  duality->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  duality->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Recompute the reference tables and report mismatches");
  verify_cmd->add_option("suite", cfg.suite, "paper (reference tables) or all (reference tables and property suites)")
      ->required()
      ->check(CLI::IsMember({"paper", "all"}));
  verify_cmd->add_option("--data-dir", cfg.data_dir, "Fixture directory (default: EXTQUOT_REFERENCE_DIR or built-in)");
  verify_cmd->add_option("--table", cfg.tables, "Restrict to these table ids");
  std::string verify_format = "json";
  verify_cmd->add_option("--format", verify_format, "json or text")->check(CLI::IsMember({"json", "text"}));

  cfg.format = "text";
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (table->parsed()) cfg.format = table_format;
  if (verify_cmd->parsed()) cfg.format = verify_format;

  try {
    const unsigned jobs = resolve_jobs(cfg.jobs);
    if (decompose->parsed()) return cmd_decompose(cfg, out);
    if (component->parsed()) return cmd_component(cfg, out);
    if (betti_cmd->parsed()) return cmd_betti(cfg, jobs, out);
    if (ktheory_cmd->parsed()) return cmd_ktheory(cfg, jobs, out);
    if (euler_cmd->parsed()) return cmd_euler(cfg, jobs, out);
    if (table->parsed()) return cmd_table(cfg, jobs, out);
    if (duality->parsed()) return cmd_duality(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, jobs, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"extquot"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace extquot
