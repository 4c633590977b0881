// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "extquot/complex_quotient.hpp"
#include "extquot/numtheory.hpp"
#include "extquot/parallel.hpp"
#include "extquot/real_quotient.hpp"
#include "extquot/reference.hpp"
#include "extquot/topology.hpp"
#include "oracles.hpp"

using namespace extquot;

namespace {

// Exact integer comparisons everywhere.
constexpr std::int64_t kTolerance = 0;

constexpr double kBoundTable1 = 30.0;
constexpr double kBoundTable2 = 300.0;
constexpr double kBoundTable3 = 5.0;
constexpr double kBoundDefault = 120.0;

const std::filesystem::path kData = EXTQUOT_TEST_DATA_DIR;

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<std::int64_t> parse_row(const std::vector<std::string>& row) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < row.size(); ++i) {
    if (!row[i].empty()) out.push_back(std::stoll(row[i]));
  }
  return out;
}

Outcome betti_table(const std::string& file, std::int64_t k, unsigned jobs) {
  const CsvTable t = read_csv_file(kData / file);
  std::size_t good = 0;
  std::string first_bad;
  for (const auto& row : t.rows) {
    const std::int64_t n = std::stoll(row[0]);
    if (betti(n, k, jobs).ranks == parse_row(row)) {
      ++good;
    } else if (first_bad.empty()) {
      first_bad = " first mismatch n=" + row[0];
    }
  }
  return {good == t.rows.size(), std::to_string(good) + "/" + std::to_string(t.rows.size()) + " rows exact" + first_bad};
}

Outcome ac1(unsigned jobs) { return betti_table("betti_k1.csv", 1, jobs); }
Outcome ac2(unsigned jobs) { return betti_table("betti_k2.csv", 2, jobs); }

Outcome ac3(unsigned jobs) {
  const CsvTable t = read_csv_file(kData / "ktheory.csv");
  std::size_t cells = 0, good = 0;
  for (const auto& row : t.rows) {
    const std::int64_t n = std::stoll(row[0]);
    for (std::size_t c = 1; c < row.size(); ++c) {
      const std::int64_t k = std::stoll(t.header[c]);
      if (row[c].empty()) {
        if (n % k == 0) return {false, "populated cell missing at n=" + row[0] + " k=" + t.header[c]};
        continue;
      }
      ++cells;
      const auto slash = row[c].find('/');
      const KTheoryRanks expected{std::stoll(row[c].substr(0, slash)), std::stoll(row[c].substr(slash + 1))};
      good += ktheory_ranks(n, k, jobs) == expected;
    }
  }
  return {good == cells, std::to_string(good) + "/" + std::to_string(cells) + " populated cells exact"};
}

std::int64_t total_components(std::int64_t n, std::int64_t k, const char* parts) {
  std::int64_t total = 0;
  for (const auto& c : complex_components(parse_partition(parts), k)) total += c.multiplicity;
  (void)n;
  return total;
}

Outcome ac4(unsigned jobs) {
  const VerifyReport sl6 = verify(TableId::sl6_catalogs, kData, jobs);
  const VerifyReport sl16 = verify(TableId::sl16_examples, kData, jobs);
  const std::int64_t k2 = total_components(16, 2, "2+2+2+2+4+4");
  const std::int64_t k8a = total_components(16, 8, "2+2+2+2+4+4");
  const std::int64_t k4 = total_components(16, 4, "4+4+4+4");
  const std::int64_t k8 = total_components(16, 8, "4+4+4+4");
  const bool counts = k2 == 3 && k8a == 3 && k4 == 8 && k8 == 6;
  return {sl6.clean() && sl16.clean() && counts,
          "SL6 catalogs " + std::to_string(sl6.rows_checked) + " rows, " + std::to_string(sl6.mismatches.size()) +
              " mismatches; SL16 " + std::to_string(sl16.rows_checked) + " rows, " +
              std::to_string(sl16.mismatches.size()) + " mismatches; components k=4: " + std::to_string(k4) +
              ", k=8: " + std::to_string(k8)};
}

Outcome ac5(unsigned jobs) {
  const VerifyReport su6 = verify(TableId::su6_orientability, kData, jobs);
  const RealCatalog catalog = decompose_real(6, 1);
  std::vector<std::string> no;
  for (const auto& c : catalog.entries) {
    if (!bundle_orientable_k1(c.partition)) no.push_back(c.partition.to_string());
  }
  const bool one_no = no.size() == 1 && no.front() == "1+1+2+2";
  return {su6.clean() && one_no && catalog.entries.size() == 11,
          std::to_string(su6.rows_checked) + " rows, " + std::to_string(su6.mismatches.size()) +
              " mismatches; non-orientable: " + (no.empty() ? std::string("none") : no.front()) + " (" +
              std::to_string(no.size()) + " total)"};
}

Outcome ac6(unsigned) {
  std::size_t pairs = 0, partitions = 0;
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (std::int64_t k : divisors(n)) {
      ++pairs;
      if (betti(n, k).ranks != betti(n, n / k).ranks) return {false, "betti differ at n=" + std::to_string(n)};
      for (const Partition& mu : PartitionStream(n)) {
        ++partitions;
        if (y_mu_count(mu, k) != y_mu_count(mu, n / k)) return {false, "|Y_mu| differs at " + mu.to_string()};
      }
    }
  }
  return {true, std::to_string(pairs) + " (n,k) pairs, " + std::to_string(partitions) + " partition checks"};
}

Outcome ac7(unsigned jobs) {
  std::vector<std::size_t> cases(40, 0), bad(40, 0);
  parallel_for(40, jobs, [&](std::size_t unit) {
    const auto n = static_cast<std::int64_t>(unit) + 1;
    for (std::int64_t k : divisors(n)) {
      for (const Partition& mu : PartitionStream(n)) {
        ++cases[unit];
        bad[unit] += y_mu_count(mu, k) != oracle::y_mu_brute(mu.parts(), n, k);
      }
    }
  });
  std::size_t total = 0, failures = 0;
  for (std::size_t u = 0; u < 40; ++u) {
    total += cases[u];
    failures += bad[u];
  }
  std::size_t pillai_bad = 0;
  for (std::int64_t a = 1; a <= 10000; ++a) pillai_bad += pillai(a) != pillai_via_totient(a);
  for (std::int64_t a = 1; a <= 300; ++a) pillai_bad += pillai(a) != oracle::pillai(a);
  return {failures == 0 && pillai_bad == 0, std::to_string(total) + " (n,k,mu) cases, " + std::to_string(failures) +
                                                " failures; pillai a<=10^4: " + std::to_string(pillai_bad) +
                                                " failures"};
}

Outcome ac8(unsigned jobs) {
  for (std::int64_t n = 1; n <= 45; ++n) {
    if (euler_characteristic(n, 1, jobs) != oracle::sigma(n)) return {false, "fails at n=" + std::to_string(n)};
  }
  return {true, "45/45 values equal sigma(n)"};
}

Outcome ac9(unsigned jobs) {
  for (std::int64_t n = 1; n <= 45; ++n) {
    const BettiVector b = betti(n, 1, jobs);
    const TopBetti t = top_betti(n);
    if (t.degree + 1 != static_cast<std::int64_t>(b.ranks.size()) || t.rank != b.ranks.back()) {
      return {false, "top Betti differs at n=" + std::to_string(n)};
    }
  }
  const auto series = oracle::eta_power_series(2, 20);
  for (std::int64_t r = 0; r <= 20; ++r) {
    if (partitions_pairs(r) != series[static_cast<std::size_t>(r)]) {
      return {false, "P_2 differs at r=" + std::to_string(r)};
    }
  }
  return {true, "45/45 degrees and ranks; P_2(0..20) match series coefficients"};
}

Outcome ac10(unsigned) {
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<std::int64_t> length(1, 8), entry(-50, 50);
  int done = 0, bad = 0, laplace_checked = 0;
  while (done < 1000) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(length(rng)));
    for (auto& x : v) x = entry(rng);
    const std::int64_t g = oracle::gcd_all(v);
    // SL_1(Z) = {1}: a single negative entry has no completion.
    if (g == 0 || (v.size() == 1 && v[0] < 0)) continue;
    ++done;
    const UnimodularMatrix u = unimodular_completion(v);
    bool ok = u.determinant() == 1;
    if (v.size() <= 6) {
      ++laplace_checked;
      ok = ok && oracle::laplace_det(u.rows()) == 1;
    }
    for (std::size_t i = 0; i < v.size(); ++i) ok = ok && u(i, 0) == v[i] / g;
    bad += !ok;
  }
  return {bad == 0, std::to_string(done - bad) + "/1000 vectors exact (" + std::to_string(laplace_checked) +
                        " also by cofactor expansion)"};
}

}  // namespace

int main() {
  const unsigned jobs = resolve_jobs();
  struct Criterion {
    const char* id;
    const char* name;
    double bound;
    std::function<Outcome(unsigned)> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "reference betti table k=1, n=1..45", kBoundTable1, ac1},
      {"AC2", "reference betti table k=2, even n=2..60", kBoundTable2, ac2},
      {"AC3", "reference K-theory table, n=2..20", kBoundTable3, ac3},
      {"AC4", "SL6 and SL16 catalogs", kBoundDefault, ac4},
      {"AC5", "SU6 catalog and orientability", kBoundDefault, ac5},
      {"AC6", "duality k <-> n/k, n<=30", kBoundDefault, ac6},
      {"AC7", "closed form vs omega sum, pillai forms", kBoundDefault, ac7},
      {"AC8", "euler(n,1) = sigma(n), n<=45", kBoundDefault, ac8},
      {"AC9", "top Betti formula and P_2 series", kBoundDefault, ac9},
      {"AC10", "unimodular completion, 1000 vectors", kBoundDefault, ac10},
  };
  int failed = 0;
  std::printf("acceptance: %u worker(s), tolerance %lld (exact integers)\n", jobs,
              static_cast<long long>(kTolerance));
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(jobs);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.bound;
    const bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("%-4s %s  %s: %s [%.2f s, bound %.0f s%s]\n", c.id, pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str(), secs, c.bound, in_time ? "" : ", exceeded");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
