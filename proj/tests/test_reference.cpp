#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <unistd.h>

#include "extquot/numtheory.hpp"
#include "extquot/reference.hpp"
#include "extquot/render.hpp"
#include "extquot/topology.hpp"

using namespace extquot;
namespace fs = std::filesystem;

namespace {

const fs::path kData = EXTQUOT_TEST_DATA_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct ScratchDir {
  fs::path path;
  explicit ScratchDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("extquot-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
    for (const auto& entry : fs::directory_iterator(kData)) fs::copy_file(entry.path(), path / entry.path().filename());
  }
  ~ScratchDir() { fs::remove_all(path); }
  void replace(const std::string& file, const std::string& from, const std::string& to) {
    std::string text = slurp(path / file);
    const auto at = text.find(from);
    REQUIRE(at != std::string::npos);
    text.replace(at, from.size(), to);
    std::ofstream(path / file, std::ios::binary) << text;
  }
};

}  // namespace

TEST_SUITE("reference") {

TEST_CASE("csv reader") {
  std::istringstream in("a,b,c\r\n1,\"x,y\",\"q\"\"q\"\n,,\n");
  const CsvTable t = read_csv(in);
  CHECK(t.header == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0] == std::vector<std::string>{"1", "x,y", "q\"q"});
  CHECK(t.rows[1] == std::vector<std::string>{"", "", ""});
  CHECK(t.column("c") == 2);
  CHECK_THROWS_AS(t.column("d"), std::runtime_error);
  std::istringstream ragged("a,b\n1\n");
  CHECK_THROWS_AS(read_csv(ragged), std::runtime_error);
  std::istringstream open_quote("a\n\"x\n");
  CHECK_THROWS_AS(read_csv(open_quote), std::runtime_error);
}

TEST_CASE("table ids") {
  CHECK(all_table_ids().size() == 6);
  for (TableId id : all_table_ids()) CHECK(parse_table_id(to_string(id)) == id);
  CHECK_FALSE(parse_table_id("table4"));
  CHECK_THROWS_AS(verify("table4", kData), std::invalid_argument);
  CHECK_THROWS_AS(verify(TableId::betti_k1, kData / "missing"), std::runtime_error);
}

TEST_CASE("every fixture verifies cleanly") {
  for (TableId id : all_table_ids()) {
    CAPTURE(to_string(id));
    const VerifyReport r = verify(id, kData, 2);
    CHECK(r.clean());
    CHECK(r.cells_checked > 0);
  }
  CHECK(verify(TableId::betti_k1, kData).rows_checked == 45);
  CHECK(verify(TableId::betti_k2, kData).rows_checked == 30);
  CHECK(verify(TableId::su6_orientability, kData).rows_checked == 11);
}

TEST_CASE("fixtures round-trip through the table emitters") {
  std::vector<BettiVector> k1, k2;
  for (std::int64_t n = 1; n <= 45; ++n) k1.push_back(betti(n, 1));
  for (std::int64_t n = 2; n <= 60; n += 2) k2.push_back(betti(n, 2));
  CHECK(render_betti_table(k1, OutputFormat::csv) == slurp(kData / "betti_k1.csv"));
  CHECK(render_betti_table(k2, OutputFormat::csv) == slurp(kData / "betti_k2.csv"));

  std::vector<KTheoryCell> cells;
  for (std::int64_t n = 2; n <= 20; ++n) {
    for (std::int64_t k : divisors(n)) cells.push_back({n, k, ktheory_ranks(n, k)});
  }
  CHECK(render_ktheory_table(2, 20, cells, OutputFormat::csv) == slurp(kData / "ktheory.csv"));
}

TEST_CASE("a perturbed cell is reported once with its coordinates") {
  ScratchDir dir("fault");
  dir.replace("betti_k1.csv", "\n12,112,132,53,5,", "\n12,112,133,53,5,");
  const VerifyReport r = verify(TableId::betti_k1, dir.path);
  REQUIRE(r.mismatches.size() == 1);
  const CellMismatch& m = r.mismatches.front();
  CHECK(m.line == 13);
  CHECK(m.row == "n=12");
  CHECK(m.column == "b_1");
  CHECK(m.expected == "133");
  CHECK(m.actual == "132");
}

TEST_CASE("perturbations in catalog fixtures are caught") {
  ScratchDir dir("catalog");
  dir.replace("sl16_examples.csv", "16,8,4+4+4+4,1,0/1,2,", "16,8,4+4+4+4,1,0/1,4,");
  dir.replace("su6_orientability.csv", "1,1;1,No", "1,1;1,Yes");
  const auto sl16 = verify(TableId::sl16_examples, dir.path);
  REQUIRE(sl16.mismatches.size() == 1);
  CHECK(sl16.mismatches[0].column == "multiplicity");
  const auto su6 = verify(TableId::su6_orientability, dir.path);
  REQUIRE(su6.mismatches.size() == 1);
  CHECK(su6.mismatches[0].row == "mu=1+1+2+2");
  CHECK(su6.mismatches[0].column == "orientable");
}

TEST_CASE("a dropped catalog row is reported") {
  ScratchDir dir("drop");
  dir.replace("sl6_catalogs.csv", "6,6,3+3,zeta^4,4/6,1,0,A^1/<-1>,2,1,1,2,1\n", "");
  const auto r = verify(TableId::sl6_catalogs, dir.path);
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].column == "omega_turn");
  CHECK(r.mismatches[0].actual == "2/3");
}

TEST_CASE("a wrong generator translation is reported") {
  ScratchDir dir("translate");
  dir.replace("sl6_catalogs.csv", "6,3,2+2+2,1,0/1,2,0,\"A^2/<(zeta^2,zeta^4)>\",6,2;4,",
              "6,3,2+2+2,1,0/1,2,0,\"A^2/<(zeta^2,zeta^4)>\",6,2;2,");
  const auto r = verify(TableId::sl6_catalogs, dir.path);
  REQUIRE(r.mismatches.size() == 1);
  CHECK(r.mismatches[0].column == "generator_exponents");
}

}  // TEST_SUITE
