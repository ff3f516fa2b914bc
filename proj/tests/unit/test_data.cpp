#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "yw/data.hpp"
#include "yw/errors.hpp"

using yw::Algebra;
using yw::Dataset;

TEST_CASE("fnv1a64 matches the reference vectors") {
  CHECK(yw::fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(yw::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(yw::fnv1a64("hello") == 0xa430d84680aabd0bULL);
}

TEST_CASE("every embedded dataset verifies against its pinned checksum") {
  for (int k = 0; k < yw::kDatasetCount; ++k) {
    auto d = static_cast<Dataset>(k);
    std::string_view text = yw::embeddedData(d);  // throws on mismatch
    CHECK(!text.empty());
    CHECK(yw::fnv1a64(text) == yw::pinnedChecksum(d));
    CHECK(yw::loadDataset(d) == text);
  }
}

TEST_CASE("edge lists parse with sane colours and no duplicates") {
  const std::size_t expectedEdges[] = {42, 92};
  int idx = 0;
  for (Algebra a : ywtest::kBoth) {
    auto edges = yw::parseEdgeTsv(yw::loadDataset(yw::edgesDataset(a)));
    CHECK(edges.size() == expectedEdges[idx++]);
    std::set<yw::GoldenEdge> dedup(edges.begin(), edges.end());
    CHECK(dedup.size() == edges.size());
    for (const auto& e : edges) {
      CHECK(e.i >= 0);
      CHECK(e.i < yw::kRank);
      CHECK(!e.from.empty());
      CHECK(!e.to.empty());
    }
  }
}

TEST_CASE("energy tables parse to square tables over the edge vertex set") {
  const int expectedSize[] = {27, 53};
  int idx = 0;
  for (Algebra a : ywtest::kBoth) {
    auto table = yw::parseEnergyCsv(yw::loadDataset(yw::energyDataset(a)));
    const int n = expectedSize[idx++];
    CHECK(static_cast<int>(table.rowLabels.size()) == n);
    CHECK(table.columnLabels == table.rowLabels);
    CHECK(static_cast<int>(table.cells.size()) == n);
    for (const auto& row : table.cells)
      CHECK(static_cast<int>(row.size()) == n);

    std::set<std::string> fromEdges;
    for (const auto& e :
         yw::parseEdgeTsv(yw::loadDataset(yw::edgesDataset(a)))) {
      fromEdges.insert(e.from);
      fromEdges.insert(e.to);
    }
    std::set<std::string> fromTable(table.rowLabels.begin(),
                                    table.rowLabels.end());
    CHECK(fromEdges == fromTable);
  }
}

TEST_CASE("golden energy values at the distinguished vertices") {
  auto cellOf = [](const yw::GoldenEnergyTable& t, const std::string& row,
                   const std::string& col) {
    std::size_t r = std::find(t.rowLabels.begin(), t.rowLabels.end(), row) -
                    t.rowLabels.begin();
    std::size_t c =
        std::find(t.columnLabels.begin(), t.columnLabels.end(), col) -
        t.columnLabels.begin();
    REQUIRE(r < t.rowLabels.size());
    REQUIRE(c < t.columnLabels.size());
    return t.cells[r][c];
  };

  auto e6 = yw::parseEnergyCsv(yw::loadDataset(Dataset::E62Energy));
  // cell (row a, col b) holds H(b (x) a)
  CHECK(cellOf(e6, "empty", "empty") == 0);
  CHECK(cellOf(e6, "(2321)", "(2321)") == 2);
  CHECK(cellOf(e6, "r1", "r1") == 1);
  CHECK(cellOf(e6, "(2321)", "empty") == 1);    // H(empty (x) theta)
  CHECK(cellOf(e6, "empty", "(2321)") == 1);    // H(theta (x) empty)
  CHECK(cellOf(e6, "empty", "-(2321)") == 1);   // H(-theta (x) empty)
  CHECK(cellOf(e6, "(2321)", "-(2321)") == 2);  // H(-theta (x) theta)
  CHECK(cellOf(e6, "-(2321)", "(2321)") == 0);  // H(theta (x) -theta)

  auto f4 = yw::parseEnergyCsv(yw::loadDataset(Dataset::F41Energy));
  CHECK(cellOf(f4, "empty", "empty") == 0);
  CHECK(cellOf(f4, "(2342)", "(2342)") == 2);
  CHECK(cellOf(f4, "(2342)", "empty") == 1);
  CHECK(cellOf(f4, "empty", "(2342)") == 1);
  CHECK(cellOf(f4, "empty", "-(2342)") == 1);
  CHECK(cellOf(f4, "(2342)", "-(2342)") == 2);
  CHECK(cellOf(f4, "-(2342)", "(2342)") == 0);
}

TEST_CASE("malformed data files are rejected") {
  CHECK_THROWS_AS(yw::parseEnergyCsv("nonsense"), yw::DataError);
  CHECK_THROWS_AS(yw::parseEnergyCsv("x,y\n1,2\n"), yw::DataError);
  CHECK_THROWS_AS(yw::parseEnergyCsv("a\\b,p,q\np,1\n"), yw::DataError);
  CHECK_THROWS_AS(yw::parseEnergyCsv("a\\b,p,q\np,1,z\nq,0,0\n"),
                  yw::DataError);
  CHECK_THROWS_AS(yw::parseEdgeTsv("a\tb\tc"), yw::DataError);
  CHECK_THROWS_AS(yw::parseEdgeTsv("a\t1"), yw::DataError);
}

TEST_CASE("data directory override honours the checksum pin") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "yw_data_override_test";
  fs::create_directories(dir);

  Dataset d = Dataset::E62Edges;
  std::string tampered(yw::embeddedData(d));
  tampered[0] = tampered[0] == 'X' ? 'Y' : 'X';
  {
    std::ofstream out(dir / std::string(yw::datasetFileName(d)),
                      std::ios::binary);
    out << tampered;
  }

  REQUIRE(setenv("YOUNGWALL_DATA_DIR", dir.c_str(), 1) == 0);
  CHECK_THROWS_AS(yw::loadDataset(d), yw::DataError);
  CHECK(yw::loadDataset(d, /*allowMismatch=*/true) == tampered);
  // files the override directory lacks are an error, not a fallback
  CHECK_THROWS_AS(yw::loadDataset(Dataset::F41Edges), yw::DataError);
  REQUIRE(unsetenv("YOUNGWALL_DATA_DIR") == 0);

  CHECK(yw::loadDataset(d) == yw::embeddedData(d));
  fs::remove_all(dir);
}
