#include "yw/data.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "yw/errors.hpp"

namespace yw {

namespace {

struct DatasetInfo {
  const char* fileName;
  std::uint64_t checksum;
};

// Checksums pin the data files; edits to them must be deliberate and show up
// here and in the embedded-data test.
constexpr DatasetInfo kInfo[kDatasetCount] = {
    {"e6_2_edges.tsv", 0x833edc06325a0f44ULL},
    {"e6_2_energy.csv", 0xc0287491c2ff4fddULL},
    {"e6_2_pattern.json", 0x256fe544df2efb14ULL},
    {"f4_1_edges.tsv", 0x4d29252604f84adaULL},
    {"f4_1_energy.csv", 0xdc037136ceed17beULL},
    {"f4_1_pattern.json", 0x120d17505f79cc65ULL},
};

int index(Dataset d) { return static_cast<int>(d); }

}  // namespace

Dataset edgesDataset(Algebra a) {
  return a == Algebra::E6_2 ? Dataset::E62Edges : Dataset::F41Edges;
}

Dataset energyDataset(Algebra a) {
  return a == Algebra::E6_2 ? Dataset::E62Energy : Dataset::F41Energy;
}

Dataset patternDataset(Algebra a) {
  return a == Algebra::E6_2 ? Dataset::E62Pattern : Dataset::F41Pattern;
}

std::string_view datasetFileName(Dataset d) { return kInfo[index(d)].fileName; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t pinnedChecksum(Dataset d) { return kInfo[index(d)].checksum; }

std::string_view embeddedData(Dataset d) {
  const auto& f = detail::kEmbeddedFiles[index(d)];
  std::string_view data{f.data, f.size};
  if (fnv1a64(data) != pinnedChecksum(d)) {
    throw DataError(std::string("embedded data corrupt: ") + f.name);
  }
  return data;
}

std::string loadDataset(Dataset d, bool allowMismatch) {
  if (const char* dir = std::getenv("YOUNGWALL_DATA_DIR")) {
    std::filesystem::path p =
        std::filesystem::path(dir) / std::string(datasetFileName(d));
    std::ifstream in(p, std::ios::binary);
    if (!in) throw DataError("cannot open data override: " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (!allowMismatch && fnv1a64(text) != pinnedChecksum(d)) {
      throw DataError("checksum mismatch for data override: " + p.string());
    }
    return text;
  }
  return std::string(embeddedData(d));
}

namespace {

std::vector<std::string_view> splitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    if (nl > pos) lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> splitOn(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t s = line.find(sep, pos);
    if (s == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, s - pos));
    pos = s + 1;
  }
  return fields;
}

int parseInt(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw DataError("bad integer '" + std::string(s) + "' in " +
                    std::string(what));
  }
  return v;
}

}  // namespace

std::vector<GoldenEdge> parseEdgeTsv(std::string_view text) {
  std::vector<GoldenEdge> edges;
  for (auto line : splitLines(text)) {
    auto fields = splitOn(line, '\t');
    if (fields.size() != 3) throw DataError("edge line needs 3 fields");
    int i = parseInt(fields[1], "edge list");
    if (i < 0 || i >= kRank) throw DataError("edge color out of range");
    edges.push_back(
        {std::string(fields[0]), i, std::string(fields[2])});
  }
  return edges;
}

GoldenEnergyTable parseEnergyCsv(std::string_view text) {
  GoldenEnergyTable t;
  auto lines = splitLines(text);
  if (lines.empty()) throw DataError("empty energy csv");
  auto header = splitOn(lines[0], ',');
  if (header.size() < 2 || header[0] != "a\\b") {
    throw DataError("energy csv header must start with a\\b");
  }
  for (std::size_t c = 1; c < header.size(); ++c) {
    t.columnLabels.emplace_back(header[c]);
  }
  for (std::size_t r = 1; r < lines.size(); ++r) {
    auto fields = splitOn(lines[r], ',');
    if (fields.size() != header.size()) {
      throw DataError("energy csv row width mismatch");
    }
    t.rowLabels.emplace_back(fields[0]);
    std::vector<int> row;
    for (std::size_t c = 1; c < fields.size(); ++c) {
      row.push_back(parseInt(fields[c], "energy csv"));
    }
    t.cells.push_back(std::move(row));
  }
  return t;
}

}  // namespace yw
