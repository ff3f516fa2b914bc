#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "yw/cartan.hpp"

namespace yw {

// Golden data shipped with the library: crystal-graph edge lists, energy
// tables, and column pattern geometry, one of each per algebra. The files are
// embedded into the binary at build time and pinned by checksum; the
// YOUNGWALL_DATA_DIR environment variable substitutes on-disk copies.
enum class Dataset {
  E62Edges,
  E62Energy,
  E62Pattern,
  F41Edges,
  F41Energy,
  F41Pattern,
};

inline constexpr int kDatasetCount = 6;

Dataset edgesDataset(Algebra a);
Dataset energyDataset(Algebra a);
Dataset patternDataset(Algebra a);

std::string_view datasetFileName(Dataset d);

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t pinnedChecksum(Dataset d);

// The compiled-in copy; throws DataError if it does not match its pinned
// checksum (would indicate a broken build).
std::string_view embeddedData(Dataset d);

// Embedded copy, or the override file from $YOUNGWALL_DATA_DIR when that is
// set. Override files are checksum-verified unless allowMismatch.
std::string loadDataset(Dataset d, bool allowMismatch = false);

// One arrow of a golden edge list: "<source>\t<i>\t<target>" per line.
struct GoldenEdge {
  std::string from;
  int i = 0;
  std::string to;
  friend auto operator<=>(const GoldenEdge&, const GoldenEdge&) = default;
};

std::vector<GoldenEdge> parseEdgeTsv(std::string_view text);

// Energy table in its printed layout: rows indexed by the right tensor factor
// a, columns by the left factor b, cell = H(b (x) a).
struct GoldenEnergyTable {
  std::vector<std::string> columnLabels;
  std::vector<std::string> rowLabels;
  std::vector<std::vector<int>> cells;  // cells[row][col]
};

GoldenEnergyTable parseEnergyCsv(std::string_view text);

namespace detail {
struct EmbeddedFile {
  const char* name;
  const char* data;
  std::size_t size;
};
// Defined in the generated embedded_data translation unit.
extern const EmbeddedFile kEmbeddedFiles[kDatasetCount];
}  // namespace detail

}  // namespace yw
