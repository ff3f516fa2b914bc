#include "yw/render.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "yw/errors.hpp"

namespace yw {

namespace {

struct Block {
  int colour;
  std::vector<std::pair<std::int64_t, std::int64_t>> poly;  // x16 lattice
};

// Exact even-odd test on the x16 lattice. Sample coordinates are chosen so
// they never coincide with a polygon vertex height, which keeps every ray
// crossing nondegenerate.
bool containsPoint(const Block& b, std::int64_t px, std::int64_t py) {
  bool inside = false;
  const std::size_t n = b.poly.size();
  for (std::size_t k = 0; k < n; ++k) {
    auto [x1, y1] = b.poly[k];
    auto [x2, y2] = b.poly[(k + 1) % n];
    std::int64_t cross = (px - x1) * (y2 - y1) - (py - y1) * (x2 - x1);
    if (cross == 0 && px >= std::min(x1, x2) && px <= std::max(x1, x2) &&
        py >= std::min(y1, y2) && py <= std::max(y1, y2)) {
      throw std::logic_error("pattern sample point lies on a block edge");
    }
    if ((y1 > py) != (y2 > py)) {
      if (y2 > y1 ? cross < 0 : cross > 0) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

std::string renderPattern(std::string_view patternJson, int periods) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(patternJson);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad pattern json: ") + e.what());
  }
  if (j.value("units", "") != std::string("quarter")) {
    throw DataError("pattern units must be quarter");
  }
  const int width = j.at("width").get<int>();
  const int height = j.at("period_height").get<int>();
  if (width <= 0 || height <= 0 || width % 2 || height % 2) {
    throw DataError("pattern extents must be positive and even");
  }

  std::vector<Block> blocks;
  for (const auto& jb : j.at("blocks")) {
    Block b;
    b.colour = jb.at("i").get<int>();
    if (b.colour < 0 || b.colour >= kRank) throw DataError("bad block colour");
    for (const auto& pt : jb.at("poly")) {
      b.poly.emplace_back(16 * pt.at(0).get<std::int64_t>(),
                          16 * pt.at(1).get<std::int64_t>());
    }
    if (b.poly.size() < 3) throw DataError("degenerate block polygon");
    blocks.push_back(std::move(b));
  }

  const int cols = width / 2;    // one character cell per half unit
  const int rowsPerPeriod = height / 2;
  const int rows = rowsPerPeriod * periods;

  std::ostringstream out;
  for (int gy = rows - 1; gy >= 0; --gy) {
    int ry = gy % rowsPerPeriod;
    for (int cx = 0; cx < cols; ++cx) {
      // Cell (cx, ry) spans [32cx, 32cx+32) x [32ry, 32ry+32) on the x16
      // lattice; the offsets keep the sample off all occurring edge slopes.
      std::int64_t px = 32LL * cx + 23;
      std::int64_t py = 32LL * ry + 21;
      int found = -1;
      for (const Block& b : blocks) {
        if (containsPoint(b, px, py)) {
          if (found != -1) {
            throw std::logic_error("pattern blocks overlap at a sample point");
          }
          found = b.colour;
        }
      }
      char c = found < 0 ? '.' : static_cast<char>('0' + found);
      out << c << c;  // doubled for roughly square cells
    }
    out << '\n';
  }
  return out.str();
}

std::string renderWallText(const WallModelContext& ctx, const YoungWall& w) {
  if (w.cols.empty()) return "(ground)\n";
  std::ostringstream out;
  for (int k = static_cast<int>(w.cols.size()) - 1; k >= 0; --k) {
    const YoungColumn& c = w.cols[k];
    auto cc = ctx.columnContent(c);
    out << k << ": " << ctx.crystal().label(c.cls) << '(' << c.shift << ")";
    out << " [";
    for (int i = 0; i < kRank; ++i) {
      if (i) out << ' ';
      out << cc[i];
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace yw
