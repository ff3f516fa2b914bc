#pragma once

#include <string>
#include <string_view>

#include "yw/walls.hpp"

namespace yw {

// ASCII picture of the block pattern, `periods` periods tall, top line
// first. Each character cell covers half a unit; block colours print as
// their digit, uncovered cells as '.'. Sample points are chosen off every
// possible block edge and ambiguity throws, so the picture is exact.
std::string renderPattern(std::string_view patternJson, int periods);

// One line per column, top of the wall first:  k: class(z) [c0 c1 c2 c3 c4]
std::string renderWallText(const WallModelContext& ctx, const YoungWall& w);

}  // namespace yw
