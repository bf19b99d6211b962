#pragma once

#include "lukas/path.hpp"

namespace lukas {

// Path-level involution through the tree picture: reflect and transcribe
// back. Exchanges area and depth; preserves the first up-step degree and the
// profile multiset.
LukasPath mirror_involution(const LukasPath& path);

// Reflection followed by the lodestar swap. Exchanges area and depth;
// additionally preserves the last up-step degree.
LukasPath lodestar_involution(const LukasPath& path);

}  // namespace lukas
