#include "lukas/involution.hpp"

#include "lukas/tree.hpp"

namespace lukas {

LukasPath mirror_involution(const LukasPath& path) {
  return tree_to_path(mirror(path_to_tree(path)));
}

LukasPath lodestar_involution(const LukasPath& path) {
  return tree_to_path(lodestar_swap(mirror(path_to_tree(path))));
}

}  // namespace lukas
