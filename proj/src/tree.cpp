#include "lukas/tree.hpp"

#include <cassert>

#include "json.hpp"

namespace lukas {

namespace {

PlaneTree parse_text_tree(const std::string& text, std::size_t& pos) {
  if (pos >= text.size() || text[pos] != '(')
    throw TokenError("expected '(' at position " + std::to_string(pos));
  ++pos;
  std::vector<PlaneTree> children;
  while (true) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) throw TokenError("unbalanced '(' in tree text");
    if (text[pos] == ')') {
      ++pos;
      return PlaneTree(std::move(children));
    }
    children.push_back(parse_text_tree(text, pos));
  }
}

PlaneTree tree_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw TokenError("JSON tree nodes must be arrays");
  std::vector<PlaneTree> children;
  children.reserve(doc.size());
  for (const auto& child : doc) children.push_back(tree_from_json(child));
  return PlaneTree(std::move(children));
}

}  // namespace

PlaneTree PlaneTree::parse(const std::string& text) {
  std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw TokenError("empty tree text");
  if (text[pos] == '[') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw TokenError(std::string("bad JSON tree: ") + e.what());
    }
    return tree_from_json(doc);
  }
  PlaneTree t = parse_text_tree(text, pos);
  pos = text.find_first_not_of(" \t\r\n", pos);
  if (pos != std::string::npos) throw TokenError("trailing input after tree text");
  return t;
}

int PlaneTree::node_count() const {
  int n = 1;
  for (const PlaneTree& c : children_) n += c.node_count();
  return n;
}

std::string PlaneTree::to_text() const {
  std::string out = "(";
  for (std::size_t i = 0; i < children_.size(); ++i) {
    if (i > 0) out += ' ';
    out += children_[i].to_text();
  }
  out += ')';
  return out;
}

const PlaneTree& node_at(const PlaneTree& tree, const NodePath& address) {
  const PlaneTree* node = &tree;
  for (int index : address) {
    if (index < 1 || index > node->degree())
      throw std::out_of_range("node address does not resolve");
    node = &node->children()[static_cast<std::size_t>(index - 1)];
  }
  return *node;
}

PlaneTree path_to_tree(const LukasPath& path) {
  const auto& steps = path.steps();
  std::size_t pos = 0;
  auto rec = [&](auto&& self) -> PlaneTree {
    Step s = steps[pos++];
    if (s.is_down()) return PlaneTree();
    std::vector<PlaneTree> children;
    children.reserve(static_cast<std::size_t>(s.degree()) + 1);
    for (int i = 0; i <= s.degree(); ++i) children.push_back(self(self));
    return PlaneTree(std::move(children));
  };
  PlaneTree t = rec(rec);
  assert(pos == steps.size());  // guaranteed by path validity
  return t;
}

LukasPath tree_to_path(const PlaneTree& tree) {
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(tree.node_count()));
  auto rec = [&](auto&& self, const PlaneTree& node) -> void {
    if (node.is_leaf()) {
      steps.push_back(Step::down());
      return;
    }
    steps.push_back(Step::up(node.degree() - 1));
    for (const PlaneTree& c : node.children()) self(self, c);
  };
  rec(rec, tree);
  return LukasPath(std::move(steps));
}

std::vector<ThornPair> thorn_pairs(const PlaneTree& tree) {
  std::vector<ThornPair> out;
  auto rec = [&](auto&& self, const PlaneTree& node, int l, int r) -> void {
    if (node.is_leaf()) return;
    out.push_back({l, r});
    const int k = node.degree();
    for (int i = 1; i <= k; ++i)
      self(self, node.children()[static_cast<std::size_t>(i - 1)], l + i - 1, r + k - i);
  };
  rec(rec, tree, 0, 0);
  return out;
}

long long lthorn(const PlaneTree& tree) {
  long long total = 0;
  for (ThornPair p : thorn_pairs(tree)) total += p.lthorn;
  return total;
}

long long rthorn(const PlaneTree& tree) {
  long long total = 0;
  for (ThornPair p : thorn_pairs(tree)) total += p.rthorn;
  return total;
}

PlaneTree mirror(const PlaneTree& tree) {
  std::vector<PlaneTree> children;
  children.reserve(tree.children().size());
  for (auto it = tree.children().rbegin(); it != tree.children().rend(); ++it)
    children.push_back(mirror(*it));
  return PlaneTree(std::move(children));
}

std::optional<std::pair<NodePath, NodePath>> find_lodestars(const PlaneTree& tree) {
  std::optional<NodePath> first, last;
  NodePath current;
  auto rec = [&](auto&& self, const PlaneTree& node) -> void {
    if (node.is_leaf()) return;
    bool all_leaves = true;
    for (const PlaneTree& c : node.children())
      if (!c.is_leaf()) all_leaves = false;
    if (all_leaves) {
      if (!first) first = current;
      last = current;
    }
    for (int i = 1; i <= node.degree(); ++i) {
      current.push_back(i);
      self(self, node.children()[static_cast<std::size_t>(i - 1)]);
      current.pop_back();
    }
  };
  rec(rec, tree);
  if (!first) return std::nullopt;
  return std::make_pair(*first, *last);
}

PlaneTree with_star_at(const PlaneTree& tree, const NodePath& address, int leaf_count) {
  if (leaf_count < 1) throw std::invalid_argument("a star needs at least one leaf");
  auto rec = [&](auto&& self, const PlaneTree& node, std::size_t depth) -> PlaneTree {
    if (depth == address.size())
      return PlaneTree(std::vector<PlaneTree>(static_cast<std::size_t>(leaf_count)));
    int index = address[depth];
    if (index < 1 || index > node.degree())
      throw std::out_of_range("node address does not resolve");
    std::vector<PlaneTree> children = node.children();
    children[static_cast<std::size_t>(index - 1)] =
        self(self, node.children()[static_cast<std::size_t>(index - 1)], depth + 1);
    return PlaneTree(std::move(children));
  };
  return rec(rec, tree, 0);
}

PlaneTree lodestar_swap(const PlaneTree& tree) {
  auto stars = find_lodestars(tree);
  if (!stars || stars->first == stars->second) return tree;
  int left_count = node_at(tree, stars->first).degree();
  int right_count = node_at(tree, stars->second).degree();
  PlaneTree out = with_star_at(tree, stars->first, right_count);
  return with_star_at(out, stars->second, left_count);
}

DegreeMultiset internal_degree_multiset(const PlaneTree& tree) {
  DegreeMultiset m;
  auto rec = [&](auto&& self, const PlaneTree& node) -> void {
    if (node.is_leaf()) return;
    m.insert(node.degree());
    for (const PlaneTree& c : node.children()) self(self, c);
  };
  rec(rec, tree);
  return m;
}

}  // namespace lukas
