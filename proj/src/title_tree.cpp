#include "cpctaxo/title_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "cpctaxo/text.hpp"

namespace cpctaxo {

NodeSpec NodeSpec::from_title(CpcCode code, std::optional<int> rank, std::string title) {
  NodeSpec spec;
  spec.code = std::move(code);
  spec.rank = rank;
  spec.label = title;
  spec.raw_title = std::move(title);
  spec.complements_parent = text::is_lower(text::first_letter(spec.raw_title));
  return spec;
}

NodeId TitleTree::allocate(NodeSpec spec) {
  NodeId id{static_cast<std::uint32_t>(slots_.size())};
  TitleNode node;
  node.id = id;
  node.code = std::move(spec.code);
  node.rank = spec.rank;
  node.raw_title = std::move(spec.raw_title);
  node.label = std::move(spec.label);
  node.complements_parent = spec.complements_parent;
  node.coordinate_head = std::move(spec.coordinate_head);
  slots_.emplace_back(std::move(node));
  ++live_;
  return id;
}

void TitleTree::link(NodeId parent, NodeId child, std::size_t position) {
  auto& kids = mutable_node(parent).children;
  if (position == npos || position > kids.size()) position = kids.size();
  kids.insert(kids.begin() + static_cast<std::ptrdiff_t>(position), child);
  mutable_node(child).parent = parent;
}

NodeId TitleTree::add_root(NodeSpec spec) {
  if (root_) throw std::logic_error("tree already has a root");
  root_ = allocate(std::move(spec));
  return *root_;
}

NodeId TitleTree::add_child(NodeId parent, NodeSpec spec, std::size_t position) {
  if (!contains(parent)) throw std::out_of_range("add_child: unknown parent");
  NodeId id = allocate(std::move(spec));
  link(parent, id, position);
  return id;
}

NodeId TitleTree::root() const {
  if (!root_) throw std::logic_error("empty tree has no root");
  return *root_;
}

bool TitleTree::contains(NodeId id) const {
  return id.value < slots_.size() && slots_[id.value].has_value();
}

const TitleNode& TitleTree::node(NodeId id) const {
  if (!contains(id)) throw std::out_of_range("unknown node id " + std::to_string(id.value));
  return *slots_[id.value];
}

TitleNode& TitleTree::mutable_node(NodeId id) {
  if (!contains(id)) throw std::out_of_range("unknown node id " + std::to_string(id.value));
  return *slots_[id.value];
}

std::size_t TitleTree::position_in_parent(NodeId id) const {
  const auto& n = node(id);
  if (!n.parent) return 0;
  const auto& kids = node(*n.parent).children;
  auto it = std::find(kids.begin(), kids.end(), id);
  return static_cast<std::size_t>(it - kids.begin());
}

void TitleTree::remove_subtree(NodeId id) {
  const auto& n = node(id);
  if (!n.parent) throw std::logic_error("cannot remove the root");
  auto& siblings = mutable_node(*n.parent).children;
  siblings.erase(std::find(siblings.begin(), siblings.end(), id));
  for (NodeId victim : preorder(id)) {
    slots_[victim.value].reset();
    --live_;
  }
}

void TitleTree::splice_out(NodeId id) {
  TitleNode& n = mutable_node(id);
  if (!n.parent) throw std::logic_error("cannot splice out the root");
  NodeId parent = *n.parent;
  std::vector<NodeId> kids = std::move(n.children);
  auto& siblings = mutable_node(parent).children;
  auto it = std::find(siblings.begin(), siblings.end(), id);
  it = siblings.erase(it);
  siblings.insert(it, kids.begin(), kids.end());
  for (NodeId k : kids) mutable_node(k).parent = parent;
  slots_[id.value].reset();
  --live_;
}

NodeId TitleTree::copy_subtree(NodeId source, NodeId parent, std::size_t position) {
  // Snapshot first: the copy may land inside the source subtree's parent list.
  std::vector<NodeId> order = preorder(source);
  std::unordered_map<std::uint32_t, NodeId> mapped;
  NodeId top{};
  for (NodeId old : order) {
    const TitleNode& n = node(old);
    NodeSpec spec;
    spec.code = n.code;
    spec.rank = n.rank;
    spec.raw_title = n.raw_title;
    spec.label = n.label;
    spec.complements_parent = n.complements_parent;
    spec.coordinate_head = n.coordinate_head;
    if (old == source) {
      top = add_child(parent, std::move(spec), position);
      mapped[old.value] = top;
    } else {
      NodeId new_parent = mapped.at(n.parent->value);
      mapped[old.value] = add_child(new_parent, std::move(spec));
    }
  }
  return top;
}

std::size_t TitleTree::depth(NodeId id) const {
  std::size_t d = 0;
  for (auto p = node(id).parent; p; p = node(*p).parent) ++d;
  return d;
}

std::size_t TitleTree::subtree_size(NodeId id) const { return preorder(id).size(); }

std::vector<NodeId> TitleTree::preorder() const {
  if (!root_) return {};
  return preorder(*root_);
}

std::vector<NodeId> TitleTree::preorder(NodeId from) const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{from};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    out.push_back(id);
    const auto& kids = node(id).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<NodeId> TitleTree::postorder() const {
  std::vector<NodeId> order = preorder();
  // Reversed pre-order visits every child before its parent.
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<TreeRow> TitleTree::rows() const {
  std::vector<TreeRow> out;
  std::unordered_map<std::uint32_t, std::size_t> index;
  for (NodeId id : preorder()) {
    const auto& n = node(id);
    TreeRow row;
    row.index = out.size();
    if (n.parent) row.parent = index.at(n.parent->value);
    row.code = n.code.to_string();
    row.label = n.label;
    index[id.value] = row.index;
    out.push_back(std::move(row));
  }
  return out;
}

TitleTree TitleTree::compacted() const {
  TitleTree out;
  if (!root_) return out;
  std::unordered_map<std::uint32_t, NodeId> mapped;
  for (NodeId id : preorder()) {
    const auto& n = node(id);
    NodeSpec spec;
    spec.code = n.code;
    spec.rank = n.rank;
    spec.raw_title = n.raw_title;
    spec.label = n.label;
    spec.complements_parent = n.complements_parent;
    spec.coordinate_head = n.coordinate_head;
    mapped[id.value] = n.parent ? out.add_child(mapped.at(n.parent->value), std::move(spec))
                                : out.add_root(std::move(spec));
  }
  return out;
}

std::optional<std::string> TitleTree::structural_error() const {
  if (!root_) return live_ == 0 ? std::nullopt : std::optional<std::string>("nodes without a root");
  if (!contains(*root_)) return "root slot is empty";
  if (node(*root_).parent) return "root has a parent";

  std::size_t roots = 0;
  for (const auto& slot : slots_) {
    if (!slot) continue;
    if (!slot->parent) {
      ++roots;
      continue;
    }
    if (!contains(*slot->parent))
      return "node " + std::to_string(slot->id.value) + " has a dangling parent";
    const auto& kids = node(*slot->parent).children;
    if (std::count(kids.begin(), kids.end(), slot->id) != 1)
      return "node " + std::to_string(slot->id.value) + " not listed once by its parent";
    for (NodeId k : slot->children) {
      if (!contains(k)) return "node " + std::to_string(slot->id.value) + " lists a removed child";
      if (node(k).parent != slot->id)
        return "child " + std::to_string(k.value) + " points elsewhere";
    }
  }
  if (roots != 1) return std::to_string(roots) + " parentless nodes";
  for (const auto& k : node(*root_).children)
    if (!contains(k)) return "root lists a removed child";

  // Every live node reachable exactly once from the root rules out cycles.
  std::vector<char> seen(slots_.size(), 0);
  std::size_t reached = 0;
  std::vector<NodeId> stack{*root_};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (seen[id.value]) return "node " + std::to_string(id.value) + " reached twice";
    seen[id.value] = 1;
    ++reached;
    for (NodeId k : node(id).children) stack.push_back(k);
  }
  if (reached != live_) return "unreachable nodes (cycle)";
  return std::nullopt;
}

std::optional<std::string> TitleTree::rank_error() const {
  for (NodeId id : preorder()) {
    const auto& n = node(id);
    if (!n.rank || *n.rank < 1) continue;
    const auto& p = node(*n.parent);
    bool ok = p.rank && *p.rank == *n.rank - 1;
    if (*n.rank == 1) ok = ok && p.code.level() == CpcLevel::Group;
    if (!ok) return "rank " + std::to_string(*n.rank) + " node " + n.code.to_string() +
                    " under " + p.code.to_string();
  }
  return std::nullopt;
}

}  // namespace cpctaxo
