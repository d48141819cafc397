#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpctaxo/cpc_code.hpp"

namespace cpctaxo {

struct NodeId {
  std::uint32_t value = 0;
  auto operator<=>(const NodeId&) const = default;
};

struct TitleNode {
  NodeId id;
  CpcCode code;
  std::optional<int> rank;
  std::string raw_title;
  std::string label;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;

  // The title continues its parent's title and still has to be attached to
  // it. Cleared once the attachment has been made.
  bool complements_parent = false;
  // For the second and later parts of a semicolon split: the first part.
  std::string coordinate_head;
};

// Fields a caller supplies when adding a node; links are managed by the tree.
struct NodeSpec {
  CpcCode code;
  std::optional<int> rank;
  std::string raw_title;
  std::string label;
  bool complements_parent = false;
  std::string coordinate_head;

  // label = raw_title, complements_parent from the title's first letter.
  static NodeSpec from_title(CpcCode code, std::optional<int> rank,
                             std::string title);
};

// One row of a structural dump: pre-order position, parent position, code
// and label.
struct TreeRow {
  std::size_t index;
  std::optional<std::size_t> parent;
  std::string code;
  std::string label;
  bool operator==(const TreeRow&) const = default;
};

// Rooted ordered tree of CPC titles. Node ids stay valid until the node is
// removed; removed slots are not reused.
class TitleTree {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  TitleTree() = default;

  NodeId add_root(NodeSpec spec);
  // Inserts before children[position]; npos appends.
  NodeId add_child(NodeId parent, NodeSpec spec, std::size_t position = npos);

  bool empty() const { return !root_; }
  NodeId root() const;
  bool contains(NodeId id) const;
  std::size_t size() const { return live_; }

  const TitleNode& node(NodeId id) const;
  // Structural fields (id, parent, children) must not be edited through this.
  TitleNode& mutable_node(NodeId id);

  void set_label(NodeId id, std::string label) { mutable_node(id).label = std::move(label); }

  // Removes id and all of its descendants. The root cannot be removed.
  void remove_subtree(NodeId id);
  // Removes id and moves its children, in order, to its position in the
  // parent's child list.
  void splice_out(NodeId id);
  // Deep copy of source's subtree inserted under parent. Returns the copy of
  // source.
  NodeId copy_subtree(NodeId source, NodeId parent, std::size_t position = npos);

  std::size_t position_in_parent(NodeId id) const;
  std::size_t depth(NodeId id) const;
  std::size_t subtree_size(NodeId id) const;

  std::vector<NodeId> preorder() const;
  std::vector<NodeId> preorder(NodeId from) const;
  // Children before parents.
  std::vector<NodeId> postorder() const;

  std::vector<TreeRow> rows() const;
  // Copy with dense ids assigned in pre-order.
  TitleTree compacted() const;

  // Empty when single-rooted, acyclic and parent/child links agree.
  std::optional<std::string> structural_error() const;
  // Empty when every ranked node's parent has rank r-1 (or is the main
  // group for r = 1).
  std::optional<std::string> rank_error() const;

 private:
  NodeId allocate(NodeSpec spec);
  void link(NodeId parent, NodeId child, std::size_t position);

  std::vector<std::optional<TitleNode>> slots_;
  std::optional<NodeId> root_;
  std::size_t live_ = 0;
};

}  // namespace cpctaxo
