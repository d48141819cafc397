#include <algorithm>

#include "cpctaxo/rules.hpp"
#include "cpctaxo/text.hpp"
#include "rules_internal.hpp"

namespace cpctaxo {

namespace {

void report(std::vector<Diagnostic>* diagnostics, const TitleNode& node, const char* rule,
            Warnings& warnings) {
  if (diagnostics)
    for (auto& w : warnings) diagnostics->push_back({node.code.to_string(), rule, std::move(w)});
  warnings.clear();
}

// A label that can stand in for a referent: present, not a detail title and
// free of unresolved references of the given kind.
bool usable_referent(std::string_view label, bool for_such) {
  if (text::trim(label).empty() || is_detail_label(label)) return false;
  if (for_such) return text::find_word(label, "such") == std::string_view::npos;
  return !detail::contains_adverb(label);
}

std::optional<NodeId> ancestor_referent(const TitleTree& tree, NodeId id, bool for_such) {
  for (auto p = tree.node(id).parent; p; p = tree.node(*p).parent)
    if (usable_referent(tree.node(*p).label, for_such)) return p;
  return std::nullopt;
}

// Nearest preceding sibling with a usable label, else the nearest usable
// ancestor.
std::optional<std::string> such_context(const TitleTree& tree, NodeId id) {
  const auto& n = tree.node(id);
  if (n.parent) {
    const auto& siblings = tree.node(*n.parent).children;
    for (std::size_t i = tree.position_in_parent(id); i-- > 0;) {
      const auto& label = tree.node(siblings[i]).label;
      if (usable_referent(label, true)) return label;
    }
  }
  if (auto a = ancestor_referent(tree, id, true)) return tree.node(*a).label;
  return std::nullopt;
}

// An adverb referent with its own "such" resolved in place.
std::string without_such(const TitleTree& tree, NodeId holder, const std::string& label) {
  if (text::find_word(label, "such") == std::string::npos) return label;
  Warnings ignored;
  return resolve_such(label, such_context(tree, holder).value_or(""), &ignored);
}

}  // namespace

TitleTree strip_code_references(TitleTree tree, const CodePattern& codes,
                                std::vector<Diagnostic>* diagnostics) {
  Warnings warnings;
  for (NodeId id : tree.preorder()) {
    auto& n = tree.mutable_node(id);
    n.label = strip_code_references(n.label, codes, &warnings);
    report(diagnostics, n, "strip_code_refs", warnings);
  }
  return tree;
}

TitleTree remove_braces(TitleTree tree) {
  for (NodeId id : tree.preorder()) {
    auto& n = tree.mutable_node(id);
    n.label = remove_braces(n.label);
  }
  return tree;
}

TitleTree extract_synonyms(TitleTree tree, std::vector<SynonymEntry>& out) {
  for (NodeId id : tree.preorder()) {
    auto& n = tree.mutable_node(id);
    auto result = extract_synonyms(n.label, n.code);
    n.label = std::move(result.label);
    for (auto& e : result.entries) out.push_back(std::move(e));
  }
  return tree;
}

TitleTree prune_code_containing_nodes(TitleTree tree, const CodePattern& codes) {
  if (tree.empty()) return tree;
  NodeId root = tree.root();
  for (NodeId id : tree.preorder()) {
    if (id == root || !tree.contains(id)) continue;
    if (codes.found_in(tree.node(id).label)) tree.remove_subtree(id);
  }
  return tree;
}

TitleTree split_semicolon(TitleTree tree) {
  if (tree.empty()) return tree;
  NodeId root = tree.root();
  // Children first, so each copy made below is already split.
  for (NodeId id : tree.postorder()) {
    if (id == root) continue;
    const std::string label = tree.node(id).label;
    if (label.find(';') == std::string::npos) continue;
    auto pieces = text::split_top_level(label, ';');
    if (pieces.size() < 2) continue;
    std::vector<std::string> parts;
    for (auto& p : pieces) {
      std::string t = text::tidy_edges(p);
      if (!t.empty()) parts.push_back(std::move(t));
    }
    auto& n = tree.mutable_node(id);
    if (parts.empty()) {
      n.label.clear();
      continue;
    }
    n.label = parts[0];
    n.complements_parent = text::is_lower(text::first_letter(parts[0]));
    if (parts.size() == 1) continue;

    const NodeId parent = *n.parent;
    const std::vector<NodeId> children = n.children;
    const std::size_t pos = tree.position_in_parent(id);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const auto& original = tree.node(id);
      NodeSpec spec;
      spec.code = original.code;
      spec.rank = original.rank;
      spec.raw_title = original.raw_title;
      spec.label = parts[i];
      spec.complements_parent = text::is_lower(text::first_letter(parts[i]));
      spec.coordinate_head = parts[0];
      NodeId sibling = tree.add_child(parent, std::move(spec), pos + i);
      for (NodeId child : children) tree.copy_subtree(child, sibling);
    }
  }
  return tree;
}

TitleTree resolve_adverbs(TitleTree tree, std::vector<Diagnostic>* diagnostics) {
  Warnings warnings;
  for (NodeId id : tree.preorder()) {
    const auto& n = tree.node(id);
    if (!detail::contains_adverb(n.label)) continue;
    std::optional<std::string> referent;
    if (usable_referent(n.coordinate_head, false)) {
      referent = without_such(tree, id, n.coordinate_head);
    } else if (auto a = ancestor_referent(tree, id, false)) {
      referent = without_such(tree, *a, tree.node(*a).label);
    }
    std::string resolved = resolve_adverbs(n.label, referent.value_or(""), &warnings);
    auto& m = tree.mutable_node(id);
    m.label = std::move(resolved);
    report(diagnostics, m, "resolve_adverbs", warnings);
  }
  return tree;
}

TitleTree split_examples(TitleTree tree) {
  if (tree.empty()) return tree;
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    std::size_t inserted = 0;
    for (;;) {
      std::string label = tree.node(id).label;
      auto marker = detail::find_example_marker(label);
      if (!marker) break;
      auto [m0, m1] = *marker;
      auto depths = text::paren_depths(label);
      std::string before;
      std::string examples;
      std::size_t open = depths[m0] > 0 ? detail::enclosing_paren(label, m0) : std::string::npos;
      std::size_t close = open == std::string::npos ? std::string::npos : detail::closing_paren(label, open);
      if (close != std::string::npos) {
        std::string inner = text::tidy_edges(label.substr(open + 1, m0 - open - 1));
        before = label.substr(0, open);
        if (!inner.empty()) before += "(" + inner + ")";
        before += label.substr(close + 1);
        examples = label.substr(m1, close - m1);
      } else {
        before = label.substr(0, m0);
        examples = label.substr(m1);
      }
      auto& n = tree.mutable_node(id);
      n.label = text::tidy_edges(before);
      const CpcCode code = n.code;
      for (auto& item : text::split_top_level(examples, ',')) {
        std::string term = text::tidy_edges(item);
        if (term.empty() || text::iequals(term, "etc") || text::iequals(term, "etc.")) continue;
        NodeSpec spec;
        spec.code = code;
        spec.raw_title = term;
        spec.label = term;
        tree.add_child(id, std::move(spec), inserted++);
      }
    }
    const auto& kids = tree.node(id).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return tree;
}

TitleTree resolve_such(TitleTree tree, std::vector<Diagnostic>* diagnostics) {
  Warnings warnings;
  for (NodeId id : tree.preorder()) {
    const auto& n = tree.node(id);
    if (text::find_word(n.label, "such") == std::string::npos) continue;
    std::string resolved = resolve_such(n.label, such_context(tree, id).value_or(""), &warnings);
    auto& m = tree.mutable_node(id);
    m.label = std::move(resolved);
    report(diagnostics, m, "resolve_such", warnings);
  }
  return tree;
}

TitleTree collapse_details(TitleTree tree) {
  if (tree.empty()) return tree;
  NodeId root = tree.root();
  for (NodeId id : tree.postorder()) {
    if (id != root && is_detail_label(tree.node(id).label)) tree.splice_out(id);
  }
  return tree;
}

TitleTree collapse_redundant(TitleTree tree) {
  if (tree.empty()) return tree;
  NodeId root = tree.root();
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId id : tree.postorder()) {
      if (id == root) continue;
      const auto& n = tree.node(id);
      if (text::trim(n.label).empty() || text::iequals(n.label, tree.node(*n.parent).label)) {
        tree.splice_out(id);
        changed = true;
      }
    }
  }
  return tree;
}

TitleTree stabilize_heading_case(TitleTree tree) {
  for (NodeId id : tree.preorder()) {
    auto& n = tree.mutable_node(id);
    if (n.code.level() <= CpcLevel::Subclass && text::is_all_caps(n.label))
      n.label = text::casefold(n.label);
  }
  return tree;
}

TitleTree attach_lowercase(TitleTree tree) {
  for (NodeId id : tree.preorder()) {
    const auto& n = tree.node(id);
    if (!n.parent || !n.complements_parent || !text::is_lower(text::first_letter(n.label))) continue;
    const std::string& head = tree.node(*n.parent).label;
    std::string joined = (text::is_all_caps(head) ? head : text::joint_form(head)) + " " + n.label;
    auto& m = tree.mutable_node(id);
    m.label = text::tidy(joined);
    m.complements_parent = false;
  }
  return tree;
}

PipelineResult run_pipeline(TitleTree tree, const RuleConfig& config) {
  PipelineResult result;
  CodePattern codes(config.code_pattern);
  auto* diags = &result.diagnostics;

  if (config.strip_code_refs) tree = strip_code_references(std::move(tree), codes, diags);
  if (config.remove_braces) tree = remove_braces(std::move(tree));
  if (config.extract_synonyms) tree = extract_synonyms(std::move(tree), result.synonyms);
  if (config.prune_code_nodes) tree = prune_code_containing_nodes(std::move(tree), codes);
  if (config.split_semicolon) tree = split_semicolon(std::move(tree));
  if (config.resolve_adverbs) tree = resolve_adverbs(std::move(tree), diags);
  if (config.split_examples) tree = split_examples(std::move(tree));
  if (config.resolve_such) tree = resolve_such(std::move(tree), diags);
  if (config.collapse_details) tree = collapse_details(std::move(tree));
  tree = stabilize_heading_case(std::move(tree));
  tree = collapse_redundant(std::move(tree));
  if (config.attach_lowercase) {
    tree = attach_lowercase(std::move(tree));
    tree = collapse_redundant(std::move(tree));
  }
  result.tree = std::move(tree);
  return result;
}

}  // namespace cpctaxo
