#ifndef DISCO_TREE_H_
#define DISCO_TREE_H_

#include <string>
#include <string_view>
#include <vector>

namespace disco {

// Half-open range of token positions within one sentence.
struct TokenRange {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
  bool empty() const { return end <= begin; }
  bool Contains(const TokenRange& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool Contains(int token) const { return begin <= token && token < end; }
  friend bool operator==(const TokenRange&, const TokenRange&) = default;
};

using NodeId = int;
inline constexpr NodeId kNoNode = -1;

// A node of a constituency tree. Preterminals (POS nodes) carry the terminal
// word and have no child nodes; every other node has at least one child.
// Node ids are assigned in pre-order, so id order is document order.
struct ConstituentNode {
  NodeId id = kNoNode;
  std::string label;
  std::string word;
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
  TokenRange span;

  bool is_preterminal() const { return children.empty(); }
};

// (label, parent, left sibling, right sibling); absent neighbours are "null".
struct NodeContext {
  std::string label;
  std::string parent;
  std::string left_sibling;
  std::string right_sibling;

  // "label-parent-left-right"
  std::string Render() const;
  friend bool operator==(const NodeContext&, const NodeContext&) = default;
};

inline constexpr std::string_view kNullLabel = "null";
inline constexpr std::string_view kUpGlyph = " ↑ ";
inline constexpr std::string_view kDownGlyph = " ↓ ";

// Maps the PTB bracket escapes (-LRB- and friends) back to the characters
// they stand for. Other tokens are returned unchanged.
std::string NormalizePtbToken(std::string_view token);

// Immutable constituency tree. Nodes are stored by value and addressed by
// NodeId, so copies of a tree stay self-consistent.
class ParseTree {
 public:
  // Parses one PTB bracketing, e.g. "( (S (NP (PRP We)) ...) )". An outer
  // node without a label is kept and labelled ROOT. Throws Error(kParse)
  // with the character position on malformed input.
  static ParseTree Parse(std::string_view bracketing);

  NodeId root() const { return 0; }
  int size() const { return static_cast<int>(nodes_.size()); }
  int num_tokens() const { return static_cast<int>(preterminals_.size()); }
  bool valid(NodeId id) const { return id >= 0 && id < size(); }

  const ConstituentNode& node(NodeId id) const;
  const std::string& label(NodeId id) const { return node(id).label; }
  NodeId parent(NodeId id) const { return node(id).parent; }
  NodeId LeftSibling(NodeId id) const;
  NodeId RightSibling(NodeId id) const;

  // Preterminal node above the i-th token.
  NodeId Preterminal(int token) const;
  const std::vector<NodeId>& preterminals() const { return preterminals_; }

  bool IsAncestorOrSelf(NodeId ancestor, NodeId node) const;
  int Depth(NodeId id) const;

  // [id, parent(id), ..., root]
  std::vector<NodeId> PathToRoot(NodeId id) const;

  // The lowest node whose span covers `range` exactly; when no node does,
  // the lowest node whose span is a superset of it. Throws Error(kDomain)
  // for an empty or out-of-bounds range.
  NodeId SelfCat(const TokenRange& range) const;

  // Topmost node of the unary chain above `id` that covers the same tokens.
  NodeId MaximalProjection(NodeId id) const;

  NodeId LowestCommonAncestor(NodeId a, NodeId b) const;

  // "A ↑ B ↑ C ↓ D": labels from `from` up to the lowest common ancestor,
  // then down to `to`.
  std::string RenderPath(NodeId from, NodeId to) const;

  NodeContext Context(NodeId id) const;

  // PTB bracketing of the subtree at `id` (the whole tree by default).
  std::string ToBracketing(NodeId id = 0) const;

 private:
  ParseTree() = default;
  void CheckNode(NodeId id) const;

  std::vector<ConstituentNode> nodes_;
  std::vector<NodeId> preterminals_;
};

}  // namespace disco

#endif  // DISCO_TREE_H_
