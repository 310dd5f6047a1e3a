#include "disco/tree.h"

#include <algorithm>
#include <cctype>

#include "disco/error.h"

namespace disco {
namespace {

bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class BracketReader {
 public:
  explicit BracketReader(std::string_view text) : text_(text) {}

  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }
  char Peek() {
    SkipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void Expect(char c) {
    if (Peek() != c) Fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string Atom() {
    SkipSpace();
    size_t start = pos_;
    while (pos_ < text_.size() && !IsSpace(text_[pos_]) && text_[pos_] != '(' &&
           text_[pos_] != ')') {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorKind::kParse,
                "PTB bracketing: " + what + " at position " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

std::string NodeContext::Render() const {
  return label + "-" + parent + "-" + left_sibling + "-" + right_sibling;
}

std::string NormalizePtbToken(std::string_view token) {
  if (token == "-LRB-") return "(";
  if (token == "-RRB-") return ")";
  if (token == "-LCB-") return "{";
  if (token == "-RCB-") return "}";
  if (token == "-LSB-") return "[";
  if (token == "-RSB-") return "]";
  return std::string(token);
}

ParseTree ParseTree::Parse(std::string_view bracketing) {
  BracketReader reader(bracketing);
  if (reader.AtEnd()) reader.Fail("empty bracketing");

  ParseTree tree;
  // Recursive descent; returns the id of the node just read.
  auto read_node = [&](auto& self, NodeId parent) -> NodeId {
    reader.Expect('(');
    NodeId id = tree.size();
    tree.nodes_.emplace_back();
    tree.nodes_[id].id = id;
    tree.nodes_[id].parent = parent;
    std::string label = reader.Atom();
    if (label.empty()) {
      if (parent != kNoNode) reader.Fail("unlabelled inner node");
      label = "ROOT";
    }
    tree.nodes_[id].label = std::move(label);

    int first_token = tree.num_tokens();
    if (reader.Peek() == '(') {
      while (reader.Peek() == '(') {
        NodeId child = self(self, id);
        tree.nodes_[id].children.push_back(child);
      }
    } else {
      std::string word = reader.Atom();
      if (word.empty()) reader.Fail("node without children");
      tree.nodes_[id].word = std::move(word);
      tree.preterminals_.push_back(id);
    }
    reader.Expect(')');
    tree.nodes_[id].span = {first_token, tree.num_tokens()};
    return id;
  };
  read_node(read_node, kNoNode);
  if (!reader.AtEnd()) reader.Fail("trailing material after tree");
  return tree;
}

void ParseTree::CheckNode(NodeId id) const {
  if (!valid(id)) {
    throw Error(ErrorKind::kDomain, "node id " + std::to_string(id) +
                                        " is not part of this tree");
  }
}

const ConstituentNode& ParseTree::node(NodeId id) const {
  CheckNode(id);
  return nodes_[id];
}

NodeId ParseTree::LeftSibling(NodeId id) const {
  NodeId p = parent(id);
  if (p == kNoNode) return kNoNode;
  const auto& siblings = nodes_[p].children;
  auto it = std::find(siblings.begin(), siblings.end(), id);
  return it == siblings.begin() ? kNoNode : *(it - 1);
}

NodeId ParseTree::RightSibling(NodeId id) const {
  NodeId p = parent(id);
  if (p == kNoNode) return kNoNode;
  const auto& siblings = nodes_[p].children;
  auto it = std::find(siblings.begin(), siblings.end(), id);
  return (it + 1 == siblings.end()) ? kNoNode : *(it + 1);
}

NodeId ParseTree::Preterminal(int token) const {
  if (token < 0 || token >= num_tokens()) {
    throw Error(ErrorKind::kDomain, "token " + std::to_string(token) + " out of range");
  }
  return preterminals_[token];
}

bool ParseTree::IsAncestorOrSelf(NodeId ancestor, NodeId id) const {
  CheckNode(ancestor);
  for (NodeId n = id; n != kNoNode; n = parent(n)) {
    if (n == ancestor) return true;
  }
  return false;
}

int ParseTree::Depth(NodeId id) const {
  int depth = 0;
  for (NodeId n = parent(id); n != kNoNode; n = nodes_[n].parent) ++depth;
  return depth;
}

std::vector<NodeId> ParseTree::PathToRoot(NodeId id) const {
  CheckNode(id);
  std::vector<NodeId> path;
  for (NodeId n = id; n != kNoNode; n = nodes_[n].parent) path.push_back(n);
  return path;
}

NodeId ParseTree::SelfCat(const TokenRange& range) const {
  if (range.empty() || range.begin < 0 || range.end > num_tokens()) {
    throw Error(ErrorKind::kDomain, "token range [" + std::to_string(range.begin) + "," +
                                        std::to_string(range.end) + ") not in sentence");
  }
  // Every node covering the range is an ancestor of its first token, and the
  // exact covers (if any) are the lowest of those.
  NodeId n = preterminals_[range.begin];
  while (!nodes_[n].span.Contains(range)) n = nodes_[n].parent;
  return n;
}

NodeId ParseTree::MaximalProjection(NodeId id) const {
  CheckNode(id);
  NodeId n = id;
  while (nodes_[n].parent != kNoNode && nodes_[nodes_[n].parent].span == nodes_[n].span) {
    n = nodes_[n].parent;
  }
  return n;
}

NodeId ParseTree::LowestCommonAncestor(NodeId a, NodeId b) const {
  CheckNode(a);
  CheckNode(b);
  int da = Depth(a);
  int db = Depth(b);
  for (; da > db; --da) a = nodes_[a].parent;
  for (; db > da; --db) b = nodes_[b].parent;
  while (a != b) {
    a = nodes_[a].parent;
    b = nodes_[b].parent;
  }
  return a;
}

std::string ParseTree::RenderPath(NodeId from, NodeId to) const {
  NodeId lca = LowestCommonAncestor(from, to);
  std::string out = nodes_[from].label;
  for (NodeId n = from; n != lca;) {
    n = nodes_[n].parent;
    out += kUpGlyph;
    out += nodes_[n].label;
  }
  std::vector<NodeId> down;
  for (NodeId n = to; n != lca; n = nodes_[n].parent) down.push_back(n);
  for (auto it = down.rbegin(); it != down.rend(); ++it) {
    out += kDownGlyph;
    out += nodes_[*it].label;
  }
  return out;
}

NodeContext ParseTree::Context(NodeId id) const {
  auto label_or_null = [this](NodeId n) {
    return n == kNoNode ? std::string(kNullLabel) : nodes_[n].label;
  };
  return {node(id).label, label_or_null(parent(id)), label_or_null(LeftSibling(id)),
          label_or_null(RightSibling(id))};
}

std::string ParseTree::ToBracketing(NodeId id) const {
  const ConstituentNode& n = node(id);
  std::string out = "(" + n.label;
  if (n.is_preterminal()) {
    out += " " + n.word;
  } else {
    for (NodeId child : n.children) out += " " + ToBracketing(child);
  }
  out += ")";
  return out;
}

}  // namespace disco
