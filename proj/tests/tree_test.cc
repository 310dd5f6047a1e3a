#include <doctest.h>

#include <set>

#include "disco/error.h"
#include "disco/tree.h"
#include "test_support.h"

namespace disco {
namespace {

using testing::FindNode;
using testing::kArbitrageTree;
using testing::Labels;

// Splits "A ↑ B ↓ C" into labels and glyphs.
void SplitPath(const std::string& path, std::vector<std::string>* labels,
               std::vector<std::string>* glyphs) {
  size_t pos = 0;
  while (true) {
    size_t up = path.find(kUpGlyph, pos);
    size_t down = path.find(kDownGlyph, pos);
    size_t next = std::min(up, down);
    labels->push_back(path.substr(pos, next - pos));
    if (next == std::string::npos) return;
    glyphs->push_back(next == up ? "up" : "down");
    pos = next + (next == up ? kUpGlyph.size() : kDownGlyph.size());
  }
}

// Lowest common ancestor by intersecting full ancestor sets.
NodeId OracleLca(const ParseTree& tree, NodeId a, NodeId b) {
  std::set<NodeId> ancestors_a;
  for (NodeId n = a; n != kNoNode; n = tree.parent(n)) ancestors_a.insert(n);
  NodeId best = kNoNode;
  for (NodeId n = b; n != kNoNode; n = tree.parent(n)) {
    if (ancestors_a.contains(n) && (best == kNoNode || tree.Depth(n) > tree.Depth(best))) {
      best = n;
    }
  }
  return best;
}

TEST_CASE("parses the arbitrage bracketing") {
  ParseTree tree = ParseTree::Parse(kArbitrageTree);
  CHECK(tree.label(tree.root()) == "S");
  CHECK(Labels(tree, tree.node(tree.root()).children) == std::vector<std::string>{"NP", "VP"});
  NodeId sbar = FindNode(tree, "SBAR");
  CHECK(Labels(tree, tree.node(sbar).children) == std::vector<std::string>{"WHADVP", "S"});
  REQUIRE(tree.num_tokens() == 11);
  const ConstituentNode& when = tree.node(tree.Preterminal(5));
  CHECK(when.word == "when");
  CHECK(when.label == "WRB");
  CHECK(when.span == TokenRange{5, 6});
}

TEST_CASE("single-token tree") {
  ParseTree tree = ParseTree::Parse("(ROOT (NN dog))");
  CHECK(tree.label(0) == "ROOT");
  REQUIRE(tree.node(0).children.size() == 1);
  const ConstituentNode& nn = tree.node(tree.node(0).children[0]);
  CHECK(nn.label == "NN");
  CHECK(nn.word == "dog");
  CHECK(nn.span == TokenRange{0, 1});
  CHECK(tree.node(0).span == TokenRange{0, 1});
}

TEST_CASE("an unlabelled outer wrapper becomes ROOT") {
  ParseTree tree = ParseTree::Parse("( (S (NP (NN x)) (VP (VB y))) )\n");
  CHECK(tree.label(0) == "ROOT");
  CHECK(tree.label(1) == "S");
  CHECK(tree.num_tokens() == 2);
}

TEST_CASE("malformed bracketings report a position") {
  for (const char* bad : {"", "   ", "(S (NN x)", "(S (NN x)))", "(S)", "(S (NN x) ( (NN y)))",
                          "NN x"}) {
    CAPTURE(bad);
    try {
      ParseTree::Parse(bad);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kParse);
      CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
  }
}

TEST_CASE("PTB escapes normalise to brackets") {
  CHECK(NormalizePtbToken("-LRB-") == "(");
  CHECK(NormalizePtbToken("-RRB-") == ")");
  CHECK(NormalizePtbToken("-LCB-") == "{");
  CHECK(NormalizePtbToken("-RCB-") == "}");
  CHECK(NormalizePtbToken("when") == "when");
}

TEST_CASE("random trees survive print and re-parse") {
  testing::RandomTreeGenerator gen(7);
  for (int i = 0; i < 200; ++i) {
    std::string text = gen.Next();
    ParseTree tree = ParseTree::Parse(text);
    CHECK(tree.ToBracketing() == text);
    ParseTree again = ParseTree::Parse(tree.ToBracketing());
    CHECK(again.ToBracketing() == text);
    CHECK(again.size() == tree.size());
  }
}

TEST_CASE("spans concatenate children without gaps") {
  testing::RandomTreeGenerator gen(11);
  for (int i = 0; i < 200; ++i) {
    ParseTree tree = ParseTree::Parse(gen.Next());
    for (NodeId n = 0; n < tree.size(); ++n) {
      const ConstituentNode& node = tree.node(n);
      if (node.is_preterminal()) {
        CHECK(node.span.size() == 1);
        continue;
      }
      int cursor = node.span.begin;
      for (size_t c = 0; c < node.children.size(); ++c) {
        NodeId child = node.children[c];
        CHECK(tree.parent(child) == n);
        CHECK(tree.node(child).span.begin == cursor);
        cursor = tree.node(child).span.end;
        CHECK(tree.LeftSibling(child) == (c == 0 ? kNoNode : node.children[c - 1]));
        CHECK(tree.RightSibling(child) ==
              (c + 1 == node.children.size() ? kNoNode : node.children[c + 1]));
      }
      CHECK(cursor == node.span.end);
    }
  }
}

TEST_CASE("SelfCat on the arbitrage tree") {
  ParseTree tree = ParseTree::Parse(kArbitrageTree);
  CHECK(tree.label(tree.SelfCat({5, 6})) == "WRB");
  CHECK(tree.SelfCat({0, 11}) == tree.root());
  CHECK(tree.SelfCat({3, 5}) == FindNode(tree, "NP", 1));
  // "arbitrage when" has no exact cover; the lowest covering node is VP2.
  CHECK(tree.SelfCat({4, 6}) == FindNode(tree, "VP", 1));
  CHECK(tree.MaximalProjection(tree.SelfCat({5, 6})) == FindNode(tree, "WHADVP"));
  CHECK_THROWS_AS(tree.SelfCat({3, 3}), Error);
  CHECK_THROWS_AS(tree.SelfCat({10, 12}), Error);
}

TEST_CASE("SelfCat of a node's span stays on that node's unary chain") {
  testing::RandomTreeGenerator gen(13);
  for (int i = 0; i < 200; ++i) {
    ParseTree tree = ParseTree::Parse(gen.Next());
    for (NodeId n = 0; n < tree.size(); ++n) {
      NodeId s = tree.SelfCat(tree.node(n).span);
      CHECK(tree.node(s).span == tree.node(n).span);
      CHECK((tree.IsAncestorOrSelf(s, n) || tree.IsAncestorOrSelf(n, s)));
      CHECK(tree.IsAncestorOrSelf(tree.MaximalProjection(s), n));
    }
  }
}

TEST_CASE("path to root") {
  ParseTree tree = ParseTree::Parse(kArbitrageTree);
  CHECK(Labels(tree, tree.PathToRoot(tree.Preterminal(5))) ==
        std::vector<std::string>{"WRB", "WHADVP", "SBAR", "VP", "VP", "S"});
  CHECK(tree.PathToRoot(tree.root()) == std::vector<NodeId>{tree.root()});

  testing::RandomTreeGenerator gen(17);
  for (int i = 0; i < 200; ++i) {
    ParseTree t = ParseTree::Parse(gen.Next());
    for (NodeId n = 0; n < t.size(); ++n) {
      std::vector<NodeId> path = t.PathToRoot(n);
      CHECK(path.front() == n);
      CHECK(path.back() == t.root());
      for (size_t k = 1; k < path.size(); ++k) CHECK(t.parent(path[k - 1]) == path[k]);
      if (t.node(n).is_preterminal()) CHECK(path.size() == static_cast<size_t>(t.Depth(n) + 1));
    }
  }
}

TEST_CASE("rendered paths on the arbitrage tree") {
  ParseTree tree = ParseTree::Parse(kArbitrageTree);
  NodeId s2 = FindNode(tree, "S", 1);
  NodeId whadvp = FindNode(tree, "WHADVP");
  NodeId np1 = FindNode(tree, "NP", 0);
  NodeId wrb = FindNode(tree, "WRB");
  CHECK(tree.RenderPath(s2, whadvp) == "S ↑ SBAR ↓ WHADVP");
  CHECK(tree.RenderPath(np1, np1) == "NP");
  CHECK(tree.RenderPath(np1, wrb) == "NP ↑ S ↓ VP ↓ VP ↓ SBAR ↓ WHADVP ↓ WRB");
  CHECK_THROWS_AS(tree.RenderPath(s2, tree.size()), Error);
  CHECK_THROWS_AS(tree.RenderPath(-3, s2), Error);
}

TEST_CASE("rendered paths agree with an ancestor-intersection oracle and reverse cleanly") {
  testing::RandomTreeGenerator gen(19);
  for (int i = 0; i < 40; ++i) {
    ParseTree tree = ParseTree::Parse(gen.Next());
    for (NodeId a = 0; a < tree.size(); ++a) {
      for (NodeId b = 0; b < tree.size(); ++b) {
        NodeId lca = OracleLca(tree, a, b);
        REQUIRE(tree.LowestCommonAncestor(a, b) == lca);

        std::vector<std::string> labels, glyphs;
        SplitPath(tree.RenderPath(a, b), &labels, &glyphs);
        size_t ups = tree.Depth(a) - tree.Depth(lca);
        size_t downs = tree.Depth(b) - tree.Depth(lca);
        std::vector<std::string> expected(ups, "up");
        expected.resize(ups + downs, "down");
        REQUIRE(glyphs == expected);
        REQUIRE(labels.front() == tree.label(a));
        REQUIRE(labels.back() == tree.label(b));
        REQUIRE(labels[ups] == tree.label(lca));

        std::vector<std::string> rev_labels, rev_glyphs;
        SplitPath(tree.RenderPath(b, a), &rev_labels, &rev_glyphs);
        std::reverse(rev_labels.begin(), rev_labels.end());
        std::reverse(rev_glyphs.begin(), rev_glyphs.end());
        for (std::string& g : rev_glyphs) g = g == "up" ? "down" : "up";
        REQUIRE(rev_labels == labels);
        REQUIRE(rev_glyphs == glyphs);
      }
    }
  }
}

TEST_CASE("node context") {
  ParseTree tree = ParseTree::Parse(kArbitrageTree);
  CHECK(tree.Context(FindNode(tree, "S", 1)).Render() == "S-SBAR-WHADVP-null");
  CHECK(tree.Context(tree.root()) == NodeContext{"S", "null", "null", "null"});
  CHECK(tree.Context(FindNode(tree, "NP", 1)) == NodeContext{"NP", "VP", "VB", "SBAR"});
}

}  // namespace
}  // namespace disco
