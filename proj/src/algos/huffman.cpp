#include "xbench/huffman.hpp"

#include <queue>
#include <string>

#include "xbench/errors.hpp"

namespace xbench {

std::size_t HuffmanTree::leaf_count() const noexcept {
  std::size_t leaves = 0;
  for (const auto& n : nodes_) leaves += n.is_leaf() ? 1 : 0;
  return leaves;
}

std::vector<Symbol> CodeTable::symbols() const {
  std::vector<Symbol> out;
  for (std::size_t s = 0; s < codes_.size(); ++s) {
    if (codes_[s]) out.push_back(static_cast<Symbol>(s));
  }
  return out;
}

HuffmanTree huffman_build(const std::vector<SymbolWeight>& weights) {
  if (weights.size() < 2) raise<DomainError>("huffman_build: need at least two symbols");

  HuffmanTree tree;
  tree.nodes_.reserve(2 * weights.size() - 1);
  std::array<bool, 256> seen{};
  for (const auto& sw : weights) {
    if (sw.weight == 0) {
      raise<DomainError>("huffman_build: symbol " + std::to_string(sw.symbol) +
                         " has non-positive weight");
    }
    if (seen[sw.symbol]) {
      raise<DomainError>("huffman_build: duplicate symbol " + std::to_string(sw.symbol));
    }
    seen[sw.symbol] = true;
    tree.nodes_.push_back({sw.weight, HuffmanTree::kNone, HuffmanTree::kNone, sw.symbol});
  }

  // (freq, node index); the index doubles as creation order for ties.
  using Entry = std::pair<std::uint64_t, std::int32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (std::size_t i = 0; i < tree.nodes_.size(); ++i) {
    queue.emplace(tree.nodes_[i].freq, static_cast<std::int32_t>(i));
  }

  for (std::size_t i = 1; i < weights.size(); ++i) {
    const auto x = queue.top();
    queue.pop();
    const auto y = queue.top();
    queue.pop();
    const auto z = static_cast<std::int32_t>(tree.nodes_.size());
    tree.nodes_.push_back({x.first + y.first, x.second, y.second, 0});
    queue.emplace(x.first + y.first, z);
  }
  tree.root_ = queue.top().second;
  return tree;
}

CodeTable make_code_table(const HuffmanTree& tree) {
  CodeTable table;
  if (tree.root() == HuffmanTree::kNone) return table;

  struct Frame {
    std::int32_t node;
    BitString prefix;
  };
  std::vector<Frame> stack{{tree.root(), {}}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const auto& n = tree.node(f.node);
    if (n.is_leaf()) {
      table.set(n.symbol, std::move(f.prefix));
      continue;
    }
    BitString right = f.prefix;
    right.push_back(true);
    f.prefix.push_back(false);
    stack.push_back({n.right, std::move(right)});
    stack.push_back({n.left, std::move(f.prefix)});
  }
  return table;
}

std::vector<SymbolWeight> symbol_frequencies(std::string_view text) {
  std::array<std::uint64_t, 256> counts{};
  for (unsigned char c : text) ++counts[c];
  std::vector<SymbolWeight> out;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (counts[s]) out.push_back({static_cast<Symbol>(s), counts[s]});
  }
  return out;
}

std::uint64_t weighted_path_length(const CodeTable& table,
                                   const std::vector<SymbolWeight>& weights) {
  std::uint64_t total = 0;
  for (const auto& sw : weights) {
    const auto& code = table.code(sw.symbol);
    if (!code) raise<EncodingError>("no codeword for symbol " + std::to_string(sw.symbol));
    total += sw.weight * code->size();
  }
  return total;
}

BitString huffman_encode(std::string_view text, const CodeTable& table) {
  BitString out;
  for (unsigned char c : text) {
    const auto& code = table.code(c);
    if (!code) raise<EncodingError>("huffman_encode: no codeword for symbol " + std::to_string(c));
    out.insert(out.end(), code->begin(), code->end());
  }
  return out;
}

std::string huffman_decode(const BitString& bits, const HuffmanTree& tree) {
  std::string out;
  if (bits.empty()) return out;
  if (tree.root() == HuffmanTree::kNone) raise<DecodingError>("huffman_decode: empty tree");

  std::int32_t cur = tree.root();
  for (bool bit : bits) {
    const auto& n = tree.node(cur);
    cur = bit ? n.right : n.left;
    const auto& next = tree.node(cur);
    if (next.is_leaf()) {
      out.push_back(static_cast<char>(next.symbol));
      cur = tree.root();
    }
  }
  if (cur != tree.root()) {
    raise<DecodingError>("huffman_decode: bit stream ends inside a codeword");
  }
  return out;
}

std::string to_string(const BitString& bits) {
  std::string s;
  s.reserve(bits.size());
  for (bool b : bits) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace xbench
