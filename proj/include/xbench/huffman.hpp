#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xbench {

using Symbol = unsigned char;
using BitString = std::vector<bool>;

struct SymbolWeight {
  Symbol symbol;
  std::uint64_t weight;
};

// Binary code tree stored as an arena. Leaves carry a symbol; internal nodes
// carry two children and the sum of their frequencies.
class HuffmanTree {
 public:
  static constexpr std::int32_t kNone = -1;

  struct Node {
    std::uint64_t freq = 0;
    std::int32_t left = kNone;
    std::int32_t right = kNone;
    Symbol symbol = 0;

    bool is_leaf() const noexcept { return left == kNone; }
  };

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  std::int32_t root() const noexcept { return root_; }
  const Node& node(std::int32_t i) const { return nodes_[static_cast<std::size_t>(i)]; }
  std::size_t leaf_count() const noexcept;
  std::size_t internal_count() const noexcept { return nodes_.size() - leaf_count(); }

 private:
  friend HuffmanTree huffman_build(const std::vector<SymbolWeight>& weights);
  std::vector<Node> nodes_;
  std::int32_t root_ = kNone;
};

// Symbol -> codeword. Absent symbols have no entry.
class CodeTable {
 public:
  const std::optional<BitString>& code(Symbol s) const noexcept { return codes_[s]; }
  void set(Symbol s, BitString bits) { codes_[s] = std::move(bits); }
  std::vector<Symbol> symbols() const;

 private:
  std::array<std::optional<BitString>, 256> codes_{};
};

// Repeatedly merges the two lightest subtrees using a min-heap. Ties are
// broken by creation order so the tree is deterministic.
// Throws DomainError for fewer than two symbols, a duplicate symbol, or a zero weight.
HuffmanTree huffman_build(const std::vector<SymbolWeight>& weights);

// Left edge = 0, right edge = 1.
CodeTable make_code_table(const HuffmanTree& tree);

// Byte frequencies of text, ascending by symbol.
std::vector<SymbolWeight> symbol_frequencies(std::string_view text);

// Sum of weight * codeword length. Throws EncodingError if a symbol has no code.
std::uint64_t weighted_path_length(const CodeTable& table,
                                   const std::vector<SymbolWeight>& weights);

// Throws EncodingError on a symbol without a codeword.
BitString huffman_encode(std::string_view text, const CodeTable& table);

// Throws DecodingError if the bits do not end on a codeword boundary.
std::string huffman_decode(const BitString& bits, const HuffmanTree& tree);

// "0101" style rendering, mostly for tests and diagnostics.
std::string to_string(const BitString& bits);

}  // namespace xbench
