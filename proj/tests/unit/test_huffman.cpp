#include <cmath>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "xbench/errors.hpp"
#include "xbench/harness/workload.hpp"
#include "xbench/huffman.hpp"

using namespace xbench;

namespace {

std::uint64_t code_length_of(const std::vector<SymbolWeight>& weights) {
  return weighted_path_length(make_code_table(huffman_build(weights)), weights);
}

std::vector<std::uint64_t> weights_only(const std::vector<SymbolWeight>& weights) {
  std::vector<std::uint64_t> w;
  for (const auto& sw : weights) w.push_back(sw.weight);
  return w;
}

bool is_prefix(const BitString& a, const BitString& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

BitString bits(const char* s) {
  BitString out;
  for (; *s; ++s) out.push_back(*s == '1');
  return out;
}

}  // namespace

TEST_SUITE("huffman") {

TEST_CASE("two symbols get one bit each") {
  const std::vector<SymbolWeight> w{{'a', 1}, {'b', 1}};
  const CodeTable table = make_code_table(huffman_build(w));
  CHECK(table.code('a')->size() == 1);
  CHECK(table.code('b')->size() == 1);
  CHECK(weighted_path_length(table, w) == 2);
}

TEST_CASE("a:1 b:2 c:4") {
  const std::vector<SymbolWeight> w{{'a', 1}, {'b', 2}, {'c', 4}};
  CHECK(code_length_of(w) == 10);
  CHECK(oracle::exhaustive_weighted_length({1, 2, 4}) == 10);
  const CodeTable table = make_code_table(huffman_build(w));
  CHECK(table.code('c')->size() == 1);
  CHECK(table.code('a')->size() == 2);
}

TEST_CASE("aabbbcccc frequencies are optimal") {
  const auto w = symbol_frequencies("aabbbcccc");
  REQUIRE(w.size() == 3);
  CHECK(w[0].symbol == 'a');
  CHECK(w[0].weight == 2);
  CHECK(w[2].weight == 4);
  CHECK(code_length_of(w) == oracle::exhaustive_weighted_length(weights_only(w)));
}

TEST_CASE("optimal against exhaustive search on small alphabets") {
  Rng rng(77);
  for (int round = 0; round < 100; ++round) {
    const auto k = static_cast<std::size_t>(rng.next_int(2, 7));
    std::vector<SymbolWeight> w;
    for (std::size_t i = 0; i < k; ++i) {
      w.push_back({static_cast<Symbol>('a' + i), static_cast<std::uint64_t>(rng.next_int(1, 50))});
    }
    REQUIRE(code_length_of(w) == oracle::exhaustive_weighted_length(weights_only(w)));
  }
}

TEST_CASE("tree shape and code properties") {
  Rng rng(5);
  for (int round = 0; round < 50; ++round) {
    const auto k = static_cast<std::size_t>(rng.next_int(2, 60));
    std::vector<SymbolWeight> w;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto weight = static_cast<std::uint64_t>(rng.next_int(1, 1000));
      w.push_back({static_cast<Symbol>(i * 3), weight});
      total += weight;
    }
    const HuffmanTree tree = huffman_build(w);
    CHECK(tree.leaf_count() == k);
    CHECK(tree.internal_count() == k - 1);
    CHECK(tree.node(tree.root()).freq == total);
    for (const auto& n : tree.nodes()) {
      if (!n.is_leaf()) {
        REQUIRE(n.right != HuffmanTree::kNone);
        CHECK(n.freq == tree.node(n.left).freq + tree.node(n.right).freq);
      }
    }

    const CodeTable table = make_code_table(tree);
    double kraft = 0;
    for (const auto& a : w) {
      const BitString& ca = *table.code(a.symbol);
      kraft += std::ldexp(1.0, -static_cast<int>(ca.size()));
      for (const auto& b : w) {
        if (a.symbol != b.symbol) REQUIRE_FALSE(is_prefix(ca, *table.code(b.symbol)));
      }
    }
    CHECK(kraft == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("encode") {
  CodeTable table;
  table.set('a', bits("0"));
  table.set('b', bits("1"));
  CHECK(huffman_encode("", table).empty());
  CHECK(to_string(huffman_encode("ab", table)) == "01");
  CHECK_THROWS_AS(huffman_encode("abc", table), EncodingError);
}

TEST_CASE("encoded length is the weighted path length") {
  const std::string text = "the quick brown fox jumps over the lazy dog";
  const auto w = symbol_frequencies(text);
  const CodeTable table = make_code_table(huffman_build(w));
  CHECK(huffman_encode(text, table).size() == weighted_path_length(table, w));
}

TEST_CASE("round trip on the lorem ipsum corpus") {
  const std::string_view text = harness::lorem_ipsum();
  REQUIRE(text.size() > 200);
  const HuffmanTree tree = huffman_build(symbol_frequencies(text));
  const BitString encoded = huffman_encode(text, make_code_table(tree));
  CHECK(encoded.size() < text.size() * 8);
  CHECK(huffman_decode(encoded, tree) == text);
}

TEST_CASE("decode") {
  const HuffmanTree tree = huffman_build({{'a', 1}, {'b', 2}, {'c', 4}});
  const CodeTable table = make_code_table(tree);
  CHECK(huffman_decode({}, tree).empty());
  BitString encoded = huffman_encode("abcab", table);
  CHECK(huffman_decode(encoded, tree) == "abcab");
  encoded.pop_back();
  CHECK_THROWS_AS(huffman_decode(encoded, tree), DecodingError);
}

TEST_CASE("build errors") {
  CHECK_THROWS_AS(huffman_build({}), DomainError);
  CHECK_THROWS_AS(huffman_build({{'a', 3}}), DomainError);
  CHECK_THROWS_AS(huffman_build({{'a', 3}, {'b', 0}}), DomainError);
  CHECK_THROWS_AS(huffman_build({{'a', 3}, {'a', 4}}), DomainError);
}

TEST_CASE("weighted length needs every symbol") {
  CodeTable table;
  table.set('a', bits("0"));
  CHECK_THROWS_AS(weighted_path_length(table, {{'a', 1}, {'b', 1}}), EncodingError);
}

}
