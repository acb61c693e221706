#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace xbench {

// Longest input accepted; 10! = 3 628 800 strings.
inline constexpr std::size_t kMaxPermutationLength = 10;

// Every ordering of text, built as head + permutations(rest) for each head
// position. Repeated characters yield repeated strings; the count is always n!.
// Throws DomainError for empty input or input longer than kMaxPermutationLength.
std::vector<std::string> permutations(std::string_view text);

}  // namespace xbench
