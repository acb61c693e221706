#include "xbench/permutations.hpp"

#include "xbench/errors.hpp"

namespace xbench {

namespace {

std::vector<std::string> permute(const std::string& text) {
  std::vector<std::string> results;
  if (text.size() == 1) {
    results.push_back(text);
    return results;
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    std::string rest = text;
    rest.erase(i, 1);
    const std::vector<std::string> inner = permute(rest);
    for (const auto& s : inner) results.push_back(text[i] + s);
  }
  return results;
}

}  // namespace

std::vector<std::string> permutations(std::string_view text) {
  if (text.empty()) raise<DomainError>("permutations: empty input");
  if (text.size() > kMaxPermutationLength) {
    raise<DomainError>("permutations: length " + std::to_string(text.size()) + " exceeds cap of " +
                       std::to_string(kMaxPermutationLength));
  }
  return permute(std::string(text));
}

}  // namespace xbench
