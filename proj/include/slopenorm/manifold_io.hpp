#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slopenorm/manifold.hpp"

namespace slopenorm {

/// Raised when a manifold document is rejected; lists every problem found.
class ManifoldFormatError : public std::runtime_error {
 public:
  explicit ManifoldFormatError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Parses and fully validates a JSON manifold document.
ManifoldData parse_manifold(std::string_view text);

/// Deterministic JSON: sorted keys, rationals and slopes as strings.
std::string dump_manifold(const ManifoldData& manifold);

ManifoldData load(const std::filesystem::path& path);
void save(const ManifoldData& manifold, const std::filesystem::path& path);

}  // namespace slopenorm
