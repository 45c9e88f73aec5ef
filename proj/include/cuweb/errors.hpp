#ifndef CUWEB_ERRORS_HPP_
#define CUWEB_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace cuweb {

// Structured validation failure. `kind` is a stable machine-readable tag
// (e.g. "NonAssociative", "NotWellDefined"), `where` names the violating
// tuple by element indices.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, std::string message, std::vector<int> where = {})
      : std::runtime_error(kind + ": " + message),
        kind_(std::move(kind)),
        where_(std::move(where)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<int>& where() const noexcept { return where_; }

 private:
  std::string kind_;
  std::vector<int> where_;
};

}  // namespace cuweb

#endif  // CUWEB_ERRORS_HPP_
