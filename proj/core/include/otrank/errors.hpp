#ifndef OTRANK_ERRORS_HPP
#define OTRANK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ot {

// Malformed or semantically invalid input: bad files, unknown symbols,
// mismatched alphabets, vectors of the wrong arity, empty candidate sets
// where a nonempty one is required.  CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded (product-state limit, enumeration
// limit, search caps).  CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace ot

#endif  // OTRANK_ERRORS_HPP
