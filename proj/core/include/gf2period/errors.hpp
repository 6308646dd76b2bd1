#ifndef GF2PERIOD_ERRORS_HPP
#define GF2PERIOD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gf2p {

/// Malformed textual input. `position()` is the 0-based byte offset of the
/// offending character in the original input string.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          pos_(position) {}

    std::size_t position() const noexcept { return pos_; }

  private:
    std::size_t pos_;
};

/// A computation hit its configured budget (naive-period cap, Pollard rho
/// iteration budget, ...). The operation gives up rather than return a value
/// it cannot certify. `detail()` carries the unfinished piece, e.g. the
/// unfactored cofactor in decimal.
class ResourceError : public std::runtime_error {
  public:
    explicit ResourceError(const std::string& what, std::string detail = {})
        : std::runtime_error(what), detail_(std::move(detail)) {}

    const std::string& detail() const noexcept { return detail_; }

  private:
    std::string detail_;
};

}  // namespace gf2p

#endif  // GF2PERIOD_ERRORS_HPP
