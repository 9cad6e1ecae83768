#pragma once

#include <stdexcept>
#include <string>

namespace tenfold {

// Exit-code contract of the command-line tool: 2 malformed input,
// 3 non-semisimple algebra, 4 precision cap hit on the certified path.
enum class ErrorKind { invalid_input = 2, not_semisimple = 3, precision_cap = 4, internal = 5 };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
  ErrorKind kind_;
};

inline Error invalid_input(const std::string& what) { return {ErrorKind::invalid_input, what}; }
inline Error not_semisimple(const std::string& what) { return {ErrorKind::not_semisimple, what}; }
inline Error precision_cap(const std::string& what) { return {ErrorKind::precision_cap, what}; }
inline Error internal_error(const std::string& what) { return {ErrorKind::internal, what}; }

} // namespace tenfold
