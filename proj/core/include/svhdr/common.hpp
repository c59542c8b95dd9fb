#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace svhdr {

// Violated precondition or shape contract on a library call.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable or malformed external data (files, manifests).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite values where the pipeline requires finite ones.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad CLI usage or configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void format_into(std::ostringstream&) {}
template <typename A, typename... Rest>
void format_into(std::ostringstream& os, const A& a, const Rest&... rest) {
  os << a;
  format_into(os, rest...);
}
}  // namespace detail

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  detail::format_into(os, args...);
  return os.str();
}

}  // namespace svhdr

#define SVHDR_CHECK(cond, ...)                                \
  do {                                                        \
    if (!(cond)) throw ::svhdr::ContractError(::svhdr::cat(__VA_ARGS__)); \
  } while (0)
