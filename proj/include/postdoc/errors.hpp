#pragma once

#include <stdexcept>
#include <string>

namespace postdoc {

// Exit codes: 0 success, 2 validation, 3 I/O, 4 remote failure.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct remote_error : std::runtime_error {
  explicit remote_error(const std::string& msg) : std::runtime_error(msg) {}
};

inline int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const validation_error*>(&e)) return 2;
  if (dynamic_cast<const io_error*>(&e)) return 3;
  if (dynamic_cast<const remote_error*>(&e)) return 4;
  return 1;
}

}  // namespace postdoc
