#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace lawvere {

// Diagnostic carried by every semantic failure: a stable machine-readable
// code plus named witnesses (object names, indices, offending values).
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message,
        std::map<std::string, std::string> witness = {})
      : std::runtime_error(message),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string& code() const { return code_; }
  const std::map<std::string, std::string>& witness() const { return witness_; }

 private:
  std::string code_;
  std::map<std::string, std::string> witness_;
};

}  // namespace lawvere
