#ifndef KGT_ERROR_HPP
#define KGT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kgt {

// All toolkit errors carry a stable machine-readable kind plus a message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace kgt

#endif
