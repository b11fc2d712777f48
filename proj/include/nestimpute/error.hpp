#pragma once

#include <stdexcept>
#include <string>

namespace nestimpute {

// All library failures derive from Error so front-ends can report a typed
// message and exit nonzero.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct SchemaError : Error {
  explicit SchemaError(const std::string& w) : Error("schema", w) {}
};
struct DataError : Error {
  explicit DataError(const std::string& w) : Error("data", w) {}
};
struct RuleError : Error {
  explicit RuleError(const std::string& w) : Error("rules", w) {}
};
struct ModelError : Error {
  explicit ModelError(const std::string& w) : Error("model", w) {}
};
struct SamplerError : Error {
  explicit SamplerError(const std::string& w) : Error("sampler", w) {}
};
struct InferenceError : Error {
  explicit InferenceError(const std::string& w) : Error("inference", w) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error("config", w) {}
};

}  // namespace nestimpute
