#ifndef MSEQ_ERRORS_HH
#define MSEQ_ERRORS_HH

#include <stdexcept>
#include <string>

namespace mseq {

// Exit-code taxonomy shared by the engine and the CLI.
enum class ErrorCode : int {
  parse = 2,         // malformed document / polynomial grammar violation
  precondition = 3,  // operation precondition violated
  resource = 4,      // configured cap exceeded
  unstabilized = 5,  // window cap reached before the Hilbert function settled
};

class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorCode code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

struct ParseError : EngineError {
  explicit ParseError(const std::string& msg) : EngineError(ErrorCode::parse, msg) {}
};
struct PreconditionError : EngineError {
  explicit PreconditionError(const std::string& msg) : EngineError(ErrorCode::precondition, msg) {}
};
struct ResourceError : EngineError {
  explicit ResourceError(const std::string& msg) : EngineError(ErrorCode::resource, msg) {}
};
struct UnstabilizedError : EngineError {
  explicit UnstabilizedError(const std::string& msg) : EngineError(ErrorCode::unstabilized, msg) {}
};

}  // namespace mseq

#endif
