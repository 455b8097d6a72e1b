#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace hiadmm {

inline constexpr const char* kVersion = "0.1.0";

// Thrown on malformed input files (missing sections, bad tokens).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when parsed data violates a structural invariant
// (dangling bus reference, disconnected network, empty partition).
class IntegrityError : public std::runtime_error {
 public:
  explicit IntegrityError(const std::string& msg) : std::runtime_error(msg) {}
};

class ArgumentError : public std::invalid_argument {
 public:
  explicit ArgumentError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numerical breakdown inside a solver (singular KKT system after all
// regularization attempts, non-finite iterates).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Verbosity comes from HIADMM_LOG (error|warn|info|debug); default warn.
inline LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("HIADMM_LOG");
    if (env == nullptr) return LogLevel::kWarn;
    if (std::strcmp(env, "error") == 0) return LogLevel::kError;
    if (std::strcmp(env, "info") == 0) return LogLevel::kInfo;
    if (std::strcmp(env, "debug") == 0) return LogLevel::kDebug;
    return LogLevel::kWarn;
  }();
  return level;
}

template <typename... Args>
inline void log(LogLevel level, const char* fmt, Args... args) {
  if (level > log_level()) return;
  const char* tag = "warn";
  switch (level) {
    case LogLevel::kError: tag = "error"; break;
    case LogLevel::kWarn: tag = "warn"; break;
    case LogLevel::kInfo: tag = "info"; break;
    case LogLevel::kDebug: tag = "debug"; break;
  }
  std::fprintf(stderr, "[hiadmm:%s] ", tag);
  if constexpr (sizeof...(Args) == 0) {
    std::fputs(fmt, stderr);
  } else {
    std::fprintf(stderr, fmt, args...);
  }
  std::fputc('\n', stderr);
}

template <typename... Args>
inline void log_warn(const char* fmt, Args... args) {
  log(LogLevel::kWarn, fmt, args...);
}

template <typename... Args>
inline void log_info(const char* fmt, Args... args) {
  log(LogLevel::kInfo, fmt, args...);
}

template <typename... Args>
inline void log_debug(const char* fmt, Args... args) {
  log(LogLevel::kDebug, fmt, args...);
}

}  // namespace hiadmm
