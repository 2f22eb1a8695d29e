#pragma once

#include <stdexcept>
#include <string>

namespace loopbrauer {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct StrandMismatch : Error {
  explicit StrandMismatch(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

struct EvalAtZero : Error {
  explicit EvalAtZero(const std::string& msg) : Error(msg) {}
};

struct RankMismatch : Error {
  explicit RankMismatch(const std::string& msg) : Error(msg) {}
};

struct BadBottomRow : Error {
  explicit BadBottomRow(const std::string& msg) : Error(msg) {}
};

struct InvalidT : Error {
  explicit InvalidT(const std::string& msg) : Error(msg) {}
};

struct InvalidShapes : Error {
  explicit InvalidShapes(const std::string& msg) : Error(msg) {}
};

struct CacheVersionMismatch : Error {
  explicit CacheVersionMismatch(const std::string& msg) : Error(msg) {}
};

struct CorruptCache : Error {
  explicit CorruptCache(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace loopbrauer
