#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trirep {

enum class Errc {
  contract,    // precondition violated by the caller
  size_guard,  // desk-scale guard exceeded
  membership,  // vector outside the expected span
  format,      // malformed input file
  io,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::contract: return "contract";
    case Errc::size_guard: return "size";
    case Errc::membership: return "membership";
    case Errc::format: return "format";
    case Errc::io: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail) : std::runtime_error(detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

inline void require(bool cond, Errc code, const std::string& detail) {
  if (!cond) fail(code, detail);
}

}  // namespace trirep
