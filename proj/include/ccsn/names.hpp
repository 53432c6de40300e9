#pragma once

#include <compare>
#include <string>

namespace ccsn {

// Synchronization channel name (the c's). Channels are declared per program
// and are the only names restriction and joint inputs may mention.
struct ChannelName {
  std::string value;
  auto operator<=>(const ChannelName&) const = default;
};

// Internal action name (the b's) doubling as a trace symbol. The silent
// action is the distinguished token "tau".
struct Token {
  std::string value;
  auto operator<=>(const Token&) const = default;
};

inline Token tauToken() { return Token{"tau"}; }

}  // namespace ccsn
