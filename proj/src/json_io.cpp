#include "ccsn/json_io.hpp"

#include "ccsn/errors.hpp"

namespace ccsn {

nlohmann::json traceToJson(const Trace& t) {
  nlohmann::json symbols = nlohmann::json::array();
  for (const Token& b : t.symbols) symbols.push_back(b.value);
  const char* end = t.end == Terminator::Eps     ? "eps"
                    : t.end == Terminator::Delta ? "delta"
                                                 : "cut";
  return {{"symbols", std::move(symbols)}, {"end", end}};
}

Trace traceFromJson(const nlohmann::json& j) {
  Trace t;
  for (const auto& s : j.at("symbols")) t.symbols.push_back(Token{s.get<std::string>()});
  const std::string end = j.at("end").get<std::string>();
  if (end == "eps")
    t.end = Terminator::Eps;
  else if (end == "delta")
    t.end = Terminator::Delta;
  else if (end == "cut")
    t.end = Terminator::Cut;
  else
    throw LangError("bad-json", "unknown trace terminator: " + end);
  return t;
}

nlohmann::json traceSetToJson(const TraceSet& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const Trace& t : p) out.push_back(traceToJson(t));
  return out;
}

TraceSet traceSetFromJson(const nlohmann::json& j) {
  TraceSet out;
  for (const auto& t : j) out.insert(traceFromJson(t));
  return out;
}

}  // namespace ccsn
