#pragma once

#include <stdexcept>
#include <string>

namespace splitkit {

enum class errc {
  exchange_violation,
  unequal_cardinality,
  out_of_range,
  h1_violation,
  precondition_h2,
  precondition,
  not_connected,
  unknown_name,
  too_large,
  give_up,
  syntax,
  semantic,
  route_disagreement,
};

constexpr const char* errc_name(errc c) {
  switch (c) {
    case errc::exchange_violation: return "EXCHANGE_VIOLATION";
    case errc::unequal_cardinality: return "UNEQUAL_CARDINALITY";
    case errc::out_of_range: return "OUT_OF_RANGE";
    case errc::h1_violation: return "H1_VIOLATION";
    case errc::precondition_h2: return "PRECONDITION_H2";
    case errc::precondition: return "PRECONDITION";
    case errc::not_connected: return "NOT_CONNECTED";
    case errc::unknown_name: return "UNKNOWN_NAME";
    case errc::too_large: return "TOO_LARGE";
    case errc::give_up: return "GIVE_UP";
    case errc::syntax: return "SYNTAX";
    case errc::semantic: return "SEMANTIC";
    case errc::route_disagreement: return "ROUTE_DISAGREEMENT";
  }
  return "UNKNOWN";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  [[nodiscard]] errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace splitkit
