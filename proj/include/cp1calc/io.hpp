#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cp1calc/equiv.hpp"
#include "cp1calc/transitions.hpp"

namespace cp1 {

using Json = nlohmann::json;

inline constexpr const char* kJobSchema = "cp1calc/job/v1";
inline constexpr const char* kSystemSchema = "cp1calc/system/v1";
inline constexpr const char* kReportSchema = "cp1calc/report/v1";

/// Malformed text. line/column are 1-based; column only for one-line inputs.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : ValidationError(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Json parse_document(std::string_view text);

/// "CP2 # 3 CP2bar", "S2xS2", "S4 # CP2", ...
FourManifold parse_manifold_expression(std::string_view text);

/// A string is read as an expression; an object needs "matrix" and "w2",
/// with optional "label", "c1_tangent", "simply_connected".
FourManifold manifold_from_json(const Json& j);
Json to_json(const FourManifold& n);

RankTwoBundle bundle_from_json(const Json& j, const FourManifold& base);
Json to_json(const RankTwoBundle& e);

Json to_json(const InvariantSystem& s);
InvariantSystem system_from_json(const Json& j);

Json to_json(const Fingerprint& f);
Fingerprint fingerprint_from_json(const Json& j);
Json to_json(const IsomorphismWitness& w);
Json to_json(const DistinctnessCertificate& c);

IntVector parse_int_list(std::string_view text);
std::vector<int> parse_prime_list(std::string_view text);

}  // namespace cp1
