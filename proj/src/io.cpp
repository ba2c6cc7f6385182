#include "cp1calc/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <tuple>

namespace cp1 {

namespace {

ValidationError schema_error(const std::string& what) { return ValidationError("schema: " + what); }

IntVector int_vector(const Json& j, const char* what) {
  if (!j.is_array()) throw schema_error(std::string(what) + " must be an array of integers");
  IntVector v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw schema_error(std::string(what) + " must contain integers");
    v.push_back(x.get<std::int64_t>());
  }
  return v;
}

ModTwoVector bit_vector(const Json& j, const char* what) {
  const IntVector v = int_vector(j, what);
  ModTwoVector out;
  for (auto x : v) {
    if (x != 0 && x != 1) throw schema_error(std::string(what) + " entries must be 0 or 1");
    out.push_back(static_cast<std::uint8_t>(x));
  }
  return out;
}

Json bits_to_json(const ModTwoVector& v) {
  Json a = Json::array();
  for (auto b : v) a.push_back(static_cast<int>(b));
  return a;
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

IntMatrix matrix_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw schema_error(std::string(what) + " must be an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(int_vector(r, what));
  const std::size_t n = rows.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ValidationError(std::string(what) + ": matrix is not square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

}  // namespace

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON document", line, col);
  }
}

FourManifold parse_manifold_expression(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(what, 1, pos + 1); };

  FourManifold result;
  bool first = true;
  for (;;) {
    skip_ws();
    if (!first) {
      if (pos == text.size()) break;
      if (text[pos] != '#') throw fail("expected '#' between summands");
      ++pos;
      skip_ws();
    }
    std::size_t count = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      count = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        count = count * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (count > 64) throw fail("summand multiplicity too large");
        ++pos;
      }
      skip_ws();
    }
    const std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw fail("expected a manifold name (S4, CP2, CP2bar, S2xS2)");
    const std::string name(text.substr(start, pos - start));
    FourManifold piece;
    try {
      piece = standard(name);
    } catch (const ValidationError&) {
      pos = start;
      throw fail("unknown manifold name '" + name + "'");
    }
    for (std::size_t i = 0; i < count; ++i) result = connected_sum(result, piece);
    first = false;
  }
  return result;
}

FourManifold manifold_from_json(const Json& j) {
  if (j.is_string()) return parse_manifold_expression(j.get<std::string>());
  if (!j.is_object()) throw schema_error("base must be a string or an object");
  if (!j.contains("matrix") || !j.contains("w2")) throw schema_error("explicit base needs 'matrix' and 'w2'");
  IntMatrix m = matrix_from_json(j.at("matrix"), "matrix");
  std::optional<IntVector> c1;
  if (j.contains("c1_tangent") && !j.at("c1_tangent").is_null()) c1 = int_vector(j.at("c1_tangent"), "c1_tangent");
  const std::string label = j.value("label", std::string("N"));
  const bool sc = j.value("simply_connected", true);
  return FourManifold(label, IntersectionForm(std::move(m)), bit_vector(j.at("w2"), "w2"), std::move(c1), sc);
}

Json to_json(const FourManifold& n) {
  Json j;
  j["label"] = n.label();
  j["matrix"] = matrix_to_json(n.form().matrix());
  j["w2"] = bits_to_json(n.w2());
  j["c1_tangent"] = n.c1_tangent() ? Json(*n.c1_tangent()) : Json(nullptr);
  j["signature"] = n.signature();
  j["simply_connected"] = n.simply_connected();
  return j;
}

RankTwoBundle bundle_from_json(const Json& j, const FourManifold& base) {
  if (!j.is_object()) throw schema_error("bundle must be an object");
  IntVector c1 = j.contains("c1") ? int_vector(j.at("c1"), "bundle.c1") : IntVector(base.rank(), 0);
  if (!j.contains("c2") || !j.at("c2").is_number_integer()) throw schema_error("bundle.c2 must be an integer");
  return RankTwoBundle(base, std::move(c1), j.at("c2").get<std::int64_t>());
}

Json to_json(const RankTwoBundle& e) {
  Json j;
  j["base"] = to_json(e.base());
  j["c1"] = e.c1();
  j["c2"] = e.c2();
  j["w2"] = bits_to_json(e.w2());
  return j;
}

Json to_json(const InvariantSystem& s) {
  Json j;
  j["schema"] = kSystemSchema;
  j["rank"] = s.rank();
  std::vector<std::string> labels = s.basis_labels;
  if (labels.empty())
    for (std::size_t i = 0; i < s.rank(); ++i) labels.push_back("e" + std::to_string(i + 1));
  j["basis"] = labels;
  Json mu = Json::array();
  s.mu.for_each_sorted([&](std::size_t a, std::size_t b, std::size_t c, std::int64_t v) {
    mu.push_back(Json::array({a, b, c, v}));
  });
  j["mu"] = std::move(mu);
  j["p1"] = s.p1;
  j["w2"] = bits_to_json(s.w2);
  j["b3"] = s.b3;
  j["euler"] = euler_characteristic(s);
  j["c1_class"] = s.c1_class ? Json(*s.c1_class) : Json(nullptr);
  j["certified"] = s.certified;
  return j;
}

InvariantSystem system_from_json(const Json& j) {
  if (!j.is_object()) throw schema_error("system must be an object");
  if (j.value("schema", std::string()) != kSystemSchema)
    throw schema_error(std::string("system document needs schema '") + kSystemSchema + "'");
  if (!j.contains("rank") || !j.at("rank").is_number_unsigned()) throw schema_error("rank must be a nonnegative integer");
  const std::size_t r = j.at("rank").get<std::size_t>();
  if (r > 64) throw schema_error("rank too large");
  InvariantSystem s;
  s.mu = CubicForm(r);
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::int64_t> seen;
  if (!j.contains("mu") || !j.at("mu").is_array()) throw schema_error("mu must be an array of [i,j,k,value]");
  for (const auto& e : j.at("mu")) {
    const IntVector t = int_vector(e, "mu entry");
    if (t.size() != 4) throw schema_error("mu entries are [i,j,k,value]");
    for (int q = 0; q < 3; ++q)
      if (t[q] < 0 || static_cast<std::size_t>(t[q]) >= r) throw schema_error("mu index out of range");
    std::array<std::size_t, 3> idx{static_cast<std::size_t>(t[0]), static_cast<std::size_t>(t[1]),
                                   static_cast<std::size_t>(t[2])};
    std::sort(idx.begin(), idx.end());
    const auto key = std::make_tuple(idx[0], idx[1], idx[2]);
    auto [it, inserted] = seen.emplace(key, t[3]);
    if (!inserted && it->second != t[3]) throw ValidationError("mu is not symmetric: conflicting permuted entries");
    s.mu.set(idx[0], idx[1], idx[2], t[3]);
  }
  s.p1 = int_vector(j.value("p1", Json::array()), "p1");
  s.w2 = bit_vector(j.value("w2", Json::array()), "w2");
  s.b3 = j.value("b3", std::int64_t{0});
  if (j.contains("c1_class") && !j.at("c1_class").is_null()) s.c1_class = int_vector(j.at("c1_class"), "c1_class");
  if (j.contains("basis")) {
    for (const auto& l : j.at("basis")) {
      if (!l.is_string()) throw schema_error("basis labels must be strings");
      s.basis_labels.push_back(l.get<std::string>());
    }
  }
  s.certified = j.value("certified", true);
  s.validate();
  if (j.contains("euler") && j.at("euler").get<std::int64_t>() != euler_characteristic(s))
    throw ValidationError("euler field inconsistent with rank and b3");
  return s;
}

Json to_json(const Fingerprint& f) {
  Json j;
  j["prime"] = f.prime;
  j["rank"] = f.rank;
  Json entries = Json::array();
  for (const auto& e : f.entries) entries.push_back(Json::array({e.cubic, e.p1, e.w2, e.count}));
  j["entries"] = std::move(entries);
  return j;
}

Fingerprint fingerprint_from_json(const Json& j) {
  Fingerprint f;
  f.prime = j.at("prime").get<int>();
  f.rank = j.at("rank").get<std::size_t>();
  for (const auto& e : j.at("entries"))
    f.entries.push_back({e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>(), e.at(2).get<std::int64_t>(),
                         e.at(3).get<std::uint64_t>()});
  return f;
}

Json to_json(const IsomorphismWitness& w) {
  Json j;
  j["matrix"] = matrix_to_json(w.matrix);
  j["preserves_c1"] = w.preserves_c1;
  return j;
}

Json to_json(const DistinctnessCertificate& c) {
  Json j;
  switch (c.kind) {
    case CertificateKind::Rank:
      j["kind"] = "rank";
      break;
    case CertificateKind::B3:
      j["kind"] = "b3";
      break;
    case CertificateKind::Fingerprint:
      j["kind"] = "fingerprint";
      break;
  }
  j["prime"] = c.prime ? Json(*c.prime) : Json(nullptr);
  if (c.kind == CertificateKind::Fingerprint) {
    j["left"] = to_json(*c.left_fingerprint);
    j["right"] = to_json(*c.right_fingerprint);
  } else {
    j["left"] = c.left_value;
    j["right"] = c.right_value;
  }
  return j;
}

IntVector parse_int_list(std::string_view text) {
  std::string s(text);
  // strip brackets and whitespace
  std::string cleaned;
  for (char ch : s)
    if (ch != '[' && ch != ']' && !std::isspace(static_cast<unsigned char>(ch))) cleaned.push_back(ch);
  IntVector out;
  if (cleaned.empty()) return out;
  std::size_t pos = 0;
  while (pos <= cleaned.size()) {
    const std::size_t comma = cleaned.find(',', pos);
    const std::string tok = cleaned.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw ParseError("bad integer '" + tok + "' in list", 1, pos + 1);
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<int> parse_prime_list(std::string_view text) {
  std::vector<int> out;
  for (auto v : parse_int_list(text)) {
    if (v != 2 && v != 3 && v != 5 && v != 7) throw ValidationError("primes must be drawn from {2, 3, 5, 7}");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw ValidationError("prime list is empty");
  return out;
}

}  // namespace cp1
