#include <iomanip>
#include <sstream>

#include "cp1calc/job.hpp"

namespace cp1 {

namespace {

std::string labelled(const Json& basis, const Json& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << "  ";
    os << basis.at(i).get<std::string>() << ":" << values.at(i).dump();
  }
  return values.empty() ? "(empty)" : os.str();
}

void render_system(std::ostream& os, const Json& s, const std::string& indent) {
  const Json& basis = s.at("basis");
  os << indent << "basis     ";
  for (const auto& b : basis) os << " " << b.get<std::string>();
  if (basis.empty()) os << " (empty)";
  os << "\n";
  os << indent << "rank " << s.at("rank").dump() << "   b3 " << s.at("b3").dump() << "   euler "
     << s.at("euler").dump() << "   certified " << (s.at("certified").get<bool>() ? "yes" : "no") << "\n";
  os << indent << "mu (sorted index triples)\n";
  for (const auto& e : s.at("mu")) {
    std::ostringstream key;
    key << "(" << basis.at(e.at(0).get<std::size_t>()).get<std::string>() << ","
        << basis.at(e.at(1).get<std::size_t>()).get<std::string>() << ","
        << basis.at(e.at(2).get<std::size_t>()).get<std::string>() << ")";
    os << indent << "  " << std::left << std::setw(16) << key.str() << std::right << std::setw(6)
       << e.at(3).dump() << "\n";
  }
  os << indent << "p1        " << labelled(basis, s.at("p1")) << "\n";
  os << indent << "w2        " << labelled(basis, s.at("w2")) << "\n";
  os << indent << "c1        " << (s.at("c1_class").is_null() ? std::string("(absent)") : labelled(basis, s.at("c1_class")))
     << "\n";
}

void render_bundle(std::ostream& os, const std::string& name, const Json& e) {
  os << name << " over " << e.at("base").at("label").get<std::string>() << ": c1 = " << e.at("c1").dump()
     << ", c2 = " << e.at("c2").dump() << "\n";
}

void render_warnings(std::ostream& os, const Json& doc) {
  if (!doc.contains("warnings")) return;
  for (const auto& w : doc.at("warnings")) os << "warning: " << w.get<std::string>() << "\n";
}

}  // namespace

std::string Report::render(OutputFormat format) const {
  if (format == OutputFormat::Json) return document.dump(2) + "\n";

  std::ostringstream os;
  const std::string cmd = document.at("command").get<std::string>();
  if (cmd == "invariants") {
    const Json& in = document.at("input");
    os << "P(E) over " << in.at("base").at("label").get<std::string>() << ", c1(E) = " << in.at("bundle").at("c1").dump()
       << ", c2(E) = " << in.at("bundle").at("c2").dump() << "\n";
    render_system(os, document.at("system"), "  ");
  } else if (cmd == "transition") {
    render_bundle(os, "e1", document.at("e1"));
    render_bundle(os, "e2", document.at("e2"));
    os << "z1 = P(E1)" << (document.at("swapped").get<bool>() ? "  [swapped]" : "") << "\n";
    render_system(os, document.at("z1"), "  ");
    os << "z2 = P(E2) # CP3bar\n";
    render_system(os, document.at("z2"), "  ");
  } else if (cmd == "compare") {
    os << "left:  " << document.at("left").at("description").get<std::string>() << "\n";
    render_system(os, document.at("left").at("system"), "  ");
    os << "right: " << document.at("right").at("description").get<std::string>() << "\n";
    render_system(os, document.at("right").at("system"), "  ");
    os << "verdict: " << document.at("verdict").get<std::string>() << "\n";
    if (!document.at("witness").is_null()) {
      os << "witness (columns = images of left basis):\n";
      for (const auto& row : document.at("witness").at("matrix")) os << "  " << row.dump() << "\n";
    }
    if (!document.at("certificate").is_null()) {
      const Json& c = document.at("certificate");
      os << "certificate: " << c.at("kind").get<std::string>();
      if (!c.at("prime").is_null()) os << " at p = " << c.at("prime").dump();
      os << "\n";
      if (c.at("kind") == "fingerprint") {
        os << "  left  [cubic,p1,w2,count] " << c.at("left").at("entries").dump() << "\n";
        os << "  right [cubic,p1,w2,count] " << c.at("right").at("entries").dump() << "\n";
      } else {
        os << "  left " << c.at("left").dump() << " vs right " << c.at("right").dump() << "\n";
      }
    }
    if (document.contains("message")) os << document.at("message").get<std::string>() << "\n";
  } else if (cmd == "verify-paper") {
    for (const auto& c : document.at("checks"))
      os << (c.at("passed").get<bool>() ? "[PASS] " : "[FAIL] ") << c.at("name").get<std::string>() << "  "
         << c.at("detail").get<std::string>() << "\n";
    os << (document.at("passed").get<bool>() ? "all checks passed" : "some checks FAILED") << "\n";
  }
  render_warnings(os, document);
  return os.str();
}

}  // namespace cp1
