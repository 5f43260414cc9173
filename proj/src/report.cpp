#include <iomanip>
#include <sstream>

#include "spl/classify.hpp"

namespace spl {

namespace {

std::string branch_name(Branch b) { return b == Branch::A ? "A" : "B"; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string render_class_table(std::span<const IsoClass> classes) {
  std::ostringstream out;
  out << pad("#", 4) << pad("representative", 30) << pad("size", 6) << pad("K5", 4)
      << pad("aut", 6) << pad("branch", 8) << "listed as\n";
  int n = 0;
  for (const IsoClass& c : classes) {
    out << pad(std::to_string(++n), 4) << pad(c.representative.to_string(), 30)
        << pad(std::to_string(c.members.size()), 6) << pad(std::to_string(c.free_k5_count), 4)
        << pad(std::to_string(c.aut_order), 6) << pad(branch_name(c.branch), 8)
        << c.published_label.value_or("-") << '\n';
  }
  return out.str();
}

std::string render_text(const ClassificationReport& report) {
  std::ostringstream out;
  out << "families\n";
  for (const FamilySummary& s : report.summaries) {
    out << "  " << pad(std::string(family_name(s.family)), 7) << pad(s.axes, 11)
        << s.spec_count << " specs, " << s.class_count << " classes (branch A " << s.branch_a
        << ", branch B " << s.branch_b << ")\n";
  }
  out << "\nperm classes over canonical axes\n" << render_class_table(report.perm_classes);
  out << "\nkappa classes over canonical axes\n" << render_class_table(report.kappa_classes);
  out << "\nclaims\n";
  for (const Finding& f : report.findings) {
    out << "  " << pad(std::string(verdict_name(f.verdict)), 9) << f.claim << '\n'
        << "           computed: " << f.computed << '\n'
        << "           expected: " << f.expected << '\n';
  }
  std::size_t mismatches = 0;
  for (const Finding& f : report.findings) mismatches += f.verdict == Verdict::Mismatch;
  out << "\n" << report.findings.size() << " claims, " << mismatches << " mismatches; "
      << report.oracle_pairs_checked << " pairs cross-checked between key and witness search\n";
  return out.str();
}

nlohmann::ordered_json to_json(const IsoClass& cls) {
  nlohmann::ordered_json members = nlohmann::ordered_json::array();
  for (const PerspectiveSpec& m : cls.members) members.push_back(m.to_string());
  nlohmann::ordered_json out{{"representative", cls.representative.to_string()},
                             {"key", cls.key.to_string()},
                             {"size", cls.members.size()},
                             {"free_k5_count", cls.free_k5_count},
                             {"automorphism_order", cls.aut_order},
                             {"branch", branch_name(cls.branch)},
                             {"listed_as", nullptr},
                             {"members", members}};
  if (cls.published_label) out["listed_as"] = *cls.published_label;
  return out;
}

nlohmann::ordered_json to_json(const ClassificationReport& report) {
  using Json = nlohmann::ordered_json;
  Json summaries = Json::array();
  for (const FamilySummary& s : report.summaries) {
    summaries.push_back(Json{{"family", std::string(family_name(s.family))},
                             {"axes", s.axes},
                             {"spec_count", s.spec_count},
                             {"class_count", s.class_count},
                             {"branch_a", s.branch_a},
                             {"branch_b", s.branch_b}});
  }
  Json perm = Json::array();
  for (const IsoClass& c : report.perm_classes) perm.push_back(to_json(c));
  Json kappa = Json::array();
  for (const IsoClass& c : report.kappa_classes) kappa.push_back(to_json(c));
  Json findings = Json::array();
  for (const Finding& f : report.findings) {
    findings.push_back(Json{{"claim", f.claim},
                            {"statement", f.statement},
                            {"computed", f.computed},
                            {"expected", f.expected},
                            {"verdict", std::string(verdict_name(f.verdict))},
                            {"witnesses", f.witnesses}});
  }
  return Json{{"summaries", summaries},
              {"classes", Json{{"perm", perm}, {"kappa", kappa}}},
              {"findings", findings},
              {"checks", Json{{"oracle_pairs_checked", report.oracle_pairs_checked}}},
              {"all_match", report.all_match()}};
}

}  // namespace spl
