#include "spl/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spl/classify.hpp"
#include "spl/isomorphism.hpp"
#include "spl/veblen.hpp"

namespace spl::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseError::Kind::Io, "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

VeblenConfig parse_axis(std::string_view text) {
  if (auto kind = parse_kind(text)) return canonical(*kind);
  if (text.rfind("census:", 0) == 0) {
    const std::string digits(text.substr(7));
    const auto& census = enumerate_labelings();
    std::size_t used = 0;
    int n = -1;
    try {
      n = std::stoi(digits, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != digits.size() || n < 0 || static_cast<std::size_t>(n) >= census.size()) {
      throw ParseError(ParseError::Kind::UnknownAxis,
                       "unknown axis '" + std::string(text) + "': census index must be 0.." +
                           std::to_string(census.size() - 1));
    }
    return census[static_cast<std::size_t>(n)];
  }
  const std::string path(text);
  if (!std::filesystem::exists(path)) {
    throw ParseError(ParseError::Kind::UnknownAxis,
                     "unknown axis '" + path +
                         "': expected G2, G2*, B2, V4, V5, V6, census:N or a PSTS file");
  }
  const Psts s = parse_psts_text(read_file(path));
  try {
    return VeblenConfig::from_psts(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseError::Kind::Structure, path + ": " + e.what());
  }
}

bool looks_like_spec(std::string_view text) {
  return text.rfind("perm:", 0) == 0 || text.rfind("kappa:", 0) == 0;
}

struct Operand {
  Psts psts;
  std::string label;
};

Operand load_operand(const std::string& text) {
  if (looks_like_spec(text)) {
    const PerspectiveSpec spec = parse_spec(text);
    return {build(spec).psts, spec.to_string()};
  }
  return {parse_psts_text(read_file(text)), text};
}

/// Cycle notation over point names, fixed points omitted.
std::string cycles_by_name(const PointMap& g, const Psts& s) {
  std::string out;
  std::vector<bool> seen(g.image.size(), false);
  for (std::size_t x = 0; x < g.image.size(); ++x) {
    if (seen[x] || g.image[x] == static_cast<PointId>(x)) continue;
    out += "(";
    for (auto y = static_cast<PointId>(x); !seen[static_cast<std::size_t>(y)];
         y = g.image[static_cast<std::size_t>(y)]) {
      seen[static_cast<std::size_t>(y)] = true;
      if (out.back() != '(') out += ",";
      out += s.name(y);
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!(file << text)) throw ParseError(ParseError::Kind::Io, "cannot write '" + path + "'");
}

std::string census_text(bool structured) {
  const auto& census = enumerate_labelings();
  if (structured) {
    Json rows = Json::array();
    for (std::size_t n = 0; n < census.size(); ++n) {
      const auto w = classify_labeling(census[n]);
      Json row{{"index", n}, {"lines", census[n].to_string()}, {"kind", nullptr}};
      if (w) {
        row["kind"] = std::string(kind_name(w->kind));
        row["side"] = std::string(side_name(w->side));
        row["alpha"] = w->alpha.to_string();
      }
      rows.push_back(row);
    }
    return Json{{"labelings", census.size()}, {"census", rows}}.dump(2) + "\n";
  }
  std::ostringstream out;
  out << census.size() << " labelings\n";
  std::map<std::string, std::vector<std::size_t>> by_kind;
  for (std::size_t n = 0; n < census.size(); ++n) {
    const auto w = classify_labeling(census[n]);
    const std::string kind = w ? std::string(kind_name(w->kind)) : "?";
    by_kind[kind].push_back(n);
    out << "  census:" << n << (n < 10 ? "  " : " ") << census[n].to_string() << "  " << kind;
    if (w) out << " via " << side_name(w->side) << " " << w->alpha.to_string();
    out << '\n';
  }
  out << "orbits under the 48 maps\n";
  std::set<VeblenConfig> seen;
  for (const VeblenConfig& v : census) {
    if (seen.count(v)) continue;
    std::set<VeblenConfig> orbit;
    for (const Perm4& a : Perm4::all()) {
      orbit.insert(v.mapped(extend(a)));
      orbit.insert(v.mapped(correlation_map() * extend(a)));
    }
    seen.insert(orbit.begin(), orbit.end());
    std::vector<std::string> kinds;
    for (const VeblenConfig& w : orbit) {
      if (auto k = canonical_kind_of(w)) kinds.emplace_back(kind_name(*k));
    }
    out << "  size " << orbit.size() << ":";
    for (const auto& k : kinds) out << " " << k;
    out << '\n';
  }
  return out.str();
}

}  // namespace

PerspectiveSpec parse_spec(std::string_view text) {
  const auto colon = text.find(':');
  const auto at = text.find('@');
  if (colon == std::string_view::npos || at == std::string_view::npos || at < colon) {
    throw ParseError(ParseError::Kind::Syntax,
                     "malformed spec '" + std::string(text) +
                         "': expected perm:<cycles>@<axis> or kappa:<cycles>@<axis>");
  }
  const std::string_view family = text.substr(0, colon);
  SkewFamily tag;
  if (family == "perm") {
    tag = SkewFamily::Perm;
  } else if (family == "kappa") {
    tag = SkewFamily::Kappa;
  } else {
    throw ParseError(ParseError::Kind::Syntax,
                     "malformed spec '" + std::string(text) + "': family must be perm or kappa");
  }
  const Perm4 perm = parse_perm(text.substr(colon + 1, at - colon - 1));
  return PerspectiveSpec{{tag, perm}, parse_axis(text.substr(at + 1))};
}

int exit_code_for(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::Syntax: return exit_code::kSyntax;
    case ParseError::Kind::NotBijection: return exit_code::kNotBijection;
    case ParseError::Kind::UnknownAxis: return exit_code::kUnknownAxis;
    case ParseError::Kind::Structure: return exit_code::kBadStructure;
    case ParseError::Kind::Io: return exit_code::kIo;
  }
  return exit_code::kUsage;
}

std::string emit_levi_dot(const Psts& s) {
  std::ostringstream out;
  out << "graph levi {\n";
  for (PointId x = 0; x < s.point_count(); ++x) {
    out << "  P" << x << " [label=\"" << s.name(x) << "\", shape=circle];\n";
  }
  for (int l = 0; l < s.line_count(); ++l) {
    out << "  L" << l << " [label=\"\", shape=box];\n";
  }
  for (int l = 0; l < s.line_count(); ++l) {
    for (PointId x : s.lines()[static_cast<std::size_t>(l)]) {
      out << "  L" << l << " -- P" << x << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string emit_levi_dot(const LabeledPsts& s) { return emit_levi_dot(s.psts); }

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew perspectives of K4 graphs: construction, isomorphism and audit"};
  app.require_subcommand(1);
  app.fallthrough();
  int jobs = 1;
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string spec_text;
  bool dot = false;
  auto* build_cmd = app.add_subcommand("build", "write the PSTS of a spec");
  build_cmd->add_option("spec", spec_text, "perm:<cycles>@<axis> or kappa:<cycles>@<axis>")
      ->required();
  build_cmd->add_flag("--dot", dot, "write the Levi graph instead");

  std::string format = "text";
  auto* census_cmd = app.add_subcommand("census", "labelings of the Veblen axis");
  census_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));

  std::string left, right;
  auto* iso_cmd = app.add_subcommand("iso", "test two structures for isomorphism");
  iso_cmd->add_option("first", left, "spec or PSTS file")->required();
  iso_cmd->add_option("second", right, "spec or PSTS file")->required();

  std::string target;
  auto* aut_cmd = app.add_subcommand("aut", "automorphism group of a structure");
  aut_cmd->add_option("structure", target, "spec or PSTS file")->required();

  std::string family, axes = "canonical", out_path;
  auto* classify_cmd = app.add_subcommand("classify", "isomorphism classes of one family");
  classify_cmd->add_option("family", family)->required()->check(CLI::IsMember({"perm", "kappa"}));
  classify_cmd->add_option("--axes", axes)->check(CLI::IsMember({"canonical", "census"}));
  classify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));
  classify_cmd->add_option("--out", out_path);

  auto* audit_cmd = app.add_subcommand("audit", "compare every published claim with computation");
  audit_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "structured"}));
  audit_cmd->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (*build_cmd) {
      const LabeledPsts s = build(parse_spec(spec_text));
      out << (dot ? emit_levi_dot(s) : to_psts_text(s.psts));
      return exit_code::kOk;
    }
    if (*census_cmd) {
      out << census_text(format == "structured");
      return exit_code::kOk;
    }
    if (*iso_cmd) {
      const Operand x = load_operand(left);
      const Operand y = load_operand(right);
      if (auto f = find_isomorphism(x.psts, y.psts)) {
        out << "isomorphic: " << x.label << " -> " << y.label << '\n'
            << to_text(*f, x.psts, y.psts);
        return exit_code::kOk;
      }
      out << "not isomorphic: " << x.label << ", " << y.label << '\n';
      return exit_code::kNotIsomorphic;
    }
    if (*aut_cmd) {
      const Operand x = load_operand(target);
      const AutomorphismGroup g = automorphism_group(x.psts);
      out << "order " << g.order << '\n';
      for (const PointMap& gen : g.generators) out << "  " << cycles_by_name(gen, x.psts) << '\n';
      return exit_code::kOk;
    }
    if (*classify_cmd) {
      const SkewFamily tag = family == "perm" ? SkewFamily::Perm : SkewFamily::Kappa;
      const auto axis_list = axes == "canonical" ? canonical_axes() : enumerate_labelings();
      auto classes = partition_into_classes(enumerate_family(tag, axis_list), jobs);
      attach_published_labels(classes, tag);
      std::string text;
      if (format == "structured") {
        Json rows = Json::array();
        for (const IsoClass& c : classes) rows.push_back(to_json(c));
        text = Json{{"family", family}, {"axes", axes}, {"class_count", classes.size()},
                    {"classes", rows}}
                   .dump(2) +
               "\n";
      } else {
        text = family + " family over " + axes + " axes: " + std::to_string(classes.size()) +
               " classes\n" + render_class_table(classes);
      }
      write_output(text, out_path, out);
      return exit_code::kOk;
    }
    if (*audit_cmd) {
      const ClassificationReport report = audit_claims(jobs);
      write_output(format == "structured" ? to_json(report).dump(2) + "\n" : render_text(report),
                   out_path, out);
      return report.all_match() ? exit_code::kOk : exit_code::kMismatch;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const InvalidPsts& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kBadStructure;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kBadStructure;
  } catch (const OracleInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::kOracleInconsistency;
  }
  return exit_code::kUsage;
}

}  // namespace spl::cli
