#include "spl/classify.hpp"

#include <algorithm>
#include <map>

#include "spl/parallel.hpp"
#include "spl/published.hpp"

namespace spl {

std::vector<VeblenConfig> canonical_axes() {
  std::vector<VeblenConfig> out;
  for (CanonicalKind k : kAllKinds) out.push_back(canonical(k));
  return out;
}

std::vector<PerspectiveSpec> enumerate_family(FamilyTag tag, std::span<const VeblenConfig> axes) {
  if (axes.empty()) throw std::invalid_argument("enumerate_family needs at least one axis");
  std::vector<PerspectiveSpec> out;
  out.reserve(axes.size() * 24);
  for (const VeblenConfig& axis : axes) {
    for (const Perm4& p : Perm4::all()) out.push_back(PerspectiveSpec{{tag, p}, axis});
  }
  return out;
}

std::vector<IsoClass> partition_into_classes(std::span<const PerspectiveSpec> specs, int jobs) {
  std::vector<CanonicalKey> keys(specs.size());
  parallel_for(specs.size(), jobs,
               [&](std::size_t k) { keys[k] = canonical_key(build(specs[k]).psts); });

  std::map<CanonicalKey, std::vector<PerspectiveSpec>> groups;
  for (std::size_t k = 0; k < specs.size(); ++k) groups[keys[k]].push_back(specs[k]);

  std::vector<IsoClass> classes;
  classes.reserve(groups.size());
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const PerspectiveSpec rep = members.front();
    classes.push_back(IsoClass{rep, std::move(members), key, 0, 0, Branch::B, std::nullopt});
  }
  parallel_for(classes.size(), jobs, [&](std::size_t k) {
    const Psts s = build(classes[k].representative).psts;
    classes[k].free_k5_count = static_cast<int>(free_complete_subgraphs(s, 5).size());
    classes[k].aut_order = automorphism_group(s).order;
    classes[k].branch = classes[k].free_k5_count >= 3 ? Branch::A : Branch::B;
  });
  std::sort(classes.begin(), classes.end(), [](const IsoClass& x, const IsoClass& y) {
    return x.representative < y.representative;
  });
  return classes;
}

std::vector<ConjugacyClass> axis_conjugacy_classes(CanonicalKind kind) {
  return conjugacy_classes_under(aut_perms(canonical(kind)));
}

void attach_published_labels(std::vector<IsoClass>& classes, FamilyTag tag) {
  const auto& catalogue =
      tag == SkewFamily::Perm ? published::perm_catalogue() : published::kappa_catalogue();
  for (const auto& entry : catalogue) {
    const CanonicalKey key = canonical_key(build(entry.match).psts);
    for (IsoClass& cls : classes) {
      if (cls.key != key) continue;
      cls.published_label =
          cls.published_label ? *cls.published_label + "," + entry.label : entry.label;
    }
  }
}

std::string_view verdict_name(Verdict v) { return v == Verdict::Match ? "MATCH" : "MISMATCH"; }

bool ClassificationReport::all_match() const {
  return std::all_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.verdict == Verdict::Match; });
}

}  // namespace spl
