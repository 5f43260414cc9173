#ifndef SPL_CLASSIFY_HPP
#define SPL_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "spl/index_algebra.hpp"
#include "spl/isomorphism.hpp"
#include "spl/perspective.hpp"
#include "spl/veblen.hpp"

namespace spl {

using FamilyTag = SkewFamily;

enum class Branch { A, B };  // A: three or more free K5 graphs

std::vector<VeblenConfig> canonical_axes();

/// 24 specs per axis: axes in the given order, permutations ascending.
/// Throws std::invalid_argument for an empty axis list.
std::vector<PerspectiveSpec> enumerate_family(FamilyTag tag, std::span<const VeblenConfig> axes);

struct IsoClass {
  PerspectiveSpec representative;        // least member
  std::vector<PerspectiveSpec> members;  // sorted
  CanonicalKey key;
  int free_k5_count = 0;
  std::uint64_t aut_order = 0;
  Branch branch = Branch::B;
  std::optional<std::string> published_label;
};

/// Groups specs by the canonical key of the built structure. Classes are
/// sorted by representative; the result does not depend on input order or
/// `jobs`.
std::vector<IsoClass> partition_into_classes(std::span<const PerspectiveSpec> specs, int jobs = 1);

/// Conjugacy classes of S4 under the automorphisms of a canonical axis.
std::vector<ConjugacyClass> axis_conjugacy_classes(CanonicalKind kind);

enum class Verdict { Match, Mismatch };
std::string_view verdict_name(Verdict v);

struct Finding {
  std::string claim;      // stable identifier of the published claim
  std::string statement;  // the claim in words
  std::string computed;
  std::string expected;
  Verdict verdict = Verdict::Match;
  nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
};

struct FamilySummary {
  FamilyTag family;
  std::string axes;  // "canonical" or "census"
  int spec_count = 0;
  int class_count = 0;
  int branch_a = 0;
  int branch_b = 0;
};

struct ClassificationReport {
  std::vector<FamilySummary> summaries;
  std::vector<IsoClass> perm_classes;   // canonical axes
  std::vector<IsoClass> kappa_classes;  // canonical axes
  std::vector<Finding> findings;
  std::uint64_t oracle_pairs_checked = 0;

  bool all_match() const;
};

/// Raised when the canonical key and the witness search disagree. This is a
/// defect in the engine, never a finding.
class OracleInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Fills `published_label` on classes that contain a catalogue entry.
void attach_published_labels(std::vector<IsoClass>& classes, FamilyTag tag);

/// Runs the whole pipeline and compares every published claim with the
/// computed value.
ClassificationReport audit_claims(int jobs = 1);

std::string render_class_table(std::span<const IsoClass> classes);
std::string render_text(const ClassificationReport& report);
nlohmann::ordered_json to_json(const IsoClass& cls);
nlohmann::ordered_json to_json(const ClassificationReport& report);

}  // namespace spl

#endif  // SPL_CLASSIFY_HPP
