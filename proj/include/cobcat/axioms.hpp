#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cobcat/cobordism.hpp"
#include "cobcat/traced.hpp"

namespace cobcat {

/// Syntax trees for monoidal-feedback expressions over named boxes. Each
/// law is stated once as a pair of trees and then interpreted twice: as a
/// cobordism assembled from plumbing gadgets (boxes left opaque) and as a
/// value of a word-indexed instance (boxes filled with samples).
struct MorExpr {
  enum class Kind { box, identity, symmetry, compose, tensor, trace };
  Kind kind;
  std::string box_name;                       // box
  Word w1, w2;                                // identity / symmetry data
  std::shared_ptr<const MorExpr> lhs, rhs;    // compose / tensor / trace
  int k = 0;                                  // trace prefix length
  Word dom, cod;                              // derived boundary words
};

using ExprPtr = std::shared_ptr<const MorExpr>;

ExprPtr ebox(std::string name, Word dom, Word cod);
ExprPtr eid(Word w);
ExprPtr esym(Word x, Word y);
ExprPtr ecomp(ExprPtr a, ExprPtr b);  // diagrammatic: a then b
ExprPtr etens(ExprPtr a, ExprPtr b);
ExprPtr etrace(int k, ExprPtr e);

/// A cobordism presentation of an expression with its boxes left opaque:
/// body maps the juxtaposed box boundaries (occurrence order) to the
/// two-row boundary of the whole expression.
struct Rendered {
  Cobordism body;
  std::vector<std::pair<std::string, SignedSet>> boxes;
};

Rendered render_to_cob(const ExprPtr& e);

/// Canonical-form equality of the two renderings, after aligning the box
/// orders by a block shuffle. Requires both sides to use each box name at
/// most once and the same set of names.
bool cob_sides_equal(const ExprPtr& lhs, const ExprPtr& rhs);

Mor eval_expr(const TracedInstance& t, const ExprPtr& e,
              const std::map<std::string, Mor>& env);

/// One sampled statement of one law.
struct LawCase {
  std::string law;
  ExprPtr lhs, rhs;
  struct BoxSpec {
    std::string name;
    Word dom, cod;
  };
  std::vector<BoxSpec> boxes;
  std::string shapes;  // human-readable word assignment for reports
};

const std::vector<std::string>& traced_law_names();  // the fixed seven

/// Draws one case of each of the seven feedback laws with word lengths in
/// [0, max_len].
std::vector<LawCase> sample_law_cases(Rng& r, const std::vector<Label>& labels,
                                      int max_len);

struct LawCheckEntry {
  std::string law;
  int cases = 0;
  int cob_failures = 0;
  int instance_failures = 0;
  std::string first_witness;

  bool passed() const { return cob_failures == 0 && instance_failures == 0; }
};

struct LawCheckReport {
  std::vector<LawCheckEntry> entries;  // one per law, fixed order
  bool all_passed() const;
  std::string summary() const;  // one PASS/FAIL line per law
};

/// Checks the seven laws against canonical cobordism equality and, when an
/// instance is given, extensionally on sampled box fillings.
LawCheckReport check_traced_axioms(const TracedInstance* t, int cases,
                                   std::uint64_t seed,
                                   const std::vector<Label>& labels,
                                   int max_len = 2, bool check_cob = true);

}  // namespace cobcat
