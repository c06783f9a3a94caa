#pragma once

#include <map>
#include <string>
#include <vector>

#include "catgrp/check_report.hpp"
#include "catgrp/crossed_module.hpp"
#include "catgrp/dsl.hpp"
#include "catgrp/internal_category.hpp"

namespace catgrp {

// Builds library objects out of parsed declarations, caching groups so that
// references to the same declaration share one FiniteGroup instance.
// Instantiation throws Error subclasses when a declaration fails the
// semantic validation its type needs (e.g. a group table that is not
// associative, a boundary that is not a homomorphism).
class DocumentEnv {
 public:
  explicit DocumentEnv(const SpecDocument& doc) : doc_(doc) {}

  const SpecDocument& doc() const { return doc_; }
  GroupRef group(const std::string& name);
  Hom hom(const std::string& name);             // unverified
  GroupAction action(const std::string& name);  // unchecked axioms
  CrossedModule xmod(const std::string& name);  // verified components
  InternalCategory internal_cat(const std::string& name);

  const Declaration& require(const std::string& name);

 private:
  const SpecDocument& doc_;
  std::map<std::string, GroupRef> groups_;
};

struct NamedReport {
  std::string target;
  CheckReport report;
};

// Every applicable check on every declaration, in declaration order then
// check order: groups get validate_group; homs the homomorphism check;
// actions the action axioms; crossed modules the axioms plus the
// kernel-abelian and image-normal consequences; internal categories the
// digraph check, the four category legs, the groupoid property and the
// group-object structure. Checks gated on a failed precondition are
// omitted. Structural contract violations surface as failed reports.
std::vector<NamedReport> run_document_checks(const SpecDocument& doc);

// Declarations describing a constructed object, self-contained (component
// groups and maps included), named <base>_A/_O/_s/_t/_e/_cat for internal
// categories and <base>_C/_G/_d/_act/_xmod for crossed modules.
SpecDocument internal_cat_to_document(const InternalCategory& ic,
                                      const std::string& base);
SpecDocument xmod_to_document(const CrossedModule& xm,
                              const std::string& base);

}  // namespace catgrp
