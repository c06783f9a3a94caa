#include "catgrp/document_ops.hpp"

#include "catgrp/errors.hpp"

namespace catgrp {

const Declaration& DocumentEnv::require(const std::string& name) {
  const Declaration* d = doc_.find(name);
  if (!d) throw ContractError("no declaration named '" + name + "'");
  return *d;
}

GroupRef DocumentEnv::group(const std::string& name) {
  if (const auto it = groups_.find(name); it != groups_.end())
    return it->second;
  const Declaration& decl = require(name);
  const auto* g = std::get_if<GroupDecl>(&decl.body);
  if (!g) throw ContractError("'" + name + "' is not a group");
  GroupRef ref = FiniteGroup::shared_from_table(name, g->table);
  groups_.emplace(name, ref);
  return ref;
}

Hom DocumentEnv::hom(const std::string& name) {
  const Declaration& decl = require(name);
  const auto* h = std::get_if<HomDecl>(&decl.body);
  if (!h) throw ContractError("'" + name + "' is not a hom");
  return make_hom(group(h->source), group(h->target), h->map);
}

GroupAction DocumentEnv::action(const std::string& name) {
  const Declaration& decl = require(name);
  const auto* a = std::get_if<ActionDecl>(&decl.body);
  if (!a) throw ContractError("'" + name + "' is not an action");
  return make_action(group(a->group), group(a->carrier), a->table);
}

CrossedModule DocumentEnv::xmod(const std::string& name) {
  const Declaration& decl = require(name);
  const auto* x = std::get_if<XmodDecl>(&decl.body);
  if (!x) throw ContractError("'" + name + "' is not a crossed module");
  return make_crossed_module(group(x->c), group(x->g),
                             verified_hom(hom(x->boundary)),
                             verified_automorphism_action(action(x->action)));
}

InternalCategory DocumentEnv::internal_cat(const std::string& name) {
  const Declaration& decl = require(name);
  const auto* ic = std::get_if<InternalCatDecl>(&decl.body);
  if (!ic) throw ContractError("'" + name + "' is not an internal category");
  InternalDigraph graph{group(ic->arrows), group(ic->objects),
                        verified_hom(hom(ic->src)),
                        verified_hom(hom(ic->tgt)),
                        verified_hom(hom(ic->unit))};
  return make_internal_category(std::move(graph), ic->comp);
}

namespace {

// Declaration-scoped checks; a thrown contract violation becomes a failed
// report so the CLI can keep walking the document.
void run_decl_checks(DocumentEnv& env, const Declaration& decl,
                     std::vector<NamedReport>& out) {
  const auto emit = [&](CheckReport r) {
    out.push_back({decl.name, std::move(r)});
  };
  const auto emit_error = [&](const char* check, const Error& e) {
    emit(CheckReport::fail(check, {0}, e.what()));
  };

  if (std::holds_alternative<GroupDecl>(decl.body)) {
    emit(validate_group(std::get<GroupDecl>(decl.body).table));
    return;
  }

  if (std::holds_alternative<HomDecl>(decl.body)) {
    try {
      emit(is_homomorphism(env.hom(decl.name)));
    } catch (const Error& e) {
      emit_error("is_homomorphism", e);
    }
    return;
  }

  if (std::holds_alternative<ActionDecl>(decl.body)) {
    try {
      emit(check_group_action(env.action(decl.name)));
    } catch (const Error& e) {
      emit_error("check_group_action", e);
    }
    return;
  }

  if (std::holds_alternative<XmodDecl>(decl.body)) {
    const auto& x = std::get<XmodDecl>(decl.body);
    try {
      // Component checks first, so failures surface with real witnesses.
      const Hom boundary = env.hom(x.boundary);
      const CheckReport hom_report = is_homomorphism(boundary);
      if (!hom_report.passed) {
        emit(CheckReport::fail("check_crossed_module", *hom_report.witness,
                               "boundary is not a homomorphism: " +
                                   hom_report.detail));
        return;
      }
      const GroupAction act = env.action(x.action);
      const CheckReport act_report = check_group_action(act);
      if (!act_report.passed) {
        emit(CheckReport::fail("check_crossed_module", *act_report.witness,
                               "action axioms fail: " + act_report.detail));
        return;
      }
      const CheckReport aut_report = check_automorphism_action(act);
      if (!aut_report.passed) {
        emit(CheckReport::fail("check_crossed_module", *aut_report.witness,
                               "action is not by automorphisms: " +
                                   aut_report.detail));
        return;
      }
      const CrossedModule xm = env.xmod(decl.name);
      const CheckReport axioms = check_crossed_module(xm);
      emit(axioms);
      if (axioms.passed) {
        emit(kernel_abelian_check(xm));
        emit(image_normal_check(xm));
      }
    } catch (const Error& e) {
      emit_error("check_crossed_module", e);
    }
    return;
  }

  const auto& icd = std::get<InternalCatDecl>(decl.body);
  try {
    InternalDigraph graph{env.group(icd.arrows), env.group(icd.objects),
                          env.hom(icd.src), env.hom(icd.tgt),
                          env.hom(icd.unit)};
    const CheckReport digraph = check_internal_digraph(graph);
    emit(digraph);
    if (!digraph.passed) return;
    const InternalCategory ic = env.internal_cat(decl.name);
    const CheckReport cat = check_internal_category(ic);
    emit(cat);
    if (!cat.passed) return;
    emit(is_internal_groupoid(ic));
    emit(check_cat_group_structure(ic));
  } catch (const Error& e) {
    emit_error("check_internal_category", e);
  }
}

bool dependencies_ok(const SpecDocument& doc,
                     const std::vector<NamedReport>& reports,
                     const Declaration& decl) {
  const auto group_ok = [&](const std::string& name) {
    for (const auto& r : reports)
      if (r.target == name && !r.report.passed) return false;
    return true;
  };
  bool ok = true;
  const auto visit_refs = [&](const std::string& name) {
    if (!group_ok(name)) ok = false;
  };
  if (const auto* h = std::get_if<HomDecl>(&decl.body)) {
    visit_refs(h->source);
    visit_refs(h->target);
  } else if (const auto* a = std::get_if<ActionDecl>(&decl.body)) {
    visit_refs(a->group);
    visit_refs(a->carrier);
  } else if (const auto* x = std::get_if<XmodDecl>(&decl.body)) {
    for (const auto& n : {x->c, x->g, x->boundary, x->action}) visit_refs(n);
  } else if (const auto* ic = std::get_if<InternalCatDecl>(&decl.body)) {
    for (const auto& n :
         {ic->arrows, ic->objects, ic->src, ic->tgt, ic->unit})
      visit_refs(n);
  }
  return ok;
}

}  // namespace

std::vector<NamedReport> run_document_checks(const SpecDocument& doc) {
  DocumentEnv env(doc);
  std::vector<NamedReport> reports;
  for (const auto& decl : doc.decls) {
    if (!dependencies_ok(doc, reports, decl)) continue;
    run_decl_checks(env, decl, reports);
  }
  return reports;
}

namespace {

Declaration group_decl(const std::string& name, const FiniteGroup& g) {
  Declaration d;
  d.name = name;
  d.body = GroupDecl{g.order(), g.table()};
  return d;
}

Declaration hom_decl(const std::string& name, const std::string& source,
                     const std::string& target, const std::vector<int>& map) {
  Declaration d;
  d.name = name;
  d.body = HomDecl{source, target, map};
  return d;
}

}  // namespace

SpecDocument internal_cat_to_document(const InternalCategory& ic,
                                      const std::string& base) {
  SpecDocument doc;
  doc.decls.push_back(group_decl(base + "_A", *ic.graph.arrows));
  doc.decls.push_back(group_decl(base + "_O", *ic.graph.objects));
  doc.decls.push_back(
      hom_decl(base + "_s", base + "_A", base + "_O", ic.graph.src.map));
  doc.decls.push_back(
      hom_decl(base + "_t", base + "_A", base + "_O", ic.graph.tgt.map));
  doc.decls.push_back(
      hom_decl(base + "_e", base + "_O", base + "_A", ic.graph.unit.map));
  Declaration cat;
  cat.name = base + "_cat";
  cat.body = InternalCatDecl{base + "_A", base + "_O", base + "_s",
                             base + "_t", base + "_e", ic.comp};
  doc.decls.push_back(std::move(cat));
  return doc;
}

SpecDocument xmod_to_document(const CrossedModule& xm,
                              const std::string& base) {
  SpecDocument doc;
  doc.decls.push_back(group_decl(base + "_C", *xm.c));
  doc.decls.push_back(group_decl(base + "_G", *xm.g));
  doc.decls.push_back(
      hom_decl(base + "_d", base + "_C", base + "_G", xm.boundary.map));
  Declaration act;
  act.name = base + "_act";
  act.body = ActionDecl{base + "_G", base + "_C", xm.action.table};
  doc.decls.push_back(std::move(act));
  Declaration x;
  x.name = base + "_xmod";
  x.body = XmodDecl{base + "_C", base + "_G", base + "_d", base + "_act"};
  doc.decls.push_back(std::move(x));
  return doc;
}

}  // namespace catgrp
