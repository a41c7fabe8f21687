// gcoh: categorical non-abelian cohomology of finite groupoids.
//
// Exit codes: 0 success, 1 domain violation (a report document is emitted),
// 2 parse error (command line or input document), 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcoh/cocycle.hpp"
#include "gcoh/extension.hpp"
#include "gcoh/grothendieck.hpp"
#include "gcoh/json_io.hpp"
#include "gcoh/nerve.hpp"
#include "gcoh/two_groupoid.hpp"

namespace {

using gcoh::Budget;
using gcoh::Document;
using gcoh::ParseError;
using gcoh::Report;
using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Document load(const std::string& path) {
  try {
    return gcoh::read_document(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string g_output_path;

void emit(const Document& doc) {
  std::string text = gcoh::write_document(doc);
  if (g_output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g_output_path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + g_output_path);
  out << text;
}

// Emits a report document; returns the exit code implied by the report.
int emit_report(const std::string& command, json payload, const Report& r) {
  payload["command"] = command;
  payload["ok"] = r.empty();
  payload["violations"] = gcoh::report_to_json(r)["violations"];
  emit({"report", std::move(payload)});
  return r.empty() ? 0 : 1;
}

// Loads a document and requires its kind.
Document load_kind(const std::string& path, const std::string& kind) {
  Document doc = load(path);
  if (doc.kind != kind)
    throw ParseError(path + ": expected a " + kind + " document, found " +
                     doc.kind);
  return doc;
}

// Validated deserialization of the common inputs; throws StructuralError
// with the first violation when invalid.
gcoh::FiniteGroupoid load_groupoid(const std::string& path) {
  gcoh::FiniteGroupoid g =
      gcoh::groupoid_from_json(load_kind(path, "groupoid").payload);
  Report r = gcoh::validate_groupoid(g);
  if (!r.empty())
    throw gcoh::StructuralError(path + ": invalid groupoid (" +
                                r.front().category + ": " + r.front().message +
                                ")");
  return g;
}

gcoh::GroupFamily load_family(const std::string& path) {
  gcoh::GroupFamily f =
      gcoh::family_from_json(load_kind(path, "family").payload);
  Report r = gcoh::validate_family(f);
  if (!r.empty())
    throw gcoh::StructuralError(path + ": invalid family (" +
                                r.front().category + ": " + r.front().message +
                                ")");
  return f;
}

struct Options {
  // Shared flags.
  long long budget = 200'000'000;
  int jobs = 1;

  // Positional inputs, reused across subcommands.
  std::string input;
  std::string second;

  // Command-specific flags.
  bool witnesses = false;
  bool total_only = false;
  bool canonical = false;
  std::string cleavage_path;
  std::string kind;
  long long seed = 0;
  int trials = 100;
};

// ---------------------------------------------------------------------------

int cmd_validate(const Options& opt) {
  Document doc = load(opt.input);
  if (!opt.kind.empty() && opt.kind != doc.kind)
    throw ParseError(opt.input + ": expected a " + opt.kind +
                     " document, found " + doc.kind);
  Report r;
  if (doc.kind == "group") {
    r = gcoh::validate_group(gcoh::group_from_json(doc.payload));
  } else if (doc.kind == "groupoid") {
    r = gcoh::validate_groupoid(gcoh::groupoid_from_json(doc.payload));
  } else if (doc.kind == "family") {
    r = gcoh::validate_family(gcoh::family_from_json(doc.payload));
  } else if (doc.kind == "cocycle") {
    r = gcoh::validate_cocycle(gcoh::cocycle_from_json(doc.payload));
  } else if (doc.kind == "cochain") {
    r = gcoh::validate_cochain(gcoh::cochain_from_json(doc.payload));
  } else if (doc.kind == "morphism") {
    r = gcoh::validate_morphism(gcoh::morphism_from_json(doc.payload));
  } else if (doc.kind == "extension") {
    r = gcoh::validate_extension(gcoh::extension_from_json(doc.payload));
  } else if (doc.kind == "nerve") {
    r = gcoh::validate_simplicial(gcoh::sset_from_json(doc.payload));
  } else if (doc.kind == "map") {
    std::string type = doc.payload.value("type", "");
    if (type == "functor") {
      r = gcoh::validate_functor(gcoh::functor_from_json(doc.payload));
    } else if (type == "simplicial") {
      r = gcoh::validate_simplicial_map(
          gcoh::simplicial_map_from_json(doc.payload));
    } else if (type == "cleavage") {
      r = gcoh::validate_cleavage(gcoh::cleavage_from_json(doc.payload));
    } else {
      throw ParseError(opt.input + ": unknown map type '" + type + "'");
    }
  } else if (doc.kind == "report") {
    // Reports carry no invariants beyond their schema.
  } else {
    throw ParseError(opt.input + ": unknown document kind '" + doc.kind + "'");
  }
  json payload;
  payload["kind"] = doc.kind;
  return emit_report("validate", std::move(payload), r);
}

int cmd_h2(const Options& opt) {
  gcoh::FiniteGroupoid base = load_groupoid(opt.input);
  gcoh::GroupFamily family = load_family(opt.second);
  if (!gcoh::family_matches_base(family, base))
    throw gcoh::StructuralError("family does not match the base objects");
  Budget budget{opt.budget};
  gcoh::H2Result r = gcoh::h2(base, family, budget, opt.witnesses);

  json classes = json::array();
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    json cls;
    cls["members"] = r.classes[c];
    cls["size"] = r.classes[c].size();
    cls["representative"] = gcoh::cocycle_to_json(r.cocycles[r.representatives[c]]);
    if (opt.witnesses) {
      json w = json::object();
      for (int member : r.classes[c])
        w[std::to_string(member)] = r.witnesses.at(member).tau;
      cls["witnesses"] = std::move(w);
    }
    classes.push_back(std::move(cls));
  }
  json payload;
  payload["command"] = "h2";
  payload["cocycles"] = r.cocycles.size();
  payload["class_of"] = r.class_of;
  payload["classes"] = std::move(classes);
  emit({"report", std::move(payload)});
  return 0;
}

int cmd_twist(const Options& opt) {
  gcoh::WeakAction w =
      gcoh::cocycle_from_json(load_kind(opt.input, "cocycle").payload);
  Report r = gcoh::validate_cocycle(w);
  if (!r.empty()) return emit_report("twist", {}, r);
  gcoh::TwistedGroupoid t = gcoh::twist(w);
  if (opt.total_only) {
    emit({"groupoid", gcoh::groupoid_to_json(t.total)});
  } else {
    gcoh::Extension e = gcoh::package_extension(t, w.family);
    emit({"extension", gcoh::extension_to_json(e)});
  }
  return 0;
}

// Shared by fiber and gamma: load an extension document, validate it, and
// resolve the chosen cleavage.
struct FiberInputs {
  gcoh::Extension extension;
  gcoh::Cleavage cleavage;
};

std::optional<FiberInputs> load_fiber_inputs(const Options& opt, int* exit_code,
                                             const char* command) {
  gcoh::Extension e =
      gcoh::extension_from_json(load_kind(opt.input, "extension").payload);
  Report r = gcoh::validate_extension(e);
  if (!r.empty()) {
    *exit_code = emit_report(command, {}, r);
    return std::nullopt;
  }
  FiberInputs in;
  in.extension = std::move(e);
  if (opt.canonical) {
    in.cleavage = gcoh::canonical_cleavage(in.extension.projection);
  } else {
    in.cleavage = gcoh::cleavage_from_json(
        load_kind(opt.cleavage_path, "map").payload);
    if (!(in.cleavage.fibration == in.extension.projection)) {
      Report mismatch{{"cleavage",
                       "cleavage is not over the extension's projection"}};
      *exit_code = emit_report(command, {}, mismatch);
      return std::nullopt;
    }
    Report rc = gcoh::validate_cleavage(in.cleavage);
    if (!rc.empty()) {
      *exit_code = emit_report(command, {}, rc);
      return std::nullopt;
    }
  }
  return in;
}

int cmd_fiber(const Options& opt) {
  int exit_code = 0;
  auto in = load_fiber_inputs(opt, &exit_code, "fiber");
  if (!in) return exit_code;
  gcoh::WeakAction w =
      gcoh::fiber_action(in->extension.projection, in->cleavage);
  emit({"cocycle", gcoh::cocycle_to_json(w)});
  return 0;
}

int cmd_gamma(const Options& opt) {
  int exit_code = 0;
  auto in = load_fiber_inputs(opt, &exit_code, "gamma");
  if (!in) return exit_code;
  gcoh::GammaResult g = gcoh::gamma(in->extension.projection, in->cleavage);
  json payload = gcoh::functor_to_json(g.functor);
  payload["type"] = "functor";
  emit({"map", std::move(payload)});
  return 0;
}

int cmd_nerve(const Options& opt) {
  Document doc = load(opt.input);
  gcoh::TruncatedSimplicialSet s;
  if (doc.kind == "groupoid") {
    gcoh::FiniteGroupoid g = gcoh::groupoid_from_json(doc.payload);
    Report r = gcoh::validate_groupoid(g);
    if (!r.empty()) return emit_report("nerve", {}, r);
    s = gcoh::nerve_of_groupoid(g).sset;
  } else if (doc.kind == "family") {
    gcoh::GroupFamily f = gcoh::family_from_json(doc.payload);
    Report r = gcoh::validate_family(f);
    if (!r.empty()) return emit_report("nerve", {}, r);
    s = gcoh::nerve_of_aut(gcoh::build_aut(f)).sset;
  } else {
    throw ParseError(opt.input +
                     ": nerve expects a groupoid or family document");
  }
  emit({"nerve", gcoh::sset_to_json(s)});
  return 0;
}

int cmd_check_interpretation(const Options& opt) {
  gcoh::FiniteGroupoid base = load_groupoid(opt.input);
  gcoh::GroupFamily family = load_family(opt.second);
  Budget budget{opt.budget};
  gcoh::InterpretationReport r =
      gcoh::interpretation_check(base, family, budget);
  json payload;
  payload["theorem"] = "interpretation";
  payload["classes"] = r.classes;
  payload["pool_size"] = r.pool_size;
  payload["well_defined"] = r.well_defined;
  payload["injective"] = r.injective;
  payload["surjective"] = r.surjective;
  payload["pool_class_of"] = r.pool_class_of;
  payload["notes"] = r.notes;
  Report violations;
  if (!r.ok())
    violations.push_back(
        {"interpretation", "classification bijection failed; see notes"});
  return emit_report("check", std::move(payload), violations);
}

int cmd_check_representation(const Options& opt) {
  gcoh::FiniteGroupoid base = load_groupoid(opt.input);
  gcoh::GroupFamily family = load_family(opt.second);
  Budget budget{opt.budget};
  gcoh::RepresentationReport r =
      gcoh::representation_check(base, family, budget);
  json payload;
  payload["theorem"] = "representation";
  payload["h2_classes"] = r.h2_classes;
  payload["map_classes"] = r.map_classes;
  payload["raw_enumeration_matches"] = r.raw_enumeration_matches;
  payload["partitions_agree"] = r.partitions_agree;
  payload["symmetric"] = r.symmetric;
  payload["matching"] = r.matching;
  payload["notes"] = r.notes;
  Report violations;
  if (!r.ok())
    violations.push_back(
        {"representation", "homotopy-class bijection failed; see notes"});
  return emit_report("check", std::move(payload), violations);
}

int cmd_check_weak_identity(const Options& opt) {
  gcoh::FiniteGroupoid base = load_groupoid(opt.input);
  gcoh::GroupFamily family = load_family(opt.second);
  Budget budget{opt.budget};
  std::vector<gcoh::WeakAction> candidates =
      gcoh::enumerate_weakly_normalized_candidates(base, family, budget);
  Report violations;
  int upgraded = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    try {
      gcoh::WeakAction full = gcoh::weak_identity_upgrade(candidates[i]);
      Report r = gcoh::validate_cocycle(full);
      if (!r.empty()) {
        violations.push_back(
            {"weak-identity", "candidate " + std::to_string(i) +
                                  " upgraded to an invalid cocycle (" +
                                  r.front().message + ")"});
      } else {
        ++upgraded;
      }
    } catch (const gcoh::TheoremError& e) {
      violations.push_back({"weak-identity", "candidate " + std::to_string(i) +
                                                 ": " + e.what()});
    }
  }
  json payload;
  payload["theorem"] = "weak-identity";
  payload["candidates"] = candidates.size();
  payload["upgraded"] = upgraded;
  return emit_report("check", std::move(payload), violations);
}

int cmd_check_equivalence(const Options& opt) {
  gcoh::Extension e =
      gcoh::extension_from_json(load_kind(opt.input, "extension").payload);
  Report r = gcoh::validate_extension(e);
  if (!r.empty()) return emit_report("check", {{"theorem", "equivalence"}}, r);
  Budget budget{opt.budget};
  gcoh::EquivalenceReport rep = gcoh::equivalence_check(e.projection, budget);
  json payload;
  payload["theorem"] = "equivalence";
  payload["cleavages"] = rep.cleavages;
  payload["reconstruction_ok"] = rep.reconstruction_ok;
  payload["round_trip_ok"] = rep.round_trip_ok;
  payload["cleavage_independent"] = rep.cleavage_independent;
  payload["notes"] = rep.notes;
  Report violations;
  if (!rep.ok())
    violations.push_back(
        {"equivalence", "cleavage classification failed; see notes"});
  return emit_report("check", std::move(payload), violations);
}

// ---------------------------------------------------------------------------
// Fuzzing: deterministic single-cell mutations that validators must reject.

std::vector<gcoh::FiniteGroup> fuzz_groups() {
  return {gcoh::make_cyclic(2, "Z2"),  gcoh::make_cyclic(3, "Z3"),
          gcoh::make_cyclic(4, "Z4"),  gcoh::make_cyclic(5, "Z5"),
          gcoh::make_cyclic(6, "Z6"),  gcoh::make_klein4(),
          gcoh::make_symmetric3(),     gcoh::make_dihedral(4),
          gcoh::make_quaternion8()};
}

std::vector<gcoh::FiniteGroupoid> fuzz_groupoids() {
  std::vector<gcoh::FiniteGroupoid> out;
  out.push_back(gcoh::groupoid_from_group(gcoh::make_cyclic(4)));
  out.push_back(gcoh::groupoid_from_group(gcoh::make_symmetric3()));
  out.push_back(gcoh::interval_groupoid());
  out.push_back(gcoh::disjoint_union(
      gcoh::groupoid_from_group(gcoh::make_cyclic(2)),
      gcoh::groupoid_from_group(gcoh::make_cyclic(3))));
  out.push_back(gcoh::disjoint_union(gcoh::interval_groupoid(),
                                     gcoh::discrete_groupoid(1)));
  return out;
}

int cmd_fuzz_group(const Options& opt) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(opt.seed));
  std::vector<gcoh::FiniteGroup> roster = fuzz_groups();
  int rejected = 0;
  for (int t = 0; t < opt.trials; ++t) {
    gcoh::FiniteGroup g = roster[rng() % roster.size()];
    int a = (int)(rng() % g.order);
    int b = (int)(rng() % g.order);
    int wrong = (int)(rng() % (g.order - 1));
    if (wrong >= g.table[a][b]) ++wrong;  // any value but the correct one
    g.table[a][b] = wrong;
    if (!gcoh::validate_group(g).empty()) ++rejected;
  }
  json payload;
  payload["target"] = "group";
  payload["seed"] = opt.seed;
  payload["trials"] = opt.trials;
  payload["rejected"] = rejected;
  Report violations;
  if (rejected != opt.trials)
    violations.push_back({"fuzz", std::to_string(opt.trials - rejected) +
                                      " mutations were not rejected"});
  return emit_report("fuzz", std::move(payload), violations);
}

int cmd_fuzz_groupoid(const Options& opt) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(opt.seed));
  std::vector<gcoh::FiniteGroupoid> roster = fuzz_groupoids();
  int rejected = 0, tried = 0;
  while (tried < opt.trials) {
    gcoh::FiniteGroupoid g = roster[rng() % roster.size()];
    int site = (int)(rng() % 5);
    bool mutated = false;
    if (site == 0 && g.num_objects() > 1) {
      // Arrow endpoint.
      int f = (int)(rng() % g.num_arrows());
      int v = (int)(rng() % (g.num_objects() - 1));
      int& slot = (rng() % 2) ? g.arrows[f].src : g.arrows[f].tgt;
      if (v >= slot) ++v;
      slot = v;
      mutated = true;
    } else if (site == 1) {
      // Identity designation.
      int x = (int)(rng() % g.num_objects());
      if (g.num_arrows() > 1) {
        int v = (int)(rng() % (g.num_arrows() - 1));
        if (v >= g.identity[x]) ++v;
        g.identity[x] = v;
        mutated = true;
      }
    } else if (site == 2 && g.num_arrows() > 1) {
      // Inverse designation.
      int f = (int)(rng() % g.num_arrows());
      int v = (int)(rng() % (g.num_arrows() - 1));
      if (v >= g.inverse[f]) ++v;
      g.inverse[f] = v;
      mutated = true;
    } else {
      // Composition cell: replace a defined entry, or define an undefined one.
      int a = (int)(rng() % g.num_arrows());
      int b = (int)(rng() % g.num_arrows());
      int old = g.compose_table[a][b];
      if (old >= 0 && g.num_arrows() > 1) {
        int v = (int)(rng() % (g.num_arrows() - 1));
        if (v >= old) ++v;
        g.compose_table[a][b] = v;
        mutated = true;
      } else if (old < 0) {
        g.compose_table[a][b] = (int)(rng() % g.num_arrows());
        mutated = true;
      }
    }
    if (!mutated) continue;
    ++tried;
    if (!gcoh::validate_groupoid(g).empty()) ++rejected;
  }
  json payload;
  payload["target"] = "groupoid";
  payload["seed"] = opt.seed;
  payload["trials"] = opt.trials;
  payload["rejected"] = rejected;
  Report violations;
  if (rejected != opt.trials)
    violations.push_back({"fuzz", std::to_string(opt.trials - rejected) +
                                      " mutations were not rejected"});
  return emit_report("fuzz", std::move(payload), violations);
}

int cmd_fuzz_nerve(const Options& opt) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(opt.seed));
  // Groupoid nerves admit mutations anywhere; 2-groupoid nerves only below
  // dimension 3 and in the degeneracy tables, since a witness face of a
  // 3-simplex can be swapped for a parallel one without breaking any listed
  // identity (the filler rule there is uniqueness, not exactness).
  struct Subject {
    gcoh::TruncatedSimplicialSet sset;
    bool allow_faces3;
  };
  std::vector<Subject> roster;
  for (const gcoh::FiniteGroupoid& g : fuzz_groupoids())
    roster.push_back({gcoh::nerve_of_groupoid(g).sset, true});
  roster.push_back(
      {gcoh::nerve_of_aut(gcoh::build_aut(gcoh::make_family(
           {gcoh::make_cyclic(3)}))).sset,
       false});
  roster.push_back(
      {gcoh::nerve_of_aut(gcoh::build_aut(gcoh::make_family(
           {gcoh::make_cyclic(2), gcoh::make_cyclic(2)}))).sset,
       false});

  int rejected = 0, tried = 0;
  while (tried < opt.trials) {
    const Subject& subject = roster[rng() % roster.size()];
    gcoh::TruncatedSimplicialSet s = subject.sset;
    int table = (int)(rng() % (subject.allow_faces3 ? 6 : 5));
    auto mutate = [&rng](auto& rows, int count) {
      if (rows.empty() || count <= 1) return false;
      auto& row = rows[rng() % rows.size()];
      int slot = (int)(rng() % row.size());
      int v = (int)(rng() % (count - 1));
      if (v >= row[slot]) ++v;
      row[slot] = v;
      return true;
    };
    bool mutated = false;
    switch (table) {
      case 0: mutated = mutate(s.faces1, s.counts[0]); break;
      case 1: mutated = mutate(s.faces2, s.counts[1]); break;
      case 2: mutated = mutate(s.degen0, s.counts[1]); break;
      case 3: mutated = mutate(s.degen1, s.counts[2]); break;
      case 4: mutated = mutate(s.degen2, s.counts[3]); break;
      case 5: mutated = mutate(s.faces3, s.counts[2]); break;
    }
    if (!mutated) continue;
    ++tried;
    if (!gcoh::validate_simplicial(s).empty()) ++rejected;
  }
  json payload;
  payload["target"] = "nerve";
  payload["seed"] = opt.seed;
  payload["trials"] = opt.trials;
  payload["rejected"] = rejected;
  Report violations;
  if (rejected != opt.trials)
    violations.push_back({"fuzz", std::to_string(opt.trials - rejected) +
                                      " mutations were not rejected"});
  return emit_report("fuzz", std::move(payload), violations);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categorical non-abelian cohomology of finite groupoids"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--jobs", opt.jobs, "Worker count (outputs are identical for every value)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output", g_output_path, "Write the result document here instead of stdout");

  int exit_code = 0;
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", opt.budget, "Abort after this many elementary steps")
        ->check(CLI::PositiveNumber);
  };

  auto* validate = app.add_subcommand("validate", "Validate a document of any kind");
  validate->add_option("input", opt.input, "Document to validate")->required();
  validate->add_option("--kind", opt.kind, "Require this document kind");
  validate->fallthrough();
  validate->callback([&] { exit_code = cmd_validate(opt); });

  auto* h2cmd = app.add_subcommand("h2", "Cohomology classes of a base groupoid with coefficients in a family");
  h2cmd->add_option("base", opt.input, "Groupoid document")->required();
  h2cmd->add_option("family", opt.second, "Family document")->required();
  h2cmd->add_flag("--witnesses", opt.witnesses, "Include coboundary witnesses inside classes");
  add_budget(h2cmd);
  h2cmd->fallthrough();
  h2cmd->callback([&] { exit_code = cmd_h2(opt); });

  auto* twist = app.add_subcommand("twist", "Twisted product of a cocycle, packaged as an extension");
  twist->add_option("cocycle", opt.input, "Cocycle document")->required();
  twist->add_flag("--total-only", opt.total_only, "Emit only the total groupoid");
  twist->fallthrough();
  twist->callback([&] { exit_code = cmd_twist(opt); });

  auto* fiber = app.add_subcommand("fiber", "Extract the fiber cocycle of an extension along a cleavage");
  fiber->add_option("extension", opt.input, "Extension document")->required();
  fiber->add_flag("--canonical", opt.canonical, "Use the canonical cleavage");
  fiber->add_option("--cleavage", opt.cleavage_path, "Cleavage map document");
  fiber->fallthrough();
  fiber->callback([&] {
    if (!opt.canonical && opt.cleavage_path.empty())
      throw CLI::ValidationError("fiber", "need --canonical or --cleavage");
    exit_code = cmd_fiber(opt);
  });

  auto* gammac = app.add_subcommand("gamma", "Reconstruction isomorphism onto the twisted product");
  gammac->add_option("extension", opt.input, "Extension document")->required();
  gammac->add_flag("--canonical", opt.canonical, "Use the canonical cleavage");
  gammac->add_option("--cleavage", opt.cleavage_path, "Cleavage map document");
  gammac->fallthrough();
  gammac->callback([&] {
    if (!opt.canonical && opt.cleavage_path.empty())
      throw CLI::ValidationError("gamma", "need --canonical or --cleavage");
    exit_code = cmd_gamma(opt);
  });

  auto* nerve = app.add_subcommand("nerve", "Truncated nerve of a groupoid, or of the automorphism 2-groupoid of a family");
  nerve->add_option("input", opt.input, "Groupoid or family document")->required();
  nerve->fallthrough();
  nerve->callback([&] { exit_code = cmd_nerve(opt); });

  auto* check = app.add_subcommand("check", "Run a theorem instance check");
  check->require_subcommand(1);
  check->fallthrough();
  {
    auto* c = check->add_subcommand("interpretation", "Cohomology classes match extension components");
    c->add_option("base", opt.input, "Groupoid document")->required();
    c->add_option("family", opt.second, "Family document")->required();
    add_budget(c);
    c->fallthrough();
    c->callback([&] { exit_code = cmd_check_interpretation(opt); });
  }
  {
    auto* c = check->add_subcommand("representation", "Cohomology classes match homotopy classes of nerve maps");
    c->add_option("base", opt.input, "Groupoid document")->required();
    c->add_option("family", opt.second, "Family document")->required();
    add_budget(c);
    c->fallthrough();
    c->callback([&] { exit_code = cmd_check_representation(opt); });
  }
  {
    auto* c = check->add_subcommand("weak-identity", "Weakly normalized cocycles normalize fully");
    c->add_option("base", opt.input, "Groupoid document")->required();
    c->add_option("family", opt.second, "Family document")->required();
    add_budget(c);
    c->fallthrough();
    c->callback([&] { exit_code = cmd_check_weak_identity(opt); });
  }
  {
    auto* c = check->add_subcommand("equivalence", "Cleavage-independent classification of one extension");
    c->add_option("extension", opt.input, "Extension document")->required();
    add_budget(c);
    c->fallthrough();
    c->callback([&] { exit_code = cmd_check_equivalence(opt); });
  }

  auto* fuzz = app.add_subcommand("fuzz", "Mutate valid structures and require rejection");
  fuzz->require_subcommand(1);
  fuzz->fallthrough();
  auto add_fuzz = [&](const char* name, const char* desc, int (*fn)(const Options&)) {
    auto* c = fuzz->add_subcommand(name, desc);
    c->add_option("--seed", opt.seed, "PRNG seed")->required();
    c->add_option("--trials", opt.trials, "Number of mutations")
        ->check(CLI::PositiveNumber);
    c->fallthrough();
    c->callback([&, fn] { exit_code = fn(opt); });
  };
  add_fuzz("group", "Single-cell mutations of multiplication tables", cmd_fuzz_group);
  add_fuzz("groupoid", "Single-cell mutations of groupoid data", cmd_fuzz_groupoid);
  add_fuzz("nerve", "Single-cell mutations of constructed nerves", cmd_fuzz_nerve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const gcoh::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const gcoh::StructuralError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const gcoh::TheoremError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
