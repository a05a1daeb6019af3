#include "nabt_cli/app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <sstream>

#include "nabt/constructions.hpp"
#include "nabt/homology.hpp"
#include "nabt/subgroup.hpp"
#include "nabt/verify.hpp"
#include "nabt_cli/spec.hpp"

#ifndef NABT_VERSION
#define NABT_VERSION "0.0.0"
#endif

namespace nabt::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::size_t max_cosets = EnumLimits{}.max_cosets;
  std::string max_cosets_source = "default";
  std::size_t element_bound = kDefaultElementBound;
  std::size_t bar_bound = kDefaultBarBound;
  std::string format = "text";

  TensorLimits limits() const {
    TensorLimits l;
    l.enumeration.max_cosets = max_cosets;
    l.element_bound = element_bound;
    return l;
  }
  Json to_json() const {
    return Json{{"max_cosets", max_cosets},
                {"max_cosets_source", max_cosets_source},
                {"element_bound", element_bound},
                {"bar_bound", bar_bound}};
  }
};

Json to_json(const AbelianInvariants& a) { return Json{{"torsion", a.torsion}, {"rank", a.free_rank}}; }

Json to_json(const Fingerprint& f) {
  Json hist = Json::object();
  for (const auto& [order, count] : f.order_histogram) hist[std::to_string(order)] = count;
  return Json{{"order", f.order},
              {"abelianization", to_json(f.abelianization)},
              {"center_order", f.center_order},
              {"derived_length", f.derived_length},
              {"solvable", f.solvable},
              {"order_histogram", hist}};
}

Json group_json(const PermGroup& g) {
  return Json{{"order", g.order()},
              {"abelian_invariants", to_json(abelian_invariants(g))},
              {"fingerprint", to_json(fingerprint(g))}};
}

Json tensor_json(const TensorGroup& t) {
  Json j = group_json(t.carrier);
  std::vector<Elem> s;
  for (Elem a : t.g().generator_elements())
    for (Elem b : t.h().generator_elements()) s.push_back(t.pair(a, b));
  j["cosets_defined"] = t.cosets_defined;
  j["generator_pairs_generate"] = subgroup_generated(t.carrier, s).order() == t.carrier.order();
  j["phi"] = Json{{"image_order", t.phi.image().order()}, {"kernel_order", t.phi.kernel().order()}};
  return j;
}

Json report_json(const VerificationReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json facts = Json::object();
    for (const auto& [k, v] : c.facts) facts[k] = v;
    Json j{{"suite", c.suite}, {"subject", c.subject}, {"check", c.check}, {"status", std::string(to_string(c.status))}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!facts.empty()) j["facts"] = facts;
    cases.push_back(std::move(j));
  }
  Json config = Json::object();
  for (const auto& [k, v] : r.config) config[k] = v;
  return Json{{"ok", r.ok()},
              {"passed", r.count(CaseStatus::pass)},
              {"failed", r.count(CaseStatus::fail)},
              {"skipped", r.count(CaseStatus::skipped)},
              {"config", config},
              {"cases", cases}};
}

Json report_timings(const VerificationReport& r) {
  Json t = Json::array();
  for (const auto& c : r.cases) t.push_back(c.seconds);
  return t;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

// Flattens a document into "path: value" lines.
void render_text(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty()) out << path << ": {}\n";
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array()) {
    bool scalars = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
    if (scalars) {
      out << path << ": [";
      for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << scalar_text(j[i]);
      out << "]\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << path << ": " << scalar_text(j) << "\n";
  }
}

std::string normalize_suite(std::string s) {
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

class Session {
 public:
  explicit Session(const Config& config) : config_(config) {}

  ResolvedGroup group(const std::string& label, const std::string& text) {
    ResolvedGroup r = resolve_group(parse_group_spec(text), config_.limits());
    inputs_[label] = text;
    if (r.cosets_defined) inputs_[label + "_cosets_defined"] = *r.cosets_defined;
    return r;
  }

  MutualActions mutual(const PermGroup& g, const PermGroup& h, const std::string& gh, const std::string& hg) {
    inputs_["action_gh"] = gh;
    inputs_["action_hg"] = hg;
    return build_mutual(g, h, parse_action_spec(gh), parse_action_spec(hg), config_.element_bound);
  }

  Json& inputs() { return inputs_; }
  const Config& config() const { return config_; }

 private:
  Config config_;
  Json inputs_ = Json::object();
};

struct Result {
  Json result = Json::object();
  std::optional<VerificationReport> report;
};

MutualActions require_certified(MutualActions ma) {
  if (!ma.certified)
    throw InvalidArgument("actions are not compatible: " +
                          (ma.violation ? ma.violation->to_string() : std::string("no witness")));
  return ma;
}

Subgroup require_subgroup(const PermGroup& g, const PermGroup& h) { return embed(g, h); }

Json compatibility_json(const MutualActions& ma) {
  Json j{{"compatible", ma.certified}};
  if (ma.violation) {
    const auto& v = *ma.violation;
    j["witness"] = Json{{"equation", v.equation}, {"g", v.g},     {"h", v.h},
                        {"other", v.other},       {"lhs", v.lhs}, {"rhs", v.rhs},
                        {"replays", replay(ma.g_on_h, ma.h_on_g, v)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

VerificationReport verify_one(Session& s, const std::string& suite, const std::vector<std::string>& specs,
                              const std::string& gh, const std::string& hg) {
  auto need = [&](std::size_t n) {
    if (specs.size() != n)
      throw InvalidArgument("suite " + suite + " takes " + std::to_string(n) + " group specs, got " +
                            std::to_string(specs.size()));
  };
  VerifyConfig vc{s.config().limits(), s.config().bar_bound, 12};
  if (suite == "tensor_square" || suite == "schur_classes" || suite == "derivative_lcs") {
    need(1);
    PermGroup g = s.group("G", specs[0]).group;
    if (suite == "tensor_square") return verify_tensor_square(specs[0], g, vc);
    if (suite == "schur_classes") return verify_schur_classes(specs[0], g);
    return verify_derivative_lcs(specs[0], g);
  }
  if (suite == "compatibility" || suite == "tensor_product" || suite == "circ_kernels") {
    need(2);
    PermGroup g = s.group("G", specs[0]).group;
    PermGroup h = s.group("H", specs[1]).group;
    MutualActions ma = s.mutual(g, h, gh, hg);
    std::string name = specs[0] + " ; " + specs[1];
    if (suite == "compatibility") return verify_compatibility({name, ma.g_on_h, ma.h_on_g, true});
    if (suite == "tensor_product") return verify_tensor_product(name, ma, vc);
    return verify_circ_kernels(name, ma);
  }
  if (suite == "bjr_identities" || suite == "normal_abelian_quotient" || suite == "schur_epimorphism") {
    need(2);
    PermGroup g = s.group("G", specs[0]).group;
    Subgroup h = require_subgroup(g, s.group("H", specs[1]).group);
    std::string name = specs[0] + " ; " + specs[1];
    if (suite == "schur_epimorphism") return verify_schur_epimorphism(make_extension(name, g, h), vc.limits);
    if (!h.is_normal()) throw NotNormal("H is not normal in G");
    NormalPairTensors p = normal_pair_tensors(h, vc.limits);
    if (suite == "bjr_identities") return verify_bjr_identities(name, p);
    return verify_normal_abelian_quotient(name, p);
  }
  if (suite == "lemma26_sequence") {
    need(3);
    PermGroup k = s.group("K", specs[0]).group;
    Subgroup g = require_subgroup(k, s.group("G", specs[1]).group);
    Subgroup h = require_subgroup(k, s.group("H", specs[2]).group);
    return verify_lemma26_sequence(specs[0] + " ; " + specs[1] + " ; " + specs[2], g, h, vc.limits);
  }
  throw InvalidArgument("unknown suite: " + suite);
}

}  // namespace

Outcome run(const std::vector<std::string>& args, const char* max_cosets_env) {
  auto started = std::chrono::steady_clock::now();
  Config config;
  std::optional<std::size_t> max_cosets_flag;

  CLI::App app{"Non-abelian tensor products of finite groups", "nabt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-cosets", max_cosets_flag, "Coset definition limit (default 1000000, or NABT_MAX_COSETS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--element-bound", config.element_bound, "Largest element table")->check(CLI::PositiveNumber);
  app.add_option("--bar-bound", config.bar_bound, "Largest |G| for the bar resolution")->check(CLI::PositiveNumber);
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string g_spec, h_spec, k_spec;
  std::string action_gh = "conjugation";
  std::string action_hg = "conjugation";
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("G", g_spec, "Group spec")->required();
    sub->add_option("H", h_spec, "Group spec")->required();
    sub->add_option("--action-gh", action_gh, "Action of G on H: trivial | conjugation | explicit: ...");
    sub->add_option("--action-hg", action_hg, "Action of H on G: trivial | conjugation | explicit: ...");
  };
  auto add_single = [&](CLI::App* sub) { sub->add_option("G", g_spec, "Group spec")->required(); };

  auto* order = app.add_subcommand("order", "Group order and fingerprint");
  add_single(order);
  auto* abelianization = app.add_subcommand("abelianization", "Invariants of G/[G,G]");
  add_single(abelianization);
  auto* series = app.add_subcommand("series", "Derived or lower central series");
  add_single(series);
  bool derived = false;
  bool lower = false;
  auto* derived_flag = series->add_flag("--derived", derived, "Derived series (default)");
  series->add_flag("--lower-central", lower, "Lower central series")->excludes(derived_flag);
  auto* tensor = app.add_subcommand("tensor", "G (x) H for compatible actions");
  add_pair(tensor);
  auto* tensor_square_cmd = app.add_subcommand("tensor-square", "G (x) G");
  add_single(tensor_square_cmd);
  auto* exterior = app.add_subcommand("exterior-square", "G ^ G");
  add_single(exterior);
  auto* schur = app.add_subcommand("schur", "Schur multiplier via the exterior square");
  add_single(schur);
  auto* h2 = app.add_subcommand("h2-bar", "H2(G) via the normalized bar resolution");
  add_single(h2);
  auto* aug = app.add_subcommand("aug-tensor", "A (x)_ZH I(H) for a module A with an H-action");
  std::size_t module_rank = 1;
  std::vector<std::uint64_t> module_torsion;
  std::vector<std::string> action_matrices;
  std::string over;
  aug->add_option("--module-rank", module_rank, "Free rank of A");
  aug->add_option("--module-torsion", module_torsion, "Torsion orders of A")->delimiter(',');
  aug->add_option("--action", action_matrices,
                  "Matrix of one generator of H on A (rows '/', entries ','); repeat per generator")
      ->allow_extra_args(false);
  aug->add_option("--over", over, "Group spec for H")->required();
  auto* compatible = app.add_subcommand("compatible", "Check compatibility of mutual actions");
  add_pair(compatible);
  auto* circ = app.add_subcommand("circ", "(G x| H) / (G, H)");
  add_pair(circ);
  auto* derivative_cmd = app.add_subcommand("derivative", "D_H(G) and D_G(H)");
  add_pair(derivative_cmd);
  auto* verify = app.add_subcommand("verify", "Run one verification suite on explicit groups");
  std::string suite;
  std::vector<std::string> specs;
  verify->add_option("suite", suite, "Suite name")->required();
  verify->add_option("specs", specs, "Group specs");
  verify->add_option("--action-gh", action_gh, "Action of G on H");
  verify->add_option("--action-hg", action_hg, "Action of H on G");
  auto* corpus = app.add_subcommand("corpus", "Bundled corpus");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "Run suites over the bundled corpus");
  std::vector<std::string> suites;
  corpus_run->add_option("--suite", suites, "Suite to run (repeatable; default all)");

  Outcome outcome;
  std::ostringstream out, err;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = app.exit(e, out, err) == 0 ? kSuccess : kInputError;
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
  }

  if (max_cosets_flag) {
    config.max_cosets = *max_cosets_flag;
    config.max_cosets_source = "flag";
  } else if (max_cosets_env && *max_cosets_env) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(max_cosets_env, &used);
      if (used != std::string(max_cosets_env).size() || v == 0) throw std::invalid_argument("");
      config.max_cosets = v;
      config.max_cosets_source = "env";
    } catch (const std::exception&) {
      outcome.exit_code = kInputError;
      outcome.err = "error: NABT_MAX_COSETS must be a positive integer\n";
      return outcome;
    }
  }

  CLI::App* chosen = app.get_subcommands().front();
  std::string command = chosen->get_name();
  if (chosen == corpus) command = "corpus run";
  Session session(config);
  Json doc;
  Result res;
  try {
    if (chosen == order) {
      ResolvedGroup g = session.group("G", g_spec);
      res.result = Json{{"order", g.group.order()}, {"fingerprint", to_json(fingerprint(g.group))}};
    } else if (chosen == abelianization) {
      AbelianInvariants inv = abelian_invariants(session.group("G", g_spec).group);
      res.result = Json{{"abelian_invariants", to_json(inv)}, {"text", inv.to_string()}};
    } else if (chosen == series) {
      PermGroup g = session.group("G", g_spec).group;
      auto terms = lower ? lower_central_series(g) : derived_series(g);
      Json list = Json::array();
      for (const auto& t : terms)
        list.push_back(Json{{"order", t.order()}, {"abelian_invariants", to_json(abelian_invariants(t.as_group()))}});
      res.result = Json{{"kind", lower ? "lower_central" : "derived"}, {"terms", list}};
    } else if (chosen == tensor) {
      PermGroup g = session.group("G", g_spec).group;
      PermGroup h = session.group("H", h_spec).group;
      MutualActions ma = require_certified(session.mutual(g, h, action_gh, action_hg));
      res.result = tensor_json(tensor_product(ma, config.limits()));
    } else if (chosen == tensor_square_cmd) {
      PermGroup g = session.group("G", g_spec).group;
      ExteriorSquare ext = exterior_square(g, config.limits());
      res.result = tensor_json(ext.tensor);
      res.result["nabla_order"] = ext.diagonal.order();
      res.result["exterior_order"] = ext.group.order();
      res.result["lambda_kernel_order"] = lambda_hom(ext.tensor).kernel().order();
    } else if (chosen == exterior) {
      PermGroup g = session.group("G", g_spec).group;
      DirectExterior ext = exterior_square_direct(g, config.limits());
      res.result = group_json(ext.group);
      res.result["kappa_kernel_order"] = ext.kappa.kernel().order();
      res.result["commutator_order"] = ext.kappa.codomain().order();
    } else if (chosen == schur) {
      PermGroup g = session.group("G", g_spec).group;
      DirectExterior ext = exterior_square_direct(g, config.limits());
      MultiplierResult m = schur_multiplier_of(ext);
      res.result = Json{{"abelian_invariants", to_json(m.invariants)},
                        {"text", m.invariants.to_string()},
                        {"exterior_order", ext.group.order()}};
    } else if (chosen == h2) {
      PermGroup g = session.group("G", g_spec).group;
      AbelianInvariants inv = h2_bar_resolution(g, config.bar_bound);
      res.result = Json{{"abelian_invariants", to_json(inv)}, {"text", inv.to_string()}};
    } else if (chosen == aug) {
      PermGroup h = session.group("H", over).group;
      AbelianInvariants module{module_torsion, module_rank};
      std::size_t k = module_rank + module_torsion.size();
      ModuleAction a{module, {}};
      if (action_matrices.empty())
        a.generator_matrices.assign(h.generators().size(), IntMatrix::identity(k));
      for (const auto& m : action_matrices) a.generator_matrices.push_back(parse_matrix(m));
      session.inputs()["module"] = to_json(module);
      session.inputs()["action"] = action_matrices;
      AbelianInvariants inv = module_tensor_aug_ideal(a, h);
      res.result = Json{{"abelian_invariants", to_json(inv)}, {"text", inv.to_string()}};
    } else if (chosen == compatible) {
      PermGroup g = session.group("G", g_spec).group;
      PermGroup h = session.group("H", h_spec).group;
      res.result = compatibility_json(session.mutual(g, h, action_gh, action_hg));
    } else if (chosen == circ) {
      PermGroup g = session.group("G", g_spec).group;
      PermGroup h = session.group("H", h_spec).group;
      CircProduct c = circ_product(require_certified(session.mutual(g, h, action_gh, action_hg)));
      res.result = group_json(c.group);
      res.result["ker_mu_order"] = c.mu.kernel().order();
      res.result["ker_nu_order"] = c.nu.kernel().order();
      res.result["peiffer_closure_needed"] = c.peiffer.closure_needed;
    } else if (chosen == derivative_cmd) {
      PermGroup g = session.group("G", g_spec).group;
      PermGroup h = session.group("H", h_spec).group;
      MutualActions ma = require_certified(session.mutual(g, h, action_gh, action_hg));
      Subgroup dg = derivative(ma.h_on_g);
      Subgroup dh = derivative(ma.g_on_h);
      res.result = Json{{"d_h_of_g", group_json(dg.as_group())}, {"d_g_of_h", group_json(dh.as_group())}};
    } else if (chosen == verify) {
      suite = normalize_suite(suite);
      session.inputs()["suite"] = suite;
      res.report = verify_one(session, suite, specs, action_gh, action_hg);
    } else if (chosen == corpus) {
      for (auto& s : suites) s = normalize_suite(s);
      session.inputs()["corpus"] = "standard";
      session.inputs()["suites"] = suites;
      VerifyConfig vc{config.limits(), config.bar_bound, 12};
      res.report = run_corpus(Corpus::standard(), suites, vc);
    }
  } catch (const Error& e) {
    int code = kInputError;
    std::string kind = "input";
    if (dynamic_cast<const LimitExceeded*>(&e) || dynamic_cast<const BoundExceeded*>(&e) ||
        dynamic_cast<const IncompleteTable*>(&e)) {
      code = kLimitExhausted;
      kind = "limit";
    } else if (dynamic_cast<const InternalError*>(&e)) {
      code = kSuiteFailure;
      kind = "internal";
    } else if (dynamic_cast<const ParseError*>(&e)) {
      kind = "parse";
    }
    outcome.exit_code = code;
    outcome.err = std::string("error: ") + e.what() + "\n";
    if (config.format == "json") {
      Json errdoc{{"command", command},
                  {"inputs", session.inputs()},
                  {"config", config.to_json()},
                  {"error", Json{{"kind", kind}, {"message", e.what()}, {"exit_code", code}}},
                  {"version", NABT_VERSION}};
      outcome.out = errdoc.dump(2) + "\n";
    }
    return outcome;
  }

  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  doc["command"] = command;
  doc["inputs"] = session.inputs();
  doc["config"] = config.to_json();
  doc["result"] = res.result;
  Json timings{{"total_seconds", seconds}};
  if (res.report) {
    doc["result"] = Json{{"ok", res.report->ok()}};
    doc["suites"] = report_json(*res.report);
    timings["case_seconds"] = report_timings(*res.report);
    if (!res.report->ok()) outcome.exit_code = kSuiteFailure;
  }
  doc["timings"] = timings;
  doc["version"] = NABT_VERSION;
  if (config.format == "json") {
    outcome.out = doc.dump(2) + "\n";
  } else {
    render_text(doc, "", out);
    outcome.out = out.str();
  }
  return outcome;
}

}  // namespace nabt::cli
