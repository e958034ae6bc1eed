#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsemi/config.hpp"
#include "lsemi/congruence.hpp"
#include "lsemi/error.hpp"
#include "lsemi/factory.hpp"
#include "lsemi/groups.hpp"
#include "lsemi/io.hpp"
#include "lsemi/series.hpp"
#include "lsemi/subsets.hpp"

namespace lsemi::cli {

namespace {

using json = nlohmann::ordered_json;

json labels_of(const Semigroup& s, const ElemSet& set) {
  json out = json::array();
  for (int x : set.elements()) out.push_back(s.label(x));
  return out;
}

json witness_json(const Semigroup& s, const witness_pair& w) {
  return json::array({s.label(w.first), s.label(w.second)});
}

json table_json(const Semigroup& s) {
  json rows = json::array();
  for (int a = 0; a < s.order(); ++a) {
    json row = json::array();
    for (int b = 0; b < s.order(); ++b) row.push_back(s.label(s.at(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json subset_flags(const Semigroup& s, const SubsetReport& r) {
  json out;
  out["subsemigroup"] = r.subsemigroup;
  if (r.closure_witness) out["closure_witness"] = witness_json(s, *r.closure_witness);
  out["reflexive"] = r.reflexive;
  if (r.reflexive_witness) out["reflexive_witness"] = witness_json(s, *r.reflexive_witness);
  out["left_unitary"] = r.left_unitary;
  if (r.left_unitary_witness)
    out["left_unitary_witness"] = witness_json(s, *r.left_unitary_witness);
  out["right_unitary"] = r.right_unitary;
  if (r.right_unitary_witness)
    out["right_unitary_witness"] = witness_json(s, *r.right_unitary_witness);
  out["reflexive_unitary"] =
      r.subsemigroup && r.reflexive && r.left_unitary && r.right_unitary;
  return out;
}

// Reflexive unitary subsemigroups of the subsemigroup induced by `carrier`,
// translated back to parent element indices.
std::vector<ElemSet> ru_within(const Semigroup& s, const ElemSet& carrier) {
  InducedSubsemigroup sub = induced(s, carrier);
  std::vector<ElemSet> out;
  for (const ElemSet& h : enumerate_ru_subsemigroups(sub.sub)) out.push_back(sub.to_parent_set(h));
  return out;
}

LoadedSemigroup load(const std::string& path) { return realize(load_semigroup_file(path)); }

void emit(std::ostream& out, const json& rep) { out << rep.dump(2) << "\n"; }

// ---- check ----

int do_check(const std::string& path, std::ostream& out) {
  const LoadedSemigroup l = load(path);
  const Semigroup& s = l.semigroup;
  json rep;
  rep["file"] = path;
  rep["order"] = s.order();
  rep["elements"] = labels_of(s, s.universe());
  rep["left_simple"] = is_left_simple(s);
  rep["group"] = is_group(s);
  rep["left_zero"] = is_left_zero(s);
  rep["idempotents"] = labels_of(s, idempotents(s));
  json subsets = json::array();
  for (const auto& [name, members] : l.subsets) {
    json entry;
    entry["name"] = name;
    entry["members"] = labels_of(s, members);
    entry.update(subset_flags(s, subset_report(s, members)));
    subsets.push_back(std::move(entry));
  }
  rep["subsets"] = std::move(subsets);
  emit(out, rep);
  return 0;
}

// ---- subset ----

int do_subset(const std::string& path, const std::string& name, std::ostream& out) {
  const LoadedSemigroup l = load(path);
  const Semigroup& s = l.semigroup;
  const ElemSet h = l.subset(name);
  json rep;
  rep["file"] = path;
  rep["subset"] = name;
  rep["members"] = labels_of(s, h);
  rep.update(subset_flags(s, subset_report(s, h)));

  const PrincipalCongruence pc = principal_congruence(s, h);
  json cng;
  cng["class_count"] = pc.congruence.class_count;
  json classes = json::array();
  for (int c = 0; c < pc.congruence.class_count; ++c)
    classes.push_back(labels_of(s, pc.congruence.class_members(c)));
  cng["classes"] = std::move(classes);
  cng["subset_is_class"] = pc.h_class.has_value();
  if (pc.h_class) cng["subset_class"] = *pc.h_class;
  if (pc.w_class) {
    cng["residue_class"] = *pc.w_class;
    cng["residue_members"] = labels_of(s, pc.w_set);
  }
  rep["congruence"] = std::move(cng);

  const QuotientSemigroup q = quotient(s, pc.congruence);
  json qj;
  qj["order"] = q.quotient.order();
  qj["elements"] = labels_of(q.quotient, q.quotient.universe());
  qj["table"] = table_json(q.quotient);
  if (pc.h_class) {
    qj["group_with_subset_identity"] = is_group_with_identity(q, *pc.h_class);
    if (is_group_with_identity(q, *pc.h_class)) qj["group_name"] = group_name(q.quotient);
  }
  rep["quotient"] = std::move(qj);
  emit(out, rep);
  return 0;
}

// ---- enumerate ----

int do_enumerate(const std::string& path, bool with_congruences, std::ostream& out) {
  const LoadedSemigroup l = load(path);
  const Semigroup& s = l.semigroup;
  json rep;
  rep["file"] = path;
  rep["order"] = s.order();
  json ru = json::array();
  for (const ElemSet& h : enumerate_ru_subsemigroups(s)) ru.push_back(labels_of(s, h));
  rep["reflexive_unitary_subsemigroups"] = std::move(ru);
  json un = json::array();
  for (const ElemSet& h : enumerate_unitary_subsemigroups(s)) un.push_back(labels_of(s, h));
  rep["unitary_subsemigroups"] = std::move(un);
  rep["subsemigroup_count"] = enumerate_subsemigroups(s).size();
  if (with_congruences) {
    json cs = json::array();
    for (const Congruence& c : enumerate_congruences(s)) {
      json classes = json::array();
      for (int k = 0; k < c.class_count; ++k) classes.push_back(labels_of(s, c.class_members(k)));
      cs.push_back(std::move(classes));
    }
    rep["congruences"] = std::move(cs);
  }
  emit(out, rep);
  return 0;
}

// ---- generate ----

int do_generate(const std::string& spec, const std::string& out_path, bool with_ru,
                std::ostream& out) {
  const std::optional<Semigroup> s = find_named_instance(spec);
  if (!s) {
    fail(errc::invalid_params,
         "unknown construction \"" + spec +
             "\"; expected a catalog group, L<m>x<group> or double(<name>)");
  }
  std::vector<std::pair<std::string, ElemSet>> subsets;
  if (with_ru) {
    const auto rus = enumerate_ru_subsemigroups(*s);
    for (std::size_t i = 0; i < rus.size(); ++i)
      subsets.emplace_back("R" + std::to_string(i), rus[i]);
  }
  const SemigroupFile f = to_file(*s, subsets);
  const bool as_json = out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json";
  const std::string text = as_json ? serialize_semigroup_json(f) : serialize_semigroup_text(f);
  if (out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) fail(errc::invalid_params, "cannot write \"" + out_path + "\"");
  file << text;
  json rep;
  rep["written"] = out_path;
  rep["name"] = spec;
  rep["order"] = s->order();
  rep["subsets"] = subsets.size();
  emit(out, rep);
  return 0;
}

// ---- series ----

json series_terms(const NormalSeries& ns) {
  json terms = json::array();
  for (const ElemSet& t : ns.chain) terms.push_back(labels_of(ns.parent, t));
  return terms;
}

json factor_summary(const NormalSeries& ns) {
  json out = json::array();
  const SeriesFactors f = factors(ns);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    json fj;
    fj["order"] = f.factors[i].quotient.order();
    fj["group_name"] = group_name(f.factors[i].quotient);
    out.push_back(std::move(fj));
  }
  return out;
}

int do_series(const std::string& path, const std::string& action,
              const std::vector<std::string>& terms, const std::string& left,
              const std::string& right, bool all, int max_series, std::ostream& out) {
  const LoadedSemigroup l = load(path);
  const Semigroup& s = l.semigroup;
  const auto chain_of = [&](const std::vector<std::string>& names) {
    std::vector<ElemSet> chain{ElemSet::full(s.order())};
    for (const std::string& n : names) chain.push_back(l.subset(n));
    return chain;
  };
  const auto split = [](const std::string& joined) {
    std::vector<std::string> parts;
    std::stringstream ss(joined);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) parts.push_back(part);
    }
    return parts;
  };

  json rep;
  rep["file"] = path;
  rep["action"] = action;
  if (action == "validate" || action == "compose") {
    const NormalSeries ns = validate_series(s, chain_of(terms));
    rep["series"] = series_terms(ns);
    rep["length"] = ns.length();
    rep["factors"] = factor_summary(ns);
    if (action == "compose") {
      const CompositionCheck c = is_composition_series(ns);
      rep["composition_series"] = c.ok;
      if (!c.ok) rep["reason"] = c.reason;
    }
  } else if (action == "find") {
    const auto found = find_composition_series(s, all);
    json list = json::array();
    for (const NormalSeries& ns : found) {
      json e;
      e["series"] = series_terms(ns);
      e["factors"] = factor_summary(ns);
      list.push_back(std::move(e));
    }
    rep["count"] = found.size();
    rep["series"] = std::move(list);
  } else if (action == "enumerate") {
    const auto found = enumerate_normal_series(s, static_cast<std::size_t>(max_series));
    json list = json::array();
    for (const NormalSeries& ns : found) list.push_back(series_terms(ns));
    rep["count"] = found.size();
    rep["series"] = std::move(list);
  } else if (action == "jordan-holder") {
    const JordanHolderReport jh = jordan_holder_check(s);
    rep["series_count"] = jh.series.size();
    rep["length"] = jh.length;
    rep["factor_names"] = jh.factor_names;
    rep["all_isomorphic"] = jh.all_isomorphic;
    json list = json::array();
    for (const NormalSeries& ns : jh.series) list.push_back(series_terms(ns));
    rep["series"] = std::move(list);
  } else if (action == "refine") {
    const NormalSeries a = validate_series(s, chain_of(split(left)));
    const NormalSeries b = validate_series(s, chain_of(split(right)));
    const SchreierResult r = schreier_refine(a, b);
    rep["left"] = series_terms(r.refined_a);
    rep["right"] = series_terms(r.refined_b);
    rep["left_factors"] = factor_summary(r.refined_a);
    rep["right_factors"] = factor_summary(r.refined_b);
    rep["pairing"] = r.iso.permutation;
  }
  emit(out, rep);
  return 0;
}

// ---- certify ----

struct CertifyCounters {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

void run_check(json& checks, CertifyCounters& counters, const char* key,
               const std::function<void()>& body) {
  try {
    body();
    checks[key] = "pass";
    ++counters.passed;
  } catch (const Error& e) {
    checks[key] = std::string("fail: ") + e.what();
    ++counters.failed;
  }
}

void certify_member(const Semigroup& s, bool deep, json& checks, CertifyCounters& counters) {
  const auto rus = enumerate_ru_subsemigroups(s);

  run_check(checks, counters, "right_unitary_left_simple", [&] {
    for (const ElemSet& r : enumerate_right_unitary_subsemigroups(s)) {
      if (!is_left_simple(induced(s, r).sub)) {
        fail(errc::theorem_check_failed,
             "right unitary subsemigroup " + s.label_set(r) + " is not left simple");
      }
    }
  });

  run_check(checks, counters, "group_quotients", [&] {
    for (const ElemSet& h : rus) {
      const PrincipalCongruence pc = principal_congruence(s, h);
      if (!pc.h_class) {
        fail(errc::theorem_check_failed, s.label_set(h) + " is not a full congruence class");
      }
      if (!pc.w_set.is_empty()) {
        fail(errc::theorem_check_failed,
             "left simple semigroup has a non-empty residue class for " + s.label_set(h));
      }
      if (!is_group_with_identity(quotient(s, pc.congruence), *pc.h_class)) {
        fail(errc::theorem_check_failed,
             "quotient modulo " + s.label_set(h) + " is not a group with identity class H");
      }
    }
  });

  run_check(checks, counters, "subgroup_correspondence", [&] {
    for (const ElemSet& h : rus) correspondence_check(s, h);
  });

  const auto subsemigroups = enumerate_subsemigroups(s);
  run_check(checks, counters, "intersection_isomorphism", [&] {
    for (const ElemSet& h : rus) {
      for (const ElemSet& n : subsemigroups) {
        if ((h & n).is_empty()) continue;
        intersection_iso(s, h, n);
      }
    }
  });

  const auto unitary = enumerate_unitary_subsemigroups(s);
  run_check(checks, counters, "joins", [&] {
    for (const ElemSet& h : rus) {
      for (const ElemSet& n : unitary) {
        if ((h & n).is_empty()) continue;
        join_hn(s, h, n);
      }
    }
  });

  run_check(checks, counters, "butterfly", [&] {
    int budget = 200;
    for (const ElemSet& a : unitary) {
      const auto ru_a = ru_within(s, a);
      for (const ElemSet& b : unitary) {
        if ((a & b).is_empty()) continue;
        for (const ElemSet& n : ru_a) {
          for (const ElemSet& m : ru_within(s, b)) {
            if (budget-- <= 0) return;
            zassenhaus(s, a, b, n, m);
          }
        }
      }
    }
  });

  const auto series = enumerate_normal_series(s, 20);
  run_check(checks, counters, "common_tail", [&] {
    int budget = 200;
    for (std::size_t i = 0; i < series.size(); ++i) {
      for (std::size_t j = i + 1; j < series.size(); ++j) {
        if (budget-- <= 0) return;
        const auto [ra, rb] = common_tail_refine(series[i], series[j]);
        if (!(ra.chain.back() == rb.chain.back())) {
          fail(errc::theorem_check_failed, "extended series do not share a final term");
        }
      }
    }
  });

  run_check(checks, counters, "refinement", [&] {
    int budget = 200;
    for (std::size_t i = 0; i < series.size(); ++i) {
      for (std::size_t j = i + 1; j < series.size(); ++j) {
        if (budget-- <= 0) return;
        const SchreierResult r = schreier_refine(series[i], series[j]);
        if (r.refined_a.chain.size() != r.refined_b.chain.size()) {
          fail(errc::theorem_check_failed, "refined series have different lengths");
        }
      }
    }
  });

  run_check(checks, counters, "factor_uniqueness", [&] {
    const JordanHolderReport jh = jordan_holder_check(s);
    if (!jh.all_isomorphic) {
      fail(errc::theorem_check_failed, "composition factors differ between series");
    }
  });

  run_check(checks, counters, "left_zero_criterion", [&] {
    const bool no_proper = rus.size() == 1;
    if (no_proper != is_left_zero(s)) {
      fail(errc::theorem_check_failed,
           "absence of proper reflexive unitary subsemigroups must characterize left zero "
           "semigroups");
    }
  });

  if (!deep) {
    checks["congruence_converse"] = "skipped (enable with --deep)";
    ++counters.skipped;
  } else if (s.order() > 8) {
    checks["congruence_converse"] = "skipped (order above the congruence enumeration bound 8)";
    ++counters.skipped;
  } else {
    run_check(checks, counters, "congruence_converse", [&] {
      for (const Congruence& c : enumerate_congruences(s)) {
        const QuotientSemigroup q = quotient(s, c);
        bool group = false;
        for (int cls = 0; cls < c.class_count && !group; ++cls)
          group = is_group_with_identity(q, cls);
        if (!group) continue;
        bool matched = false;
        for (const ElemSet& h : rus) {
          if (principal_congruence(s, h).congruence == c) {
            matched = true;
            break;
          }
        }
        if (!matched) {
          fail(errc::theorem_check_failed,
               "a group congruence does not arise from any reflexive unitary subsemigroup");
        }
      }
    });
  }
}

int do_certify(int max_order, bool golden, bool deep, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  json rep;
  rep["max_order"] = max_order;
  rep["deep"] = deep;

  CorpusSpec spec;
  spec.max_order = max_order;
  const auto corpus = build_corpus(spec);
  CertifyCounters counters;

  json members = json::array();
  for (const auto& [name, s] : corpus) {
    json entry;
    entry["name"] = name;
    entry["order"] = s.order();
    json checks;
    certify_member(s, deep, checks, counters);
    entry["checks"] = std::move(checks);
    members.push_back(std::move(entry));
  }
  rep["members"] = std::move(members);

  json cons;
  const auto construction = [&](const std::string& key, const std::function<bool()>& body) {
    try {
      if (body()) {
        cons[key] = "pass";
        ++counters.passed;
      } else {
        cons[key] = "fail";
        ++counters.failed;
      }
    } catch (const Error& e) {
      cons[key] = std::string("fail: ") + e.what();
      ++counters.failed;
    }
  };
  construction("double(Z2) isomorphic to Klein", [] {
    return is_isomorphic(double_of(find_named_instance("Z2").value()),
                         find_named_instance("Klein").value())
        .has_value();
  });
  construction("double(L2) isomorphic to L2xZ2", [] {
    return is_isomorphic(double_of(left_zero(2)), find_named_instance("L2xZ2").value())
        .has_value();
  });
  for (const auto& [name, s] : corpus) {
    if (s.order() > 6 || s.order() * 2 > max_order) continue;
    construction("double(" + name + ") isomorphic to " + name + " x Z2", [&] {
      return is_isomorphic(double_of(s),
                           direct_product(s, find_named_instance("Z2").value()))
          .has_value();
    });
  }
  rep["constructions"] = std::move(cons);

  json summary;
  summary["members"] = corpus.size();
  summary["checks_passed"] = counters.passed;
  summary["checks_failed"] = counters.failed;
  summary["checks_skipped"] = counters.skipped;
  rep["summary"] = std::move(summary);
  rep["result"] = counters.failed == 0 ? "pass" : "fail";
  if (!golden) {
    rep["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  }
  emit(out, rep);
  return counters.failed == 0 ? 0 : 3;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"reflexive unitary subsemigroups of finite left simple semigroups"};
  app.require_subcommand(1);

  std::string path, subset_name, spec, out_path, action, left, right;
  bool with_congruences = false, with_ru = false, all = false;
  bool golden = false, deep = false;
  int max_series = 100;
  int certify_max_order = 12;
  std::vector<std::string> terms;

  CLI::App* check = app.add_subcommand("check", "validate a semigroup file and report structure");
  check->add_option("file", path, "semigroup file (text or JSON)")->required();

  CLI::App* subset =
      app.add_subcommand("subset", "analyze one named subset: predicates, congruence, quotient");
  subset->add_option("file", path)->required();
  subset->add_option("name", subset_name, "subset name from the file")->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list distinguished subsemigroups (and congruences)");
  enumerate->add_option("file", path)->required();
  enumerate->add_flag("--congruences", with_congruences, "also enumerate all congruences");

  CLI::App* generate = app.add_subcommand("generate", "emit a named construction as a file");
  generate->add_option("name", spec, "catalog group, L<m>x<group> or double(<name>)")->required();
  generate->add_option("-o,--output", out_path, "output path (.json for JSON; default stdout)");
  generate->add_flag("--with-ru", with_ru,
                     "include the reflexive unitary subsemigroups as named subsets");

  CLI::App* series = app.add_subcommand("series", "work with descending series of subsemigroups");
  series->add_option("file", path)->required();
  series
      ->add_option("verb", action,
                   "validate | compose | find | enumerate | jordan-holder | refine")
      ->required()
      ->check(CLI::IsMember(
          {"validate", "compose", "find", "enumerate", "jordan-holder", "refine"}));
  series->add_option("terms", terms, "subset names, descending (the full set is implicit)");
  series->add_option("--left", left, "comma separated subset names (refine)");
  series->add_option("--right", right, "comma separated subset names (refine)");
  series->add_flag("--all", all, "find: report every composition series");
  series->add_option("--max", max_series, "enumerate: series cap")->check(CLI::PositiveNumber);

  CLI::App* certify = app.add_subcommand(
      "certify", "run every certified conclusion over the built-in corpus");
  certify->add_option("--max-order", certify_max_order, "largest corpus member order")
      ->check(CLI::Range(1, 24));
  certify->add_flag("--golden", golden, "deterministic output: omit timing");
  certify->add_flag("--deep", deep,
                    "also check that group congruences arise from the construction (slow)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*check) return do_check(path, out);
    if (*subset) return do_subset(path, subset_name, out);
    if (*enumerate) return do_enumerate(path, with_congruences, out);
    if (*generate) return do_generate(spec, out_path, with_ru, out);
    if (*series) return do_series(path, action, terms, left, right, all, max_series, out);
    if (*certify) return do_certify(certify_max_order, golden, deep, out);
  } catch (const Error& e) {
    const std::string prefix = std::string(errc_name(e.code())) + ": ";
    std::string msg = e.what();
    if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
    err << "error (" << errc_name(e.code()) << "): " << msg << "\n";
    return errc_category(e.code());
  }
  return 0;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace lsemi::cli
