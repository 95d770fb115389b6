#include "cli.hpp"

#include <CLI11.hpp>

#include "lsb/breadth.hpp"
#include "lsb/catalog.hpp"
#include "lsb/findings.hpp"
#include "lsb/invariants.hpp"
#include "lsb/laws.hpp"
#include "lsb/lsa_io.hpp"
#include "lsb/search.hpp"

namespace lsb::cli {

namespace {

struct Options {
  bool machine = false;
  int jobs = 0;
  std::string findings = "findings.log";
};

Field parse_field(const std::string& s) {
  if (s == "rational" || s == "Q" || s == "q") return Field::rationals();
  return Field::prime(std::stoll(s));
}

GradedDim parse_dims(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw PreconditionError("expected a dimension pair R,S, got '" + s + "'");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

void write_output(const LieSuperAlgebra& L, const std::string& out_file, std::ostream& out) {
  if (out_file.empty())
    out << serialize_lsa(L);
  else
    save_lsa_file(L, out_file);
}

std::string describe_oracle(const LieSuperAlgebra& L, const OracleReport& o) {
  std::string s = "total=" + std::to_string(o.total) + " pairs=" + format_pairs(o.pairs);
  if (o.witness) s += " witness=" + format_element(L, *o.witness);
  return s;
}

std::string describe_classifier(const BreadthReport& c) {
  std::string s = "total=" + std::to_string(c.total) + (c.at_least ? "+" : "");
  if (!c.at_least) s += " pair=" + to_string(*c.pairs.begin());
  s += " case=" + c.classifier_case.value_or("?");
  if (c.caveat) s += " caveat=" + *c.caveat;
  return s;
}

FindingRecord disagreement_record(const LieSuperAlgebra& L, const CrossCheckResult& cc) {
  FindingRecord rec;
  rec.kind = "cross-check-disagree";
  rec.fields = {{"field", to_string(L.field())},
                {"oracle", describe_oracle(L, cc.oracle)},
                {"classifier", describe_classifier(cc.classifier)},
                {"details", cc.details}};
  rec.algebra_lsa = serialize_lsa(L);
  return rec;
}

int cmd_verify(const std::string& file, const Options& opt, std::ostream& out) {
  LieSuperAlgebra L = [&] {
    try {
      return load_lsa_file(file);
    } catch (const AxiomError& e) {
      const AxiomViolation& v = e.violation();
      if (opt.machine) {
        out << "ok=false\n"
            << "axiom=" << to_string(v.axiom) << "\n"
            << "at=" << v.i << "," << v.j << "," << v.k << "\n";
      } else {
        out << "axioms: violated (" << to_string(v.axiom) << ") at (" << v.i << "," << v.j << ","
            << v.k << "): " << v.detail << "\n";
      }
      throw;
    }
  }();
  NilpotencyReport nil = lower_central_series(L);
  if (opt.machine) {
    out << "ok=true\n"
        << "nilpotent=" << (nil.nilpotent ? "true" : "false") << "\n";
    if (nil.nilpotent) out << "class=" << *nil.nilpotency_class << "\n";
  } else {
    out << "axioms: ok\n"
        << "nilpotent: " << (nil.nilpotent ? "true" : "false");
    if (nil.nilpotent) out << " (class " << *nil.nilpotency_class << ")";
    out << "\n";
  }
  return 0;
}

int cmd_invariants(const std::string& file, const Options& opt, std::ostream& out) {
  LieSuperAlgebra L = load_lsa_file(file);
  InvariantProfile p = invariant_profile(L);
  NilpotencyReport nil = lower_central_series(L);
  if (opt.machine) {
    out << "dims=" << to_string(L.dims()) << "\n"
        << "derived=" << to_string(p.derived_dims) << "\n"
        << "center=" << to_string(p.center_dims) << "\n"
        << "quotient=" << to_string(p.quotient_center_dims) << "\n"
        << "derived_split=" << p.derived_split[0] << "," << p.derived_split[1] << ","
        << p.derived_split[2] << "\n"
        << "odd_square_vanishes=" << (p.odd_square_vanishes ? "true" : "false") << "\n"
        << "nilpotent=" << (nil.nilpotent ? "true" : "false") << "\n";
    if (nil.nilpotent) out << "class=" << *nil.nilpotency_class << "\n";
    return 0;
  }
  out << "dims: " << to_string(L.dims()) << "\n";
  out << "derived [L,L]: " << to_string(p.derived_dims) << "\n";
  out << "center Z(L): " << to_string(p.center_dims) << "\n";
  out << "quotient L/Z(L): " << to_string(p.quotient_center_dims) << "\n";
  out << "derived split dim[L0,L0]=" << p.derived_split[0] << " dim[L1,L1]=" << p.derived_split[1]
      << " dim[L0,L1]=" << p.derived_split[2] << "\n";
  out << "odd squares vanish: " << (p.odd_square_vanishes ? "true" : "false") << "\n";
  out << "nilpotent: " << (nil.nilpotent ? "true" : "false");
  if (nil.nilpotent) out << " (class " << *nil.nilpotency_class << ")";
  out << "\n";
  return 0;
}

int cmd_breadth(const std::string& file, const std::string& method, const Options& opt,
                std::ostream& out) {
  LieSuperAlgebra L = load_lsa_file(file);
  OracleOptions oopt;
  oopt.jobs = opt.jobs;

  if (method == "bruteforce") {
    OracleReport o = breadth_bruteforce(L, oopt);
    if (opt.machine) {
      out << "method=bruteforce\n"
          << "total=" << o.total << "\n"
          << "pairs=" << format_pairs(o.pairs) << "\n";
      if (o.pairs.size() == 1) out << "pair=" << to_string(*o.pairs.begin()) << "\n";
      out << "witness=" << format_element(L, *o.witness) << "\n";
    } else {
      out << "oracle: " << describe_oracle(L, o) << "\n";
    }
    return 0;
  }
  if (method == "classify") {
    BreadthReport c = breadth_classify(L);
    if (opt.machine) {
      out << "method=classify\n"
          << "total=" << c.total << "\n"
          << "at_least_three=" << (c.at_least ? "true" : "false") << "\n";
      if (!c.at_least) out << "pair=" << to_string(*c.pairs.begin()) << "\n";
      out << "case=" << c.classifier_case.value_or("?") << "\n";
      if (c.caveat) out << "caveat=" << *c.caveat << "\n";
    } else {
      out << "classifier: " << describe_classifier(c) << "\n";
    }
    return 0;
  }

  CrossCheckResult cc = cross_check(L, oopt);
  if (opt.machine) {
    out << "method=both\n"
        << "total=" << cc.oracle.total << "\n"
        << "pairs=" << format_pairs(cc.oracle.pairs) << "\n";
    if (cc.oracle.pairs.size() == 1) out << "pair=" << to_string(*cc.oracle.pairs.begin()) << "\n";
    out << "witness=" << format_element(L, *cc.oracle.witness) << "\n"
        << "oracle_total=" << cc.oracle.total << "\n"
        << "classifier_total=" << cc.classifier.total << "\n"
        << "classifier_at_least_three=" << (cc.classifier.at_least ? "true" : "false") << "\n"
        << "classifier_case=" << cc.classifier.classifier_case.value_or("?") << "\n";
    if (cc.classifier.caveat) out << "classifier_caveat=" << *cc.classifier.caveat << "\n";
    out << "agree=" << (cc.agree ? "true" : "false") << "\n";
  } else {
    out << "oracle: " << describe_oracle(L, cc.oracle) << "\n";
    out << "classifier: " << describe_classifier(cc.classifier) << "\n";
    out << "total=" << cc.oracle.total;
    if (cc.oracle.pairs.size() == 1)
      out << " pair=" << to_string(*cc.oracle.pairs.begin());
    else
      out << " pairs=" << format_pairs(cc.oracle.pairs);
    out << " agree=" << (cc.agree ? "true" : "false") << "\n";
  }
  if (!cc.agree) {
    append_finding(opt.findings, disagreement_record(L, cc));
    return 1;
  }
  return 0;
}

int cmd_maximal_abelian(const std::string& file, const Options& opt, std::ostream& out) {
  LieSuperAlgebra L = load_lsa_file(file);
  MaximalAbelianResult res = maximal_abelian_ideals(L);
  if (opt.machine) {
    out << "count=" << res.ideals.size() << "\n"
        << "all_confirmed=" << (res.all_confirmed ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < res.ideals.size(); ++i) {
      const Subspace& s = res.ideals[i].space;
      out << "ideal" << i << "_dims="
          << (s.graded() ? to_string(*s.graded()) : std::string("ungraded")) << "\n";
      std::string rows;
      for (std::size_t r = 0; r < s.dim(); ++r) {
        if (r) rows += "; ";
        rows += format_element(L, s.basis_row(r));
      }
      out << "ideal" << i << "=" << rows << "\n";
      out << "ideal" << i << "_confirmed=" << (res.ideals[i].confirmed ? "true" : "false")
          << "\n";
    }
    return 0;
  }
  out << "maximal abelian ideals: " << res.ideals.size() << "\n";
  for (std::size_t i = 0; i < res.ideals.size(); ++i) {
    const Subspace& s = res.ideals[i].space;
    out << "A#" << i << ": dims "
        << (s.graded() ? to_string(*s.graded()) : std::string("ungraded")) << " span{";
    for (std::size_t r = 0; r < s.dim(); ++r)
      out << (r ? ", " : "") << format_element(L, s.basis_row(r));
    out << "}" << (res.ideals[i].confirmed ? "" : " [unconfirmed-maximality]") << "\n";
  }
  return 0;
}

int cmd_laws(const std::string& file, const std::string& law, const Options& opt,
             std::ostream& out) {
  LieSuperAlgebra L = load_lsa_file(file);
  LawContext ctx(L, opt.jobs);

  auto report_failure = [&](const std::string& id, const LawVerdict& v) {
    FindingRecord rec;
    rec.kind = "law-fail";
    rec.fields = {{"law", id}, {"field", to_string(L.field())}};
    if (v.witness) rec.fields.push_back({"witness", *v.witness});
    try {
      rec.fields.push_back({"oracle", describe_oracle(L, ctx.oracle())});
      rec.fields.push_back({"classifier", describe_classifier(breadth_classify(L))});
    } catch (const Error&) {
      // breadth reports are attached on a best-effort basis
    }
    rec.algebra_lsa = serialize_lsa(L);
    append_finding(opt.findings, rec);
  };

  if (law != "all") {
    if (!is_law_id(law)) throw PreconditionError("unknown law id: " + law);
    LawVerdict v = check_law(ctx, law);
    if (opt.machine) {
      out << "law=" << law << "\n"
          << "outcome=" << to_string(v.outcome) << "\n";
      if (v.witness) out << "witness=" << *v.witness << "\n";
    } else {
      out << law << ": " << to_string(v.outcome) << "\n";
      for (const std::string& line : v.hypotheses_log) out << "  " << line << "\n";
      if (v.witness) out << "  witness: " << *v.witness << "\n";
    }
    if (v.outcome == LawOutcome::fails) {
      report_failure(law, v);
      return 1;
    }
    return 0;
  }

  bool any_fail = false;
  for (const LawInfo& info : law_registry()) {
    try {
      LawVerdict v = check_law(ctx, info.id);
      if (opt.machine)
        out << info.id << "=" << to_string(v.outcome) << "\n";
      else {
        out << info.id << ": " << to_string(v.outcome);
        if (v.witness) out << "  (" << *v.witness << ")";
        out << "\n";
      }
      if (v.outcome == LawOutcome::fails) {
        any_fail = true;
        report_failure(info.id, v);
      }
    } catch (const UnsupportedFieldError&) {
      if (opt.machine)
        out << info.id << "=Unsupported\n";
      else
        out << info.id << ": Unsupported (needs a prime field)\n";
    }
  }
  return any_fail ? 1 : 0;
}

int cmd_catalog(const std::string& name, const CatalogParams& params, const std::string& field,
                const std::string& out_file, std::ostream& out) {
  LieSuperAlgebra L = catalog_build(parse_field(field), name, params);
  write_output(L, out_file, out);
  return 0;
}

int cmd_random(std::uint64_t seed, int even, int odd, int ce, int co, const std::string& field,
               const std::string& out_file, std::ostream& out) {
  LieSuperAlgebra L = random_two_step(seed, {even, odd}, {ce, co}, parse_field(field));
  write_output(L, out_file, out);
  return 0;
}

int cmd_search(const std::string& derived, const std::string& quotient, bool odd_square_zero,
               const std::string& field, int max_total, const Options& opt, std::ostream& out) {
  SearchConstraints c;
  c.derived = parse_dims(derived);
  c.quotient = parse_dims(quotient);
  if (odd_square_zero) c.odd_square = true;
  c.max_total = max_total;
  Field f = parse_field(field);
  SearchOutcome res = inhabitation_search(f, c);

  FindingRecord rec;
  rec.kind = "search";
  rec.fields = {{"field", to_string(f)},
                {"derived", to_string(c.derived)},
                {"quotient", to_string(c.quotient)},
                {"odd_square_zero", odd_square_zero ? "true" : "false"},
                {"max_total", std::to_string(max_total)},
                {"outcome", res.witness ? "Witness" : "Empty"},
                {"candidates", std::to_string(res.candidates)},
                {"splits", std::to_string(res.splits)}};
  if (res.witness) {
    rec.fields.push_back(
        {"cross_check", res.witness_check && res.witness_check->agree ? "Agree" : "Disagree"});
    rec.algebra_lsa = serialize_lsa(*res.witness);
  }
  append_finding(opt.findings, rec);

  if (opt.machine) {
    out << "outcome=" << (res.witness ? "Witness" : "Empty") << "\n"
        << "candidates=" << res.candidates << "\n"
        << "splits=" << res.splits << "\n";
  } else {
    out << "outcome: " << (res.witness ? "Witness" : "Empty") << " (" << res.candidates
        << " candidates over " << res.splits << " dimension splits)\n";
  }
  if (res.witness) out << serialize_lsa(*res.witness);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact structure-constant toolkit for nilpotent Lie superalgebras"};
  app.name("lsb");
  app.fallthrough(true);  // global flags may follow the subcommand
  Options opt;
  app.add_flag("--machine", opt.machine, "emit a stable key=value block");
  app.add_option("--jobs", opt.jobs, "worker threads for enumeration (0 = all cores)");
  app.add_option("--findings", opt.findings, "findings log path (default findings.log)");
  app.require_subcommand(1);

  std::string file, method = "both", law = "all", name, field = "5", out_file;
  std::string derived, quotient;
  CatalogParams params;
  std::uint64_t seed = 0;
  int even = 0, odd = 0, ce = 0, co = 0, max_total = 6;
  bool odd_square_zero = false;

  CLI::App* verify = app.add_subcommand("verify", "check the axioms and nilpotency of a file");
  verify->add_option("file", file)->required();

  CLI::App* invariants = app.add_subcommand("invariants", "print the invariant profile");
  invariants->add_option("file", file)->required();

  CLI::App* breadth = app.add_subcommand("breadth", "superbreadth via oracle and/or classifier");
  breadth->add_option("file", file)->required();
  breadth->add_option("--method", method)
      ->check(CLI::IsMember({"bruteforce", "classify", "both"}));

  CLI::App* maximal = app.add_subcommand("maximal-abelian", "enumerate maximal abelian ideals");
  maximal->add_option("file", file)->required();

  CLI::App* laws = app.add_subcommand("laws", "evaluate registry laws");
  laws->add_option("file", file)->required();
  laws->add_option("--law", law, "law id or 'all'");

  CLI::App* catalog = app.add_subcommand("catalog", "emit a catalog algebra (.lsa)");
  catalog->add_option("name", name, "A | He | Ho | B1..B5")->required();
  catalog->add_option("--m", params.m);
  catalog->add_option("--n", params.n);
  catalog->add_option("--k0", params.k0);
  catalog->add_option("--k1", params.k1);
  catalog->add_option("--field", field);
  catalog->add_option("-o,--output", out_file);

  CLI::App* random = app.add_subcommand("random", "seeded random 2-step central extension");
  random->add_option("--seed", seed)->required();
  random->add_option("--even", even)->required();
  random->add_option("--odd", odd)->required();
  random->add_option("--center-even", ce)->required();
  random->add_option("--center-odd", co)->required();
  random->add_option("--field", field);
  random->add_option("-o,--output", out_file);

  CLI::App* search = app.add_subcommand("search", "inhabitation search over 2-step extensions");
  search->add_option("--derived", derived, "target derived dims R,S")->required();
  search->add_option("--quotient", quotient, "target L/Z dims R,S")->required();
  search->add_flag("--odd-square-zero", odd_square_zero);
  search->add_option("--field", field);
  search->add_option("--max-total", max_total);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(file, opt, out);
    if (*invariants) return cmd_invariants(file, opt, out);
    if (*breadth) return cmd_breadth(file, method, opt, out);
    if (*maximal) return cmd_maximal_abelian(file, opt, out);
    if (*laws) return cmd_laws(file, law, opt, out);
    if (*catalog) return cmd_catalog(name, params, field, out_file, out);
    if (*random) return cmd_random(seed, even, odd, ce, co, field, out_file, out);
    if (*search)
      return cmd_search(derived, quotient, odd_square_zero, field, max_total, opt, out);
  } catch (const AxiomError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const UnsupportedFieldError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const LsaSyntaxError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace lsb::cli
