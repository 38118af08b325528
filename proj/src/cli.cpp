#include "groupspec/cli.hpp"

#include <chrono>
#include <optional>

#include <CLI11.hpp>

#include "groupspec/catalog.hpp"
#include "groupspec/error.hpp"
#include "groupspec/io.hpp"
#include "groupspec/lie/io.hpp"
#include "groupspec/sheaf.hpp"
#include "groupspec/spectrum.hpp"
#include "groupspec/verify.hpp"

namespace groupspec {

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr std::size_t kMaxListedTuples = 1000;

struct Options {
  std::string command;
  std::string g, h, embed, in, dot;
  std::string coeff = "z";
  std::string suite = "all";
  std::optional<std::size_t> maxOrder;
  std::uint64_t seed = 0;
  bool noTiming = false;
};

struct Report {
  Json results;
  Json notes = Json::array();
  Json timing = Json::object();
  bool failed = false;  // a checked identity failed
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Caps make_caps(const Options& o) {
  Caps c = caps_from_environment();
  if (o.maxOrder && o.command != "verify") c.maxGroupOrder = *o.maxOrder;
  c.seed = o.seed;
  return c;
}

GGroup ggroup_input(const Options& o, const Caps& caps) {
  if (!o.in.empty()) return ggroup_from_json(read_json_file(o.in), caps);
  if (o.g.empty() || o.h.empty()) throw InputError("need --g and --h, or --in FILE");
  return build_ggroup(o.g, o.h, o.embed.empty() ? "identity" : o.embed, caps);
}

std::vector<std::string> point_labels(const Spectrum& s) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < s.size(); ++i)
    labels.push_back("P" + std::to_string(i) + " |P|=" + std::to_string(s.points[i].subgroup.order()));
  return labels;
}

void maybe_dot(const Options& o, const std::string& name, const std::vector<std::string>& labels,
               const std::vector<std::pair<std::size_t, std::size_t>>& below, Report& r) {
  if (o.dot.empty()) return;
  write_text_file(o.dot, hasse_dot(name, labels, below));
  r.results["dot"] = o.dot;
}

void cmd_spec(const Options& o, const Caps& caps, Report& r) {
  Spectrum s;
  if (o.in.empty() && o.g.empty() && !o.h.empty()) {
    s = absolute_spectrum(build_group(o.h, caps), caps);
    r.notes.push_back("no --g given: absolute spectrum over proper normal subgroups");
  } else {
    s = spectrum(ggroup_input(o, caps), caps);
  }
  r.results = spectrum_json(s);
  maybe_dot(o, "spectrum", point_labels(s), s.specialization, r);
}

void cmd_topology(const Options& o, const Caps& caps, Report& r) {
  const Spectrum s = o.in.empty() && o.g.empty() && !o.h.empty() ? absolute_spectrum(build_group(o.h, caps), caps)
                                                                    : spectrum(ggroup_input(o, caps), caps);
  const FiniteTopology t = s.topology();
  r.results["size"] = s.size();
  Json pts = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
    pts.push_back({{"index", i}, {"order", s.points[i].subgroup.order()}, {"generators", subgroup_json(s.points[i].subgroup)["generators"]}});
  r.results["points"] = std::move(pts);
  r.results["topology"] = topology_json(t);
  r.results["axiomsHold"] = satisfies_closed_set_axioms(t.pointCount, t.closedSets);
  r.results["specialization"] = s.specialization;
  maybe_dot(o, "specialization", point_labels(s), s.specialization, r);
}

void cmd_domain(const Options& o, const Caps& caps, Report& r) {
  const GGroup x = ggroup_input(o, caps);
  r.results = domain_json(x, check_domain(x));
}

void cmd_sheaf(const Options& o, const Caps& caps, Report& r) {
  const Coeff coeff = Coeff::parse(o.coeff);
  const Spectrum s = spectrum(ggroup_input(o, caps), caps);
  const PointSpace x = point_space(s);
  Json pts = Json::array();
  for (std::size_t p = 0; p < x.size(); ++p)
    pts.push_back({{"index", p},
                   {"order", x.points[p].order()},
                   {"quotientOrder", x.quotients[p].group.order()},
                   {"minOpen", bitset_json(x.topology.minOpen[p])}});
  r.results["coefficients"] = coeff.name();
  r.results["points"] = std::move(pts);
  Json opens = Json::array();
  for (const auto& u : x.topology.open_sets()) {
    Json e;
    e["open"] = bitset_json(u);
    e["lSections"] = l_sections(x, u, caps).size();
    // global elements 1_h for the generators of H, checked by solving
    std::size_t ok = 0, tried = 0;
    for (Elem h : x.ambient.generators()) {
      const ASection a = a_section_of(x, u, ring_basis(coeff, h));
      ok += is_a_section(x, coeff, u, a.values);
      ++tried;
    }
    const ASection unit = a_section_of(x, u, ring_basis(coeff, kIdentity));
    ok += is_a_section(x, coeff, u, unit.values);
    ++tried;
    e["aGlobalFamiliesChecked"] = tried;
    e["aGlobalFamiliesAccepted"] = ok;
    if (ok != tried) r.failed = true;
    opens.push_back(std::move(e));
  }
  r.results["opens"] = std::move(opens);
}

template <class S>
void lie_report(const lie::SLie<S>& x, const Options& o, const Caps& caps, Report& r) {
  const auto sp = lie::spec_lie(x, caps);
  r.results = lie::lie_spectrum_json(x, sp);
  const auto d = lie::check_domain(x, caps);
  Json dom;
  dom["isDomain"] = d.isDomain;
  if (d.zeroDivisor) {
    dom["zeroDivisor"] = lie::vector_json<S>(*d.zeroDivisor);
    dom["witness"] = lie::vector_json<S>(*d.witness);
  }
  dom["pointsScanned"] = d.pointsScanned;
  r.results["ambientDomain"] = std::move(dom);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < sp.size(); ++i) labels.push_back("P" + std::to_string(i) + " dim " + std::to_string(sp.point(i).dim()));
  maybe_dot(o, "lie_spectrum", labels, sp.specialization, r);
}

void cmd_lie(const Options& o, const Caps& caps, Report& r) {
  Json in;
  if (!o.in.empty()) {
    in = read_json_file(o.in);
  } else {
    if (o.g.empty() || o.h.empty()) throw InputError("need --g and --h (lie:... names), or --in FILE");
    const auto gn = lie::parse_lie_name(o.g), hn = lie::parse_lie_name(o.h);
    if (gn.p != hn.p) throw InputError("base and ambient algebras have different characteristics");
    in = {{"p", gn.p}, {"base", o.g}, {"ambient", o.h}, {"embed", o.embed.empty() ? "canonical" : o.embed}};
  }
  lie::with_prime(lie::lie_prime(in), [&]<class S>() { lie_report(lie::slie_from_json<S>(in), o, caps, r); });
}

void cmd_solve(const Options& o, const Caps& caps, Report& r) {
  if (o.in.empty()) throw InputError("solve needs --in FILE with the system");
  std::optional<FiniteGroup> g;
  if (!o.g.empty()) g = build_group(o.g, caps);
  const SystemInput sys = system_from_json(read_json_file(o.in), g ? &*g : nullptr, caps);
  const SolutionSet s = solutions(sys.words, sys.group, sys.variables, caps);
  r.results["group"] = {{"label", sys.group.label()}, {"order", sys.group.order()}};
  r.results["variables"] = sys.variables;
  Json words = Json::array();
  for (const auto& w : sys.words) words.push_back(format_word(w, sys.group));
  r.results["words"] = std::move(words);
  r.results["count"] = s.size();
  Json tuples = Json::array();
  for (std::size_t k = 0; k < s.size() && k < kMaxListedTuples; ++k) {
    const auto t = s.tuple(k);
    tuples.push_back(elements_json(sys.group, std::vector<Elem>(t.begin(), t.end())));
  }
  r.results["tuples"] = std::move(tuples);
  r.results["truncated"] = s.size() > kMaxListedTuples;
}

void cmd_verify(const Options& o, const Caps& caps, Report& r) {
  VerifyOptions vo;
  vo.caps = caps;
  vo.seed = o.seed;
  if (o.maxOrder) vo.maxOrder = *o.maxOrder;
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (const auto& s : verify_scopes()) names.push_back(s.name);
  } else {
    if (!find_scope(o.suite)) throw InputError("unknown verify scope '" + o.suite + "'");
    names.push_back(o.suite);
  }
  Json scopes = Json::array();
  std::map<std::string, std::string> dumps;
  bool pass = true;
  for (const auto& n : names) {
    const auto t0 = Clock::now();
    Json res = n == "determinism" ? verify_determinism(vo, dumps) : verify_scope(n, vo);
    r.timing[n] = ms_since(t0);
    dumps[n] = res.dump();
    pass = pass && res.at("pass").get<bool>();
    scopes.push_back(std::move(res));
  }
  r.results["suite"] = o.suite;
  r.results["maxOrder"] = vo.maxOrder;
  r.results["pass"] = pass;
  Json summary = Json::array();
  for (const auto& s : scopes) summary.push_back({{"scope", s.at("scope")}, {"criterion", s.at("criterion")}, {"pass", s.at("pass")}});
  r.results["summary"] = std::move(summary);
  r.results["scopes"] = std::move(scopes);
  r.notes.push_back("the vanishing set of a join of normal subgroups is checked as the intersection of their vanishing sets");
  r.notes.push_back(
      "Lie zero divisors are taken outside the image of S; under that reading V([I,J]) can exceed V(I) u V(J) when I or J "
      "lies in P + phi(S), and counterexamples are reported as data");
  r.failed = !pass;
}

Json config_json(const Options& o, const Caps& caps) {
  Json c;
  c["caps"] = caps_json(caps);
  c["seed"] = o.seed;
  if (o.maxOrder) c["maxOrder"] = *o.maxOrder;
  if (o.command == "sheaf") c["coeff"] = o.coeff;
  return c;
}

Json command_echo(const Options& o) {
  Json j;
  j["name"] = o.command;
  if (!o.g.empty()) j["g"] = o.g;
  if (!o.h.empty()) j["h"] = o.h;
  if (!o.embed.empty()) j["embed"] = o.embed;
  if (!o.in.empty()) j["in"] = o.in;
  if (o.command == "verify") j["suite"] = o.suite;
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"groupspec: spectra of G-groups and Lie S-structures", "groupspec"};
  app.set_version_flag("--version", kVersion);
  // --h names the ambient group, so help is long-form only
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Options o;
  const std::pair<const char*, const char*> commands[] = {
      {"spec", "prime spectrum of a G-group (absolute spectrum with --h only)"},
      {"topology", "closed sets, minimal open sets and specialization order"},
      {"domain", "zero-divisor scan of a G-group"},
      {"sheaf", "section counts and A-section checks over the spectrum"},
      {"lie-spec", "spectrum of a Lie S-structure"},
      {"solve", "solutions of a word system"},
      {"verify", "replay the checked identities"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--g", o.g, "base group or algebra (catalog name)");
    sub->add_option("--h", o.h, "ambient group or algebra (catalog name)");
    sub->add_option("--embed", o.embed, "named structure map");
    sub->add_option("--in", o.in, "JSON input file");
    sub->add_option("--dot", o.dot, "write the specialization order as DOT");
    sub->add_option("--coeff", o.coeff, "coefficients: z or zmod:<m>");
    sub->add_option("--max-order", o.maxOrder, "group order cap (verify: catalog sweep bound)");
    sub->add_option("--seed", o.seed, "seed for sampled checks");
    sub->add_flag("--no-timing", o.noTiming, "omit timings from the report");
    if (std::string(name) == "verify") sub->add_option("--suite", o.suite, "all or one scope name");
    sub->callback([&o, n = std::string(name)] { o.command = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "groupspec: " << e.what() << "\n";
    return 1;
  }

  try {
    const Caps caps = make_caps(o);
    Report r;
    const auto t0 = Clock::now();
    if (o.command == "spec") cmd_spec(o, caps, r);
    else if (o.command == "topology") cmd_topology(o, caps, r);
    else if (o.command == "domain") cmd_domain(o, caps, r);
    else if (o.command == "sheaf") cmd_sheaf(o, caps, r);
    else if (o.command == "lie-spec") cmd_lie(o, caps, r);
    else if (o.command == "solve") cmd_solve(o, caps, r);
    else cmd_verify(o, caps, r);
    const double total = ms_since(t0);

    Json report;
    report["command"] = command_echo(o);
    report["version"] = kVersion;
    report["config"] = config_json(o, caps);
    report["results"] = std::move(r.results);
    report["notes"] = std::move(r.notes);
    if (!o.noTiming) {
      r.timing["total"] = total;
      report["timing_ms"] = std::move(r.timing);
    }
    out << report.dump(2) << "\n";
    return r.failed ? 3 : 0;
  } catch (const InputError& e) {
    err << "groupspec: " << e.what() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    err << "groupspec: cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    err << "groupspec: invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "groupspec: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace groupspec
