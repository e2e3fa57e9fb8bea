#include "levels/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "levels/errors.hpp"
#include "levels/io.hpp"

namespace levels::cli {

namespace {

struct Options {
  // gen
  std::string kind;
  int n = 0;
  int r = 0;
  std::uint64_t seed = 0;
  bool pointed = false;
  std::string params;
  // shared
  std::string output;
  std::string format = "json";
  std::vector<std::string> inputs;
  std::string from;
  std::string to;
  // faces / fstar / g / motion
  bool patterns = false;
  std::string oracle = "gale";
  std::string via = "algebraic";
  bool full = false;
  bool trace = false;
  std::optional<std::uint64_t> perturb_seed;
  // verify / span
  std::string relation;
  std::size_t samples = 8;
  std::string space = "g";
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
  } else {
    write_text_file(o.output, text);
  }
}

std::string dump(const Json& j) { return to_text(j); }

std::vector<Rat> parse_params(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Rat::parse(item));
  return out;
}

int cmd_gen(const Options& o, std::ostream& out) {
  VectorConfig v = [&] {
    if (o.kind == "random") return gen_random(o.n, o.r, o.seed, o.pointed);
    const bool cyclic = o.kind == "cyclic";
    if (o.params.empty()) return cyclic ? gen_cyclic(o.n, o.r) : gen_cocyclic(o.n, o.r);
    const auto t = parse_params(o.params);
    return cyclic ? gen_cyclic(o.n, o.r, t) : gen_cocyclic(o.n, o.r, t);
  }();
  emit(o, out, dump(config_to_json(v)));
  return kOk;
}

int cmd_faces(const Options& o, std::ostream& out) {
  const VectorConfig v = read_config(o.inputs.at(0));
  const PatternSet patterns = dissection_patterns(v);
  const FMatrix f = f_matrix(patterns, v.size(), v.rank());
  if (o.format == "csv") {
    if (o.patterns) throw CLI::ValidationError("--patterns", "pattern lists are only written as JSON");
    emit(o, out, int_matrix_to_csv(f.counts));
    return kOk;
  }
  Json j = fmatrix_to_json(f);
  if (o.patterns) j["patterns"] = patterns_to_json(patterns);
  emit(o, out, dump(j));
  return kOk;
}

int cmd_fstar(const Options& o, std::ostream& out, std::ostream& err) {
  const VectorConfig v = read_config(o.inputs.at(0));
  PatternSet patterns;
  if (o.oracle == "farkas") {
    patterns = farkas_complement_oracle(v);
  } else {
    patterns = dependency_patterns(v);
    if (o.oracle == "both" && patterns != farkas_complement_oracle(v)) {
      err << "dependency patterns from the Gale dual and the Farkas oracle disagree\n";
      return kVerificationFailed;
    }
  }
  const FStarMatrix f = fstar_matrix(patterns, v.size(), v.rank());
  if (o.format == "csv") {
    emit(o, out, int_matrix_to_csv(f.counts));
    return kOk;
  }
  emit(o, out, dump(fstar_to_json(f)));
  return kOk;
}

std::pair<VectorConfig, VectorConfig> endpoints(const Options& o) {
  const VectorConfig v = read_config(o.from);
  VectorConfig w = read_config(o.to);
  if (v.rank() != w.rank() || v.size() != w.size()) throw DimensionError("--from and --to differ in (n, r)");
  if (o.perturb_seed) w = perturb(w, *o.perturb_seed);
  return {v, w};
}

int cmd_g(const Options& o, std::ostream& out, std::ostream& err) {
  const auto [v, w] = endpoints(o);
  GMatrix g;
  if (o.via == "motion") {
    g = g_from_events(v.size(), v.rank(), detect_mutations(v, w).events);
  } else {
    g = g_from_fmatrices(f_matrix(v), f_matrix(w));
    if (o.via == "both" && g != g_from_events(v.size(), v.rank(), detect_mutations(v, w).events)) {
      err << "algebraic and motion g-matrices disagree\n";
      return kVerificationFailed;
    }
  }
  emit(o, out, dump(o.full ? gmatrix_to_json(g) : small_g_to_json(g)));
  return kOk;
}

int cmd_motion(const Options& o, std::ostream& out) {
  const auto [v, w] = endpoints(o);
  const MotionPath path = detect_mutations(v, w);
  if (o.trace) {
    Json events = Json::array();
    for (const MutationEvent& e : path.events) events.push_back(event_to_json(e));
    emit(o, out, dump(events));
  } else {
    Json j = small_g_to_json(g_from_events(v.size(), v.rank(), path.events));
    j["events"] = path.events.size();
    emit(o, out, dump(j));
  }
  return kOk;
}

RelationReport make_report(std::string name, bool holds, const std::string& detail = {}) {
  RelationReport r{std::move(name), holds, std::nullopt};
  if (!holds) r.witness = Witness{0, 0, detail};
  return r;
}

// A verify input is either a configuration or an f-matrix ({"d", "n", "rows"}).
FMatrix load_fmatrix(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    if (j.is_object() && j.contains("rows") && j.contains("d")) return fmatrix_from_json(j);
    return f_matrix(config_from_json(j));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<RelationReport> verify_reports(const Options& o) {
  const std::string& rel = o.relation;
  std::vector<RelationReport> reports;
  auto need_inputs = [&](std::size_t count) {
    if (o.inputs.size() < count) {
      throw CLI::ValidationError("verify", "relation " + rel + " needs " + std::to_string(count) + " input file(s)");
    }
  };
  if (rel == "ds" || rel == "antipodal" || rel == "totals") {
    need_inputs(1);
    for (const std::string& path : o.inputs) {
      const FMatrix f = load_fmatrix(path);
      if (rel == "ds") reports.push_back(check_dehn_sommerville(f));
      if (rel == "antipodal") reports.push_back(check_antipodal(f));
      if (rel == "totals") reports.push_back(check_totals(f));
    }
  } else if (rel == "duality") {
    need_inputs(1);
    for (const std::string& path : o.inputs) {
      const VectorConfig v = read_config(path);
      const int n = v.size();
      const int r = v.rank();
      if (n <= kFarkasMaxSize) {
        reports.push_back(make_report("duality-farkas", dependency_patterns(v) == farkas_complement_oracle(v),
                                      "Gale-dual patterns differ from the Farkas complement"));
      }
      const BiPoly f = f_polynomial(f_matrix(v));
      const BiPoly fs = fstar_polynomial(fstar_matrix(v));
      const BiPoly forward = f_fstar_transform(f, n, r, Direction::f_to_fstar);
      reports.push_back(make_report("duality-f-to-fstar", forward == fs, "transformed f is " + forward.str()));
      const BiPoly back = f_fstar_transform(forward, n, r, Direction::fstar_to_f);
      reports.push_back(make_report("duality-round-trip", back == f, "round trip gives " + back.str()));
    }
  } else if (rel == "skew" || rel == "contraction" || rel == "deletion") {
    if (o.from.empty() || o.to.empty()) throw CLI::ValidationError("verify", rel + " needs --from and --to");
    const auto [v, w] = endpoints(o);
    if (rel == "skew") {
      try {
        const GMatrix g = g_from_fmatrices(f_matrix(v), f_matrix(w));
        reports.push_back(make_report("skew", is_skew_symmetric(g)));
      } catch (const InconsistentInputError& e) {
        reports.push_back(make_report("skew", false, e.what()));
      }
    } else {
      reports.push_back(
          check_contraction_deletion(v, w, rel == "contraction" ? MinorMode::contract : MinorMode::remove));
    }
  } else if (rel == "closed-form") {
    const GMatrix g = g_from_fmatrices(f_matrix(gen_cocyclic(o.n, o.r)), f_matrix(gen_cyclic(o.n, o.r)));
    const IntMatrix expected = g_closed_form_neighborly(o.n, o.r);
    reports.push_back(make_report("closed-form", g.small() == expected,
                                  "small g " + g.small().str() + " vs closed form " + expected.str()));
  } else if (rel == "span-dim") {
    const SpanMode mode = o.pointed ? SpanMode::pointed : SpanMode::general;
    const SpanReport g = g_span_rank(o.n, o.r, mode, o.samples, o.seed);
    const SpanReport f = f_affine_span_rank(o.n, o.r, mode, o.samples, o.seed);
    reports.push_back(make_report("span-dim-g", g.reached() && g.structure_holds,
                                  "rank " + std::to_string(g.achieved_rank) + " of " +
                                      std::to_string(g.theoretical_dim)));
    reports.push_back(make_report("span-dim-f", f.reached(),
                                  "rank " + std::to_string(f.achieved_rank) + " of " +
                                      std::to_string(f.theoretical_dim)));
  } else {
    throw CLI::ValidationError("--relation", "unknown relation " + rel);
  }
  return reports;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto reports = verify_reports(o);
  Json j = Json::array();
  bool all = true;
  for (const RelationReport& r : reports) {
    j.push_back(report_to_json(r));
    all = all && r.holds;
  }
  emit(o, out, dump(j));
  return all ? kOk : kVerificationFailed;
}

int cmd_span(const Options& o, std::ostream& out) {
  const SpanMode mode = o.pointed ? SpanMode::pointed : SpanMode::general;
  SpanReport report;
  if (o.space == "f") {
    report = f_affine_span_rank(o.n, o.r, mode, o.samples, o.seed);
  } else if (o.space == "fstar") {
    report = fstar_affine_span_rank(o.n, o.r, mode, o.samples, o.seed);
  } else {
    report = g_span_rank(o.n, o.r, mode, o.samples, o.seed);
  }
  emit(o, out, dump(span_report_to_json(report)));
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Levels, f-, f*- and g-matrices of vector configurations"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "generate a configuration");
  gen->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"cyclic", "cocyclic", "random"}));
  gen->add_option("--n", o.n)->required();
  gen->add_option("--r", o.r)->required();
  gen->add_option("--seed", o.seed);
  gen->add_flag("--pointed", o.pointed);
  gen->add_option("--params", o.params, "comma-separated rationals t1,t2,...");
  gen->add_option("-o,--output", o.output);

  auto* faces = app.add_subcommand("faces", "dissection patterns and f-matrix");
  faces->add_option("config", o.inputs)->required()->expected(1);
  faces->add_flag("--patterns", o.patterns);
  faces->add_option("-o,--output", o.output);
  faces->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* fstar = app.add_subcommand("fstar", "dependency patterns and f*-matrix");
  fstar->add_option("config", o.inputs)->required()->expected(1);
  fstar->add_option("--oracle", o.oracle)->check(CLI::IsMember({"farkas", "gale", "both"}));
  fstar->add_option("-o,--output", o.output);
  fstar->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* g = app.add_subcommand("g", "g-matrix of a pair");
  g->add_option("--from", o.from)->required();
  g->add_option("--to", o.to)->required();
  g->add_option("--via", o.via)->check(CLI::IsMember({"algebraic", "motion", "both"}));
  g->add_flag("--full", o.full, "print the full g-matrix instead of the small one");
  g->add_option("--perturb-seed", o.perturb_seed);
  g->add_option("-o,--output", o.output);

  auto* motion = app.add_subcommand("motion", "mutations of the straight-line motion");
  motion->add_option("--from", o.from)->required();
  motion->add_option("--to", o.to)->required();
  motion->add_flag("--trace", o.trace);
  motion->add_option("--perturb-seed", o.perturb_seed);
  motion->add_option("-o,--output", o.output);

  auto* verify = app.add_subcommand("verify", "check identities; exit 1 if one fails");
  verify->add_option("--relation", o.relation)
      ->required()
      ->check(CLI::IsMember({"ds", "antipodal", "totals", "duality", "skew", "contraction", "deletion",
                             "closed-form", "span-dim"}));
  verify->add_option("inputs", o.inputs);
  verify->add_option("--from", o.from);
  verify->add_option("--to", o.to);
  verify->add_option("--n", o.n);
  verify->add_option("--r", o.r);
  verify->add_flag("--pointed", o.pointed);
  verify->add_option("--samples", o.samples);
  verify->add_option("--seed", o.seed);
  verify->add_option("--perturb-seed", o.perturb_seed);
  verify->add_option("-o,--output", o.output);

  auto* span = app.add_subcommand("span", "rank of sampled g-, f- or f*-matrices");
  span->add_option("--n", o.n)->required();
  span->add_option("--r", o.r)->required();
  span->add_flag("--pointed", o.pointed);
  span->add_option("--samples", o.samples)->required();
  span->add_option("--seed", o.seed)->required();
  span->add_option("--space", o.space)->check(CLI::IsMember({"g", "f", "fstar"}));
  span->add_option("-o,--output", o.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (faces->parsed()) return cmd_faces(o, out);
    if (fstar->parsed()) return cmd_fstar(o, out, err);
    if (g->parsed()) return cmd_g(o, out, err);
    if (motion->parsed()) return cmd_motion(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (span->parsed()) return cmd_span(o, out);
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GeneralPositionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const GenericityError& e) {
    err << "error: " << e.what() << " (retry with --perturb-seed)\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace levels::cli
