#include "frontal/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <thread>

#include "frontal/fold.hpp"
#include "frontal/parser.hpp"

namespace frontal {

namespace {

const std::vector<std::string> kStages{"parse", "frontality", "curves", "finiteness",
                                       "fitting", "invariants", "fold", "conjecture"};

Json colength_json(const ColengthResult& r) {
  if (!r.finite) return nullptr;
  return r.value;
}

Json optional_json(const std::optional<long>& v) {
  if (!v) return nullptr;
  return *v;
}

Json reading_json(const MuFReading& m) {
  Json j;
  j["reading"] = to_string(m.reading);
  j["applicable"] = m.applicable;
  j["computed"] = m.computed;
  j["note"] = m.note;
  j["curve"] = to_string(m.curve);
  if (m.computed && m.applicable) {
    j["muD"] = m.mu_d;
    j["muImageD"] = render(m.image_d);
    j["viaImage"] = render(m.via_image);
    j["viaSource"] = render(m.via_source);
  }
  j["muF"] = m.computed ? Json(render(m.mu_f)) : Json(nullptr);
  j["integral"] = m.integral;
  return j;
}

bool wants(ReadingChoice c, DReading r) {
  return c == ReadingChoice::Both || (c == ReadingChoice::DPlus) == (r == DReading::DPlus);
}

Json classification_json(const Classification& c) {
  Json j;
  j["classified"] = c.classified;
  j["family"] = c.family;
  j["k"] = c.k;
  j["label"] = c.label;
  j["convention"] = c.convention;
  return j;
}

Json fold_json(const MapGerm& g, int cap, bool* undetermined) {
  Json j;
  const auto fold = detect_fold(g);
  j["fold"] = fold.has_value();
  if (!fold) return j;
  j["frontalised"] = fold->frontalised;
  j["h"] = to_string(fold->h);
  const ColengthResult c = fold_codim(*fold, cap);
  j["codim"] = colength_json(c);
  if (!c.finite && undetermined) *undetermined = true;
  j["classification"] = classification_json(classify_simple(g));
  return j;
}

std::string germ_error_message(const GermError& e) { return std::string(to_string(e.kind())) + ": " + e.what(); }

bool is_poly_key(const std::string& k) { return k == "lambda" || k == "tau" || k == "cuspidal"; }

}  // namespace

ReadingChoice parse_reading(const std::string& s) {
  if (s == "dplus") return ReadingChoice::DPlus;
  if (s == "full") return ReadingChoice::Full;
  if (s == "both") return ReadingChoice::Both;
  throw Error("unknown reading '" + s + "' (expected dplus, full or both)");
}

const char* to_string(StageStatus s) {
  switch (s) {
    case StageStatus::Ok: return "ok";
    case StageStatus::Failed: return "failed";
    case StageStatus::Skipped: return "skipped";
    case StageStatus::Undetermined: return "undetermined";
  }
  return "?";
}

bool Report::parse_failed() const {
  const Stage* s = stage("parse");
  return s && s->status == StageStatus::Failed;
}

bool Report::undetermined() const {
  return std::any_of(stages.begin(), stages.end(),
                     [](const Stage& s) { return s.status == StageStatus::Undetermined; });
}

const Stage* Report::stage(const std::string& name) const {
  for (const auto& s : stages)
    if (s.name == name) return &s;
  return nullptr;
}

std::string render(const Scalar& s) {
  Scalar c = s;
  c.canonicalize();
  return c.get_str();
}

Report run_analyze(const GermSpec& spec, const AnalyzeOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.spec = spec;
  for (const auto& name : kStages) r.stages.push_back({name, StageStatus::Skipped, ""});
  auto stage = [&](const std::string& name) -> Stage& {
    return *std::find_if(r.stages.begin(), r.stages.end(), [&](const Stage& s) { return s.name == name; });
  };
  auto set = [&](const std::string& name, StageStatus st, std::string msg = "") {
    Stage& s = stage(name);
    s.status = st;
    s.message = std::move(msg);
  };
  // Runs one stage; any exception marks it failed and returns false.
  auto guarded = [&](const std::string& name, const std::function<void()>& body) {
    try {
      body();
      if (stage(name).status == StageStatus::Skipped) set(name, StageStatus::Ok);
      return stage(name).status != StageStatus::Failed;
    } catch (const GermError& e) {
      set(name, e.kind() == GermErrorKind::CapReached ? StageStatus::Undetermined : StageStatus::Failed,
          germ_error_message(e));
    } catch (const std::exception& e) {
      set(name, StageStatus::Failed, e.what());
    }
    return false;
  };
  const int cap = options.max_jet;
  r.data["options"] = {{"max_jet", cap},
                       {"reading", options.reading == ReadingChoice::Both    ? "both"
                                   : options.reading == ReadingChoice::DPlus ? "dplus"
                                                                             : "full"}};

  MapGerm g;
  auto finish = [&]() {
    r.timing_ms = options.timing
                      ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()
                      : 0.0;
    return r;
  };
  try {
    Poly p, q;
    try {
      p = parse_expression(spec.p);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), "p: " + e.detail());
    }
    try {
      q = parse_expression(spec.q);
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.column(), "q: " + e.detail());
    }
    g = make_germ(spec.name, p, q);
    set("parse", StageStatus::Ok);
    r.data["germ"] = {{"p", to_string(g.p)}, {"q", to_string(g.q)}};
  } catch (const ParseError& e) {
    set("parse", StageStatus::Failed, e.what());
    return finish();
  } catch (const std::exception& e) {
    set("parse", StageStatus::Failed, e.what());
    return finish();
  }

  bool frontal = false;
  guarded("frontality", [&] {
    const FrontalVerdict v = check_frontal(g, cap);
    frontal = v.frontal;
    Json j;
    j["frontal"] = v.frontal;
    j["swapped"] = v.swapped;
    j["verdict"] = to_string(v.division.verdict);
    j["tier"] = to_string(v.division.tier);
    j["jet_order"] = v.division.order;
    if (!v.frontal && v.division.obstruction_order >= 0) {
      j["obstruction"] = to_string(v.division.obstruction);
      j["obstruction_order"] = v.division.obstruction_order;
    }
    if (v.frontal) {
      j["mu_numerator"] = to_string(v.division.mu_numerator);
      j["mu_denominator"] = to_string(v.division.mu_denominator);
    }
    r.data["frontality"] = j;
  });

  std::optional<FrontalData> fd;
  if (frontal) {
    guarded("curves", [&] {
      fd = analyze_frontal(g, cap);
      Json j;
      j["p"] = to_string(fd->germ.p);
      j["q"] = to_string(fd->germ.q);
      j["cuspidal"] = to_string(fd->cuspidal);
      j["lambda"] = to_string(fd->lambda);
      j["tau"] = to_string(fd->tau);
      j["alpha"] = to_string(fd->alpha);
      j["alpha_prime"] = to_string(fd->alpha_prime);
      j["conormal"] = Json::array({to_string(fd->nu[0]), to_string(fd->nu[1]), to_string(fd->nu[2])});
      r.data["curves"] = j;
    });
  } else if (stage("frontality").status == StageStatus::Ok) {
    set("curves", StageStatus::Skipped, "germ is not frontal");
  }

  if (fd) {
    guarded("finiteness", [&] {
      const FinitenessReport f = finiteness_checks(*fd, cap);
      Json j;
      j["vpmu_isolated"] = to_string(f.vpmu_isolated);
      j["critical_isolated"] = to_string(f.critical_isolated);
      j["c_reduced"] = to_string(f.c_reduced);
      j["dplus_reduced"] = to_string(f.dplus_reduced);
      j["f_finite"] = to_string(f.f_finite);
      j["vpmu_colength"] = colength_json(f.vpmu);
      j["critical_colength"] = colength_json(f.critical);
      r.data["finiteness"] = j;
      if (f.vpmu_isolated == Tri::Undetermined || f.critical_isolated == Tri::Undetermined)
        set("finiteness", StageStatus::Undetermined, "a colength reached the jet cap");
    });
    guarded("fitting", [&] {
      const FittingResult fr = fitting_F3(fd->germ, cap);
      Json j;
      j["d"] = fr.presentation.d;
      j["swapped"] = fr.presentation.swapped;
      j["jet_order"] = fr.presentation.jet_order;
      j["confirmed_at"] = fr.confirmed_at;
      j["F0"] = to_string(fr.F0);
      j["F0_vanishes"] = fr.F0_vanishes;
      j["F2_unit"] = std::any_of(fr.F2_generators.begin(), fr.F2_generators.end(),
                                 [](const Poly& m) { return sgn(m.constant_term()) != 0; });
      j["F3"] = colength_json(fr.F3);
      r.data["fitting"] = j;
      if (!fr.F3.finite) set("fitting", StageStatus::Undetermined, "F3 did not stabilise below the jet cap");
    });
    std::optional<InvariantReport> inv;
    guarded("invariants", [&] {
      inv = compute_invariants(*fd, cap);
      const SkwCounts& c = inv->counts;
      Json j;
      j["P3"] = colength_json(c.P3);
      j["PT"] = colength_json(c.PT);
      j["PAA'"] = colength_json(c.PAA);
      j["F3"] = colength_json(c.F3);
      if (c.complete) {
        j["S"] = c.sktw.S;
        j["K"] = c.sktw.K;
        j["T"] = c.sktw.T;
        j["W"] = c.sktw.W;
        j["nonnegative"] = c.nonnegative;
      }
      j["muC"] = inv->c_empty ? Json("empty") : optional_json(inv->mu_c);
      j["muImageC"] = inv->mu_image_c ? Json(render(*inv->mu_image_c)) : Json(nullptr);
      Json readings = Json::array();
      for (const auto& m : inv->readings)
        if (wants(options.reading, m.reading)) readings.push_back(reading_json(m));
      j["readings"] = readings;
      j["quasihomogeneous"] = {{"qh", inv->qh.qh},
                               {"weights", Json::array({inv->qh.w_x, inv->qh.w_y})},
                               {"degrees", Json::array({inv->qh.degrees[0], inv->qh.degrees[1], inv->qh.degrees[2]})}};
      r.data["invariants"] = j;
      if (!c.complete) set("invariants", StageStatus::Undetermined, "colengths reached the jet cap: " + c.failure);
    });
    if (inv) {
      guarded("conjecture", [&] {
        const ConjectureReport& c = inv->conjecture;
        Json j;
        j["label"] = c.label;
        j["codim"] = c.codim_computed ? Json(c.codim) : Json(nullptr);
        j["qh"] = c.qh;
        Json verdicts = Json::object();
        if (wants(options.reading, DReading::DPlus)) verdicts["dplus"] = c.verdicts[0];
        if (wants(options.reading, DReading::Full)) verdicts["full"] = c.verdicts[1];
        j["verdicts"] = verdicts;
        r.data["conjecture"] = j;
      });
    }
  }
  for (const auto& name : {"finiteness", "fitting", "invariants", "conjecture"})
    if (stage(name).status == StageStatus::Skipped && stage(name).message.empty())
      set(name, StageStatus::Skipped, frontal ? "an earlier stage failed" : "germ is not frontal");

  guarded("fold", [&] {
    bool undetermined = false;
    r.data["fold"] = fold_json(g, cap, &undetermined);
    if (undetermined) set("fold", StageStatus::Undetermined, "fold codimension reached the jet cap");
  });
  return finish();
}

Json to_json(const Report& r, bool with_timing) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["name"] = r.spec.name;
  j["p"] = r.spec.p;
  j["q"] = r.spec.q;
  if (!r.spec.expect.empty()) j["expect"] = r.spec.expect;
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back({{"name", s.name}, {"status", to_string(s.status)}, {"message", s.message}});
  j["stages"] = stages;
  for (const auto& [k, v] : r.data.items()) j[k] = v;
  if (with_timing) j["timing_ms"] = r.timing_ms;
  return j;
}

Report report_from_json(const Json& j) {
  if (j.value("schema", "") != kReportSchema) throw Error("unsupported report schema");
  Report r;
  r.spec.name = j.at("name").get<std::string>();
  r.spec.p = j.at("p").get<std::string>();
  r.spec.q = j.at("q").get<std::string>();
  if (j.contains("expect")) r.spec.expect = j.at("expect");
  for (const auto& s : j.at("stages")) {
    Stage st;
    st.name = s.at("name").get<std::string>();
    st.message = s.at("message").get<std::string>();
    const std::string status = s.at("status").get<std::string>();
    if (status == "ok") st.status = StageStatus::Ok;
    else if (status == "failed") st.status = StageStatus::Failed;
    else if (status == "skipped") st.status = StageStatus::Skipped;
    else if (status == "undetermined") st.status = StageStatus::Undetermined;
    else throw Error("unknown stage status '" + status + "'");
    r.stages.push_back(st);
  }
  static const std::vector<std::string> top{"schema", "tool_version", "name", "p", "q", "expect", "stages", "timing_ms"};
  for (const auto& [k, v] : j.items())
    if (std::find(top.begin(), top.end(), k) == top.end()) r.data[k] = v;
  r.timing_ms = j.value("timing_ms", 0.0);
  return r;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

std::string to_text(const Report& r) {
  std::string out = "germ " + r.spec.name + ": (x, " + r.spec.p + ", " + r.spec.q + ")\n";
  for (const auto& s : r.stages)
    out += "stage " + s.name + ": " + to_string(s.status) + (s.message.empty() ? "" : " (" + s.message + ")") + "\n";
  flatten(r.data, "", out);
  return out;
}

std::string flatten_text(const Json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

Json flat_values(const Report& r) {
  Json f = Json::object();
  const Json& d = r.data;
  auto copy = [&](const char* section, const char* key, const std::string& as) {
    if (d.contains(section) && d[section].contains(key)) f[as] = d[section][key];
  };
  copy("frontality", "frontal", "frontal");
  copy("frontality", "tier", "tier");
  copy("frontality", "obstruction_order", "obstruction_order");
  copy("curves", "cuspidal", "cuspidal");
  copy("curves", "lambda", "lambda");
  copy("curves", "tau", "tau");
  copy("finiteness", "f_finite", "f_finite");
  copy("fitting", "d", "d");
  copy("fitting", "F0_vanishes", "F0_vanishes");
  copy("fitting", "F2_unit", "F2_unit");
  for (const char* k : {"P3", "PT", "PAA'", "F3", "S", "K", "T", "W", "muC", "muImageC"}) copy("invariants", k, k);
  if (d.contains("invariants")) {
    for (const auto& m : d["invariants"]["readings"]) {
      const std::string tag = m["reading"].get<std::string>();
      f["muF_" + tag] = m["muF"];
      if (m.contains("muD")) f["muD_" + tag] = m["muD"];
      if (m.contains("muImageD")) f["muImageD_" + tag] = m["muImageD"];
      f["integral_" + tag] = m["integral"];
    }
    f["qh"] = d["invariants"]["quasihomogeneous"]["qh"];
  }
  copy("fold", "fold", "fold");
  copy("fold", "codim", "codim");
  copy("fold", "h", "h");
  if (d.contains("fold") && d["fold"].contains("classification"))
    f["label"] = d["fold"]["classification"]["label"];
  return f;
}

std::vector<Mismatch> check_expectations(const Report& r) {
  std::vector<Mismatch> out;
  const Json flat = flat_values(r);
  for (const auto& [k, expected] : r.spec.expect.items()) {
    const Json actual = flat.contains(k) ? flat[k] : Json(nullptr);
    bool same = actual == expected;
    if (!same && is_poly_key(k) && actual.is_string() && expected.is_string()) {
      try {
        same = equal_up_to_unit(parse_expression(actual.get<std::string>()),
                                parse_expression(expected.get<std::string>()));
      } catch (const Error&) {
        same = false;
      }
    }
    if (!same) out.push_back({k, expected, actual});
  }
  return out;
}

GermSpec parse_corpus_line(const std::string& line) {
  const Json j = Json::parse(line);
  GermSpec s;
  s.name = j.at("name").get<std::string>();
  s.p = j.at("p").get<std::string>();
  s.q = j.at("q").get<std::string>();
  if (j.contains("expect")) s.expect = j.at("expect");
  return s;
}

std::vector<GermSpec> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file '" + path + "'");
  std::vector<GermSpec> out;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_corpus_line(line));
    } catch (const std::exception& e) {
      throw Error(path + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Report> run_corpus(const std::vector<GermSpec>& corpus, const AnalyzeOptions& options, unsigned threads) {
  std::vector<Report> out(corpus.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, corpus.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) out[i] = run_analyze(corpus[i], options);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

Json frontalise_json(const MapGerm& g, int cap) {
  Json j;
  const auto fold = detect_fold(g);
  j["fold"] = fold.has_value();
  if (!fold) return j;
  bool already = false;
  const MapGerm f = frontalise(*fold, &already);
  j["h"] = to_string(fold->h);
  j["already_frontal"] = already;
  j["p"] = to_string(f.p);
  j["q"] = to_string(f.q);
  j["frontal"] = check_frontal(f, cap).frontal;
  j["codim"] = colength_json(fold_codim(*fold, cap));
  return j;
}

Json classify_json(const MapGerm& g, int cap) {
  Json j = fold_json(g, cap, nullptr);
  if (!j.contains("classification")) j["classification"] = classification_json(classify_simple(g));
  return j;
}

Json curve_json(const std::vector<ParamCurve>& branches, int cap) {
  Json j;
  Json bs = Json::array();
  for (const auto& b : branches) {
    Json e;
    e["p"] = to_string(b.p);
    e["q"] = to_string(b.q);
    const CurveDoublePoint dp = curve_double_point(b);
    e["d"] = to_string(dp.d);
    e["order"] = dp.order;
    const DeltaResult dr = delta_invariant({b}, cap);
    e["delta"] = dr.delta;
    e["semigroup_delta"] = dr.semigroup_delta;
    const KappaRelation k = kappa_and_relation(b, cap);
    e["kappa"] = k.kappa;
    e["muI"] = k.mu_image;
    e["muF"] = k.mu_frontal;
    bs.push_back(e);
  }
  j["branches"] = bs;
  const DeltaResult dr = delta_invariant(branches, cap);
  j["delta"] = dr.delta;
  j["intersections"] = dr.intersections;
  j["mu"] = 2 * dr.delta - static_cast<long>(branches.size()) + 1;
  j["kappa_note"] = "kappa = min(ord p', ord q') is a model assumption";
  return j;
}

}  // namespace frontal
