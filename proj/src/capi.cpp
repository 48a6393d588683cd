#include "frontal/frontal.h"

#include <cstdlib>
#include <cstring>
#include <memory>

#include "frontal/parser.hpp"
#include "frontal/report.hpp"

struct frontal_report {
  frontal::Report report;
  std::string rendered;
  std::string mismatches;
};

struct frontal_corpus {
  std::vector<frontal::GermSpec> specs;
  std::vector<frontal_report> reports;
};

namespace {

struct LastError {
  std::string message;
  int line = 0;
  int column = 0;
};

thread_local LastError last_error;

frontal_status fail(frontal_status s, const std::string& message, int line = 0, int column = 0) {
  last_error = {message, line, column};
  return s;
}

frontal_status ok() {
  last_error = {};
  return FRONTAL_OK;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
frontal_status guard(F&& body) {
  try {
    return body();
  } catch (const frontal::ParseError& e) {
    return fail(FRONTAL_ERR_PARSE, e.what(), e.line(), e.column());
  } catch (const frontal::GermError& e) {
    return fail(FRONTAL_ERR_GERM, e.what());
  } catch (const frontal::Error& e) {
    return fail(FRONTAL_ERR_GERM, e.what());
  } catch (const std::bad_alloc&) {
    return fail(FRONTAL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(FRONTAL_ERR_INTERNAL, e.what());
  }
}

frontal::AnalyzeOptions convert(const frontal_options* o) {
  frontal::AnalyzeOptions a;
  if (!o) return a;
  a.max_jet = o->max_jet;
  a.reading = o->reading == FRONTAL_READING_DPLUS  ? frontal::ReadingChoice::DPlus
              : o->reading == FRONTAL_READING_FULL ? frontal::ReadingChoice::Full
                                                   : frontal::ReadingChoice::Both;
  a.timing = o->timing != 0;
  return a;
}

bool valid_jet(int max_jet) { return max_jet >= 4 && max_jet <= 400; }

frontal_status check_options(const frontal_options* o) {
  if (o && !valid_jet(o->max_jet)) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "max_jet must lie in [4, 400]");
  return FRONTAL_OK;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

frontal::MapGerm parse_germ(const char* p, const char* q) {
  frontal::Poly pp, qq;
  try {
    pp = frontal::parse_expression(p);
  } catch (const frontal::ParseError& e) {
    throw frontal::ParseError(e.line(), e.column(), "p: " + e.detail());
  }
  try {
    qq = frontal::parse_expression(q);
  } catch (const frontal::ParseError& e) {
    throw frontal::ParseError(e.line(), e.column(), "q: " + e.detail());
  }
  return frontal::make_germ("", pp, qq);
}

std::string render_json(const frontal::Json& j, frontal_format f) {
  if (f == FRONTAL_FORMAT_TEXT) return frontal::flatten_text(j);
  return f == FRONTAL_FORMAT_JSON_PRETTY ? j.dump(2) : j.dump();
}

}  // namespace

extern "C" {

const char* frontal_version(void) { return frontal::kToolVersion; }
const char* frontal_report_schema(void) { return frontal::kReportSchema; }
const char* frontal_last_error(void) { return last_error.message.c_str(); }
int frontal_last_error_line(void) { return last_error.line; }
int frontal_last_error_column(void) { return last_error.column; }

void frontal_options_init(frontal_options* options) {
  if (!options) return;
  options->max_jet = frontal::kDefaultJetCap;
  options->reading = FRONTAL_READING_BOTH;
  options->timing = 1;
  options->threads = 0;
}

frontal_status frontal_analyze(const char* name, const char* p, const char* q, const frontal_options* options,
                               frontal_report** out) {
  if (!p || !q || !out) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  if (frontal_status s = check_options(options); s != FRONTAL_OK) return s;
  return guard([&] {
    auto r = std::make_unique<frontal_report>();
    r->report = frontal::run_analyze({name ? name : "", p, q, frontal::Json::object()}, convert(options));
    *out = r.release();
    return ok();
  });
}

void frontal_report_free(frontal_report* report) { delete report; }

const char* frontal_report_render(frontal_report* report, const char* section, frontal_format format) {
  if (!report) return nullptr;
  try {
    if (!section) {
      report->rendered = format == FRONTAL_FORMAT_TEXT ? frontal::to_text(report->report)
                                                       : render_json(frontal::to_json(report->report), format);
    } else {
      if (!report->report.data.contains(section)) return nullptr;
      report->rendered = render_json(report->report.data[section], format);
    }
    return report->rendered.c_str();
  } catch (const std::exception& e) {
    fail(FRONTAL_ERR_INTERNAL, e.what());
    return nullptr;
  }
}

int frontal_report_parse_failed(const frontal_report* report) { return report && report->report.parse_failed(); }
int frontal_report_undetermined(const frontal_report* report) { return report && report->report.undetermined(); }

int frontal_report_mismatches(const frontal_report* report) {
  if (!report) return 0;
  return static_cast<int>(frontal::check_expectations(report->report).size());
}

const char* frontal_report_mismatch_text(frontal_report* report) {
  if (!report) return nullptr;
  report->mismatches.clear();
  for (const auto& m : frontal::check_expectations(report->report))
    report->mismatches += m.key + ": expected " + m.expected.dump() + ", got " + m.actual.dump() + "\n";
  return report->mismatches.c_str();
}

const char* frontal_report_name(const frontal_report* report) {
  return report ? report->report.spec.name.c_str() : nullptr;
}

const char* frontal_report_stage_status(const frontal_report* report, const char* stage) {
  if (!report || !stage) return nullptr;
  const frontal::Stage* s = report->report.stage(stage);
  return s ? frontal::to_string(s->status) : nullptr;
}

const char* frontal_report_stage_message(const frontal_report* report, const char* stage) {
  if (!report || !stage) return nullptr;
  const frontal::Stage* s = report->report.stage(stage);
  return s ? s->message.c_str() : nullptr;
}

frontal_status frontal_corpus_load(const char* path, frontal_corpus** out) {
  if (!path || !out) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    auto c = std::make_unique<frontal_corpus>();
    c->specs = frontal::load_corpus(path);
    *out = c.release();
    return ok();
  } catch (const std::exception& e) {
    return fail(FRONTAL_ERR_IO, e.what());
  }
}

frontal_status frontal_corpus_run(frontal_corpus* corpus, const frontal_options* options) {
  if (!corpus) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "null argument");
  if (frontal_status s = check_options(options); s != FRONTAL_OK) return s;
  return guard([&] {
    auto reports = frontal::run_corpus(corpus->specs, convert(options), options ? options->threads : 0);
    corpus->reports.clear();
    corpus->reports.resize(reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) corpus->reports[i].report = std::move(reports[i]);
    return ok();
  });
}

size_t frontal_corpus_size(const frontal_corpus* corpus) { return corpus ? corpus->specs.size() : 0; }

frontal_report* frontal_corpus_report(frontal_corpus* corpus, size_t index) {
  if (!corpus || index >= corpus->reports.size()) return nullptr;
  return &corpus->reports[index];
}

void frontal_corpus_free(frontal_corpus* corpus) { delete corpus; }

frontal_status frontal_frontalise(const char* p, const char* q, int max_jet, char** json_out) {
  if (!p || !q || !json_out) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "null argument");
  if (!valid_jet(max_jet)) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "max_jet must lie in [4, 400]");
  *json_out = nullptr;
  return guard([&] {
    *json_out = copy_string(frontal::frontalise_json(parse_germ(p, q), max_jet).dump());
    return ok();
  });
}

frontal_status frontal_classify(const char* p, const char* q, int max_jet, char** json_out) {
  if (!p || !q || !json_out) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "null argument");
  if (!valid_jet(max_jet)) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "max_jet must lie in [4, 400]");
  *json_out = nullptr;
  return guard([&] {
    *json_out = copy_string(frontal::classify_json(parse_germ(p, q), max_jet).dump());
    return ok();
  });
}

frontal_status frontal_curve(const char* const* p, const char* const* q, size_t branches, int max_jet,
                             char** json_out) {
  if (!p || !q || !json_out || branches == 0) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "null argument or no branches");
  if (!valid_jet(max_jet)) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "max_jet must lie in [4, 400]");
  *json_out = nullptr;
  return guard([&] {
    std::vector<frontal::ParamCurve> cs;
    for (size_t i = 0; i < branches; ++i) {
      if (!p[i] || !q[i]) return fail(FRONTAL_ERR_INVALID_ARGUMENT, "null branch component");
      cs.push_back(frontal::make_curve(frontal::parse_expression(p[i], frontal::t_vars()),
                                       frontal::parse_expression(q[i], frontal::t_vars())));
    }
    *json_out = copy_string(frontal::curve_json(cs, max_jet).dump());
    return ok();
  });
}

void frontal_string_free(char* s) { std::free(s); }

}  // extern "C"
