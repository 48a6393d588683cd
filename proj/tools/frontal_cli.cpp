#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frontal/frontal.h"

namespace {

enum Exit { kOk = 0, kError = 1, kMismatch = 2, kParse = 3, kUndetermined = 4 };

struct Common {
  int max_jet = 40;
  std::string format = "text";
  std::string reading = "both";
  unsigned threads = 0;
};

frontal_format format_of(const Common& c) {
  if (c.format == "json") return FRONTAL_FORMAT_JSON_PRETTY;
  if (c.format == "jsonl") return FRONTAL_FORMAT_JSON;
  return FRONTAL_FORMAT_TEXT;
}

frontal_options options_of(const Common& c) {
  frontal_options o;
  frontal_options_init(&o);
  o.max_jet = c.max_jet;
  o.reading = c.reading == "dplus" ? FRONTAL_READING_DPLUS
              : c.reading == "full" ? FRONTAL_READING_FULL
                                    : FRONTAL_READING_BOTH;
  o.threads = c.threads;
  return o;
}

int report_error(frontal_status s) {
  std::fprintf(stderr, "error: %s\n", frontal_last_error());
  return s == FRONTAL_ERR_PARSE ? kParse : kError;
}

int analyze(const Common& c, const std::string& name, const std::string& p, const std::string& q,
            const char* section) {
  const frontal_options o = options_of(c);
  frontal_report* r = nullptr;
  if (frontal_status s = frontal_analyze(name.c_str(), p.c_str(), q.c_str(), &o, &r); s != FRONTAL_OK)
    return report_error(s);
  int code = kOk;
  if (frontal_report_parse_failed(r)) {
    std::fprintf(stderr, "error: %s\n", frontal_report_stage_message(r, "parse"));
    code = kParse;
  } else if (frontal_report_undetermined(r)) {
    code = kUndetermined;
  }
  const char* out = frontal_report_render(r, section, format_of(c));
  if (!out) out = frontal_report_render(r, nullptr, format_of(c));
  std::fputs(out, stdout);
  if (format_of(c) != FRONTAL_FORMAT_TEXT) std::fputc('\n', stdout);
  frontal_report_free(r);
  return code;
}

int print_json(frontal_status s, char* json) {
  if (s != FRONTAL_OK) return report_error(s);
  std::puts(json);
  frontal_string_free(json);
  return kOk;
}

int corpus(const Common& c, const std::string& path) {
  frontal_corpus* corpus = nullptr;
  if (frontal_status s = frontal_corpus_load(path.c_str(), &corpus); s != FRONTAL_OK) return report_error(s);
  const frontal_options o = options_of(c);
  if (frontal_status s = frontal_corpus_run(corpus, &o); s != FRONTAL_OK) {
    frontal_corpus_free(corpus);
    return report_error(s);
  }
  int parse = 0, mismatched = 0, undetermined = 0;
  const bool text = format_of(c) == FRONTAL_FORMAT_TEXT;
  for (size_t i = 0; i < frontal_corpus_size(corpus); ++i) {
    frontal_report* r = frontal_corpus_report(corpus, i);
    const bool pf = frontal_report_parse_failed(r);
    const int mm = frontal_report_mismatches(r);
    const bool und = frontal_report_undetermined(r);
    parse += pf;
    mismatched += mm > 0;
    undetermined += und;
    if (text) {
      std::printf("%-28s %s\n", frontal_report_name(r),
                  pf ? "PARSE ERROR" : mm ? "MISMATCH" : und ? "UNDETERMINED" : "ok");
      if (mm) std::fputs(frontal_report_mismatch_text(r), stdout);
    } else {
      std::puts(frontal_report_render(r, nullptr, FRONTAL_FORMAT_JSON));
    }
  }
  if (text)
    std::printf("%zu germs, %d parse errors, %d mismatched, %d undetermined\n", frontal_corpus_size(corpus), parse,
                mismatched, undetermined);
  frontal_corpus_free(corpus);
  if (parse) return kParse;
  if (mismatched) return kMismatch;
  if (undetermined) return kUndetermined;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frontal map germ invariants for f(x,y) = (x, p(x,y), q(x,y))"};
  app.set_version_flag("--version", std::string(frontal_version()));
  app.require_subcommand(1);
  Common c;
  app.add_option("--max-jet", c.max_jet, "Jet order cap for local computations")
      ->check(CLI::Range(4, 400))
      ->capture_default_str();
  app.add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "jsonl"}))
      ->capture_default_str();
  app.add_option("--reading", c.reading, "Curve used for mu(D): dplus, full or both")
      ->check(CLI::IsMember({"dplus", "full", "both"}))
      ->capture_default_str();
  app.fallthrough();

  std::string name = "germ", p, q, path;
  std::vector<std::string> branches;

  auto* an = app.add_subcommand("analyze", "Run the full pipeline on one germ");
  an->add_option("p", p, "Second component p(x,y)")->required();
  an->add_option("q", q, "Third component q(x,y)")->required();
  an->add_option("--name", name, "Germ name");

  auto* inv = app.add_subcommand("invariants", "S, K, T, W, Milnor numbers and mu_F");
  inv->add_option("p", p)->required();
  inv->add_option("q", q)->required();

  auto* fr = app.add_subcommand("frontalise", "Frontalise a fold germ (x, y^2, y h(x, y^2))");
  fr->add_option("p", p)->required();
  fr->add_option("q", q)->required();

  auto* cl = app.add_subcommand("classify", "Match a fold germ against the simple families");
  cl->add_option("p", p)->required();
  cl->add_option("q", q)->required();

  auto* cu = app.add_subcommand("curve", "Plane curve branches t -> (p(t), q(t))");
  cu->add_option("--branch", branches, "Branch as \"p,q\", repeatable")->required();

  auto* co = app.add_subcommand("corpus", "Analyse a JSON-lines corpus and check expectations");
  co->add_option("file", path)->required()->check(CLI::ExistingFile);
  co->add_option("--threads", c.threads, "Worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  if (*an) return analyze(c, name, p, q, nullptr);
  if (*inv) return analyze(c, name, p, q, "invariants");
  if (*fr) {
    char* json = nullptr;
    const frontal_status s = frontal_frontalise(p.c_str(), q.c_str(), c.max_jet, &json);
    return print_json(s, json);
  }
  if (*cl) {
    char* json = nullptr;
    const frontal_status s = frontal_classify(p.c_str(), q.c_str(), c.max_jet, &json);
    return print_json(s, json);
  }
  if (*cu) {
    std::vector<std::string> ps, qs;
    for (const auto& b : branches) {
      const auto semi = b.find(',');
      if (semi == std::string::npos) {
        std::fprintf(stderr, "error: branch '%s' must have the form \"p,q\"\n", b.c_str());
        return kError;
      }
      ps.push_back(b.substr(0, semi));
      qs.push_back(b.substr(semi + 1));
    }
    std::vector<const char*> pp, qq;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      pp.push_back(ps[i].c_str());
      qq.push_back(qs[i].c_str());
    }
    char* json = nullptr;
    const frontal_status s = frontal_curve(pp.data(), qq.data(), pp.size(), c.max_jet, &json);
    return print_json(s, json);
  }
  if (*co) return corpus(c, path);
  return kError;
}
