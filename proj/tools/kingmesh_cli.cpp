// Command-line front end. Everything goes through the C interface.

#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "kingmesh/kingmesh.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "table";
  int jobs = 0;

  int n = 0;
  std::string cls = "all";
  std::string method = "rec";

  std::string pattern;
  int n_max = 9;
  bool allow_large = false;

  std::string series_name;
  int order = 30;

  std::string theorem;
  std::string equation;
  bool all = false;
};

struct StringDeleter {
  void operator()(char* s) const { km_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

km_format output_format(const Options& o) { return o.format == "json" ? KM_FORMAT_JSON : KM_FORMAT_TABLE; }

// Invalid input maps to the usage exit code; anything else is a failure.
int report_error(km_status status) {
  std::fprintf(stderr, "kingmesh: %s: %s\n", km_status_name(status), km_last_error());
  switch (status) {
    case KM_ERR_INVALID_ARGUMENT:
    case KM_ERR_PARSE:
    case KM_ERR_UNKNOWN_PATTERN:
    case KM_ERR_TOO_LARGE:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

int print_owned(char* text) {
  OwnedString owned(text);
  std::fputs(owned.get(), stdout);
  return kExitOk;
}

km_status parse_class(const Options& o, km_class* out) { return km_parse_class(o.cls.c_str(), out); }

int run_count(const Options& o) {
  km_class cls;
  km_method method;
  km_status s = parse_class(o, &cls);
  if (s == KM_OK) s = km_parse_method(o.method.c_str(), &method);
  char* out = nullptr;
  if (s == KM_OK) s = km_count(o.n, cls, method, o.jobs, &out);
  if (s != KM_OK) return report_error(s);
  OwnedString count(out);
  if (output_format(o) == KM_FORMAT_JSON)
    std::printf("{\n  \"n\": %d,\n  \"class\": \"%s\",\n  \"method\": \"%s\",\n  \"count\": \"%s\"\n}\n", o.n,
                o.cls.c_str(), o.method.c_str(), count.get());
  else
    std::printf("%s\n", count.get());
  return kExitOk;
}

struct ListState {
  bool json = false;
  bool first = true;
  std::string line;
};

int emit_permutation(void* ctx, const int* values, int n) {
  auto* state = static_cast<ListState*>(ctx);
  std::string& line = state->line;
  line.clear();
  for (int i = 0; i < n; ++i) {
    if (n > 9 && i > 0) line += ';';
    line += std::to_string(values[i]);
  }
  if (state->json) {
    std::printf("%s\n    \"%s\"", state->first ? "" : ",", line.c_str());
  } else {
    std::printf("%s\n", line.c_str());
  }
  state->first = false;
  return 0;
}

int run_list(const Options& o) {
  km_class cls;
  if (km_status s = parse_class(o, &cls); s != KM_OK) return report_error(s);
  ListState state;
  state.json = output_format(o) == KM_FORMAT_JSON;
  if (state.json) std::printf("{\n  \"n\": %d,\n  \"class\": \"%s\",\n  \"permutations\": [", o.n, o.cls.c_str());
  const km_status s = km_enumerate(o.n, cls, emit_permutation, &state);
  if (state.json) std::printf("%s]\n}\n", state.first ? "" : "\n  ");
  return s == KM_OK ? kExitOk : report_error(s);
}

int run_dist(const Options& o) {
  km_class cls;
  if (km_status s = parse_class(o, &cls); s != KM_OK) return report_error(s);
  km_pattern* pattern = nullptr;
  if (km_status s = km_pattern_parse(o.pattern.c_str(), &pattern); s != KM_OK) return report_error(s);
  std::unique_ptr<km_pattern, decltype(&km_pattern_free)> owned_pattern(pattern, km_pattern_free);
  if (o.n_max > km_large_threshold() && o.allow_large)
    std::fprintf(stderr, "kingmesh: n-max %d enumerates millions of permutations; this can take a while\n", o.n_max);
  km_table* table = nullptr;
  if (km_status s = km_table_compute(pattern, o.n_max, cls, o.jobs, o.allow_large, &table); s != KM_OK)
    return report_error(s);
  std::unique_ptr<km_table, decltype(&km_table_free)> owned_table(table, km_table_free);
  char* out = nullptr;
  if (km_status s = km_table_render(table, output_format(o), &out); s != KM_OK) return report_error(s);
  return print_owned(out);
}

int run_series(const Options& o) {
  km_series* series = nullptr;
  if (km_status s = km_series_build(o.series_name.c_str(), o.order, &series); s != KM_OK) return report_error(s);
  std::unique_ptr<km_series, decltype(&km_series_free)> owned(series, km_series_free);
  char* out = nullptr;
  if (km_status s = km_series_render(series, output_format(o), &out); s != KM_OK) return report_error(s);
  return print_owned(out);
}

int run_verify(const Options& o) {
  km_reports* reports = nullptr;
  km_status s;
  if (!o.theorem.empty())
    s = km_verify_theorem(o.theorem.c_str(), o.order, o.n_max, o.jobs, o.allow_large, &reports);
  else if (!o.equation.empty())
    s = km_verify_equation(o.equation.c_str(), o.order, &reports);
  else
    s = km_verify_all(o.order, o.n_max, o.jobs, o.allow_large, &reports);
  if (s != KM_OK) return report_error(s);
  std::unique_ptr<km_reports, decltype(&km_reports_free)> owned(reports, km_reports_free);
  char* out = nullptr;
  if (km_status r = km_reports_render(reports, output_format(o), &out); r != KM_OK) return report_error(r);
  print_owned(out);
  return km_reports_failures(reports) == 0 ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mesh-pattern distributions on king permutations"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Options o;
  app.add_option("--format", o.format, "Output mode")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--jobs", o.jobs, "Worker threads (0: automatic)")
      ->envname("KINGMESH_JOBS")
      ->check(CLI::NonNegativeNumber);

  const auto add_class = [&](CLI::App* sub) {
    sub->add_option("--class", o.cls, "King class")->check(CLI::IsMember({"all", "s", "l", "sl", "ls"}));
  };

  CLI::App* count = app.add_subcommand("count", "Number of king permutations of length n");
  count->add_option("--n", o.n, "Length")->required()->check(CLI::NonNegativeNumber);
  add_class(count);
  count->add_option("--method", o.method, "Counting method")
      ->check(CLI::IsMember({"rec", "explicit", "gf", "enum"}));

  CLI::App* list = app.add_subcommand("list", "Print the king permutations of length n");
  list->add_option("--n", o.n, "Length")->required()->check(CLI::NonNegativeNumber);
  add_class(list);

  CLI::App* dist = app.add_subcommand("dist", "Occurrence distribution of a pattern by enumeration");
  dist->add_option("--pattern", o.pattern, "mesh(k;tau;{(i,j),...}) or nr:<id>")->required();
  dist->add_option("--n-max", o.n_max, "Largest length")->check(CLI::NonNegativeNumber);
  add_class(dist);
  dist->add_flag("--allow-large", o.allow_large, "Permit n-max above 10");

  CLI::App* series = app.add_subcommand("series", "Expand a generating function");
  series->add_option("--name", o.series_name, "A, B, C, Atu, Btu, Ctu, P:<nr> or E:<nr>")->required();
  series->add_option("--order", o.order, "Truncation order")->check(CLI::NonNegativeNumber);

  CLI::App* verify = app.add_subcommand("verify", "Run checks; exit status 1 if any fails");
  auto* theorem = verify->add_option("--theorem", o.theorem, "Solved pattern number");
  auto* equation = verify->add_option("--equation", o.equation, "Equation id");
  auto* all = verify->add_flag("--all", o.all, "Every check (the default)");
  theorem->excludes(equation)->excludes(all);
  equation->excludes(all);
  verify->add_option("--order", o.order, "Truncation order")->check(CLI::PositiveNumber);
  verify->add_option("--n-max", o.n_max, "Largest enumerated length")->check(CLI::NonNegativeNumber);
  verify->add_flag("--allow-large", o.allow_large, "Permit n-max above 10");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::fputs(app.help().c_str(), stderr);
    return kExitUsage;
  }

  if (*count) return run_count(o);
  if (*list) return run_list(o);
  if (*dist) return run_dist(o);
  if (*series) return run_series(o);
  return run_verify(o);
}
