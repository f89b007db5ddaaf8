#include "kingmesh/kingmesh.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "errors.hpp"
#include "formats.hpp"
#include "generating_functions.hpp"
#include "mesh_pattern.hpp"
#include "oracle.hpp"
#include "perm_core.hpp"
#include "verifier.hpp"

struct km_pattern {
  kingmesh::MeshPattern pattern;
};

struct km_table {
  kingmesh::DistributionTable table;
};

struct km_series {
  std::string name;
  kingmesh::USeries series;
};

struct km_reports {
  std::vector<kingmesh::CheckReport> reports;
};

namespace {

using namespace kingmesh;

thread_local std::string last_error;
thread_local long last_offset = -1;

km_status set_error(km_status status, const std::string& message, long offset = -1) {
  last_error = message;
  last_offset = offset;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
km_status guarded(Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return set_error(KM_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const UnknownPatternError& e) {
    return set_error(KM_ERR_UNKNOWN_PATTERN, e.what());
  } catch (const SeriesError& e) {
    return set_error(KM_ERR_SERIES, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(KM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return set_error(KM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return set_error(KM_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(KM_ERR_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

km_status null_argument(const char* what) {
  return set_error(KM_ERR_INVALID_ARGUMENT, std::string(what) + " must not be null");
}

std::optional<KingClass> to_class(km_class c) {
  switch (c) {
    case KM_CLASS_ALL: return KingClass::All;
    case KM_CLASS_S: return KingClass::S;
    case KM_CLASS_L: return KingClass::L;
    case KM_CLASS_SL: return KingClass::SL;
    case KM_CLASS_LS: return KingClass::LS;
  }
  return std::nullopt;
}

std::optional<CountMethod> to_method(km_method m) {
  switch (m) {
    case KM_METHOD_REC: return CountMethod::Recurrence;
    case KM_METHOD_EXPLICIT: return CountMethod::Explicit;
    case KM_METHOD_GF: return CountMethod::GeneratingFunction;
    case KM_METHOD_ENUM: return CountMethod::Enumerate;
  }
  return std::nullopt;
}

int effective_jobs(int jobs) { return jobs > 0 ? jobs : default_jobs(); }

km_status check_size(int n_max, int allow_large) {
  if (n_max > kLargeOracleLength && !allow_large)
    return set_error(KM_ERR_TOO_LARGE, "n_max " + std::to_string(n_max) + " exceeds " +
                                           std::to_string(kLargeOracleLength) +
                                           " and large runs were not allowed (K_11 has about 5.3 million members)");
  return KM_OK;
}

km_status render_to(const std::string& text, char** out) {
  *out = duplicate(text);
  return KM_OK;
}

}  // namespace

extern "C" {

const char* km_version(void) { return "1.0.0"; }

const char* km_status_name(km_status status) {
  switch (status) {
    case KM_OK: return "ok";
    case KM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KM_ERR_PARSE: return "parse error";
    case KM_ERR_UNKNOWN_PATTERN: return "unknown pattern";
    case KM_ERR_SERIES: return "series error";
    case KM_ERR_TOO_LARGE: return "too large";
    case KM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* km_last_error(void) { return last_error.c_str(); }

long km_last_error_offset(void) { return last_offset; }

void km_string_free(char* s) { std::free(s); }

km_status km_parse_class(const char* text, km_class* out) {
  if (text == nullptr || out == nullptr) return null_argument("class text and output");
  const auto c = parse_king_class(text);
  if (!c) return set_error(KM_ERR_INVALID_ARGUMENT, std::string("unknown class '") + text + "'");
  *out = static_cast<km_class>(static_cast<int>(*c));
  return KM_OK;
}

km_status km_parse_method(const char* text, km_method* out) {
  if (text == nullptr || out == nullptr) return null_argument("method text and output");
  const auto m = parse_count_method(text);
  if (!m) return set_error(KM_ERR_INVALID_ARGUMENT, std::string("unknown method '") + text + "'");
  *out = static_cast<km_method>(static_cast<int>(*m));
  return KM_OK;
}

int km_default_jobs(void) { return default_jobs(); }

int km_large_threshold(void) { return kLargeOracleLength; }

km_status km_count(int n, km_class cls, km_method method, int jobs, char** out_decimal) {
  if (out_decimal == nullptr) return null_argument("output");
  return guarded([&] {
    const auto c = to_class(cls);
    const auto m = to_method(method);
    if (!c || !m) return set_error(KM_ERR_INVALID_ARGUMENT, "unknown class or method");
    return render_to(count_kings(n, *c, *m, effective_jobs(jobs)).get_str(), out_decimal);
  });
}

km_status km_enumerate(int n, km_class cls, km_perm_visitor visit, void* ctx) {
  if (visit == nullptr) return null_argument("visitor");
  return guarded([&] {
    const auto c = to_class(cls);
    if (!c) return set_error(KM_ERR_INVALID_ARGUMENT, "unknown class");
    if (n < 0 || n > kMaxEnumerationLength)
      return set_error(KM_ERR_INVALID_ARGUMENT, "length must be in 0.." + std::to_string(kMaxEnumerationLength));
    // Early stop unwinds the backtracker through an exception local to this call.
    struct Stop {};
    try {
      for_each_king(n, *c, [&](std::span<const int> s) {
        if (visit(ctx, s.data(), static_cast<int>(s.size())) != 0) throw Stop{};
      });
    } catch (const Stop&) {
    }
    return KM_OK;
  });
}

km_status km_pattern_parse(const char* text, km_pattern** out) {
  if (text == nullptr || out == nullptr) return null_argument("pattern text and output");
  return guarded([&] {
    *out = new km_pattern{parse_pattern(text)};
    return KM_OK;
  });
}

void km_pattern_free(km_pattern* p) { delete p; }

km_status km_pattern_render(const km_pattern* p, char** out) {
  if (p == nullptr || out == nullptr) return null_argument("pattern and output");
  return guarded([&] { return render_to(render(p->pattern), out); });
}

km_status km_pattern_occurrences(const km_pattern* p, const int* values, int n, char** out_decimal) {
  if (p == nullptr || out_decimal == nullptr || (values == nullptr && n > 0)) return null_argument("arguments");
  return guarded([&] {
    if (n < 0) return set_error(KM_ERR_INVALID_ARGUMENT, "negative length");
    const Permutation perm(std::vector<int>(values, values + n));
    return render_to(count_occurrences(p->pattern, perm).get_str(), out_decimal);
  });
}

size_t km_catalog_size(void) { return catalog().size(); }

const char* km_catalog_id(size_t index) {
  return index < catalog().size() ? catalog()[index].id.c_str() : nullptr;
}

int km_catalog_is_solved(size_t index) {
  return index < catalog().size() && catalog()[index].status == PatternStatus::Solved;
}

km_status km_table_compute(const km_pattern* p, int n_max, km_class cls, int jobs, int allow_large, km_table** out) {
  if (p == nullptr || out == nullptr) return null_argument("pattern and output");
  return guarded([&] {
    const auto c = to_class(cls);
    if (!c) return set_error(KM_ERR_INVALID_ARGUMENT, "unknown class");
    if (n_max < 0) return set_error(KM_ERR_INVALID_ARGUMENT, "n_max must be nonnegative");
    if (const km_status s = check_size(n_max, allow_large); s != KM_OK) return s;
    *out = new km_table{distribution_table(p->pattern, n_max, *c, effective_jobs(jobs))};
    return KM_OK;
  });
}

void km_table_free(km_table* t) { delete t; }

int km_table_n_max(const km_table* t) { return t == nullptr ? -1 : t->table.n_max(); }

km_status km_table_row(const km_table* t, int n, char** out_poly) {
  if (t == nullptr || out_poly == nullptr) return null_argument("table and output");
  if (n < 0 || n > t->table.n_max()) return set_error(KM_ERR_INVALID_ARGUMENT, "row index out of range");
  return guarded([&] { return render_to(t->table.rows[n].to_string(), out_poly); });
}

km_status km_table_render(const km_table* t, km_format format, char** out) {
  if (t == nullptr || out == nullptr) return null_argument("table and output");
  return guarded([&] {
    return render_to(format == KM_FORMAT_JSON ? table_to_json(t->table) : table_to_text(t->table), out);
  });
}

km_status km_series_build(const char* name, int order, km_series** out) {
  if (name == nullptr || out == nullptr) return null_argument("series name and output");
  return guarded([&] {
    if (order < 0) return set_error(KM_ERR_INVALID_ARGUMENT, "order must be nonnegative");
    const SeriesName parsed = parse_series_name(name);
    *out = new km_series{parsed.to_string(), build_series(parsed, order)};
    return KM_OK;
  });
}

void km_series_free(km_series* s) { delete s; }

int km_series_order(const km_series* s) { return s == nullptr ? -1 : s->series.order(); }

km_status km_series_coefficient(const km_series* s, int n, char** out_poly) {
  if (s == nullptr || out_poly == nullptr) return null_argument("series and output");
  if (n < 0 || n > s->series.order()) return set_error(KM_ERR_INVALID_ARGUMENT, "coefficient index out of range");
  return guarded([&] { return render_to(s->series.coeff(n).to_string(), out_poly); });
}

km_status km_series_render(const km_series* s, km_format format, char** out) {
  if (s == nullptr || out == nullptr) return null_argument("series and output");
  return guarded([&] {
    return render_to(format == KM_FORMAT_JSON ? series_to_json(s->name, s->series) : series_to_text(s->name, s->series),
                     out);
  });
}

km_status km_verify_theorem(const char* nr, int order, int n_max, int jobs, int allow_large, km_reports** out) {
  if (nr == nullptr || out == nullptr) return null_argument("pattern number and output");
  return guarded([&] {
    if (const km_status s = check_size(n_max, allow_large); s != KM_OK) return s;
    const Verifier v(catalog(), effective_jobs(jobs));
    *out = new km_reports{{v.verify_theorem(nr, order, n_max)}};
    return KM_OK;
  });
}

km_status km_verify_equation(const char* id, int order, km_reports** out) {
  if (id == nullptr || out == nullptr) return null_argument("equation id and output");
  return guarded([&] {
    const Verifier v;
    *out = new km_reports{{v.verify_equation(id, order)}};
    return KM_OK;
  });
}

km_status km_verify_all(int order, int n_max, int jobs, int allow_large, km_reports** out) {
  if (out == nullptr) return null_argument("output");
  return guarded([&] {
    if (const km_status s = check_size(n_max, allow_large); s != KM_OK) return s;
    const Verifier v(catalog(), effective_jobs(jobs));
    *out = new km_reports{v.verify_all(order, n_max)};
    return KM_OK;
  });
}

size_t km_equation_count(void) { return equation_ids().size(); }

const char* km_equation_id(size_t index) {
  // Registry ids are literals, so their data is NUL-terminated.
  return index < equation_ids().size() ? equation_ids()[index].data() : nullptr;
}

void km_reports_free(km_reports* r) { delete r; }

size_t km_reports_size(const km_reports* r) { return r == nullptr ? 0 : r->reports.size(); }

size_t km_reports_failures(const km_reports* r) { return r == nullptr ? 0 : count_failures(r->reports); }

const char* km_reports_id(const km_reports* r, size_t index) {
  return r != nullptr && index < r->reports.size() ? r->reports[index].id.c_str() : nullptr;
}

const char* km_reports_status(const km_reports* r, size_t index) {
  return r != nullptr && index < r->reports.size() ? to_string(r->reports[index].status).data() : nullptr;
}

km_status km_reports_render(const km_reports* r, km_format format, char** out) {
  if (r == nullptr || out == nullptr) return null_argument("reports and output");
  return guarded([&] {
    return render_to(format == KM_FORMAT_JSON ? reports_to_json(r->reports) : reports_to_text(r->reports), out);
  });
}

}  // extern "C"
