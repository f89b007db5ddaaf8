#include "formats.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kingmesh {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

// Left-aligned columns separated by two spaces; the last column is not padded.
std::string columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out += r[i];
      if (i + 1 < r.size()) out += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string table_to_json(const DistributionTable& t) {
  Json rows = Json::array();
  for (int n = 0; n <= t.n_max(); ++n)
    rows.push_back({{"n", n},
                    {"distribution", t.rows[n].to_string()},
                    {"total", t.rows[n].sum_of_coefficients().get_str()}});
  Json j;
  j["pattern"] = render(t.pattern);
  j["class"] = std::string(to_string(t.cls));
  j["rows"] = std::move(rows);
  return dump(j);
}

DistributionTable table_from_json(std::string_view text) {
  const Json j = parse_json(text);
  try {
    const auto cls = parse_king_class(j.at("class").get<std::string>());
    if (!cls) throw std::invalid_argument("unknown class in table JSON");
    DistributionTable t{parse_pattern(j.at("pattern").get<std::string>()), *cls, {}};
    for (const auto& row : j.at("rows")) {
      if (row.at("n").get<int>() != static_cast<int>(t.rows.size()))
        throw std::invalid_argument("table rows out of order");
      t.rows.push_back(UPoly::parse(row.at("distribution").get<std::string>()));
    }
    return t;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad table JSON: ") + e.what());
  }
}

std::string table_to_text(const DistributionTable& t) {
  std::string out = "pattern " + render(t.pattern) + "  class " + std::string(to_string(t.cls)) + "\n";
  std::vector<std::vector<std::string>> rows = {{"n", "distribution", "total"}};
  for (int n = 0; n <= t.n_max(); ++n)
    rows.push_back({std::to_string(n), t.rows[n].to_string(), t.rows[n].sum_of_coefficients().get_str()});
  return out + columns(rows);
}

std::string series_to_json(std::string_view name, const USeries& s) {
  Json coeffs = Json::array();
  for (int n = 0; n <= s.order(); ++n) coeffs.push_back({{"n", n}, {"coefficient", s.coeff(n).to_string()}});
  Json j;
  j["name"] = std::string(name);
  j["order"] = s.order();
  j["coefficients"] = std::move(coeffs);
  return dump(j);
}

USeries series_from_json(std::string_view text) {
  const Json j = parse_json(text);
  try {
    USeries s(j.at("order").get<int>());
    for (const auto& c : j.at("coefficients")) {
      const int n = c.at("n").get<int>();
      if (n < 0 || n > s.order()) throw std::invalid_argument("coefficient index out of range");
      s.coeff(n) = UPoly::parse(c.at("coefficient").get<std::string>());
    }
    return s;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad series JSON: ") + e.what());
  }
}

std::string series_to_text(std::string_view name, const USeries& s) {
  std::vector<std::vector<std::string>> rows = {{"n", std::string(name)}};
  for (int n = 0; n <= s.order(); ++n) rows.push_back({std::to_string(n), s.coeff(n).to_string()});
  return columns(rows);
}

std::string reports_to_json(std::span<const CheckReport> reports) {
  Json arr = Json::array();
  for (const auto& r : reports) {
    Json j;
    j["id"] = r.id;
    j["subject"] = r.subject;
    j["status"] = std::string(to_string(r.status));
    if (r.witness)
      j["witness"] = {{"n", r.witness->n},
                      {"expected", r.witness->expected.to_string()},
                      {"actual", r.witness->actual.to_string()}};
    if (!r.detail.empty()) j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  return dump(arr);
}

std::vector<CheckReport> reports_from_json(std::string_view text) {
  const Json arr = parse_json(text);
  if (!arr.is_array()) throw std::invalid_argument("report JSON must be an array");
  std::vector<CheckReport> out;
  try {
    for (const auto& j : arr) {
      CheckReport r;
      r.id = j.at("id").get<std::string>();
      r.subject = j.at("subject").get<std::string>();
      const auto status = parse_check_status(j.at("status").get<std::string>());
      if (!status) throw std::invalid_argument("unknown status in report JSON");
      r.status = *status;
      if (j.contains("witness")) {
        const Json& w = j["witness"];
        r.witness = Witness{w.at("n").get<int>(), UPoly::parse(w.at("expected").get<std::string>()),
                            UPoly::parse(w.at("actual").get<std::string>())};
      }
      if (j.contains("detail")) r.detail = j["detail"].get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
  }
  return out;
}

std::string reports_to_text(std::span<const CheckReport> reports) {
  std::vector<std::vector<std::string>> rows = {{"status", "id", "subject", "detail"}};
  std::size_t typos = 0;
  for (const auto& r : reports) {
    std::string detail = r.detail;
    if (r.witness) {
      detail += (detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(r.witness->n) + " expected " +
                r.witness->expected.to_string() + " got " + r.witness->actual.to_string();
    }
    rows.push_back({std::string(to_string(r.status)), r.id, r.subject, detail});
    typos += r.status == CheckStatus::PossiblePaperTypo;
  }
  std::ostringstream summary;
  summary << reports.size() << " checks, " << count_failures(reports) << " failed, " << typos
          << " possible paper typos\n";
  return columns(rows) + summary.str();
}

}  // namespace kingmesh
