#include "mesh_pattern.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <initializer_list>

namespace kingmesh {

MeshPattern::MeshPattern(Permutation tau, std::vector<Box> shaded) : tau_(std::move(tau)), shaded_(std::move(shaded)) {
  const int k = length();
  if (k > kMaxLength) throw std::invalid_argument("mesh pattern longer than " + std::to_string(kMaxLength));
  for (const Box& b : shaded_) {
    if (b.col < 0 || b.col > k || b.row < 0 || b.row > k)
      throw std::invalid_argument("box (" + std::to_string(b.col) + "," + std::to_string(b.row) +
                                  ") outside [0," + std::to_string(k) + "]");
  }
  std::sort(shaded_.begin(), shaded_.end());
  shaded_.erase(std::unique(shaded_.begin(), shaded_.end()), shaded_.end());
  for (const Box& b : shaded_) mask_ |= std::uint64_t{1} << (b.col * (k + 1) + b.row);
}

bool MeshPattern::is_shaded(Box b) const { return std::binary_search(shaded_.begin(), shaded_.end(), b); }

MeshPattern MeshPattern::with_box(Box b) const {
  std::vector<Box> boxes = shaded_;
  boxes.push_back(b);
  return MeshPattern(tau_, std::move(boxes));
}

// ---------------------------------------------------------------------------
// Catalog. Boxes are (col,row) as drawn; the underlying permutation is 12
// for every length-2 entry and 1 for X and X'.

namespace {

CatalogEntry length2(std::string id, PatternStatus status, std::initializer_list<Box> boxes) {
  return {std::move(id), MeshPattern(Permutation{1, 2}, boxes), status};
}

Catalog build_catalog() {
  constexpr auto S = PatternStatus::Solved;
  constexpr auto O = PatternStatus::Open;
  Catalog c;
  c.push_back({"X", MeshPattern(Permutation{1}, {{0, 1}, {1, 0}}), S});
  c.push_back({"X'", MeshPattern(Permutation{1}, {{0, 0}, {1, 1}}), S});
  c.push_back(length2("10", S, {{0, 0}, {0, 1}, {0, 2}, {2, 0}, {2, 1}, {2, 2}}));
  c.push_back(length2("11", S, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}));
  c.push_back(length2("12", S, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}}));
  c.push_back(length2("13", S, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}));
  c.push_back(length2("14", S, {{0, 1}, {1, 1}, {1, 2}, {1, 0}, {1, 2}, {2, 1}}));
  c.push_back(length2("16", S, {{0, 1}, {2, 0}, {1, 0}, {0, 2}}));
  c.push_back(length2("17", S, {{0, 1}, {1, 2}, {0, 0}, {2, 0}, {1, 0}, {0, 2}, {2, 1}}));
  c.push_back(length2("19", S, {{0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 2}}));
  c.push_back(length2("20", S, {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}));
  c.push_back(length2("22", S, {{0, 1}, {1, 2}, {0, 0}, {2, 0}, {2, 2}, {1, 1}}));
  c.push_back(length2("27", S, {{0, 1}, {2, 0}, {2, 2}, {1, 0}, {1, 1}, {0, 2}}));
  c.push_back(length2("28", S, {{0, 1}, {1, 2}, {0, 0}, {2, 2}, {1, 0}, {2, 1}}));
  c.push_back(length2("30", S, {{0, 1}, {1, 2}, {2, 0}, {1, 0}, {1, 1}, {2, 1}, {0, 2}}));
  c.push_back(length2("33", S, {{0, 1}, {1, 2}, {2, 0}, {1, 0}, {0, 2}, {2, 1}}));
  c.push_back(length2("34", S, {{0, 1}, {1, 2}, {0, 0}, {2, 2}, {1, 0}, {1, 1}, {2, 1}}));
  c.push_back(length2("36", S, {{0, 1}, {1, 2}, {0, 0}, {1, 0}, {1, 1}, {2, 1}}));
  c.push_back(length2("45", S, {{0, 1}, {1, 2}, {1, 0}, {1, 1}, {2, 1}, {0, 2}}));
  c.push_back(length2("55", S, {{0, 1}, {1, 2}, {0, 0}, {2, 0}, {1, 1}, {2, 1}}));
  c.push_back(length2("63", S, {{0, 1}, {1, 2}, {0, 0}, {2, 1}, {2, 0}}));
  c.push_back(length2("64", S, {{0, 1}, {1, 2}, {2, 0}, {0, 2}, {1, 1}}));
  c.push_back(length2("3", O, {{0, 0}, {0, 1}, {1, 2}}));
  c.push_back(length2("5", O, {{0, 0}, {0, 1}, {0, 2}}));
  c.push_back(length2("8", O, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  c.push_back(length2("9", O, {{0, 1}, {1, 1}, {1, 2}, {2, 1}}));
  c.push_back(length2("15", O, {{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}));
  c.push_back(length2("18", O, {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 0}, {2, 2}}));
  c.push_back(length2("21", O, {{0, 1}, {1, 2}, {0, 0}, {2, 0}, {2, 2}}));
  c.push_back(length2("56", O, {{0, 1}, {1, 2}, {0, 0}, {2, 2}, {1, 1}, {2, 1}}));
  c.push_back(length2("65", O, {{0, 1}, {1, 0}, {0, 0}, {1, 1}, {2, 2}}));
  c.push_back(length2("66", O, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}}));
  return c;
}

}  // namespace

const Catalog& catalog() {
  static const Catalog c = build_catalog();
  return c;
}

const CatalogEntry* find_entry(const Catalog& cat, std::string_view id) {
  for (const auto& e : cat)
    if (e.id == id) return &e;
  return nullptr;
}

const MeshPattern& catalog_pattern(std::string_view id) {
  const CatalogEntry* e = find_entry(catalog(), id);
  if (!e) throw UnknownPatternError("unknown catalog pattern '" + std::string(id) + "'");
  return e->pattern;
}

// ---------------------------------------------------------------------------
// Text format.

namespace {

class PatternParser {
 public:
  PatternParser(std::string_view text, const Catalog& cat) : text_(text), cat_(cat) {}

  MeshPattern parse() {
    skip_ws();
    MeshPattern result;
    if (try_keyword("nr")) {
      expect(':');
      result = parse_reference();
    } else if (try_keyword("mesh")) {
      expect('(');
      result = parse_mesh();
      expect(')');
    } else {
      fail("expected 'mesh(' or 'nr:'");
    }
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool try_keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string_view digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return text_.substr(start, pos_ - start);
  }

  int integer() {
    const std::size_t start = pos_;
    const std::string_view d = digits();
    int v = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || ptr != d.data() + d.size()) {
      pos_ = start;
      fail("integer out of range");
    }
    return v;
  }

  MeshPattern parse_reference() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '\'' || text_[pos_] == '_'))
      ++pos_;
    const std::string_view id = text_.substr(start, pos_ - start);
    if (id.empty()) fail("expected a catalog id");
    const CatalogEntry* e = find_entry(cat_, id);
    if (!e) throw UnknownPatternError("unknown catalog pattern '" + std::string(id) + "'");
    return e->pattern;
  }

  MeshPattern parse_mesh() {
    skip_ws();
    const std::size_t k_pos = pos_;
    const int k = integer();
    if (k > MeshPattern::kMaxLength) {
      pos_ = k_pos;
      fail("pattern length above " + std::to_string(MeshPattern::kMaxLength));
    }
    expect(';');
    const std::size_t tau_pos = (skip_ws(), pos_);
    std::vector<std::string_view> tokens;
    while (peek() != ';') {
      tokens.push_back(digits());
      if (peek() != ';') fail("expected ';'");
      const std::size_t semicolon = pos_;
      ++pos_;
      if (peek() == '{') {
        pos_ = semicolon;  // the caller consumes the terminating ';'
        break;
      }
    }
    expect(';');
    const Permutation tau = make_tau(k, tokens, tau_pos);
    std::vector<Box> boxes = parse_boxes(k);
    return MeshPattern(tau, std::move(boxes));
  }

  Permutation make_tau(int k, const std::vector<std::string_view>& tokens, std::size_t at) {
    std::vector<int> values;
    if (tokens.size() == 1 && k > 1) {
      for (char ch : tokens.front()) values.push_back(ch - '0');
    } else {
      for (auto tok : tokens) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc()) v = -1;
        values.push_back(v);
      }
    }
    if (static_cast<int>(values.size()) != k) {
      pos_ = at;
      fail("tau has " + std::to_string(values.size()) + " entries, expected " + std::to_string(k));
    }
    try {
      return Permutation(std::move(values));
    } catch (const std::invalid_argument& e) {
      pos_ = at;
      fail(std::string("tau is not a permutation of 1..k: ") + e.what());
    }
  }

  std::vector<Box> parse_boxes(int k) {
    std::vector<Box> boxes;
    expect('{');
    if (peek() == '}') {
      ++pos_;
      return boxes;
    }
    while (true) {
      skip_ws();
      const std::size_t box_pos = pos_;
      expect('(');
      const int col = integer();
      expect(',');
      const int row = integer();
      expect(')');
      if (col > k || row > k) {
        pos_ = box_pos;
        fail("box (" + std::to_string(col) + "," + std::to_string(row) + ") out of range [0," + std::to_string(k) +
             "]");
      }
      boxes.push_back({col, row});
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect('}');
      return boxes;
    }
  }

  std::string_view text_;
  const Catalog& cat_;
  std::size_t pos_ = 0;
};

}  // namespace

MeshPattern parse_pattern(std::string_view text, const Catalog& cat) { return PatternParser(text, cat).parse(); }

std::string render(const MeshPattern& p) {
  std::string out = "mesh(" + std::to_string(p.length()) + ";";
  for (std::size_t i = 0; i < p.tau().size(); ++i) {
    if (p.length() > 9 && i > 0) out += ';';
    out += std::to_string(p.tau()[i]);
  }
  out += ";{";
  bool first = true;
  for (const Box& b : p.shaded()) {
    if (!first) out += ',';
    first = false;
    out += "(" + std::to_string(b.col) + "," + std::to_string(b.row) + ")";
  }
  out += "})";
  return out;
}

// ---------------------------------------------------------------------------
// Counting.

namespace {

constexpr int kCodeBits = 3;  // entries of a length <= 7 pattern fit in 3 bits each

std::uint32_t rank_code(std::span<const int> values) {
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::uint32_t rank = 0;
    for (int v : values)
      if (v < values[i]) ++rank;
    code |= rank << (kCodeBits * i);
  }
  return code;
}

}  // namespace

OccurrenceCounter::OccurrenceCounter(std::vector<MeshPattern> patterns) : patterns_(std::move(patterns)) {
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    const MeshPattern& p = patterns_[i];
    auto it = std::find_if(groups_.begin(), groups_.end(), [&](const LengthGroup& g) { return g.k == p.length(); });
    if (it == groups_.end()) {
      groups_.push_back({p.length(), {}});
      it = groups_.end() - 1;
    }
    it->targets.push_back({i, rank_code(p.tau().values()), p.shaded_mask()});
  }
}

void OccurrenceCounter::count(std::span<const int> s, std::span<std::uint64_t> out) const {
  std::fill(out.begin(), out.end(), 0);
  const int n = static_cast<int>(s.size());
  for (const LengthGroup& g : groups_) {
    const int k = g.k;
    if (k > n) continue;
    int idx[MeshPattern::kMaxLength];
    int vals[MeshPattern::kMaxLength];
    int sorted_vals[MeshPattern::kMaxLength];
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      for (int i = 0; i < k; ++i) vals[i] = s[idx[i]];
      const std::uint32_t code = rank_code(std::span<const int>(vals, k));
      bool wanted = false;
      for (const Target& t : g.targets) wanted |= (t.tau_code == code);
      if (wanted) {
        std::copy(vals, vals + k, sorted_vals);
        std::sort(sorted_vals, sorted_vals + k);
        // Which grid regions hold at least one entry outside the occurrence.
        std::uint64_t occupied = 0;
        int col = 0;
        for (int m = 0; m < n; ++m) {
          if (col < k && idx[col] == m) {
            ++col;
            continue;
          }
          int row = 0;
          while (row < k && sorted_vals[row] < s[m]) ++row;
          occupied |= std::uint64_t{1} << (col * (k + 1) + row);
        }
        for (const Target& t : g.targets)
          if (t.tau_code == code && (occupied & t.mask) == 0) ++out[t.index];
      }
      // Next k-subset of {0..n-1} in lexicographic order.
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

Integer count_occurrences(const MeshPattern& p, const Permutation& s) {
  const OccurrenceCounter counter({p});
  std::uint64_t c = 0;
  counter.count(s.values(), std::span<std::uint64_t>(&c, 1));
  return Integer(static_cast<unsigned long>(c));
}

bool avoids(const MeshPattern& p, const Permutation& s) { return count_occurrences(p, s) == 0; }

}  // namespace kingmesh
