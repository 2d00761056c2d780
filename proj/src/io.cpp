#include "starlab/io.hpp"

#include <fstream>
#include <sstream>

namespace starlab {

namespace {

struct Cursor {
  std::istringstream in;
  std::string line;
  int lineno = 0;

  explicit Cursor(const std::string& text) : in(text) {}

  // Next content line with comments and blanks stripped; false at EOF.
  bool next(std::string* name_sink) {
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        if (name_sink) {
          static const std::string kNameTag = "# name:";
          if (line.rfind(kNameTag, 0) == 0) {
            std::string v = line.substr(kNameTag.size());
            size_t b = v.find_first_not_of(" \t");
            if (b != std::string::npos)
              *name_sink = v.substr(b);
          }
        }
        line.erase(hash);
      }
      size_t b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      size_t e = line.find_last_not_of(" \t\r");
      line = line.substr(b, e - b + 1);
      return true;
    }
    return false;
  }

  std::vector<int> ints(const std::string& s, int expect, const char* what) {
    std::vector<int> v;
    std::istringstream ss(s);
    std::string tok;
    while (ss >> tok) {
      try {
        size_t used = 0;
        int x = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        v.push_back(x);
      } catch (const std::exception&) {
        throw ParseError(lineno, 1, std::string("bad integer in ") + what +
                                        ": '" + tok + "'");
      }
    }
    if (expect >= 0 && static_cast<int>(v.size()) != expect)
      throw ParseError(lineno, 1,
                       std::string(what) + " needs " + std::to_string(expect) +
                           " entries, got " + std::to_string(v.size()));
    return v;
  }
};

}  // namespace

RawTables parse(const std::string& text) {
  Cursor c(text);
  RawTables raw;
  if (!c.next(&raw.name)) throw ParseError(c.lineno, 1, "empty input");
  {
    std::istringstream ss(c.line);
    std::string tag;
    ss >> tag;
    if (tag != "n") throw ParseError(c.lineno, 1, "expected 'n <count>'");
    if (!(ss >> raw.n) || raw.n < 1)
      throw ParseError(c.lineno, 1, "bad element count");
  }
  raw.mul.reserve(raw.n);
  for (int i = 0; i < raw.n; ++i) {
    if (!c.next(&raw.name))
      throw ParseError(c.lineno, 1, "missing mul table row");
    raw.mul.push_back(c.ints(c.line, raw.n, "mul row"));
  }
  auto tagged = [&](const char* tag) -> std::string {
    const std::string t(tag);
    if (c.line.rfind(t, 0) != 0)
      throw ParseError(c.lineno, 1, "expected '" + t + "'");
    return c.line.substr(t.size());
  };
  if (!c.next(&raw.name)) throw ParseError(c.lineno, 1, "missing star line");
  raw.star = c.ints(tagged("star:"), raw.n, "star");
  if (!c.next(&raw.name)) throw ParseError(c.lineno, 1, "missing zero line");
  {
    auto v = c.ints(tagged("zero:"), 1, "zero");
    raw.zero = v[0];
  }
  if (c.next(&raw.name)) {
    if (c.line != "add:")
      throw ParseError(c.lineno, 1, "expected 'add:' or end of input");
    std::vector<std::vector<int>> add;
    for (int i = 0; i < raw.n; ++i) {
      if (!c.next(&raw.name))
        throw ParseError(c.lineno, 1, "missing add table row");
      add.push_back(c.ints(c.line, raw.n, "add row"));
    }
    if (!c.next(&raw.name)) throw ParseError(c.lineno, 1, "missing neg line");
    raw.neg = c.ints(tagged("neg:"), raw.n, "neg");
    raw.add = std::move(add);
    if (c.next(&raw.name))
      throw ParseError(c.lineno, 1, "trailing content after neg line");
  }
  return raw;
}

RawTables parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  RawTables raw = parse(ss.str());
  if (raw.name.empty()) raw.name = path;
  return raw;
}

StarSemigroup canonicalize(const StarSemigroup& s) {
  if (s.zero() == 0) return s;
  const int n = s.n();
  const int z = s.zero();
  auto p = [&](int x) { return x == 0 ? z : (x == z ? 0 : x); };
  std::vector<uint16_t> mul(static_cast<size_t>(n) * n), star(n);
  for (int a = 0; a < n; ++a) {
    star[a] = static_cast<uint16_t>(p(s.star(p(a))));
    for (int b = 0; b < n; ++b)
      mul[a * n + b] = static_cast<uint16_t>(p(s.prod(p(a), p(b))));
  }
  std::optional<RingExtension> ring;
  if (s.has_ring()) {
    RingExtension r;
    r.add.resize(static_cast<size_t>(n) * n);
    r.neg.resize(n);
    for (int a = 0; a < n; ++a) {
      r.neg[a] = static_cast<uint16_t>(p(s.neg(p(a))));
      for (int b = 0; b < n; ++b)
        r.add[a * n + b] = static_cast<uint16_t>(p(s.add(p(a), p(b))));
    }
    ring = std::move(r);
  }
  return StarSemigroup::unchecked(s.name(), n, std::move(mul),
                                  std::move(star), 0, std::move(ring));
}

std::string serialize(const StarSemigroup& input) {
  StarSemigroup s = canonicalize(input);
  std::ostringstream out;
  if (!s.name().empty()) out << "# name: " << s.name() << "\n";
  out << "n " << s.n() << "\n";
  for (int a = 0; a < s.n(); ++a) {
    for (int b = 0; b < s.n(); ++b) out << (b ? " " : "") << s.prod(a, b);
    out << "\n";
  }
  out << "star:";
  for (int a = 0; a < s.n(); ++a) out << " " << s.star(a);
  out << "\nzero: " << s.zero() << "\n";
  if (s.has_ring()) {
    out << "add:\n";
    for (int a = 0; a < s.n(); ++a) {
      for (int b = 0; b < s.n(); ++b) out << (b ? " " : "") << s.add(a, b);
      out << "\n";
    }
    out << "neg:";
    for (int a = 0; a < s.n(); ++a) out << " " << s.neg(a);
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json to_json(const StarSemigroup& input) {
  StarSemigroup s = canonicalize(input);
  nlohmann::ordered_json j;
  j["name"] = s.name();
  j["n"] = s.n();
  auto mul = nlohmann::ordered_json::array();
  for (int a = 0; a < s.n(); ++a) {
    auto row = nlohmann::ordered_json::array();
    for (int b = 0; b < s.n(); ++b) row.push_back(s.prod(a, b));
    mul.push_back(std::move(row));
  }
  j["mul"] = std::move(mul);
  auto star = nlohmann::ordered_json::array();
  for (int a = 0; a < s.n(); ++a) star.push_back(s.star(a));
  j["star"] = std::move(star);
  j["zero"] = s.zero();
  if (s.has_ring()) {
    auto add = nlohmann::ordered_json::array();
    for (int a = 0; a < s.n(); ++a) {
      auto row = nlohmann::ordered_json::array();
      for (int b = 0; b < s.n(); ++b) row.push_back(s.add(a, b));
      add.push_back(std::move(row));
    }
    j["add"] = std::move(add);
    auto neg = nlohmann::ordered_json::array();
    for (int a = 0; a < s.n(); ++a) neg.push_back(s.neg(a));
    j["neg"] = std::move(neg);
  }
  return j;
}

RawTables from_json(const nlohmann::json& j) {
  RawTables raw;
  raw.name = j.value("name", "");
  raw.n = j.at("n").get<int>();
  raw.mul = j.at("mul").get<std::vector<std::vector<int>>>();
  raw.star = j.at("star").get<std::vector<int>>();
  raw.zero = j.at("zero").get<int>();
  if (j.contains("add")) {
    raw.add = j.at("add").get<std::vector<std::vector<int>>>();
    raw.neg = j.at("neg").get<std::vector<int>>();
  }
  return raw;
}

}  // namespace starlab
