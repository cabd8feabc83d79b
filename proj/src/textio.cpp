#include "ngr/textio.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace ngr {

namespace {

struct Cursor {
  const std::string& s;
  int line;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size() || s[pos] == '#';
  }
  int col() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(line, col(), what);
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string token() {
    skip_ws();
    size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_' || s[pos] == '-' || s[pos] == '/'))
      ++pos;
    if (b == pos) fail("expected a token");
    return s.substr(b, pos - b);
  }
  std::string word_token() {  // label chars only (no '-', '/')
    skip_ws();
    size_t b = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_'))
      ++pos;
    if (b == pos) fail("expected a label");
    return s.substr(b, pos - b);
  }
  int integer() {
    std::string t = token();
    try {
      size_t used = 0;
      int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail("expected an integer, got '" + t + "'");
    }
  }
};

}  // namespace

QuiverPresentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string lines;
  int period = -1;
  std::map<int, std::vector<std::string>> arrows;
  struct RelLine {
    int residue;
    std::string body;
    int line;
  };
  std::vector<RelLine> rel_lines;

  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    Cursor c{raw, lineno};
    if (c.done()) continue;
    std::string head = c.word_token();
    if (head == "period") {
      if (period >= 0) c.fail("duplicate period");
      period = c.integer();
      if (period <= 0) c.fail("period must be positive");
    } else if (head == "arrows") {
      int r = c.integer();
      if (period < 0) c.fail("period must come before arrows");
      if (r < 0 || r >= period) c.fail("residue out of range");
      if (!c.eat(':')) c.fail("expected ':'");
      if (arrows.count(r)) c.fail("duplicate arrows line for residue");
      std::vector<std::string> labels;
      while (!c.done()) {
        labels.push_back(c.word_token());
        if (!c.eat(',')) break;
      }
      if (!c.done()) c.fail("trailing input after labels");
      arrows[r] = std::move(labels);
    } else if (head == "relation") {
      int r = c.integer();
      if (period < 0) c.fail("period must come before relations");
      if (r < 0 || r >= period) c.fail("residue out of range");
      if (!c.eat(':')) c.fail("expected ':'");
      c.skip_ws();
      rel_lines.push_back({r, raw.substr(c.pos), lineno});
    } else {
      c.fail("unknown directive '" + head + "'");
    }
  }
  if (period < 0) throw ParseError(lineno, 1, "missing period");
  std::vector<std::vector<std::string>> labels(period);
  for (auto& [r, ls] : arrows) labels[r] = std::move(ls);
  QuiverPresentation pres(period, std::move(labels));

  for (const auto& rl : rel_lines) {
    Cursor c{rl.body, rl.line};
    NcPolynomial poly;
    bool first = true;
    while (!c.done()) {
      Rat sign(1);
      if (c.eat('+')) {
      } else if (c.eat('-')) {
        sign = Rat(-1);
      } else if (!first) {
        c.fail("expected '+' or '-' between terms");
      }
      first = false;
      // optional coefficient: integer or p/q followed by '*'
      c.skip_ws();
      Rat coef(1);
      size_t save = c.pos;
      if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        std::string t = c.token();
        if (c.eat('*')) {
          try {
            coef = Rat::parse(t);
          } catch (const std::exception& e) {
            c.fail(e.what());
          }
        } else {
          c.pos = save;  // a label starting with a digit? labels are alnum
        }
      }
      // the word: label(.label)*
      std::vector<std::uint16_t> letters;
      int residue = rl.residue;
      int k = 0;
      while (true) {
        std::string lab = c.word_token();
        int idx = pres.index_of((residue + k) % period, lab);
        if (idx < 0)
          c.fail("unknown arrow '" + lab + "' at residue " +
                 std::to_string((residue + k) % period));
        letters.push_back(static_cast<std::uint16_t>(idx));
        ++k;
        if (!c.eat('.')) break;
      }
      try {
        poly.add_term(PathWord(rl.residue, std::move(letters)), sign * coef);
      } catch (const HomogeneityError& e) {
        c.fail(e.what());
      }
    }
    if (poly.is_zero())
      throw ParseError(rl.line, 1, "relation reduces to zero");
    try {
      pres.add_relation(std::move(poly));
    } catch (const std::exception& e) {
      throw ParseError(rl.line, 1, e.what());
    }
  }
  return pres;
}

QuiverPresentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string format_presentation(const QuiverPresentation& pres) {
  std::ostringstream out;
  out << "period " << pres.period() << "\n";
  for (int r = 0; r < pres.period(); ++r) {
    out << "arrows " << r << ":";
    const auto& ls = pres.labels(r);
    for (size_t i = 0; i < ls.size(); ++i) out << (i ? ", " : " ") << ls[i];
    out << "\n";
  }
  for (const auto& rel : pres.relations())
    out << "relation " << rel.start() << ": " << pres.format_poly(rel) << "\n";
  return out.str();
}

void write_presentation_file(const QuiverPresentation& pres,
                             const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << format_presentation(pres);
}

}  // namespace ngr
