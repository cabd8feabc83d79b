#include "ngr/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ngr {

std::string Rat::str() const {
  std::ostringstream os;
  os << v_;
  return os.str();
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rat::parse: empty string");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw std::invalid_argument("Rat::parse: bad character in '" + s + "'");
  }
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rat::parse: cannot parse '" + s + "'");
  v.canonicalize();
  return Rat(v);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.raw(); }

QuiverPresentation::QuiverPresentation(int period,
                                       std::vector<std::vector<std::string>> labels)
    : period_(period), labels_(std::move(labels)) {
  if (period_ <= 0) throw DomainError("period must be positive");
  if (static_cast<int>(labels_.size()) != period_)
    throw DomainError("need one label list per residue");
  for (int r = 0; r < period_; ++r) {
    for (size_t i = 0; i < labels_[r].size(); ++i)
      for (size_t j = i + 1; j < labels_[r].size(); ++j)
        if (labels_[r][i] == labels_[r][j])
          throw DomainError("duplicate arrow label '" + labels_[r][i] +
                            "' at residue " + std::to_string(r));
  }
}

int QuiverPresentation::index_of(int residue, const std::string& label) const {
  const auto& ls = labels_[norm(residue)];
  auto it = std::find(ls.begin(), ls.end(), label);
  return it == ls.end() ? -1 : static_cast<int>(it - ls.begin());
}

bool QuiverPresentation::word_fits(const PathWord& w) const {
  if (w.start() < 0 || w.start() >= period_) return false;
  for (int k = 0; k < w.degree(); ++k) {
    int r = w.letter_residue(k, period_);
    if (w.letter(k) >= labels_[r].size()) return false;
  }
  return true;
}

void QuiverPresentation::add_relation(NcPolynomial rel) {
  if (rel.is_zero()) throw HomogeneityError("zero relation");
  for (const auto& [w, c] : rel.terms()) {
    if (!word_fits(w))
      throw DomainError("relation term does not fit the quiver");
  }
  relations_.push_back(std::move(rel));
}

std::string QuiverPresentation::format_word(const PathWord& w) const {
  if (w.degree() == 0) return "(" + std::to_string(w.start()) + ")";
  std::string out;
  for (int k = 0; k < w.degree(); ++k) {
    if (k) out += ".";
    out += label(w.letter_residue(k, period_), w.letter(k));
  }
  return out;
}

std::string QuiverPresentation::format_poly(const NcPolynomial& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rat a = c;
    if (first) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    if (!(a == Rat(1))) out += a.str() + "*";
    out += format_word(w);
    first = false;
  }
  return out;
}

bool operator==(const QuiverPresentation& a, const QuiverPresentation& b) {
  return a.period_ == b.period_ && a.labels_ == b.labels_ &&
         a.relations_ == b.relations_;
}

NcPolynomial NcPolynomial::monomial(PathWord w, Rat c) {
  NcPolynomial p;
  p.add_term(w, c);
  return p;
}

int NcPolynomial::start() const {
  if (is_zero()) throw HomogeneityError("zero polynomial has no start");
  return terms_.begin()->first.start();
}

int NcPolynomial::degree() const {
  if (is_zero()) throw HomogeneityError("zero polynomial has no degree");
  return terms_.begin()->first.degree();
}

Rat NcPolynomial::coeff(const PathWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void NcPolynomial::add_term(const PathWord& w, const Rat& c) {
  if (c.is_zero()) return;
  if (!terms_.empty()) {
    const PathWord& ref = terms_.begin()->first;
    if (w.start() != ref.start() || w.degree() != ref.degree())
      throw HomogeneityError("mixing start residues or degrees");
  }
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cmp PathOrder::compare(const PathWord& u, const PathWord& v) const {
  const auto& q = *pres_;
  if (u.start() != v.start() || u.degree() != v.degree())
    throw OrderError("incomparable paths (start or degree mismatch)");
  for (int k = u.degree() - 1; k >= 0; --k) {
    if (u.letter(k) == v.letter(k)) continue;
    int r = u.letter_residue(k, q.period());
    int ru = q.order_rank(r, u.letter(k));
    int rv = q.order_rank(r, v.letter(k));
    return ru > rv ? Cmp::GT : Cmp::LT;
  }
  return Cmp::EQ;
}

PathWord compose(const PathWord& u, const PathWord& v, int period) {
  if (u.end(period) != v.start())
    throw CompositionError("endpoint " + std::to_string(u.end(period)) +
                           " does not match start " + std::to_string(v.start()));
  std::vector<std::uint16_t> letters = u.letters();
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return PathWord(u.start(), std::move(letters));
}

PathWord shift(const PathWord& w, int k, int period) {
  int s = (w.start() + k) % period;
  if (s < 0) s += period;
  return PathWord(s, w.letters());
}

NcPolynomial poly_add(const NcPolynomial& p, const NcPolynomial& q) {
  NcPolynomial out = p;
  for (const auto& [w, c] : q.terms()) out.add_term(w, c);
  return out;
}

NcPolynomial poly_scale(const NcPolynomial& p, const Rat& c) {
  NcPolynomial out;
  if (c.is_zero()) return out;
  for (const auto& [w, a] : p.terms()) out.add_term(w, a * c);
  return out;
}

NcPolynomial poly_mul(const NcPolynomial& p, const NcPolynomial& q, int period) {
  NcPolynomial out;
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms())
      out.add_term(compose(u, v, period), a * b);
  return out;
}

}  // namespace ngr
