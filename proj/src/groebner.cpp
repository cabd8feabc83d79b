#include "ngr/groebner.hpp"

#include <algorithm>
#include <deque>

namespace ngr {

bool GroebnerBasis::is_quadratic() const {
  return std::all_of(rules_.begin(), rules_.end(),
                     [](const RewriteRule& r) { return r.lead.degree() == 2; });
}

int GroebnerBasis::max_rule_degree() const {
  int m = 0;
  for (const auto& r : rules_) m = std::max(m, r.lead.degree());
  return m;
}

std::vector<int> GroebnerBasis::rule_count_per_residue() const {
  std::vector<int> out(pres_.period(), 0);
  for (const auto& r : rules_) ++out[r.lead.start()];
  return out;
}

void GroebnerBasis::reindex() {
  const int p = pres_.period();
  by_first_.assign(p, {});
  for (int r = 0; r < p; ++r) by_first_[r].assign(pres_.arrow_count(r), {});
  for (int id = 0; id < static_cast<int>(rules_.size()); ++id) {
    const PathWord& lead = rules_[id].lead;
    by_first_[lead.start()][lead.letter(0)].push_back(id);
  }
  for (auto& per_res : by_first_)
    for (auto& ids : per_res)
      std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        return rules_[a].lead.degree() > rules_[b].lead.degree();
      });
}

std::pair<int, int> GroebnerBasis::find_occurrence(const PathWord& w) const {
  const int p = pres_.period();
  for (int pos = 0; pos < w.degree(); ++pos) {
    int r = w.letter_residue(pos, p);
    for (int id : by_first_[r][w.letter(pos)]) {
      const PathWord& lead = rules_[id].lead;
      int len = lead.degree();
      if (pos + len > w.degree()) continue;
      bool hit = true;
      for (int k = 1; k < len; ++k) {
        if (w.letter(pos + k) != lead.letter(k)) {
          hit = false;
          break;
        }
      }
      if (hit) return {pos, id};
    }
  }
  return {-1, -1};
}

GroebnerBasis GroebnerBasis::unchecked(QuiverPresentation pres,
                                       std::vector<RewriteRule> rules,
                                       int completed_through) {
  GroebnerBasis gb(std::move(pres));
  gb.rules_ = std::move(rules);
  gb.completed_through_ = completed_through;
  gb.reindex();
  return gb;
}

namespace {

PathWord lead_monomial(const NcPolynomial& p, const PathOrder& ord) {
  auto it = p.terms().begin();
  PathWord best = it->first;
  for (++it; it != p.terms().end(); ++it)
    if (ord.greater(it->first, best)) best = it->first;
  return best;
}

/// rewrite one occurrence: replace w[pos..pos+len) by the rule tail.
NcPolynomial rewrite_term(const PathWord& w, const Rat& c, int pos,
                          const RewriteRule& rule, int period) {
  NcPolynomial out;
  const int len = rule.lead.degree();
  std::vector<std::uint16_t> pre(w.letters().begin(),
                                 w.letters().begin() + pos);
  std::vector<std::uint16_t> suf(w.letters().begin() + pos + len,
                                 w.letters().end());
  for (const auto& [t, tc] : rule.tail.terms()) {
    std::vector<std::uint16_t> ls = pre;
    ls.insert(ls.end(), t.letters().begin(), t.letters().end());
    ls.insert(ls.end(), suf.begin(), suf.end());
    out.add_term(PathWord(w.start(), std::move(ls)), c * tc);
  }
  return out;
}

struct Completer {
  QuiverPresentation pres;
  PathOrder order;
  std::vector<RewriteRule> rules;

  explicit Completer(const QuiverPresentation& p) : pres(p), order(pres) {}

  std::pair<int, int> find_in(const PathWord& w) const {
    // linear variant of GroebnerBasis::find_occurrence (rule set is mutating)
    for (int pos = 0; pos < w.degree(); ++pos) {
      int best = -1, best_len = 0;
      for (int id = 0; id < static_cast<int>(rules.size()); ++id) {
        const PathWord& lead = rules[id].lead;
        int len = lead.degree();
        if (lead.start() != w.letter_residue(pos, pres.period())) continue;
        if (pos + len > w.degree() || len <= best_len) continue;
        bool hit = true;
        for (int k = 0; k < len; ++k)
          if (w.letter(pos + k) != lead.letter(k)) {
            hit = false;
            break;
          }
        if (hit) {
          best = id;
          best_len = len;
        }
      }
      if (best >= 0) return {pos, best};
    }
    return {-1, -1};
  }

  NcPolynomial reduce(NcPolynomial p) const {
    while (true) {
      PathWord target;
      int tpos = -1, tid = -1;
      bool found = false;
      for (const auto& [w, c] : p.terms()) {
        auto [pos, id] = find_in(w);
        if (pos < 0) continue;
        if (!found || order.greater(w, target)) {
          target = w;
          tpos = pos;
          tid = id;
          found = true;
        }
      }
      if (!found) return p;
      Rat c = p.coeff(target);
      NcPolynomial repl = rewrite_term(target, c, tpos, rules[tid], pres.period());
      NcPolynomial next;
      for (const auto& [w, a] : p.terms())
        if (!(w == target)) next.add_term(w, a);
      p = poly_add(next, repl);
      if (p.is_zero()) return p;
    }
  }

  static bool subword(const PathWord& needle, const PathWord& hay, int period) {
    int nl = needle.degree(), hl = hay.degree();
    for (int pos = 0; pos + nl <= hl; ++pos) {
      if (hay.letter_residue(pos, period) != needle.start()) continue;
      bool hit = true;
      for (int k = 0; k < nl; ++k)
        if (hay.letter(pos + k) != needle.letter(k)) {
          hit = false;
          break;
        }
      if (hit) return true;
    }
    return false;
  }

  bool add(NcPolynomial p) {
    std::deque<NcPolynomial> pending;
    pending.push_back(std::move(p));
    bool added = false;
    while (!pending.empty()) {
      NcPolynomial q = reduce(std::move(pending.front()));
      pending.pop_front();
      if (q.is_zero()) continue;
      PathWord lead = lead_monomial(q, order);
      Rat lc = q.coeff(lead);
      NcPolynomial tail;
      for (const auto& [w, c] : q.terms())
        if (!(w == lead)) tail.add_term(w, -(c / lc));
      // evict rules whose lead properly contains the new lead
      std::vector<RewriteRule> kept;
      for (auto& r : rules) {
        if (r.lead.degree() > lead.degree() &&
            subword(lead, r.lead, pres.period())) {
          NcPolynomial full = NcPolynomial::monomial(r.lead, Rat(1));
          full = poly_add(full, poly_scale(r.tail, Rat(-1)));
          pending.push_back(std::move(full));
        } else {
          kept.push_back(std::move(r));
        }
      }
      rules = std::move(kept);
      rules.push_back(RewriteRule{lead, std::move(tail)});
      added = true;
      // keep tails fully reduced
      for (bool dirty = true; dirty;) {
        dirty = false;
        for (auto& r : rules) {
          NcPolynomial nt = reduce(r.tail);
          if (!(nt == r.tail)) {
            r.tail = std::move(nt);
            dirty = true;
          }
        }
      }
    }
    return added;
  }
};

}  // namespace

GroebnerBasis buchberger_complete(const QuiverPresentation& pres,
                                  int max_degree) {
  int max_rel_deg = 0;
  for (const auto& rel : pres.relations()) {
    if (rel.is_zero()) continue;
    for (const auto& [w, c] : rel.terms()) {
      if (w.start() != rel.start() || w.degree() != rel.degree())
        throw HomogeneityError("inhomogeneous relation");
    }
    max_rel_deg = std::max(max_rel_deg, rel.degree());
  }
  if (!pres.relations().empty() && max_degree < max_rel_deg)
    throw PreconditionError("max_degree below maximal relation degree");

  Completer st(pres);
  for (const auto& rel : pres.relations()) st.add(rel);

  const int period = pres.period();
  for (int deg = 3; deg <= max_degree; ++deg) {
    for (bool changed = true; changed;) {
      changed = false;
      // snapshot: rule polys are stable while we scan overlap pairs
      for (size_t i = 0; i < st.rules.size(); ++i) {
        for (size_t j = 0; j < st.rules.size(); ++j) {
          const PathWord lead1 = st.rules[i].lead;
          const PathWord lead2 = st.rules[j].lead;
          const int l1 = lead1.degree(), l2 = lead2.degree();
          for (int k = 1; k < std::min(l1, l2); ++k) {
            if (l1 + l2 - k > deg) continue;
            if (lead2.start() != (lead1.start() + l1 - k) % period) continue;
            bool match = true;
            for (int t = 0; t < k; ++t)
              if (lead1.letter(l1 - k + t) != lead2.letter(t)) {
                match = false;
                break;
              }
            if (!match) continue;
            // overlap word w = lead1 + lead2[k:]; S-poly from both reductions
            PathWord suffix = lead2.subword(k, l2 - k, period);
            PathWord prefix = lead1.subword(0, l1 - k, period);
            NcPolynomial s1 = poly_mul(
                st.rules[i].tail,
                NcPolynomial::monomial(suffix, Rat(1)), period);
            NcPolynomial s2 = poly_mul(NcPolynomial::monomial(prefix, Rat(1)),
                                       st.rules[j].tail, period);
            NcPolynomial s = poly_add(s1, poly_scale(s2, Rat(-1)));
            if (s.is_zero()) continue;
            if (st.add(std::move(s))) changed = true;
          }
        }
      }
    }
  }

  GroebnerBasis gb = GroebnerBasis::unchecked(pres, std::move(st.rules),
                                              max_degree);
  return gb;
}

NcPolynomial normal_form(const NcPolynomial& p, const GroebnerBasis& gb,
                         ReductionStrategy strategy) {
  const PathOrder& ord = gb.order();
  const int period = gb.presentation().period();
  NcPolynomial cur = p;
  while (true) {
    PathWord target;
    int tpos = -1, tid = -1;
    bool found = false;
    for (const auto& [w, c] : cur.terms()) {
      auto [pos, id] = gb.find_occurrence(w);
      if (pos < 0) continue;
      bool better = !found;
      if (found) {
        bool gt = ord.greater(w, target);
        better = strategy == ReductionStrategy::LeftmostGreatest
                     ? gt
                     : ord.less(w, target);
      }
      if (better) {
        target = w;
        tpos = pos;
        tid = id;
        found = true;
      }
    }
    if (!found) return cur;
    if (strategy == ReductionStrategy::RightmostLeast) {
      // rightmost occurrence of the shortest applicable lead
      int best_pos = -1, best_id = -1, best_len = 1 << 20;
      for (int pos = 0; pos < target.degree(); ++pos)
        for (int id = 0; id < static_cast<int>(gb.rules().size()); ++id) {
          const PathWord& lead = gb.rules()[id].lead;
          int len = lead.degree();
          if (pos + len > target.degree()) continue;
          if (lead.start() != target.letter_residue(pos, period)) continue;
          bool hit = true;
          for (int k = 0; k < len; ++k)
            if (target.letter(pos + k) != lead.letter(k)) {
              hit = false;
              break;
            }
          if (hit && (pos > best_pos || (pos == best_pos && len < best_len))) {
            best_pos = pos;
            best_id = id;
            best_len = len;
          }
        }
      tpos = best_pos;
      tid = best_id;
    }
    Rat c = cur.coeff(target);
    NcPolynomial repl =
        rewrite_term(target, c, tpos, gb.rules()[tid], period);
    NcPolynomial rest;
    for (const auto& [w, a] : cur.terms())
      if (!(w == target)) rest.add_term(w, a);
    cur = poly_add(rest, repl);
    if (cur.is_zero()) return cur;
  }
}

NcPolynomial star_product(const PathWord& u, const PathWord& v,
                          const GroebnerBasis& gb) {
  if (!gb.is_normal(u) || !gb.is_normal(v))
    throw PreconditionError("star_product requires normal words");
  PathWord uv = compose(u, v, gb.presentation().period());
  return normal_form(NcPolynomial::monomial(uv, Rat(1)), gb);
}

std::vector<PathWord> normal_words(const GroebnerBasis& gb, int start,
                                   int degree) {
  const auto& pres = gb.presentation();
  const int p = pres.period();
  std::vector<PathWord> cur{PathWord::idempotent(start)};
  for (int d = 1; d <= degree; ++d) {
    std::vector<PathWord> next;
    int r = (start + d - 1) % p;
    for (const auto& w : cur) {
      for (int a = 0; a < pres.arrow_count(r); ++a) {
        std::vector<std::uint16_t> ls = w.letters();
        ls.push_back(static_cast<std::uint16_t>(a));
        PathWord nw(start, std::move(ls));
        if (gb.is_normal(nw)) next.push_back(std::move(nw));
      }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(), [&](const PathWord& a, const PathWord& b) {
    return gb.order().greater(a, b);
  });
  return cur;
}

ProcessingReport check_r_processing(const GroebnerBasis& gb, int r,
                                    int degree_bound, Side side) {
  if (r < 1) throw PreconditionError("r must be >= 1");
  if (gb.completed_through() < degree_bound)
    throw PreconditionError("basis not completed through degree_bound");
  ProcessingReport report;
  report.r = r;
  report.degree_bound = degree_bound;
  report.side = side;
  report.verified = true;

  const int p = gb.presentation().period();
  auto words_cache = std::map<std::pair<int, int>, std::vector<PathWord>>{};
  auto words = [&](int s, int d) -> const std::vector<PathWord>& {
    auto key = std::make_pair(s, d);
    auto it = words_cache.find(key);
    if (it == words_cache.end())
      it = words_cache.emplace(key, normal_words(gb, s, d)).first;
    return it->second;
  };

  for (int du = 1; du + r + 1 <= degree_bound; ++du) {
    for (int dv = r + 1; du + dv <= degree_bound; ++dv) {
      for (int s0 = 0; s0 < p; ++s0) {
        if (side == Side::Right) {
          int sv = (s0 + du) % p;
          for (const auto& u : words(s0, du)) {
            for (const auto& v : words(sv, dv)) {
              PathWord w = v.subword(0, r, p);
              PathWord s = v.subword(r, dv - r, p);
              NcPolynomial uv = star_product(u, v, gb);
              NcPolynomial uw = star_product(u, w, gb);
              NcPolynomial uws;
              bool normal_ok = true;
              for (const auto& [t, c] : uw.terms()) {
                PathWord ts = compose(t, s, p);
                if (!gb.is_normal(ts)) normal_ok = false;
                uws.add_term(ts, c);
              }
              if (!normal_ok || !(uws == uv)) {
                report.verified = false;
                report.counterexample = {u, w, s};
                return report;
              }
            }
          }
        } else {
          // left: v = s w with |w| = r; check v*u == s(w*u)
          int sv = s0;
          int su = (sv + dv) % p;
          for (const auto& u : words(su, du)) {
            for (const auto& v : words(sv, dv)) {
              PathWord s = v.subword(0, dv - r, p);
              PathWord w = v.subword(dv - r, r, p);
              NcPolynomial vu = star_product(v, u, gb);
              NcPolynomial wu = star_product(w, u, gb);
              NcPolynomial swu;
              bool normal_ok = true;
              for (const auto& [t, c] : wu.terms()) {
                PathWord st = compose(s, t, p);
                if (!gb.is_normal(st)) normal_ok = false;
                swu.add_term(st, c);
              }
              if (!normal_ok || !(swu == vu)) {
                report.verified = false;
                report.counterexample = {u, w, s};
                return report;
              }
            }
          }
        }
      }
    }
  }
  return report;
}

ProofPropertiesReport proof_properties_check(const GroebnerBasis& gb) {
  if (!gb.is_quadratic())
    throw PreconditionError("proof_properties_check needs a quadratic basis");
  const auto& pres = gb.presentation();
  if (pres.period() % 3 != 0)
    throw PreconditionError("proof_properties_check needs an NGr-shaped quiver");
  ProofPropertiesReport rep;
  auto type_of = [&](int residue) { return residue % 3 == 0 ? 'e' : 'x'; };

  for (const auto& rule : gb.rules()) {
    int t = rule.lead.start();
    for (const auto& [w, c] : rule.tail.terms()) {
      for (int k = 0; k < 2; ++k) {
        if (type_of(w.letter_residue(k, pres.period())) !=
            type_of(rule.lead.letter_residue(k, pres.period()))) {
          rep.type_preserved = false;
          rep.violations.push_back("type change in rule at residue " +
                                   std::to_string(t));
        }
      }
      int r2 = (t + 1) % pres.period();
      if (pres.order_rank(r2, w.letter(1)) >
          pres.order_rank(r2, rule.lead.letter(1))) {
        rep.second_letter_monotone = false;
        rep.violations.push_back(
            "second letter increases: " + pres.format_word(rule.lead) +
            " -> " + pres.format_word(w));
      }
    }
  }

  for (int rho = 0; rho < pres.period(); ++rho) {
    if (rho % 3 != 1) continue;  // x.x boundaries only
    int r2 = (rho + 1) % pres.period();
    auto normal2 = [&](int a, int b) {
      return gb.is_normal(PathWord(rho, {static_cast<std::uint16_t>(a),
                                         static_cast<std::uint16_t>(b)}));
    };
    for (int a = 0; a < pres.arrow_count(rho); ++a) {
      for (int b = 0; b < pres.arrow_count(r2); ++b) {
        if (!normal2(a, b)) continue;
        for (int a2 = 0; a2 < pres.arrow_count(rho); ++a2) {
          if (pres.order_rank(rho, a2) > pres.order_rank(rho, a)) continue;
          if (!normal2(a2, b)) {
            rep.xx_downward_closed = false;
            rep.violations.push_back(
                "downward closure fails at residue " + std::to_string(rho) +
                ": " + pres.label(rho, a) + "." + pres.label(r2, b) +
                " normal but " + pres.label(rho, a2) + "." +
                pres.label(r2, b) + " is not");
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace ngr
