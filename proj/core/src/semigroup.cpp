#include <liegrad/semigroup.hpp>

#include <liegrad/errors.hpp>

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace liegrad {

ExponentVector::ExponentVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw InputError("exponent vector counts must be nonnegative");
  }
}

ExponentVector ExponentVector::unit(int n_labels, int index) {
  std::vector<int> counts(static_cast<std::size_t>(n_labels), 0);
  counts.at(index) = 1;
  return ExponentVector(std::move(counts));
}

int ExponentVector::degree() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

bool ExponentVector::divides(const ExponentVector& v) const {
  if (counts_.size() != v.counts_.size()) return false;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] > v.counts_[i]) return false;
  }
  return true;
}

ExponentVector ExponentVector::lcm_with(const ExponentVector& v) const {
  std::vector<int> out(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out[i] = std::max(counts_[i], v.counts_[i]);
  }
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::plus(const ExponentVector& v) const {
  std::vector<int> out(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) out[i] = counts_[i] + v.counts_[i];
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::rewrite(const ExponentVector& lhs,
                                       const ExponentVector& rhs) const {
  std::vector<int> out(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out[i] = counts_[i] - lhs.counts_[i] + rhs.counts_[i];
    if (out[i] < 0) throw std::logic_error("rewrite applied where lhs does not divide");
  }
  return ExponentVector(std::move(out));
}

bool term_order_less(const ExponentVector& u, const ExponentVector& v) {
  const int du = u.degree();
  const int dv = v.degree();
  if (du != dv) return du < dv;
  return u.counts() < v.counts(); // lexicographic on counts in label order
}

std::string format_exponent_vector(const ExponentVector& v,
                                   const std::vector<std::string>& labels) {
  std::string out;
  for (int i = 0; i < v.size(); ++i) {
    for (int c = 0; c < v.count(i); ++c) {
      if (!out.empty()) out += "+";
      out += labels.at(i);
    }
  }
  return out.empty() ? "(empty)" : out;
}

std::vector<SemigroupRelation> to_relations(const RelationSet& set) {
  validate(set);
  const int n = static_cast<int>(set.labels.size());
  std::vector<SemigroupRelation> out;
  out.reserve(set.triples.size());
  for (const RelationTriple& t : set.triples) {
    out.push_back(SemigroupRelation{
        ExponentVector::unit(n, t.g).plus(ExponentVector::unit(n, t.gp)),
        ExponentVector::unit(n, t.gpp), t});
  }
  return out;
}

namespace {

std::vector<ChainStep> flipped(std::vector<ChainStep> steps) {
  std::reverse(steps.begin(), steps.end());
  for (ChainStep& s : steps) s.forward = !s.forward;
  return steps;
}

// Replays steps starting from v; nullopt on an illegal application.
std::optional<ExponentVector> replay_steps(ExponentVector v,
                                           const std::vector<ChainStep>& steps,
                                           const std::vector<SemigroupRelation>& relations) {
  for (const ChainStep& s : steps) {
    if (s.relation < 0 || s.relation >= static_cast<int>(relations.size())) {
      return std::nullopt;
    }
    const SemigroupRelation& rel = relations[s.relation];
    const ExponentVector& from = s.forward ? rel.left : rel.right;
    const ExponentVector& to = s.forward ? rel.right : rel.left;
    if (!from.divides(v)) return std::nullopt;
    v = v.rewrite(from, to);
  }
  return v;
}

struct WorkRule {
  ExponentVector lhs, rhs;
  std::vector<ChainStep> proof; // lhs -> rhs via input relations
  bool alive = true;
};

struct Completion {
  const std::vector<SemigroupRelation>& relations;
  const DeciderLimits& limits;
  std::vector<WorkRule> rules;
  std::size_t alive_count = 0;
  std::deque<std::pair<int, int>> pending_pairs;
  struct Candidate {
    ExponentVector a, b;
    std::vector<ChainStep> proof; // a -> b
  };
  std::deque<Candidate> candidates;

  ExponentVector normal_form(ExponentVector v, std::vector<ChainStep>* trace) const {
    bool progressed = true;
    while (progressed) {
      progressed = false;
      for (const WorkRule& r : rules) {
        if (!r.alive || !r.lhs.divides(v)) continue;
        v = v.rewrite(r.lhs, r.rhs);
        if (trace) trace->insert(trace->end(), r.proof.begin(), r.proof.end());
        progressed = true;
        break;
      }
    }
    return v;
  }

  void verify_rule(const WorkRule& rule) const {
    const auto end = replay_steps(rule.lhs, rule.proof, relations);
    if (!end || !(*end == rule.rhs)) {
      throw CertificateError("internal: rewrite rule proof does not replay");
    }
  }

  void insert_candidate(const Candidate& cand) {
    std::vector<ChainStep> ta, tb;
    ExponentVector a = normal_form(cand.a, &ta);
    ExponentVector b = normal_form(cand.b, &tb);
    if (a == b) return;
    // proof a -> b through the original endpoints
    std::vector<ChainStep> proof = flipped(ta);
    proof.insert(proof.end(), cand.proof.begin(), cand.proof.end());
    proof.insert(proof.end(), tb.begin(), tb.end());
    if (term_order_less(a, b)) {
      std::swap(a, b);
      proof = flipped(std::move(proof));
    }
    assert(a.degree() >= 1 && b.degree() >= 1);
    WorkRule rule{std::move(a), std::move(b), std::move(proof), true};
    verify_rule(rule);
    const int id = static_cast<int>(rules.size());
    rules.push_back(std::move(rule));
    if (++alive_count > limits.max_rules) {
      throw ResourceError("completion exceeded the configured rule cap");
    }
    // Interreduce: any older rule either of whose sides the new lhs
    // divides is retired and re-derived against the current system.
    for (int k = 0; k < id; ++k) {
      if (!rules[k].alive) continue;
      if (rules[id].lhs.divides(rules[k].lhs) || rules[id].lhs.divides(rules[k].rhs)) {
        rules[k].alive = false;
        --alive_count;
        candidates.push_back(Candidate{rules[k].lhs, rules[k].rhs, rules[k].proof});
      }
    }
    for (int k = 0; k < id; ++k) {
      if (rules[k].alive) pending_pairs.emplace_back(k, id);
    }
  }

  void run() {
    std::size_t processed = 0;
    const std::size_t processing_cap = 200 * (limits.max_rules + 1);
    while (!candidates.empty() || !pending_pairs.empty()) {
      if (++processed > processing_cap) {
        throw ResourceError("completion exceeded the processing cap");
      }
      if (!candidates.empty()) {
        const Candidate cand = std::move(candidates.front());
        candidates.pop_front();
        insert_candidate(cand);
        continue;
      }
      const auto [i, j] = pending_pairs.front();
      pending_pairs.pop_front();
      if (!rules[i].alive || !rules[j].alive) continue;
      const ExponentVector overlap = rules[i].lhs.lcm_with(rules[j].lhs);
      Candidate cand;
      cand.a = overlap.rewrite(rules[i].lhs, rules[i].rhs);
      cand.b = overlap.rewrite(rules[j].lhs, rules[j].rhs);
      cand.proof = flipped(rules[i].proof); // a -> overlap
      cand.proof.insert(cand.proof.end(), rules[j].proof.begin(), rules[j].proof.end());
      insert_candidate(cand);
    }
  }
};

} // namespace

std::vector<RewriteRule> complete(const RelationSet& set, const DeciderLimits& limits) {
  const std::vector<SemigroupRelation> relations = to_relations(set);
  Completion state{relations, limits, {}, 0, {}, {}};
  for (std::size_t i = 0; i < relations.size(); ++i) {
    // Input relations orient left (degree 2) over right (degree 1).
    state.candidates.push_back(Completion::Candidate{
        relations[i].left, relations[i].right, {ChainStep{static_cast<int>(i), true}}});
  }
  state.run();

  std::vector<RewriteRule> out;
  for (const WorkRule& r : state.rules) {
    if (r.alive) out.push_back(RewriteRule{r.lhs, r.rhs, r.proof});
  }
  // Confluence self-check: every critical pair of the final system joins.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      const ExponentVector overlap = out[i].lhs.lcm_with(out[j].lhs);
      const ExponentVector a = reduce(overlap.rewrite(out[i].lhs, out[i].rhs), out);
      const ExponentVector b = reduce(overlap.rewrite(out[j].lhs, out[j].rhs), out);
      if (!(a == b)) {
        throw std::logic_error("internal: completed system is not confluent");
      }
    }
  }
  return out;
}

ExponentVector reduce(ExponentVector v, const std::vector<RewriteRule>& rules,
                      std::vector<ChainStep>* trace) {
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (const RewriteRule& r : rules) {
      if (!r.lhs.divides(v)) continue;
      v = v.rewrite(r.lhs, r.rhs);
      if (trace) trace->insert(trace->end(), r.proof.begin(), r.proof.end());
      progressed = true;
      break;
    }
  }
  return v;
}

ExponentVector reduce_random(ExponentVector v, const std::vector<RewriteRule>& rules,
                             std::mt19937& rng) {
  while (true) {
    std::vector<int> applicable;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (rules[i].lhs.divides(v)) applicable.push_back(static_cast<int>(i));
    }
    if (applicable.empty()) return v;
    std::uniform_int_distribution<std::size_t> pick(0, applicable.size() - 1);
    const RewriteRule& r = rules[applicable[pick(rng)]];
    v = v.rewrite(r.lhs, r.rhs);
  }
}

bool replay(const CollisionCertificate& cert, const RelationSet& set) {
  const std::vector<SemigroupRelation> relations = to_relations(set);
  const int n = static_cast<int>(set.labels.size());
  if (cert.label_a < 0 || cert.label_a >= n || cert.label_b < 0 || cert.label_b >= n) {
    return false;
  }
  if (cert.label_a == cert.label_b) return false;
  if (cert.vectors.size() != cert.steps.size() + 1) return false;
  if (cert.vectors.empty()) return false;
  if (!(cert.vectors.front() == ExponentVector::unit(n, cert.label_a))) return false;
  if (!(cert.vectors.back() == ExponentVector::unit(n, cert.label_b))) return false;
  ExponentVector v = cert.vectors.front();
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto next = replay_steps(v, {cert.steps[k]}, relations);
    if (!next || !(*next == cert.vectors[k + 1])) return false;
    v = *next;
  }
  return true;
}

namespace {

// All exponent vectors of degree 1..bound over n labels, in a fixed
// enumeration order with an index for constant-time lookup.
struct VectorUniverse {
  std::vector<std::vector<int>> vectors;
  std::map<std::vector<int>, int> index;
};

VectorUniverse enumerate_universe(int n, int bound, std::size_t cap) {
  VectorUniverse u;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  const auto recurse = [&](auto&& self, int position, int remaining) -> void {
    if (position == n - 1) {
      current[static_cast<std::size_t>(position)] = remaining;
      if (u.vectors.size() >= cap) {
        throw ResourceError("vector enumeration exceeded the configured cap");
      }
      u.index.emplace(current, static_cast<int>(u.vectors.size()));
      u.vectors.push_back(current);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      current[static_cast<std::size_t>(position)] = c;
      self(self, position + 1, remaining - c);
    }
    current[static_cast<std::size_t>(position)] = 0;
  };
  for (int d = 1; d <= bound; ++d) recurse(recurse, 0, d);
  return u;
}

// Single relation applications leaving v, staying within the degree bound.
void for_each_neighbor(const ExponentVector& v,
                       const std::vector<SemigroupRelation>& relations, int bound,
                       const std::function<void(const ChainStep&, ExponentVector)>& fn) {
  for (std::size_t r = 0; r < relations.size(); ++r) {
    for (const bool forward : {true, false}) {
      const ExponentVector& from = forward ? relations[r].left : relations[r].right;
      const ExponentVector& to = forward ? relations[r].right : relations[r].left;
      if (!from.divides(v)) continue;
      ExponentVector next = v.rewrite(from, to);
      if (next.degree() > bound) continue;
      fn(ChainStep{static_cast<int>(r), forward}, std::move(next));
    }
  }
}

// The canonical chain from e_a to e_b within the given degree bound, if
// the two are connected there: among all shortest chains, greedily pick
// the term-order-greatest next vector at every step. The result is
// independent of how the collision was discovered.
std::optional<CollisionCertificate> canonical_chain(
    int label_a, int label_b, const std::vector<SemigroupRelation>& relations,
    int n_labels, int bound, std::size_t cap) {
  const VectorUniverse u = enumerate_universe(n_labels, bound, cap);
  const int start = u.index.at(ExponentVector::unit(n_labels, label_a).counts());
  const int goal = u.index.at(ExponentVector::unit(n_labels, label_b).counts());
  std::vector<int> dist(u.vectors.size(), -1);
  std::deque<int> queue{goal};
  dist[static_cast<std::size_t>(goal)] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const ExponentVector ev{std::vector<int>(u.vectors[static_cast<std::size_t>(v)])};
    for_each_neighbor(ev, relations, bound,
                      [&](const ChainStep&, ExponentVector next) {
                        const int target = u.index.at(next.counts());
                        if (dist[static_cast<std::size_t>(target)] >= 0) return;
                        dist[static_cast<std::size_t>(target)] =
                            dist[static_cast<std::size_t>(v)] + 1;
                        queue.push_back(target);
                      });
  }
  if (dist[static_cast<std::size_t>(start)] < 0) return std::nullopt;

  CollisionCertificate cert;
  cert.label_a = label_a;
  cert.label_b = label_b;
  cert.vectors.push_back(ExponentVector::unit(n_labels, label_a));
  int at = start;
  while (at != goal) {
    const ExponentVector ev{std::vector<int>(u.vectors[static_cast<std::size_t>(at)])};
    std::optional<ExponentVector> best;
    ChainStep best_step{-1, true};
    for_each_neighbor(ev, relations, bound,
                      [&](const ChainStep& step, ExponentVector next) {
                        const int target = u.index.at(next.counts());
                        if (dist[static_cast<std::size_t>(target)] !=
                            dist[static_cast<std::size_t>(at)] - 1) {
                          return;
                        }
                        if (!best || term_order_less(*best, next)) {
                          best = std::move(next);
                          best_step = step;
                        }
                      });
    if (!best) throw std::logic_error("internal: canonical chain walk got stuck");
    cert.steps.push_back(best_step);
    cert.vectors.push_back(*best);
    at = u.index.at(best->counts());
  }
  return cert;
}

// Expands a step list into the full vector chain, then removes loops:
// whenever a vector repeats, the segment between the repeats is spliced
// out. The result is a valid chain over the same relations.
CollisionCertificate build_certificate(int label_a, int label_b,
                                       const std::vector<ChainStep>& steps,
                                       const std::vector<SemigroupRelation>& relations,
                                       int n_labels) {
  CollisionCertificate cert;
  cert.label_a = label_a;
  cert.label_b = label_b;
  cert.vectors.push_back(ExponentVector::unit(n_labels, label_a));
  for (const ChainStep& s : steps) {
    const auto next = replay_steps(cert.vectors.back(), {s}, relations);
    if (!next) throw CertificateError("internal: collision chain does not replay");
    cert.steps.push_back(s);
    cert.vectors.push_back(*next);
    for (std::size_t t = 0; t + 1 < cert.vectors.size(); ++t) {
      if (cert.vectors[t] == cert.vectors.back()) {
        cert.vectors.erase(cert.vectors.begin() + static_cast<std::ptrdiff_t>(t) + 1,
                           cert.vectors.end());
        cert.steps.erase(cert.steps.begin() + static_cast<std::ptrdiff_t>(t),
                         cert.steps.end());
        break;
      }
    }
  }
  return cert;
}

} // namespace

Decision decide(const RelationSet& set, const DeciderLimits& limits) {
  const std::vector<RewriteRule> rules = complete(set, limits);
  const std::vector<SemigroupRelation> relations = to_relations(set);
  const int n = static_cast<int>(set.labels.size());

  std::vector<ExponentVector> normal_forms;
  std::vector<std::vector<ChainStep>> traces(static_cast<std::size_t>(n));
  normal_forms.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    normal_forms.push_back(reduce(ExponentVector::unit(n, g), rules, &traces[g]));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!(normal_forms[i] == normal_forms[j])) continue;
      // The rule proofs witness the collision; replaying them bounds the
      // degree a connecting chain needs.
      std::vector<ChainStep> steps = traces[i];
      const std::vector<ChainStep> back = flipped(traces[j]);
      steps.insert(steps.end(), back.begin(), back.end());
      const CollisionCertificate witness = build_certificate(i, j, steps, relations, n);
      int bound = 2;
      for (const ExponentVector& v : witness.vectors) {
        bound = std::max(bound, v.degree());
      }
      Decision decision;
      decision.verdict = Verdict::NotEmbeddable;
      decision.certificate =
          canonical_chain(i, j, relations, n, bound, limits.max_vectors);
      if (!decision.certificate) {
        throw std::logic_error("internal: no canonical chain within the witness bound");
      }
      if (!replay(*decision.certificate, set)) {
        throw CertificateError("internal: collision certificate failed replay");
      }
      return decision;
    }
  }
  Decision decision;
  decision.verdict = Verdict::Embeddable;
  decision.normal_forms = std::move(normal_forms);
  return decision;
}

OracleResult bfs_oracle(const RelationSet& set, int max_degree,
                        const DeciderLimits& limits) {
  if (max_degree < 2) throw InputError("oracle degree bound must be at least 2");
  const std::vector<SemigroupRelation> relations = to_relations(set);
  const int n = static_cast<int>(set.labels.size());
  OracleResult result;
  result.max_degree = max_degree;
  if (n == 0) return result;

  // Enumerate every vector of degree 1..max_degree.
  std::vector<std::vector<int>> vectors;
  std::map<std::vector<int>, int> index;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  const auto enumerate = [&](auto&& self, int position, int remaining) -> void {
    if (position == n - 1) {
      current[position] = remaining;
      if (vectors.size() >= limits.max_vectors) {
        throw ResourceError("oracle enumeration exceeded the configured cap");
      }
      index.emplace(current, static_cast<int>(vectors.size()));
      vectors.push_back(current);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      current[position] = c;
      self(self, position + 1, remaining - c);
    }
    current[position] = 0;
  };
  for (int d = 1; d <= max_degree; ++d) enumerate(enumerate, 0, d);

  // Merge-find over single relation applications inside the bound.
  std::vector<int> parent(vectors.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::size_t v = 0; v < vectors.size(); ++v) {
    const ExponentVector ev{std::vector<int>(vectors[v])};
    for (const SemigroupRelation& rel : relations) {
      if (!rel.left.divides(ev)) continue;
      const ExponentVector to = ev.rewrite(rel.left, rel.right);
      const int u = index.at(to.counts());
      const int ra = find(static_cast<int>(v));
      const int rb = find(u);
      if (ra != rb) parent[ra] = rb;
    }
  }

  int label_a = -1, label_b = -1;
  for (int i = 0; i < n && label_a < 0; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int ui = index.at(ExponentVector::unit(n, i).counts());
      const int uj = index.at(ExponentVector::unit(n, j).counts());
      if (find(ui) == find(uj)) {
        label_a = i;
        label_b = j;
        break;
      }
    }
  }
  if (label_a < 0) return result; // no collision within the bound

  // Witness chain: breadth-first search over single applications.
  const int start = index.at(ExponentVector::unit(n, label_a).counts());
  const int goal = index.at(ExponentVector::unit(n, label_b).counts());
  std::vector<int> prev(vectors.size(), -1);
  std::vector<ChainStep> how(vectors.size(), ChainStep{-1, true});
  std::deque<int> queue{start};
  prev[start] = start;
  while (!queue.empty() && prev[goal] < 0) {
    const int v = queue.front();
    queue.pop_front();
    const ExponentVector ev{std::vector<int>(vectors[v])};
    for (std::size_t r = 0; r < relations.size(); ++r) {
      for (const bool forward : {true, false}) {
        const ExponentVector& from = forward ? relations[r].left : relations[r].right;
        const ExponentVector& to = forward ? relations[r].right : relations[r].left;
        if (!from.divides(ev)) continue;
        const ExponentVector next = ev.rewrite(from, to);
        if (next.degree() > max_degree) continue;
        const int u = index.at(next.counts());
        if (prev[u] >= 0) continue;
        prev[u] = v;
        how[u] = ChainStep{static_cast<int>(r), forward};
        queue.push_back(u);
      }
    }
  }
  if (prev[goal] < 0) {
    throw std::logic_error("internal: merge-find collision unreachable by search");
  }
  std::vector<ChainStep> steps;
  for (int v = goal; v != start; v = prev[v]) steps.push_back(how[v]);
  std::reverse(steps.begin(), steps.end());
  CollisionCertificate cert = build_certificate(label_a, label_b, steps, relations, n);
  if (!replay(cert, set)) {
    throw CertificateError("internal: oracle certificate failed replay");
  }
  result.collision = std::move(cert);
  return result;
}

std::vector<RelationTriple> cited_relations(const CollisionCertificate& cert,
                                            const RelationSet& set) {
  std::vector<RelationTriple> out;
  std::vector<bool> seen(set.triples.size(), false);
  for (const ChainStep& s : cert.steps) {
    if (s.relation < 0 || s.relation >= static_cast<int>(set.triples.size())) {
      throw CertificateError("certificate cites an unknown relation");
    }
    if (!seen[s.relation]) {
      seen[s.relation] = true;
      out.push_back(set.triples[s.relation]);
    }
  }
  return out;
}

namespace {

// Folds the descending half of a unimodal chain into one nested bracket
// expression per colliding label. Expressions start as bare label names
// at the apex; a forward application of relation (g, g', g'') merges the
// expressions for g and g' into "[E_g,E_g']" labeled g''.
std::string fold_expression(const ExponentVector& apex,
                            const std::vector<ChainStep>& folds,
                            const RelationSet& set) {
  std::vector<std::vector<std::string>> buckets(set.labels.size());
  for (int i = 0; i < apex.size(); ++i) {
    for (int c = 0; c < apex.count(i); ++c) buckets[i].push_back(set.labels[i]);
  }
  std::string last;
  for (const ChainStep& s : folds) {
    if (!s.forward) throw CertificateError("bracket rendering: fold expected");
    const RelationTriple& t = set.triples.at(s.relation);
    if (buckets[t.g].empty()) throw CertificateError("bracket rendering: missing operand");
    const std::string left = buckets[t.g].back();
    buckets[t.g].pop_back();
    if (buckets[t.gp].empty()) throw CertificateError("bracket rendering: missing operand");
    const std::string right = buckets[t.gp].back();
    buckets[t.gp].pop_back();
    last = "[" + left + "," + right + "]";
    buckets[t.gpp].push_back(last);
  }
  return last;
}

} // namespace

std::string render_certificate(const CollisionCertificate& cert,
                               const RelationSet& set, CertificateStyle style) {
  if (!replay(cert, set)) {
    throw CertificateError("certificate failed replay");
  }
  if (style == CertificateStyle::Text) {
    std::string out;
    for (const ExponentVector& v : cert.vectors) {
      if (!out.empty()) out += " = ";
      out += format_exponent_vector(v, set.labels);
    }
    return out;
  }
  // Bracket style: require a single apex with strictly rising then
  // strictly falling degree, i.e. backward steps then forward steps.
  std::size_t pivot = 0;
  while (pivot < cert.steps.size() && !cert.steps[pivot].forward) ++pivot;
  for (std::size_t k = pivot; k < cert.steps.size(); ++k) {
    if (!cert.steps[k].forward) {
      throw CertificateError("bracket rendering is only available for unimodal chains");
    }
  }
  const ExponentVector& apex = cert.vectors.at(pivot);
  // Reversed rising half = folds from the apex down to label_a.
  std::vector<ChainStep> to_a(cert.steps.begin(),
                              cert.steps.begin() + static_cast<std::ptrdiff_t>(pivot));
  to_a = flipped(std::move(to_a));
  const std::vector<ChainStep> to_b(cert.steps.begin() + static_cast<std::ptrdiff_t>(pivot),
                                    cert.steps.end());
  const std::string expr_a = fold_expression(apex, to_a, set);
  const std::string expr_b = fold_expression(apex, to_b, set);
  return expr_a + " = " + set.labels.at(cert.label_a) + "\n" + expr_b + " = " +
         set.labels.at(cert.label_b);
}

} // namespace liegrad
