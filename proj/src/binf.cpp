#include "crystal/binf.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <sstream>
#include <thread>

#include "crystal/errors.hpp"

namespace crystal {

namespace {

// Position of each segment copy's basis vector at each vertex, in the order
// used by segment_sum.
std::vector<std::vector<int>> slots(const Multisegment& m) {
  const int n = m.rank();
  std::vector<std::vector<int>> slot(m.size(), std::vector<int>(n + 2, -1));
  std::vector<int> fill(n + 2, 0);
  for (std::size_t s = 0; s < m.size(); ++s)
    for (int k = m.segments()[s].i; k <= m.segments()[s].j; ++k) slot[s][k] = fill[k]++;
  return slot;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void push_unique(std::vector<Multisegment>& out, Multisegment m) {
  if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
}

std::vector<Segment> distinct(const Multisegment& m) {
  std::vector<Segment> out(m.segments().begin(), m.segments().end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Multisegment replace(const Multisegment& m, const Segment& from, std::vector<Segment> to) {
  auto r = *m.without(from);
  for (const auto& s : to) r = r.with(s);
  return r;
}

}  // namespace

RepPoint ConormalFiber::point(std::span<const Rational> coeffs) const {
  if (coeffs.size() != basis.size()) throw DomainError("coefficient count does not match the fiber dimension");
  RepPoint p = base;
  for (std::size_t b = 0; b < basis.size(); ++b)
    for (const auto& entry : basis[b]) p.maps[entry.arrow](entry.row, entry.col) += coeffs[b] * entry.value;
  return p;
}

RepPoint ConormalFiber::sample(Rng& rng, long range) const {
  std::vector<Rational> c(basis.size());
  for (auto& x : c) x = uniform(rng, range);
  return point(c);
}

ConormalFiber conormal_fiber(const Multisegment& m) {
  ConormalFiber fib{m, segment_sum(m), {}};
  const auto slot = slots(m);
  const auto& segs = m.segments();
  for (std::size_t p = 0; p < segs.size(); ++p)
    for (std::size_t q = 0; q < segs.size(); ++q) {
      // unknown y_k = (x_{a_k bar})[p at k+1, q at k]
      const int klo = std::max(segs[q].i, segs[p].i - 1), khi = std::min(segs[q].j, segs[p].j - 1);
      if (klo > khi) continue;
      const int ilo = std::max(segs[p].i, segs[q].i), ihi = std::min(segs[p].j, segs[q].j);
      const std::size_t unknowns = khi - klo + 1;
      std::vector<Matrix> eqs;
      // psi at vertex i, entry (p, q): [p has i+1] y_i - [q has i-1] y_{i-1}
      for (int i = ilo; i <= ihi; ++i) {
        Matrix row(1, unknowns);
        if (i >= klo && i <= khi) row(0, i - klo) += 1;
        if (i - 1 >= klo && i - 1 <= khi) row(0, i - 1 - klo) -= 1;
        eqs.push_back(std::move(row));
      }
      const Matrix null = nullspace(Matrix::vstack(unknowns, eqs));
      for (std::size_t b = 0; b < null.cols(); ++b) {
        std::vector<FiberEntry> vec;
        for (int k = klo; k <= khi; ++k)
          if (sgn(null(k - klo, b)) != 0)
            vec.push_back({DoubleQuiver::right_arrow(k), static_cast<std::size_t>(slot[p][k + 1]),
                           static_cast<std::size_t>(slot[q][k]), null(k - klo, b)});
        fib.basis.push_back(std::move(vec));
      }
    }
  return fib;
}

ConormalFiber conormal_fiber_dense(const Multisegment& m) {
  ConormalFiber fib{m, segment_sum(m), {}};
  const int n = m.rank();
  struct Unknown {
    std::size_t arrow, row, col;
  };
  std::vector<Unknown> unknowns;
  for (int k = 1; k < n; ++k) {
    const auto a = DoubleQuiver::right_arrow(k);
    for (std::size_t r = 0; r < fib.base.maps[a].rows(); ++r)
      for (std::size_t c = 0; c < fib.base.maps[a].cols(); ++c) unknowns.push_back({a, r, c});
  }
  std::size_t eq_count = 0;
  for (int v = 1; v <= n; ++v) eq_count += static_cast<std::size_t>(fib.base.dim(v)) * fib.base.dim(v);
  Matrix system(eq_count, unknowns.size());
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    RepPoint p = fib.base;
    p.maps[unknowns[u].arrow](unknowns[u].row, unknowns[u].col) = 1;
    std::size_t r = 0;
    for (const auto& psi : moment_map(p))
      for (std::size_t a = 0; a < psi.rows(); ++a)
        for (std::size_t b = 0; b < psi.cols(); ++b) system(r++, u) = psi(a, b);
  }
  const Matrix null = nullspace(system);
  for (std::size_t b = 0; b < null.cols(); ++b) {
    std::vector<FiberEntry> vec;
    for (std::size_t u = 0; u < unknowns.size(); ++u)
      if (sgn(null(u, b)) != 0) vec.push_back({unknowns[u].arrow, unknowns[u].row, unknowns[u].col, null(u, b)});
    fib.basis.push_back(std::move(vec));
  }
  return fib;
}

int genericity_score(const Multisegment& m) {
  int score = 0;
  for (int i = 1; i <= m.rank(); ++i)
    for (int j = i; j <= m.rank(); ++j) score += m.composite_rank(i, j);
  return score;
}

namespace {

// Restriction of p to S with S_i = sum of the images of the arrows into i
// and S_v = V_v elsewhere.
RepPoint restrict_to_image(const RepPoint& p, int i) {
  std::vector<Matrix> incoming;
  for (std::size_t a = 0; a < p.maps.size(); ++a)
    if (p.quiver.quiver.arrows[a].dst == i) incoming.push_back(p.maps[a]);
  const Matrix b = column_basis(Matrix::hstack(p.dim(i), incoming));
  DimVector dims = p.dims;
  dims[i - 1] = static_cast<int>(b.cols());
  RepPoint r = RepPoint::zero(p.quiver, dims);
  for (std::size_t a = 0; a < p.maps.size(); ++a) {
    const auto& arrow = p.quiver.quiver.arrows[a];
    if (arrow.dst == i)
      r.maps[a] = solve_in_basis(b, p.maps[a]);
    else if (arrow.src == i)
      r.maps[a] = p.maps[a] * b;
    else
      r.maps[a] = p.maps[a];
  }
  return r;
}

}  // namespace

GeometricBinf::GeometricBinf(int n, Genericity g) : n_(n), datum_(RootDatum::type_a(n)), gen_(g) {
  if (n < 1) throw DomainError("rank must be at least 1");
}

std::shared_ptr<const std::vector<RepPoint>> GeometricBinf::sample_points(const Multisegment& m) const {
  if (m.rank() != n_) throw DomainError("multisegment rank does not match the model");
  const auto key = m.key();
  {
    std::lock_guard lock(mu_);
    if (auto it = points_.find(key); it != points_.end()) return it->second;
  }
  const auto fib = conormal_fiber(m);
  auto pts = std::make_shared<std::vector<RepPoint>>();
  const int count = fib.dimension() == 0 ? 1 : gen_.samples;
  for (int s = 0; s < count; ++s) {
    auto rng = stream(gen_.seed, "pt|" + key + "|" + std::to_string(s));
    pts->push_back(fib.sample(rng, gen_.range));
    if (!moment_map_vanishes(pts->back())) throw InternalError("conormal fiber point off the moment map zero set");
  }
  std::lock_guard lock(mu_);
  return points_.emplace(key, std::move(pts)).first->second;
}

std::vector<int> GeometricBinf::epsilons(const Multisegment& m) const {
  const auto key = m.key();
  {
    std::lock_guard lock(mu_);
    if (auto it = eps_.find(key); it != eps_.end()) return it->second;
  }
  const auto pts = sample_points(m);
  std::vector<int> eps(n_);
  for (int i = 1; i <= n_; ++i) {
    int best = m.dimvec()[i - 1];
    for (const auto& p : *pts) best = std::min(best, epsilon_point(p, i));
    eps[i - 1] = best;
  }
  std::lock_guard lock(mu_);
  return eps_.emplace(key, std::move(eps)).first->second;
}

int GeometricBinf::epsilon(const Multisegment& m, int i) const {
  if (i < 1 || i > n_) throw DomainError("vertex out of range");
  return epsilons(m)[i - 1];
}

std::pair<Multisegment, int> GeometricBinf::e_max(const Multisegment& m, int i) const {
  const int c = epsilon(m, i);
  if (c == 0) return {m, 0};
  const auto key = m.key() + "|" + std::to_string(i);
  {
    std::lock_guard lock(mu_);
    if (auto it = emax_.find(key); it != emax_.end()) return it->second;
  }
  std::optional<Multisegment> best;
  int best_score = -1;
  bool tie = false;
  for (const auto& p : *sample_points(m)) {
    if (epsilon_point(p, i) != c) continue;
    const RepPoint r = restrict_to_image(p, i);
    if (!moment_map_vanishes(r)) throw InternalError("restriction leaves the moment map zero set");
    auto bar = decompose_segments(r.omega_part());
    const int score = genericity_score(bar);
    if (score > best_score) {
      best = std::move(bar);
      best_score = score;
      tie = false;
    } else if (score == best_score && bar != *best) {
      tie = true;
    }
  }
  if (!best) throw InternalError("no generic sample attains epsilon");
  if (tie) throw InternalError("generic samples of " + m.to_string() + " restrict to different components");
  auto expect = m.dimvec();
  expect[i - 1] -= c;
  if (best->dimvec() != expect) throw InternalError("restriction has the wrong dimension vector");
  std::pair<Multisegment, int> out{*best, c};
  std::lock_guard lock(mu_);
  return emax_.emplace(key, std::move(out)).first->second;
}

std::optional<Multisegment> GeometricBinf::pick(const std::vector<Multisegment>& candidates, const DimVector& target,
                                                const std::pair<Multisegment, int>& want, int i,
                                                const char* op) const {
  std::optional<Multisegment> found;
  for (const auto& c : candidates) {
    if (c.dimvec() != target) continue;
    if (epsilon(c, i) != want.second) continue;
    if (e_max(c, i) != want) continue;
    if (found && *found != c)
      throw InternalError(std::string(op) + "_" + std::to_string(i) + ": two components qualify (" +
                          found->to_string() + ", " + c.to_string() + ")");
    found = c;
  }
  return found;
}

Multisegment GeometricBinf::f(const Multisegment& m, int i) const {
  if (i < 1 || i > n_) throw DomainError("vertex out of range");
  const auto key = m.key() + "|" + std::to_string(i);
  {
    std::lock_guard lock(mu_);
    if (auto it = f_.find(key); it != f_.end()) return it->second;
  }
  const auto [bar, c] = e_max(m, i);
  auto target = m.dimvec();
  target[i - 1] += 1;
  const std::pair<Multisegment, int> want{bar, c + 1};
  auto r = pick(raising_candidates(m, i), target, want, i, "f");
  if (!r) {
    {
      std::lock_guard lock(mu_);
      ++fallbacks_;
    }
    r = pick(enumerate_multisegments(n_, target), target, want, i, "f");
  }
  if (!r) throw InternalError("f_" + std::to_string(i) + " of " + m.to_string() + ": no component qualifies");
  std::lock_guard lock(mu_);
  return f_.emplace(key, *r).first->second;
}

std::optional<Multisegment> GeometricBinf::e(const Multisegment& m, int i) const {
  const auto [bar, c] = e_max(m, i);
  if (c == 0) return std::nullopt;
  auto target = m.dimvec();
  target[i - 1] -= 1;
  const std::pair<Multisegment, int> want{bar, c - 1};
  auto r = pick(lowering_candidates(m, i), target, want, i, "e");
  if (!r) {
    {
      std::lock_guard lock(mu_);
      ++fallbacks_;
    }
    r = pick(enumerate_multisegments(n_, target), target, want, i, "e");
  }
  if (!r) throw InternalError("e_" + std::to_string(i) + " of " + m.to_string() + ": no component qualifies");
  return r;
}

Weight GeometricBinf::wt(const Multisegment& m) const { return Weight::zero(n_) - root_combination(datum_, m.dimvec()); }

std::vector<int> GeometricBinf::phi(const Multisegment& m) const {
  auto out = epsilons(m);
  const auto w = wt(m);
  for (int i = 1; i <= n_; ++i) out[i - 1] += pairing(datum_, i, w);
  return out;
}

std::size_t GeometricBinf::fallback_count() const {
  std::lock_guard lock(mu_);
  return fallbacks_;
}

std::vector<Multisegment> raising_candidates(const Multisegment& m, int i) {
  std::vector<Multisegment> out;
  push_unique(out, m.with({i, i}));
  for (const auto& s : distinct(m)) {
    if (s.i == i + 1) push_unique(out, replace(m, s, {{i, s.j}}));
    if (s.j == i - 1) push_unique(out, replace(m, s, {{s.i, i}}));
  }
  for (const auto& l : distinct(m))
    for (const auto& r : distinct(m))
      if (l.j == i - 1 && r.i == i + 1) push_unique(out, replace(*m.without(l), r, {{l.i, r.j}}));
  return out;
}

std::vector<Multisegment> lowering_candidates(const Multisegment& m, int i) {
  std::vector<Multisegment> out;
  for (const auto& s : distinct(m)) {
    if (!s.contains(i)) continue;
    if (s.i == i && s.j == i)
      push_unique(out, *m.without(s));
    else if (s.i == i)
      push_unique(out, replace(m, s, {{i + 1, s.j}}));
    else if (s.j == i)
      push_unique(out, replace(m, s, {{s.i, i - 1}}));
    else
      push_unique(out, replace(m, s, {{s.i, i - 1}, {i + 1, s.j}}));
  }
  return out;
}

// ---- signature rule

namespace {

struct Symbol {
  int key;
  bool movable;  // extendable by f (the class without an endpoint at i)
  Segment seg;
};

struct Bracketing {
  std::vector<Symbol> word;
  std::vector<std::size_t> free_movable;  // word positions, increasing
  std::vector<std::size_t> free_fixed;
};

Bracketing bracket(const FastRule& rule, const Multisegment& m, int i) {
  Bracketing b;
  for (const auto& s : m.segments()) {
    if (rule.right_ends) {
      if (s.j == i - 1) b.word.push_back({s.i, true, s});
      if (s.j == i) b.word.push_back({s.i, false, s});
    } else {
      if (s.i == i + 1) b.word.push_back({s.j, true, s});
      if (s.i == i) b.word.push_back({s.j, false, s});
    }
  }
  std::stable_sort(b.word.begin(), b.word.end(), [&](const Symbol& x, const Symbol& y) {
    if (x.key != y.key) return rule.ascending ? x.key < y.key : x.key > y.key;
    if (x.movable != y.movable) return rule.movable_first ? x.movable : y.movable;
    return false;
  });
  std::vector<std::size_t> open;
  std::vector<std::size_t> free_close;
  for (std::size_t k = 0; k < b.word.size(); ++k) {
    const bool opener = b.word[k].movable == rule.movable_opens;
    if (opener)
      open.push_back(k);
    else if (!open.empty())
      open.pop_back();
    else
      free_close.push_back(k);
  }
  if (rule.movable_opens) {
    b.free_movable = open;
    b.free_fixed = free_close;
  } else {
    b.free_movable = free_close;
    b.free_fixed = open;
  }
  return b;
}

}  // namespace

std::string FastRule::describe() const {
  std::ostringstream os;
  os << (right_ends ? "right-ends" : "left-ends") << (ascending ? " ascending" : " descending")
     << (movable_first ? " movable-first" : " fixed-first") << (movable_opens ? " movable-opens" : " fixed-opens")
     << (leftmost ? " leftmost" : " rightmost");
  return os.str();
}

std::vector<FastRule> FastRule::all() {
  std::vector<FastRule> out;
  for (bool side : {true, false})
    for (bool asc : {true, false})
      for (bool first : {false, true})
        for (bool opens : {true, false})
          for (bool left : {true, false}) out.push_back({side, asc, first, opens, left});
  return out;
}

Multisegment FastRule::f(const Multisegment& m, int i) const {
  const auto b = bracket(*this, m, i);
  if (b.free_movable.empty()) return m.with({i, i});
  const auto& s = b.word[leftmost ? b.free_movable.front() : b.free_movable.back()].seg;
  return replace(m, s, {right_ends ? Segment{s.i, i} : Segment{i, s.j}});
}

std::optional<Multisegment> FastRule::e(const Multisegment& m, int i) const {
  const auto b = bracket(*this, m, i);
  if (b.free_fixed.empty()) return std::nullopt;
  const auto& s = b.word[leftmost ? b.free_fixed.back() : b.free_fixed.front()].seg;
  if (s.i == s.j) return *m.without(s);
  return replace(m, s, {right_ends ? Segment{s.i, i - 1} : Segment{i + 1, s.j}});
}

int FastRule::epsilon(const Multisegment& m, int i) const {
  return static_cast<int>(bracket(*this, m, i).free_fixed.size());
}

CalibrationReport calibrate_fast_rule(const std::function<const GeometricBinf&(int)>& oracle,
                                      const CalibrationOptions& options) {
  struct Row {
    Multisegment m;
    int i;
    Multisegment f;
  };
  std::vector<Row> table;
  for (int n = 1; n <= options.max_rank; ++n) {
    const auto& model = oracle(n);
    for (const auto& m : enumerate_multisegments_up_to(n, options.table_total))
      for (int i = 1; i <= n; ++i) table.push_back({m, i, model.f(m, i)});
  }
  CalibrationReport report;
  report.table_size = table.size();
  std::optional<FastRule> chosen;
  for (const auto& rule : FastRule::all()) {
    const auto bad = std::find_if(table.begin(), table.end(), [&](const Row& r) { return rule.f(r.m, r.i) != r.f; });
    if (bad == table.end()) {
      if (!chosen) chosen = rule;
      report.survivors.push_back(rule.describe());
      continue;
    }
    report.rejected.push_back(rule.describe() + ": f_" + std::to_string(bad->i) + bad->m.to_string() + " = " +
                              bad->f.to_string() + ", rule gives " + rule.f(bad->m, bad->i).to_string());
  }
  if (!chosen) throw InternalError("no signature convention matches the geometric operators");
  report.rule = *chosen;

  auto rng = stream(oracle(1).genericity().seed, "spot");
  for (int k = 0; k < options.spot_checks; ++k) {
    const int n = 1 + static_cast<int>(rng() % options.max_rank);
    const int total = 1 + static_cast<int>(rng() % options.spot_total);
    Multisegment m(n);
    while (m.total() < total) {
      const int i = 1 + static_cast<int>(rng() % n);
      const int j = i + static_cast<int>(rng() % std::min(n - i + 1, total - m.total()));
      m = m.with({i, j});
    }
    const int i = 1 + static_cast<int>(rng() % n);
    const auto geo = oracle(n).f(m, i);
    if (chosen->f(m, i) != geo)
      throw InternalError("fast rule spot check failed: f_" + std::to_string(i) + m.to_string() + " = " +
                          geo.to_string() + ", rule gives " + chosen->f(m, i).to_string());
    ++report.spot_checks;
  }
  return report;
}

// ---- graph generation

MultisegmentGraph expand_from_empty(
    int n, const std::function<std::optional<Multisegment>(const Multisegment&, int)>& step,
    const std::function<CrystalNode(const Multisegment&)>& decorate, const ExpandOptions& options) {
  MultisegmentGraph out{CrystalGraph(n), {}};
  std::map<Multisegment, std::size_t> index;
  const Multisegment root(n);
  out.graph.add_node(decorate(root));
  out.elements.push_back(root);
  index.emplace(root, 0);
  std::vector<std::size_t> layer{0};
  const std::size_t colors = static_cast<std::size_t>(n);
  while (!layer.empty()) {
    std::vector<std::optional<Multisegment>> succ(layer.size() * colors);
    parallel_for(succ.size(), options.jobs, [&](std::size_t t) {
      succ[t] = step(out.elements[layer[t / colors]], static_cast<int>(t % colors) + 1);
    });
    std::vector<Multisegment> fresh;
    std::set<Multisegment> fresh_set;
    for (const auto& s : succ)
      if (s && !index.count(*s) && fresh_set.insert(*s).second) fresh.push_back(*s);
    if (out.elements.size() + fresh.size() > options.node_budget)
      throw DomainError("node budget of " + std::to_string(options.node_budget) + " exceeded");
    std::vector<CrystalNode> decorated(fresh.size());
    parallel_for(fresh.size(), options.jobs, [&](std::size_t t) { decorated[t] = decorate(fresh[t]); });
    std::vector<std::size_t> next;
    for (std::size_t t = 0; t < fresh.size(); ++t) {
      const auto id = out.graph.add_node(std::move(decorated[t]));
      out.elements.push_back(fresh[t]);
      index.emplace(fresh[t], id);
      next.push_back(id);
    }
    for (std::size_t t = 0; t < succ.size(); ++t)
      if (succ[t]) out.graph.add_edge(layer[t / colors], static_cast<int>(t % colors) + 1, index.at(*succ[t]));
    layer = std::move(next);
  }
  return out;
}

MultisegmentGraph generate_binf(const GeometricBinf& model, int depth, const ExpandOptions& options) {
  if (depth < 0) throw DomainError("depth must be non-negative");
  return expand_from_empty(
      model.rank(),
      [&](const Multisegment& m, int i) -> std::optional<Multisegment> {
        if (m.total() >= depth) return std::nullopt;
        return model.f(m, i);
      },
      [&](const Multisegment& m) { return CrystalNode{m.to_string(), model.wt(m), model.epsilons(m), model.phi(m)}; },
      options);
}

MultisegmentGraph generate_binf_fast(const RootDatum& d, const FastRule& rule, int depth,
                                     const ExpandOptions& options) {
  if (depth < 0) throw DomainError("depth must be non-negative");
  return expand_from_empty(
      d.n,
      [&](const Multisegment& m, int i) -> std::optional<Multisegment> {
        if (m.total() >= depth) return std::nullopt;
        return rule.f(m, i);
      },
      [&](const Multisegment& m) {
        const Weight wt = Weight::zero(d.n) - root_combination(d, m.dimvec());
        std::vector<int> eps(d.n), phi(d.n);
        for (int i = 1; i <= d.n; ++i) {
          eps[i - 1] = rule.epsilon(m, i);
          phi[i - 1] = eps[i - 1] + pairing(d, i, wt);
        }
        return CrystalNode{m.to_string(), wt, eps, phi};
      },
      options);
}

}  // namespace crystal
