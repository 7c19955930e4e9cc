#include "crystal/rep.hpp"

#include <algorithm>
#include <numeric>

#include "crystal/errors.hpp"

namespace crystal {

namespace {

int vertex_dim(const DimVector& dims, int v) { return dims.at(static_cast<std::size_t>(v - 1)); }

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng, long range) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(rng, range);
  return m;
}

}  // namespace

RepPoint RepPoint::zero(const DoubleQuiver& q, const DimVector& dims) {
  if (dims.size() != q.num_vertices()) throw DomainError("dimension vector does not match the quiver");
  for (int d : dims)
    if (d < 0) throw DomainError("negative dimension");
  RepPoint p{q, dims, {}};
  for (const auto& a : q.quiver.arrows)
    p.maps.emplace_back(vertex_dim(dims, a.dst), vertex_dim(dims, a.src));
  return p;
}

Matrix& RepPoint::map(const std::string& id) {
  auto k = quiver.quiver.arrow_index(id);
  if (!k) throw DomainError("unknown arrow '" + id + "'");
  return maps[*k];
}

const Matrix& RepPoint::map(const std::string& id) const {
  auto k = quiver.quiver.arrow_index(id);
  if (!k) throw DomainError("unknown arrow '" + id + "'");
  return maps[*k];
}

void RepPoint::validate() const {
  quiver.quiver.validate();
  if (dims.size() != quiver.num_vertices()) throw DomainError("dimension vector does not match the quiver");
  if (maps.size() != quiver.quiver.arrows.size()) throw DomainError("one matrix per arrow is required");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& arrow = quiver.quiver.arrows[a];
    if (static_cast<int>(maps[a].rows()) != vertex_dim(dims, arrow.dst) ||
        static_cast<int>(maps[a].cols()) != vertex_dim(dims, arrow.src))
      throw DomainError("matrix for arrow '" + arrow.id + "' has shape " + std::to_string(maps[a].rows()) +
                        "x" + std::to_string(maps[a].cols()) + ", expected " +
                        std::to_string(vertex_dim(dims, arrow.dst)) + "x" +
                        std::to_string(vertex_dim(dims, arrow.src)));
  }
}

RepPoint RepPoint::omega_part() const {
  RepPoint r(*this);
  for (std::size_t a = 0; a < maps.size(); ++a)
    if (!quiver.in_omega[a]) r.maps[a] = Matrix(maps[a].rows(), maps[a].cols());
  return r;
}

FramedPoint FramedPoint::zero(const RepPoint& rep, const DimVector& wdims) {
  if (wdims.size() != rep.dims.size()) throw DomainError("framing dimension vector has wrong length");
  FramedPoint fp{rep, wdims, {}};
  for (std::size_t v = 0; v < wdims.size(); ++v) {
    if (wdims[v] < 0) throw DomainError("negative framing dimension");
    fp.framing.emplace_back(wdims[v], rep.dims[v]);
  }
  return fp;
}

void FramedPoint::validate() const {
  rep.validate();
  if (wdims.size() != rep.dims.size() || framing.size() != wdims.size())
    throw DomainError("framing does not match the quiver");
  for (std::size_t v = 0; v < wdims.size(); ++v)
    if (static_cast<int>(framing[v].rows()) != wdims[v] || static_cast<int>(framing[v].cols()) != rep.dims[v])
      throw DomainError("framing map at vertex " + std::to_string(v + 1) + " has the wrong shape");
}

GroupElement random_group_element(const DimVector& dims, Rng& rng, long range) {
  GroupElement g;
  for (int d : dims) {
    Matrix m;
    do {
      m = random_matrix(d, d, rng, range);
    } while (rank(m) < static_cast<std::size_t>(d));
    g.push_back(std::move(m));
  }
  return g;
}

RepPoint act(const GroupElement& g, const RepPoint& p) {
  if (g.size() != p.dims.size()) throw DomainError("group element does not match the dimension vector");
  std::vector<Matrix> inv;
  for (const auto& gv : g) inv.push_back(inverse(gv));
  RepPoint r(p);
  for (std::size_t a = 0; a < p.maps.size(); ++a) {
    const auto& arrow = p.quiver.quiver.arrows[a];
    r.maps[a] = g[arrow.dst - 1] * p.maps[a] * inv[arrow.src - 1];
  }
  return r;
}

FramedPoint act(const GroupElement& g, const FramedPoint& fp) {
  FramedPoint r{act(g, fp.rep), fp.wdims, fp.framing};
  for (std::size_t v = 0; v < g.size(); ++v) r.framing[v] = fp.framing[v] * inverse(g[v]);
  return r;
}

RepPoint direct_sum(const RepPoint& p, const RepPoint& q) {
  if (!(p.quiver == q.quiver)) throw DomainError("direct sum of representations of different quivers");
  DimVector dims(p.dims.size());
  for (std::size_t v = 0; v < dims.size(); ++v) dims[v] = p.dims[v] + q.dims[v];
  RepPoint r{p.quiver, dims, {}};
  for (std::size_t a = 0; a < p.maps.size(); ++a) r.maps.push_back(Matrix::block_diag(p.maps[a], q.maps[a]));
  return r;
}

RepPoint segment_rep(int n, const Segment& s) { return segment_sum(Multisegment(n, {s})); }

RepPoint segment_sum(const Multisegment& m) {
  const int n = m.rank();
  const auto dq = DoubleQuiver::type_a(n);
  RepPoint p = RepPoint::zero(dq, m.dimvec());
  // index of each segment's basis vector at vertex k
  std::vector<std::vector<int>> slot(m.size(), std::vector<int>(n + 2, -1));
  std::vector<int> fill(n + 1, 0);
  for (std::size_t s = 0; s < m.size(); ++s)
    for (int k = m.segments()[s].i; k <= m.segments()[s].j; ++k) slot[s][k] = fill[k]++;
  for (int k = 1; k < n; ++k) {
    Matrix& x = p.maps[DoubleQuiver::left_arrow(k)];
    for (std::size_t s = 0; s < m.size(); ++s)
      if (slot[s][k] >= 0 && slot[s][k + 1] >= 0) x(slot[s][k], slot[s][k + 1]) = 1;
  }
  return p;
}

std::vector<Matrix> moment_map(const RepPoint& p) {
  const auto& q = p.quiver;
  if (q.bar.size() != q.quiver.arrows.size() || q.in_omega.size() != q.quiver.arrows.size())
    throw DomainError("representation lacks orientation data");
  std::vector<Matrix> psi;
  for (int d : p.dims) psi.emplace_back(d, d);
  for (std::size_t a = 0; a < p.maps.size(); ++a) {
    const int target = q.quiver.arrows[a].dst;
    Matrix term = p.maps[a] * p.maps[q.bar[a]];
    psi[target - 1] = psi[target - 1] + (q.sign(a) > 0 ? term : -term);
  }
  return psi;
}

bool moment_map_vanishes(const RepPoint& p) {
  for (const auto& m : moment_map(p))
    if (!m.is_zero()) return false;
  return true;
}

int epsilon_point(const RepPoint& p, int i) {
  const int di = p.dim(i);
  std::vector<Matrix> incoming;
  for (std::size_t a = 0; a < p.maps.size(); ++a)
    if (p.quiver.quiver.arrows[a].dst == i) incoming.push_back(p.maps[a]);
  return di - static_cast<int>(rank(Matrix::hstack(di, incoming)));
}

Multisegment decompose_segments(const RepPoint& p) {
  if (!p.quiver.is_left_oriented_type_a())
    throw DomainError("segment decomposition needs the left-oriented type A quiver");
  const int n = static_cast<int>(p.dims.size());
  // r[i][j], 1 <= i <= j <= n, padded with zeros at 0 and n+1
  std::vector<std::vector<int>> r(n + 2, std::vector<int>(n + 2, 0));
  for (int j = 1; j <= n; ++j) {
    r[j][j] = p.dim(j);
    Matrix composite = Matrix::identity(p.dim(j));
    for (int i = j - 1; i >= 1; --i) {
      composite = p.maps[DoubleQuiver::left_arrow(i)] * composite;
      r[i][j] = static_cast<int>(rank(composite));
    }
  }
  std::vector<Segment> segs;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      const int mult = r[i][j] - r[i - 1][j] - r[i][j + 1] + r[i - 1][j + 1];
      if (mult < 0) throw InternalError("negative segment multiplicity");
      for (int c = 0; c < mult; ++c) segs.push_back({i, j});
    }
  Multisegment m(n, std::move(segs));
  if (m.dimvec() != p.dims) throw InternalError("segment decomposition does not reproduce the dimension vector");
  return m;
}

bool is_nilpotent_point(const RepPoint& p) {
  // U_0 = V, U_{k+1} = sum_a x_a(U_k): the span of the images of all
  // composites of length k+1. The chain decreases, so it stabilizes within
  // sum(dims) steps.
  const std::size_t nv = p.dims.size();
  std::vector<Matrix> image;
  for (int d : p.dims) image.push_back(Matrix::identity(d));
  const int bound = 1 + std::accumulate(p.dims.begin(), p.dims.end(), 0);
  for (int step = 0; step < bound; ++step) {
    std::vector<std::vector<Matrix>> parts(nv);
    for (std::size_t a = 0; a < p.maps.size(); ++a) {
      const auto& arrow = p.quiver.quiver.arrows[a];
      parts[arrow.dst - 1].push_back(p.maps[a] * image[arrow.src - 1]);
    }
    bool all_zero = true;
    for (std::size_t v = 0; v < nv; ++v) {
      image[v] = column_basis(Matrix::hstack(p.dims[v], parts[v]));
      if (image[v].cols() > 0) all_zero = false;
    }
    if (all_zero) return true;
  }
  return false;
}

DimVector max_invariant_in_kernel(const FramedPoint& fp) {
  const auto& p = fp.rep;
  const std::size_t nv = p.dims.size();
  // S_v = ker K_v; start from ker t_v and add the pullback constraints
  // K_{t(a)} x_a for every arrow leaving v until nothing changes.
  std::vector<Matrix> constraint;
  for (std::size_t v = 0; v < nv; ++v) constraint.push_back(row_basis(fp.framing[v]));
  const int bound = 1 + std::accumulate(p.dims.begin(), p.dims.end(), 0);
  for (int step = 0; step < bound; ++step) {
    bool changed = false;
    std::vector<Matrix> next;
    for (std::size_t v = 0; v < nv; ++v) {
      std::vector<Matrix> rows{constraint[v]};
      for (std::size_t a = 0; a < p.maps.size(); ++a) {
        const auto& arrow = p.quiver.quiver.arrows[a];
        if (arrow.src == static_cast<int>(v + 1)) rows.push_back(constraint[arrow.dst - 1] * p.maps[a]);
      }
      next.push_back(row_basis(Matrix::vstack(p.dims[v], rows)));
      if (next.back().rows() != constraint[v].rows()) changed = true;
    }
    constraint = std::move(next);
    if (!changed) break;
  }
  DimVector s(nv);
  for (std::size_t v = 0; v < nv; ++v) s[v] = p.dims[v] - static_cast<int>(constraint[v].rows());
  return s;
}

bool kernel_criterion(const FramedPoint& fp) {
  const auto& p = fp.rep;
  for (std::size_t v = 0; v < p.dims.size(); ++v) {
    std::vector<Matrix> rows{fp.framing[v]};
    for (std::size_t a = 0; a < p.maps.size(); ++a)
      if (p.quiver.quiver.arrows[a].src == static_cast<int>(v + 1)) rows.push_back(p.maps[a]);
    if (rank(Matrix::vstack(p.dims[v], rows)) < static_cast<std::size_t>(p.dims[v])) return false;
  }
  return true;
}

bool is_stable(const FramedPoint& fp) {
  const DimVector s = max_invariant_in_kernel(fp);
  const bool stable = std::all_of(s.begin(), s.end(), [](int d) { return d == 0; });
  if (fp.rep.quiver.is_left_oriented_type_a() && moment_map_vanishes(fp.rep) && kernel_criterion(fp) != stable)
    throw InternalError("stability criteria disagree");
  return stable;
}

}  // namespace crystal
