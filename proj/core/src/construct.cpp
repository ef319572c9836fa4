#include "grpverify/construct.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "grpverify/autmorph.hpp"
#include "grpverify/error.hpp"
#include "grpverify/lattice.hpp"
#include "grpverify/morphism.hpp"

namespace grpverify {

using Point = Permutation::Point;

GroupHandle::GroupHandle(std::string name, std::vector<Permutation> generators, std::size_t degree)
    : name_(std::move(name)),
      gens_(std::move(generators)),
      perm_(std::make_shared<PermGroup>(gens_, degree)),
      cache_(std::make_shared<Cache>()) {}

std::uint64_t GroupHandle::order() const {
  if (perm_->order() > BigInt(UINT64_MAX)) throw CapExceeded("group order does not fit 64 bits");
  return perm_->order().convert_to<std::uint64_t>();
}

const MaterializedGroup& GroupHandle::materialized(std::size_t cap) const {
  std::call_once(cache_->once, [&] {
    cache_->group = std::make_unique<MaterializedGroup>(MaterializedGroup::materialize(*perm_, cap));
  });
  return *cache_->group;
}

ElementSet GroupHandle::generated(const std::vector<Permutation>& perms) const {
  const MaterializedGroup& m = materialized();
  std::vector<Index> idx;
  for (const Permutation& p : perms) {
    const auto i = m.find(p);
    if (!i) throw std::invalid_argument("permutation is not an element of " + name_);
    idx.push_back(*i);
  }
  return closure(m, idx);
}

namespace {

Permutation cycle_perm(std::size_t degree, const std::vector<std::size_t>& pts) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (std::size_t i = 0; i < pts.size(); ++i) im[pts[i]] = static_cast<Point>(pts[(i + 1) % pts.size()]);
  return Permutation(std::move(im));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
  std::vector<Point> im(a.images());
  const std::size_t d = a.degree();
  for (std::size_t i = 0; i < b.degree(); ++i) im.push_back(static_cast<Point>(b(static_cast<Point>(i)) + d));
  return Permutation(std::move(im));
}

GroupHandle make(const std::string& name, std::vector<Permutation> gens, std::size_t degree,
                 const BuildOptions& opts) {
  GroupHandle h(name, std::move(gens), degree);
  if (h.perm_group().order() > opts.max_order) {
    throw CapExceeded(name + " has order " + h.perm_group().order().str() +
                      ", above the cap " + std::to_string(opts.max_order));
  }
  return h;
}

GroupHandle cyclic(long long n, const BuildOptions& opts, const std::string& name) {
  std::vector<std::size_t> pts(static_cast<std::size_t>(n));
  std::iota(pts.begin(), pts.end(), std::size_t{0});
  return make(name, {cycle_perm(static_cast<std::size_t>(n), pts)}, static_cast<std::size_t>(n), opts);
}

GroupHandle dihedral(long long n, const BuildOptions& opts, const std::string& name) {
  if (n == 2) {
    return make(name, {Permutation::from_cycles("(1 2)(3 4)", 4), Permutation::from_cycles("(1 3)(2 4)", 4)},
                4, opts);
  }
  const auto d = static_cast<std::size_t>(n);
  std::vector<std::size_t> pts(d);
  std::iota(pts.begin(), pts.end(), std::size_t{0});
  std::vector<Point> refl(d);
  for (std::size_t i = 0; i < d; ++i) refl[i] = static_cast<Point>((d - i) % d);
  return make(name, {cycle_perm(d, pts), Permutation(refl)}, d, opts);
}

GroupHandle symmetric(long long n, const BuildOptions& opts, const std::string& name) {
  const auto d = static_cast<std::size_t>(n);
  if (d < 2) return make(name, {Permutation::identity(1)}, 1, opts);
  std::vector<std::size_t> pts(d);
  std::iota(pts.begin(), pts.end(), std::size_t{0});
  return make(name, {cycle_perm(d, {0, 1}), cycle_perm(d, pts)}, d, opts);
}

GroupHandle alternating(long long n, const BuildOptions& opts, const std::string& name) {
  const auto d = static_cast<std::size_t>(n);
  if (d < 3) return make(name, {Permutation::identity(std::max<std::size_t>(d, 1))}, std::max<std::size_t>(d, 1), opts);
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < d; ++i) gens.push_back(cycle_perm(d, {0, 1, i}));
  return make(name, gens, d, opts);
}

GroupHandle elementary_abelian(long long p, long long m, const BuildOptions& opts, const std::string& name) {
  const auto d = static_cast<std::size_t>(p * m);
  if (d > 65535) throw std::invalid_argument("EA degree too large");
  std::vector<Permutation> gens;
  for (long long j = 0; j < m; ++j) {
    std::vector<std::size_t> pts;
    for (long long i = 0; i < p; ++i) pts.push_back(static_cast<std::size_t>(j * p + i));
    gens.push_back(cycle_perm(d, pts));
  }
  return make(name, gens, d, opts);
}

// Coordinates of an element of EA(p,m) built as m disjoint p-cycles.
std::vector<int> ea_coords(const Permutation& x, int p, int m) {
  std::vector<int> v(m);
  for (int j = 0; j < m; ++j) v[j] = x(static_cast<Point>(j * p)) - j * p;
  return v;
}

Permutation ea_element(const std::vector<int>& v, int p) {
  const int m = static_cast<int>(v.size());
  std::vector<Point> im(static_cast<std::size_t>(p * m));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < p; ++i) im[j * p + i] = static_cast<Point>(j * p + ((i + v[j]) % p + p) % p);
  return Permutation(std::move(im));
}

GroupHandle heisenberg(const BuildOptions& opts) {
  auto idx = [](int x, int y, int z) { return static_cast<Point>(x + 3 * y + 9 * z); };
  auto left = [&](int a, int b, int c) {
    std::vector<Point> im(27);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z)
          im[idx(x, y, z)] = idx((a + x) % 3, (b + y) % 3, (c + z + a * y) % 3);
    return Permutation(std::move(im));
  };
  return make("H3", {left(1, 0, 0), left(0, 1, 0)}, 27, opts);
}

// Generators of SL(2,q) (and GL(2,q) with `general`) as matrices over F_q.
std::vector<std::array<int, 4>> sl2_generators(const Field& f, bool general) {
  std::vector<std::array<int, 4>> out;
  int z = 1;
  for (int i = 0; i < f.degree(); ++i) {
    out.push_back({1, z, 0, 1});
    out.push_back({1, 0, z, 1});
    z = f.mul(z, f.primitive_element());
  }
  if (general) out.push_back({f.primitive_element(), 0, 0, 1});
  return out;
}

std::uint64_t parse_q(long long q, int& p, int& k) {
  std::uint64_t pp = 0;
  unsigned kk = 0;
  if (!prime_power(static_cast<std::uint64_t>(q), pp, kk)) {
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  }
  p = static_cast<int>(pp);
  k = static_cast<int>(kk);
  return static_cast<std::uint64_t>(q);
}

GroupHandle linear_group(long long q, bool general, const BuildOptions& opts, const std::string& name) {
  int p = 0;
  int k = 0;
  parse_q(q, p, k);
  const Field f(p, k);
  const int qq = f.size();
  const std::size_t d = static_cast<std::size_t>(qq * qq - 1);
  std::vector<Permutation> gens;
  std::vector<Matrix> mats;
  for (const auto& m : sl2_generators(f, general)) {
    std::vector<Point> im(d);
    for (int code = 1; code < qq * qq; ++code) {
      const int x = code % qq;
      const int y = code / qq;
      const int nx = f.add(f.mul(m[0], x), f.mul(m[1], y));
      const int ny = f.add(f.mul(m[2], x), f.mul(m[3], y));
      im[code - 1] = static_cast<Point>(nx + qq * ny - 1);
    }
    gens.emplace_back(std::move(im));
    mats.push_back(Matrix{p, 2, {m[0], m[1], m[2], m[3]}});
  }
  GroupHandle h = make(name, gens, d, opts);
  if (k == 1) h.matrices = mats;
  return h;
}

GroupHandle projective_group(long long q, bool general, const BuildOptions& opts, const std::string& name) {
  int p = 0;
  int k = 0;
  parse_q(q, p, k);
  const Field f(p, k);
  const ProjectiveLine line = projective_line_action(f);
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(f, general)) gens.push_back(line.matrix_to_permutation(m[0], m[1], m[2], m[3]));
  return make(name, gens, static_cast<std::size_t>(f.size() + 1), opts);
}

GroupHandle psl32(const BuildOptions& opts) {
  std::vector<Permutation> gens;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::vector<Point> im(7);
      for (int v = 1; v < 8; ++v) {
        int w = v;
        if ((v >> j) & 1) w ^= 1 << i;  // row i += row j
        im[v - 1] = static_cast<Point>(w - 1);
      }
      gens.emplace_back(std::move(im));
    }
  }
  return make("PSL(3,2)", gens, 7, opts);
}

GroupHandle product(const GroupHandle& a, const GroupHandle& b, const BuildOptions& opts, const std::string& name) {
  const Permutation ia = Permutation::identity(a.degree());
  const Permutation ib = Permutation::identity(b.degree());
  std::vector<Permutation> gens;
  std::vector<Permutation> left;
  std::vector<Permutation> right;
  for (const Permutation& g : a.generators()) left.push_back(direct_sum(g, ib));
  for (const Permutation& g : b.generators()) right.push_back(direct_sum(ia, g));
  gens = left;
  gens.insert(gens.end(), right.begin(), right.end());
  GroupHandle h = make(name, gens, a.degree() + b.degree(), opts);
  h.normal_generators = left;
  h.complement_generators = right;
  return h;
}

GroupHandle swap_square(const GroupHandle& a, const BuildOptions& opts, const std::string& name) {
  const std::size_t d = a.degree();
  const Permutation id = Permutation::identity(d);
  std::vector<Permutation> base;
  for (const Permutation& g : a.generators()) base.push_back(direct_sum(g, id));
  for (const Permutation& g : a.generators()) base.push_back(direct_sum(id, g));
  std::vector<Point> sw(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    sw[i] = static_cast<Point>(i + d);
    sw[i + d] = static_cast<Point>(i);
  }
  std::vector<Permutation> gens = base;
  gens.emplace_back(sw);
  GroupHandle h = make(name, gens, 2 * d, opts);
  h.normal_generators = base;
  h.complement_generators = {Permutation(sw)};
  return h;
}

// H <= S_m acting on {±1..±m}: point 2i is +i, point 2i+1 is -i; N is the
// even-weight sign changes.
GroupHandle even_signed(long long m, const GroupHandle& h, const BuildOptions& opts, const std::string& name) {
  const auto d = static_cast<std::size_t>(2 * m);
  std::vector<Permutation> ngens;
  for (long long i = 0; i + 1 < m; ++i) {
    std::vector<Point> im(d);
    std::iota(im.begin(), im.end(), Point{0});
    for (long long j : {i, m - 1}) {
      im[2 * j] = static_cast<Point>(2 * j + 1);
      im[2 * j + 1] = static_cast<Point>(2 * j);
    }
    ngens.emplace_back(std::move(im));
  }
  std::vector<Permutation> hgens;
  for (const Permutation& g : h.generators()) {
    std::vector<Point> im(d);
    for (long long i = 0; i < m; ++i) {
      const auto t = g(static_cast<Point>(i));
      im[2 * i] = static_cast<Point>(2 * t);
      im[2 * i + 1] = static_cast<Point>(2 * t + 1);
    }
    hgens.emplace_back(std::move(im));
  }
  std::vector<Permutation> gens = ngens;
  gens.insert(gens.end(), hgens.begin(), hgens.end());
  GroupHandle out = make(name, gens, d, opts);
  out.normal_generators = ngens;
  out.complement_generators = hgens;
  return out;
}

// Automorphism of N = EA(p,m) induced by a coordinate map.
template <typename F>
std::vector<Index> ea_automorphism(const MaterializedGroup& nm, int p, int m, F&& f) {
  std::vector<Index> a(nm.order());
  for (Index x = 0; x < nm.order(); ++x) {
    const std::vector<int> w = f(ea_coords(nm.element(x), p, m));
    const auto y = nm.find(ea_element(w, p));
    if (!y) throw std::invalid_argument("coordinate map leaves the group");
    a[x] = *y;
  }
  return a;
}

std::vector<int> apply_matrix(const std::vector<long long>& mat, const std::vector<int>& v, int p) {
  const std::size_t m = v.size();
  std::vector<int> w(m, 0);
  for (std::size_t r = 0; r < m; ++r) {
    long long s = 0;
    for (std::size_t c = 0; c < m; ++c) s += mat[r * m + c] * v[c];
    w[r] = static_cast<int>(((s % p) + p) % p);
  }
  return w;
}

GroupHandle semidirect(const GroupExpr& e, const BuildOptions& opts) {
  const std::string name = to_string(e);
  const GroupExpr& ne = e.children[0];
  const GroupExpr& he = e.children[1];
  const ActionKind kind = e.action.kind;

  if (kind == ActionKind::Swap) {
    if (ne.kind != ExprKind::Product || !(ne.children[0] == ne.children[1])) {
      throw std::invalid_argument("swap action needs N = prod(G,G)");
    }
    const GroupHandle h = build(he, opts);
    if (h.order() != 2) throw std::invalid_argument("swap action needs H of order 2");
    return swap_square(build(ne.children[0], opts), opts, name);
  }

  const GroupHandle h = build(he, opts);
  if (kind == ActionKind::EvenPerm) {
    const long long m = static_cast<long long>(h.degree());
    if (ne.kind != ExprKind::ElemAbelian || ne.params[0] != 2 || ne.params[1] != m - 1) {
      throw std::invalid_argument("evenperm needs N = EA(2,m-1) with H of degree m");
    }
    return even_signed(m, h, opts, name);
  }

  const GroupHandle n = build(ne, opts);
  const MaterializedGroup& nm = n.materialized(opts.max_order);
  std::vector<std::vector<Index>> autos;

  auto need_ea = [&](long long rank) {
    if (ne.kind != ExprKind::ElemAbelian || (rank >= 0 && ne.params[1] != rank)) {
      throw std::invalid_argument(to_string(e.action) + " action needs N = EA(p," +
                                  (rank >= 0 ? std::to_string(rank) : std::string("m")) + ")");
    }
  };

  switch (kind) {
    case ActionKind::NatPerm:
    case ActionKind::QuotPerm:
    case ActionKind::SumZero: {
      const int m = static_cast<int>(h.degree());
      need_ea(kind == ActionKind::NatPerm ? m : m - 1);
      const int p = static_cast<int>(ne.params[0]);
      for (const Permutation& g : h.generators()) {
        autos.push_back(ea_automorphism(nm, p, static_cast<int>(ne.params[1]), [&](const std::vector<int>& v) {
          std::vector<int> full(v);
          if (kind == ActionKind::QuotPerm) full.push_back(0);
          if (kind == ActionKind::SumZero) {
            int s = 0;
            for (int c : v) s += c;
            full.push_back(((-s) % p + p) % p);
          }
          std::vector<int> moved(full.size());
          for (std::size_t i = 0; i < full.size(); ++i) moved[g(static_cast<Point>(i))] = full[i];
          if (kind == ActionKind::QuotPerm) {
            const int last = moved.back();
            for (int& c : moved) c = ((c - last) % p + p) % p;
          }
          if (kind != ActionKind::NatPerm) moved.pop_back();
          return moved;
        }));
      }
      break;
    }
    case ActionKind::Linear: {
      need_ea(-1);
      const int p = static_cast<int>(ne.params[0]);
      const int m = static_cast<int>(ne.params[1]);
      if (!h.matrices || h.matrices->empty() || h.matrices->front().p != p ||
          static_cast<int>(h.matrices->front().dim) != m) {
        throw std::invalid_argument("linear action needs H given by " + std::to_string(m) + "x" +
                                    std::to_string(m) + " matrices over F_" + std::to_string(p));
      }
      for (const Matrix& mat : *h.matrices) {
        const std::vector<long long> entries(mat.entries.begin(), mat.entries.end());
        autos.push_back(ea_automorphism(nm, p, m, [&](const std::vector<int>& v) { return apply_matrix(entries, v, p); }));
      }
      break;
    }
    case ActionKind::Inv: {
      if (!is_abelian(nm)) throw std::invalid_argument("inv action needs abelian N");
      for (std::size_t i = 0; i < h.generators().size(); ++i) {
        std::vector<Index> a(nm.order());
        for (Index x = 0; x < nm.order(); ++x) a[x] = nm.inv(x);
        autos.push_back(std::move(a));
      }
      break;
    }
    case ActionKind::Explicit: {
      if (e.action.images.size() != h.generators().size()) {
        throw std::invalid_argument("explicit action needs one image per generator of H (" +
                                    std::to_string(h.generators().size()) + ")");
      }
      if (ne.kind == ExprKind::Cyclic) {
        const long long nn = ne.params[0];
        for (const auto& img : e.action.images) {
          if (img.size() != 1) throw std::invalid_argument("explicit action on C(n) takes one multiplier per generator");
          const long long a = ((img[0] % nn) + nn) % nn;
          const Index g = nm.generators().empty() ? 0 : nm.generators()[0];
          std::vector<Index> aut(nm.order());
          for (Index x = 0; x < nm.order(); ++x) {
            const long long s = nm.element(x)(0);
            aut[x] = nm.pow(g, (s * a) % nn);
          }
          autos.push_back(std::move(aut));
        }
      } else if (ne.kind == ExprKind::ElemAbelian) {
        const int p = static_cast<int>(ne.params[0]);
        const int m = static_cast<int>(ne.params[1]);
        for (const auto& img : e.action.images) {
          if (img.size() != static_cast<std::size_t>(m * m)) {
            throw std::invalid_argument("explicit action on EA(p,m) takes m*m entries per generator");
          }
          autos.push_back(ea_automorphism(nm, p, m, [&](const std::vector<int>& v) { return apply_matrix(img, v, p); }));
        }
      } else {
        throw std::invalid_argument("explicit action needs N = C(n) or EA(p,m)");
      }
      break;
    }
    default:
      throw std::logic_error("unhandled action");
  }
  return semidirect_by_automorphisms(name, n, h, autos, opts);
}

}  // namespace

GroupHandle semidirect_by_automorphisms(const std::string& name, const GroupHandle& n,
                                        const GroupHandle& h,
                                        const std::vector<std::vector<Index>>& autos,
                                        const BuildOptions& opts) {
  const MaterializedGroup& nm = n.materialized(opts.max_order);
  const std::size_t size = nm.order();
  if (autos.size() != h.generators().size()) throw std::invalid_argument("one automorphism per generator of H required");
  for (const auto& a : autos) {
    if (!is_bijective_map(a, size) || a[0] != 0) throw std::invalid_argument("action image is not a bijection of N");
    for (Index x = 0; x < size; ++x)
      for (Index g : nm.generators())
        if (a[nm.mul(x, g)] != nm.mul(a[x], a[g])) throw std::invalid_argument("action image is not an automorphism of N");
  }
  const std::uint64_t n_order = size;
  const std::uint64_t h_order = h.order();
  if (n_order * h_order > opts.max_order) {
    throw CapExceeded(name + " has order " + std::to_string(n_order * h_order) + ", above the cap " +
                      std::to_string(opts.max_order));
  }

  std::vector<Permutation> auto_perms;
  for (const auto& a : autos) auto_perms.emplace_back(std::vector<Point>(a.begin(), a.end()));
  const MaterializedGroup image(auto_perms, size, opts.max_order);
  const MaterializedGroup& hm = h.materialized(opts.max_order);
  std::vector<Index> seq;
  std::vector<Index> img;
  for (std::size_t i = 0; i < h.generators().size(); ++i) {
    seq.push_back(*hm.find(h.generators()[i]));
    img.push_back(*image.find(auto_perms[i]));
  }
  const GeneratorTree tree = generator_tree(hm, seq);
  if (!extend_homomorphism(hm, tree, image, img)) {
    throw std::invalid_argument("action of H on N is not a homomorphism");
  }
  const bool faithful = image.order() == hm.order();

  std::vector<Permutation> ngens;
  for (Index g : nm.generators()) {
    std::vector<Point> im(size);
    for (Index x = 0; x < size; ++x) im[x] = static_cast<Point>(nm.mul(g, x));
    ngens.emplace_back(std::move(im));
  }
  std::vector<Permutation> hgens = auto_perms;
  std::size_t degree = size;
  if (!faithful) {
    const Permutation idh = Permutation::identity(h.degree());
    for (Permutation& g : ngens) g = direct_sum(g, idh);
    for (std::size_t i = 0; i < hgens.size(); ++i) hgens[i] = direct_sum(hgens[i], h.generators()[i]);
    degree += h.degree();
  }
  std::vector<Permutation> gens = ngens;
  gens.insert(gens.end(), hgens.begin(), hgens.end());
  GroupHandle out = make(name, gens, degree, opts);
  if (out.order() != n_order * h_order) throw std::logic_error("semidirect product has the wrong order");
  out.normal_generators = ngens;
  out.complement_generators = hgens;
  return out;
}

ProjectiveLine projective_line_action(const Field& f) {
  ProjectiveLine line;
  line.field = &f;
  for (int x = 0; x < f.size(); ++x) line.points.emplace_back(x, 1);
  line.points.emplace_back(1, 0);
  return line;
}

std::size_t ProjectiveLine::point_index(int x, int y) const {
  if (y == 0) {
    if (x == 0) throw std::invalid_argument("zero vector is not a point");
    return static_cast<std::size_t>(field->size());
  }
  return static_cast<std::size_t>(field->mul(x, field->inv(y)));
}

Permutation ProjectiveLine::matrix_to_permutation(int a, int b, int c, int d) const {
  const Field& f = *field;
  if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) throw std::invalid_argument("singular matrix");
  std::vector<Point> im(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [x, y] = points[i];
    im[i] = static_cast<Point>(point_index(f.add(f.mul(a, x), f.mul(b, y)), f.add(f.mul(c, x), f.mul(d, y))));
  }
  return Permutation(std::move(im));
}

Permutation frobenius_on_line(const ProjectiveLine& line) {
  std::vector<Point> im(line.points.size());
  for (std::size_t i = 0; i < line.points.size(); ++i) {
    const auto [x, y] = line.points[i];
    im[i] = static_cast<Point>(line.point_index(line.field->frobenius(x), line.field->frobenius(y)));
  }
  return Permutation(std::move(im));
}

GroupHandle heisenberg_sl23(const BuildOptions& opts) {
  const GroupHandle h3 = heisenberg(opts);
  const MaterializedGroup& hm = h3.materialized();
  const AutGroup aut = automorphism_group(hm, 1000);
  const MaterializedGroup ag = aut.as_group();
  const GroupHandle sl_handle = linear_group(3, false, opts, "SL(2,3)");
  const MaterializedGroup& sl = sl_handle.materialized();
  for (const SubgroupClass& c : subgroups_up_to_conjugacy(ag, ag.order())) {
    if (c.order != 24) continue;
    if (!is_isomorphic(ag.subgroup(c.representative), sl)) continue;
    std::vector<Permutation> kgens;
    std::vector<std::vector<Index>> autos;
    for (Index g : subgroup_generators(ag, c.representative)) {
      const Permutation p = ag.element(g);
      kgens.push_back(p);
      autos.emplace_back(p.images().begin(), p.images().end());
    }
    const GroupHandle k("Aut(H3)>SL(2,3)", kgens, 27);
    return semidirect_by_automorphisms("HSL23", h3, k, autos, opts);
  }
  throw std::logic_error("no SL(2,3) subgroup found in Aut(H3)");
}

GroupHandle build(const GroupExpr& e, const BuildOptions& opts) {
  const std::string name = to_string(e);
  switch (e.kind) {
    case ExprKind::Cyclic: return cyclic(e.params[0], opts, name);
    case ExprKind::Dihedral: return dihedral(e.params[0], opts, name);
    case ExprKind::Symmetric: return symmetric(e.params[0], opts, name);
    case ExprKind::Alternating: return alternating(e.params[0], opts, name);
    case ExprKind::ElemAbelian: return elementary_abelian(e.params[0], e.params[1], opts, name);
    case ExprKind::Heisenberg: return heisenberg(opts);
    case ExprKind::Hessian: {
      GroupHandle h = build(parse_expr("semi(EA(3,2),SL(2,3),linear)"), opts);
      GroupHandle out("HESS", h.generators(), h.degree());
      out.normal_generators = h.normal_generators;
      out.complement_generators = h.complement_generators;
      return out;
    }
    case ExprKind::HeisenbergSL: return heisenberg_sl23(opts);
    case ExprKind::GL2: return linear_group(e.params[0], true, opts, name);
    case ExprKind::SL2: return linear_group(e.params[0], false, opts, name);
    case ExprKind::PGL2: return projective_group(e.params[0], true, opts, name);
    case ExprKind::PSL2: return projective_group(e.params[0], false, opts, name);
    case ExprKind::PSL32: return psl32(opts);
    case ExprKind::WeylD: {
      const GroupHandle s = symmetric(e.params[0], opts, "S(" + std::to_string(e.params[0]) + ")");
      return even_signed(e.params[0], s, opts, name);
    }
    case ExprKind::Product:
      return product(build(e.children[0], opts), build(e.children[1], opts), opts, name);
    case ExprKind::SwapSquare: return swap_square(build(e.children[0], opts), opts, name);
    case ExprKind::Semidirect: return semidirect(e, opts);
    case ExprKind::PermGroup: {
      const auto d = static_cast<std::size_t>(e.params[0]);
      std::vector<Permutation> gens;
      for (const std::string& c : e.cycles) gens.push_back(Permutation::from_cycles(c, d));
      if (gens.empty()) gens.push_back(Permutation::identity(d));
      return make(name, gens, d, opts);
    }
  }
  throw std::logic_error("unhandled expression kind");
}

GroupHandle build(const std::string& src, const BuildOptions& opts) { return build(parse_expr(src), opts); }

std::optional<std::uint64_t> catalog_order(const GroupExpr& e) {
  auto fact = [](long long n) {
    std::uint64_t r = 1;
    for (long long i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
  };
  auto upow = [](std::uint64_t b, long long k) {
    std::uint64_t r = 1;
    for (long long i = 0; i < k; ++i) r *= b;
    return r;
  };
  switch (e.kind) {
    case ExprKind::Cyclic: return static_cast<std::uint64_t>(e.params[0]);
    case ExprKind::Dihedral: return static_cast<std::uint64_t>(2 * e.params[0]);
    case ExprKind::Symmetric: return fact(e.params[0]);
    case ExprKind::Alternating: return e.params[0] < 2 ? 1 : fact(e.params[0]) / 2;
    case ExprKind::ElemAbelian: return upow(static_cast<std::uint64_t>(e.params[0]), e.params[1]);
    case ExprKind::Heisenberg: return 27;
    case ExprKind::Hessian: return 216;
    case ExprKind::HeisenbergSL: return 648;
    case ExprKind::GL2: {
      const auto q = static_cast<std::uint64_t>(e.params[0]);
      return (q * q - 1) * (q * q - q);
    }
    case ExprKind::SL2:
    case ExprKind::PGL2: {
      const auto q = static_cast<std::uint64_t>(e.params[0]);
      return q * (q * q - 1);
    }
    case ExprKind::PSL2: {
      const auto q = static_cast<std::uint64_t>(e.params[0]);
      return q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
    }
    case ExprKind::PSL32: return 168;
    case ExprKind::WeylD: return upow(2, e.params[0] - 1) * fact(e.params[0]);
    case ExprKind::Product: {
      const auto a = catalog_order(e.children[0]);
      const auto b = catalog_order(e.children[1]);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case ExprKind::SwapSquare: {
      const auto a = catalog_order(e.children[0]);
      if (!a) return std::nullopt;
      return 2 * *a * *a;
    }
    case ExprKind::Semidirect: {
      const auto a = catalog_order(e.children[0]);
      const auto b = catalog_order(e.children[1]);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    case ExprKind::PermGroup: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace grpverify
