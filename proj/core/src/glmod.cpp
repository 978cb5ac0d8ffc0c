#include "twoadic/glmod.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "twoadic/errors.hpp"

namespace twoadic::glmod {

namespace {

constexpr std::int32_t kAbsent = -1;

unsigned mask_for(unsigned exponent) { return (1u << exponent) - 1u; }

// Visited-marks reused across closures on one table; an epoch counter
// avoids clearing between runs.
class ClosureWorkspace {
 public:
  explicit ClosureWorkspace(const GroupTable& g) : g_(g), stamp_(g.order(), 0) {}

  // Closes `gens` and leaves the members marked until the next run.
  const std::vector<Index>& run(std::span<const Index> gens) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    members_.clear();
    mark(g_.identity());
    for (std::size_t i = 0; i < members_.size(); ++i) {
      const Index x = members_[i];
      for (Index s : gens) mark(g_.multiply(x, s));
    }
    return members_;
  }

  [[nodiscard]] bool marked(Index x) const { return stamp_[x] == epoch_; }

  SubgroupSet result() const {
    std::vector<Index> sorted(members_);
    std::sort(sorted.begin(), sorted.end());
    return SubgroupSet(g_, std::move(sorted));
  }

 private:
  void mark(Index x) {
    if (stamp_[x] != epoch_) {
      stamp_[x] = epoch_;
      members_.push_back(x);
    }
  }

  const GroupTable& g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Index> members_;
};

std::vector<Index> lifts_of(const GroupTable& g, const GroupTable& below, std::span<const Index> gens_below) {
  std::vector<Index> out;
  out.reserve(gens_below.size());
  for (Index x : gens_below) out.push_back(g.index_of(lift(below.element(x), g.exponent())));
  return out;
}

// F_2-subspaces of F_2^4, each as a 16-bit membership mask over vectors.
std::vector<std::uint32_t> subspaces_of_f2_4() {
  std::vector<std::uint32_t> out;
  for (std::uint32_t set = 1; set < (1u << 16); set += 2) {  // contains 0
    bool closed = true;
    for (unsigned u = 0; u < 16 && closed; ++u) {
      if (!(set >> u & 1u)) continue;
      for (unsigned v = u + 1; v < 16; ++v) {
        if ((set >> v & 1u) && !(set >> (u ^ v) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) out.push_back(set);
  }
  return out;
}

}  // namespace

unsigned Mat2::det() const {
  const unsigned m = mask_for(exponent);
  return (e11 * e22 + (modulus() - (e12 * e21 & m))) & m;
}

Mat2 make_mat(unsigned exponent, int e11, int e12, int e21, int e22) {
  const int mod = 1 << exponent;
  auto r = [mod](int v) { return static_cast<unsigned>(((v % mod) + mod) % mod); };
  return Mat2{exponent, r(e11), r(e12), r(e21), r(e22)};
}

Mat2 multiply(const Mat2& x, const Mat2& y) {
  const unsigned m = mask_for(x.exponent);
  return Mat2{x.exponent, (x.e11 * y.e11 + x.e12 * y.e21) & m, (x.e11 * y.e12 + x.e12 * y.e22) & m,
              (x.e21 * y.e11 + x.e22 * y.e21) & m, (x.e21 * y.e12 + x.e22 * y.e22) & m};
}

Mat2 reduce(const Mat2& m) {
  if (m.exponent < 2) throw std::invalid_argument("cannot reduce below level 2");
  const unsigned k = mask_for(m.exponent - 1);
  return Mat2{m.exponent - 1, m.e11 & k, m.e12 & k, m.e21 & k, m.e22 & k};
}

Mat2 lift(const Mat2& m, unsigned exponent) {
  if (exponent < m.exponent) throw std::invalid_argument("lift to a lower level");
  return Mat2{exponent, m.e11, m.e12, m.e21, m.e22};
}

std::string to_string(const Mat2& m) {
  std::ostringstream os;
  os << "(" << m.e11 << " " << m.e12 << "; " << m.e21 << " " << m.e22 << ")";
  return os.str();
}

GroupTable::GroupTable(unsigned exponent) : exponent_(exponent), index_of_code_(1u << 16, kAbsent) {
  if (exponent < 1 || exponent > 4) throw std::invalid_argument("GL_2(Z/2^n) supported for n = 1..4");
  const unsigned mod = 1u << exponent;
  for (unsigned a = 0; a < mod; ++a)
    for (unsigned b = 0; b < mod; ++b)
      for (unsigned c = 0; c < mod; ++c)
        for (unsigned d = 0; d < mod; ++d) {
          const Mat2 m{exponent, a, b, c, d};
          if (!m.invertible()) continue;
          index_of_code_[m.code()] = static_cast<std::int32_t>(elements_.size());
          elements_.push_back(m);
        }
  identity_ = index_of(Mat2{exponent, 1, 0, 0, 1});
  det_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) det_[i] = elements_[i].det();

  if (exponent <= 3) {
    const std::size_t n = elements_.size();
    table_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table_[i * n + j] = multiply_direct(static_cast<Index>(i), static_cast<Index>(j));
  }

  // Adjugate over an odd determinant: inverse = det^-1 (e22 -e12; -e21 e11).
  inverse_.resize(elements_.size());
  const unsigned m = mask_for(exponent);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Mat2& x = elements_[i];
    unsigned dinv = 1;
    while ((dinv * det_[i] & m) != 1) dinv += 2;
    const Mat2 inv{exponent, dinv * x.e22 & m, dinv * (mod - x.e12) & m, dinv * (mod - x.e21) & m, dinv * x.e11 & m};
    inverse_[i] = index_of(inv);
  }
}

Index GroupTable::index_of(const Mat2& m) const {
  if (m.exponent != exponent_) throw std::invalid_argument("matrix level mismatch");
  const std::int32_t i = index_of_code_[m.code()];
  if (i == kAbsent) throw std::invalid_argument("matrix not invertible: " + to_string(m));
  return static_cast<Index>(i);
}

Index GroupTable::multiply_direct(Index x, Index y) const {
  return static_cast<Index>(index_of_code_[glmod::multiply(elements_[x], elements_[y]).code()]);
}

unsigned GroupTable::element_order(Index x) const {
  unsigned k = 1;
  for (Index p = x; p != identity_; p = multiply(p, x)) ++k;
  return k;
}

std::vector<Index> reduction_map(const GroupTable& upper, const GroupTable& lower) {
  if (upper.exponent() != lower.exponent() + 1) throw std::invalid_argument("reduction map needs adjacent levels");
  std::vector<Index> out(upper.order());
  for (std::size_t i = 0; i < upper.order(); ++i) out[i] = lower.index_of(reduce(upper.element(static_cast<Index>(i))));
  return out;
}

SubgroupSet::SubgroupSet(const GroupTable& parent, std::vector<Index> sorted_elements)
    : parent_(&parent), elements_(std::move(sorted_elements)) {}

bool SubgroupSet::contains(Index x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

bool SubgroupSet::verify_closed() const {
  if (!contains(parent_->identity())) return false;
  for (Index x : elements_) {
    if (!contains(parent_->inverse(x))) return false;
    for (Index y : elements_)
      if (!contains(parent_->multiply(x, y))) return false;
  }
  return true;
}

std::vector<Index> SubgroupSet::generators() const {
  ClosureWorkspace ws(*parent_);
  std::vector<Index> gens;
  ws.run(gens);
  for (Index x : elements_) {
    if (ws.marked(x)) continue;
    gens.push_back(x);
    if (ws.run(gens).size() == elements_.size()) break;
  }
  return gens;
}

std::size_t SubgroupHash::operator()(const SubgroupSet& s) const {
  std::size_t h = s.order();
  for (Index x : s.elements()) h = h * 1'000'003u ^ x;
  return h;
}

SubgroupSet closure(const GroupTable& g, std::span<const Index> gens) {
  ClosureWorkspace ws(g);
  ws.run(gens);
  return ws.result();
}

SubgroupSet whole_group(const GroupTable& g) {
  std::vector<Index> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Index>(i);
  return SubgroupSet(g, std::move(all));
}

Index kernel_element(const GroupTable& g, unsigned bits) {
  if (g.exponent() < 2) throw std::invalid_argument("reduction kernel needs n >= 2");
  const unsigned h = 1u << (g.exponent() - 1);
  const Mat2 m{g.exponent(), 1 + h * (bits & 1u), h * (bits >> 1 & 1u), h * (bits >> 2 & 1u), 1 + h * (bits >> 3 & 1u)};
  return g.index_of(m);
}

SubgroupSet reduction_kernel(const GroupTable& g) {
  std::vector<Index> k;
  for (unsigned bits = 0; bits < 16; ++bits) k.push_back(kernel_element(g, bits));
  std::sort(k.begin(), k.end());
  return SubgroupSet(g, std::move(k));
}

std::vector<SubgroupSet> stable_kernel_subgroups(const GroupTable& g, std::span<const Index> conjugators) {
  std::vector<Index> element(16);
  for (unsigned bits = 0; bits < 16; ++bits) element[bits] = kernel_element(g, bits);
  auto bits_of = [&](Index x) -> int {
    for (unsigned b = 0; b < 16; ++b)
      if (element[b] == x) return static_cast<int>(b);
    return -1;
  };

  std::vector<SubgroupSet> out;
  for (std::uint32_t set : subspaces_of_f2_4()) {
    bool stable = true;
    for (Index c : conjugators) {
      for (unsigned v = 0; v < 16 && stable; ++v) {
        if (!(set >> v & 1u)) continue;
        const int w = bits_of(g.conjugate(c, element[v]));
        stable = w >= 0 && (set >> w & 1u);
      }
      if (!stable) break;
    }
    if (!stable) continue;
    std::vector<Index> members;
    for (unsigned v = 0; v < 16; ++v)
      if (set >> v & 1u) members.push_back(element[v]);
    std::sort(members.begin(), members.end());
    out.emplace_back(g, std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> find_generating_set(const GroupTable& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(g.order() - 1));
  ClosureWorkspace ws(g);
  for (std::size_t m = 1; m <= 8; ++m) {
    for (int attempt = 0; attempt < 256; ++attempt) {
      std::vector<Index> gens(m);
      for (auto& x : gens) x = pick(rng);
      if (ws.run(gens).size() == g.order()) return gens;
    }
  }
  throw GeneratorSetInvalid("no generating set found for GL_2(Z/" + std::to_string(g.modulus()) + ")");
}

std::vector<SubgroupSet> supplements(const GroupTable& g, const GroupTable& below, std::span<const Index> gens_below,
                                     unsigned workers) {
  if (g.exponent() != below.exponent() + 1) throw std::invalid_argument("supplements need adjacent levels");
  if (gens_below.empty() || closure(below, gens_below).order() != below.order())
    throw GeneratorSetInvalid("generators do not generate GL_2(Z/" + std::to_string(below.modulus()) + ")");

  const std::vector<Index> lifts = lifts_of(g, below, gens_below);
  const std::vector<SubgroupSet> stable = stable_kernel_subgroups(g, lifts);
  std::vector<Index> kernel(16);
  for (unsigned bits = 0; bits < 16; ++bits) kernel[bits] = kernel_element(g, bits);

  // One task per (U, tuple of corrections mod U). Corrections only matter
  // modulo U because U is contained in every candidate.
  struct Family {
    const SubgroupSet* u;
    std::vector<Index> u_basis;
    std::vector<Index> reps;  // coset representatives of K/U
    std::size_t tuples;
  };
  std::vector<Family> families;
  for (const auto& u : stable) {
    std::uint32_t set = 0;
    for (unsigned bits = 0; bits < 16; ++bits)
      if (u.contains(kernel[bits])) set |= 1u << bits;
    Family f{&u, {}, {}, 1};
    std::uint32_t spanned = 1;
    for (unsigned bits = 1; bits < 16; ++bits) {
      if ((set >> bits & 1u) && !(spanned >> bits & 1u)) {
        f.u_basis.push_back(kernel[bits]);
        std::uint32_t grown = spanned;
        for (unsigned v = 0; v < 16; ++v)
          if (spanned >> v & 1u) grown |= 1u << (v ^ bits);
        spanned = grown;
      }
    }
    std::vector<bool> seen(16, false);
    for (unsigned bits = 0; bits < 16; ++bits) {
      if (seen[bits]) continue;
      f.reps.push_back(kernel[bits]);
      for (unsigned v = 0; v < 16; ++v)
        if (set >> v & 1u) seen[bits ^ v] = true;
    }
    for (std::size_t i = 0; i < lifts.size(); ++i) f.tuples *= f.reps.size();
    families.push_back(std::move(f));
  }

  workers = std::max(1u, workers);
  std::vector<std::vector<SubgroupSet>> found(workers);
  auto work = [&](unsigned id) {
    ClosureWorkspace ws(g);
    std::unordered_set<SubgroupSet, SubgroupHash> local;
    std::size_t task = 0;
    std::vector<Index> gens;
    for (const auto& f : families) {
      for (std::size_t t = 0; t < f.tuples; ++t, ++task) {
        if (task % workers != id) continue;
        gens = f.u_basis;
        std::size_t code = t;
        for (Index l : lifts) {
          gens.push_back(g.multiply(l, f.reps[code % f.reps.size()]));
          code /= f.reps.size();
        }
        ws.run(gens);
        std::size_t in_kernel = 0;
        for (Index k : kernel) in_kernel += ws.marked(k) ? 1 : 0;
        // Otherwise H meets K in a larger stable subgroup and is produced there.
        if (in_kernel != f.u->order()) continue;
        local.insert(ws.result());
      }
    }
    found[id].assign(local.begin(), local.end());
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }

  std::vector<SubgroupSet> out;
  for (auto& part : found)
    for (auto& s : part) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SubgroupSet derived_subgroup(const SubgroupSet& h) {
  const GroupTable& g = h.parent();
  const std::vector<Index> gens = h.generators();
  std::vector<Index> normal_gens;
  for (Index x : gens)
    for (Index y : gens) {
      const Index c = g.multiply(g.multiply(x, y), g.multiply(g.inverse(x), g.inverse(y)));
      if (c != g.identity()) normal_gens.push_back(c);
    }
  ClosureWorkspace ws(g);
  ws.run(normal_gens);
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Index> current = normal_gens;
    for (Index x : gens)
      for (Index n : current) {
        const Index c = g.conjugate(x, n);
        if (!ws.marked(c)) {
          normal_gens.push_back(c);
          ws.run(normal_gens);
          changed = true;
        }
      }
  }
  return ws.result();
}

unsigned abelian_two_rank(const SubgroupSet& h) {
  const GroupTable& g = h.parent();
  const SubgroupSet d = derived_subgroup(h);
  std::vector<Index> gens = d.generators();
  for (Index x : h.generators()) gens.push_back(g.multiply(x, x));
  const std::size_t frattini = closure(g, gens).order();  // [H,H] H^2
  const std::size_t quotient = h.order() / frattini;
  return static_cast<unsigned>(std::countr_zero(quotient));
}

std::vector<unsigned> det_image(const SubgroupSet& h) {
  std::vector<unsigned> dets;
  for (Index x : h.elements()) dets.push_back(h.parent().det(x));
  std::sort(dets.begin(), dets.end());
  dets.erase(std::unique(dets.begin(), dets.end()), dets.end());
  return dets;
}

int mod2_sign(const GroupTable& g, Index x) {
  const Mat2& m = g.element(x);
  const Mat2 r{1, m.e11 & 1u, m.e12 & 1u, m.e21 & 1u, m.e22 & 1u};
  const Mat2 id{1, 1, 0, 0, 1};
  // Involutions of GL_2(F_2) are the transpositions of S_3.
  return r != id && multiply(r, r) == id ? -1 : 1;
}

std::vector<std::pair<int, unsigned>> sign_det_image(const SubgroupSet& h) {
  std::vector<std::pair<int, unsigned>> out;
  for (Index x : h.elements()) out.emplace_back(mod2_sign(h.parent(), x), h.parent().det(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Index>> coset_partition(const SubgroupSet& h) {
  const GroupTable& g = h.parent();
  std::vector<bool> assigned(g.order(), false);
  std::vector<std::vector<Index>> cosets;
  for (Index x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    std::vector<Index> c;
    c.reserve(h.order());
    for (Index y : h.elements()) {
      const Index p = g.multiply(x, y);
      assigned[p] = true;
      c.push_back(p);
    }
    std::sort(c.begin(), c.end());
    cosets.push_back(std::move(c));
  }
  return cosets;
}

bool subgroups_conjugate(const SubgroupSet& h1, const SubgroupSet& h2) {
  if (&h1.parent() != &h2.parent()) throw std::invalid_argument("subgroups of different tables");
  if (h1.order() != h2.order()) return false;
  if (h1 == h2) return true;
  const GroupTable& g = h1.parent();
  const std::vector<Index> gens = h1.generators();
  for (Index x = 0; x < g.order(); ++x) {
    if (std::all_of(gens.begin(), gens.end(), [&](Index s) { return h2.contains(g.conjugate(x, s)); })) return true;
  }
  return false;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(std::span<const SubgroupSet> subgroups) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (subgroups_conjugate(subgroups[cls.front()], subgroups[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

SubgroupSet exceptional_subgroup(const GroupTable& gl2_mod4) {
  if (gl2_mod4.exponent() != 2) throw std::invalid_argument("the exceptional subgroup lives in GL_2(Z/4)");
  const std::vector<Index> gens{gl2_mod4.index_of(make_mat(2, 0, 1, 3, 0)), gl2_mod4.index_of(make_mat(2, 0, 1, 1, 1))};
  return closure(gl2_mod4, gens);
}

bool is_c3_semidirect_d8(const SubgroupSet& h) {
  if (h.order() != 24) return false;
  const GroupTable& g = h.parent();

  std::vector<Index> order3;
  for (Index x : h.elements())
    if (g.element_order(x) == 3) order3.push_back(x);
  if (order3.size() != 2) return false;  // unique, hence normal, Sylow 3-subgroup
  const Index c = order3.front();

  // Grow a 2-subgroup one element at a time until it reaches order 8.
  std::vector<Index> p_gens;
  std::size_t p_order = 1;
  while (p_order < 8) {
    bool grew = false;
    for (Index x : h.elements()) {
      if (std::popcount(g.element_order(x)) != 1 || g.element_order(x) == 1) continue;
      std::vector<Index> trial = p_gens;
      trial.push_back(x);
      const std::size_t ord = closure(g, trial).order();
      if (ord > p_order && std::popcount(ord) == 1) {
        p_gens = std::move(trial);
        p_order = ord;
        grew = true;
        break;
      }
    }
    if (!grew) return false;
  }
  if (p_order != 8) return false;
  const SubgroupSet p = closure(g, p_gens);

  bool abelian = true;
  for (Index x : p.elements())
    for (Index y : p.elements())
      if (g.multiply(x, y) != g.multiply(y, x)) abelian = false;
  if (abelian) return false;

  std::size_t order4 = 0;
  for (Index x : p.elements())
    if (g.element_order(x) == 4) ++order4;
  if (order4 != 2) return false;

  return std::any_of(p.elements().begin(), p.elements().end(), [&](Index s) { return g.conjugate(s, c) != c; });
}

}  // namespace twoadic::glmod
