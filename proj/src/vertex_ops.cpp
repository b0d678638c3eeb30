#include "qcva/vertex_ops.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace qcva {

namespace {

struct Term {
  Monomial mono;
  std::size_t top;
  Rational coeff;
};

// Modes assigned to the slots of one monomial of v, applied to one basis term.
class VertexModeExpander {
 public:
  VertexModeExpander(const Monomial& v, long k, const ModuleSpec& spec, ModuleState& out)
      : slots_(v.factors()), total_(k + 1 - v.weight()), spec_(spec), out_(out) {}

  void run(const ModuleKey& key, const Rational& coeff) {
    available_.clear();
    for (const auto& f : key.mono.factors()) available_[f.gen()].insert(f.mode);
    zero_slots_.clear();
    ann_.clear();
    creation_slots_.clear();
    key_ = &key;
    coeff_ = coeff;
    assign(0, 0, Rational(1));
  }

 private:
  void assign(std::size_t slot, long ann_sum, const Rational& weight) {
    if (slot == slots_.size()) {
      finish(ann_sum, weight);
      return;
    }
    const Factor& f = slots_[slot];
    const long order = f.mode - 1;
    // annihilation modes must hit a variable already present
    if (auto it = available_.find(f.gen()); it != available_.end()) {
      for (int m : it->second) {
        ann_.push_back({f.gen(), m});
        assign(slot + 1, ann_sum + m, weight * binomial(-m - 1, order));
        ann_.pop_back();
      }
    }
    if (spec_.has_zero_modes()) {
      zero_slots_.push_back(slot);
      assign(slot + 1, ann_sum, weight * binomial(-1, order));
      zero_slots_.pop_back();
    }
    creation_slots_.push_back(slot);
    assign(slot + 1, ann_sum, weight);
    creation_slots_.pop_back();
  }

  void finish(long ann_sum, const Rational& weight) {
    const long creation_total = ann_sum - total_;  // sum of |m| over creation slots
    long min_total = 0;
    for (auto s : creation_slots_) min_total += slots_[s].mode;  // C(q-1, n-1) = 0 for q < n
    if (creation_total < min_total) return;
    if (creation_slots_.empty() && creation_total != 0) return;

    ModuleState base(*key_, coeff_ * weight);
    for (const auto& [gen, m] : ann_) {
      base = apply_mode({gen, m}, base, spec_);
      if (base.is_zero()) return;
    }
    for (auto s : zero_slots_) {
      base = apply_mode({slots_[s].gen(), 0}, base, spec_);
      if (base.is_zero()) return;
    }
    std::vector<int> parts(creation_slots_.size());
    distribute(0, creation_total, base, parts);
  }

  void distribute(std::size_t idx, long remaining, const ModuleState& base, std::vector<int>& parts) {
    if (idx == creation_slots_.size()) {
      if (remaining != 0) return;
      Rational w(1);
      for (std::size_t t = 0; t < parts.size(); ++t)
        w *= binomial(parts[t] - 1, slots_[creation_slots_[t]].mode - 1);
      for (const auto& [key, c] : base) {
        Monomial mono = key.mono;
        for (std::size_t t = 0; t < parts.size(); ++t) {
          const Factor& f = slots_[creation_slots_[t]];
          mono = mono.times({f.color, f.tpow, parts[t]});
        }
        out_.add({std::move(mono), key.top}, c * w);
      }
      return;
    }
    long rest_min = 0;
    for (std::size_t t = idx + 1; t < creation_slots_.size(); ++t) rest_min += slots_[creation_slots_[t]].mode;
    const int lo = slots_[creation_slots_[idx]].mode;
    for (long q = lo; q <= remaining - rest_min; ++q) {
      parts[idx] = static_cast<int>(q);
      distribute(idx + 1, remaining - q, base, parts);
    }
  }

  const std::vector<Factor>& slots_;
  const long total_;  // required sum of all slot modes
  const ModuleSpec& spec_;
  ModuleState& out_;

  std::map<GenIndex, std::set<int>> available_;
  std::vector<std::size_t> zero_slots_;
  std::vector<std::pair<GenIndex, int>> ann_;
  std::vector<std::size_t> creation_slots_;
  const ModuleKey* key_ = nullptr;
  Rational coeff_;
};

// Applies coeff * zero-mode matrix z to top index `top`, placing results on `mono`.
void add_top_action(ModuleState& out, const Monomial& mono, std::size_t top, const RatMatrix& z,
                    const Rational& coeff) {
  for (std::size_t s = 0; s < z.rows(); ++s)
    if (!z(s, top).is_zero()) out.add({mono, s}, coeff * z(s, top));
}

}  // namespace

ModuleState vertex_mode(const FockState& v, long k, const ModuleState& w, const ModuleSpec& spec) {
  ModuleState out;
  for (const auto& [vmono, vc] : v) {
    VertexModeExpander expander(vmono, k, spec, out);
    for (const auto& [key, wc] : w) expander.run(key, vc * wc);
  }
  return out;
}

bool l_is_exact(long n, const ModuleSpec& spec) {
  return n != -1 || spec.c().is_zero() || !spec.has_zero_modes();
}

RatMatrix l0_top_matrix(const ModuleSpec& spec) {
  const std::size_t r = spec.top_dim();
  RatMatrix sum(r, r);
  if (!spec.has_zero_modes()) return sum;
  const Rational denom = Rational(1) - spec.c() * spec.c();
  if (denom.is_zero()) throw std::domain_error("c^2 = 1: the zero-mode series does not converge");
  for (const auto& h : spec.hs()) sum += h * h;
  return sum * (Rational(1) / (Rational(2) * spec.level() * denom));
}

LResult l_apply(long n, const ModuleState& w, const ModuleSpec& spec, const Truncation& tr) {
  if (n < -1) throw std::invalid_argument("L(n) is only defined for n >= -1");
  LResult res;
  ModuleState& out = res.state;
  const Rational inv_l = Rational(1) / spec.level();
  const Rational half_inv_l = inv_l / Rational(2);
  const RatMatrix top_l0 = (n == 0) ? l0_top_matrix(spec) : RatMatrix();

  for (const auto& [key, coeff] : w) {
    const Monomial& mono = key.mono;
    std::map<GenIndex, std::set<int>> present;
    for (const auto& f : mono.factors()) present[f.gen()].insert(f.mode);

    for (const auto& [gen, modes] : present) {
      const ModuleState single(key, coeff);
      // creation . annihilation: (1/l) sum_{p > max(n,0)} a(n-p) a(p)
      for (int p : modes) {
        if (p <= n) continue;
        ModuleState t = apply_mode({gen, p}, single, spec);
        t = apply_mode({gen, n - p}, t, spec);
        out.axpy(inv_l, t);
      }
      // annihilation . annihilation: (1/2l) sum_{p=1}^{n-1} a(n-p) a(p)
      for (int p : modes) {
        if (p >= n) continue;
        if (!modes.contains(static_cast<int>(n - p))) continue;
        ModuleState t = apply_mode({gen, p}, single, spec);
        t = apply_mode({gen, n - p}, t, spec);
        out.axpy(half_inv_l, t);
      }
      // annihilation . zero mode: (1/l) a(n) a(0), n >= 1
      if (n >= 1 && spec.has_zero_modes() && modes.contains(static_cast<int>(n))) {
        ModuleState t = apply_mode({gen, 0}, single, spec);
        t = apply_mode({gen, n}, t, spec);
        out.axpy(inv_l, t);
      }
    }

    if (n == 0 && spec.has_zero_modes()) add_top_action(out, mono, key.top, top_l0, coeff);

    // creation . zero mode: (1/l) sum_{i,j} a_{ij}(-1) a_{ij}(0)
    if (n == -1 && spec.has_zero_modes()) {
      const int j_last = spec.c().is_zero() ? 0 : tr.j_max;
      for (int i = 1; i <= spec.d(); ++i)
        for (int j = 0; j <= j_last; ++j) {
          const RatMatrix z = spec.zero_mode(i, j);
          if (z.is_zero()) continue;
          add_top_action(out, mono.times({i, j, 1}), key.top, z, coeff * inv_l);
        }
    }
  }
  res.exact = l_is_exact(n, spec);
  return res;
}

FockState l_apply(long n, const FockState& v, const ModuleSpec& algebra) {
  if (algebra.kind() != ModuleKind::Adjoint) throw std::invalid_argument("expected the adjoint module");
  return as_fock_state(l_apply(n, as_module_state(v), algebra, Truncation{}).state);
}

FockState d_apply(const FockState& v) {
  FockState out;
  for (const auto& [mono, c] : v) {
    const auto& fs = mono.factors();
    for (std::size_t k = 0; k < fs.size(); ++k) {
      if (k > 0 && fs[k] == fs[k - 1]) continue;  // handled via multiplicity
      const Factor f = fs[k];
      const auto mult = static_cast<long>(mono.multiplicity(f));
      out.add(mono.without_one(f).times({f.color, f.tpow, f.mode + 1}), c * Rational(f.mode * mult));
    }
  }
  return out;
}

AdjointModeMatrix adjoint_mode_matrix(const FockState& v, long n, const ModuleSpec& spec, const Truncation& tr) {
  const auto g = grading(v);
  if (!g) throw std::invalid_argument("adjoint_mode_matrix needs a doubly homogeneous, nonzero v");
  if (spec.has_zero_modes()) {
    RatVector lambda = spec.lambda();
    Rational norm(0);
    for (const auto& x : lambda) norm += x * x;
    const Rational denom = Rational(2) * spec.level() * (Rational(1) - spec.c() * spec.c());
    if (denom.is_zero() || !(norm / denom).is_integer())
      throw std::invalid_argument("top-space L(0) eigenvalue is not an integer");
  }
  const long h = g->wt;
  const ModuleSpec algebra = spec.algebra();

  // (-1)^h sum_k (1/k!) (L(1)^k v)_{2h-k-n-2}
  std::vector<std::pair<FockState, long>> pieces;
  FockState lk = v;
  Rational inv_fact(1);
  for (long k = 0; k <= h && !lk.is_zero(); ++k) {
    FockState scaled = lk;
    scaled *= inv_fact * Rational(h % 2 == 0 ? 1 : -1);
    pieces.emplace_back(std::move(scaled), 2 * h - k - n - 2);
    lk = l_apply(1, lk, algebra);
    inv_fact /= Rational(k + 1);
  }

  AdjointModeMatrix res;
  res.basis = basis_states(spec, tr);
  std::map<ModuleKey, std::size_t> index;
  for (std::size_t b = 0; b < res.basis.size(); ++b) index.emplace(res.basis[b], b);
  res.matrix = RatMatrix(res.basis.size(), res.basis.size());
  for (std::size_t b = 0; b < res.basis.size(); ++b) {
    const ModuleState w(res.basis[b], Rational(1));
    ModuleState image;
    for (const auto& [piece, mode] : pieces) image += vertex_mode(piece, mode, w, spec);
    for (const auto& [key, c] : image)
      if (auto it = index.find(key); it != index.end()) res.matrix(b, it->second) = c;  // transpose
  }
  return res;
}

}  // namespace qcva
