#include "kch/group_ring.hpp"

#include <numeric>
#include <sstream>

#include "kch/error.hpp"

namespace kch {

  RingContext::RingContext(KnotGroup group, std::shared_ptr<WordBackend const> backend)
      : group_(std::move(group)), backend_(std::move(backend)) {
    if (!backend_) {
      throw ValidationError("ring context needs a word backend");
    }
    if (group_.degrees.size() != group_.presentation.generators) {
      group_.degrees = abelianization_degrees(group_.presentation, group_.peripheral.meridian);
    }
  }

  std::shared_ptr<RingContext const> RingContext::make(KnotGroup group,
                                                       BackendOptions const& options) {
    auto backend = make_backend(group.presentation, options);
    return std::make_shared<RingContext const>(std::move(group), std::move(backend));
  }

  FreeWord RingContext::key(FreeWord const& w) const {
    {
      std::lock_guard lock(cache_mutex_);
      if (auto it = cache_.find(w); it != cache_.end()) {
        return it->second;
      }
    }
    FreeWord k = backend_->reduce(w);
    std::lock_guard lock(cache_mutex_);
    if (cache_.size() > 200000) {
      cache_.clear();
    }
    cache_.emplace(w, k);
    return k;
  }

  GroupRingElement::GroupRingElement(Context ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) {
      throw ValidationError("group ring element needs a context");
    }
  }

  GroupRingElement GroupRingElement::word(Context ctx, FreeWord const& w, Integer coeff) {
    GroupRingElement e(std::move(ctx));
    e.add_term(w, coeff);
    return e;
  }

  GroupRingElement GroupRingElement::integer(Context ctx, Integer n) {
    return word(std::move(ctx), FreeWord{}, std::move(n));
  }

  GroupRingElement GroupRingElement::one_minus_meridian(Context ctx) {
    GroupRingElement e = one(ctx);
    e.add_term(ctx->meridian(), -1);
    return e;
  }

  void GroupRingElement::require_same(GroupRingElement const& o) const {
    if (ctx_ != o.ctx_) {
      throw ContextMismatch("group ring elements live in different contexts");
    }
  }

  Integer GroupRingElement::coefficient(FreeWord const& w) const {
    auto it = terms_.find(ctx_->key(w));
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void GroupRingElement::add_term(FreeWord const& w, Integer const& c) {
    if (c == 0) {
      return;
    }
    FreeWord k = ctx_->key(w);
    auto it = terms_.find(k);
    if (it == terms_.end() && !ctx_->exact()) {
      for (auto jt = terms_.begin(); jt != terms_.end(); ++jt) {
        auto r = ctx_->backend().equal(k, jt->first);
        if (r.yes()) {
          it = jt;
          break;
        }
        if (r.answer == Answer::Unknown) {
          exact_ = false;
        }
      }
    }
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
      return;
    }
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }

  GroupRingElement& GroupRingElement::operator+=(GroupRingElement const& o) {
    require_same(o);
    exact_ = exact_ && o.exact_;
    for (auto const& [w, c] : o.terms_) {
      add_term(w, c);
    }
    return *this;
  }

  GroupRingElement& GroupRingElement::operator-=(GroupRingElement const& o) {
    require_same(o);
    exact_ = exact_ && o.exact_;
    for (auto const& [w, c] : o.terms_) {
      add_term(w, -c);
    }
    return *this;
  }

  GroupRingElement& GroupRingElement::operator*=(Integer const& n) {
    if (n == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) {
      c *= n;
    }
    return *this;
  }

  GroupRingElement operator*(GroupRingElement const& a, GroupRingElement const& b) {
    a.require_same(b);
    GroupRingElement out(a.ctx_);
    out.exact_ = a.exact_ && b.exact_;
    for (auto const& [x, c] : a.terms_) {
      for (auto const& [y, d] : b.terms_) {
        out.add_term(x * y, c * d);
      }
    }
    return out;
  }

  GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out = *this;
    for (auto& [w, c] : out.terms_) {
      c = -c;
    }
    return out;
  }

  GroupRingElement GroupRingElement::left_mul(FreeWord const& g) const {
    GroupRingElement out(ctx_);
    out.exact_ = exact_;
    for (auto const& [w, c] : terms_) {
      out.add_term(g * w, c);
    }
    return out;
  }

  GroupRingElement GroupRingElement::right_mul(FreeWord const& g) const {
    GroupRingElement out(ctx_);
    out.exact_ = exact_;
    for (auto const& [w, c] : terms_) {
      out.add_term(w * g, c);
    }
    return out;
  }

  Integer GroupRingElement::augmentation() const {
    Integer s = 0;
    for (auto const& [w, c] : terms_) {
      s += c;
    }
    return s;
  }

  Answer GroupRingElement::is_zero() const {
    if (terms_.empty()) {
      return Answer::Yes;
    }
    if (exact_) {
      return Answer::No;
    }
    // degree-graded sums are homomorphic images in Z[t, t^-1]
    std::map<long, Integer> graded;
    for (auto const& [w, c] : terms_) {
      graded[ctx_->degree(w)] += c;
    }
    for (auto const& [d, c] : graded) {
      if (c != 0) {
        return Answer::No;
      }
    }
    return Answer::Unknown;
  }

  std::string GroupRingElement::to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto const& [w, c] : terms_) {
      if (!first) {
        os << (c < 0 ? " - " : " + ");
      } else if (c < 0) {
        os << "-";
      }
      Integer a = abs(c);
      if (w.empty()) {
        os << a;
      } else {
        if (a != 1) {
          os << a << "*";
        }
        os << w.to_string();
      }
      first = false;
    }
    return os.str();
  }

  Answer in_left_ideal(GroupRingElement const& a, FreeWord const& m) {
    auto const& ctx = *a.context();
    long const md = ctx.degree(m);
    if (md != 1) {
      throw InvariantError("in_left_ideal needs a meridian (degree 1)");
    }
    std::vector<std::pair<FreeWord, Integer>> terms(a.terms().begin(), a.terms().end());
    std::size_t const n = terms.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::vector<std::pair<std::size_t, std::size_t>> unknown_edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (find(i) == find(j)) {
          continue;
        }
        FreeWord q = terms[j].first.inverse() * terms[i].first;
        long k = ctx.degree(q);
        auto r = ctx.backend().equal(q, m.pow(k));
        if (r.yes()) {
          parent[find(i)] = find(j);
        } else if (r.answer == Answer::Unknown) {
          unknown_edges.emplace_back(i, j);
        }
      }
    }
    std::map<std::size_t, Integer> sums;
    for (std::size_t i = 0; i < n; ++i) {
      sums[find(i)] += terms[i].second;
    }
    bool all_zero = true;
    bool witnessed_nonzero = false;
    for (auto const& [root, s] : sums) {
      if (s == 0) {
        continue;
      }
      all_zero = false;
      bool isolated = true;
      for (auto [i, j] : unknown_edges) {
        if (find(i) != find(j) && (find(i) == root || find(j) == root)) {
          isolated = false;
          break;
        }
      }
      witnessed_nonzero = witnessed_nonzero || isolated;
    }
    if (all_zero) {
      return Answer::Yes;
    }
    // every cross pair of a class was tested, so an isolated class is a whole coset
    if (witnessed_nonzero) {
      return Answer::No;
    }
    return Answer::Unknown;
  }

  bool in_augmentation_ideal(GroupRingElement const& a) { return a.augmentation() == 0; }

  Answer in_peripheral_plus_left_ideal(GroupRingElement const& a, long longitude_bound) {
    auto const& ctx = *a.context();
    GroupRingElement rest = a;
    for (auto const& [w, c] : a.terms()) {
      long k = ctx.degree(w);
      for (long i = -longitude_bound; i <= longitude_bound; ++i) {
        FreeWord p = ctx.longitude().pow(i) * ctx.meridian().pow(k);
        if (ctx.backend().equal(w, p).yes()) {
          rest.add_term(w, -c);
          break;
        }
      }
    }
    return in_left_ideal(rest, ctx.meridian()) == Answer::Yes ? Answer::Yes : Answer::Unknown;
  }

  std::vector<WitnessTerm> ideal_witness(GroupRingElement const& a) {
    auto const& ctx = *a.context();
    auto const& g = ctx.group();
    if (a.augmentation() != 0) {
      throw WitnessUnavailable("augmentation is nonzero; element is not in R(1-m)R");
    }
    if (g.conjugators.size() != g.presentation.generators) {
      throw WitnessUnavailable("generators carry no meridian conjugators");
    }
    FreeWord const m = ctx.meridian();
    FreeWord const m_inv = m.inverse();
    std::vector<WitnessTerm> out;
    for (auto const& [w, c] : a.terms()) {
      FreeWord prefix;
      for (Letter x : w.letters()) {
        FreeWord const& cj = g.conjugators[generator_of(x)];
        if (is_inverse(x)) {
          // x_j^-1 - 1 = c_j m^-1 (1 - m) c_j^-1
          out.push_back({c, prefix * cj * m_inv, cj.inverse()});
        } else {
          // x_j - 1 = -c_j (1 - m) c_j^-1
          out.push_back({-c, prefix * cj, cj.inverse()});
        }
        prefix.push_back(x);
      }
    }
    return out;
  }

  GroupRingElement expand_witness(Context const& ctx, std::vector<WitnessTerm> const& w) {
    GroupRingElement out(ctx);
    for (auto const& t : w) {
      out.add_term(t.gamma * t.delta, t.coeff);
      out.add_term(t.gamma * ctx->meridian() * t.delta, -t.coeff);
    }
    return out;
  }

}  // namespace kch
