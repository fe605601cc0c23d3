#include "kch/string_module.hpp"

#include <deque>
#include <sstream>

#include "kch/error.hpp"

namespace kch {

  namespace {

    constexpr PeripheralClass kMeridianClass{0, 1};

    BracketWord splice(BracketWord const& w, std::size_t from, std::size_t to,
                       std::vector<SLetter> const& middle) {
      BracketWord out;
      out.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<long>(from));
      out.letters.insert(out.letters.end(), middle.begin(), middle.end());
      out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<long>(to),
                         w.letters.end());
      return out;
    }

    // Concatenation merging the two junction letters, which must be of the
    // same kind: squares multiply, curlies add.
    BracketWord concat_merge(BracketWord const& u, BracketWord const& v) {
      if (u.letters.empty() || v.letters.empty()
          || u.letters.back().curly != v.letters.front().curly) {
        throw ClassificationError("concatenation needs letters of one kind at the junction");
      }
      BracketWord out = u;
      if (out.letters.back().curly) {
        out.letters.back().alpha = out.letters.back().alpha + v.letters.front().alpha;
      } else {
        out.letters.back().word *= v.letters.front().word;
      }
      out.letters.insert(out.letters.end(), v.letters.begin() + 1, v.letters.end());
      return out;
    }

    [[noreturn]] void mismatch(StringRelation r, std::string const& why) {
      throw PatternMismatch(to_string(r) + ": " + why);
    }

  }  // namespace

  SElement concat(SElement const& a, SElement const& b) {
    if (a.context() != b.context()) {
      throw ContextMismatch("string module elements live in different contexts");
    }
    SElement out(a.context());
    for (auto const& [u, c] : a.terms()) {
      for (auto const& [v, d] : b.terms()) {
        out.add_term(concat_merge(u, v), c * d);
      }
    }
    return out;
  }

  FreeWord hat_embed(PeripheralClass a, PeripheralSystem const& ps) {
    return ps.longitude.pow(a.l) * ps.meridian.pow(a.m);
  }

  std::string to_string(Classification c) {
    switch (c) {
      case Classification::KK:
        return "KK";
      case Classification::Kp:
        return "Kp";
      case Classification::pK:
        return "pK";
      case Classification::pp:
        return "pp";
    }
    return "?";
  }

  std::string to_string(StringRelation r) {
    switch (r) {
      case StringRelation::Str1:
        return "str1";
      case StringRelation::Str2:
        return "str2";
      case StringRelation::Str3:
        return "str3";
      case StringRelation::Str4:
        return "str4";
    }
    return "?";
  }

  Classification BracketWord::classification() const {
    if (letters.empty()) {
      throw ValidationError("bracket word is empty");
    }
    for (std::size_t i = 1; i < letters.size(); ++i) {
      if (letters[i].curly == letters[i - 1].curly) {
        throw ValidationError("bracket word letters must alternate");
      }
    }
    bool first = letters.front().curly, last = letters.back().curly;
    if (first) {
      return last ? Classification::KK : Classification::Kp;
    }
    return last ? Classification::pK : Classification::pp;
  }

  std::string BracketWord::to_string() const {
    std::ostringstream os;
    for (auto const& x : letters) {
      if (x.curly) {
        os << "{l^" << x.alpha.l << " m^" << x.alpha.m << "}";
      } else {
        os << "[" << x.word.to_string() << "]";
      }
    }
    return os.str();
  }

  SElement::SElement(Context ctx) : ctx_(std::move(ctx)) {
    if (!ctx_) {
      throw ValidationError("string module element needs a context");
    }
  }

  SElement SElement::word(Context ctx, BracketWord w, Integer coeff) {
    SElement e(std::move(ctx));
    e.add_term(w, coeff);
    return e;
  }

  void SElement::add_term(BracketWord const& w, Integer const& c) {
    Classification k = w.classification();
    if (class_ && *class_ != k) {
      throw ClassificationError("cannot mix " + kch::to_string(*class_) + " and "
                                + kch::to_string(k) + " terms");
    }
    class_ = k;
    if (c == 0) {
      return;
    }
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) {
        terms_.erase(it);
      }
    }
  }

  SElement& SElement::operator+=(SElement const& o) {
    if (ctx_ != o.ctx_) {
      throw ContextMismatch("string module elements live in different contexts");
    }
    for (auto const& [w, c] : o.terms_) {
      add_term(w, c);
    }
    if (!class_) {
      class_ = o.class_;
    }
    return *this;
  }

  SElement& SElement::operator-=(SElement const& o) {
    if (ctx_ != o.ctx_) {
      throw ContextMismatch("string module elements live in different contexts");
    }
    for (auto const& [w, c] : o.terms_) {
      add_term(w, -c);
    }
    if (!class_) {
      class_ = o.class_;
    }
    return *this;
  }

  SElement& SElement::operator*=(Integer const& n) {
    if (n == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) {
      c *= n;
    }
    return *this;
  }

  std::string SElement::to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto const& [w, c] : terms_) {
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      Integer a = abs(c);
      if (a != 1) {
        os << a << "*";
      }
      os << w.to_string();
      first = false;
    }
    return os.str();
  }

  SElement apply_relation(Context const& ctx, BracketWord const& w, StringRelation r,
                          RelationSite const& site) {
    w.classification();
    auto const& ps = ctx->group().peripheral;
    auto const& L = w.letters;
    std::size_t const i = site.index;
    if (i >= L.size()) {
      mismatch(r, "site out of range");
    }
    SElement out(ctx);
    switch (r) {
      case StringRelation::Str1: {
        if (L[i].curly || i + 1 >= L.size()) {
          mismatch(r, "needs a square letter followed by a curly letter");
        }
        PeripheralClass a = site.reverse ? -site.alpha : site.alpha;
        BracketWord v = w;
        v.letters[i].word *= hat_embed(a, ps).inverse();
        v.letters[i + 1].alpha = v.letters[i + 1].alpha + a;
        out.add_term(v, 1);
        break;
      }
      case StringRelation::Str2: {
        if (L[i].curly || i == 0) {
          mismatch(r, "needs a square letter preceded by a curly letter");
        }
        PeripheralClass a = site.reverse ? -site.alpha : site.alpha;
        BracketWord v = w;
        v.letters[i].word = hat_embed(a, ps).inverse() * v.letters[i].word;
        v.letters[i - 1].alpha = v.letters[i - 1].alpha + a;
        out.add_term(v, 1);
        break;
      }
      case StringRelation::Str3: {
        FreeWord const& m = ctx->meridian();
        if (!site.reverse) {
          if (L[i].curly) {
            mismatch(r, "needs a square letter");
          }
          FreeWord x1 = site.split;
          FreeWord x2 = x1.inverse() * L[i].word;
          out.add_term(splice(w, i, i + 1, {SLetter::square(x1 * m * x2)}), 1);
          out.add_term(splice(w, i, i + 1,
                              {SLetter::square(x1), SLetter::brace({}), SLetter::square(x2)}),
                       1);
        } else {
          if (!L[i].curly || !L[i].alpha.is_zero() || i == 0 || i + 1 >= L.size()) {
            mismatch(r, "needs an internal curly letter {1}");
          }
          FreeWord const& x1 = L[i - 1].word;
          FreeWord const& x2 = L[i + 1].word;
          out.add_term(splice(w, i - 1, i + 2, {SLetter::square(x1 * x2)}), 1);
          out.add_term(splice(w, i - 1, i + 2, {SLetter::square(x1 * m * x2)}), -1);
        }
        break;
      }
      case StringRelation::Str4: {
        if (!site.reverse) {
          if (!L[i].curly) {
            mismatch(r, "needs a curly letter");
          }
          PeripheralClass A = L[i].alpha;
          out.add_term(splice(w, i, i + 1, {SLetter::brace(A + kMeridianClass)}), 1);
          out.add_term(splice(w, i, i + 1,
                              {SLetter::brace(site.alpha), SLetter::square({}),
                               SLetter::brace(A - site.alpha)}),
                       1);
        } else {
          if (L[i].curly || !L[i].word.empty() || i == 0 || i + 1 >= L.size()) {
            mismatch(r, "needs an internal square letter [1]");
          }
          PeripheralClass A = L[i - 1].alpha + L[i + 1].alpha;
          out.add_term(splice(w, i - 1, i + 2, {SLetter::brace(A)}), 1);
          out.add_term(splice(w, i - 1, i + 2, {SLetter::brace(A + kMeridianClass)}), -1);
        }
        break;
      }
    }
    return out;
  }

  SElement normalize_s(SElement const& e) {
    auto const& ctx = e.context();
    auto const& ps = ctx->group().peripheral;
    FreeWord const& m = ctx->meridian();
    SElement out(ctx);
    std::deque<std::pair<BracketWord, Integer>> work(e.terms().begin(), e.terms().end());
    while (!work.empty()) {
      auto [w, c] = std::move(work.front());
      work.pop_front();
      auto& L = w.letters;
      std::size_t internal = 0;
      for (std::size_t i = 1; i + 1 < L.size(); ++i) {
        if (L[i].curly) {
          internal = i;
          break;
        }
      }
      if (internal) {
        // [x1]{a}[x2] -> [x1 a x2] - [x1 a m x2]
        FreeWord a = hat_embed(L[internal].alpha, ps);
        FreeWord const& x1 = L[internal - 1].word;
        FreeWord const& x2 = L[internal + 1].word;
        work.emplace_back(splice(w, internal - 1, internal + 2, {SLetter::square(x1 * a * x2)}), c);
        work.emplace_back(splice(w, internal - 1, internal + 2, {SLetter::square(x1 * a * m * x2)}),
                          -c);
        continue;
      }
      if (L.size() > 1 && L.front().curly) {
        L[1].word = hat_embed(L.front().alpha, ps) * L[1].word;
        L.front().alpha = {};
      }
      if (L.size() > 1 && L.back().curly) {
        L[L.size() - 2].word *= hat_embed(L.back().alpha, ps);
        L.back().alpha = {};
      }
      for (auto& x : L) {
        if (!x.curly) {
          x.word = ctx->key(x.word);
        }
      }
      out.add_term(w, c);
    }
    return out;
  }

  GroupRingElement phi(Context const& ctx, BracketWord const& w) {
    w.classification();
    auto const& ps = ctx->group().peripheral;
    FreeWord const& m = ctx->meridian();
    std::vector<std::pair<FreeWord, Integer>> acc{{FreeWord{}, 1}};
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      auto const& x = w.letters[i];
      if (!x.curly) {
        for (auto& [u, c] : acc) {
          u *= x.word;
        }
        continue;
      }
      FreeWord a = hat_embed(x.alpha, ps);
      if (i == 0) {
        for (auto& [u, c] : acc) {
          u *= a;
        }
        continue;
      }
      std::vector<std::pair<FreeWord, Integer>> next;
      next.reserve(2 * acc.size());
      for (auto const& [u, c] : acc) {
        next.emplace_back(u * a, c);
        next.emplace_back(u * a * m, -c);
      }
      acc = std::move(next);
    }
    GroupRingElement out(ctx);
    for (auto const& [u, c] : acc) {
      out.add_term(u, c);
    }
    return out;
  }

  GroupRingElement phi(SElement const& e) {
    GroupRingElement out(e.context());
    for (auto const& [w, c] : e.terms()) {
      GroupRingElement t = phi(e.context(), w);
      t *= c;
      out += t;
    }
    return out;
  }

  SElement mu(SElement const& u, SElement const& v) {
    if ((u.classification() && *u.classification() != Classification::Kp)
        || (v.classification() && *v.classification() != Classification::pK)) {
      throw ClassificationError("mu needs a Kp element and a pK element");
    }
    return concat(u, v);
  }

  PPElement pp_mul(PPElement const& a, PPElement const& b) {
    for (auto const* x : {&a, &b}) {
      if (x->e.classification() && *x->e.classification() != Classification::pp) {
        throw ClassificationError("pp_mul needs pp elements");
      }
    }
    SElement r1n2 = a.e;
    r1n2 *= b.n;
    SElement r2n1 = b.e;
    r2n1 *= a.n;
    SElement e = concat(a.e, b.e);
    e += r1n2;
    e += r2n1;
    return {a.n * b.n, std::move(e)};
  }

  GroupRingElement phi_hat(PPElement const& a) {
    return GroupRingElement::integer(a.e.context(), a.n) + phi(a.e);
  }

  FreeWord unframe(FreeWord const& x, RingContext const& ctx) {
    return ctx.meridian().pow(-ctx.degree(x)) * x;
  }

}  // namespace kch
