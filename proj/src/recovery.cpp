#include "kch/recovery.hpp"

#include <algorithm>
#include <unordered_map>

#include "kch/alexander.hpp"
#include "kch/error.hpp"

namespace kch {

  namespace {

    void check_word(FreeWord const& w, std::size_t generators, char const* what) {
      if (w.generator_bound() > generators) {
        throw ValidationError(std::string(what) + " uses a generator outside its presentation");
      }
    }

    GroupRingElement element(Context const& ctx, RingTerms const& terms) {
      GroupRingElement e(ctx);
      for (auto const& [c, w] : terms) {
        e.add_term(w, c);
      }
      return e;
    }

    void require(RecoveryResult& out, std::string name, Answer a, std::string const& failure) {
      out.checks.push_back({std::move(name), a});
      if (a == Answer::No) {
        throw MatchFailure(failure);
      }
      if (a == Answer::Unknown) {
        throw UnknownAnswer("could not certify: " + out.checks.back().name);
      }
    }

    Answer as_answer(bool b) { return b ? Answer::Yes : Answer::No; }

    // Two terms with coefficients +1 and -1.
    Answer is_binomial(GroupRingElement const& a) {
      auto const& t = a.terms();
      if (t.size() == 2) {
        auto it = t.begin();
        Integer c1 = it->second;
        Integer c2 = std::next(it)->second;
        if (abs(c1) == 1 && c1 + c2 == 0) {
          return Answer::Yes;
        }
      }
      return a.exact() ? Answer::No : Answer::Unknown;
    }

    bool is_knotted(GroupPresentation const& p, PeripheralSystem const& ps) {
      return !fox_oracle(p, ps).is_unit();
    }

  }  // namespace

  void validate(IsoData const& d) {
    validate(d.source);
    validate(d.target);
    check_word(d.source_peripheral.meridian, d.source.generators, "source meridian");
    check_word(d.source_peripheral.longitude, d.source.generators, "source longitude");
    check_word(d.target_peripheral.meridian, d.target.generators, "target meridian");
    check_word(d.target_peripheral.longitude, d.target.generators, "target longitude");
    if (d.psi.size() != d.source.generators) {
      throw ValidationError("psi must give one image per source generator");
    }
    for (auto const& w : d.psi) {
      check_word(w, d.target.generators, "psi image");
    }
    for (auto const* terms : {&d.x, &d.xprime}) {
      for (auto const& [c, w] : *terms) {
        check_word(w, d.target.generators, "ring element");
      }
    }
    long det = d.matrix[0] * d.matrix[3] - d.matrix[1] * d.matrix[2];
    if (det != 1 && det != -1) {
      throw ValidationError("peripheral matrix must have determinant +-1");
    }
  }

  std::optional<Unit> recognize_unit(GroupRingElement const& u) {
    if (u.support_size() != 1) {
      return std::nullopt;
    }
    auto const& [w, c] = *u.terms().begin();
    if (c == 1) {
      return Unit{1, w};
    }
    if (c == -1) {
      return Unit{-1, w};
    }
    return std::nullopt;
  }

  std::optional<PowerDivisor> solve_power_divisor(GroupRingElement const& z, FreeWord const& m) {
    auto const& ctx = z.context();
    GroupRingElement one_m = GroupRingElement::one(ctx);
    one_m.add_term(m, -1);
    GroupRingElement p = z * one_m;
    if (p.empty()) {
      return PowerDivisor{FreeWord{}, 0};
    }
    auto const& t = p.terms();
    bool shape = t.size() == 2 && p.coefficient(FreeWord{}) == 1;
    FreeWord g;
    if (shape) {
      for (auto const& [w, c] : t) {
        if (c == -1 && ctx->backend().equal(w, FreeWord{}).no()) {
          g = w;
        }
      }
      shape = !g.empty();
    }
    if (!shape) {
      if (!p.exact()) {
        throw UnknownAnswer("z(1 - m) could not be brought to a normal form");
      }
      return std::nullopt;
    }
    // g = m^n forces n to be the exponent sum in any abelian image where m has degree 1
    long md = ctx->degree(m);
    if (md == 0) {
      throw InvariantError("m must have nonzero degree");
    }
    long gd = ctx->degree(g);
    if (gd % md != 0) {
      throw InvariantError("z(1 - m) = 1 - g with g not a power of m");
    }
    long n = gd / md;
    auto r = ctx->backend().equal(g, m.pow(n));
    if (r.answer == Answer::Unknown) {
      throw UnknownAnswer("could not certify g = m^n");
    }
    if (r.no()) {
      throw InvariantError("z(1 - m) = 1 - g with g not a power of m");
    }
    return PowerDivisor{g, n};
  }

  RecoveryResult recover_peripheral(IsoData const& data, BackendOptions const& options) {
    validate(data);
    if (!is_knotted(data.source, data.source_peripheral)
        || !is_knotted(data.target, data.target_peripheral)) {
      throw KnotednessViolation("trivial Alexander polynomial: the knots must be knotted");
    }
    auto const [n1, n2, n3, n4] = data.matrix;
    Context ctx = RingContext::make(KnotGroup{data.target, data.target_peripheral, {}, {}}, options);
    auto const& be = ctx->backend();
    FreeWord const m1 = ctx->meridian();
    FreeWord const l1 = ctx->longitude();
    FreeWord const m0 = data.source_peripheral.meridian;
    FreeWord const l0 = data.source_peripheral.longitude;
    auto psi = [&](FreeWord const& w) { return w.substitute(data.psi); };
    auto conj = [](FreeWord const& g, FreeWord const& w) { return g.inverse() * w * g; };

    RecoveryResult out;
    GroupRingElement const x = element(ctx, data.x);
    GroupRingElement const xp = element(ctx, data.xprime);
    GroupRingElement const one_m = GroupRingElement::one_minus_meridian(ctx);

    // (i) x x'(1 - m1) = 1 - m1^n1 l1^n2
    GroupRingElement rhs = GroupRingElement::one(ctx);
    rhs.add_term(m1.pow(n1) * l1.pow(n2), -1);
    require(out, "x x'(1-m1) = 1 - m1^n1 l1^n2", (x * xp * one_m - rhs).is_zero(),
            "x x'(1 - m1) does not match the peripheral matrix");

    // (ii) the lemma gives m1^n1 l1^n2 = m1^n, so l1^n2 = 1 and n2 = 0
    auto pd = solve_power_divisor(x * xp, m1);
    if (!pd) {
      throw MatchFailure("x x'(1 - m1) is not of the form 1 - g");
    }
    require(out, "lemma exponent equals n1", as_answer(pd->n == n1),
            "power divisor exponent disagrees with n1");
    if (n2 != 0) {
      throw KnotednessViolation("the longitude would be a power of the meridian");
    }

    // (iii) units
    auto ux = recognize_unit(x);
    auto uxp = recognize_unit(xp);
    if (!ux || !uxp) {
      throw MatchFailure("x and x' must be units +-g");
    }
    FreeWord const gamma = ux->g;
    if (n1 == 1) {
      require(out, "x' = +-gamma^-1", as_answer(uxp->sign == ux->sign),
              "x and x' carry different signs");
      require(out, "x' word = gamma^-1", be.equal(uxp->g, gamma.inverse()).answer,
              "x' is not the inverse of x");
    } else {
      require(out, "x' = -+gamma^-1 m1^-1", as_answer(uxp->sign == -ux->sign),
              "x and x' must carry opposite signs");
      require(out, "x' word = gamma^-1 m1^-1", be.equal(uxp->g, gamma.inverse() * m1.inverse()).answer,
              "x' is not gamma^-1 m1^-1");
    }

    // (iv) psi_pp(l0^a (1 - m0)) = x'(1 - m1) psi_KK(l0^a) x for a = 0, 1
    FreeWord const p_l = m1.pow(n3) * l1.pow(n4);
    for (long a = 0; a <= 1; ++a) {
      GroupRingElement lhs = xp * one_m * GroupRingElement::word(ctx, p_l.pow(a)) * x;
      std::string tag = "alpha=" + std::to_string(a);
      require(out, "binomial psi_pp at " + tag, is_binomial(lhs),
              "psi_pp(l0^a (1 - m0)) is not a binomial");
      GroupRingElement img = GroupRingElement::word(ctx, psi(l0.pow(a)));
      img.add_term(psi(l0.pow(a) * m0), -1);
      Answer plus = (lhs - img).is_zero();
      Answer minus = plus == Answer::Yes ? Answer::No : (lhs + img).is_zero();
      Answer match = plus == Answer::Yes || minus == Answer::Yes ? Answer::Yes
                     : plus == Answer::No && minus == Answer::No ? Answer::No
                                                                 : Answer::Unknown;
      require(out, "supports match at " + tag, match,
              "psi_pp images do not match psi on the binomial supports");
    }

    // (v) the longitude is null-homologous, so n3 = 0
    out.n3_check = ctx->degree(psi(l0));
    require(out, "n3 = 0", as_answer(out.n3_check == 0 && n3 == 0),
            "n3 is nonzero: psi(l0) is not null-homologous");

    out.conjugator = gamma;
    out.sign_m = static_cast<int>(n1);
    out.sign_l = static_cast<int>(n4);
    require(out, "psi(m0) = gamma^-1 m1^s gamma",
            be.equal(psi(m0), conj(gamma, m1.pow(out.sign_m))).answer,
            "psi(m0) is not conjugate to m1^+-1 by gamma");
    require(out, "psi(l0) = gamma^-1 l1^s gamma",
            be.equal(psi(l0), conj(gamma, l1.pow(out.sign_l))).answer,
            "psi(l0) is not conjugate to l1^+-1 by gamma");
    for (std::size_t i = 0; i < data.source.relators.size(); ++i) {
      require(out, "psi(relator " + std::to_string(i) + ") = 1",
              be.equal(psi(data.source.relators[i]), FreeWord{}).answer,
              "psi does not respect a source relator");
    }
    return out;
  }

  IsoData identity_iso(KnotGroup const& g) {
    IsoData d;
    d.source = d.target = g.presentation;
    d.source_peripheral = d.target_peripheral = g.peripheral;
    for (std::size_t i = 0; i < g.presentation.generators; ++i) {
      d.psi.push_back(FreeWord::power(i, 1));
    }
    d.matrix = {1, 0, 0, 1};
    d.x = {{1, FreeWord{}}};
    d.xprime = {{1, FreeWord{}}};
    return d;
  }

  IsoData conjugated_iso(KnotGroup const& g, FreeWord const& gamma) {
    IsoData d = identity_iso(g);
    for (auto& w : d.psi) {
      w = gamma.inverse() * w * gamma;
    }
    d.x = {{1, gamma}};
    d.xprime = {{1, gamma.inverse()}};
    return d;
  }

  IsoData mirror_iso(KnotDiagram const& dia) {
    KnotGroup src = wirtinger(dia);
    KnotGroup dst = wirtinger(reflect(dia));
    IsoData d;
    d.source = src.presentation;
    d.source_peripheral = src.peripheral;
    d.target = dst.presentation;
    d.target_peripheral = dst.peripheral;
    for (std::size_t i = 0; i < src.presentation.generators; ++i) {
      d.psi.push_back(FreeWord::power(i, -1));
    }
    d.matrix = {-1, 0, 0, 1};
    d.x = {{1, FreeWord{}}};
    d.xprime = {{-1, dst.peripheral.meridian.inverse()}};
    return d;
  }

  namespace {

    // Reduced words of F2 packed as (length, 2-bit letters) in a uint64.
    using Packed = std::uint64_t;

    Packed pack(FreeWord const& w) {
      Packed p = w.size();
      for (std::size_t i = 0; i < w.size(); ++i) {
        p |= static_cast<Packed>(w[i]) << (8 + 2 * i);
      }
      return p;
    }

    std::vector<FreeWord> words_up_to(std::size_t length) {
      std::vector<FreeWord> out{FreeWord{}};
      std::size_t begin = 0;
      for (std::size_t len = 1; len <= length; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
          for (Letter x = 0; x < 4; ++x) {
            if (!out[i].empty() && out[i].letters().back() == inverse_letter(x)) {
              continue;
            }
            FreeWord w = out[i];
            w.push_back(x);
            out.push_back(std::move(w));
          }
        }
        begin = end;
      }
      return out;
    }

  }  // namespace

  LemmaReport brute_force_lemma_check(std::size_t length_bound, std::size_t support_bound,
                                      long coeff_bound) {
    if (length_bound > 20) {
      throw ValidationError("length bound too large");
    }
    std::vector<FreeWord> const words = words_up_to(length_bound);
    std::size_t const nw = words.size();
    FreeWord const m = FreeWord::power(0, 1);
    // ids: 0..nw-1 for the words, then any new products w m
    std::unordered_map<Packed, std::size_t> id;
    std::vector<FreeWord> table = words;
    for (std::size_t i = 0; i < nw; ++i) {
      id.emplace(pack(words[i]), i);
    }
    std::vector<std::size_t> times_m(nw);
    for (std::size_t i = 0; i < nw; ++i) {
      FreeWord wm = words[i] * m;
      auto [it, fresh] = id.emplace(pack(wm), table.size());
      if (fresh) {
        table.push_back(wm);
      }
      times_m[i] = it->second;
    }
    std::size_t const identity = 0;

    GroupPresentation f2{2, {}};
    KnotGroup fg{f2, {m, FreeWord{}}, {1, 0}, {}};
    Context ctx = RingContext::make(fg, BackendOptions{BackendKind::FreeReduce, {}, 0});

    std::vector<long> coeffs;
    for (long c = -coeff_bound; c <= coeff_bound; ++c) {
      if (c != 0) {
        coeffs.push_back(c);
      }
    }

    LemmaReport rep;
    std::vector<std::size_t> support;
    std::vector<long> coeff;

    auto examine = [&] {
      ++rep.candidates;
      // z(1 - m) as at most 2k terms
      std::pair<std::size_t, long> t[16];
      std::size_t nt = 0;
      auto add = [&](std::size_t w, long c) {
        for (std::size_t i = 0; i < nt; ++i) {
          if (t[i].first == w) {
            t[i].second += c;
            return;
          }
        }
        t[nt++] = {w, c};
      };
      for (std::size_t i = 0; i < support.size(); ++i) {
        add(support[i], coeff[i]);
        add(times_m[support[i]], -coeff[i]);
      }
      std::size_t live = 0;
      bool has_one = false;
      std::size_t g = identity;
      bool shape = true;
      for (std::size_t i = 0; i < nt; ++i) {
        if (t[i].second == 0) {
          continue;
        }
        ++live;
        if (t[i].first == identity && t[i].second == 1) {
          has_one = true;
        } else if (t[i].second == -1) {
          g = t[i].first;
        } else {
          shape = false;
        }
      }
      bool instance = live == 0 || (shape && live == 2 && has_one && g != identity);
      if (!instance) {
        return;
      }
      ++rep.instances;
      FreeWord const& gw = table[g];
      long n = gw.exponent_sum(std::vector<int>{1, 0});
      if (gw != m.pow(n)) {
        ++rep.counterexamples;
      }
      GroupRingElement z(ctx);
      for (std::size_t i = 0; i < support.size(); ++i) {
        z.add_term(words[support[i]], coeff[i]);
      }
      auto pd = solve_power_divisor(z, m);
      if (!pd || pd->n != n || pd->g != gw) {
        ++rep.solver_failures;
      }
    };

    // supports as increasing index tuples, then every coefficient choice
    auto recurse = [&](auto&& self, std::size_t start) -> void {
      if (!support.empty()) {
        examine();
      }
      if (support.size() == support_bound) {
        return;
      }
      for (std::size_t i = start; i < nw; ++i) {
        support.push_back(i);
        for (long c : coeffs) {
          coeff.push_back(c);
          self(self, i + 1);
          coeff.pop_back();
        }
        support.pop_back();
      }
    };
    // z = 0
    ++rep.candidates;
    ++rep.instances;
    recurse(recurse, 0);
    return rep;
  }

}  // namespace kch
