#include "kch/alexander.hpp"

#include "kch/error.hpp"

namespace kch {

  AlexMatrix quandle_matrix(KnotDiagram const& d) {
    std::size_t const n = d.arc_count();
    AlexMatrix m(d.crossing_count(), std::vector<LaurentPoly>(n));
    LaurentPoly const t = LaurentPoly::t();
    LaurentPoly const one_minus_t = LaurentPoly(1) - t;
    for (auto const& c : d.crossings()) {
      auto& row = m[c.id];
      std::size_t in = d.in_arc(c.id);
      std::size_t out = d.out_arc(c.id);
      if (c.sign < 0) {
        std::swap(in, out);
      }
      row[in] += 1;
      row[out] -= t;
      row[d.over_arc(c.id)] -= one_minus_t;
    }
    return m;
  }

  namespace {

    LaurentPoly gcd_without_column(AlexMatrix const& m, std::size_t column) {
      AlexMatrix sub;
      sub.reserve(m.size());
      for (auto const& row : m) {
        std::vector<LaurentPoly> r;
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (j != column) {
            r.push_back(row[j]);
          }
        }
        sub.push_back(std::move(r));
      }
      std::size_t const k = m.empty() ? 0 : m[0].size() - 1;
      LaurentPoly g = minor_gcd(sub, k);
      if (g.is_zero()) {
        throw DegenerateMatrix("every maximal minor vanishes");
      }
      return g;
    }

  }  // namespace

  LaurentPoly alexander_polynomial(AlexMatrix const& m) {
    if (m.empty() || m[0].empty()) {
      return 1;
    }
    return gcd_without_column(m, m[0].size() - 1);
  }

  AlexMatrix fox_jacobian(GroupPresentation const& p, std::vector<int> const& degrees) {
    AlexMatrix j(p.relators.size(), std::vector<LaurentPoly>(p.generators));
    for (std::size_t r = 0; r < p.relators.size(); ++r) {
      long d = 0;
      for (Letter x : p.relators[r].letters()) {
        std::size_t g = generator_of(x);
        long dg = degrees.at(g);
        if (is_inverse(x)) {
          d -= dg;
          j[r][g] -= LaurentPoly::monomial(1, d);
        } else {
          j[r][g] += LaurentPoly::monomial(1, d);
          d += dg;
        }
      }
    }
    return j;
  }

  LaurentPoly fox_oracle(GroupPresentation const& p, PeripheralSystem const& ps) {
    if (p.generators == 0) {
      return 1;
    }
    std::vector<int> degrees = abelianization_degrees(p, ps.meridian);
    std::size_t column = p.generators;
    for (std::size_t g = 0; g < p.generators; ++g) {
      if (degrees[g] == 1 || degrees[g] == -1) {
        column = g;
        break;
      }
    }
    if (column == p.generators) {
      throw InvariantError("no generator of degree +-1 to delete");
    }
    if (p.generators == 1) {
      return 1;
    }
    return gcd_without_column(fox_jacobian(p, degrees), column);
  }

  std::vector<LaurentPoly> module_invariants(AlexMatrix const& m) {
    std::vector<LaurentPoly> out;
    if (m.empty() || m[0].empty()) {
      return out;
    }
    for (std::size_t k = m[0].size() - 1; k >= 1; --k) {
      LaurentPoly e = minor_gcd(m, k);
      if (e.is_zero() || e.is_unit()) {
        break;
      }
      out.push_back(e);
    }
    return out;
  }

}  // namespace kch
