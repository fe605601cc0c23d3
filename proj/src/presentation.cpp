#include "kch/presentation.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "kch/error.hpp"

namespace kch {

  namespace {

    using Matrix = std::vector<std::vector<Integer>>;

    Matrix exponent_matrix(GroupPresentation const& p) {
      Matrix m(p.relators.size(), std::vector<Integer>(p.generators, 0));
      for (std::size_t r = 0; r < p.relators.size(); ++r) {
        for (Letter x : p.relators[r].letters()) {
          m[r][generator_of(x)] += exponent_of(x);
        }
      }
      return m;
    }

    // Diagonalize in place; returns the nonzero diagonal.
    std::vector<Integer> smith_diagonal(Matrix a) {
      std::size_t const rows = a.size();
      std::size_t const cols = rows ? a[0].size() : 0;
      std::vector<Integer> diag;
      for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        // pivot: smallest nonzero absolute value in the remaining block
        while (true) {
          std::optional<std::pair<std::size_t, std::size_t>> piv;
          for (std::size_t i = k; i < rows; ++i) {
            for (std::size_t j = k; j < cols; ++j) {
              if (a[i][j] != 0
                  && (!piv || abs(a[i][j]) < abs(a[piv->first][piv->second]))) {
                piv = {i, j};
              }
            }
          }
          if (!piv) {
            std::sort(diag.begin(), diag.end());
            return diag;
          }
          std::swap(a[k], a[piv->first]);
          for (auto& row : a) {
            std::swap(row[k], row[piv->second]);
          }
          bool clean = true;
          for (std::size_t i = k + 1; i < rows; ++i) {
            Integer q = a[i][k] / a[k][k];
            for (std::size_t j = k; j < cols; ++j) {
              a[i][j] -= q * a[k][j];
            }
            clean = clean && a[i][k] == 0;
          }
          for (std::size_t j = k + 1; j < cols; ++j) {
            Integer q = a[k][j] / a[k][k];
            for (std::size_t i = k; i < rows; ++i) {
              a[i][j] -= q * a[i][k];
            }
            clean = clean && a[k][j] == 0;
          }
          if (!clean) {
            continue;
          }
          // divisibility: fold any non-multiple into row k and retry
          std::optional<std::size_t> bad_row;
          for (std::size_t i = k + 1; i < rows && !bad_row; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
              if (a[i][j] % a[k][k] != 0) {
                bad_row = i;
                break;
              }
            }
          }
          if (!bad_row) {
            break;
          }
          for (std::size_t j = k; j < cols; ++j) {
            a[k][j] += a[*bad_row][j];
          }
        }
        diag.push_back(abs(a[k][k]));
      }
      std::sort(diag.begin(), diag.end());
      return diag;
    }

    // Integer basis of {w : m w = 0} via column reduction tracked on an
    // identity matrix.
    std::vector<std::vector<Integer>> integer_kernel(Matrix m, std::size_t cols) {
      Matrix u(cols, std::vector<Integer>(cols, 0));
      for (std::size_t i = 0; i < cols; ++i) {
        u[i][i] = 1;
      }
      auto col_op = [&](std::size_t dst, std::size_t src, Integer const& q) {
        for (auto& row : m) {
          row[dst] -= q * row[src];
        }
        for (auto& row : u) {
          row[dst] -= q * row[src];
        }
      };
      auto col_swap = [&](std::size_t a, std::size_t b) {
        for (auto& row : m) {
          std::swap(row[a], row[b]);
        }
        for (auto& row : u) {
          std::swap(row[a], row[b]);
        }
      };
      std::size_t pivot_col = 0;
      for (std::size_t r = 0; r < m.size() && pivot_col < cols; ++r) {
        while (true) {
          std::optional<std::size_t> best;
          for (std::size_t j = pivot_col; j < cols; ++j) {
            if (m[r][j] != 0 && (!best || abs(m[r][j]) < abs(m[r][*best]))) {
              best = j;
            }
          }
          if (!best) {
            break;
          }
          col_swap(pivot_col, *best);
          bool done = true;
          for (std::size_t j = pivot_col + 1; j < cols; ++j) {
            if (m[r][j] != 0) {
              col_op(j, pivot_col, m[r][j] / m[r][pivot_col]);
              done = done && m[r][j] == 0;
            }
          }
          if (done) {
            ++pivot_col;
            break;
          }
        }
      }
      std::vector<std::vector<Integer>> basis;
      for (std::size_t j = pivot_col; j < cols; ++j) {
        std::vector<Integer> v(cols);
        for (std::size_t i = 0; i < cols; ++i) {
          v[i] = u[i][j];
        }
        basis.push_back(std::move(v));
      }
      return basis;
    }

    std::size_t occurrences(FreeWord const& w, std::size_t g) {
      return static_cast<std::size_t>(std::count_if(
          w.letters().begin(), w.letters().end(),
          [g](Letter x) { return generator_of(x) == g; }));
    }

    // Canonical cyclic representative up to rotation and inversion, used to
    // drop duplicate relators.
    std::vector<Letter> cyclic_key(FreeWord const& w) {
      std::vector<Letter> best;
      for (FreeWord const& v : {w, w.inverse()}) {
        auto const& l = v.letters();
        for (std::size_t s = 0; s < l.size(); ++s) {
          std::vector<Letter> rot(l.begin() + static_cast<long>(s), l.end());
          rot.insert(rot.end(), l.begin(), l.begin() + static_cast<long>(s));
          if (best.empty() || rot < best) {
            best = std::move(rot);
          }
        }
      }
      return best;
    }

    void tidy(std::vector<FreeWord>& relators) {
      std::vector<std::vector<Letter>> seen;
      std::vector<FreeWord> out;
      for (auto& r : relators) {
        FreeWord c = r.cyclically_reduced();
        if (c.empty()) {
          continue;
        }
        auto key = cyclic_key(c);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
          continue;
        }
        seen.push_back(std::move(key));
        out.push_back(std::move(c));
      }
      relators = std::move(out);
    }

  }  // namespace

  KnotGroup wirtinger(KnotDiagram const& d) {
    KnotGroup g;
    std::size_t const n = d.arc_count();
    g.presentation.generators = n;
    g.degrees.assign(n, 1);
    g.conjugators.assign(n, FreeWord{});
    g.peripheral.meridian = FreeWord::power(d.base_arc(), 1);
    if (d.crossing_count() == 0) {
      return g;
    }
    for (auto const& c : d.crossings()) {
      long e = c.sign;
      FreeWord over = FreeWord::power(d.over_arc(c.id), 1);
      FreeWord r = over.pow(-e) * FreeWord::power(d.in_arc(c.id), 1) * over.pow(e)
                   * FreeWord::power(d.out_arc(c.id), -1);
      g.presentation.relators.push_back(r.cyclically_reduced());
    }
    FreeWord lon;
    auto const& seq = d.under_sequence();
    for (std::size_t k = 0; k < seq.size(); ++k) {
      std::size_t c = seq[k];
      long e = d.crossings()[c].sign;
      FreeWord over_e = FreeWord::power(d.over_arc(c), e);
      if (k + 1 < n) {
        g.conjugators[k + 1] = over_e.inverse() * g.conjugators[k];
      }
      lon *= over_e;
    }
    lon *= FreeWord::power(d.base_arc(), -writhe(d));
    g.peripheral.longitude = lon;
    return g;
  }

  FreeWord TietzeReduction::lift(FreeWord const& w) const {
    std::vector<FreeWord> up;
    up.reserve(kept.size());
    for (std::size_t k : kept) {
      up.push_back(FreeWord::power(k, 1));
    }
    return w.substitute(up);
  }

  TietzeReduction tietze(GroupPresentation const& p, bool drop_redundant) {
    std::size_t const n = p.generators;
    std::vector<FreeWord> rels = p.relators;
    if (drop_redundant && !rels.empty()) {
      rels.pop_back();
    }
    tidy(rels);
    std::vector<FreeWord> images(n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = FreeWord::power(i, 1);
    }
    std::vector<bool> alive(n, true);

    while (true) {
      struct Option {
        std::size_t relator, generator;
        FreeWord value;
        std::size_t cost;
      };
      std::optional<Option> best;
      for (std::size_t r = 0; r < rels.size(); ++r) {
        auto const& l = rels[r].letters();
        for (std::size_t pos = 0; pos < l.size(); ++pos) {
          std::size_t g = generator_of(l[pos]);
          if (g == 0 || occurrences(rels[r], g) != 1) {
            continue;
          }
          FreeWord a(std::span<Letter const>(l.data(), pos));
          FreeWord b(std::span<Letter const>(l.data() + pos + 1, l.size() - pos - 1));
          FreeWord value = (a.inverse() * b.inverse()).pow(exponent_of(l[pos]));
          std::vector<FreeWord> sub(n);
          for (std::size_t i = 0; i < n; ++i) {
            sub[i] = i == g ? value : FreeWord::power(i, 1);
          }
          std::size_t cost = 0;
          for (std::size_t s = 0; s < rels.size(); ++s) {
            if (s != r) {
              cost += rels[s].substitute(sub).cyclically_reduced().size();
            }
          }
          if (!best || cost < best->cost) {
            best = Option{r, g, value, cost};
          }
        }
      }
      if (!best) {
        break;
      }
      std::vector<FreeWord> sub(n);
      for (std::size_t i = 0; i < n; ++i) {
        sub[i] = i == best->generator ? best->value : FreeWord::power(i, 1);
      }
      std::vector<FreeWord> next;
      for (std::size_t s = 0; s < rels.size(); ++s) {
        if (s != best->relator) {
          next.push_back(rels[s].substitute(sub));
        }
      }
      rels = std::move(next);
      tidy(rels);
      for (auto& img : images) {
        img = img.substitute(sub);
      }
      alive[best->generator] = false;
    }

    TietzeReduction t;
    std::vector<FreeWord> rename(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (alive[i]) {
        rename[i] = FreeWord::power(t.kept.size(), 1);
        t.kept.push_back(i);
      }
    }
    t.reduced.generators = t.kept.size();
    for (auto const& r : rels) {
      t.reduced.relators.push_back(r.substitute(rename).cyclically_reduced());
    }
    t.images.reserve(n);
    for (auto const& img : images) {
      t.images.push_back(img.substitute(rename));
    }
    return t;
  }

  KnotGroup reduce_knot_group(KnotGroup const& g, TietzeReduction const& t) {
    KnotGroup r;
    r.presentation = t.reduced;
    r.peripheral.meridian = t.push(g.peripheral.meridian);
    r.peripheral.longitude = t.push(g.peripheral.longitude);
    for (std::size_t k : t.kept) {
      r.degrees.push_back(g.degrees.at(k));
      r.conjugators.push_back(t.push(g.conjugators.at(k)));
    }
    return r;
  }

  AbelianInvariants abelian_invariants(GroupPresentation const& p) {
    AbelianInvariants inv;
    if (p.generators == 0) {
      return inv;
    }
    inv.factors = smith_diagonal(exponent_matrix(p));
    inv.free_rank = p.generators - inv.factors.size();
    return inv;
  }

  std::vector<int> abelianization_degrees(GroupPresentation const& p, FreeWord const& meridian) {
    auto inv = abelian_invariants(p);
    bool cyclic = inv.free_rank == 1
                  && std::all_of(inv.factors.begin(), inv.factors.end(),
                                 [](Integer const& f) { return f == 1; });
    if (!cyclic) {
      throw InvariantError("abelianization is not infinite cyclic");
    }
    auto kernel = integer_kernel(exponent_matrix(p), p.generators);
    if (kernel.size() != 1) {
      throw InvariantError("abelianization is not infinite cyclic");
    }
    auto const& v = kernel.front();
    Integer md = 0;
    for (Letter x : meridian.letters()) {
      md += exponent_of(x) * v[generator_of(x)];
    }
    if (abs(md) != 1) {
      throw InvariantError("meridian does not generate the abelianization");
    }
    std::vector<int> degrees;
    for (auto const& c : v) {
      Integer d = c * md;
      if (abs(d) > std::numeric_limits<int>::max()) {
        throw InvariantError("abelianization degree out of range");
      }
      degrees.push_back(static_cast<int>(d));
    }
    return degrees;
  }

  long abelianize(FreeWord const& w, std::vector<int> const& degrees) {
    return w.exponent_sum(degrees);
  }

  long abelianize(FreeWord const& w, GroupPresentation const& p) {
    if (p.generators == 0) {
      throw InvariantError("abelianization of the trivial group is not infinite cyclic");
    }
    return abelianize(w, abelianization_degrees(p, FreeWord::power(0, 1)));
  }

  void validate(GroupPresentation const& p) {
    for (auto const& r : p.relators) {
      if (r.generator_bound() > p.generators) {
        throw ValidationError("relator uses generator " + std::to_string(r.generator_bound())
                              + " beyond count " + std::to_string(p.generators));
      }
    }
  }

}  // namespace kch
