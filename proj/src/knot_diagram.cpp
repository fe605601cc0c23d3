#include "kch/knot_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "kch/error.hpp"

namespace kch {

  namespace {

    // Darts are (crossing, slot) pairs flattened to 4*crossing + slot.
    struct DartTable {
      std::vector<std::size_t> partner;

      static DartTable build(std::vector<std::array<int, 4>> const& xs) {
        std::map<int, std::vector<std::size_t>> where;
        for (std::size_t c = 0; c < xs.size(); ++c) {
          for (std::size_t s = 0; s < 4; ++s) {
            if (xs[c][s] <= 0) {
              throw ValidationError("edge labels must be positive integers");
            }
            where[xs[c][s]].push_back(4 * c + s);
          }
        }
        DartTable t;
        t.partner.assign(4 * xs.size(), 0);
        for (auto const& [label, darts] : where) {
          if (darts.size() != 2) {
            throw ValidationError("edge label " + std::to_string(label) + " appears "
                                  + std::to_string(darts.size())
                                  + " times; every label must appear exactly twice");
          }
          t.partner[darts[0]] = darts[1];
          t.partner[darts[1]] = darts[0];
        }
        return t;
      }
    };

    // A connected 4-valent map with n vertices is planar iff it has n + 2 faces.
    void check_planar(std::vector<std::array<int, 4>> const& xs, DartTable const& t) {
      std::size_t const n = xs.size();
      std::vector<bool> seen(4 * n, false);
      std::size_t faces = 0;
      for (std::size_t d0 = 0; d0 < 4 * n; ++d0) {
        if (seen[d0]) {
          continue;
        }
        ++faces;
        std::size_t d = d0;
        while (!seen[d]) {
          seen[d] = true;
          std::size_t e = t.partner[d];
          d = 4 * (e / 4) + (e % 4 + 1) % 4;
        }
      }
      if (faces != n + 2) {
        throw ValidationError("diagram is not planar: " + std::to_string(faces)
                              + " faces for " + std::to_string(n) + " crossings");
      }
    }

    class Lexer {
     public:
      explicit Lexer(std::string_view s) : s_(s) {}

      void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }
      bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
      }
      bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
      }
      void expect(char c) {
        if (!peek(c)) {
          throw SyntaxError(std::string("expected '") + c + "' at offset "
                            + std::to_string(pos_));
        }
        ++pos_;
      }
      long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
          ++pos_;
        }
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
        if (pos_ == digits) {
          throw SyntaxError("expected integer at offset " + std::to_string(start));
        }
        return std::stol(std::string(s_.substr(start, pos_ - start)));
      }

     private:
      std::string_view s_;
      std::size_t pos_ = 0;
    };

  }  // namespace

  KnotDiagram::KnotDiagram() : arcs_(1) {}

  KnotDiagram KnotDiagram::from_crossings(std::vector<std::array<int, 4>> const& xs) {
    KnotDiagram d;
    std::size_t const n = xs.size();
    if (n == 0) {
      return d;
    }
    DartTable const table = DartTable::build(xs);
    check_planar(xs, table);

    d.crossings_.resize(n);
    d.in_arc_.assign(n, n);
    d.out_arc_.assign(n, n);
    d.over_arc_.assign(n, n);
    d.arcs_.clear();

    std::vector<bool> visited(4 * n, false);
    std::size_t const start = 0;  // dart (crossing 0, slot 0), taken as entered
    std::size_t entered = start;
    visited[start] = true;
    std::size_t arc = 0;
    d.arcs_.push_back(Arc{{}, 0, 0});
    std::vector<int> signs(n, 0);

    while (true) {
      std::size_t c = entered / 4, s = entered % 4;
      std::size_t exit = 4 * c + (s + 2) % 4;
      if (visited[exit]) {
        throw ValidationError("orientation inconsistent at crossing " + std::to_string(c));
      }
      visited[exit] = true;
      int label = xs[c][exit % 4];
      d.traversal_.push_back(label);
      d.arcs_[arc].edges.push_back(label);

      std::size_t next = table.partner[exit];
      if (next == start) {
        d.arcs_[arc].end_crossing = 0;
        d.in_arc_[0] = arc;
        d.out_arc_[0] = 0;
        d.under_sequence_.push_back(0);
        break;
      }
      if (visited[next]) {
        throw ValidationError("orientation inconsistent at crossing "
                              + std::to_string(next / 4));
      }
      visited[next] = true;
      std::size_t c2 = next / 4, s2 = next % 4;
      switch (s2) {
        case 0: {
          d.arcs_[arc].end_crossing = c2;
          d.in_arc_[c2] = arc;
          d.under_sequence_.push_back(c2);
          ++arc;
          d.arcs_.push_back(Arc{{}, c2, 0});
          d.out_arc_[c2] = arc;
          break;
        }
        case 2:
          throw ValidationError("under-strand at crossing " + std::to_string(c2)
                                + " is entered through its outgoing edge");
        case 1:
          signs[c2] = -1;
          d.over_arc_[c2] = arc;
          break;
        case 3:
          signs[c2] = +1;
          d.over_arc_[c2] = arc;
          break;
      }
      entered = next;
    }

    if (d.traversal_.size() != 2 * n) {
      throw ValidationError("diagram has more than one component (closure is a link)");
    }
    for (std::size_t c = 0; c < n; ++c) {
      d.crossings_[c] = Crossing{c, xs[c], signs[c]};
    }
    for (std::size_t i = 0; i < d.traversal_.size(); ++i) {
      int e = d.traversal_[i];
      if (static_cast<std::size_t>(e) >= d.successor_.size()) {
        d.successor_.resize(static_cast<std::size_t>(e) + 1, 0);
      }
      d.successor_[static_cast<std::size_t>(e)] =
          d.traversal_[(i + 1) % d.traversal_.size()];
    }
    return d;
  }

  int KnotDiagram::successor(int edge) const {
    if (edge <= 0 || static_cast<std::size_t>(edge) >= successor_.size()
        || successor_[static_cast<std::size_t>(edge)] == 0) {
      throw ValidationError("unknown edge label " + std::to_string(edge));
    }
    return successor_[static_cast<std::size_t>(edge)];
  }

  std::vector<std::array<int, 4>> KnotDiagram::raw_crossings() const {
    std::vector<std::array<int, 4>> out;
    out.reserve(crossings_.size());
    for (auto const& x : crossings_) {
      out.push_back(x.edges);
    }
    return out;
  }

  KnotDiagram parse_pd(std::string_view text) {
    Lexer lx(text);
    lx.expect('P');
    lx.expect('D');
    lx.expect('[');
    std::vector<std::array<int, 4>> xs;
    if (!lx.peek(']')) {
      while (true) {
        lx.expect('X');
        lx.expect('[');
        std::array<int, 4> x{};
        for (std::size_t i = 0; i < 4; ++i) {
          if (i > 0) {
            lx.expect(',');
          }
          x[i] = static_cast<int>(lx.integer());
        }
        lx.expect(']');
        xs.push_back(x);
        if (lx.peek(',')) {
          lx.expect(',');
          continue;
        }
        break;
      }
    }
    lx.expect(']');
    if (!lx.at_end()) {
      throw SyntaxError("trailing characters after PD code");
    }
    return KnotDiagram::from_crossings(xs);
  }

  std::string render_pd(KnotDiagram const& d) {
    std::ostringstream os;
    os << "PD[";
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
      auto const& e = d.crossings()[c].edges;
      os << (c ? "," : "") << "X[" << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3]
         << ']';
    }
    os << ']';
    return os.str();
  }

  KnotDiagram parse_gauss(std::string_view text) {
    struct Passage {
      bool over;
      long label;
      int sign;
    };
    std::vector<Passage> seq;
    std::size_t i = 0;
    auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
    while (i < text.size()) {
      if (is_sep(text[i])) {
        ++i;
        continue;
      }
      char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
      if (kind != 'O' && kind != 'U') {
        throw SyntaxError("Gauss token must start with O or U at offset " + std::to_string(i));
      }
      ++i;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (i == start || i >= text.size() || (text[i] != '+' && text[i] != '-')) {
        throw SyntaxError("malformed Gauss token at offset " + std::to_string(start - 1));
      }
      long label = std::stol(std::string(text.substr(start, i - start)));
      int sign = text[i] == '+' ? 1 : -1;
      ++i;
      seq.push_back({kind == 'O', label, sign});
    }
    if (seq.empty()) {
      return KnotDiagram();
    }
    std::size_t const m = seq.size();
    std::map<long, std::array<long, 2>> pos;  // label -> (over position, under position)
    std::map<long, int> sign_of;
    for (std::size_t k = 0; k < m; ++k) {
      auto [it, fresh] = pos.try_emplace(seq[k].label, std::array<long, 2>{-1, -1});
      long& slot = it->second[seq[k].over ? 0 : 1];
      if (slot != -1) {
        throw ValidationError("crossing " + std::to_string(seq[k].label)
                              + " has two passages of the same kind");
      }
      slot = static_cast<long>(k);
      auto [sit, sfresh] = sign_of.try_emplace(seq[k].label, seq[k].sign);
      if (sit->second != seq[k].sign) {
        throw ValidationError("crossing " + std::to_string(seq[k].label)
                              + " has conflicting signs");
      }
    }
    std::vector<std::array<int, 4>> xs;
    auto in_edge = [&](long k) { return static_cast<int>(k + 1); };
    auto out_edge = [&](long k) { return static_cast<int>((k + 1) % static_cast<long>(m) + 1); };
    for (auto const& [label, p] : pos) {
      if (p[0] < 0 || p[1] < 0) {
        throw ValidationError("crossing " + std::to_string(label)
                              + " needs one over and one under passage");
      }
      int ui = in_edge(p[1]), uo = out_edge(p[1]), oi = in_edge(p[0]), oo = out_edge(p[0]);
      if (sign_of[label] > 0) {
        xs.push_back({ui, oo, uo, oi});
      } else {
        xs.push_back({ui, oi, uo, oo});
      }
    }
    return KnotDiagram::from_crossings(xs);
  }

  BraidWord parse_braid(std::string_view text, std::size_t strands) {
    BraidWord b;
    std::istringstream is{std::string(text)};
    std::string tok;
    std::size_t max_index = 0;
    while (is >> tok) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(tok, &used);
      } catch (std::exception const&) {
        throw SyntaxError("braid letter '" + tok + "' is not an integer");
      }
      if (used != tok.size()) {
        throw SyntaxError("braid letter '" + tok + "' is not an integer");
      }
      if (v == 0) {
        throw ValidationError("braid generator index 0 does not exist");
      }
      b.letters.push_back(static_cast<int>(v));
      max_index = std::max(max_index, static_cast<std::size_t>(std::labs(v)));
    }
    b.strands = strands == 0 ? max_index + 1 : strands;
    if (max_index + 1 > b.strands) {
      throw ValidationError("braid generator index exceeds strand count");
    }
    // closure must be a single component: the permutation is an n-cycle
    std::vector<std::size_t> perm(b.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int x : b.letters) {
      std::size_t i = static_cast<std::size_t>(std::abs(x)) - 1;
      std::swap(perm[i], perm[i + 1]);
    }
    std::size_t len = 0, p = 0;
    do {
      p = perm[p];
      ++len;
    } while (p != 0);
    if (len != b.strands) {
      throw ValidationError("braid closure has more than one component");
    }
    return b;
  }

  KnotDiagram braid_closure(BraidWord const& b) {
    // Strands run downwards. Labels are provisional and glued at the end.
    std::size_t const n = b.strands;
    int next_label = 1;
    std::vector<int> top(n), current(n);
    for (std::size_t p = 0; p < n; ++p) {
      top[p] = current[p] = next_label++;
    }
    std::vector<std::array<int, 4>> xs;
    for (int x : b.letters) {
      std::size_t i = static_cast<std::size_t>(std::abs(x)) - 1;
      if (i + 1 >= n) {
        throw ValidationError("braid generator index exceeds strand count");
      }
      int a = current[i], bb = current[i + 1];
      int a_out = next_label++, b_out = next_label++;
      // strand at i moves to i+1 and vice versa
      if (x > 0) {
        xs.push_back({a, b_out, a_out, bb});
      } else {
        xs.push_back({bb, a, b_out, a_out});
      }
      current[i] = b_out;
      current[i + 1] = a_out;
    }
    if (xs.empty()) {
      if (n != 1) {
        throw ValidationError("braid closure has more than one component");
      }
      return KnotDiagram();
    }
    // glue the bottom of position p to its top
    std::vector<int> rename(static_cast<std::size_t>(next_label), 0);
    std::iota(rename.begin(), rename.end(), 0);
    for (std::size_t p = 0; p < n; ++p) {
      rename[static_cast<std::size_t>(current[p])] = top[p];
    }
    // compact to 1..2k
    std::map<int, int> compact;
    for (auto& x : xs) {
      for (int& e : x) {
        e = rename[static_cast<std::size_t>(e)];
        compact.emplace(e, 0);
      }
    }
    int k = 1;
    for (auto& [label, v] : compact) {
      v = k++;
    }
    for (auto& x : xs) {
      for (int& e : x) {
        e = compact[e];
      }
    }
    return KnotDiagram::from_crossings(xs);
  }

  KnotDiagram mirror(KnotDiagram const& d) {
    std::vector<std::array<int, 4>> xs;
    for (auto const& x : d.crossings()) {
      auto const& e = x.edges;
      // the incoming over edge becomes the incoming under edge
      if (x.sign > 0) {
        xs.push_back({e[3], e[0], e[1], e[2]});
      } else {
        xs.push_back({e[1], e[2], e[3], e[0]});
      }
    }
    return xs.empty() ? KnotDiagram() : KnotDiagram::from_crossings(xs);
  }

  KnotDiagram reflect(KnotDiagram const& d) {
    std::vector<std::array<int, 4>> xs;
    for (auto const& x : d.crossings()) {
      auto const& e = x.edges;
      xs.push_back({e[0], e[3], e[2], e[1]});
    }
    return xs.empty() ? KnotDiagram() : KnotDiagram::from_crossings(xs);
  }

  int writhe(KnotDiagram const& d) {
    int w = 0;
    for (auto const& x : d.crossings()) {
      w += x.sign;
    }
    return w;
  }

}  // namespace kch
