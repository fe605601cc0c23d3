#include "kch/word_backend.hpp"

#include <algorithm>
#include <map>

#include "kch/error.hpp"

namespace kch {

  std::string to_string(BackendKind k) {
    switch (k) {
      case BackendKind::FreeReduce:
        return "free";
      case BackendKind::KnuthBendixBounded:
        return "kb";
      case BackendKind::TorusKnotNormalForm:
        return "torus";
      case BackendKind::FiniteQuotientSeparator:
        return "quotient";
    }
    return "?";
  }

  BackendKind backend_kind_from_string(std::string const& s) {
    static std::map<std::string, BackendKind> const names = {
        {"free", BackendKind::FreeReduce},
        {"kb", BackendKind::KnuthBendixBounded},
        {"torus", BackendKind::TorusKnotNormalForm},
        {"quotient", BackendKind::FiniteQuotientSeparator},
        {"FreeReduce", BackendKind::FreeReduce},
        {"KnuthBendixBounded", BackendKind::KnuthBendixBounded},
        {"TorusKnotNormalForm", BackendKind::TorusKnotNormalForm},
        {"FiniteQuotientSeparator", BackendKind::FiniteQuotientSeparator},
    };
    auto it = names.find(s);
    if (it == names.end()) {
      throw ValidationError("unknown backend '" + s + "' (free, kb, torus, quotient)");
    }
    return it->second;
  }

  std::string to_string(Answer a) {
    switch (a) {
      case Answer::Yes:
        return "yes";
      case Answer::No:
        return "no";
      case Answer::Unknown:
        return "unknown";
    }
    return "?";
  }

  std::string to_string(Certificate c) {
    switch (c) {
      case Certificate::None:
        return "none";
      case Certificate::FreeReduction:
        return "free_reduction";
      case Certificate::NormalForm:
        return "normal_form";
      case Certificate::Abelianization:
        return "abelianization";
      case Certificate::FiniteQuotient:
        return "finite_quotient";
    }
    return "?";
  }

  WordBackend::WordBackend(GroupPresentation p, BackendOptions options)
      : presentation_(std::move(p)), options_(options) {
    validate(presentation_);
    if (presentation_.generators > 0) {
      try {
        degrees_ = abelianization_degrees(presentation_, FreeWord::power(0, 1));
      } catch (InvariantError const&) {
        degrees_.reset();
      }
    }
    bool const no_relators = std::all_of(presentation_.relators.begin(),
                                         presentation_.relators.end(),
                                         [](FreeWord const& r) { return r.empty(); });
    if (options_.kind == BackendKind::FreeReduce
        || options_.kind == BackendKind::FiniteQuotientSeparator) {
      tietze_ = tietze(presentation_, false);
      decides_ = no_relators;
      method_ = "free";
      return;
    }

    tietze_ = tietze(presentation_, false);
    GroupPresentation const& red = tietze_.reduced;
    if (red.relators.empty()) {
      decides_ = true;
      method_ = "free";
      return;
    }

    // one relator may carry the group; the rest must then vanish
    auto carries = [&](auto const& structure) {
      for (auto const& r : red.relators) {
        if (!structure.normalize(r).empty()) {
          return false;
        }
      }
      return true;
    };

    if (options_.kind == BackendKind::TorusKnotNormalForm) {
      if (red.generators == 2) {
        for (auto const& r : red.relators) {
          auto t = TorusStructure::detect(r);
          if (t && carries(*t)) {
            torus_ = std::move(t);
            decides_ = true;
            method_ = "torus";
            return;
          }
        }
      }
      throw BackendError("presentation is not recognised as a torus knot group");
    }

    if (red.generators == 2 && degrees_) {
      for (auto const& r : red.relators) {
        auto f = FibredStructure::detect(r, options_.budget);
        if (f && carries(*f)) {
          fibred_ = std::move(f);
          decides_ = true;
          method_ = "fibred";
          return;
        }
      }
    }

    RewritingSystem sys(red.generators, WordOrder::shortlex());
    for (auto const& r : red.relators) {
      sys.add_equation(std::span<Letter const>(r.letters()), std::span<Letter const>{});
    }
    decides_ = knuth_bendix(sys, options_.budget);
    rewriting_ = std::move(sys);
    method_ = "shortlex";
  }

  FreeWord WordBackend::reduce_internal(FreeWord const& w) const {
    if (fibred_) {
      return fibred_->normalize(w);
    }
    if (torus_) {
      return torus_->normalize(w);
    }
    if (rewriting_) {
      return rewriting_->reduce(w);
    }
    return w;
  }

  FreeWord WordBackend::reduce(FreeWord const& w) const {
    if (w.generator_bound() > presentation_.generators) {
      throw ValidationError("word uses a generator outside the presentation");
    }
    if (options_.kind == BackendKind::FreeReduce
        || options_.kind == BackendKind::FiniteQuotientSeparator) {
      return w;
    }
    return tietze_.lift(reduce_internal(tietze_.push(w)));
  }

  FreeWord WordBackend::normalize(FreeWord const& w) const {
    if (!decides_) {
      throw BackendError("no complete normal form is available for this presentation (method "
                         + method_ + ")");
    }
    return reduce(w);
  }

  long WordBackend::degree(FreeWord const& w) const {
    if (!degrees_) {
      throw InvariantError("abelianization is not infinite cyclic");
    }
    return abelianize(w, *degrees_);
  }

  std::vector<int> const& WordBackend::degrees() const {
    if (!degrees_) {
      throw InvariantError("abelianization is not infinite cyclic");
    }
    return *degrees_;
  }

  std::vector<PermutationRep> const& WordBackend::quotients() const {
    std::call_once(quotients_once_, [this] {
      if (options_.quotient_degree > 0 && options_.kind != BackendKind::FreeReduce) {
        // searched on the reduced presentation, pulled back to the input generators
        for (auto const& q : finite_quotients(tietze_.reduced, options_.quotient_degree)) {
          PermutationRep lifted{q.degree, {}};
          for (auto const& image : tietze_.images) {
            lifted.images.push_back(q.evaluate(image));
          }
          quotients_.push_back(std::move(lifted));
        }
      }
    });
    return quotients_;
  }

  EqualityResult WordBackend::equal(FreeWord const& a, FreeWord const& b) const {
    if (a == b) {
      return {Answer::Yes, Certificate::FreeReduction, 0};
    }
    if (degrees_ && degree(a) != degree(b)) {
      return {Answer::No, Certificate::Abelianization, 0};
    }
    FreeWord ra = reduce(a), rb = reduce(b);
    if (ra == rb) {
      return {Answer::Yes, Certificate::NormalForm, 0};
    }
    if (decides_) {
      return {Answer::No, Certificate::NormalForm, 0};
    }
    auto const& qs = quotients();
    for (std::size_t i = 0; i < qs.size(); ++i) {
      if (qs[i].evaluate(a) != qs[i].evaluate(b)) {
        return {Answer::No, Certificate::FiniteQuotient, i};
      }
    }
    return {Answer::Unknown, Certificate::None, 0};
  }

  std::shared_ptr<WordBackend const> make_backend(GroupPresentation const& p,
                                                  BackendOptions const& options) {
    struct Entry {
      GroupPresentation p;
      BackendOptions o;
      std::shared_ptr<WordBackend const> b;
    };
    static std::mutex mutex;
    static std::vector<Entry> cache;
    {
      std::lock_guard lock(mutex);
      for (auto const& e : cache) {
        if (e.o == options && e.p == p) {
          return e.b;
        }
      }
    }
    auto b = std::make_shared<WordBackend const>(p, options);
    std::lock_guard lock(mutex);
    cache.push_back({p, options, b});
    return b;
  }

}  // namespace kch
