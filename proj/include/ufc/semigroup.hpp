#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ufc/dfa.hpp"
#include "ufc/error.hpp"
#include "ufc/minimize.hpp"
#include "ufc/transformation.hpp"

namespace ufc {

inline constexpr std::size_t builtin_closure_cap = 2'000'000;

/// Closure cap: UFC_MAX_CLOSURE when set to a positive integer, else 2,000,000.
inline std::size_t default_closure_cap() {
  if (const char* env = std::getenv("UFC_MAX_CLOSURE")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return builtin_closure_cap;
}

struct ClosureReport {
  std::size_t size = 0;
  bool exceeded_cap = false;
  std::size_t cap = 0;
  /// Filled only on request, in breadth-first (word length) order.
  std::vector<Transformation> elements;
};

namespace detail {

// Breadth-first closure of a seed set under right multiplication by the
// generators. Elements live in one flat byte buffer; the hash set stores
// indices into it.
class CayleyClosure {
 public:
  CayleyClosure(std::size_t degree, std::span<const Transformation> generators, bool seed_identity, std::size_t cap,
                bool record_edges)
      : degree_(degree),
        gen_count_(generators.size()),
        index_(16, Hash{&store_, &degree_}, Equal{&store_, &degree_}) {
    for (const auto& g : generators) {
      if (g.degree() != degree_)
        throw degree_mismatch("closure: generator degrees differ (" + std::to_string(g.degree()) + " vs " +
                              std::to_string(degree_) + ")");
    }
    if (degree_ > 256) throw capacity_error("closure: degree " + std::to_string(degree_) + " exceeds 256");

    std::string gens;
    for (const auto& g : generators)
      for (auto x : g.images()) gens.push_back(static_cast<char>(x));

    if (seed_identity) {
      std::string id(degree_, '\0');
      for (std::size_t q = 0; q < degree_; ++q) id[q] = static_cast<char>(q);
      if (add(id, cap) == npos) return;
    } else {
      for (std::size_t g = 0; g < gen_count_; ++g)
        if (add(std::string_view(gens).substr(g * degree_, degree_), cap) == npos) return;
    }

    std::string candidate(degree_, '\0');
    for (std::size_t j = 0; j < size(); ++j) {
      for (std::size_t g = 0; g < gen_count_; ++g) {
        const char* gen = gens.data() + g * degree_;
        for (std::size_t q = 0; q < degree_; ++q)
          candidate[q] = gen[static_cast<unsigned char>(store_[j * degree_ + q])];
        const std::size_t target = add(candidate, cap);
        if (target == npos) return;
        if (record_edges) edges_.push_back(static_cast<std::uint32_t>(target));
      }
    }
  }

  CayleyClosure(const CayleyClosure&) = delete;
  CayleyClosure& operator=(const CayleyClosure&) = delete;

  std::size_t size() const { return count_; }
  bool exceeded_cap() const { return exceeded_; }
  std::size_t degree() const { return degree_; }

  std::uint32_t image(std::size_t element, std::size_t q) const {
    return static_cast<unsigned char>(store_[element * degree_ + q]);
  }

  Transformation element(std::size_t j) const {
    std::vector<std::uint32_t> images(degree_);
    for (std::size_t q = 0; q < degree_; ++q) images[q] = image(j, q);
    return Transformation(std::move(images));
  }

  /// Index of element * generator; requires record_edges.
  std::size_t edge(std::size_t element, std::size_t generator) const { return edges_[element * gen_count_ + generator]; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  struct Hash {
    const std::string* store;
    const std::size_t* degree;
    std::size_t operator()(std::uint32_t j) const noexcept {
      return std::hash<std::string_view>{}(std::string_view(*store).substr(j * *degree, *degree));
    }
  };
  struct Equal {
    const std::string* store;
    const std::size_t* degree;
    bool operator()(std::uint32_t x, std::uint32_t y) const noexcept {
      const std::string_view s(*store);
      return s.substr(x * *degree, *degree) == s.substr(y * *degree, *degree);
    }
  };

  // Returns the element's index, or npos once the cap is exceeded.
  std::size_t add(std::string_view images, std::size_t cap) {
    store_.append(images);
    auto [it, inserted] = index_.insert(static_cast<std::uint32_t>(count_));
    if (!inserted) {
      store_.resize(store_.size() - degree_);
      return *it;
    }
    if (count_ >= cap) {
      index_.erase(it);
      store_.resize(store_.size() - degree_);
      exceeded_ = true;
      return npos;
    }
    return count_++;
  }

  std::size_t degree_;
  std::size_t gen_count_;
  std::string store_;
  std::size_t count_ = 0;
  bool exceeded_ = false;
  std::unordered_set<std::uint32_t, Hash, Equal> index_;
  std::vector<std::uint32_t> edges_;
};

}  // namespace detail

/// Transition semigroup generated by `generators`: every transformation
/// induced by a non-empty word. The identity is counted only when some
/// word induces it.
inline ClosureReport semigroup_closure(std::span<const Transformation> generators,
                                       std::size_t cap = default_closure_cap(), bool keep_elements = false) {
  detail::CayleyClosure closure(generators.empty() ? 0 : generators.front().degree(), generators, false, cap, false);
  ClosureReport report{closure.size(), closure.exceeded_cap(), cap, {}};
  if (keep_elements) {
    report.elements.reserve(closure.size());
    for (std::size_t j = 0; j < closure.size(); ++j) report.elements.push_back(closure.element(j));
  }
  return report;
}

/// Size of the syntactic semigroup of L(d), computed as the transition
/// semigroup of d, which must be minimal.
inline ClosureReport transition_semigroup_size(const Dfa& d, std::size_t cap = default_closure_cap(),
                                               bool keep_elements = false) {
  if (!is_minimal(d)) throw precondition_error("transition_semigroup_size: DFA must be minimal and complete");
  const auto gens = letter_transformations(d);
  return semigroup_closure(gens, cap, keep_elements);
}

}  // namespace ufc
