#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "catcheck/report.hpp"

namespace catcheck {

  // A word on the letters 0..n-1 in which every letter occurs once. The
  // operation it names sends (x_0, ..., x_{n-1}) to x_{w_0} ⋯ x_{w_{n-1}}.
  using Word = std::vector<std::size_t>;

  // An operad in finite sets, stored up to a maximal arity N. Elements of
  // O(n) are numbered from 0 and presented by words; Assoc keeps every
  // word (linear orders), Comm identifies them all (one operation per
  // arity). Composition and the symmetric action are tabulated at
  // construction; asking for anything above N throws BoundError.
  class SetOperad {
   public:
    static SetOperad comm(std::size_t max_arity = 4);
    static SetOperad assoc(std::size_t max_arity = 4);

    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }
    [[nodiscard]] std::size_t max_arity() const noexcept {
      return _max_arity;
    }
    [[nodiscard]] bool is_commutative() const noexcept {
      return _commutative;
    }

    [[nodiscard]] std::size_t size(std::size_t n) const;
    [[nodiscard]] Word const& word(std::size_t n, std::size_t element) const;
    [[nodiscard]] std::size_t index(Word const& w) const;
    // The identity operation in O(1).
    [[nodiscard]] std::size_t unit() const noexcept {
      return 0;
    }

    struct Entry {
      std::size_t arity;
      std::size_t element;
    };

    // γ(θ; φ_1, ..., φ_n) with θ ∈ O(n). The result lies in O(Σ arities);
    // its letters number the inputs of φ_1 first, then φ_2, and so on.
    [[nodiscard]] Entry compose(Entry outer, std::vector<Entry> const& inner) const;

    // Renames letter i of θ to perm[i].
    [[nodiscard]] std::size_t relabel(std::size_t                     n,
                                      std::size_t                     element,
                                      std::vector<std::size_t> const& perm) const;

    // Unit, associativity and both equivariance laws on every tuple whose
    // total arity is at most N, read from the stored tables.
    [[nodiscard]] CheckReport check_laws() const;

   private:
    SetOperad(std::string name, std::size_t max_arity, bool commutative);

    [[nodiscard]] Word normalize(Word w) const;
    [[nodiscard]] Entry compose_rule(Entry outer, std::vector<Entry> const& inner) const;
    void               require_arity(std::size_t n) const;

    std::string                                       _name;
    std::size_t                                       _max_arity;
    bool                                              _commutative;
    std::vector<std::vector<Word>>                    _elements;
    std::map<Word, std::size_t>                       _index;
    // [n][element][permutation index] → element
    std::vector<std::vector<std::vector<std::size_t>>> _action;
    std::vector<std::vector<Word>>                    _permutations;
    std::map<std::vector<std::size_t>, std::size_t>   _composition;
  };

  // All permutations of 0..n-1 in lexicographic order.
  [[nodiscard]] std::vector<Word> all_permutations(std::size_t n);

}  // namespace catcheck
