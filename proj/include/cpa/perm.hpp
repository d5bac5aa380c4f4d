#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "cpa/errors.hpp"

namespace cpa {

// A permutation of {1..n}, stored in one-line notation.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> values); // validates rearrangement of 1..n

    // Order-isomorphic relabeling of distinct integers onto {1..k}.
    static Permutation reduce(std::span<const int> seq);

    // Accepts "2 1 4 3" or "2,1,4,3".
    static Permutation parse(const std::string& one_line);

    int size() const { return static_cast<int>(v_.size()); }
    int operator[](int pos1) const { return v_[pos1 - 1]; } // 1-based
    const std::vector<int>& values() const { return v_; }

    Permutation reversed() const;
    Permutation complemented() const;

    std::string str() const; // "2 1 4 3"

    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> v_;
};

// 1-based start positions i with reduce(host[i..i+|pattern|-1]) == pattern.
std::vector<int> occurrences(const Permutation& host, const Permutation& pattern);

// Nonempty set of patterns, each of length >= 2, none consecutively
// containing another.  Stored sorted for deterministic output.
class PatternSet {
  public:
    explicit PatternSet(std::vector<Permutation> patterns);

    // "[[1,2,3],[3,2,1]]" (JSON) or a single one-line permutation.
    static PatternSet parse(const std::string& text);

    int size() const { return static_cast<int>(pats_.size()); }
    const Permutation& operator[](int i) const { return pats_[i]; }
    const std::vector<Permutation>& patterns() const { return pats_; }
    int min_len() const;
    int max_len() const;

    std::string str() const; // "{1 2 3, 3 2 1}"

    auto operator<=>(const PatternSet&) const = default;

  private:
    std::vector<Permutation> pats_;
};

} // namespace cpa
