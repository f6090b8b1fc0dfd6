#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dsr/degseq.hpp"

namespace dsr {

/// Interval bounds sigma <= eps(X, Y) <= tau, where eps(X, Y) counts stubs of
/// X whose other end lies in Y, over unions of whole degree classes.
///
/// Every pair of disjoint class unions and every diagonal (X, X) is stored, so
/// any role partition a rule might name is covered. Pairs with overlap are
/// decomposed into stored terms. eps is symmetric on disjoint pairs.
class BoundState {
 public:
  /// Largest number of distinct degrees supported (storage is 4^K).
  static constexpr int kMaxClasses = 10;

  /// Seeds the per-vertex caps and chi floors. Throws std::length_error past
  /// kMaxClasses.
  explicit BoundState(const SequenceProfile& profile);

  const SequenceProfile& profile() const { return *profile_; }
  bool contradiction() const { return contradiction_; }

  /// Best known bounds on eps(x, y) for arbitrary x, y (empty gives 0).
  int sigma(ClassSet x, ClassSet y) const;
  int tau(ClassSet x, ClassSet y) const;

  /// Tighten eps(x, y). Overlapping pairs become linear constraints over the
  /// stored terms. Return true if anything changed.
  bool raise_sigma(ClassSet x, ClassSet y, int value);
  bool lower_tau(ClassSet x, ClassSet y, int value);

  /// Runs totals, additivity, diagonal splitting and parity to a fixed point.
  /// Never lowers a sigma or raises a tau. Returns true if anything changed.
  bool propagate();

 private:
  struct Term {
    std::uint32_t key;
    int coef;
  };
  struct Linear {
    std::vector<Term> terms;
    int lo;
    int hi;
  };

  std::uint32_t key(std::uint64_t x, std::uint64_t y) const;
  std::vector<Term> decompose(ClassSet x, ClassSet y) const;
  bool set_lo(std::uint32_t k, int v);
  bool set_hi(std::uint32_t k, int v);
  bool sum3(std::uint32_t a, std::uint32_t b, std::uint32_t c);
  bool diag_split(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d);
  bool linear(Linear& lin);
  bool is_diag(std::uint32_t k) const { return (k >> bits_) == (k & mask_); }

  const SequenceProfile* profile_;
  int bits_;
  std::uint32_t mask_;
  std::vector<int> lo_, hi_;
  std::vector<Linear> linears_;
  std::map<std::vector<std::uint32_t>, std::size_t> linear_index_;
  bool contradiction_ = false;
};

}  // namespace dsr
