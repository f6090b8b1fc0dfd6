#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dsr {

inline constexpr int kMaxVertices = 64;

/// Sorted (non-descending) multiset of vertex degrees.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  /// Sorts the input. Throws DegreeOutOfRange if any entry is negative or >= n.
  explicit DegreeSequence(std::vector<int> degrees);

  /// Accepts comma/whitespace separated integers, or the compact single-digit
  /// notation ("2333555556"). Square brackets are ignored.
  static DegreeSequence parse(std::string_view text);

  int n() const { return static_cast<int>(degrees_.size()); }
  /// Sum of degrees; twice the edge count for a graphic sequence.
  int m2() const { return m2_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int operator[](std::size_t i) const { return degrees_[i]; }
  int count(int d) const;
  bool contains(int d) const { return count(d) > 0; }
  bool empty() const { return degrees_.empty(); }

  /// Canonical text form: ascending, comma separated, no spaces.
  std::string to_string() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence& a, const DegreeSequence& b) {
    return a.degrees_ <=> b.degrees_;
  }

 private:
  std::vector<int> degrees_;
  int m2_ = 0;
};

/// Classical summation-inequality (Erdős–Gallai) test.
bool is_graphic(const DegreeSequence& s);
bool is_graphic(std::vector<int> degrees);

/// [n-1-d_n, ..., n-1-d_1].
DegreeSequence complement_sequence(const DegreeSequence& s);

struct DegreeClass {
  int degree = 0;
  int count = 0;
  bool is_bad = false;   // degree-1 present
  bool is_dull = false;  // degree+1 present
};

std::vector<DegreeClass> classify_degrees(const DegreeSequence& s);

/// True iff no two entries differ by exactly one.
bool all_degrees_good(const DegreeSequence& s);

/// Set of degree classes, indexed by position in ascending distinct-degree order.
struct ClassSet {
  std::uint64_t bits = 0;

  static ClassSet single(int c) { return {std::uint64_t{1} << c}; }
  bool empty() const { return bits == 0; }
  bool contains(int c) const { return (bits >> c) & 1U; }
  int count() const { return std::popcount(bits); }
  bool intersects(ClassSet o) const { return (bits & o.bits) != 0; }
  bool subset_of(ClassSet o) const { return (bits & ~o.bits) == 0; }

  friend ClassSet operator|(ClassSet a, ClassSet b) { return {a.bits | b.bits}; }
  friend ClassSet operator&(ClassSet a, ClassSet b) { return {a.bits & b.bits}; }
  friend ClassSet operator-(ClassSet a, ClassSet b) { return {a.bits & ~b.bits}; }
  friend bool operator==(ClassSet, ClassSet) = default;
  friend auto operator<=>(ClassSet a, ClassSet b) { return a.bits <=> b.bits; }

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits; b != 0; b &= b - 1) f(std::countr_zero(b));
  }
};

/// Degree-class structure of a sequence plus the counting helpers
/// (n_i, m_i, kappa, xi, chi, neighbourliness) over unions of classes.
class SequenceProfile {
 public:
  explicit SequenceProfile(DegreeSequence s);

  const DegreeSequence& sequence() const { return seq_; }
  int n() const { return seq_.n(); }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const DegreeClass& cls(int c) const { return classes_[c]; }
  int degree_of(int c) const { return classes_[c].degree; }
  std::optional<int> class_of(int degree) const;

  ClassSet all() const { return all_; }
  ClassSet bad() const { return bad_; }
  ClassSet dull() const { return dull_; }
  ClassSet good() const { return all_ - bad_; }
  ClassSet complement(ClassSet s) const { return all_ - s; }
  ClassSet of_degree(int d) const;

  template <class Pred>
  ClassSet select(Pred&& pred) const {
    ClassSet out;
    for (int c = 0; c < num_classes(); ++c)
      if (pred(classes_[c].degree)) out.bits |= std::uint64_t{1} << c;
    return out;
  }

  int size(ClassSet s) const;
  int stubs(ClassSet s) const;
  /// Number of members of s with degree d.
  int kappa(ClassSet s, int d) const;
  /// n - 1 - n_i.
  int xi(ClassSet i) const { return n() - 1 - size(i); }
  /// m_j - (n - 1 - n_i) n_j.
  int chi(ClassSet i, ClassSet j) const { return stubs(j) - xi(i) * size(j); }
  int min_degree(ClassSet s) const;
  int max_degree(ClassSet s) const;
  bool is_unique_class(int c) const { return classes_[c].count == 1; }

  /// No vertex outside s has degree one less than a member of s.
  bool neighbourly(ClassSet s) const;
  /// s contains a vertex v of degree d and no vertex outside s has degree one
  /// less than a member of s - v.
  bool d_neighbourly(ClassSet s, int d) const;

 private:
  DegreeSequence seq_;
  std::vector<DegreeClass> classes_;
  std::vector<int> class_index_;  // degree -> class or -1
  ClassSet all_, bad_, dull_;
};

/// Named roles (unions of whole degree classes) over a sequence, with the
/// per-role and cross-role quantities used by the rule catalogue.
class PartitionView {
 public:
  explicit PartitionView(const SequenceProfile& profile) : profile_(&profile) {}

  /// Roles must be pairwise disjoint; throws std::invalid_argument otherwise.
  void assign(const std::string& role, ClassSet classes);
  ClassSet role(const std::string& name) const;
  bool has(const std::string& name) const { return roles_.contains(name); }
  const std::map<std::string, ClassSet>& roles() const { return roles_; }
  const SequenceProfile& profile() const { return *profile_; }

  int n_i(const std::string& r) const { return profile_->size(role(r)); }
  int m_i(const std::string& r) const { return profile_->stubs(role(r)); }
  int xi(const std::string& r) const { return profile_->xi(role(r)); }
  int chi(const std::string& i, const std::string& j) const {
    return profile_->chi(role(i), role(j));
  }
  /// delta_i^j: 1 iff the roles intersect (a role may be compared with B or D).
  int delta(ClassSet i, ClassSet j) const { return i.intersects(j) ? 1 : 0; }
  int nu(const std::string& r) const { return profile_->neighbourly(role(r)) ? 1 : 0; }
  int mu(const std::string& r) const {
    return profile_->neighbourly(profile_->complement(role(r))) ? 1 : 0;
  }
  bool is_neighbourly(const std::string& r) const { return nu(r) == 1; }
  bool is_d_neighbourly(const std::string& r, int d) const {
    return profile_->d_neighbourly(role(r), d);
  }

 private:
  const SequenceProfile* profile_;
  std::map<std::string, ClassSet> roles_;
};

}  // namespace dsr
