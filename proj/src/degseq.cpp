#include "dsr/degseq.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "dsr/error.hpp"

namespace dsr {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.size() > static_cast<std::size_t>(kMaxVertices))
    throw Error(ErrorCode::DegreeOutOfRange, "more than 64 vertices");
  std::sort(degrees_.begin(), degrees_.end());
  for (int d : degrees_) {
    if (d < 0 || d >= n())
      throw Error(ErrorCode::DegreeOutOfRange,
                  "degree " + std::to_string(d) + " outside [0, " + std::to_string(n() - 1) + "]");
  }
  m2_ = std::accumulate(degrees_.begin(), degrees_.end(), 0);
}

DegreeSequence DegreeSequence::parse(std::string_view text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != '[' && ch != ']') cleaned.push_back(ch);

  std::vector<std::string> tokens;
  std::string cur;
  bool saw_separator = false;
  for (char ch : cleaned) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      saw_separator = true;
      if (!cur.empty()) tokens.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) throw Error(ErrorCode::MalformedToken, "empty sequence");

  // Compact notation: a single run of digits longer than one character.
  if (!saw_separator && tokens.size() == 1 && tokens[0].size() > 1) {
    std::vector<int> out;
    for (char ch : tokens[0]) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw Error(ErrorCode::MalformedToken, "'" + tokens[0] + "'");
      out.push_back(ch - '0');
    }
    return DegreeSequence(std::move(out));
  }

  std::vector<int> out;
  for (const auto& tok : tokens) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
      throw Error(ErrorCode::MalformedToken, "'" + tok + "'");
    out.push_back(value);
  }
  return DegreeSequence(std::move(out));
}

int DegreeSequence::count(int d) const {
  auto [lo, hi] = std::equal_range(degrees_.begin(), degrees_.end(), d);
  return static_cast<int>(hi - lo);
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(degrees_[i]);
  }
  return out;
}

bool is_graphic(std::vector<int> d) {
  const int n = static_cast<int>(d.size());
  long long sum = 0;
  for (int x : d) {
    if (x < 0 || x >= std::max(n, 1)) return false;
    sum += x;
  }
  if (sum % 2 != 0) return false;
  std::sort(d.begin(), d.end(), std::greater<>());
  long long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += d[k - 1];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(d[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_graphic(const DegreeSequence& s) { return is_graphic(s.degrees()); }

DegreeSequence complement_sequence(const DegreeSequence& s) {
  std::vector<int> out;
  out.reserve(s.degrees().size());
  for (int d : s.degrees()) out.push_back(s.n() - 1 - d);
  return DegreeSequence(std::move(out));
}

std::vector<DegreeClass> classify_degrees(const DegreeSequence& s) {
  std::vector<DegreeClass> out;
  for (int d : s.degrees()) {
    if (!out.empty() && out.back().degree == d) {
      ++out.back().count;
    } else {
      out.push_back({d, 1, false, false});
    }
  }
  for (auto& c : out) {
    c.is_bad = s.contains(c.degree - 1);
    c.is_dull = s.contains(c.degree + 1);
  }
  return out;
}

bool all_degrees_good(const DegreeSequence& s) {
  const auto& d = s.degrees();
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] == d[i - 1] + 1) return false;
  return true;
}

SequenceProfile::SequenceProfile(DegreeSequence s)
    : seq_(std::move(s)), classes_(classify_degrees(seq_)), class_index_(std::max(seq_.n(), 1) + 1, -1) {
  for (int c = 0; c < num_classes(); ++c) {
    class_index_[classes_[c].degree] = c;
    all_.bits |= std::uint64_t{1} << c;
    if (classes_[c].is_bad) bad_.bits |= std::uint64_t{1} << c;
    if (classes_[c].is_dull) dull_.bits |= std::uint64_t{1} << c;
  }
}

std::optional<int> SequenceProfile::class_of(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(class_index_.size())) return std::nullopt;
  int c = class_index_[degree];
  if (c < 0) return std::nullopt;
  return c;
}

ClassSet SequenceProfile::of_degree(int d) const {
  auto c = class_of(d);
  return c ? ClassSet::single(*c) : ClassSet{};
}

int SequenceProfile::size(ClassSet s) const {
  int total = 0;
  s.for_each([&](int c) { total += classes_[c].count; });
  return total;
}

int SequenceProfile::stubs(ClassSet s) const {
  int total = 0;
  s.for_each([&](int c) { total += classes_[c].count * classes_[c].degree; });
  return total;
}

int SequenceProfile::kappa(ClassSet s, int d) const {
  auto c = class_of(d);
  return (c && s.contains(*c)) ? classes_[*c].count : 0;
}

int SequenceProfile::min_degree(ClassSet s) const {
  if (s.empty()) throw std::invalid_argument("min_degree of empty set");
  return classes_[std::countr_zero(s.bits)].degree;
}

int SequenceProfile::max_degree(ClassSet s) const {
  if (s.empty()) throw std::invalid_argument("max_degree of empty set");
  return classes_[63 - std::countl_zero(s.bits)].degree;
}

bool SequenceProfile::neighbourly(ClassSet s) const {
  bool ok = true;
  s.for_each([&](int c) {
    auto below = class_of(classes_[c].degree - 1);
    if (below && !s.contains(*below)) ok = false;
  });
  return ok;
}

bool SequenceProfile::d_neighbourly(ClassSet s, int d) const {
  auto vc = class_of(d);
  if (!vc || !s.contains(*vc)) return false;
  bool ok = true;
  s.for_each([&](int c) {
    if (c == *vc && classes_[c].count == 1) return;
    auto below = class_of(classes_[c].degree - 1);
    if (below && !s.contains(*below)) ok = false;
  });
  return ok;
}

void PartitionView::assign(const std::string& role, ClassSet classes) {
  for (const auto& [name, set] : roles_) {
    if (name != role && set.intersects(classes))
      throw std::invalid_argument("role '" + role + "' overlaps role '" + name + "'");
  }
  roles_[role] = classes;
}

ClassSet PartitionView::role(const std::string& name) const {
  auto it = roles_.find(name);
  if (it == roles_.end()) throw Error(ErrorCode::RoleMissing, name);
  return it->second;
}

}  // namespace dsr
