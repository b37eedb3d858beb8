#include "garside/simple_braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace garside {

namespace {

void check_strands(int n) {
  if (n < 2 || n > kMaxStrands) {
    throw InvalidParameter("strand count must lie in [2, " +
                           std::to_string(kMaxStrands) + "], got " +
                           std::to_string(n));
  }
}

void check_same_group(const SimpleBraid& a, const SimpleBraid& b) {
  if (a.strand_count() != b.strand_count()) {
    throw InvalidParameter("simple braids live in different braid groups");
  }
}

}  // namespace

void ArtinWord::validate() const {
  check_strands(strand_count);
  for (const auto& l : letters) {
    if (l.index < 1 || l.index > strand_count - 1) {
      throw InvalidParameter("generator index " + std::to_string(l.index) +
                             " out of range for " +
                             std::to_string(strand_count) + " strands");
    }
    if (l.sign != 1 && l.sign != -1) {
      throw InvalidParameter("letter sign must be +1 or -1");
    }
  }
}

ArtinWord concat(const ArtinWord& a, const ArtinWord& b) {
  if (a.strand_count != b.strand_count) {
    throw InvalidParameter("cannot concatenate words on different strands");
  }
  ArtinWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::vector<int> GeneratorSet::to_vector() const {
  std::vector<int> out;
  for (int i = 1; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

SimpleBraid::SimpleBraid(int n) {
  check_strands(n);
  n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) perm_[i] = static_cast<std::uint8_t>(i);
}

SimpleBraid SimpleBraid::delta(int n) {
  SimpleBraid s(n);
  for (int i = 0; i < n; ++i) s.perm_[i] = static_cast<std::uint8_t>(n - 1 - i);
  return s;
}

SimpleBraid SimpleBraid::atom(int n, int i) {
  SimpleBraid s(n);
  if (i < 1 || i > n - 1) {
    throw InvalidParameter("generator index " + std::to_string(i) +
                           " out of range for " + std::to_string(n) +
                           " strands");
  }
  std::swap(s.perm_[i - 1], s.perm_[i]);
  return s;
}

SimpleBraid SimpleBraid::delta_without(int n, int j) {
  // u . sigma_j = Delta
  return delta(n).then(atom(n, j));
}

SimpleBraid SimpleBraid::from_permutation(const std::vector<int>& one_line) {
  const int n = static_cast<int>(one_line.size());
  SimpleBraid s(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    const int v = one_line[i];
    if (v < 1 || v > n || seen[v - 1]) {
      throw InvalidParameter("not a permutation of {1..n}");
    }
    seen[v - 1] = true;
    s.perm_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return s;
}

SimpleBraid SimpleBraid::from_word(int n, const std::vector<int>& indices) {
  SimpleBraid s(n);
  // at[p] = strand currently at position p
  std::array<std::uint8_t, kMaxStrands> at{};
  for (int i = 0; i < n; ++i) at[i] = static_cast<std::uint8_t>(i);
  for (int idx : indices) {
    if (idx < 1 || idx > n - 1) {
      throw InvalidParameter("generator index " + std::to_string(idx) +
                             " out of range for a simple braid word");
    }
    if (at[idx - 1] > at[idx]) {
      throw InvalidParameter("word is not a permutation braid: two strands "
                             "cross twice");
    }
    std::swap(at[idx - 1], at[idx]);
  }
  for (int p = 0; p < n; ++p) s.perm_[at[p]] = static_cast<std::uint8_t>(p);
  return s;
}

std::vector<int> SimpleBraid::permutation() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = perm_[i] + 1;
  return out;
}

int SimpleBraid::preimage(int i) const {
  for (int j = 0; j < n_; ++j) {
    if (perm_[j] == i) return j;
  }
  return -1;
}

int SimpleBraid::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (perm_[i] > perm_[j]) ++inv;
    }
  }
  return inv;
}

bool SimpleBraid::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

bool SimpleBraid::is_delta() const {
  for (int i = 0; i < n_; ++i) {
    if (perm_[i] != n_ - 1 - i) return false;
  }
  return true;
}

GeneratorSet SimpleBraid::starting_set() const {
  // sigma_i is a prefix iff the strands starting at i, i+1 cross.
  GeneratorSet s;
  for (int i = 1; i < n_; ++i) {
    if (perm_[i - 1] > perm_[i]) s.insert(i);
  }
  return s;
}

GeneratorSet SimpleBraid::finishing_set() const {
  // sigma_i is a suffix iff the strands ending at i, i+1 cross.
  std::array<std::uint8_t, kMaxStrands> inv{};
  for (int i = 0; i < n_; ++i) inv[perm_[i]] = static_cast<std::uint8_t>(i);
  GeneratorSet s;
  for (int i = 1; i < n_; ++i) {
    if (inv[i - 1] > inv[i]) s.insert(i);
  }
  return s;
}

SimpleBraid SimpleBraid::then(const SimpleBraid& b) const {
  SimpleBraid r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.perm_[i] = b.perm_[perm_[i]];
  return r;
}

SimpleBraid SimpleBraid::under(const SimpleBraid& b) const {
  SimpleBraid r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.perm_[perm_[i]] = b.perm_[i];
  return r;
}

SimpleBraid SimpleBraid::reversed() const {
  SimpleBraid r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.perm_[perm_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

SimpleBraid SimpleBraid::complement() const { return under(delta(n_)); }

SimpleBraid SimpleBraid::left_complement() const {
  SimpleBraid r;
  r.n_ = n_;
  // r.then(*this) == Delta
  for (int i = 0; i < n_; ++i) {
    r.perm_[i] = static_cast<std::uint8_t>(preimage(n_ - 1 - i));
  }
  return r;
}

SimpleBraid SimpleBraid::tau(int k) const {
  if (k % 2 == 0) return *this;
  SimpleBraid r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    r.perm_[i] = static_cast<std::uint8_t>(n_ - 1 - perm_[n_ - 1 - i]);
  }
  return r;
}

std::vector<int> SimpleBraid::canonical_word() const {
  std::array<std::uint8_t, kMaxStrands> at{};
  for (int i = 0; i < n_; ++i) at[i] = static_cast<std::uint8_t>(i);
  std::vector<int> word;
  for (int target = n_ - 1; target >= 0; --target) {
    const int strand = preimage(target);
    int pos = 0;
    while (at[pos] != strand) ++pos;
    for (; pos < target; ++pos) {
      word.push_back(pos + 1);
      std::swap(at[pos], at[pos + 1]);
    }
  }
  return word;
}

ArtinWord SimpleBraid::canonical_artin_word() const {
  ArtinWord w{n_, {}};
  for (int i : canonical_word()) w.letters.push_back({i, 1});
  return w;
}

std::size_t SimpleBraid::hash() const {
  std::size_t h = n_;
  for (int i = 0; i < n_; ++i) h = h * 31 + perm_[i];
  return h;
}

SimpleBraid delta(int n) { return SimpleBraid::delta(n); }

bool left_divides(const SimpleBraid& a, const SimpleBraid& b) {
  check_same_group(a, b);
  return a.length() + a.under(b).length() == b.length();
}

bool right_divides(const SimpleBraid& a, const SimpleBraid& b) {
  check_same_group(a, b);
  // a = c.b
  const SimpleBraid c = a.then(b.reversed());
  return c.length() + b.length() == a.length();
}

GeneratorSet starting_set(const SimpleBraid& s) { return s.starting_set(); }
GeneratorSet finishing_set(const SimpleBraid& s) { return s.finishing_set(); }

bool is_left_weighted(const SimpleBraid& s1, const SimpleBraid& s2) {
  check_same_group(s1, s2);
  return s2.starting_set().subset_of(s1.finishing_set());
}

bool product_is_simple(const SimpleBraid& a, const SimpleBraid& b) {
  check_same_group(a, b);
  return a.length() + b.length() == a.then(b).length();
}

SimpleBraid meet(const SimpleBraid& a, const SimpleBraid& b) {
  check_same_group(a, b);
  const int n = a.strand_count();
  SimpleBraid result(n);
  SimpleBraid ra = a;
  SimpleBraid rb = b;
  for (;;) {
    const std::uint32_t common =
        ra.starting_set().bits() & rb.starting_set().bits();
    if (common == 0) return result;
    const int i = std::countr_zero(common);
    const SimpleBraid s = SimpleBraid::atom(n, i);
    ra = s.under(ra);
    rb = s.under(rb);
    result = result.then(s);
  }
}

SimpleBraid complement_simple(const SimpleBraid& s) { return s.complement(); }

SimpleBraid tau_simple(const SimpleBraid& s, int k) { return s.tau(k); }

ArtinWord simple_to_canonical_word(const SimpleBraid& s) {
  return s.canonical_artin_word();
}

std::vector<SimpleBraid> all_simple_braids(int n) {
  check_strands(n);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<SimpleBraid> out;
  do {
    out.push_back(SimpleBraid::from_permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SimpleBraid> proper_simple_braids(int n) {
  std::vector<SimpleBraid> out;
  for (auto& s : all_simple_braids(n)) {
    if (!s.is_identity() && !s.is_delta()) out.push_back(s);
  }
  return out;
}

std::string to_string(const ArtinWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ' ';
    os << w.letters[i].sign * w.letters[i].index;
  }
  return os.str();
}

}  // namespace garside
