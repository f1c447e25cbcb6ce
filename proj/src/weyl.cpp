#include "flagbundle/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "flagbundle/error.hpp"

namespace flagbundle {

namespace {

// Sign of a root given in simple-root coordinates.
bool negative(std::span<const Int> v) {
  for (Int x : v)
    if (x != 0) return x < 0;
  return false;
}

void check_letter(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw Error(ErrorKind::IndexOutOfRange,
                "reflection index " + std::to_string(i) + " outside 1.." + std::to_string(rs.rank()));
}

void check_rank(const WeylElement& w, std::size_t n) {
  if (static_cast<std::size_t>(w.rank()) != n)
    throw Error(ErrorKind::RankMismatch, "vector of rank " + std::to_string(n) +
                                             " acted on by element of rank " +
                                             std::to_string(w.rank()));
}

// s_i on a weight in fundamental-weight coordinates (i 0-based).
void reflect_weight(const IntMatrix& c, std::vector<Int>& lambda, std::size_t i) {
  const Int li = lambda[i];
  if (li == 0) return;
  for (std::size_t j = 0; j < lambda.size(); ++j) lambda[j] -= li * c(i, j);
}

Weight weight_times_element_rho(const RootSystem& rs, const WeylElement& w) {
  return act_on_weight(rs, w, rho(rs.rank()));
}

}  // namespace

WeylElement WeylElement::make(const IntMatrix& m, int length) {
  WeylElement w;
  w.k_ = static_cast<int>(m.rows());
  w.length_ = length;
  w.data_.resize(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Int x = m(r, c);
      if (x < -127 || x > 127) throw std::logic_error("Weyl matrix entry out of range");
      w.data_[r * m.cols() + c] = static_cast<std::int8_t>(x);
    }
  return w;
}

WeylElement WeylElement::identity(int k) {
  return make(IntMatrix::identity(static_cast<std::size_t>(k)), 0);
}

WeylElement WeylElement::from_matrix(const RootSystem& rs, const IntMatrix& m) {
  if (m.rows() != static_cast<std::size_t>(rs.rank()) || !m.square())
    throw Error(ErrorKind::RankMismatch, "matrix shape does not match the root system");
  return make(m, inversion_count(rs, m));
}

IntMatrix WeylElement::matrix() const {
  const auto k = static_cast<std::size_t>(k_);
  IntMatrix m(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) m(r, c) = data_[r * k + c];
  return m;
}

Root WeylElement::image_of_simple(std::size_t j) const {
  const auto k = static_cast<std::size_t>(k_);
  Root r(IntVector(k, 0));
  for (std::size_t i = 0; i < k; ++i) r[i] = data_[i * k + j];
  return r;
}

bool WeylElement::is_identity() const { return *this == identity(k_); }

int inversion_count(const RootSystem& rs, const IntMatrix& m) {
  int count = 0;
  for (const auto& beta : rs.positive_roots())
    if (negative(m * beta.span())) ++count;
  return count;
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  return times_simple(rs, WeylElement::identity(rs.rank()), i);
}

WeylElement times_simple(const RootSystem& rs, const WeylElement& w, int i) {
  check_letter(rs, i);
  const auto k = static_cast<std::size_t>(rs.rank());
  const auto col = static_cast<std::size_t>(i - 1);
  const bool longer = !negative(w.image_of_simple(col).span());
  // (w s_i)(alpha_j) = w(alpha_j) - C(j, i) w(alpha_i)
  WeylElement out = w;
  for (std::size_t j = 0; j < k; ++j) {
    const Int cji = j == col ? 2 : rs.cartan()(j, col);
    if (cji == 0) continue;
    for (std::size_t r = 0; r < k; ++r)
      out.data_[r * k + j] = static_cast<std::int8_t>(out.data_[r * k + j] - cji * w.data_[r * k + col]);
  }
  out.length_ = w.length_ + (longer ? 1 : -1);
  return out;
}

WeylElement simple_times(const RootSystem& rs, int i, const WeylElement& w) {
  check_letter(rs, i);
  const IntMatrix m = simple_reflection(rs, i).matrix() * w.matrix();
  return WeylElement::make(m, inversion_count(rs, m));
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  const IntMatrix m = a.matrix() * b.matrix();
  return WeylElement::from_matrix(rs, m);
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  return WeylElement::from_matrix(rs, unimodular_inverse(w.matrix()));
}

WeylElement word_to_element(const RootSystem& rs, const Word& w) {
  w.check_range(rs.rank());
  WeylElement x = WeylElement::identity(rs.rank());
  for (int l : w.letters) x = times_simple(rs, x, l);
  return x;
}

bool is_reduced(const RootSystem& rs, const Word& w) {
  return static_cast<std::size_t>(word_to_element(rs, w).length()) == w.size();
}

Word reduced_word(const RootSystem& rs, const WeylElement& w) {
  // i is a left descent of w exactly when <w rho, alpha_i^vee> < 0.
  std::vector<Int> v = weight_times_element_rho(rs, w).values;
  Word out;
  for (;;) {
    const auto it = std::find_if(v.begin(), v.end(), [](Int x) { return x < 0; });
    if (it == v.end()) break;
    const auto i = static_cast<std::size_t>(it - v.begin());
    out.letters.push_back(static_cast<int>(i) + 1);
    reflect_weight(rs.cartan().entries(), v, i);
  }
  return out;
}

std::pair<WeylElement, Word> longest_element(const RootSystem& rs, const NodeSet& s) {
  s.check_range(rs.rank());
  WeylElement w = WeylElement::identity(rs.rank());
  Word word;
  for (;;) {
    int next = 0;
    for (int i : s.nodes())
      if (!negative(w.image_of_simple(static_cast<std::size_t>(i - 1)).span())) {
        next = i;
        break;
      }
    if (next == 0) break;
    w = times_simple(rs, w, next);
    word.letters.push_back(next);
  }
  return {w, word};
}

namespace {

// Open-addressing set of fixed-width integer keys stored contiguously.
class KeySet {
 public:
  explicit KeySet(std::size_t width) : width_(width), slots_(1u << 10, kEmpty) {}

  // Returns true if the key was inserted, false if already present.
  bool insert(std::span<const Int> key) {
    if ((count_ + 1) * 2 > slots_.size()) grow();
    std::size_t h = hash(key) & (slots_.size() - 1);
    while (slots_[h] != kEmpty) {
      if (equal(slots_[h], key)) return false;
      h = (h + 1) & (slots_.size() - 1);
    }
    slots_[h] = static_cast<std::uint32_t>(count_);
    keys_.insert(keys_.end(), key.begin(), key.end());
    ++count_;
    return true;
  }

  std::size_t size() const noexcept { return count_; }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  std::size_t hash(std::span<const Int> key) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Int x : key) {
      h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  bool equal(std::uint32_t idx, std::span<const Int> key) const {
    return std::equal(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>(idx * width_));
  }

  void grow() {
    std::vector<std::uint32_t> bigger(slots_.size() * 2, kEmpty);
    for (std::uint32_t idx = 0; idx < count_; ++idx) {
      std::span<const Int> key(keys_.data() + idx * width_, width_);
      std::size_t h = hash(key) & (bigger.size() - 1);
      while (bigger[h] != kEmpty) h = (h + 1) & (bigger.size() - 1);
      bigger[h] = idx;
    }
    slots_ = std::move(bigger);
  }

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> slots_;
  std::vector<Int> keys_;
};

}  // namespace

std::vector<WeylElement> enumerate(const RootSystem& rs, std::size_t limit) {
  const auto k = static_cast<std::size_t>(rs.rank());
  const IntMatrix& c = rs.cartan().entries();

  // An element is identified by w(rho), rho regular. Layers are built by
  // left multiplication, looping over generators outermost: the first time
  // x is reached is through its smallest left descent, so each layer comes
  // out ordered by lexicographically smallest reduced word.
  struct Node {
    std::uint32_t parent;
    int generator;  // 1-based; 0 for the identity
  };
  std::vector<Node> nodes{{0, 0}};
  std::vector<Int> images = rho(rs.rank()).values;  // k entries per node
  KeySet seen(k);
  seen.insert(std::span<const Int>(images.data(), k));

  std::size_t layer_begin = 0, layer_end = 1;
  std::vector<Int> v(k);
  while (layer_begin < layer_end) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t n = layer_begin; n < layer_end; ++n) {
        const Int* img = images.data() + n * k;
        if (img[i] <= 0) continue;  // s_i w would be shorter
        v.assign(img, img + k);
        reflect_weight(c, v, i);
        if (!seen.insert(v)) continue;
        if (nodes.size() >= limit)
          throw Error(ErrorKind::GroupTooLarge, "Weyl group closure exceeded the limit of " +
                                                    std::to_string(limit) + " elements (reached " +
                                                    std::to_string(nodes.size() + 1) + ")");
        nodes.push_back({static_cast<std::uint32_t>(n), static_cast<int>(i) + 1});
        images.insert(images.end(), v.begin(), v.end());
      }
    }
    layer_begin = layer_end;
    layer_end = nodes.size();
  }

  std::vector<WeylElement> out;
  out.reserve(nodes.size());
  out.push_back(WeylElement::identity(rs.rank()));
  for (std::size_t n = 1; n < nodes.size(); ++n) {
    const WeylElement& parent = out[nodes[n].parent];
    // s_i * parent: only row i changes. (s_i v)_i = v_i - sum_j C(j, i) v_j.
    WeylElement x = parent;
    const auto i = static_cast<std::size_t>(nodes[n].generator - 1);
    for (std::size_t col = 0; col < k; ++col) {
      Int s = 0;
      for (std::size_t j = 0; j < k; ++j) s += c(j, i) * parent.data_[j * k + col];
      x.data_[i * k + col] = static_cast<std::int8_t>(parent.data_[i * k + col] - s);
    }
    x.length_ = parent.length_ + 1;
    out.push_back(std::move(x));
  }
  return out;
}

WeylElement demazure_product(const RootSystem& rs, const Word& w) {
  w.check_range(rs.rank());
  WeylElement x = WeylElement::identity(rs.rank());
  for (int l : w.letters)
    if (!negative(x.image_of_simple(static_cast<std::size_t>(l - 1)).span()))
      x = times_simple(rs, x, l);
  return x;
}

Root act_on_root(const WeylElement& w, const Root& beta) {
  check_rank(w, beta.size());
  return Root(w.matrix() * beta.span());
}

IntMatrix weight_action(const RootSystem& rs, const WeylElement& w) {
  // A weight with fundamental-weight coordinates l has simple-root
  // coordinates C^{-T} l, so the action is C^T M C^{-T}.
  const IntMatrix ct = rs.cartan().entries().transposed();
  const Int det = determinant(ct);
  return exact_divide(ct * w.matrix() * adjugate(ct), det);
}

IntMatrix coroot_action(const RootSystem& rs, const WeylElement& w) {
  // Preserving r^T C u forces N = C^{-1} M^{-T} C.
  const IntMatrix& c = rs.cartan().entries();
  const Int det = determinant(c);
  const IntMatrix inv_t = unimodular_inverse(w.matrix()).transposed();
  return exact_divide(adjugate(c) * inv_t * c, det);
}

IntMatrix coweight_action(const RootSystem&, const WeylElement& w) {
  return unimodular_inverse(w.matrix()).transposed();
}

Weight act_on_weight(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  check_rank(w, lambda.size());
  return Weight(weight_action(rs, w) * lambda.span());
}

Coroot act_on_coroot(const RootSystem& rs, const WeylElement& w, const Coroot& c) {
  check_rank(w, c.size());
  return Coroot(coroot_action(rs, w) * c.span());
}

Coweight act_on_coweight(const RootSystem& rs, const WeylElement& w, const Coweight& theta) {
  check_rank(w, theta.size());
  return Coweight(coweight_action(rs, w) * theta.span());
}


}  // namespace flagbundle
