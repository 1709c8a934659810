#pragma once

#include <llg/poly.hpp>

#include <map>
#include <vector>

namespace llg {

// Component index: upper indices first, then lower, all 0-based.
using TIndex = std::vector<int>;

// (r,s)-tensor field with Poly components. Logically a complete n^(r+s)
// table, physically zero-suppressed. `antisym_tail` marks how many trailing
// lower indices form an antisymmetric block (0 = none); the flag is a
// contract on the data, checked by verify_antisym().
class Tensor {
 public:
  Tensor() : n_(0), r_(0), s_(0), antisym_tail_(0) {}
  Tensor(int n, int r, int s, int antisym_tail = 0);

  int dim() const { return n_; }
  int upper() const { return r_; }
  int lower() const { return s_; }
  int antisym_tail() const { return antisym_tail_; }
  int order() const { return r_ + s_; }

  const Poly& at(const TIndex& idx) const;
  void set(const TIndex& idx, Poly p);
  void add(const TIndex& idx, const Poly& p);

  bool is_zero() const;
  bool same_shape(const Tensor& o) const;

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator-() const;
  Tensor scaled(const Rational& c) const;
  bool operator==(const Tensor& o) const;

  // All stored (nonzero) components.
  const std::map<TIndex, Poly>& components() const { return comp_; }

  // Exhaustive check that swapping any two indices inside the trailing
  // antisymmetric block negates the component.
  bool verify_antisym() const;

  Rational eval_entry(const TIndex& idx, const std::vector<Rational>& point) const;

  // Enumerate every index tuple (dense iteration helper).
  template <class F>
  void for_each_index(F&& f) const {
    TIndex idx(order(), 0);
    for (;;) {
      f(idx);
      int q = order() - 1;
      while (q >= 0) {
        if (++idx[q] < n_) break;
        idx[q] = 0;
        --q;
      }
      if (q < 0) break;
    }
  }

 private:
  int n_, r_, s_, antisym_tail_;
  std::map<TIndex, Poly> comp_;
  Poly zero_;
};

// First-index alternation bracket: input valence (1, k+1) antisymmetric in
// its trailing k lower indices; output fully antisymmetric in all k+1, equal
// to A minus the k transpositions of the first lower index into each later
// position. Throws if the precondition fails.
Tensor alternate_first(const Tensor& a);

// Same bracket without the precondition/postcondition checks (internal use
// where the input block structure is known by construction).
Tensor alternate_first_unchecked(const Tensor& a);

}  // namespace llg
