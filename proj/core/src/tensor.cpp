#include <llg/tensor.hpp>

#include <stdexcept>

namespace llg {

Tensor::Tensor(int n, int r, int s, int antisym_tail)
    : n_(n), r_(r), s_(s), antisym_tail_(antisym_tail), zero_(n) {
  if (antisym_tail_ < 0 || antisym_tail_ > s_)
    throw std::invalid_argument("antisymmetric tail exceeds lower valence");
}

const Poly& Tensor::at(const TIndex& idx) const {
  auto it = comp_.find(idx);
  return it == comp_.end() ? zero_ : it->second;
}

void Tensor::set(const TIndex& idx, Poly p) {
  if (static_cast<int>(idx.size()) != order())
    throw std::invalid_argument("tensor index arity mismatch");
  if (p.is_zero())
    comp_.erase(idx);
  else
    comp_[idx] = std::move(p);
}

void Tensor::add(const TIndex& idx, const Poly& p) {
  if (p.is_zero()) return;
  auto it = comp_.find(idx);
  if (it == comp_.end()) {
    comp_.emplace(idx, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) comp_.erase(it);
  }
}

bool Tensor::is_zero() const { return comp_.empty(); }

bool Tensor::same_shape(const Tensor& o) const {
  return n_ == o.n_ && r_ == o.r_ && s_ == o.s_;
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (!same_shape(o)) throw std::invalid_argument("tensor shape mismatch");
  Tensor r = *this;
  for (const auto& [idx, p] : o.comp_) r.add(idx, p);
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
  if (!same_shape(o)) throw std::invalid_argument("tensor shape mismatch");
  Tensor r = *this;
  for (const auto& [idx, p] : o.comp_) r.add(idx, -p);
  return r;
}

Tensor Tensor::operator-() const { return scaled(Rational(-1)); }

Tensor Tensor::scaled(const Rational& c) const {
  Tensor r(n_, r_, s_, antisym_tail_);
  if (c == 0) return r;
  for (const auto& [idx, p] : comp_) r.comp_[idx] = p.scaled(c);
  return r;
}

bool Tensor::operator==(const Tensor& o) const {
  return same_shape(o) && comp_ == o.comp_;
}

bool Tensor::verify_antisym() const {
  if (antisym_tail_ < 2) return true;
  int lo = r_ + s_ - antisym_tail_;
  int hi = r_ + s_;
  bool ok = true;
  for_each_index([&](const TIndex& idx) {
    if (!ok) return;
    for (int a = lo; a < hi && ok; ++a) {
      for (int b = a + 1; b < hi && ok; ++b) {
        TIndex sw = idx;
        std::swap(sw[a], sw[b]);
        if (idx[a] == idx[b]) {
          if (!at(idx).is_zero()) ok = false;
        } else if (!(at(idx) + at(sw)).is_zero()) {
          ok = false;
        }
      }
    }
  });
  return ok;
}

Rational Tensor::eval_entry(const TIndex& idx, const std::vector<Rational>& point) const {
  return at(idx).eval(point);
}

Tensor alternate_first_unchecked(const Tensor& a) {
  int n = a.dim();
  int k = a.lower() - 1;  // trailing block size
  Tensor out(n, 1, k + 1, k + 1);
  out.for_each_index([&](const TIndex& idx) {
    // idx = (i, j0, j1..jk)
    Poly acc = a.at(idx);
    for (int q = 1; q <= k; ++q) {
      TIndex sw = idx;
      std::swap(sw[1], sw[1 + q]);
      acc -= a.at(sw);
    }
    if (!acc.is_zero()) out.set(idx, std::move(acc));
  });
  return out;
}

Tensor alternate_first(const Tensor& a) {
  if (a.upper() != 1 || a.lower() < 1)
    throw std::invalid_argument("alternation expects a (1, k+1) tensor");
  Tensor probe(a.dim(), a.upper(), a.lower(), a.lower() - 1);
  for (const auto& [idx, p] : a.components()) probe.set(idx, p);
  if (!probe.verify_antisym())
    throw std::invalid_argument("alternation input is not antisymmetric in its trailing block");
  Tensor out = alternate_first_unchecked(a);
  if (!out.verify_antisym())
    throw std::logic_error("alternation output failed the antisymmetry postcondition");
  return out;
}

}  // namespace llg
