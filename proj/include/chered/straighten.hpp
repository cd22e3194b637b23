#pragma once

#include <map>
#include <string>
#include <vector>

#include "chered/skew.hpp"

namespace chered {

class CherednikAlgebra;

/// Word letter over the abstract generators. Kind order is the normal order
/// of the PBW basis: coordinates, idempotent, group element, vectors.
struct Letter {
  enum Kind { X, E, G, Y } kind;
  int idx;
  auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

/// PBW basis slot x^xpow . e_lam . w . y^ypow (lam = -1 in Subgroup flavor).
struct NormalKey {
  Monomial xpow;
  int lam = -1;
  int w = 0;
  Monomial ypow;
  auto operator<=>(const NormalKey&) const = default;
};

/// Element of the abstract algebra written in the PBW basis.
class NormalElement {
 public:
  NormalElement() = default;
  explicit NormalElement(const CherednikAlgebra* A) : A_(A) {}

  const CherednikAlgebra& algebra() const { return *A_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<NormalKey, Cyclotomic>& terms() const { return terms_; }
  Cyclotomic coeff(const NormalKey& k) const;
  void add_term(const NormalKey& k, const Cyclotomic& c);
  /// Max over terms of |xpow| + |ypow|; -1 for zero.
  int degree() const;

  NormalElement& operator+=(const NormalElement& o);
  NormalElement& operator-=(const NormalElement& o);
  friend NormalElement operator+(NormalElement a, const NormalElement& b) { return a += b; }
  friend NormalElement operator-(NormalElement a, const NormalElement& b) { return a -= b; }
  NormalElement operator-() const;
  friend NormalElement operator*(const NormalElement& a, const NormalElement& b);
  NormalElement operator*(const Cyclotomic& c) const;
  bool operator==(const NormalElement& o) const;
  bool operator!=(const NormalElement& o) const { return !(*this == o); }

  std::string str() const;

 private:
  const CherednikAlgebra* A_ = nullptr;
  std::map<NormalKey, Cyclotomic> terms_;
};

/// Which reducible pair the rewriting loop fires first; the straightened
/// result must not depend on it.
enum class PeelSide { Left, Right };

/// Abstract algebra of one skew context and parameter set. Owns the
/// straightening rules; elements refer back to it.
class CherednikAlgebra {
 public:
  CherednikAlgebra(const SkewContext* ctx, ParameterSet k);

  const SkewContext& context() const { return *ctx_; }
  const ParameterSet& params() const { return k_; }

  NormalElement zero() const { return NormalElement(this); }
  NormalElement scalar(const Cyclotomic& c) const;
  NormalElement x(unsigned i) const;
  NormalElement y(unsigned i) const;
  NormalElement group(int w) const;
  NormalElement idem(int node) const;
  NormalElement monomial(const NormalKey& k) const;
  /// sum_i x_i y_i minus the reflection sums; commutes with the carrier.
  NormalElement euler() const;

  Word word_of(const NormalKey& k) const;
  NormalElement straighten(const Word& w, PeelSide side = PeelSide::Left) const;
  NormalElement product(const NormalElement& a, const NormalElement& b,
                        PeelSide side = PeelSide::Left) const;
  NormalElement commutator(const NormalElement& a, const NormalElement& b) const;

  /// Image under the Dunkl realization: y_i to the Dunkl operator along e_i.
  SkewOperator skew_image(const NormalElement& a) const;

 private:
  struct Branch {
    std::vector<Letter> letters;
    Cyclotomic coeff;
  };
  int base_lam_() const;
  bool reducible_(const Letter& a, const Letter& b) const;
  std::vector<Branch> rewrite_(const Letter& a, const Letter& b) const;
  NormalKey key_of_(const Word& w) const;

  const SkewContext* ctx_;
  ParameterSet k_;
  std::vector<GroupAlgebraElement> gamma_;       // by hyperplane id, active only
  std::vector<std::vector<Cyclotomic>> cpair_;   // [h][i*rank+j]: swap coefficient
};

}  // namespace chered
