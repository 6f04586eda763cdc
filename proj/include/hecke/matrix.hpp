#pragma once

// Determinant-one matrices over Z[L] modulo sign, and words in the Hecke
// generators S = [[0,-1],[1,0]], T = [[1,L],[0,1]].

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/ring.hpp"

namespace hecke {

/// An element of PSL2(Z[L]). The stored representative has its first
/// nonzero entry (reading order) positive in the real embedding.
class GMatrix {
 public:
  /// Identity.
  GMatrix();

  /// Throws BadDeterminant unless ad - bc = 1.
  static GMatrix from_entries(RingElt a, RingElt b, RingElt c, RingElt d);

  static GMatrix S();
  static GMatrix T(long power = 1);
  /// [[1, 0], [k L, 1]]
  static GMatrix lower(const RingElt& k);

  const RingElt& a() const { return a_; }
  const RingElt& b() const { return b_; }
  const RingElt& c() const { return c_; }
  const RingElt& d() const { return d_; }

  RingElt trace() const { return a_ + d_; }

  GMatrix inverse() const;

  /// Representative with the sign flipped; same element of PSL2.
  struct Raw {
    RingElt a, b, c, d;
  };
  Raw negated() const { return {-a_, -b_, -c_, -d_}; }

  friend GMatrix operator*(const GMatrix& x, const GMatrix& y);
  GMatrix& operator*=(const GMatrix& y) { return *this = *this * y; }
  friend bool operator==(const GMatrix&, const GMatrix&) = default;

 private:
  GMatrix(RingElt a, RingElt b, RingElt c, RingElt d);  // trusted, det = 1
  void canonicalize();

  RingElt a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const GMatrix& m);

GMatrix conjugate(const GMatrix& A, const GMatrix& B);

/// Run-length word over {S, T}; T powers may be negative.
class Word {
 public:
  struct Syllable {
    char gen;    // 'S' or 'T'
    long power;  // S syllables always have power 1

    friend bool operator==(const Syllable&, const Syllable&) = default;
  };

  Word() = default;

  /// Parses a string over {S, T, t}; t = T^-1.
  static Word parse(std::string_view letters);

  void push_S();
  void push_T(long power);
  void append(const Word& w);

  Word inverse() const;
  bool empty() const { return syllables_.empty(); }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  /// Number of letters in the expanded form.
  std::size_t length() const;

  GMatrix evaluate() const;
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syllables_;
};

}  // namespace hecke
