#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "autoseq/errors.hpp"

namespace autoseq {

// Finite ordered alphabet of distinct non-empty symbol tokens.
//
// The token order is canonical: matrix axes, frequency tables and
// enumerations all follow it.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  // Index of a token; throws ValidationError when absent.
  int index(const std::string& symbol) const;
  std::optional<int> find(const std::string& symbol) const;
  bool single_char() const { return single_char_; }

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

private:
  std::vector<std::string> symbols_;
  std::map<std::string, int> index_;
  bool single_char_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> symbols);

// "ab" gives single-char symbols a, b; "q0 q1" splits on whitespace.
AlphabetPtr make_alphabet(const std::string& tokens);

// Word over a fixed alphabet, stored as symbol indices.
class Word {
public:
  Word(AlphabetPtr alphabet, std::vector<int32_t> letters);
  static Word empty(AlphabetPtr alphabet);

  // Accepts a compact string of single-char symbols ("abba") when the
  // alphabet is single-char, otherwise whitespace-separated tokens.
  static Word parse(AlphabetPtr alphabet, const std::string& text);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  long size() const { return static_cast<long>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int32_t operator[](long i) const { return letters_[static_cast<size_t>(i)]; }
  const std::vector<int32_t>& letters() const { return letters_; }

  Word subword(long pos, long len) const;
  Word concat(const Word& tail) const;
  void push_back(int32_t letter);
  void truncate(long len);

  // Compact when the alphabet is single-char, else space-separated tokens.
  std::string str() const;

  bool operator==(const Word& o) const;
  bool operator!=(const Word& o) const { return !(*this == o); }
  // Total order: alphabet tokens first, then letters lexicographically.
  bool operator<(const Word& o) const;

private:
  AlphabetPtr alphabet_;
  std::vector<int32_t> letters_;
};

// Requires content-equal alphabets, else throws ValidationError.
void require_same_alphabet(const Word& a, const Word& b);

// Number of possibly overlapping occurrences of u in w.
// The empty word occurs |w| + 1 times.
long long count_occurrences(const Word& u, const Word& w);

// Starting positions of occurrences of u in w, ascending.
std::vector<long> occurrence_positions(const Word& u, const Word& w);

// Distinct factors of w of length n.
std::set<Word> factors(const Word& w, long n);

// Dense nonnegative integer matrix with overflow-checked arithmetic.
class IntMatrix {
public:
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  long long at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix pow(int n) const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  // Column j sums to the image length of letter j for incidence matrices.
  std::vector<long long> column_sums() const;
  bool positive() const;
  std::string str() const;

private:
  int rows_, cols_;
  std::vector<long long> a_;
};

// Morphism between free monoids; images may be empty.
class Morphism {
public:
  Morphism(AlphabetPtr domain, AlphabetPtr codomain, std::vector<Word> images);

  const AlphabetPtr& domain() const { return domain_; }
  const AlphabetPtr& codomain() const { return codomain_; }
  const Word& image(int letter) const;
  const Word& image(const std::string& symbol) const;

  Word apply(const Word& w) const;
  bool erasing() const;
  long min_image_length() const;
  long max_image_length() const;
  bool constant_length() const;

private:
  AlphabetPtr domain_, codomain_;
  std::vector<Word> images_;
};

// m1 after m2: apply m2 first. Requires codomain(m2) == domain(m1).
Morphism compose(const Morphism& m1, const Morphism& m2);

// M[i][j] = occurrences of codomain letter i in the image of domain letter j,
// so that incidence_matrix(compose(m1, m2)) = incidence_matrix(m1) *
// incidence_matrix(m2).
IntMatrix incidence_matrix(const Morphism& m);

}  // namespace autoseq
