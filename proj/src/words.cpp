#include "autoseq/words.hpp"

#include <algorithm>
#include <sstream>

namespace autoseq {

Alphabet::Alphabet(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw ValidationError("alphabet must be non-empty");
  single_char_ = true;
  for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
    const std::string& s = symbols_[static_cast<size_t>(i)];
    if (s.empty()) throw ValidationError("alphabet symbol must be non-empty");
    if (!index_.emplace(s, i).second)
      throw ValidationError("duplicate alphabet symbol '" + s + "'");
    if (s.size() != 1) single_char_ = false;
  }
}

int Alphabet::index(const std::string& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end())
    throw ValidationError("symbol '" + symbol + "' not in alphabet");
  return it->second;
}

std::optional<int> Alphabet::find(const std::string& symbol) const {
  auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AlphabetPtr make_alphabet(std::vector<std::string> symbols) {
  return std::make_shared<Alphabet>(std::move(symbols));
}

AlphabetPtr make_alphabet(const std::string& tokens) {
  std::vector<std::string> symbols;
  if (tokens.find_first_of(" \t") == std::string::npos) {
    for (char c : tokens) symbols.emplace_back(1, c);
  } else {
    std::istringstream in(tokens);
    std::string tok;
    while (in >> tok) symbols.push_back(tok);
  }
  return make_alphabet(std::move(symbols));
}

Word::Word(AlphabetPtr alphabet, std::vector<int32_t> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alphabet_) throw ValidationError("word needs an alphabet");
  for (int32_t x : letters_)
    if (x < 0 || x >= alphabet_->size())
      throw ValidationError("letter index out of range");
}

Word Word::empty(AlphabetPtr alphabet) { return Word(std::move(alphabet), {}); }

Word Word::parse(AlphabetPtr alphabet, const std::string& text) {
  std::vector<int32_t> letters;
  if (alphabet->single_char() &&
      text.find_first_of(" \t") == std::string::npos) {
    for (char c : text)
      letters.push_back(alphabet->index(std::string(1, c)));
  } else {
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) letters.push_back(alphabet->index(tok));
  }
  return Word(std::move(alphabet), std::move(letters));
}

Word Word::subword(long pos, long len) const {
  if (pos < 0 || len < 0 || pos + len > size())
    throw ValidationError("subword out of range");
  return Word(alphabet_,
              std::vector<int32_t>(letters_.begin() + pos,
                                   letters_.begin() + pos + len));
}

Word Word::concat(const Word& tail) const {
  require_same_alphabet(*this, tail);
  std::vector<int32_t> v = letters_;
  v.insert(v.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(alphabet_, std::move(v));
}

void Word::push_back(int32_t letter) {
  if (letter < 0 || letter >= alphabet_->size())
    throw ValidationError("letter index out of range");
  letters_.push_back(letter);
}

void Word::truncate(long len) {
  if (len < 0 || len > size()) throw ValidationError("bad truncation length");
  letters_.resize(static_cast<size_t>(len));
}

std::string Word::str() const {
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (!alphabet_->single_char() && i) out += ' ';
    out += alphabet_->symbol(letters_[i]);
  }
  return out;
}

bool Word::operator==(const Word& o) const {
  return *alphabet_ == *o.alphabet_ && letters_ == o.letters_;
}

bool Word::operator<(const Word& o) const {
  if (*alphabet_ != *o.alphabet_)
    return alphabet_->symbols() < o.alphabet_->symbols();
  return letters_ < o.letters_;
}

void require_same_alphabet(const Word& a, const Word& b) {
  if (*a.alphabet() != *b.alphabet())
    throw ValidationError("alphabet mismatch");
}

long long count_occurrences(const Word& u, const Word& w) {
  require_same_alphabet(u, w);
  if (u.empty()) return w.size() + 1;
  long long n = 0;
  for (long i = 0; i + u.size() <= w.size(); ++i) {
    bool hit = true;
    for (long j = 0; j < u.size(); ++j)
      if (w[i + j] != u[j]) {
        hit = false;
        break;
      }
    if (hit) ++n;
  }
  return n;
}

std::vector<long> occurrence_positions(const Word& u, const Word& w) {
  require_same_alphabet(u, w);
  std::vector<long> pos;
  if (u.empty()) {
    for (long i = 0; i <= w.size(); ++i) pos.push_back(i);
    return pos;
  }
  for (long i = 0; i + u.size() <= w.size(); ++i) {
    bool hit = true;
    for (long j = 0; j < u.size(); ++j)
      if (w[i + j] != u[j]) {
        hit = false;
        break;
      }
    if (hit) pos.push_back(i);
  }
  return pos;
}

std::set<Word> factors(const Word& w, long n) {
  if (n < 0) throw ValidationError("factor length must be >= 0");
  std::set<Word> out;
  for (long i = 0; i + n <= w.size(); ++i) out.insert(w.subword(i, n));
  return out;
}

namespace {
long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw ValidationError("integer overflow in matrix arithmetic");
  return r;
}
long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ValidationError("integer overflow in matrix arithmetic");
  return r;
}
}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0) throw ValidationError("bad matrix shape");
  a_.assign(static_cast<size_t>(rows) * cols, 0);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw ValidationError("matrix shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      long long v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = checked_add(r.at(i, j), checked_mul(v, o.at(k, j)));
    }
  return r;
}

IntMatrix IntMatrix::pow(int n) const {
  if (rows_ != cols_) throw ValidationError("pow needs a square matrix");
  if (n < 0) throw ValidationError("pow needs n >= 0");
  IntMatrix r = identity(rows_);
  IntMatrix b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<long long> IntMatrix::column_sums() const {
  std::vector<long long> s(static_cast<size_t>(cols_), 0);
  for (int j = 0; j < cols_; ++j)
    for (int i = 0; i < rows_; ++i)
      s[static_cast<size_t>(j)] = checked_add(s[static_cast<size_t>(j)], at(i, j));
  return s;
}

bool IntMatrix::positive() const {
  return std::all_of(a_.begin(), a_.end(), [](long long v) { return v > 0; });
}

std::string IntMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << at(i, j);
    out << "\n";
  }
  return out.str();
}

Morphism::Morphism(AlphabetPtr domain, AlphabetPtr codomain,
                   std::vector<Word> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_->size())
    throw ValidationError("morphism needs one image per domain letter");
  for (const Word& w : images_)
    if (*w.alphabet() != *codomain_)
      throw ValidationError("morphism image over wrong alphabet");
}

const Word& Morphism::image(int letter) const {
  if (letter < 0 || letter >= domain_->size())
    throw ValidationError("letter index out of range");
  return images_[static_cast<size_t>(letter)];
}

const Word& Morphism::image(const std::string& symbol) const {
  return image(domain_->index(symbol));
}

Word Morphism::apply(const Word& w) const {
  if (*w.alphabet() != *domain_) throw ValidationError("alphabet mismatch");
  std::vector<int32_t> out;
  long long total = 0;
  for (long i = 0; i < w.size(); ++i) total += image(w[i]).size();
  out.reserve(static_cast<size_t>(total));
  for (long i = 0; i < w.size(); ++i) {
    const Word& im = image(w[i]);
    out.insert(out.end(), im.letters().begin(), im.letters().end());
  }
  return Word(codomain_, std::move(out));
}

bool Morphism::erasing() const { return min_image_length() == 0; }

long Morphism::min_image_length() const {
  long m = images_[0].size();
  for (const Word& w : images_) m = std::min(m, w.size());
  return m;
}

long Morphism::max_image_length() const {
  long m = 0;
  for (const Word& w : images_) m = std::max(m, w.size());
  return m;
}

bool Morphism::constant_length() const {
  return min_image_length() == max_image_length();
}

Morphism compose(const Morphism& m1, const Morphism& m2) {
  if (*m2.codomain() != *m1.domain())
    throw ValidationError("composition alphabet mismatch");
  std::vector<Word> images;
  images.reserve(static_cast<size_t>(m2.domain()->size()));
  for (int a = 0; a < m2.domain()->size(); ++a)
    images.push_back(m1.apply(m2.image(a)));
  return Morphism(m2.domain(), m1.codomain(), std::move(images));
}

IntMatrix incidence_matrix(const Morphism& m) {
  IntMatrix out(m.codomain()->size(), m.domain()->size());
  for (int j = 0; j < m.domain()->size(); ++j) {
    const Word& im = m.image(j);
    for (long t = 0; t < im.size(); ++t) ++out.at(im[t], j);
  }
  return out;
}

}  // namespace autoseq
