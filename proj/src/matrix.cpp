#include "facering/matrix.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

namespace facering {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  return mod_pow(a, p - 2, p);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ull << 31)) throw std::invalid_argument("prime field characteristic too large");
  if (!is_prime_u64(p)) throw std::invalid_argument("characteristic is not prime: " + std::to_string(p));
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return is_rationals() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

ExactMatrix::ExactMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  if (field_.is_rationals()) {
    qdata_.assign(rows_ * cols_, Rational(0));
  } else {
    pdata_.assign(rows_ * cols_, 0);
  }
}

ExactMatrix ExactMatrix::identity(FieldSpec field, std::size_t n) {
  ExactMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void ExactMatrix::set(std::size_t i, std::size_t j, long long value) {
  if (field_.is_rationals()) {
    qdata_[idx(i, j)] = Rational(value);
  } else {
    const long long p = static_cast<long long>(field_.p());
    pdata_[idx(i, j)] = static_cast<std::uint64_t>((value % p + p) % p);
  }
}

void ExactMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (!field_.is_rationals()) throw std::invalid_argument("rational entry in a GF(p) matrix");
  qdata_[idx(i, j)] = value;
}

void ExactMatrix::add(std::size_t i, std::size_t j, long long value) {
  if (field_.is_rationals()) {
    qdata_[idx(i, j)] += Rational(value);
  } else {
    const long long p = static_cast<long long>(field_.p());
    const std::uint64_t v = static_cast<std::uint64_t>((value % p + p) % p);
    pdata_[idx(i, j)] = (pdata_[idx(i, j)] + v) % field_.p();
  }
}

bool ExactMatrix::entry_is_zero(std::size_t i, std::size_t j) const {
  return field_.is_rationals() ? qdata_[idx(i, j)] == 0 : pdata_[idx(i, j)] == 0;
}

const Rational& ExactMatrix::rational_at(std::size_t i, std::size_t j) const {
  if (!field_.is_rationals()) throw std::invalid_argument("rational_at on a GF(p) matrix");
  return qdata_[idx(i, j)];
}

std::uint64_t ExactMatrix::residue_at(std::size_t i, std::size_t j) const {
  if (field_.is_rationals()) throw std::invalid_argument("residue_at on a rational matrix");
  return pdata_[idx(i, j)];
}

bool ExactMatrix::is_zero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!entry_is_zero(i, j)) return false;
  return true;
}

namespace {

// Fraction-free elimination on an integer matrix, int64 entries with all
// intermediates checked; returns the rank or nullopt when a value escapes
// the int64 range (caller retries with big integers).
std::optional<std::size_t> bareiss_rank_i64(std::vector<long long> m, std::size_t rows,
                                            std::size_t cols) {
  const auto at = [&](std::size_t i, std::size_t j) -> long long& { return m[i * cols + j]; };
  long long prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(r, j), at(pivot, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        const __int128 t = static_cast<__int128>(at(r, c)) * at(i, j) -
                           static_cast<__int128>(at(i, c)) * at(r, j);
        const __int128 q = t / prev;
        if (q > std::numeric_limits<long long>::max() || q < std::numeric_limits<long long>::min())
          return std::nullopt;
        at(i, j) = static_cast<long long>(q);
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::size_t bareiss_rank_big(std::vector<BigInt> m, std::size_t rows, std::size_t cols) {
  const auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * cols + j]; };
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(r, j), at(pivot, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        BigInt q, rem;
        boost::multiprecision::divide_qr(t, prev, q, rem);
        if (rem != 0) throw internal_error("fraction-free elimination: inexact division");
        at(i, j) = std::move(q);
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t ExactMatrix::rank_rational() const {
  // Row scaling does not change rank: clear denominators per row.
  std::vector<BigInt> big(rows_ * cols_);
  bool fits_i64 = true;
  std::vector<long long> small;
  for (std::size_t i = 0; i < rows_; ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < cols_; ++j) {
      const BigInt den = boost::multiprecision::denominator(qdata_[idx(i, j)]);
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& q = qdata_[idx(i, j)];
      big[i * cols_ + j] =
          boost::multiprecision::numerator(q) * (lcm / boost::multiprecision::denominator(q));
    }
  }
  for (const BigInt& v : big) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
      fits_i64 = false;
      break;
    }
  }
  if (fits_i64) {
    small.resize(big.size());
    for (std::size_t k = 0; k < big.size(); ++k) small[k] = static_cast<long long>(big[k]);
    if (auto r = bareiss_rank_i64(std::move(small), rows_, cols_)) return *r;
  }
  return bareiss_rank_big(std::move(big), rows_, cols_);
}

std::size_t ExactMatrix::rank_mod_p() const {
  const std::uint64_t p = field_.p();
  std::vector<std::uint64_t> m = pdata_;
  const auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return m[i * cols_ + j]; };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && at(pivot, c) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(pivot, j));
    const std::uint64_t inv = mod_inverse(at(r, c), p);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (at(i, c) == 0) continue;
      const std::uint64_t factor = at(i, c) * inv % p;
      for (std::size_t j = c; j < cols_; ++j) {
        at(i, j) = (at(i, j) + (p - factor) * at(r, j)) % p;
      }
    }
    ++r;
  }
  return r;
}

std::size_t ExactMatrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  return field_.is_rationals() ? rank_rational() : rank_mod_p();
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& rhs) const {
  if (!(field_ == rhs.field_)) throw std::invalid_argument("matrix product across fields");
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix out(field_, rows_, rhs.cols_);
  if (field_.is_rationals()) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = qdata_[idx(i, k)];
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          const Rational& b = rhs.qdata_[rhs.idx(k, j)];
          if (b == 0) continue;
          out.qdata_[out.idx(i, j)] += a * b;
        }
      }
  } else {
    const std::uint64_t p = field_.p();
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const std::uint64_t a = pdata_[idx(i, k)];
        if (a == 0) continue;
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
          const std::uint64_t b = rhs.pdata_[rhs.idx(k, j)];
          if (b == 0) continue;
          out.pdata_[out.idx(i, j)] = (out.pdata_[out.idx(i, j)] + a * b) % p;
        }
      }
  }
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (field_.is_rationals()) {
        out.qdata_[out.idx(j, i)] = qdata_[idx(i, j)];
      } else {
        out.pdata_[out.idx(j, i)] = pdata_[idx(i, j)];
      }
    }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.qdata_ == b.qdata_ && a.pdata_ == b.pdata_;
}

}  // namespace facering
