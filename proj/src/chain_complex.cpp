#include "facering/chain_complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace facering {

bool BettiVector::all_zero() const {
  return std::all_of(dims_.begin(), dims_.end(), [](long d) { return d == 0; });
}

long BettiVector::total() const { return std::accumulate(dims_.begin(), dims_.end(), 0L); }

bool operator==(const BettiVector& a, const BettiVector& b) {
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  for (int i = lo; i <= hi; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

std::string BettiVector::to_string() const {
  std::ostringstream os;
  os << "[deg " << lo_ << ".." << hi() << ":";
  for (long d : dims_) os << ' ' << d;
  os << ']';
  return os.str();
}

FiniteChainComplex::FiniteChainComplex(FieldSpec field, int lo, Direction dir,
                                       std::vector<long> dims, std::vector<ExactMatrix> diffs)
    : field_(field), lo_(lo), dir_(dir), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (dims_.empty()) throw std::invalid_argument("chain complex needs at least one term");
  if (diffs_.size() + 1 != dims_.size())
    throw std::invalid_argument("chain complex: differential count mismatch");
  for (std::size_t j = 0; j < diffs_.size(); ++j) {
    const auto lower = static_cast<std::size_t>(dims_[j]);
    const auto upper = static_cast<std::size_t>(dims_[j + 1]);
    const bool ok = (dir_ == Direction::down)
                        ? (diffs_[j].rows() == lower && diffs_[j].cols() == upper)
                        : (diffs_[j].rows() == upper && diffs_[j].cols() == lower);
    if (!ok || !(diffs_[j].field() == field_))
      throw std::invalid_argument("chain complex: differential shape or field mismatch");
  }
}

long FiniteChainComplex::dim_at(int degree) const {
  const int k = degree - lo_;
  return (k >= 0 && k < static_cast<int>(dims_.size())) ? dims_[static_cast<std::size_t>(k)] : 0;
}

void FiniteChainComplex::check_composite_zero() const {
  for (std::size_t j = 0; j + 1 < diffs_.size(); ++j) {
    const ExactMatrix composite = (dir_ == Direction::down)
                                      ? diffs_[j].multiply(diffs_[j + 1])
                                      : diffs_[j + 1].multiply(diffs_[j]);
    if (!composite.is_zero())
      throw internal_error("chain complex: composite of consecutive differentials is nonzero");
  }
}

BettiVector FiniteChainComplex::homology_dims() const {
  check_composite_zero();
  std::vector<std::size_t> ranks(diffs_.size());
  for (std::size_t j = 0; j < diffs_.size(); ++j) ranks[j] = diffs_[j].rank();
  std::vector<long> h(dims_.size());
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    // Whichever direction, the two differentials touching degree lo+k are
    // diffs[k-1] and diffs[k]; one is incoming, the other outgoing.
    long v = dims_[k];
    if (k > 0) v -= static_cast<long>(ranks[k - 1]);
    if (k < diffs_.size()) v -= static_cast<long>(ranks[k]);
    if (v < 0) throw internal_error("negative homology dimension");
    h[k] = v;
  }
  return BettiVector(lo_, std::move(h));
}

}  // namespace facering
