#include "gnc/cochain.hpp"

namespace gnc {

void CochainComplex::check() const {
  if (labels.empty()) {
    if (!diffs.empty()) throw std::logic_error("cochain complex: differentials without spaces");
    return;
  }
  if (diffs.size() + 1 != labels.size())
    throw std::logic_error("cochain complex: differential count mismatch");
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    if (diffs[k].cols() != labels[k].size() || diffs[k].rows() != labels[k + 1].size())
      throw std::logic_error("cochain complex: differential shape mismatch at degree " +
                             std::to_string(lo + static_cast<int>(k)));
  }
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k) {
    if (!(diffs[k + 1] * diffs[k]).is_zero())
      throw std::logic_error("cochain complex: d∘d ≠ 0 at degree " +
                             std::to_string(lo + static_cast<int>(k)));
  }
}

std::size_t cohomology_dim(const CochainComplex& c, int q) {
  if (!c.in_range(q)) throw std::out_of_range("cohomology_dim: degree outside complex");
  const RatMatrix* dq = c.diff(q);
  std::size_t kernel_dim = c.dim(q) - (dq ? rank(*dq) : 0);
  const RatMatrix* dprev = c.diff(q - 1);
  std::size_t image_dim = dprev ? rank(*dprev) : 0;
  if (image_dim > kernel_dim)
    throw std::logic_error("cohomology_dim: image exceeds kernel (complex not a complex)");
  return kernel_dim - image_dim;
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& c) {
  std::vector<std::size_t> out;
  for (int q = c.lo; q <= c.hi(); ++q) out.push_back(cohomology_dim(c, q));
  return out;
}

namespace {

/* incremental reduced elimination over a fixed column count, used to pick
   representatives independently of the image */
struct Sieve {
  RatMatrix staged;
  std::size_t used = 0;
  explicit Sieve(std::size_t cols) : staged(0, cols), cols_(cols) {}

  /* true iff v is independent from everything absorbed so far */
  bool absorb(const std::vector<Rat>& v) {
    RatMatrix next(used + 1, cols_);
    for (const auto& [key, val] : staged.entries()) next.set(key.first, key.second, val);
    for (std::size_t j = 0; j < cols_; ++j)
      if (v[j] != 0) next.set(used, j, v[j]);
    if (rank(next) == used + 1) {
      staged = std::move(next);
      ++used;
      return true;
    }
    return false;
  }

 private:
  std::size_t cols_;
};

}  // namespace

CohomologyBasis cohomology_basis(const CochainComplex& c, int q) {
  if (!c.in_range(q)) throw std::out_of_range("cohomology_basis: degree outside complex");
  std::size_t n = c.dim(q);

  CohomologyBasis out;
  if (const RatMatrix* dprev = c.diff(q - 1)) out.image = column_space_basis(*dprev);

  std::vector<std::vector<Rat>> kernel;
  if (const RatMatrix* dq = c.diff(q)) {
    kernel = rank_and_kernel(*dq).kernel;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rat> e(n, Rat(0));
      e[i] = 1;
      kernel.push_back(std::move(e));
    }
  }

  Sieve sieve(n);
  for (const auto& b : out.image)
    if (!sieve.absorb(b)) throw std::logic_error("cohomology_basis: dependent image basis");
  for (const auto& k : kernel)
    if (sieve.absorb(k)) out.reps.push_back(k);
  return out;
}

RatMatrix induced_cohomology_map(const CochainComplex& src, const CochainComplex& dst,
                                 const std::vector<RatMatrix>& chain_map, int q) {
  if (src.lo != dst.lo)
    throw std::invalid_argument("induced_cohomology_map: complexes not aligned");
  if (chain_map.size() != static_cast<std::size_t>(src.degree_count()))
    throw std::invalid_argument("induced_cohomology_map: one matrix per degree required");
  for (int k = 0; k < src.degree_count(); ++k) {
    int deg = src.lo + k;
    if (chain_map[k].cols() != src.dim(deg) || chain_map[k].rows() != dst.dim(deg))
      throw std::invalid_argument("induced_cohomology_map: chain map shape mismatch at degree " +
                                  std::to_string(deg));
  }
  for (int k = 0; k + 1 < src.degree_count(); ++k) {
    int deg = src.lo + k;
    const RatMatrix* ds = src.diff(deg);
    const RatMatrix* dd = dst.diff(deg);
    RatMatrix lhs = chain_map[k + 1] * (*ds);
    RatMatrix rhs = dd ? (*dd) * chain_map[k] : RatMatrix(dst.dim(deg + 1), src.dim(deg));
    if (!(lhs == rhs)) throw ChainMapError(deg);
  }

  CohomologyBasis bs = cohomology_basis(src, q);
  CohomologyBasis bd = cohomology_basis(dst, q);

  std::vector<std::vector<Rat>> span = bd.image;
  span.insert(span.end(), bd.reps.begin(), bd.reps.end());

  RatMatrix out(bd.reps.size(), bs.reps.size());
  const RatMatrix& fq = chain_map[q - src.lo];
  for (std::size_t j = 0; j < bs.reps.size(); ++j) {
    std::vector<Rat> w = fq.apply(bs.reps[j]);
    auto x = solve_in_span(span, w);
    if (!x) throw std::logic_error("induced_cohomology_map: image not a cocycle");
    for (std::size_t i = 0; i < bd.reps.size(); ++i)
      if ((*x)[bd.image.size() + i] != 0) out.set(i, j, (*x)[bd.image.size() + i]);
  }
  return out;
}

}  // namespace gnc
