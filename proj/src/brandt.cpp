#include "qtwist/brandt.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace qtwist {

BrandtModule::BrandtModule(std::shared_ptr<const ClassSet> classes, int threads)
    : classes_(std::move(classes)), threads_(std::max(threads, 1)) {
  const std::size_t n = classes_->size();
  forms_.resize(n * (n + 1) / 2);
  counts_.resize(n * (n + 1) / 2);
}

std::size_t BrandtModule::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return j * (j + 1) / 2 + i;
}

const ReducedNormForm& BrandtModule::pair_form(std::size_t i, std::size_t j) {
  auto& slot = forms_[index(i, j)];
  if (!slot) {
    const auto& a = classes_->reps[std::min(i, j)];
    const auto& b = classes_->reps[std::max(i, j)];
    slot = std::make_unique<ReducedNormForm>(
        reduce_norm_form(lattice_product(a.lattice, b.lattice.conj()), a.norm * b.norm));
  }
  return *slot;
}

void BrandtModule::ensure(std::int64_t m_max) {
  if (m_max <= bound_) return;
  const std::size_t n = classes_->size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i <= j; ++i) pair_form(i, j);
  std::vector<std::size_t> jobs(counts_.size());
  for (std::size_t k = 0; k < jobs.size(); ++k) jobs[k] = k;
  auto work = [&](std::size_t start) {
    for (std::size_t k = start; k < jobs.size(); k += static_cast<std::size_t>(threads_))
      counts_[k] = count_by_norm(forms_[k]->gram, m_max);
  };
  if (threads_ == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads_; ++t) pool.emplace_back(work, static_cast<std::size_t>(t));
    for (auto& th : pool) th.join();
  }
  bound_ = m_max;
}

std::int64_t BrandtModule::pair_count(std::size_t i, std::size_t j, std::int64_t m) const {
  if (m > bound_) throw InvalidArgument("BrandtModule::pair_count: norm beyond computed bound");
  return counts_[index(i, j)][m];
}

BrandtMatrix BrandtModule::matrix(std::int64_t m) {
  if (m < 1) throw InvalidArgument("brandt_matrix: m must be positive");
  ensure(std::max(m, bound_));
  const std::size_t n = classes_->size();
  BrandtMatrix b{m, IntMatrix64(n, std::vector<std::int64_t>(n, 0))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t pairs = pair_count(i, j, m);
      const std::int64_t w = classes_->unit_halforders[j];
      if (pairs % w != 0) throw VerificationFailure("brandt_matrix: representation count not divisible by units");
      b.entries[i][j] = pairs / w;
    }
  return b;
}

std::vector<std::vector<std::int64_t>> BrandtModule::column_counts(std::size_t j, std::int64_t bound,
                                                                   const std::vector<bool>& wanted) {
  const std::size_t n = classes_->size();
  std::vector<std::vector<std::int64_t>> out(n);
  for (std::size_t i = 0; i < n; ++i)
    if (wanted[i]) out[i] = count_by_norm(pair_form(i, j).gram, bound, threads_);
  return out;
}

BrandtMatrix brandt_matrix(const ClassSet& classes, std::int64_t m) {
  BrandtModule module(std::make_shared<const ClassSet>(classes));
  return module.matrix(m);
}

Rational height_pairing(const QVector& u, const QVector& v, const ClassSet& classes) {
  if (u.size() != classes.size() || v.size() != classes.size())
    throw InvalidArgument("height_pairing: vector length differs from class number");
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i] * Rational(static_cast<long>(classes.unit_halforders[i]));
  return s;
}

QVector EigenSystem::rational_coords() const {
  QVector v;
  for (const auto& c : coords) v.emplace_back(c);
  return v;
}

std::vector<std::int64_t> default_split_primes(std::int64_t p) {
  std::vector<std::int64_t> out;
  for (auto q : primes_up_to(50))
    if (q != p) out.push_back(q);
  return out;
}

namespace {

QVector row_times(const QVector& v, const BrandtMatrix& b) {
  const std::size_t n = v.size();
  QVector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (b.entries[i][j] != 0) out[j] += v[i] * Rational(static_cast<long>(b.entries[i][j]));
  }
  return out;
}

struct Block {
  QMatrix rows;  // RREF basis of an invariant subspace
  std::map<std::int64_t, std::int64_t> eigenvalues;
};

std::size_t leading_index(const QVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return i;
  return v.size();
}

}  // namespace

std::vector<EigenSystem> eigensystems(BrandtModule& brandt, const std::vector<std::int64_t>& primes) {
  const ClassSet& cs = brandt.classes();
  if (primes.empty()) throw InvalidArgument("eigensystems: no primes given");
  for (auto q : primes)
    if (q == cs.p || !is_prime(q)) throw InvalidArgument("eigensystems: primes must be prime and differ from p");
  const std::size_t n = cs.size();
  brandt.ensure(*std::max_element(primes.begin(), primes.end()));

  Block all;
  for (std::size_t i = 0; i < n; ++i) {
    QVector e(n);
    e[i] = 1;
    all.rows.push_back(std::move(e));
  }
  std::vector<Block> blocks{all};
  for (auto q : primes) {
    const BrandtMatrix b = brandt.matrix(q);
    std::vector<std::int64_t> candidates;
    const auto hasse = static_cast<std::int64_t>(std::floor(2 * std::sqrt(static_cast<double>(q))));
    for (std::int64_t l = -hasse; l <= hasse; ++l) candidates.push_back(l);
    candidates.push_back(q + 1);
    std::vector<Block> next;
    for (const auto& blk : blocks) {
      const std::size_t d = blk.rows.size();
      std::vector<std::size_t> pivots;
      for (const auto& r : blk.rows) pivots.push_back(leading_index(r));
      QMatrix m(d, QVector(d));
      for (std::size_t k = 0; k < d; ++k) {
        QVector img = row_times(blk.rows[k], b);
        for (std::size_t l = 0; l < d; ++l) m[k][l] = img[pivots[l]];
      }
      for (auto lambda : candidates) {
        // Left kernel of (M - lambda) = kernel of its transpose.
        QMatrix t(d, QVector(d));
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) t[r][c] = m[c][r] - (r == c ? Rational(static_cast<long>(lambda)) : Rational(0));
        QMatrix ker = nullspace(t);
        if (ker.empty()) continue;
        Block sub;
        for (const auto& x : ker) {
          QVector w(n);
          for (std::size_t k = 0; k < d; ++k)
            if (sgn(x[k]) != 0)
              for (std::size_t c = 0; c < n; ++c) w[c] += x[k] * blk.rows[k][c];
          sub.rows.push_back(std::move(w));
        }
        rref(sub.rows);
        sub.eigenvalues = blk.eigenvalues;
        sub.eigenvalues[q] = lambda;
        next.push_back(std::move(sub));
      }
    }
    blocks = std::move(next);
  }

  std::vector<EigenSystem> out;
  for (const auto& blk : blocks) {
    if (blk.eigenvalues.at(primes.front()) == primes.front() + 1) continue;  // Eisenstein line
    if (blk.rows.size() > 1)
      throw IrrationalEigensystem("eigensystems: rational block of dimension " + std::to_string(blk.rows.size()) +
                                  " does not split with the given primes");
    EigenSystem e;
    e.coords = primitive_integral(blk.rows.front());
    e.eigenvalues = blk.eigenvalues;
    QVector v = e.rational_coords();
    e.height = height_pairing(v, v, cs);
    for (auto q : primes) {
      QVector img = row_times(v, brandt.matrix(q));
      for (std::size_t i = 0; i < n; ++i)
        if (img[i] != v[i] * Rational(static_cast<long>(e.eigenvalues[q])))
          throw NotAnEigenvector("eigensystems: split line is not an eigenvector");
    }
    out.push_back(std::move(e));
  }
  if (out.empty()) throw IrrationalEigensystem("eigensystems: no rational cuspidal eigenline for p = " + std::to_string(cs.p));
  std::sort(out.begin(), out.end(), [&](const EigenSystem& a, const EigenSystem& b) {
    for (auto q : primes)
      if (a.eigenvalues.at(q) != b.eigenvalues.at(q)) return a.eigenvalues.at(q) < b.eigenvalues.at(q);
    return false;
  });
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::string suffix;
    for (std::size_t t = k + 1; t > 0; t = (t - 1) / 26) suffix.insert(suffix.begin(), static_cast<char>('A' + (t - 1) % 26));
    out[k].label = std::to_string(cs.p) + suffix;
  }
  return out;
}

std::int64_t hecke_eigenvalue(const EigenSystem& e, BrandtModule& brandt, std::int64_t m) {
  if (m == 1) return 1;
  QVector v = e.rational_coords();
  QVector img = row_times(v, brandt.matrix(m));
  const std::size_t lead = leading_index(v);
  Rational lambda = img[lead] / v[lead];
  for (std::size_t i = 0; i < v.size(); ++i)
    if (img[i] != lambda * v[i]) throw NotAnEigenvector("hecke_eigenvalue: vector is not an eigenvector of B_" + std::to_string(m));
  if (lambda.get_den() != 1) throw NotAnEigenvector("hecke_eigenvalue: non-integral eigenvalue");
  return lambda.get_num().get_si();
}

const EigenSystem& select_form(const std::vector<EigenSystem>& systems, const std::vector<std::int64_t>& signature) {
  for (const auto& e : systems) {
    std::size_t k = 0;
    bool ok = true;
    for (const auto& [q, a] : e.eigenvalues) {
      if (k == signature.size()) break;
      if (a != signature[k++]) {
        ok = false;
        break;
      }
    }
    if (ok && k == signature.size()) return e;
  }
  throw InvalidArgument("select_form: no eigensystem matches the requested signature");
}

}  // namespace qtwist
