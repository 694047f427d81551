#include "thinset/trig_polynomial.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <unordered_map>

#include "thinset/errors.hpp"

namespace thinset {

namespace {

// FFTW plans are created under a lock and reused. FFTW_UNALIGNED keeps the
// codelet choice independent of buffer alignment, so results are reproducible.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [n, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan backward(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plans_.find(n);
    if (it != plans_.end()) return it->second;
    std::vector<Complex> scratch(n);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) throw InternalError("fftw plan creation failed for n=" + std::to_string(n));
    plans_.emplace(n, plan);
    return plan;
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::size_t, fftw_plan> plans_;
};

PlanCache& plan_cache() {
  static PlanCache cache;
  return cache;
}

// Tables of e^{2 pi i j / m}, shared across calls.
std::shared_ptr<const std::vector<Complex>> roots_of_unity(std::size_t m) {
  static std::mutex mu;
  static std::unordered_map<std::size_t, std::shared_ptr<const std::vector<Complex>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) {
    auto roots = std::make_shared<std::vector<Complex>>(m);
    for (std::size_t j = 0; j < m; ++j)
      (*roots)[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
    slot = std::move(roots);
  }
  return slot;
}

std::size_t mod_index(Frequency g, std::size_t m) {
  const auto mm = static_cast<Frequency>(m);
  Frequency r = g % mm;
  if (r < 0) r += mm;
  return static_cast<std::size_t>(r);
}

}  // namespace

TrigPolynomial::TrigPolynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex(0.0, 0.0); });
}

TrigPolynomial TrigPolynomial::indicator(const FreqSet& a) {
  Terms t;
  for (Frequency g : a) t.emplace(g, Complex(1.0, 0.0));
  return TrigPolynomial(std::move(t));
}

TrigPolynomial TrigPolynomial::with_coefficients(const FreqSet& spectrum,
                                                 const std::vector<Complex>& coeffs) {
  if (coeffs.size() != spectrum.size())
    throw PreconditionError("with_coefficients: size mismatch");
  Terms t;
  for (std::size_t i = 0; i < coeffs.size(); ++i) t.emplace(spectrum[i], coeffs[i]);
  return TrigPolynomial(std::move(t));
}

Complex TrigPolynomial::coefficient(Frequency g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

FreqSet TrigPolynomial::spectrum() const {
  std::vector<Frequency> s;
  s.reserve(terms_.size());
  for (const auto& kv : terms_) s.push_back(kv.first);
  return FreqSet(std::move(s));
}

Frequency TrigPolynomial::degree() const {
  if (terms_.empty()) return 0;
  return std::max(std::abs(terms_.begin()->first), std::abs(terms_.rbegin()->first));
}

Frequency TrigPolynomial::min_frequency() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

Frequency TrigPolynomial::max_frequency() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

TrigPolynomial TrigPolynomial::scaled(Complex c) const {
  Terms t;
  for (const auto& [g, v] : terms_) t.emplace(g, c * v);
  return TrigPolynomial(std::move(t));
}

TrigPolynomial TrigPolynomial::shifted(Frequency shift) const {
  Terms t;
  for (const auto& [g, v] : terms_) t.emplace(g - shift, v);
  return TrigPolynomial(std::move(t));
}

Complex TrigPolynomial::operator()(double t) const {
  Complex acc(0.0, 0.0);
  for (const auto& [g, v] : terms_) {
    const double arg = std::fmod(static_cast<double>(g) * t, 2.0 * std::numbers::pi);
    acc += v * Complex(std::cos(arg), std::sin(arg));
  }
  return acc;
}

double fq_norm(const TrigPolynomial& f, double q) {
  if (!(q >= 1.0)) throw DomainError("fq_norm: q must be >= 1");
  if (std::isinf(q)) {
    double m = 0.0;
    for (const auto& kv : f.terms()) m = std::max(m, std::abs(kv.second));
    return m;
  }
  double acc = 0.0;
  for (const auto& kv : f.terms()) acc += std::pow(std::abs(kv.second), q);
  return std::pow(acc, 1.0 / q);
}

LorentzNorms lorentz_norms(const TrigPolynomial& f, double q) {
  if (!(q > 1.0)) throw DomainError("lorentz_norms: q must exceed 1");
  LorentzNorms out;
  if (f.empty()) return out;
  std::vector<double> a;
  a.reserve(f.size());
  for (const auto& kv : f.terms()) a.push_back(std::abs(kv.second));
  std::sort(a.begin(), a.end(), std::greater<>());
  const double inv_q = 1.0 / q;
  const double inv_q_conj = 1.0 - inv_q;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    out.l_q1 += a[i] / std::pow(n, inv_q_conj);
    out.l_qinf = std::max(out.l_qinf, std::pow(n, inv_q) * a[i]);
  }
  return out;
}

std::vector<Complex> evaluate_grid_direct(const TrigPolynomial& f, std::size_t m) {
  if (m == 0) throw PreconditionError("evaluate_grid: M must be positive");
  const auto table = roots_of_unity(m);
  const auto& roots = *table;
  std::vector<Complex> out(m, Complex(0.0, 0.0));
  for (const auto& [g, c] : f.terms()) {
    const std::uint64_t step = mod_index(g, m);
    std::uint64_t idx = 0;
    const double cr = c.real(), ci = c.imag();
    for (std::size_t k = 0; k < m; ++k) {
      const double rr = roots[idx].real(), ri = roots[idx].imag();
      out[k] += Complex(cr * rr - ci * ri, cr * ri + ci * rr);
      idx += step;
      if (idx >= m) idx -= m;
    }
  }
  return out;
}

std::vector<Complex> evaluate_grid_fast(const TrigPolynomial& f, std::size_t m) {
  if (m == 0) throw PreconditionError("evaluate_grid: M must be positive");
  std::vector<Complex> buf(m, Complex(0.0, 0.0));
  for (const auto& [g, c] : f.terms()) buf[mod_index(g, m)] += c;
  auto* data = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_execute_dft(plan_cache().backward(m), data, data);
  return buf;
}

std::vector<Complex> evaluate_grid(const TrigPolynomial& f, std::size_t m) {
  const double log_m = std::log2(static_cast<double>(std::max<std::size_t>(m, 2)));
  if (static_cast<double>(f.size()) > 0.5 * log_m) return evaluate_grid_fast(f, m);
  return evaluate_grid_direct(f, m);
}

std::size_t default_grid_size(Frequency degree) {
  const auto need = std::max<std::uint64_t>(1024, 16 * (static_cast<std::uint64_t>(degree) + 1));
  return std::bit_ceil(need);
}

Frequency centered_degree(const TrigPolynomial& f) {
  if (f.empty()) return 0;
  const Frequency lo = f.min_frequency();
  const Frequency hi = f.max_frequency();
  const Frequency mid = lo + (hi - lo) / 2;
  return std::max(hi - mid, mid - lo);
}

double lq_function_norm(const TrigPolynomial& f, double q, std::size_t m) {
  if (!(q >= 1.0)) throw DomainError("lq_function_norm: q must be >= 1");
  if (m < 4 * (static_cast<std::size_t>(f.degree()) + 1))
    throw PreconditionError("lq_function_norm: grid too coarse, need M >= 4 (degree + 1)");
  if (f.empty()) return 0.0;
  const auto vals = evaluate_grid(f, m);
  double acc = 0.0;
  for (const auto& v : vals) acc += std::pow(std::abs(v), q);
  return std::pow(acc / static_cast<double>(m), 1.0 / q);
}

TrigPolynomial multiply(const TrigPolynomial& f, const TrigPolynomial& g) {
  TrigPolynomial::Terms out;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) out[a + b] += ca * cb;
  return TrigPolynomial(std::move(out));
}

int dyadic_level(double x) {
  if (!(x > 0.0 && x <= 1.0)) throw DomainError("dyadic_level: x must lie in (0,1]");
  int e = 0;
  const double mant = std::frexp(x, &e);  // x = mant 2^e, mant in [1/2, 1)
  return mant == 0.5 ? 2 - e : 1 - e;
}

std::size_t LevelSetDecomposition::level_size(int j) const {
  for (const auto& lv : levels)
    if (lv.j == j) return lv.members.size();
  return 0;
}

LevelSetDecomposition level_sets(const TrigPolynomial& f, double ratio) {
  if (!(ratio > 1.0)) throw DomainError("level_sets: ratio R1 must exceed 1");
  if (f.empty()) throw PreconditionError("level_sets: polynomial must be nonempty");

  const double top = fq_norm(f, std::numeric_limits<double>::infinity());
  std::map<int, std::vector<Frequency>> bins;
  for (const auto& [g, c] : f.terms()) {
    const double x = std::min(1.0, std::abs(c) / top);
    bins[dyadic_level(x)].push_back(g);
  }

  LevelSetDecomposition out;
  out.ratio = ratio;
  for (auto& [j, members] : bins) out.levels.push_back({j, FreqSet(std::move(members))});

  int current = 1;
  out.selected_indices.push_back(current);
  out.sizes.push_back(out.level_size(current));
  for (;;) {
    const double bar = ratio * static_cast<double>(out.level_size(current));
    int next = 0;
    for (const auto& lv : out.levels) {
      if (lv.j > current && static_cast<double>(lv.members.size()) > bar) {
        next = lv.j;
        break;
      }
    }
    if (next == 0) break;
    current = next;
    out.selected_indices.push_back(current);
    out.sizes.push_back(out.level_size(current));
  }
  return out;
}

}  // namespace thinset
