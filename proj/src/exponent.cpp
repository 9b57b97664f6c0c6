#include "epist/exponent.hpp"

#include "epist/dbonacci.hpp"
#include "epist/error.hpp"
#include "epist/matrix.hpp"

#include <algorithm>
#include <utility>

namespace epist {

SStream::SStream(DirectiveSequence delta)
    : delta_(std::move(delta)), x_(delta_.alphabet_size(), 1) {}

void SStream::advance() {
  row_apply(x_, delta_.letter_at(n_ + 1));
  ++n_;
}

BigInt SStream::s() const { return vec_sum(x_); }

std::vector<BigInt> s_values(const DirectiveSequence& delta, std::int64_t n_max) {
  if (n_max < 0) throw Error("Nmax must be nonnegative");
  std::vector<BigInt> out;
  out.reserve(n_max + 1);
  SStream st(delta);
  out.push_back(st.s());
  for (std::int64_t n = 1; n <= n_max; ++n) {
    st.advance();
    out.push_back(st.s());
  }
  return out;
}

namespace {

ExponentEstimate infinite_estimate() {
  ExponentEstimate e;
  e.kind = ExponentKind::Infinite;
  e.lo = e.hi = 0;
  return e;
}

// Limsup of s_N / (s_N - s_{N-1}) for an AR directive, by per-residue-class
// convergence of the exact ratios over period sweeps.
ExponentEstimate asymptotic_ar(const DirectiveSequence& delta,
                               const AsymptoticOptions& opt) {
  if (opt.tol <= 0) throw Error("tolerance must be positive");
  const std::size_t p = delta.period().size();
  SStream st(delta);
  BigInt s_prev = st.s();
  for (std::size_t i = 0; i < delta.preperiod().size(); ++i) {
    st.advance();
    s_prev = st.s();
  }

  std::vector<BigRat> prev(p), cur(p);
  bool have_prev = false;
  int stable = 0;
  while (true) {
    for (std::size_t c = 0; c < p; ++c) {
      st.advance();
      BigInt s = st.s();
      cur[c] = BigRat(s, s - s_prev);
      s_prev = std::move(s);
    }
    if (have_prev) {
      BigRat osc = 0;
      for (std::size_t c = 0; c < p; ++c) {
        BigRat diff = abs(cur[c] - prev[c]);
        if (diff > osc) osc = diff;
      }
      stable = osc < opt.tol ? stable + 1 : 0;
      if (stable >= 2) break;
    }
    prev = cur;
    have_prev = true;
    if (st.index() > opt.max_steps) {
      BigRat best = *std::max_element(cur.begin(), cur.end());
      throw ConvergenceError("asymptotic exponent did not stabilize within the step budget",
                             1 + best - opt.tol, 1 + best + opt.tol);
    }
  }
  BigRat best = *std::max_element(cur.begin(), cur.end());
  ExponentEstimate e;
  e.kind = ExponentKind::LimitEstimate;
  e.lo = 1 + best - opt.tol;
  e.hi = 1 + best + opt.tol;
  return e;
}

}  // namespace

ExponentEstimate asymptotic_exponent(const DirectiveSequence& delta,
                                     const AsymptoticOptions& opt) {
  switch (classify(delta).tag) {
    case SequenceClass::PeriodicEpisturmian:
      return infinite_estimate();
    case SequenceClass::ArnouxRauzy:
      return asymptotic_ar(delta, opt);
    case SequenceClass::AperiodicNonAR: {
      // Work on the AR sequence v with u = psi(v). When the peeled prefix is
      // empty the two sequences coincide up to unused letters; otherwise the
      // result is E*(v), a lower bound for E*(u).
      return asymptotic_ar(project_to_ar(delta).projected, opt);
    }
  }
  throw Error("unreachable");
}

ExponentEstimate asymptotic_exponent(const DirectiveSequence& delta, const BigRat& tol) {
  AsymptoticOptions opt;
  opt.tol = tol;
  return asymptotic_exponent(delta, opt);
}

ExponentEstimate critical_exponent(const DirectiveSequence& delta, std::int64_t n_max) {
  if (n_max < 1) throw Error("Nmax must be at least 1");
  auto cls = classify(delta);
  if (cls.tag == SequenceClass::PeriodicEpisturmian) return infinite_estimate();
  if (cls.tag == SequenceClass::AperiodicNonAR) {
    auto proj = project_to_ar(delta);
    if (!proj.prefix.empty())
      throw Error(
          "the sequence is a proper morphic image of an AR sequence; its critical "
          "exponent is not given by the matrix formula (the asymptotic exponent "
          "of the projection is a certified lower bound)");
    return critical_exponent(proj.projected, n_max);
  }

  const int d = delta.alphabet_size();
  SStream st(delta);
  BigInt s_prev = st.s();
  BigRat sup = 0;
  std::int64_t witness = -1;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    st.advance();
    BigInt s = st.s();
    BigRat ratio(s - d, s - s_prev);
    if (ratio > sup) {
      sup = std::move(ratio);
      witness = n;
    }
    s_prev = std::move(s);
  }

  ExponentEstimate e;
  e.finite_sup = 1 + sup;
  e.has_finite_sup = true;
  e.witness_n = witness;

  if (is_dbonacci_class(delta)) {
    // E = E* = 2 + 1/(t-1), proven for the d-bonacci class.
    RatInterval t = pisot_root_enclosure(d, 96);
    e.kind = ExponentKind::Exact;
    e.lo = 2 + BigRat(1) / (t.hi - 1);
    e.hi = 2 + BigRat(1) / (t.lo - 1);
    return e;
  }

  ExponentEstimate limit = asymptotic_exponent(delta, AsymptoticOptions{});
  e.kind = ExponentKind::SupCandidate;
  e.lo = std::max(e.finite_sup, limit.lo);
  e.hi = std::max(e.finite_sup, limit.hi);
  return e;
}

std::vector<double> letter_frequencies(const DirectiveSequence& delta, std::size_t length) {
  if (length < 1) throw Error("prefix length must be positive");
  Word prefix = standard_prefix(delta, length);
  std::vector<double> freq(delta.alphabet_size(), 0.0);
  for (Letter l : prefix.letters()) freq[l] += 1.0;
  for (double& f : freq) f /= static_cast<double>(length);
  return freq;
}

}  // namespace epist
