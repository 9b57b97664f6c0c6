#include "epist/selfcheck.hpp"

#include "epist/bispecial.hpp"
#include "epist/dbonacci.hpp"
#include "epist/directive.hpp"
#include "epist/error.hpp"
#include "epist/exponent.hpp"
#include "epist/maximality.hpp"
#include "epist/morphism.hpp"
#include "epist/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

namespace epist {

namespace {

using Rng = std::mt19937_64;

struct CheckFail : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw CheckFail(msg);
}

Word random_word(Rng& rng, int d, std::size_t len) {
  std::uniform_int_distribution<int> pick(0, d - 1);
  std::vector<Letter> letters(len);
  for (auto& l : letters) l = static_cast<Letter>(pick(rng));
  return Word(d, std::move(letters));
}

// AR directive: period is a shuffle of all d letters with a few extras,
// preperiod is short and random.
DirectiveSequence random_ar_directive(Rng& rng, int d) {
  std::uniform_int_distribution<int> pick(0, d - 1);
  std::vector<Letter> per(d);
  std::iota(per.begin(), per.end(), Letter{0});
  std::shuffle(per.begin(), per.end(), rng);
  int extras = static_cast<int>(rng() % 3);
  for (int i = 0; i < extras; ++i)
    per.insert(per.begin() + static_cast<std::ptrdiff_t>(rng() % (per.size() + 1)),
               static_cast<Letter>(pick(rng)));
  std::vector<Letter> pre(rng() % 3);
  for (auto& l : pre) l = static_cast<Letter>(pick(rng));
  return DirectiveSequence(d, std::move(pre), std::move(per));
}

DirectiveSequence random_directive(Rng& rng, int d) {
  std::uniform_int_distribution<int> pick(0, d - 1);
  std::vector<Letter> pre(rng() % 3), per(1 + rng() % 4);
  for (auto& l : pre) l = static_cast<Letter>(pick(rng));
  for (auto& l : per) l = static_cast<Letter>(pick(rng));
  return DirectiveSequence(d, std::move(pre), std::move(per));
}

// Independent route to s_N: full incidence-matrix products, no row updates.
BigInt s_by_matrices(const DirectiveSequence& delta, std::int64_t n) {
  const int d = delta.alphabet_size();
  BigMatrix prod = BigMatrix::identity(d);
  for (std::int64_t k = 1; k <= n; ++k)
    prod = prod * incidence(Morphism::elementary(delta.letter_at(k), d));
  return ones_product(prod);
}

// Plain-definition repetition scan: for every (start, period) extend letter
// by letter. Exists only to cross-check the production scan.
std::pair<std::size_t, std::size_t> exhaustive_best_power(const Word& w) {
  const std::size_t n = w.size();
  std::size_t best_len = 0, best_p = 1;
  for (std::size_t p = 1; p <= n; ++p)
    for (std::size_t i = 0; i + p <= n; ++i) {
      std::size_t len = p;
      while (i + len < n && w[i + len] == w[i + len - p]) ++len;
      if (static_cast<std::uint64_t>(len) * best_p >
          static_cast<std::uint64_t>(best_len) * p) {
        best_len = len;
        best_p = p;
      }
    }
  return {best_len, best_p};
}

struct QC {
  BigRat re, im;
};
QC qc_mul(const QC& a, const QC& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigRat qc_norm2(const QC& a) { return a.re * a.re + a.im * a.im; }

BigRat pow10(int k) {
  BigInt t = 1;
  for (int i = 0; i < k; ++i) t *= 10;
  return BigRat(1, t);
}

struct Ctx {
  Rng rng;
  bool small;
};

// ---------------------------------------------------------------- core ----

void check_parikh_laws(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 40 : 200); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 4);
    Word w = random_word(c.rng, d, c.rng() % 60);
    auto p = parikh(w);
    require(vec_sum(p) == BigInt(w.size()), "sum of Parikh counts != |w|");
    require(parikh(reverse(w)) == p, "Parikh not invariant under reversal");
    require(reverse(reverse(w)) == w, "double reversal is not the identity");
  }
}

void check_matvec_linearity(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 30 : 150); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 4);
    BigMatrix m(d);
    BigVec u(d), v(d), sum(d);
    for (int i = 0; i < d; ++i) {
      u[i] = static_cast<int>(c.rng() % 50);
      v[i] = static_cast<int>(c.rng() % 50);
      sum[i] = u[i] + v[i];
      for (int j = 0; j < d; ++j) m.at(i, j) = static_cast<int>(c.rng() % 10);
    }
    BigVec lhs = mat_vec(m, sum), rhs = mat_vec(m, u);
    BigVec mv = mat_vec(m, v);
    for (int i = 0; i < d; ++i) rhs[i] += mv[i];
    require(lhs == rhs, "mat_vec does not distribute over addition");
  }
}

// ----------------------------------------------------------- morphisms ----

Morphism random_elementary_chain(Ctx& c, int d, int max_len) {
  Morphism m = Morphism::elementary(static_cast<Letter>(c.rng() % d), d);
  int len = 1 + static_cast<int>(c.rng() % max_len);
  for (int i = 1; i < len; ++i)
    m = compose(m, Morphism::elementary(static_cast<Letter>(c.rng() % d), d));
  return m;
}

void check_abelianization(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 25 : 120); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 4);
    Morphism m = random_elementary_chain(c, d, 5);
    Word w = random_word(c.rng, d, c.rng() % 30);
    require(parikh(apply(m, w)) == mat_vec(incidence(m), parikh(w)),
            "parikh(apply) != incidence * parikh");
  }
}

void check_incidence_functorial(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 25 : 120); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 4);
    Morphism a = random_elementary_chain(c, d, 4);
    Morphism b = random_elementary_chain(c, d, 4);
    require(incidence(compose(a, b)) == incidence(a) * incidence(b),
            "incidence is not functorial under composition");
  }
}

void check_permutation_conjugation(Ctx&) {
  for (int d = 2; d <= 6; ++d) {
    std::vector<Letter> perm(d);
    std::iota(perm.begin(), perm.end(), Letter{0});
    do {
      Permutation pi(perm);
      BigMatrix p = permutation_matrix(pi), pt = transpose(p);
      for (int k = 0; k < d; ++k) {
        BigMatrix mk = incidence(Morphism::elementary(static_cast<Letter>(k), d));
        BigMatrix target = incidence(Morphism::elementary(conjugate(pi, static_cast<Letter>(k)), d));
        require(pt * mk * p == target, "P^T M_k P != M_{pi(k)} at d=" + std::to_string(d));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

void check_row_update_law(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 40 : 200); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 5);
    BigVec x(d);
    for (auto& v : x) v = static_cast<int>(c.rng() % 100);
    Letter i = static_cast<Letter>(c.rng() % d);
    BigVec fast = x;
    row_apply(fast, i);
    BigVec full = vec_mat(x, incidence(Morphism::elementary(i, d)));
    require(fast == full, "O(d) row update disagrees with the full product");
  }
}

// ----------------------------------------------------------- directive ----

void check_prefix_stability(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 20 : 80); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 3);
    DirectiveSequence delta = random_directive(c.rng, d);
    std::size_t l2 = 20 + c.rng() % 300, l1 = c.rng() % l2;
    Word a = standard_prefix(delta, l1), b = standard_prefix(delta, l2);
    require(a.size() == l1 && b.size() == l2, "prefix has the wrong length");
    require(b.subword(0, l1) == a, "prefixes are not nested under the length");
  }
}

void check_periodic_form(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 15 : 60); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 3);
    std::vector<Letter> pre(c.rng() % 3);
    for (auto& l : pre) l = static_cast<Letter>(c.rng() % d);
    Letter tail = static_cast<Letter>(c.rng() % d);
    DirectiveSequence delta(d, pre, {tail});
    std::size_t len = 30 + c.rng() % 100;
    // Reference route: apply the preperiod morphisms to tail^K directly.
    Word powers(d, std::vector<Letter>(len, tail));
    for (std::size_t i = pre.size(); i-- > 0;)
      powers = apply(Morphism::elementary(pre[i], d), powers);
    require(standard_prefix(delta, len) == powers.subword(0, len),
            "periodic directive prefix != psi_1..psi_m(tail^w)");
  }
}

// ----------------------------------------------------------- bispecial ----

void check_bispecial_recursion(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 10 : 30); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 3);
    DirectiveSequence delta = random_ar_directive(c.rng, d);
    std::int64_t n_max = c.small ? 8 : 10;
    auto recs = bispecial_records(delta, n_max);
    for (std::int64_t n = 1; n <= n_max; ++n) {
      require(recs[n].b && recs[n].r, "record not materialized at desk scale");
      Word expect = *recs[n].r;
      expect.append(*recs[n - 1].b);
      require(*recs[n].b == expect, "b_N != r_N b_{N-1}");
      require(BigInt(recs[n].b->size()) == recs[n].len_b, "|b_N| != formula length");
      require(BigInt(recs[n].r->size()) == recs[n].len_r, "|r_N| != formula length");
      BigInt s_n = s_by_matrices(delta, n), s_prev = s_by_matrices(delta, n - 1);
      require(recs[n].len_b * (d - 1) == s_n - d, "lenB != (s_N - d)/(d-1)");
      require(recs[n].len_r * (d - 1) == s_n - s_prev, "lenR != (s_N - s_{N-1})/(d-1)");
    }
  }
}

std::size_t prefix_size_for(const DirectiveSequence& delta, std::int64_t n) {
  // Long enough that b_n occurs several times with both of its extensions:
  // occurrences of b_{n+2} already force that, and they are at most one
  // return word apart.
  BigInt s = s_values(delta, n + 2).back();
  return static_cast<std::size_t>(4 * s + 128);
}

void check_bispecial_oracle(Ctx& c) {
  for (int d = 2; d <= 3; ++d) {
    for (int trial = 0; trial < (c.small ? 2 : 4); ++trial) {
      DirectiveSequence delta = random_ar_directive(c.rng, d);
      std::int64_t n_max = c.small ? 5 : 6;
      auto recs = bispecial_records(delta, n_max);
      Word prefix = standard_prefix(delta, prefix_size_for(delta, n_max));
      std::size_t max_len = static_cast<std::size_t>(recs[n_max].len_b);
      auto profiles = oracle::bispecials_in_prefix(prefix, max_len);
      // The oracle's bispecial lengths must be exactly the lenB values: AR
      // sequences have one bispecial factor per bispecial length.
      std::vector<std::size_t> got, want;
      for (const auto& p : profiles) got.push_back(p.factor.size());
      for (std::int64_t n = 0; n <= n_max; ++n)
        want.push_back(static_cast<std::size_t>(recs[n].len_b));
      require(got == want, "oracle bispecial lengths disagree with the formula at " + delta.str());
      for (std::int64_t n = 0; n <= n_max; ++n) {
        bool found = false;
        for (const auto& p : profiles)
          if (p.factor == *recs[n].b) found = true;
        require(found, "constructed b_N missing from the oracle scan");
        auto rets = oracle::return_words(prefix, *recs[n].b);
        require(!rets.empty(), "no return words found");
        require(BigInt(rets.front().size()) == recs[n].len_r,
                "shortest oracle return word length != lenR");
        require(std::find(rets.begin(), rets.end(), *recs[n].r) != rets.end(),
                "constructed r_N is not an oracle return word");
      }
    }
  }
}

void check_bispecial_image_law(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 4 : 10); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 2);
    DirectiveSequence delta = random_ar_directive(c.rng, d);
    std::int64_t n = 2 + static_cast<std::int64_t>(c.rng() % 3);
    Word b = *bispecial_record(delta, n).b;
    Letter i = static_cast<Letter>(c.rng() % d);
    std::vector<Letter> pre{i};
    for (Letter l : delta.preperiod()) pre.push_back(l);
    DirectiveSequence image(d, pre, delta.period());
    Word expected = apply(Morphism::elementary(i, d), b);
    expected.push_back(i);
    Word prefix = standard_prefix(image, prefix_size_for(image, n + 1));
    auto profiles = oracle::bispecials_in_prefix(prefix, expected.size());
    bool found = false;
    for (const auto& p : profiles)
      if (p.factor == expected) found = true;
    require(found, "phi_i(b) i is not bispecial in the image sequence");
  }
}

// ------------------------------------------------------------ exponent ----

void check_svalues_vs_matrices(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 8 : 25); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 4);
    DirectiveSequence delta = random_directive(c.rng, d);
    std::int64_t n_max = c.small ? 15 : 25;
    auto fast = s_values(delta, n_max);
    for (std::int64_t n = 0; n <= n_max; ++n)
      require(fast[n] == s_by_matrices(delta, n), "s_values != matrix-product route");
  }
}

void check_monotone_denominators(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 10 : 40); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 4);
    auto s = s_values(random_directive(c.rng, d), 40);
    for (std::size_t n = 1; n < s.size(); ++n)
      require(s[n] > s[n - 1], "s_N is not strictly increasing");
  }
}

void check_morphic_monotonicity(Ctx& c) {
  const BigRat tol(1, 1000000);
  for (int trial = 0; trial < (c.small ? 6 : 20); ++trial) {
    DirectiveSequence base = random_ar_directive(c.rng, 2);
    // Random injection of {0,1} into {0,1,2} plus a random prepended letter.
    Letter img0 = static_cast<Letter>(c.rng() % 3);
    Letter img1 = static_cast<Letter>((img0 + 1 + c.rng() % 2) % 3);
    auto embed = [&](Letter l) { return l == 0 ? img0 : img1; };
    std::vector<Letter> pre{static_cast<Letter>(c.rng() % 3)};
    for (Letter l : base.preperiod()) pre.push_back(embed(l));
    std::vector<Letter> per;
    for (Letter l : base.period()) per.push_back(embed(l));
    DirectiveSequence image(3, pre, per);
    auto orig = asymptotic_exponent(base, tol);
    auto extended = asymptotic_exponent(image, tol);
    require(extended.lo >= orig.lo - 2 * tol,
            "E* dropped under a non-erasing morphism: " + base.str() + " -> " + image.str());
  }
}

// ------------------------------------------------------------ dbonacci ----

BigRat rational_p(int d, const BigRat& x) {
  BigRat acc = 1;
  for (int k = 0; k < d; ++k) acc = acc * x - 1;
  return acc;
}

void check_root_bracket(Ctx&) {
  for (int d = 2; d <= 7; ++d) {
    RatInterval t = pisot_root_enclosure(d, 128);
    require(rational_p(d, t.lo) < 0 && rational_p(d, t.hi) > 0,
            "p does not straddle zero across the enclosure");
    require(t.lo > 2 - BigRat(1, pow2(d - 1)) && t.hi < 2 - BigRat(1, pow2(d)),
            "enclosure escapes the bracket 2-2^{1-d} < t < 2-2^{-d}");
    require(t.width() <= BigRat(1, pow2(128)), "enclosure wider than requested");
  }
}

void check_root_residuals(Ctx&) {
  for (int d = 2; d <= 7; ++d) {
    auto cs = dbonacci_constants(d, 128);
    for (const auto& root : cs.roots) {
      QC z{root.re, root.im};
      QC zd{1, 0};
      for (int k = 0; k < d; ++k) zd = qc_mul(zd, z);
      QC res = qc_mul(zd, QC{2 - z.re, -z.im});
      res.re -= 1;
      require(qc_norm2(res) < pow10(20) * pow10(20),
              "Property-2 residual above 1e-20 at d=" + std::to_string(d));
    }
    for (std::size_t k = 1; k < cs.roots.size(); ++k)
      require(qc_norm2(QC{cs.roots[k].re, cs.roots[k].im}) < 1,
              "conjugate root modulus not below 1");
  }
}

void check_explicit_vs_recurrence(Ctx& c) {
  for (int d = 2; d <= 6; ++d) {
    auto s = s_recurrence_values(d, 50);
    for (std::int64_t n = 0; n <= 50; n += (c.small ? 5 : 1)) {
      auto ev = explicit_eval(d, n, 128);
      BigRat diff = abs(ev.value - BigRat(s[n]));
      require(diff <= ev.error_bound, "explicit evaluation outside its own error bound");
      require(diff < pow10(6), "explicit evaluation misses the recurrence by >= 1e-6");
    }
  }
}

void check_lemma9_identity(Ctx& c) {
  for (int d = 2; d <= 6; ++d) {
    std::int64_t n_max = c.small ? 40 : 60;
    auto via_directive = s_values(dbonacci_directive(d), n_max);
    auto via_recurrence = s_recurrence_values(d, n_max);
    BigMatrix m = incidence(dbonacci_morphism(d)), power = BigMatrix::identity(d);
    for (std::int64_t n = 0; n <= n_max; ++n) {
      require(via_directive[n] == via_recurrence[n], "s_values != recurrence");
      require(via_directive[n] == ones_product(power), "1^T M_0..M_{N-1} 1 != 1^T M^N 1");
      power = power * m;
    }
  }
}

void check_inequality_certificates(Ctx& c) {
  for (int d = 2; d <= 7; ++d) {
    auto cert = verify_inequality(d, c.small ? 2000 : 10000);
    require(cert.pass, "t s_{N-1} - s_N <= (t-1) d failed at d=" + std::to_string(d));
  }
}

// ---------------------------------------------------------- maximality ----

BigInt direct_value(const DirectiveWord& w) {
  BigVec x(w.d, 1);
  for (Letter l : w.letters) row_apply(x, l);
  return vec_sum(x);
}

void check_search_vs_dbonacci(Ctx& c) {
  for (int d = 2; d <= 4; ++d) {
    std::int64_t n_max = c.small ? 7 : 10;
    for (std::int64_t n = 1; n <= n_max; ++n) {
      auto res = enumerate_max(d, n);
      require(res.max_value == s_recurrence(d, n),
              "max S(d,N) != d-bonacci s_N at d=" + std::to_string(d) + " N=" + std::to_string(n));
      for (const auto& w : res.argmax)
        require(window_distinct(w), "an argmax word has a repeated letter in a d-window");
    }
  }
}

void check_permutation_invariance(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 20 : 60); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 4);
    DirectiveWord w{d, {}};
    std::size_t len = 1 + c.rng() % 10;
    for (std::size_t i = 0; i < len; ++i)
      w.letters.push_back(static_cast<Letter>(c.rng() % d));
    std::vector<Letter> perm(d);
    std::iota(perm.begin(), perm.end(), Letter{0});
    std::shuffle(perm.begin(), perm.end(), c.rng);
    DirectiveWord img{d, {}};
    for (Letter l : w.letters) img.letters.push_back(perm[l]);
    require(direct_value(w) == direct_value(img), "value not invariant under renaming");
    require(direct_value(w) == direct_value(canonicalize(w)),
            "value not invariant under canonicalization");
  }
}

void check_column_dominance(Ctx&) {
  for (int d = 2; d <= 6; ++d)
    for (int k = 1; k < d; ++k) {
      BigMatrix a = BigMatrix::identity(d);
      for (int i = 0; i < k; ++i)
        a = a * incidence(Morphism::elementary(static_cast<Letter>(i), d));
      for (int j = k; j < d; ++j) {
        bool strict = false;
        for (int row = 0; row < d; ++row) {
          require(a.at(row, 0) <= a.at(row, j), "A e_0 <= A e_j violated");
          if (a.at(row, 0) < a.at(row, j)) strict = true;
        }
        require(strict, "A e_0 <= A e_j never strict");
      }
    }
}

void check_swap_improvement(Ctx& c) {
  int trials = c.small ? 20 : 100;
  for (int d = 2; d <= 6; ++d)
    for (int k = 1; k < d; ++k) {
      BigMatrix head = BigMatrix::identity(d);
      for (int i = 0; i < k; ++i)
        head = head * incidence(Morphism::elementary(static_cast<Letter>(i), d));
      BigMatrix lhs = head * incidence(Morphism::elementary(0, d)) *
                      permutation_matrix(Permutation::transposition(d, 0, static_cast<Letter>(k)));
      BigMatrix rhs = head * incidence(Morphism::elementary(static_cast<Letter>(k), d));
      for (int t = 0; t < trials; ++t) {
        BigVec x(d), z(d);
        for (int i = 0; i < d; ++i) {
          x[i] = 1 + static_cast<int>(c.rng() % 50);
          z[i] = 1 + static_cast<int>(c.rng() % 50);
        }
        BigInt left = 0, right = 0;
        BigVec lz = mat_vec(lhs, z), rz = mat_vec(rhs, z);
        for (int i = 0; i < d; ++i) {
          left += x[i] * lz[i];
          right += x[i] * rz[i];
        }
        require(left < right, "swap inequality x^T A M_0 R z < x^T A M_k z violated");
      }
    }
}

void check_serial_parallel_equal(Ctx& c) {
  std::vector<std::pair<int, std::int64_t>> cases{{2, 10}, {3, c.small ? 7 : 9}};
  for (auto [d, n] : cases) {
    auto par = enumerate_max(d, n);
    auto ser = enumerate_max_serial(d, n);
    require(par.max_value == ser.max_value && par.argmax == ser.argmax &&
                par.explored == ser.explored && par.steps == ser.steps,
            "parallel and serial searches disagree");
  }
}

void check_growth_diagnostic(Ctx& c, std::string& detail) {
  // |max S(d,N) - c_1 t^N| is reported as a diagnostic, not asserted.
  std::ostringstream out;
  auto cs = dbonacci_constants(3, 128);
  double c1 = static_cast<double>(cs.coeffs[0].re);
  double t = static_cast<double>(cs.t.mid());
  out << "d=3 |max S - c_1 t^N|:";
  std::int64_t n_max = c.small ? 7 : 10;
  for (std::int64_t n = 4; n <= n_max; ++n) {
    auto res = enumerate_max(3, n);
    double gap = std::abs(static_cast<double>(res.max_value) - c1 * std::pow(t, static_cast<double>(n)));
    out << " N=" << n << ":" << gap;
  }
  detail = out.str();
}

// -------------------------------------------------------------- oracle ----

void check_oracle_exhaustive(Ctx& c) {
  for (int trial = 0; trial < (c.small ? 10 : 25); ++trial) {
    int d = 2 + static_cast<int>(c.rng() % 2);
    Word w = random_word(c.rng, d, 2 + c.rng() % (c.small ? 120 : 300));
    auto rec = oracle::max_exponent(w);
    auto [len, p] = exhaustive_best_power(w);
    require(rec.exponent == BigRat(len, p), "max exponent != plain-definition scan");
    // The witness must be a genuine repetition of its claimed period.
    for (std::size_t i = rec.period; i < rec.length; ++i)
      require(w[rec.occurrence + i] == w[rec.occurrence + i - rec.period],
              "witness factor is not periodic with the claimed period");
  }
}

void check_oracle_monotonicity(Ctx&) {
  DirectiveSequence fib = dbonacci_directive(2);
  Word big = standard_prefix(fib, 2000);
  BigRat last = 0;
  for (std::size_t len : {100, 300, 700, 1200, 2000}) {
    auto rec = oracle::max_exponent(big.subword(0, len));
    require(rec.exponent >= last, "max exponent decreased on a longer prefix");
    last = rec.exponent;
  }
}

void check_theorem1_consistency(Ctx&) {
  for (int d = 2; d <= 3; ++d) {
    DirectiveSequence delta = dbonacci_directive(d);
    auto recs = bispecial_records(delta, 40, {.materialize = false});
    BigRat sup = 0;
    for (std::int64_t n = 1; n <= 40; ++n)
      sup = std::max(sup, 1 + BigRat(recs[n].len_b, recs[n].len_r));
    auto est = critical_exponent(delta, 60);
    require(abs(sup - est.lo) < BigRat(1, 1000000),
            "1 + sup |b_N|/|r_N| disagrees with the exponent module");
    // One-sided sanity against the prefix oracle.
    Word prefix = standard_prefix(delta, 5000);
    BigRat scanned = oracle::max_exponent(prefix).exponent;
    for (std::int64_t n = 1; n <= 8; ++n)
      require(1 + BigRat(recs[n].len_b, recs[n].len_r) <= scanned + BigRat(1, 1000000000),
              "bispecial ratio exceeds the scanned exponent");
  }
}

void check_bispecial_stability(Ctx&) {
  DirectiveSequence fib = dbonacci_directive(2);
  Word big = standard_prefix(fib, 2400);
  auto once = oracle::bispecials_in_prefix(big.subword(0, 1200), 40);
  auto twice = oracle::bispecials_in_prefix(big, 40);
  require(once.size() == twice.size(), "bispecial set changed when the prefix doubled");
  for (std::size_t i = 0; i < once.size(); ++i)
    require(once[i].factor == twice[i].factor,
            "bispecial set changed when the prefix doubled");
  std::vector<std::size_t> lengths;
  for (const auto& p : once) lengths.push_back(p.factor.size());
  require(lengths == std::vector<std::size_t>({0, 1, 3, 6, 11, 19, 32}),
          "Fibonacci bispecial lengths are off");
}

}  // namespace

std::vector<CheckResult> run_selfchecks(const SelfCheckOptions& opt) {
  Ctx ctx{Rng(opt.seed), opt.small};
  std::vector<CheckResult> results;

  auto run = [&](const std::string& name, const std::function<void(Ctx&)>& fn) {
    CheckResult r{name, true, ""};
    try {
      fn(ctx);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  };

  run("core/parikh-laws", check_parikh_laws);
  run("core/matvec-linearity", check_matvec_linearity);
  run("morphisms/abelianization", check_abelianization);
  run("morphisms/incidence-functorial", check_incidence_functorial);
  run("morphisms/permutation-conjugation", check_permutation_conjugation);
  run("morphisms/row-update-law", check_row_update_law);
  run("directive/prefix-stability", check_prefix_stability);
  run("directive/periodic-form", check_periodic_form);
  run("bispecial/recursion-and-lengths", check_bispecial_recursion);
  run("bispecial/oracle-agreement", check_bispecial_oracle);
  run("bispecial/image-law", check_bispecial_image_law);
  run("exponent/s-values-vs-matrices", check_svalues_vs_matrices);
  run("exponent/monotone-denominators", check_monotone_denominators);
  run("exponent/morphic-image-monotonicity", check_morphic_monotonicity);
  run("dbonacci/root-bracket", check_root_bracket);
  run("dbonacci/root-residuals", check_root_residuals);
  run("dbonacci/explicit-vs-recurrence", check_explicit_vs_recurrence);
  run("dbonacci/lemma9-identity", check_lemma9_identity);
  run("dbonacci/inequality-certificates", check_inequality_certificates);
  run("maximality/search-vs-dbonacci", check_search_vs_dbonacci);
  run("maximality/permutation-invariance", check_permutation_invariance);
  run("maximality/column-dominance", check_column_dominance);
  run("maximality/swap-improvement", check_swap_improvement);
  run("maximality/serial-parallel-equal", check_serial_parallel_equal);
  run("oracle/exhaustive-agreement", check_oracle_exhaustive);
  run("oracle/prefix-monotonicity", check_oracle_monotonicity);
  run("oracle/theorem1-consistency", check_theorem1_consistency);
  run("oracle/bispecial-stability", check_bispecial_stability);

  {
    CheckResult r{"maximality/growth-diagnostic", true, ""};
    try {
      check_growth_diagnostic(ctx, r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }

  return results;
}

}  // namespace epist
