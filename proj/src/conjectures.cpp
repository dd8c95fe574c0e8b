#include "apdisc/conjectures.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace apdisc::conj {

using Clock = std::chrono::steady_clock;

namespace {

std::chrono::nanoseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

// Explains a disagreement: either the predicted modulus (or its partner)
// has a collision, or the observed one is a smaller separating modulus.
std::string seq_certificate(const disc::HalfQuadratic& seq, u64 n, u64 observed, u64 predicted,
                            u64 partner_gap) {
  std::ostringstream os;
  if (observed > predicted) {
    for (u64 m : {predicted, predicted + partner_gap}) {
      if (auto hit = disc::find_collision(seq, n, m)) {
        os << "predicted " << predicted << " fails: " << hit->describe();
        return os.str();
      }
    }
    os << "predicted " << predicted << " separates but scan returned " << observed;
    return os.str();
  }
  os << "observed " << observed << " separates all " << n << " terms";
  if (partner_gap > 0) os << " (also mod " << observed + partner_gap << ")";
  os << " below predicted " << predicted;
  return os.str();
}

u64 first_twin_gap_prime(u64 lower, u64 gap, u64 ceiling) {
  for (u64 p = std::max<u64>(lower, 2); p <= ceiling; ++p) {
    if (nt::is_prime(p) && nt::is_prime(p + gap)) return p;
  }
  throw nt::ScanCeilingExceeded("no prime pair with the requested gap below scan ceiling", ceiling);
}

}  // namespace

ConjectureReport conjecture11_check(u64 d, u64 n, u64 ceiling) {
  if (d == 0) throw std::invalid_argument("conjecture 1.1: d must be >= 1");
  if (n == 0) throw std::invalid_argument("conjecture 1.1: n must be >= 1");
  const auto start = Clock::now();
  const auto seq = disc::HalfQuadratic::binomial2();
  ConjectureReport r;
  r.id = "1.1";
  r.params = "d=" + std::to_string(d);
  r.n = n;
  r.observed = disc::least_modulus_pair(seq, n, 2 * d);
  r.predicted = first_twin_gap_prime(2 * n - 1, 2 * d, ceiling);
  r.agrees = r.observed == r.predicted;
  if (!r.agrees) r.certificate = seq_certificate(seq, n, r.observed, r.predicted, 2 * d);
  r.elapsed = since(start);
  return r;
}

ConjectureReport conjecture12_check(u64 n) {
  if (n == 0) throw std::invalid_argument("conjecture 1.2: n must be >= 1");
  const auto start = Clock::now();
  ConjectureReport r;
  r.id = "1.2";
  r.n = n;
  r.observed = disc::least_modulus_pair(disc::HalfQuadratic::binomial2(), n, 1);
  r.predicted = r.observed;
  r.m_class = nt::classify_two_power_times_prime(r.observed);
  r.m1_class = nt::classify_two_power_times_prime(r.observed + 1);
  r.agrees = *r.m_class && *r.m1_class;
  if (!r.agrees) {
    std::ostringstream os;
    const u64 bad = *r.m_class ? r.observed + 1 : r.observed;
    os << bad << " is neither a power of two nor a prime times a power of two";
    r.certificate = os.str();
  }
  r.elapsed = since(start);
  return r;
}

std::string to_string(Variant v) { return v == Variant::binomial ? "binomial" : "squares"; }

Variant parse_variant(const std::string& text) {
  if (text == "binomial" || text == "C(k,2)") return Variant::binomial;
  if (text == "squares" || text == "k2" || text == "k^2") return Variant::squares;
  throw std::invalid_argument("unknown sequence variant: " + text);
}

u64 conjecture13_lower_bound(Variant v, u64 n) {
  const u64 bound = v == Variant::binomial ? 2 * n - 1 : 2 * n + 1;
  return std::max<u64>(bound, 2);
}

ConjectureReport conjecture13_check(nt::PolyForm form, u64 n, Variant variant, u64 ceiling) {
  if (n == 0) throw std::invalid_argument("conjecture 1.3: n must be >= 1");
  const auto start = Clock::now();
  const auto seq = variant == Variant::binomial ? disc::HalfQuadratic::binomial2()
                                                : disc::HalfQuadratic::squares();
  ConjectureReport r;
  r.id = "1.3";
  r.params = "form=" + nt::to_string(form) + " variant=" + to_string(variant);
  r.n = n;

  disc::ResidueScanner scanner;
  bool found = false;
  for (u64 x = 0;; ++x) {
    const u64 m = nt::form_value(form, x);
    if (m > ceiling) break;
    // m = 1 (x = 0 on x^2 + x + 1) only separates a single term.
    if (m < n) continue;
    if (scanner.first_repeat(seq, n, m) == 0) {
      r.observed = m;
      found = true;
      break;
    }
  }
  if (!found) throw nt::ScanCeilingExceeded("conjecture 1.3: no separating form value", ceiling);
  r.predicted = nt::first_prime_of_form(form, conjecture13_lower_bound(variant, n), ceiling);
  r.agrees = r.observed == r.predicted;
  if (!r.agrees) r.certificate = seq_certificate(seq, n, r.observed, r.predicted, 0);
  r.elapsed = since(start);
  return r;
}

ConjectureReport conjecture14_check(u64 n) {
  if (n < 3) throw std::invalid_argument("conjecture 1.4: n must be >= 3");
  const auto start = Clock::now();
  const std::vector<u64> primes = nt::nth_primes(n);
  std::vector<u64> values;
  values.reserve(n);
  for (u64 p : primes) values.push_back(6 * p * (p - 1));

  ConjectureReport r;
  r.id = "1.4";
  r.n = n;
  r.observed = disc::least_modulus(values);

  std::vector<u64> sums;
  sums.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < primes.size(); ++i) {
    for (std::size_t j = i + 1; j < primes.size(); ++j) sums.push_back(primes[i] + primes[j] - 1);
  }
  for (u64 q = primes.back();; ++q) {
    if (!nt::is_prime(q)) continue;
    bool divides_none = true;
    for (u64 s : sums) {
      if (s % q == 0) {
        divides_none = false;
        break;
      }
    }
    if (divides_none) {
      r.predicted = q;
      break;
    }
  }
  r.agrees = r.observed == r.predicted;
  if (!r.agrees) {
    std::ostringstream os;
    if (r.observed > r.predicted) {
      if (auto hit = disc::find_collision(values, r.predicted)) {
        os << "predicted " << r.predicted << " fails: 6p(p-1) at p_" << hit->k << " == p_" << hit->l
           << " mod " << hit->modulus;
      } else {
        os << "predicted " << r.predicted << " separates but scan returned " << r.observed;
      }
    } else {
      os << "observed " << r.observed << " separates all " << n << " values below predicted "
         << r.predicted;
    }
    r.certificate = os.str();
  }
  r.elapsed = since(start);
  return r;
}

}  // namespace apdisc::conj
