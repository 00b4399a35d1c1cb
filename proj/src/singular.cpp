#include "rule150/singular.hpp"

#include <map>
#include <stdexcept>

#include "rule150/errors.hpp"

namespace rule150 {

void RunState::push(bool bit) {
  // (x, y) M_0 = (x + y, 0);  (x, y) M_1 = (x + y, 2x).
  Integer y = bit ? Integer(2 * row_.x) : Integer(0);
  row_.x += row_.y;
  row_.y = std::move(y);
  run_ = bit ? run_ + 1 : 0;
  ++position_;
}

std::vector<Nat> r_sequence(const BitStream& x, std::size_t k) {
  std::vector<Nat> out;
  out.reserve(k);
  RunState st;
  auto cur = x.cursor();
  for (std::size_t i = 1; i <= k; ++i) {
    out.push_back(st.r());
    if (i < k) st.push(cur.next());
  }
  return out;
}

Nat r_from_clusters(const std::vector<std::uint8_t>& prefix) {
  Nat product = 1;
  unsigned long run = 0;
  for (std::size_t j = 0; j <= prefix.size(); ++j) {
    if (j < prefix.size() && prefix[j]) {
      ++run;
    } else if (run != 0) {
      product *= cluster_value(run);
      run = 0;
    }
  }
  return product;
}

QSqrt5 eval_dyadic_exact(const Dyadic& x) {
  if (x == Dyadic::one()) return eval_periodic_exact({}, {1});
  // Integer numerators over the common denominator 4^n:
  // alpha^i = (P_i + Q_i sqrt5) / 4^i, and alpha^{i+1} = alpha^i (sqrt5 - 1) / 4.
  const unsigned long n = x.exponent();
  Integer sum_p = 0, sum_q = 0;
  Integer pw_p = 1, pw_q = 0;
  RunState st;
  for (unsigned long i = 1; i <= n; ++i) {
    Integer np = 5 * pw_q - pw_p;
    Integer nq = pw_p - pw_q;
    pw_p = std::move(np);
    pw_q = std::move(nq);
    const bool bit = x.bit(i);
    if (bit) {
      const Nat r = st.r();
      const Integer scale = pow2(2 * (n - i));
      sum_p += r * pw_p * scale;
      sum_q += r * pw_q * scale;
    }
    st.push(bit);
  }
  return QSqrt5(sum_p, sum_q, pow2(2 * n));
}

Rational eval_fk(const Dyadic& x, unsigned long k) {
  if (k < 1) throw DomainError("F_k needs k >= 1");
  if (x.exponent() > k) throw DomainError("point needs more than k binary digits");
  const Nat m = x.numerator() * pow2(k - x.exponent());
  const Nat numerator = sgn(m) == 0 ? Nat(0) : cum_decompose(m);
  Rational r(numerator, cum_pow2(k));
  r.canonicalize();
  return r;
}

namespace {

class FunctionalRecursion {
 public:
  QSqrt5 operator()(const Dyadic& x) {
    if (x == Dyadic::zero()) return 0;
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    QSqrt5 v;
    if (x < half_) {
      v = alpha_ * (*this)(x.twice());
    } else if (x < three_quarters_) {
      v = QSqrt5(3) * (*this)(x - half_) + alpha_;
    } else {
      v = (*this)(x - half_) + QSqrt5(2) * (*this)(x - three_quarters_) + offset_;
    }
    memo_.emplace(x, v);
    return v;
  }

 private:
  const Dyadic half_ = Dyadic(1, 1);
  const Dyadic three_quarters_ = Dyadic(3, 2);
  const QSqrt5 alpha_ = QSqrt5::alpha();
  const QSqrt5 offset_ = alpha_ + QSqrt5(2) * alpha_ * alpha_;
  std::map<Dyadic, QSqrt5> memo_;
};

struct QMat2 {
  QSqrt5 a, b, c, d;
};

}  // namespace

QSqrt5 eval_recursive_dyadic(const Dyadic& x) {
  FunctionalRecursion f;
  return f(x);
}

QSqrt5 eval_periodic_exact(const std::vector<std::uint8_t>& head,
                           const std::vector<std::uint8_t>& period) {
  if (period.empty()) throw DomainError("period must be nonempty");
  const QSqrt5 alpha = QSqrt5::alpha();

  // Finite head.
  QSqrt5 sum = 0, apow = 1;
  RunState st;
  for (auto b : head) {
    apow *= alpha;
    if (b) sum += QSqrt5(st.r()) * apow;
    st.push(b);
  }

  // One period: column C = sum_j y_j alpha^j (M_{y_1} ... M_{y_{j-1}} u_0)
  // and digit product P = M_{y_1} ... M_{y_p}. Built right to left so that
  // prod * u0 is the column needed at each j.
  const std::size_t p = period.size();
  std::vector<Mat2> prefix(p + 1);
  prefix[0] = Mat2::identity();
  for (std::size_t j = 0; j < p; ++j) prefix[j + 1] = prefix[j] * matrices::digit(period[j]);
  QSqrt5 c0 = 0, c1 = 0, ap = 1;
  for (std::size_t j = 0; j < p; ++j) {
    ap *= alpha;
    if (!period[j]) continue;
    const Mat2& m = prefix[j];
    c0 += QSqrt5(Integer(m.e[0] + m.e[1])) * ap;
    c1 += QSqrt5(Integer(m.e[2] + m.e[3])) * ap;
  }
  const Mat2& prod = prefix[p];

  // Tail = alpha^h w (I - alpha^p P)^{-1} C.
  const QSqrt5& ap_period = ap;
  QMat2 a{QSqrt5(1) - ap_period * prod.e[0], -(ap_period * prod.e[1]),
          -(ap_period * prod.e[2]), QSqrt5(1) - ap_period * prod.e[3]};
  const QSqrt5 det = a.a * a.d - a.b * a.c;
  if (det.is_zero())
    throw std::logic_error("I - alpha^p P is singular; spectral bound violated");
  const QSqrt5 inv_det = det.inverse();
  const QSqrt5 v0 = (a.d * c0 - a.b * c1) * inv_det;
  const QSqrt5 v1 = (a.a * c1 - a.c * c0) * inv_det;
  const Row2& w = st.row();
  return sum + apow * (QSqrt5(w.x) * v0 + QSqrt5(w.y) * v1);
}

QSqrt5 eval_rational(const Rational& x) {
  if (sgn(x) < 0 || x > 1) throw DomainError("F is defined on [0, 1]");
  if (auto d = Dyadic::from_rational(x)) return eval_dyadic_exact(*d);
  const auto [head, period] = periodic_expansion(x);
  return eval_periodic_exact(head, period);
}

Enclosure eval_stream_enclosure(const BitStream& x, const Rational& eps) {
  if (sgn(eps) <= 0) throw DomainError("tolerance must be positive");
  const QSqrt5 alpha = QSqrt5::alpha();
  const QSqrt5 tol(eps);
  const QSqrt5 geometric = (QSqrt5(1) - QSqrt5(3) * alpha).inverse();  // 1 / (1 - 3 alpha)

  QSqrt5 sum = 0, apow = alpha;  // apow = alpha^i at position i
  RunState st;
  auto cur = x.cursor();
  const std::size_t head_len = x.head().size();
  while (true) {
    const std::size_t consumed = st.position() - 1;
    if (x.terminates() && consumed >= head_len) return {sum, sum, consumed};
    const QSqrt5 tail = QSqrt5(st.r()) * apow * geometric;
    if (tail <= tol) return {sum, sum + tail, consumed};
    const bool bit = cur.next();
    if (bit) sum += QSqrt5(st.r()) * apow;
    st.push(bit);
    apow *= alpha;
  }
}

bool check_dual_representation(const Dyadic& x) {
  const BitStream alt = alternate_bits_of(x);
  return eval_dyadic_exact(x) == eval_periodic_exact(alt.head(), {1});
}

QSqrt5 modulus_bound(unsigned long k) {
  return QSqrt5(2, 1, 1) * (QSqrt5(3) * QSqrt5::alpha()).pow(k);
}

}  // namespace rule150
