#pragma once

#include <cmath>
#include <complex>
#include <ostream>
#include <type_traits>

#include "error.hpp"

namespace lightcone {

// absolute tolerance for every sign test on squares and components
inline constexpr double tau_class = 1e-9;

using cplx = std::complex<double>;

namespace detail {
template <typename T> struct is_complex : std::false_type {};
template <typename T> struct is_complex<std::complex<T>> : std::true_type {};

inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }
}  // namespace detail

template <typename T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, cplx>;

// (t, x) in 1+1 Minkowski space, signature (+,-).
template <Scalar T>
struct Vec2 {
  T t{};
  T x{};

  constexpr Vec2() = default;
  Vec2(T t_, T x_) : t(t_), x(x_) {
    require(detail::finite(t) && detail::finite(x), ErrorCode::InvalidArgument,
            "non-finite point component");
  }
  // real -> complex promotion
  template <Scalar U>
    requires(std::is_same_v<T, cplx> && std::is_same_v<U, double>)
  Vec2(const Vec2<U>& r) : t(r.t), x(r.x) {}

  Vec2<double> re() const
    requires std::is_same_v<T, cplx>
  {
    return {t.real(), x.real()};
  }
  Vec2<double> im() const
    requires std::is_same_v<T, cplx>
  {
    return {t.imag(), x.imag()};
  }

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.t + b.t, a.x + b.x}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.t - b.t, a.x - b.x}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.t, -a.x}; }
  friend Vec2 operator*(T s, const Vec2& a) { return {s * a.t, s * a.x}; }
  friend Vec2 operator*(const Vec2& a, T s) { return {s * a.t, s * a.x}; }
  friend Vec2 operator/(const Vec2& a, T s) { return {a.t / s, a.x / s}; }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.t == b.t && a.x == b.x; }

  friend std::ostream& operator<<(std::ostream& os, const Vec2& v) {
    return os << '(' << v.t << ", " << v.x << ')';
  }
};

using RealPoint2 = Vec2<double>;
using ComplexPoint2 = Vec2<cplx>;

inline ComplexPoint2 make_complex(const RealPoint2& re, const RealPoint2& im) {
  return {cplx(re.t, im.t), cplx(re.x, im.x)};
}

// mixed-type helpers used all over the envelope code
inline ComplexPoint2 operator+(const ComplexPoint2& z, const RealPoint2& r) { return z + ComplexPoint2(r); }
inline ComplexPoint2 operator-(const ComplexPoint2& z, const RealPoint2& r) { return z - ComplexPoint2(r); }
inline ComplexPoint2 operator*(cplx s, const RealPoint2& r) { return s * ComplexPoint2(r); }

struct RealPoint4 {
  double t = 0, s1 = 0, s2 = 0, s3 = 0;

  RealPoint4() = default;
  RealPoint4(double t_, double a, double b, double c) : t(t_), s1(a), s2(b), s3(c) {
    require(std::isfinite(t) && std::isfinite(s1) && std::isfinite(s2) && std::isfinite(s3),
            ErrorCode::InvalidArgument, "non-finite point component");
  }
};

enum class CausalClass { TimelikeForward, TimelikeBackward, SpacelikePt, LightlikeForward, LightlikeBackward, Zero };

inline const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::TimelikeForward: return "TimelikeForward";
    case CausalClass::TimelikeBackward: return "TimelikeBackward";
    case CausalClass::SpacelikePt: return "SpacelikePt";
    case CausalClass::LightlikeForward: return "LightlikeForward";
    case CausalClass::LightlikeBackward: return "LightlikeBackward";
    case CausalClass::Zero: return "Zero";
  }
  return "?";
}

// Bilinear in both cases; the complex square is z.t^2 - z.x^2, not |z|^2.
template <Scalar T>
T mink_dot(const Vec2<T>& a, const Vec2<T>& b) {
  return a.t * b.t - a.x * b.x;
}

template <Scalar T>
T mink_square(const Vec2<T>& a) {
  return mink_dot(a, a);
}

inline cplx mink_dot(const ComplexPoint2& a, const RealPoint2& b) { return a.t * b.t - a.x * b.x; }

// Euclidean norm in R^2 or C^2 = R^4
inline double norm(const RealPoint2& a) { return std::hypot(a.t, a.x); }
inline double norm(const ComplexPoint2& a) { return std::sqrt(std::norm(a.t) + std::norm(a.x)); }

inline double norm(const RealPoint4& p) { return std::sqrt(p.t * p.t + p.s1 * p.s1 + p.s2 * p.s2 + p.s3 * p.s3); }
inline double mink_square(const RealPoint4& p) { return p.t * p.t - p.s1 * p.s1 - p.s2 * p.s2 - p.s3 * p.s3; }

inline double sgn(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

inline CausalClass classify(const RealPoint2& y) {
  if (norm(y) <= tau_class) return CausalClass::Zero;
  const double sq = mink_square(y);
  if (sq > tau_class) return y.t > 0 ? CausalClass::TimelikeForward : CausalClass::TimelikeBackward;
  if (sq < -tau_class) return CausalClass::SpacelikePt;
  return y.t > 0 ? CausalClass::LightlikeForward : CausalClass::LightlikeBackward;
}

inline bool is_timelike(CausalClass c) {
  return c == CausalClass::TimelikeForward || c == CausalClass::TimelikeBackward;
}
inline bool is_lightlike(CausalClass c) {
  return c == CausalClass::LightlikeForward || c == CausalClass::LightlikeBackward;
}

// y^ = sgn(y1)/sqrt(-y^2) * (y1, y0): unit, forward, orthogonal to y
inline RealPoint2 hat_dual(const RealPoint2& y) {
  const double sq = mink_square(y);
  require(sq < -tau_class, ErrorCode::NotSpacelike, "hat_dual needs a spacelike vector");
  const double k = sgn(y.x) / std::sqrt(-sq);
  return {k * y.x, k * y.t};
}

inline RealPoint2 reduce_rotational(const RealPoint4& p) {
  return {p.t, std::sqrt(p.s1 * p.s1 + p.s2 * p.s2 + p.s3 * p.s3)};
}

// Light-cone coordinates u = t + x, v = t - x. Cones, wedges and double cones
// are axis-aligned boxes here and x^2 = u v.
struct UV {
  double u, v;
};
inline UV to_uv(const RealPoint2& p) { return {p.t + p.x, p.t - p.x}; }
inline RealPoint2 from_uv(double u, double v) { return {(u + v) / 2, (u - v) / 2}; }

// closed forward cone test with tolerance, used for "x' in closure(V+)"
inline bool in_closed_forward(const RealPoint2& p, double tol = tau_class) {
  return p.t - std::abs(p.x) >= -tol;
}
inline bool in_closed_backward(const RealPoint2& p, double tol = tau_class) {
  return -p.t - std::abs(p.x) >= -tol;
}

}  // namespace lightcone
