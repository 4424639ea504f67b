#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace enriques {

inline constexpr int kRank = 10;

using Coord = std::int64_t;

/// Thrown when 64-bit integer arithmetic would wrap.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation is called outside its stated domain.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when a theorem-backed internal check fails; always indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

Coord checked_add(Coord a, Coord b);
Coord checked_sub(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);
Coord checked_neg(Coord a);

/// Numerical divisor class on an Enriques surface: integer coordinates in the
/// fixed basis (e, f, a1..a8) of Num(S) = U + E8(-1).  All arithmetic is exact;
/// overflow raises instead of wrapping.
struct DivisorClass {
  std::array<Coord, kRank> c{};

  DivisorClass() = default;
  explicit DivisorClass(const std::array<Coord, kRank>& coords) : c(coords) {}

  bool is_zero() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
DivisorClass operator-(const DivisorClass& a);
DivisorClass operator*(Coord k, const DivisorClass& a);

/// Basis generators: E1 = e, E2 = f of the hyperbolic plane U, and the
/// E8(-1) roots alpha(1..8).
DivisorClass E1();
DivisorClass E2();
DivisorClass alpha(int k);  // k in 1..8

/// Gram matrix of the intersection form in basis order (e, f, a1..a8).
/// U block: e^2 = f^2 = 0, e.f = 1.  E8(-1) block: -2 on the diagonal and +1
/// exactly on the diagram edges {1,2},{2,3},{3,4},{4,5},{5,6},{6,7},{5,8};
/// a5 is the trivalent node.
const std::array<std::array<Coord, kRank>, kRank>& gram_matrix();

Coord pairing(const DivisorClass& a, const DivisorClass& b);
Coord self_intersection(const DivisorClass& a);

/// Reference class with h^2 > 0; fixes the effective side of the cone.
class Polarization {
 public:
  explicit Polarization(const DivisorClass& h);
  static const Polarization& standard();  // h = E1 + E2
  const DivisorClass& h() const { return h_; }

 private:
  DivisorClass h_;
};

/// g(C) = C^2/2 + 1.  Requires C^2 >= 0.
Coord genus(const DivisorClass& C);

/// chi(O(D)) = D^2/2 + 1.
Coord chi(const DivisorClass& D);

/// dim|D| = D^2/2 for nef D with D^2 > 0.
Coord dim_linear_system(const DivisorClass& D,
                        const Polarization& pol = Polarization::standard());

/// Strict positive cone: D^2 > 0 and D.h > 0.
bool is_positive_cone(const DivisorClass& D,
                      const Polarization& pol = Polarization::standard());

/// Closure of the positive cone: 0, or D^2 >= 0 with D.h > 0.
bool in_cone_closure(const DivisorClass& D,
                     const Polarization& pol = Polarization::standard());

/// Unnodal model: the nef cone is the closure of the positive cone.
bool is_nef(const DivisorClass& D,
            const Polarization& pol = Polarization::standard());

enum class Ampleness { Ample, NotAmple, UnknownByCriterion };

/// Ample iff nef with D^2 >= 6; the criterion is silent for nef D with
/// 0 < D^2 < 6.
Ampleness ample_by_criterion(const DivisorClass& D,
                             const Polarization& pol = Polarization::standard());

struct SystemClass {
  enum class Kind { BigIrreducible, Isotropic, Invalid };
  Kind kind = Kind::Invalid;
  Coord dim = 0;                 // BigIrreducible: dim|D| = D^2/2
  Coord multiplicity = 0;        // Isotropic: D = m * P0
  DivisorClass primitive_part;   // Isotropic: the primitive half-fiber class
};

/// Classifies a nef linear system: big with an irreducible member, or a
/// multiple of a primitive isotropic class.
SystemClass classify_system(const DivisorClass& D,
                            const Polarization& pol = Polarization::standard());

/// gcd of the coordinates is 1.  Requires D != 0.
bool is_primitive(const DivisorClass& D);

/// gcd of the coordinates (0 for the zero class).
Coord gcd_coords(const DivisorClass& D);

/// div(D) = gcd { D.x : x in the lattice } = gcd of the entries of G*D.
Coord divisibility(const DivisorClass& D);

/// Exact floor of sqrt(n) for n >= 0.
Coord isqrt_floor(Coord n);

/// Exact determinant of the Gram matrix (fraction-free elimination).
Coord gram_determinant();

/// Exact signature (n_plus, n_minus, n_zero) of the intersection form.
std::array<int, 3> gram_signature();

}  // namespace enriques
