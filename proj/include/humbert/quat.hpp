#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "humbert/arith.hpp"
#include "humbert/bqf.hpp"
#include "humbert/genus.hpp"

namespace humbert {

template <class T>
using Matrix3 = std::array<std::array<T, 3>, 3>;

template <class T>
T det3(Matrix3<T> const& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// The algebra (i_sq, j_sq | Q): I^2 = i_sq, J^2 = j_sq, IJ = -JI.
struct QuaternionAlgebra
{
    std::int64_t i_sq;
    std::int64_t j_sq;

    bool operator==(QuaternionAlgebra const&) const = default;
};

/// w + x I + y J + z IJ with exact rational coordinates.
class Quaternion
{
  public:
    Quaternion(QuaternionAlgebra alg, Rat w, Rat x, Rat y, Rat z);
    static Quaternion scalar(QuaternionAlgebra alg, Rat w) { return {alg, std::move(w), 0, 0, 0}; }

    QuaternionAlgebra const& algebra() const { return alg_; }
    std::array<Rat, 4> const& coords() const { return c_; }
    Rat const& w() const { return c_[0]; }
    Rat const& x() const { return c_[1]; }
    Rat const& y() const { return c_[2]; }
    Rat const& z() const { return c_[3]; }

    Quaternion conj() const;
    Rat trace() const { return 2 * c_[0]; }
    /// w^2 - i_sq x^2 - j_sq y^2 + i_sq j_sq z^2
    Rat norm() const;
    /// tr^2 - 4 nr
    Rat disc() const;

    friend Quaternion operator+(Quaternion const& l, Quaternion const& r);
    friend Quaternion operator-(Quaternion const& l, Quaternion const& r);
    friend Quaternion operator*(Quaternion const& l, Quaternion const& r);
    friend Quaternion operator*(Rat const& k, Quaternion const& q);

    bool operator==(Quaternion const&) const = default;

  private:
    QuaternionAlgebra alg_;
    std::array<Rat, 4> c_;
};

std::string to_string(Quaternion const& q);

/// Integer quintuple (c1..c5) imposing
/// c1 t1 + c2 t2 + c3 t3 + c4 (t2^2 - t1 t3) + c5 = 0 on a period matrix.
struct SingularRelation
{
    std::array<std::int64_t, 5> c{};

    /// c2^2 - 4 (c1 c3 + c4 c5)
    std::int64_t discriminant() const;
    /// (Delta(l + m) - Delta(l) - Delta(m)) / 2
    std::int64_t inner(SingularRelation const& m) const;

    bool operator==(SingularRelation const&) const = default;
};

enum class OrderKind { case1_primitive, case2_four_times };

inline constexpr std::int64_t kPrimeSearchBound = 1'000'000;

struct PrimeChoice
{
    std::int64_t p;
    std::int64_t s;
    std::int64_t t;
};

/// Eichler order of level N in (-DN, p | Q) with its explicit Z-basis.
struct OrderBasis
{
    OrderKind kind;
    QuaternionAlgebra algebra;
    std::array<Quaternion, 4> e;
    std::int64_t p;
    std::int64_t s;
    std::int64_t t;
    std::int64_t dn;
};

/// Smallest admissible prime (represented by Q or Q', coprime to 2DN) and
/// smallest admissible s.
PrimeChoice find_prime_and_s(EligibleForm const& f);

/// Builds the basis and verifies closure; throws std::logic_error if the
/// product table is not integral.
OrderBasis build_order(EligibleForm const& f);

/// Coordinates of q in the order basis (exact; may be non-integral).
std::array<Rat, 4> basis_coordinates(OrderBasis const& ob, Quaternion const& q);

/// Every e_i e_j lies in the Z-span of the basis, and 1 does.
bool order_is_closed(OrderBasis const& ob);

/// sqrt |det tr(e_i conj(e_j))|; throws if that determinant is not a square.
Int reduced_discriminant(OrderBasis const& ob);

/// disc(alpha x + beta y) over the basis of mu-perp / Z, from trace and norm.
BQF q_mu(OrderBasis const& ob);

std::pair<SingularRelation, SingularRelation> base_relations(OrderBasis const& ob);

/// [[a, b, u], [b, c, v], [u, v, n]] with [[a, b], [b, c]] the Gram matrix of
/// the base relations.
Matrix3<std::int64_t> m_uv(OrderBasis const& ob, std::int64_t n, std::int64_t u, std::int64_t v);

/// beta_1, beta_2, beta_3: a Z-basis of the trace-zero elements of the order.
std::array<Quaternion, 3> trace_zero_basis(OrderBasis const& ob);

/// Gram matrix of the CM lattice for psi(sqrt d) = b1 beta1 + b2 beta2 + b3 beta3.
Matrix3<Rat> cm_gram(OrderBasis const& ob, std::int64_t b1, std::int64_t b2, std::int64_t b3);

using Complex = std::complex<long double>;

struct PeriodMatrix
{
    Complex t1, t2, t3;
};

/// Normalized period matrix tau_z of (A_z, rho_mu) in closed form.
PeriodMatrix period_matrix(OrderBasis const& ob, Complex z);

struct PeriodCheck
{
    bool ok = false;
    long double max_residual = 0;   ///< over both base relations, scaled by the term magnitudes
    long double min_imag_eigen = 0; ///< smallest eigenvalue of Im tau
};

long double relation_residual(SingularRelation const& l, PeriodMatrix const& tau);

PeriodCheck period_matrix_check(OrderBasis const& ob, Complex z, long double tol = 1e-9L);

struct SuiteCheck
{
    std::string name;
    bool ok;
    std::string detail;
};

/// Property suite for one eligible form with D > 1: closure, reduced
/// discriminant, q_mu equivalence, determinant identity, period matrices
/// at `samples` random points and CM Gram determinants.
std::vector<SuiteCheck> order_suite(EligibleForm const& f, int samples = 20,
                                    std::uint64_t seed = 20240101, long double tol = 1e-9L);

} // namespace humbert
