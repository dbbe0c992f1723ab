#include "humbert/quat.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace humbert {

Quaternion::Quaternion(QuaternionAlgebra alg, Rat w, Rat x, Rat y, Rat z)
    : alg_(alg), c_{std::move(w), std::move(x), std::move(y), std::move(z)}
{
}

Quaternion Quaternion::conj() const
{
    return {alg_, c_[0], -c_[1], -c_[2], -c_[3]};
}

Rat Quaternion::norm() const
{
    Rat const a = alg_.i_sq;
    Rat const b = alg_.j_sq;
    return c_[0] * c_[0] - a * c_[1] * c_[1] - b * c_[2] * c_[2] + a * b * c_[3] * c_[3];
}

Rat Quaternion::disc() const
{
    Rat const tr = trace();
    return tr * tr - 4 * norm();
}

namespace {

void require_same_algebra(Quaternion const& l, Quaternion const& r)
{
    if (!(l.algebra() == r.algebra()))
        throw std::logic_error("quaternions from different algebras");
}

} // namespace

Quaternion operator+(Quaternion const& l, Quaternion const& r)
{
    require_same_algebra(l, r);
    return {l.alg_, l.c_[0] + r.c_[0], l.c_[1] + r.c_[1], l.c_[2] + r.c_[2], l.c_[3] + r.c_[3]};
}

Quaternion operator-(Quaternion const& l, Quaternion const& r)
{
    require_same_algebra(l, r);
    return {l.alg_, l.c_[0] - r.c_[0], l.c_[1] - r.c_[1], l.c_[2] - r.c_[2], l.c_[3] - r.c_[3]};
}

Quaternion operator*(Quaternion const& l, Quaternion const& r)
{
    require_same_algebra(l, r);
    Rat const a = l.alg_.i_sq;
    Rat const b = l.alg_.j_sq;
    auto const& [w1, x1, y1, z1] = l.c_;
    auto const& [w2, x2, y2, z2] = r.c_;
    // IJ = K, JI = -K, IK = aJ, KI = -aJ, JK = -bI, KJ = bI, K^2 = -ab
    return {l.alg_,
            w1 * w2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
            w1 * x2 + x1 * w2 - b * (y1 * z2 - z1 * y2),
            w1 * y2 + y1 * w2 + a * (x1 * z2 - z1 * x2),
            w1 * z2 + z1 * w2 + x1 * y2 - y1 * x2};
}

Quaternion operator*(Rat const& k, Quaternion const& q)
{
    return {q.alg_, k * q.c_[0], k * q.c_[1], k * q.c_[2], k * q.c_[3]};
}

std::string to_string(Quaternion const& q)
{
    std::ostringstream os;
    os << to_string(q.w()) << " + " << to_string(q.x()) << "*I + " << to_string(q.y()) << "*J + "
       << to_string(q.z()) << "*IJ";
    return os.str();
}

std::int64_t SingularRelation::discriminant() const
{
    return c[1] * c[1] - 4 * (c[0] * c[2] + c[3] * c[4]);
}

std::int64_t SingularRelation::inner(SingularRelation const& m) const
{
    return c[1] * m.c[1] - 2 * (c[0] * m.c[2] + c[2] * m.c[0] + c[3] * m.c[4] + c[4] * m.c[3]);
}

PrimeChoice find_prime_and_s(EligibleForm const& f)
{
    std::int64_t const dn = f.D * f.N;
    bool const case1 = f.kind == FormKind::primitive;
    BQF const source = f.character_form();

    std::int64_t p = 0;
    for (std::int64_t bound = 64; bound <= kPrimeSearchBound && p == 0; bound *= 2) {
        for (std::int64_t v : represented_values(source, bound)) {
            if (v % 2 != 0 && dn % v != 0 && is_prime(v)) {
                p = v;
                break;
            }
        }
    }
    if (p == 0)
        throw MathError("no represented prime found");
    if (case1 && p % 4 != 1)
        throw std::logic_error("represented prime not 1 mod 4");

    std::int64_t const modulus = case1 ? p : 4 * p;
    for (std::int64_t s = case1 ? 0 : 1; s < 2 * modulus; s += 2) {
        __int128 const value = static_cast<__int128>(s) * s * dn + 1;
        if (value % modulus == 0)
            return {p, s, static_cast<std::int64_t>(value / modulus)};
    }
    throw MathError("no admissible s found");
}

std::array<Rat, 4> basis_coordinates(OrderBasis const& ob, Quaternion const& q)
{
    // solve sum_i lambda_i e_i = q by Gauss-Jordan on the 4x4 coordinate system
    std::array<std::array<Rat, 5>, 4> m;
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col)
            m[row][col] = ob.e[col].coords()[row];
        m[row][4] = q.coords()[row];
    }
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        while (pivot < 4 && m[pivot][col] == 0)
            ++pivot;
        if (pivot == 4)
            throw std::logic_error("order basis is degenerate");
        std::swap(m[col], m[pivot]);
        for (int row = 0; row < 4; ++row) {
            if (row == col || m[row][col] == 0)
                continue;
            Rat const factor = m[row][col] / m[col][col];
            for (int k = col; k < 5; ++k)
                m[row][k] -= factor * m[col][k];
        }
    }
    std::array<Rat, 4> out;
    for (int i = 0; i < 4; ++i)
        out[i] = m[i][4] / m[i][i];
    return out;
}

bool order_is_closed(OrderBasis const& ob)
{
    auto integral = [&](Quaternion const& q) {
        for (auto const& c : basis_coordinates(ob, q))
            if (c.get_den() != 1)
                return false;
        return true;
    };
    if (!integral(Quaternion::scalar(ob.algebra, 1)))
        return false;
    for (auto const& ei : ob.e)
        for (auto const& ej : ob.e)
            if (!integral(ei * ej))
                return false;
    return true;
}

Int reduced_discriminant(OrderBasis const& ob)
{
    Rat m[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m[i][j] = (ob.e[i] * ob.e[j].conj()).trace();
    // exact determinant by elimination
    Rat det = 1;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        while (pivot < 4 && m[pivot][col] == 0)
            ++pivot;
        if (pivot == 4)
            return 0;
        if (pivot != col) {
            for (int k = 0; k < 4; ++k)
                std::swap(m[col][k], m[pivot][k]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < 4; ++row) {
            Rat const factor = m[row][col] / m[col][col];
            for (int k = col; k < 4; ++k)
                m[row][k] -= factor * m[col][k];
        }
    }
    if (det.get_den() != 1)
        throw std::logic_error("non-integral trace form determinant");
    Int const abs_det = abs(det.get_num());
    Int root = sqrt(abs_det);
    if (root * root != abs_det)
        throw std::logic_error("trace form determinant is not a square");
    return root;
}

OrderBasis build_order(EligibleForm const& f)
{
    auto const [p, s, t] = find_prime_and_s(f);
    std::int64_t const dn = f.D * f.N;
    QuaternionAlgebra const alg{-dn, p};
    bool const case1 = f.kind == FormKind::primitive;
    Rat const sdn = s * dn;

    Quaternion const one = Quaternion::scalar(alg, 1);
    OrderBasis ob{case1 ? OrderKind::case1_primitive : OrderKind::case2_four_times,
                  alg,
                  {one, one, one, one},
                  p,
                  s,
                  t,
                  dn};
    if (case1) {
        ob.e[1] = Quaternion(alg, make_rat(1, 2), 0, make_rat(1, 2), 0);
        ob.e[2] = Quaternion(alg, 0, make_rat(1, 2), 0, make_rat(1, 2));
        ob.e[3] = Quaternion(alg, 0, 0, sdn / p, make_rat(1, p));
    } else {
        ob.e[1] = Quaternion(alg, make_rat(1, 2), make_rat(1, 2), 0, 0);
        ob.e[2] = Quaternion(alg, 0, 0, 1, 0);
        ob.e[3] = Quaternion(alg, 0, 0, sdn / (2 * p), make_rat(1, 2 * p));
    }
    if (!order_is_closed(ob))
        throw std::logic_error("order construction inconsistent");
    return ob;
}

namespace {

std::int64_t to_int64(Rat const& r, char const* what)
{
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        throw std::logic_error(std::string("inconsistent parameters: ") + what);
    return r.get_num().get_si();
}

std::pair<Quaternion, Quaternion> perp_basis(OrderBasis const& ob)
{
    if (ob.kind == OrderKind::case1_primitive)
        return {ob.e[1], ob.e[3]};
    return {ob.e[2], ob.e[3]};
}

} // namespace

BQF q_mu(OrderBasis const& ob)
{
    auto const [alpha, beta] = perp_basis(ob);
    Rat const qa = alpha.disc();
    Rat const qc = beta.disc();
    Rat const qb = (alpha + beta).disc() - qa - qc;
    return {to_int64(qa, "q_mu a"), to_int64(qb, "q_mu b"), to_int64(qc, "q_mu c")};
}

std::pair<SingularRelation, SingularRelation> base_relations(OrderBasis const& ob)
{
    std::int64_t const p = ob.p, s = ob.s, t = ob.t, dn = ob.dn;
    if (ob.kind == OrderKind::case1_primitive) {
        if ((1 - p) % 4 != 0)
            throw MathError("inconsistent parameters");
        return {SingularRelation{{1, 1, (1 - p) / 4, 0, 0}},
                SingularRelation{{0, 2 * s * dn, 0, 1, dn * (s * s * dn - t)}}};
    }
    if ((1 + s * dn) % 2 != 0)
        throw MathError("inconsistent parameters");
    return {SingularRelation{{1, 0, -p, 0, -(1 + s * dn) / 2}},
            SingularRelation{{0, 0, (1 - s * dn) / 2, 1, -t * dn}}};
}

Matrix3<std::int64_t> m_uv(OrderBasis const& ob, std::int64_t n, std::int64_t u, std::int64_t v)
{
    auto const [l1, l2] = base_relations(ob);
    std::int64_t const a = l1.discriminant();
    std::int64_t const b = l1.inner(l2);
    std::int64_t const c = l2.discriminant();
    return {{{a, b, u}, {b, c, v}, {u, v, n}}};
}

std::array<Quaternion, 3> trace_zero_basis(OrderBasis const& ob)
{
    Quaternion const shifted = Rat(2) * ob.e[1] - ob.e[0];
    if (ob.kind == OrderKind::case1_primitive)
        return {shifted, ob.e[2], ob.e[3]};
    return {ob.e[2], shifted, ob.e[3]};
}

Matrix3<Rat> cm_gram(OrderBasis const& ob, std::int64_t b1, std::int64_t b2, std::int64_t b3)
{
    Rat const p = ob.p, sdn = ob.s * ob.dn, tdn = ob.t * ob.dn;
    if (ob.kind == OrderKind::case1_primitive) {
        if (b2 % 2 != 0 || b3 % 2 != 0)
            throw MathError("invalid embedding coordinates");
        Rat const x = -Rat(b2) * p / 2 - b3;
        Rat const y = 2 * Rat(b1) - Rat(b2) * sdn;
        return {{{p, 2 * sdn, x}, {2 * sdn, 4 * tdn, y}, {x, y, Rat(b2 * b2) / 4}}};
    }
    if (b1 % 2 != 0 || b3 % 2 != 0)
        throw MathError("invalid embedding coordinates");
    return {{{4 * p, 2 * sdn, Rat(-b3)}, {2 * sdn, 4 * tdn, Rat(b1)}, {Rat(-b3), Rat(b1), Rat(b2 * b2)}}};
}

PeriodMatrix period_matrix(OrderBasis const& ob, Complex z)
{
    long double const dn = static_cast<long double>(ob.dn);
    long double const s = static_cast<long double>(ob.s);
    long double const p = static_cast<long double>(ob.p);
    long double const rp = std::sqrt(p);
    if (ob.kind == OrderKind::case1_primitive) {
        long double const eps = (1 + rp) / 2, epsb = (1 - rp) / 2;
        Complex const k = 1.0L / (p * z);
        Complex const t1 = -epsb * epsb + (p - 1) * s * dn * z / 2.0L + dn * eps * eps * z * z;
        Complex const t2 = epsb - (p - 1) * s * dn * z - dn * eps * z * z;
        Complex const t3 = -1.0L - 2.0L * s * dn * z + dn * z * z;
        return {k * t1, k * t2, k * t3};
    }
    Complex const k = 1.0L / (4.0L * z);
    Complex const t1 = dn * z * z + 2.0L * z - 1.0L;
    Complex const t2 = -(dn * z * z + 1.0L) / rp;
    Complex const t3 = (dn * z * z - 2.0L * s * dn * z - 1.0L) / p;
    return {k * t1, k * t2, k * t3};
}

long double relation_residual(SingularRelation const& l, PeriodMatrix const& tau)
{
    std::array<Complex, 5> const terms{static_cast<long double>(l.c[0]) * tau.t1,
                                       static_cast<long double>(l.c[1]) * tau.t2,
                                       static_cast<long double>(l.c[2]) * tau.t3,
                                       static_cast<long double>(l.c[3]) * (tau.t2 * tau.t2 - tau.t1 * tau.t3),
                                       Complex(static_cast<long double>(l.c[4]), 0)};
    Complex sum = 0;
    long double scale = 1;
    for (auto const& term : terms) {
        sum += term;
        scale = std::max(scale, std::abs(term));
    }
    return std::abs(sum) / scale;
}

PeriodCheck period_matrix_check(OrderBasis const& ob, Complex z, long double tol)
{
    if (!(z.imag() > 0))
        throw MathError("Im z must be positive");
    PeriodMatrix const tau = period_matrix(ob, z);
    auto const [l1, l2] = base_relations(ob);
    PeriodCheck out;
    out.max_residual = std::max(relation_residual(l1, tau), relation_residual(l2, tau));
    long double const a = tau.t1.imag(), b = tau.t2.imag(), c = tau.t3.imag();
    out.min_imag_eigen = (a + c) / 2 - std::hypot((a - c) / 2, b);
    out.ok = out.max_residual < tol && out.min_imag_eigen > 0;
    return out;
}

std::vector<SuiteCheck> order_suite(EligibleForm const& f, int samples, std::uint64_t seed, long double tol)
{
    std::vector<SuiteCheck> out;
    std::string const tag = to_string(f.form) + " ";
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        out.push_back({tag + name, ok, std::move(detail)});
    };

    OrderBasis const ob = build_order(f);
    std::int64_t const dn = ob.dn;
    {
        std::ostringstream os;
        os << "p=" << ob.p << " s=" << ob.s << " t=" << ob.t;
        add("order closure", order_is_closed(ob), os.str());
    }
    Int const rd = reduced_discriminant(ob);
    add("reduced discriminant = DN", rd == dn, "got " + rd.get_str());

    BQF const q = q_mu(ob);
    add("q_mu discriminant = -16DN", q.disc() == -16 * dn, to_string(q));
    add("q_mu ~ source form under GL2", gl2_canonical(q) == gl2_canonical(f.form),
        to_string(gl2_canonical(q)) + " vs " + to_string(f.form));
    add("q_mu represents only 0,1 mod 4", represents_only_0_1_mod4(q));

    auto const [l1, l2] = base_relations(ob);
    add("Gram(l1, l2) = matrix of q_mu",
        l1.discriminant() == q.a && 2 * l1.inner(l2) == q.b && l2.discriminant() == q.c);

    // det M_{u,v} and 4 DN n - Q(v, -u) are both quadratic in (n, u, v); the
    // ten points below determine such a polynomial, the random ones are extra.
    std::vector<std::array<std::int64_t, 3>> points{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0},
                                                    {1, 0, 1}, {0, 1, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> small(-50, 50);
    for (int i = 0; i < samples; ++i)
        points.push_back({small(rng) + 51, small(rng), small(rng)});
    bool det_ok = true;
    for (auto const& [n, u, v] : points)
        det_ok = det_ok && det3(m_uv(ob, n, u, v)) == 4 * dn * n - q(v, -u);
    add("det M_uv = 4DNn - Q(v,-u)", det_ok);

    std::uniform_real_distribution<long double> re(-2, 2), im(0.2L, 3);
    long double worst = 0, min_eig = 1e300L;
    bool period_ok = true;
    for (int i = 0; i < samples; ++i) {
        PeriodCheck const pc = period_matrix_check(ob, Complex(re(rng), im(rng)), tol);
        period_ok = period_ok && pc.ok;
        worst = std::max(worst, pc.max_residual);
        min_eig = std::min(min_eig, pc.min_imag_eigen);
    }
    {
        std::ostringstream os;
        os << "max residual " << static_cast<double>(worst) << ", min eig Im tau " << static_cast<double>(min_eig);
        add("period matrix satisfies l1, l2", period_ok, os.str());
    }

    auto const beta = trace_zero_basis(ob);
    bool gram_ok = true;
    for (int i = 0; i < 5 * samples; ++i) {
        std::int64_t b1 = small(rng), b2 = small(rng), b3 = small(rng);
        if (ob.kind == OrderKind::case1_primitive) {
            b2 *= 2;
            b3 *= 2;
        } else {
            b1 *= 2;
            b3 *= 2;
        }
        Quaternion const elt = Rat(b1) * beta[0] + Rat(b2) * beta[1] + Rat(b3) * beta[2];
        gram_ok = gram_ok && det3(cm_gram(ob, b1, b2, b3)) == 4 * elt.norm();
    }
    add("det CM Gram = 4 nr(b1 beta1 + b2 beta2 + b3 beta3)", gram_ok);
    return out;
}

} // namespace humbert
