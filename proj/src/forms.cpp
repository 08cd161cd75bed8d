#include "bhc/forms.hpp"

#include "bhc/errors.hpp"
#include "bhc/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace bhc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::size_t checked_volume(const std::vector<std::size_t>& dims)
{
    if (dims.empty())
        throw DomainError("multilinear form needs arity >= 1");
    std::size_t volume = 1;
    for (std::size_t d : dims) {
        if (d == 0)
            throw DomainError("multilinear form dimensions must be >= 1");
        if (volume > (std::size_t{1} << 40) / d)
            throw CapacityError("multilinear form tensor too large");
        volume *= d;
    }
    return volume;
}

} // namespace

MultilinearForm::MultilinearForm(std::vector<std::size_t> dims, ScalarField field)
    : dims_(std::move(dims)), field_(field)
{
    coeffs_.assign(checked_volume(dims_), Complex{});
}

MultilinearForm::MultilinearForm(std::vector<std::size_t> dims, std::vector<Complex> coeffs, ScalarField field)
    : dims_(std::move(dims)), coeffs_(std::move(coeffs)), field_(field)
{
    if (coeffs_.size() != checked_volume(dims_))
        throw DomainError("coefficient count does not match the product of dimensions");
    for (const Complex& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw DomainError("multilinear form coefficients must be finite");
        if (field_ == ScalarField::Real && c.imag() != 0.0)
            throw DomainError("real multilinear form has a nonzero imaginary part");
    }
}

MultilinearForm MultilinearForm::real(std::vector<std::size_t> dims, std::span<const double> coeffs)
{
    std::vector<Complex> c(coeffs.begin(), coeffs.end());
    return MultilinearForm(std::move(dims), std::move(c), ScalarField::Real);
}

std::size_t MultilinearForm::offset(std::span<const std::size_t> index) const
{
    if (index.size() != dims_.size())
        throw DomainError("index arity mismatch");
    std::size_t off = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (index[k] >= dims_[k])
            throw DomainError("index out of range");
        off = off * dims_[k] + index[k];
    }
    return off;
}

void MultilinearForm::set(std::span<const std::size_t> index, Complex value)
{
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw DomainError("multilinear form coefficients must be finite");
    if (field_ == ScalarField::Real && value.imag() != 0.0)
        throw DomainError("real multilinear form has a nonzero imaginary part");
    coeffs_[offset(index)] = value;
}

std::vector<double> MultilinearForm::real_coefficients() const
{
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const Complex& c : coeffs_) {
        if (c.imag() != 0.0)
            throw DomainError("form has complex coefficients");
        out.push_back(c.real());
    }
    return out;
}

Complex MultilinearForm::evaluate(std::span<const std::vector<Complex>> args) const
{
    if (args.size() != dims_.size())
        throw DomainError("evaluate: wrong number of arguments");
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (args[k].size() != dims_[k])
            throw DomainError("evaluate: argument dimension mismatch");
    }
    std::vector<std::size_t> idx(dims_.size(), 0);
    Complex total{};
    for (std::size_t off = 0; off < coeffs_.size(); ++off) {
        Complex term = coeffs_[off];
        for (std::size_t k = 0; k < idx.size(); ++k)
            term *= args[k][idx[k]];
        total += term;
        for (std::size_t k = idx.size(); k-- > 0;) {
            if (++idx[k] < dims_[k])
                break;
            idx[k] = 0;
        }
    }
    return total;
}

void MultilinearForm::scale(double lambda)
{
    for (Complex& c : coeffs_)
        c *= lambda;
}

MultilinearForm littlewood_form()
{
    const double c[] = {1.0, 1.0, 1.0, -1.0};
    return MultilinearForm::real({2, 2}, c);
}

HomogeneousPolynomial::HomogeneousPolynomial(unsigned degree, unsigned variables, ScalarField field)
    : degree_(degree), variables_(variables), field_(field)
{
    if (degree == 0 || variables == 0)
        throw DomainError("polynomial degree and variable count must be >= 1");
}

void HomogeneousPolynomial::set(const MultiIndex& alpha, Complex value)
{
    if (alpha.size() != variables_)
        throw DomainError("multi-index length must equal the number of variables");
    if (std::accumulate(alpha.begin(), alpha.end(), 0u) != degree_)
        throw DomainError("multi-index must sum to the degree");
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw DomainError("polynomial coefficients must be finite");
    if (field_ == ScalarField::Real && value.imag() != 0.0)
        throw DomainError("real polynomial has a nonzero imaginary part");
    if (value == Complex{})
        terms_.erase(alpha);
    else
        terms_[alpha] = value;
}

Complex HomogeneousPolynomial::coefficient(const MultiIndex& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Complex{} : it->second;
}

Complex HomogeneousPolynomial::evaluate(std::span<const Complex> z) const
{
    if (z.size() != variables_)
        throw DomainError("evaluate: expected " + std::to_string(variables_) + " variables");
    Complex total{};
    for (const auto& [alpha, c] : terms_) {
        Complex term = c;
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            for (unsigned e = 0; e < alpha[k]; ++e)
                term *= z[k];
        }
        total += term;
    }
    return total;
}

void HomogeneousPolynomial::scale(double lambda)
{
    for (auto& [alpha, c] : terms_)
        c *= lambda;
}

std::vector<MultiIndex> enumerate_multi_indices(unsigned m, unsigned n)
{
    if (m == 0 || n == 0)
        throw DomainError("enumerate_multi_indices: m and n must be >= 1");
    std::vector<MultiIndex> out;
    MultiIndex alpha(n, 0);
    // Recursive fill: position k receives values from the remaining budget downward.
    auto fill = [&](auto&& self, unsigned k, unsigned remaining) -> void {
        if (k + 1 == n) {
            alpha[k] = remaining;
            out.push_back(alpha);
            return;
        }
        for (unsigned v = remaining + 1; v-- > 0;) {
            alpha[k] = v;
            self(self, k + 1, remaining - v);
        }
    };
    fill(fill, 0, m);
    return out;
}

HomogeneousPolynomial make_polynomial(unsigned m, unsigned n, std::span<const std::pair<MultiIndex, double>> terms)
{
    HomogeneousPolynomial p(m, n, ScalarField::Complex);
    for (const auto& [alpha, c] : terms)
        p.set(alpha, c);
    return p;
}

HomogeneousPolynomial quadratic_p2(double a, double b, double c)
{
    HomogeneousPolynomial p(2, 2, ScalarField::Complex);
    p.set({2, 0}, a);
    p.set({0, 2}, b);
    p.set({1, 1}, c);
    return p;
}

// ---------------------------------------------------------------------------

namespace {

// Sign-vector search state for sup_norm_real_exact.
class SignSearch {
public:
    SignSearch(const MultilinearForm& form)
        : dims_(form.dims()), coeffs_(form.real_coefficients()), strides_(dims_.size(), 1)
    {
        for (std::size_t k = dims_.size() - 1; k-- > 0;)
            strides_[k] = strides_[k + 1] * dims_[k + 1];
        for (std::size_t k = 1; k < dims_.size(); ++k) {
            signs_.emplace_back(dims_[k], 1.0);
            for (std::size_t p = 0; p < dims_[k]; ++p)
                bit_owner_.push_back({k, p});
        }
        partial_.assign(dims_[0], 0.0);
    }

    std::size_t bits() const { return bit_owner_.size(); }

    // partial_[i1] = sum over i2..im of a * prod(signs), from scratch.
    void recompute()
    {
        std::fill(partial_.begin(), partial_.end(), 0.0);
        const std::size_t inner = strides_[0];
        for (std::size_t i1 = 0; i1 < dims_[0]; ++i1) {
            double acc = 0.0;
            for (std::size_t r = 0; r < inner; ++r)
                acc += coeffs_[i1 * inner + r] * sign_product(r, dims_.size());
            partial_[i1] = acc;
        }
    }

    void flip(std::size_t bit)
    {
        const auto [k, p] = bit_owner_[bit];
        const double old = signs_[k - 1][p];
        const std::size_t inner = strides_[0];
        // Offsets r (within one i1 slice) whose k-th index equals p.
        const std::size_t block = strides_[k];
        const std::size_t period = block * dims_[k];
        for (std::size_t i1 = 0; i1 < dims_[0]; ++i1) {
            double delta = 0.0;
            for (std::size_t hi = 0; hi < inner; hi += period) {
                for (std::size_t lo = 0; lo < block; ++lo) {
                    const std::size_t r = hi + p * block + lo;
                    delta += coeffs_[i1 * inner + r] * sign_product(r, k);
                }
            }
            partial_[i1] -= 2.0 * old * delta;
        }
        signs_[k - 1][p] = -old;
    }

    double value() const
    {
        double s = 0.0;
        for (double v : partial_)
            s += std::abs(v);
        return s;
    }

private:
    // Product of the signs selected by inner offset r, skipping argument `skip`.
    double sign_product(std::size_t r, std::size_t skip) const
    {
        double prod = 1.0;
        for (std::size_t k = 1; k < dims_.size(); ++k) {
            const std::size_t ik = (r / strides_[k]) % dims_[k];
            if (k != skip)
                prod *= signs_[k - 1][ik];
        }
        return prod;
    }

    struct Owner {
        std::size_t arg;
        std::size_t pos;
    };

    std::vector<std::size_t> dims_;
    std::vector<double> coeffs_;
    std::vector<std::size_t> strides_;
    std::vector<std::vector<double>> signs_;
    std::vector<Owner> bit_owner_;
    std::vector<double> partial_;
};

} // namespace

double sup_norm_real_exact(const MultilinearForm& form, unsigned max_sign_bits)
{
    if (form.field() != ScalarField::Real)
        throw DomainError("sup_norm_real_exact requires a real form");
    SignSearch search(form);
    const std::size_t bits = search.bits();
    if (bits > max_sign_bits || bits >= 63)
        throw CapacityError("sign space 2^" + std::to_string(bits) + " exceeds the cap 2^"
                            + std::to_string(max_sign_bits));

    constexpr std::uint64_t kRefresh = 1024;
    search.recompute();
    double best = search.value();
    const std::uint64_t total = std::uint64_t{1} << bits;
    for (std::uint64_t step = 1; step < total; ++step) {
        search.flip(static_cast<std::size_t>(std::countr_zero(step)));
        if (step % kRefresh == 0)
            search.recompute();
        best = std::max(best, search.value());
    }
    return best;
}

double coeff_lq_norm(std::span<const Complex> coeffs, double q)
{
    if (!(q >= 1.0) || !std::isfinite(q))
        throw DomainError("coeff_lq_norm: q must be >= 1");
    double scale = 0.0;
    for (const Complex& c : coeffs)
        scale = std::max(scale, std::abs(c));
    if (scale == 0.0)
        return 0.0;
    double sum = 0.0;
    for (const Complex& c : coeffs)
        sum += std::pow(std::abs(c) / scale, q);
    return scale * std::pow(sum, 1.0 / q);
}

double coeff_lq_norm(const MultilinearForm& form, double q)
{
    return coeff_lq_norm(form.coefficients(), q);
}

double coeff_lq_norm(const HomogeneousPolynomial& poly, double q)
{
    std::vector<Complex> c;
    c.reserve(poly.terms().size());
    for (const auto& [alpha, value] : poly.terms())
        c.push_back(value);
    return coeff_lq_norm(c, q);
}

double bh_ratio(const MultilinearForm& form, double q, unsigned max_sign_bits)
{
    const double lq = coeff_lq_norm(form, q);
    if (lq == 0.0)
        throw DegenerateError("bh_ratio: zero form");
    return lq / sup_norm_real_exact(form, max_sign_bits);
}

double norm_p2_complex(double a, double b, double c)
{
    const double ab = a * b;
    if (ab >= 0.0 || std::abs(c * (a + b)) > 4.0 * std::abs(ab))
        return std::abs(a + b) + std::abs(c);
    return (std::abs(a) + std::abs(b)) * std::sqrt(1.0 + c * c / (4.0 * std::abs(ab)));
}

namespace {

// max |alpha + beta s + gamma s^2| over s in [-1, 1].
double max_abs_quadratic(double alpha, double beta, double gamma)
{
    auto f = [&](double s) { return std::abs(alpha + beta * s + gamma * s * s); };
    double best = std::max(f(-1.0), f(1.0));
    if (gamma != 0.0) {
        const double vertex = -beta / (2.0 * gamma);
        if (vertex >= -1.0 && vertex <= 1.0)
            best = std::max(best, f(vertex));
    }
    return best;
}

} // namespace

double norm_p2_real(double a, double b, double c)
{
    // Interior critical points solve [2a c; c 2b] (x, y) = 0; the value there is 0.
    double best = 0.0;
    // x = +-1: a + (+-c) y + b y^2 ; y = +-1: b + (+-c) x + a x^2.
    best = std::max(best, max_abs_quadratic(a, c, b));
    best = std::max(best, max_abs_quadratic(a, -c, b));
    best = std::max(best, max_abs_quadratic(b, c, a));
    best = std::max(best, max_abs_quadratic(b, -c, a));
    return best;
}

// ---------------------------------------------------------------------------

namespace {

struct Term {
    std::vector<unsigned> alpha;
    Complex coeff;
};

class TorusObjective {
public:
    explicit TorusObjective(const HomogeneousPolynomial& poly) : degree_(poly.degree()), n_(poly.variables())
    {
        for (const auto& [alpha, c] : poly.terms())
            terms_.push_back({alpha, c});
    }

    double value(const std::vector<double>& theta) const
    {
        Complex total{};
        for (const Term& t : terms_)
            total += t.coeff * std::polar(1.0, phase(t, theta));
        return std::abs(total);
    }

    // Coefficients B_d of P as a trigonometric polynomial in theta_k.
    std::vector<Complex> slice(const std::vector<double>& theta, std::size_t k) const
    {
        std::vector<Complex> b(degree_ + 1, Complex{});
        for (const Term& t : terms_) {
            const double other = phase(t, theta) - t.alpha[k] * theta[k];
            b[t.alpha[k]] += t.coeff * std::polar(1.0, other);
        }
        return b;
    }

    unsigned degree() const { return degree_; }
    unsigned variables() const { return n_; }

private:
    static double phase(const Term& t, const std::vector<double>& theta)
    {
        double s = 0.0;
        for (std::size_t l = 0; l < t.alpha.size(); ++l)
            s += t.alpha[l] * theta[l];
        return s;
    }

    unsigned degree_;
    unsigned n_;
    std::vector<Term> terms_;
};

double eval_slice(const std::vector<Complex>& b, double theta)
{
    Complex s{};
    for (std::size_t d = 0; d < b.size(); ++d)
        s += b[d] * std::polar(1.0, static_cast<double>(d) * theta);
    return std::abs(s);
}

// Grid scan followed by golden-section refinement around the best cell.
std::pair<double, double> maximize_slice(const std::vector<Complex>& b, unsigned degree)
{
    const unsigned grid = 16 * (degree + 1);
    const double h = kTwoPi / grid;
    double best_theta = 0.0;
    double best_value = -1.0;
    for (unsigned g = 0; g < grid; ++g) {
        const double th = g * h;
        const double v = eval_slice(b, th);
        if (v > best_value) {
            best_value = v;
            best_theta = th;
        }
    }
    constexpr double invphi = 0.6180339887498948482;
    double lo = best_theta - h;
    double hi = best_theta + h;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = eval_slice(b, x1);
    double f2 = eval_slice(b, x2);
    while (hi - lo > 1e-9) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = eval_slice(b, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = eval_slice(b, x1);
        }
    }
    const double mid = 0.5 * (lo + hi);
    const double fm = eval_slice(b, mid);
    if (fm > best_value)
        return {mid, fm};
    return {best_theta, best_value};
}

} // namespace

TorusMaximum maximize_on_torus(const HomogeneousPolynomial& poly, unsigned restarts, std::uint64_t seed)
{
    if (restarts == 0)
        throw DomainError("maximize_on_torus: restarts must be >= 1");
    TorusObjective objective(poly);
    TorusMaximum best{0.0, std::vector<double>(poly.variables(), 0.0)};
    if (poly.terms().empty())
        return best;

    constexpr unsigned kMaxSweeps = 2000;
    for (unsigned r = 0; r < restarts; ++r) {
        CounterRng rng(seed, r);
        std::vector<double> theta(poly.variables());
        for (double& th : theta)
            th = kTwoPi * rng.uniform();
        double current = objective.value(theta);
        for (unsigned sweep = 0; sweep < kMaxSweeps; ++sweep) {
            const double before = current;
            for (std::size_t k = 0; k < theta.size(); ++k) {
                const auto b = objective.slice(theta, k);
                const auto [th, v] = maximize_slice(b, objective.degree());
                if (v > current) {
                    theta[k] = std::remainder(th, kTwoPi);
                    current = v;
                }
            }
            if (current - before <= 1e-15 * current)
                break;
        }
        // Report the value of the actual evaluation, not the slice estimate.
        const double exact = objective.value(theta);
        if (exact > best.value) {
            best.value = exact;
            best.phases = theta;
        }
    }
    return best;
}

double sup_norm_complex_estimate(const HomogeneousPolynomial& poly, unsigned restarts, std::uint64_t seed)
{
    return maximize_on_torus(poly, restarts, seed).value;
}

} // namespace bhc
