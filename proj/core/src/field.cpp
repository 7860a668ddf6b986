#include "cyclarc/field.hpp"

#include <algorithm>
#include <sstream>

#include "cyclarc/errors.hpp"
#include "cyclarc/upoly.hpp"

namespace cyclarc {

namespace {

// Raw polynomial arithmetic over GF(p), coefficient vectors low degree first.
// Used only for modulus bookkeeping; everything else goes through UPoly.
using Raw = std::vector<Int>;

Int norm_mod(Int a, Int p) {
    a %= p;
    return a < 0 ? a + p : a;
}

void rtrim(Raw& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int rdeg(const Raw& a) { return static_cast<int>(a.size()) - 1; }

Raw rmul(const Raw& a, const Raw& b, Int p) {
    if (a.empty() || b.empty()) return {};
    Raw r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = norm_mod(r[i + j] + a[i] * b[j], p);
    }
    rtrim(r);
    return r;
}

// Remainder of a modulo monic m.
Raw rmod(Raw a, const Raw& m, Int p) {
    rtrim(a);
    int dm = rdeg(m);
    while (rdeg(a) >= dm) {
        Int c = a.back();
        int shift = rdeg(a) - dm;
        if (c != 0)
            for (int i = 0; i <= dm; ++i)
                a[i + shift] = norm_mod(a[i + shift] - c * m[i], p);
        a.pop_back();
        rtrim(a);
    }
    return a;
}

Raw rscale(Raw a, Int c, Int p) {
    for (auto& x : a) x = norm_mod(x * c, p);
    rtrim(a);
    return a;
}

Int inv_mod_p(Int a, Int p) {
    a = norm_mod(a, p);
    if (a == 0) throw MathError("division by zero in GF(p)");
    Int t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        Int q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    return norm_mod(t, p);
}

Raw rgcd(Raw a, Raw b, Int p) {
    rtrim(a);
    rtrim(b);
    while (!b.empty()) {
        Raw m = b;
        Int lc = inv_mod_p(m.back(), p);
        m = rscale(m, lc, p);
        a = rmod(std::move(a), m, p);
        std::swap(a, b);
    }
    if (!a.empty()) a = rscale(a, inv_mod_p(a.back(), p), p);
    return a;
}

// Extended gcd: returns g and u with u*a = g mod m (m monic). Used for
// inversion in GF(p)[x]/(m).
std::pair<Raw, Raw> rxgcd_mod(Raw a, Raw m, Int p) {
    Raw r0 = m, r1 = a, u0 = {}, u1 = {1};
    rtrim(r1);
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        Raw q;
        Raw rem = r0;
        rtrim(rem);
        int d1 = rdeg(r1);
        Int lci = inv_mod_p(r1.back(), p);
        q.assign(std::max<int>(rdeg(rem) - d1 + 1, 0), 0);
        while (rdeg(rem) >= d1 && !rem.empty()) {
            Int c = norm_mod(rem.back() * lci, p);
            int shift = rdeg(rem) - d1;
            q[shift] = c;
            for (int i = 0; i <= d1; ++i)
                rem[i + shift] = norm_mod(rem[i + shift] - c * r1[i], p);
            rtrim(rem);
        }
        rtrim(q);
        Raw u2 = u0;  // u2 = u0 - q*u1
        Raw qu1 = rmul(q, u1, p);
        if (u2.size() < qu1.size()) u2.resize(qu1.size(), 0);
        for (size_t i = 0; i < qu1.size(); ++i) u2[i] = norm_mod(u2[i] - qu1[i], p);
        rtrim(u2);
        r0 = r1;
        u0 = u1;
        r1 = rem;
        u1 = u2;
    }
    return {r0, u0};
}

// x^(p^k) mod f via k successive exponent-p powerings.
Raw r_frobenius_of_x(const Raw& f, Int p, int k) {
    Raw x = {0, 1};
    x = rmod(x, f, p);
    Raw cur = x;
    for (int i = 0; i < k; ++i) {
        // cur = cur^p mod f
        Raw acc = {1};
        Raw base = cur;
        Int e = p;
        while (e > 0) {
            if (e & 1) acc = rmod(rmul(acc, base, p), f, p);
            base = rmod(rmul(base, base, p), f, p);
            e >>= 1;
        }
        cur = acc;
    }
    return cur;
}

bool r_is_irreducible(const Raw& f, Int p) {
    int d = rdeg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    // Rabin: x^(p^d) == x mod f, and gcd(x^(p^(d/r)) - x, f) = 1 for primes r|d.
    Raw xp = r_frobenius_of_x(f, p, d);
    Raw x = rmod(Raw{0, 1}, f, p);
    Raw diff = xp;
    if (diff.size() < x.size()) diff.resize(x.size(), 0);
    for (size_t i = 0; i < x.size(); ++i) diff[i] = norm_mod(diff[i] - x[i], p);
    rtrim(diff);
    if (!diff.empty()) return false;
    for (Int r : prime_divisors(d)) {
        Raw xr = r_frobenius_of_x(f, p, d / static_cast<int>(r));
        Raw dd = xr;
        if (dd.size() < x.size()) dd.resize(x.size(), 0);
        for (size_t i = 0; i < x.size(); ++i) dd[i] = norm_mod(dd[i] - x[i], p);
        rtrim(dd);
        Raw g = rgcd(dd, f, p);
        if (rdeg(g) != 0) return false;
    }
    return true;
}

Raw canonical_modulus(Int p, int d) {
    if (d == 1) return {0, 1};  // x, unused in the prime-field case
    Int count = checked_pow(p, d);
    for (Int idx = 0; idx < count; ++idx) {
        Raw f(d + 1, 0);
        Int v = idx;
        for (int i = 0; i < d; ++i) {
            f[i] = v % p;
            v /= p;
        }
        f[d] = 1;
        if (r_is_irreducible(f, p)) return f;
    }
    throw MathError("no irreducible modulus found");  // unreachable
}

}  // namespace

Field::Field(Int p, int deg, std::vector<Int> mod)
    : p_(p), deg_(deg), mod_(std::move(mod)) {
    size_ = checked_pow(p_, deg_);
}

FieldPtr Field::prime_field(Int p) { return make(p, 1); }

FieldPtr Field::make(Int p, int degree) {
    if (!is_prime(p)) throw InputError("field characteristic must be prime");
    if (degree < 1) throw InputError("field degree must be positive");
    checked_pow(p, degree);  // representability guard
    Raw mod = degree == 1 ? Raw{0, 1} : canonical_modulus(p, degree);
    return FieldPtr(new Field(p, degree, std::move(mod)));
}

FieldPtr Field::make(Int p, const std::vector<Int>& modulus) {
    if (!is_prime(p)) throw InputError("field characteristic must be prime");
    Raw m = modulus;
    for (auto& c : m) c = norm_mod(c, p);
    rtrim(m);
    int d = rdeg(m);
    if (d < 1) throw InputError("modulus must have positive degree");
    if (m.back() != 1) throw InputError("modulus must be monic");
    if (d > 1 && !r_is_irreducible(m, p))
        throw InputError("modulus is reducible over GF(p)");
    checked_pow(p, d);
    return FieldPtr(new Field(p, d, std::move(m)));
}

std::string Field::spec_string() const {
    std::ostringstream os;
    os << p_ << "^" << deg_ << "/";
    for (int i = 0; i <= deg_; ++i) {
        if (i) os << ",";
        os << mod_[i];
    }
    return os.str();
}

FieldPtr Field::parse_spec(const std::string& spec) {
    auto caret = spec.find('^');
    auto slash = spec.find('/');
    if (caret == std::string::npos || slash == std::string::npos || slash < caret)
        throw InputError("bad field spec, expected \"p^h/c0,c1,...,1\": " + spec);
    Int p = std::stoll(spec.substr(0, caret));
    int h = std::stoi(spec.substr(caret + 1, slash - caret - 1));
    std::vector<Int> mod;
    std::string rest = spec.substr(slash + 1);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) mod.push_back(std::stoll(tok));
    if (static_cast<int>(mod.size()) != h + 1)
        throw InputError("field spec modulus length does not match degree");
    return make(p, mod);
}

bool Field::same_as(const Field& o) const {
    return p_ == o.p_ && deg_ == o.deg_ && mod_ == o.mod_;
}

std::vector<Int> Field::reduce(std::vector<Int> raw) const {
    for (auto& c : raw) c = norm_mod(c, p_);
    if (deg_ > 1) raw = rmod(std::move(raw), mod_, p_);
    else if (!raw.empty()) raw.resize(1);
    raw.resize(deg_, 0);
    return raw;
}

Element Field::zero() const { return Element(shared_from_this(), std::vector<Int>(deg_, 0)); }

Element Field::one() const { return from_int(1); }

Element Field::from_int(Int v) const {
    std::vector<Int> c(deg_, 0);
    c[0] = norm_mod(v, p_);
    return Element(shared_from_this(), std::move(c));
}

Element Field::element(std::vector<Int> coeffs) const {
    return Element(shared_from_this(), reduce(std::move(coeffs)));
}

Element Field::element_by_index(Int idx) const {
    if (idx < 0 || idx >= size_) throw InputError("element index out of range");
    std::vector<Int> c(deg_, 0);
    for (int i = 0; i < deg_; ++i) {
        c[i] = idx % p_;
        idx /= p_;
    }
    return Element(shared_from_this(), std::move(c));
}

namespace {
void check_fields(const Element& a, const Element& b) {
    if (!a.valid() || !b.valid()) throw MathError("operation on empty element");
    if (!a.field()->same_as(*b.field())) throw MathError("mixed-field arithmetic");
}
}  // namespace

Element Field::add(const Element& a, const Element& b) const {
    check_fields(a, b);
    std::vector<Int> c(deg_);
    for (int i = 0; i < deg_; ++i) c[i] = norm_mod(a.coeffs()[i] + b.coeffs()[i], p_);
    return Element(shared_from_this(), std::move(c));
}

Element Field::sub(const Element& a, const Element& b) const {
    check_fields(a, b);
    std::vector<Int> c(deg_);
    for (int i = 0; i < deg_; ++i) c[i] = norm_mod(a.coeffs()[i] - b.coeffs()[i], p_);
    return Element(shared_from_this(), std::move(c));
}

Element Field::neg(const Element& a) const {
    std::vector<Int> c(deg_);
    for (int i = 0; i < deg_; ++i) c[i] = norm_mod(-a.coeffs()[i], p_);
    return Element(shared_from_this(), std::move(c));
}

Element Field::mul(const Element& a, const Element& b) const {
    check_fields(a, b);
    if (deg_ == 1)
        return Element(shared_from_this(), {norm_mod(a.coeffs()[0] * b.coeffs()[0], p_)});
    Raw r = rmul(a.coeffs(), b.coeffs(), p_);
    r = rmod(std::move(r), mod_, p_);
    r.resize(deg_, 0);
    return Element(shared_from_this(), std::move(r));
}

Element Field::inv(const Element& a) const {
    if (a.is_zero()) throw MathError("inverse of zero");
    if (deg_ == 1)
        return Element(shared_from_this(), {inv_mod_p(a.coeffs()[0], p_)});
    auto [g, u] = rxgcd_mod(a.coeffs(), mod_, p_);
    if (rdeg(g) != 0) throw MathError("element not invertible (modulus not irreducible?)");
    Raw r = rscale(u, inv_mod_p(g[0], p_), p_);
    r = rmod(std::move(r), mod_, p_);
    r.resize(deg_, 0);
    return Element(shared_from_this(), std::move(r));
}

Element Field::pow(const Element& a, Int e) const {
    if (e < 0) return pow(inv(a), -e);
    Element acc = one();
    Element base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

Element Field::frobenius_p(const Element& a, int times) const {
    Element r = a;
    for (int i = 0; i < times; ++i) r = pow(r, p_);
    return r;
}

Element Field::pth_root(const Element& a) const { return frobenius_p(a, deg_ - 1); }

const std::vector<std::pair<Int, int>>& Field::order_factorization() const {
    std::call_once(fact_once_, [this] { order_fact_ = factorize(size_ - 1); });
    return order_fact_;
}

Int Field::element_order(const Element& a) const {
    if (a.is_zero()) throw InputError("zero has no multiplicative order");
    Int ord = size_ - 1;
    for (auto& [q, e] : order_factorization()) {
        for (int i = 0; i < e; ++i) {
            if (pow(a, ord / q).is_one())
                ord /= q;
            else
                break;
        }
    }
    return ord;
}

const Element& Field::generator() const {
    std::call_once(gen_once_, [this] {
        for (Int idx = 1; idx < size_; ++idx) {
            Element cand = element_by_index(idx);
            if (cand.is_zero()) continue;
            if (element_order(cand) == size_ - 1) {
                gen_ = std::make_shared<Element>(std::move(cand));
                return;
            }
        }
        throw MathError("no generator found");  // unreachable for a field
    });
    return *gen_;
}

bool Element::is_zero() const {
    for (Int v : c_)
        if (v != 0) return false;
    return true;
}

bool Element::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Element::operator==(const Element& o) const {
    if (!valid() || !o.valid()) return valid() == o.valid();
    return field_->same_as(*o.field_) && c_ == o.c_;
}

Int Element::index() const {
    Int idx = 0;
    for (size_t i = c_.size(); i-- > 0;) idx = idx * field_->characteristic() + c_[i];
    return idx;
}

std::string Element::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    return os.str();
}

FieldHom::FieldHom(FieldPtr src, FieldPtr dst, Element gen_image)
    : src_(std::move(src)), dst_(std::move(dst)), gen_image_(std::move(gen_image)) {
    pow_.reserve(src_->degree());
    Element acc = dst_->one();
    for (int i = 0; i < src_->degree(); ++i) {
        pow_.push_back(acc);
        acc = acc * gen_image_;
    }
}

FieldHom FieldHom::identity(const FieldPtr& f) {
    Element x = f->degree() == 1 ? f->one() : f->element_by_index(f->characteristic());
    return FieldHom(f, f, x);
}

FieldHom FieldHom::embedding(const FieldPtr& src, const FieldPtr& dst) {
    if (src->same_as(*dst)) return identity(src);
    if (src->characteristic() != dst->characteristic())
        throw InputError("embedding requires equal characteristic");
    if (dst->degree() % src->degree() != 0)
        throw InputError("no embedding: source degree does not divide target degree");
    if (src->degree() == 1) return FieldHom(src, dst, dst->one());
    UPoly mod = UPoly::from_prime_coeffs(dst, src->modulus());
    std::vector<Element> roots = roots_in_field(mod);
    if (roots.empty()) throw MathError("source modulus has no root in target field");
    std::sort(roots.begin(), roots.end(),
              [](const Element& a, const Element& b) { return a.index() < b.index(); });
    return FieldHom(src, dst, roots.front());
}

Element FieldHom::apply(const Element& a) const {
    if (!a.field()->same_as(*src_)) throw MathError("FieldHom applied to wrong field");
    Element acc = dst_->zero();
    for (int i = 0; i < src_->degree(); ++i) {
        Int ci = a.coeffs()[i];
        if (ci != 0) acc = acc + pow_[i] * dst_->from_int(ci);
    }
    return acc;
}

void FieldHom::build_section() const {
    // Columns: coefficient vectors of gen_image^j over GF(p). Stored as an
    // augmented matrix template for per-call Gaussian elimination.
    int rows = dst_->degree(), cols = src_->degree();
    section_mat_.assign(rows, std::vector<Int>(cols, 0));
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) section_mat_[i][j] = pow_[j].coeffs()[i];
}

Element FieldHom::section(const Element& a) const {
    if (!a.field()->same_as(*dst_)) throw MathError("FieldHom section applied to wrong field");
    std::call_once(section_once_, [this] { build_section(); });
    Int p = dst_->characteristic();
    int rows = dst_->degree(), cols = src_->degree();
    std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols + 1, 0));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m[i][j] = section_mat_[i][j];
        m[i][cols] = a.coeffs()[i];
    }
    // Gaussian elimination over GF(p).
    int rank = 0;
    std::vector<int> pivot_col(rows, -1);
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        Int s = inv_mod_p(m[rank][col], p);
        for (int j = col; j <= cols; ++j) m[rank][j] = norm_mod(m[rank][j] * s, p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Int f = m[r][col];
            for (int j = col; j <= cols; ++j) m[r][j] = norm_mod(m[r][j] - f * m[rank][j], p);
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (m[r][cols] != 0) throw MathError("element is not in the embedded subfield");
    std::vector<Int> x(cols, 0);
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = m[r][cols];
    return src_->element(std::move(x));
}

}  // namespace cyclarc
