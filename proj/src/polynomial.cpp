#include "gkm/polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gkm {

int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

Exponents unit_exponents(int nvars, int i) {
    Exponents e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = 1;
    return e;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

long monomial_count(int nvars, int d) {
    if (d < 0) return 0;
    if (nvars == 0) return d == 0 ? 1 : 0;
    // C(d + nvars - 1, nvars - 1)
    long n = d + nvars - 1, k = nvars - 1, out = 1;
    for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

static void enumerate_rec(int nvars, int d, int pos, Exponents& cur, std::vector<Exponents>& out) {
    if (pos == nvars - 1) {
        cur[pos] = d;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur[pos] = e;
        enumerate_rec(nvars, d - e, pos + 1, cur, out);
    }
}

std::vector<Exponents> monomials_of_degree(int nvars, int d) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    Exponents cur(nvars, 0);
    enumerate_rec(nvars, d, 0, cur, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

bool Character::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

Character Character::negated() const {
    Character out = *this;
    for (auto& c : out.coords) c = -c;
    return out;
}

Character Character::scaled(const mpz_class& s) const {
    Character out = *this;
    for (auto& c : out.coords) c *= s;
    return out;
}

std::string Character::str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += coords[i].get_str();
    }
    return s + ")";
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (!c.is_zero()) p.terms_[Exponents(nvars, 0)] = c;
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    p.terms_[e] = Rational(1);
    return p;
}

Polynomial Polynomial::linear_form(const Character& chi) {
    Polynomial p(chi.rank());
    for (int i = 0; i < chi.rank(); ++i) {
        if (chi.coords[i] == 0) continue;
        Exponents e(chi.rank(), 0);
        e[i] = 1;
        p.terms_[e] = Rational(chi.coords[i]);
    }
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // Terms are grlex-sorted, so the last term has maximal total degree.
    return total_degree(terms_.rbegin()->first);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rational Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::set_coeff(const Exponents& e, const Rational& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

void Polynomial::add_to_coeff(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw GkmError(Errc::BadArgument, "polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_to_coeff(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw GkmError(Errc::BadArgument, "polynomial variable counts differ");
    for (const auto& [e, c] : o.terms_) add_to_coeff(e, -c);
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
    return out;
}

Polynomial Polynomial::shifted(const Exponents& shift, const Rational& c) const {
    Polynomial out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) {
        Exponents f = e;
        for (int i = 0; i < nvars_; ++i) f[i] += shift[i];
        out.terms_[f] = v * c;
    }
    return out;
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() != q.nvars()) throw GkmError(Errc::BadArgument, "polynomial variable counts differ");
    Polynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) out += q.shifted(e, c);
    return out;
}

Polynomial power(const Polynomial& p, int k) {
    Polynomial out = Polynomial::constant(p.nvars(), Rational(1));
    for (int i = 0; i < k; ++i) out = multiply(out, p);
    return out;
}

Polynomial Polynomial::substitute_linear(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw GkmError(Errc::BadArgument, "substitution needs one image per variable");
    int target_vars = nvars_ == 0 ? 0 : images[0].nvars();
    // Cache images[i]^k up to the largest exponent used.
    std::vector<std::vector<Polynomial>> pow_cache(nvars_);
    for (int i = 0; i < nvars_; ++i)
        pow_cache[i].push_back(Polynomial::constant(target_vars, Rational(1)));
    Polynomial out(target_vars);
    for (const auto& [e, c] : terms_) {
        Polynomial term = Polynomial::constant(target_vars, c);
        for (int i = 0; i < nvars_; ++i) {
            while (static_cast<int>(pow_cache[i].size()) <= e[i])
                pow_cache[i].push_back(multiply(pow_cache[i].back(), images[i]));
            if (e[i] > 0) term = multiply(term, pow_cache[i][e[i]]);
        }
        out += term;
    }
    return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw GkmError(Errc::BadArgument, "evaluation point has wrong length");
    Rational out(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        out += t;
    }
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool has_vars = total_degree(e) > 0;
        if (!has_vars || c != Rational(1)) {
            os << c.str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

std::string polynomial_to_json(const Polynomial& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["exp"] = e;
        term["num"] = c.num().get_str();
        term["den"] = c.den().get_str();
        arr.push_back(term);
    }
    return arr.dump();
}

Polynomial polynomial_from_json(const std::string& text, int nvars) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw GkmError(Errc::SchemaError, std::string("polynomial: ") + ex.what());
    }
    if (!j.is_array()) throw GkmError(Errc::SchemaError, "polynomial: expected an array of terms");
    Polynomial p(nvars);
    for (size_t i = 0; i < j.size(); ++i) {
        const auto& t = j[i];
        std::string where = "term " + std::to_string(i);
        if (!t.is_object() || !t.contains("exp") || !t.contains("num") || !t.contains("den"))
            throw GkmError(Errc::SchemaError, "polynomial: " + where + " needs exp/num/den");
        if (!t["exp"].is_array() || t["exp"].size() != static_cast<size_t>(nvars))
            throw GkmError(Errc::SchemaError,
                           "polynomial: " + where + " exponent length != " + std::to_string(nvars));
        Exponents e;
        for (const auto& x : t["exp"]) {
            if (!x.is_number_integer() || x.get<long>() < 0)
                throw GkmError(Errc::SchemaError, "polynomial: " + where + " exponents must be nonnegative integers");
            e.push_back(static_cast<int>(x.get<long>()));
        }
        if (!t["num"].is_string() || !t["den"].is_string())
            throw GkmError(Errc::SchemaError, "polynomial: " + where + " num/den must be decimal strings");
        Rational c;
        try {
            c = Rational::from_strings(t["num"].get<std::string>(), t["den"].get<std::string>());
        } catch (const std::exception& ex) {
            throw GkmError(Errc::SchemaError, "polynomial: " + where + ": " + ex.what());
        }
        p.add_to_coeff(e, c);
    }
    return p;
}

} // namespace gkm
