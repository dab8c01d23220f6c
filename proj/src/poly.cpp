#include "kfd/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace kfd {

mpz_class content(const IPoly& f) {
    mpz_class g = 0;
    for (const mpz_class& c : f.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IPoly primitive_part(const IPoly& f) {
    if (f.is_zero()) return f;
    mpz_class c = content(f);
    std::vector<mpz_class> out;
    out.reserve(f.coeffs().size());
    for (const mpz_class& v : f.coeffs()) out.push_back(v / c);
    return IPoly(std::move(out));
}

IPoly normalized_primitive(const IPoly& f) {
    IPoly p = primitive_part(f);
    if (!p.is_zero() && sgn(p.lc()) < 0) p = -p;
    return p;
}

IPoly gcd_poly(const IPoly& a, const IPoly& b) {
    if (a.is_zero()) return normalized_primitive(b).is_zero() ? IPoly::constant(content(b))
                                                              : normalized_primitive(b);
    if (b.is_zero()) return gcd_poly(b, a);
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
    IPoly u = normalized_primitive(a), v = normalized_primitive(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IPoly r = normalized_primitive(pseudo_rem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    if (u.degree() == 0) return IPoly::constant(cg);
    return u.scaled(cg);
}

bool divides(const IPoly& d, const IPoly& f) {
    // divisibility over Q[x]
    if (d.is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (d.degree() == 0) return true;
    if (f.degree() < d.degree()) return false;
    IPoly dp = normalized_primitive(d);
    try {
        IPoly q = divexact_poly(
            normalized_primitive(f).scaled(pow_ui(dp.lc(), f.degree() - dp.degree() + 1)), dp);
        (void)q;
        return true;
    } catch (const inexact_division_error&) {
        return false;
    }
}

namespace {

QPoly to_qpoly(const IPoly& f) {
    std::vector<mpq_class> cs;
    cs.reserve(f.coeffs().size());
    for (const mpz_class& c : f.coeffs()) cs.emplace_back(c);
    return QPoly(std::move(cs));
}

QPoly monic_q(const QPoly& f) {
    if (f.is_zero()) return f;
    return f.scaled(mpq_class(1) / f.lc());
}

QPoly qgcd(QPoly a, QPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        QPoly r = pseudo_rem(a, b);  // over a field this is an ordinary remainder scale
        a = std::move(b);
        b = monic_q(r);
    }
    return monic_q(a);
}

IPoly q_to_primitive(const QPoly& f) {
    mpz_class den = 1;
    for (const mpq_class& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> cs;
    cs.reserve(f.coeffs().size());
    for (const mpq_class& c : f.coeffs()) {
        mpq_class v = c * den;
        cs.push_back(v.get_num());
    }
    return normalized_primitive(IPoly(std::move(cs)));
}

}  // namespace

std::vector<std::pair<IPoly, int>> squarefree_factorization(const IPoly& f) {
    // Yun over Q; parts returned as normalized primitive integer polynomials.
    std::vector<std::pair<IPoly, int>> out;
    if (f.degree() < 1) return out;
    QPoly p = monic_q(to_qpoly(f));
    QPoly g = qgcd(p, p.derivative());
    if (g.degree() == 0) {
        out.emplace_back(normalized_primitive(f), 1);
        return out;
    }
    QPoly c = divexact_poly(p, g);
    QPoly d = divexact_poly(p.derivative(), g) - c.derivative();
    for (int mult = 1; c.degree() > 0; ++mult) {
        QPoly w = qgcd(c, d);
        if (w.degree() > 0) out.emplace_back(q_to_primitive(w), mult);
        c = divexact_poly(c, w);
        d = divexact_poly(d, w) - c.derivative();
    }
    return out;
}

IPoly radical(const IPoly& f) {
    IPoly out = IPoly::constant(1);
    for (const auto& [part, mult] : squarefree_factorization(f)) out = out * part;
    return out;
}

bool is_separable(const IPoly& f) {
    if (f.degree() < 1) return false;
    return gcd_poly(f, f.derivative()).degree() == 0;
}

IPoly compose(const IPoly& f, const IPoly& g) {
    IPoly acc;
    for (int k = f.degree(); k >= 0; --k)
        acc = acc * g + IPoly::constant(f.coeff(k));
    return acc;
}

mpz_class eval_homogeneous(const IPoly& f, const mpz_class& a, const mpz_class& b) {
    if (f.is_zero()) return 0;
    mpz_class acc = 0;
    // sum f_k a^k b^(d-k), Horner in a with trailing b powers
    for (int k = f.degree(); k >= 0; --k) acc = acc * a + f.coeff(k) * pow_ui(b, f.degree() - k);
    return acc;
}

std::string to_string(const IPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const mpz_class& c = f.coeff(k);
        if (sgn(c) == 0) continue;
        mpz_class a = abs_z(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

namespace {

struct PolyParser {
    const std::string& text;
    std::string var_lower;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    mpz_class read_number() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected number in polynomial: " + text);
        return mpz_class(text.substr(start, pos - start));
    }

    bool try_var() {
        skip_ws();
        size_t start = pos;
        std::string name;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos]))));
            ++pos;
        }
        if (name.empty()) return false;
        if (name != var_lower) {
            pos = start;
            throw std::invalid_argument("unexpected variable '" + name + "' in: " + text);
        }
        return true;
    }

    // term := [number] ['*'] [var ['^' exp]]
    std::pair<mpz_class, int> read_term() {
        mpz_class coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = read_number();
            have_coef = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') ++pos;
        int exp = 0;
        skip_ws();
        if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            try_var();
            exp = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                exp = static_cast<int>(read_number().get_si());
            }
        } else if (!have_coef) {
            throw std::invalid_argument("empty term in polynomial: " + text);
        }
        return {coef, exp};
    }
};

}  // namespace

IPoly parse_ipoly(const std::string& text, const std::string& var) {
    PolyParser p{text, {}};
    for (char c : var)
        p.var_lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    std::vector<mpz_class> coeffs;
    bool any = false;
    while (!p.eof()) {
        int sign = 1;
        char c = p.peek();
        if (c == '+' || c == '-') {
            ++p.pos;
            sign = c == '-' ? -1 : 1;
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' in polynomial: " + text);
        }
        auto [coef, exp] = p.read_term();
        if (static_cast<size_t>(exp) >= coeffs.size()) coeffs.resize(exp + 1, mpz_class(0));
        coeffs[exp] += sign * coef;
        any = true;
    }
    if (!any) throw std::invalid_argument("empty polynomial text");
    return IPoly(std::move(coeffs));
}

int degree_t(const BiPoly& f) {
    int d = -1;
    for (const IPoly& c : f.coeffs()) d = std::max(d, c.degree());
    return d;
}

BiPoly bipoly_from_x_poly(const IPoly& f) {
    std::vector<IPoly> cs;
    cs.reserve(f.coeffs().size());
    for (const mpz_class& c : f.coeffs()) cs.push_back(IPoly::constant(c));
    return BiPoly(std::move(cs));
}

BiPoly substitute_t(const BiPoly& f, const IPoly& s) {
    std::vector<IPoly> cs;
    cs.reserve(f.coeffs().size());
    for (const IPoly& c : f.coeffs()) cs.push_back(compose(c, s));
    return BiPoly(std::move(cs));
}

std::string to_string(const BiPoly& f, const std::string& xvar, const std::string& tvar) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        const IPoly& c = f.coeff(k);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        bool is_one = c.degree() == 0 && c.coeff(0) == 1;
        if (k == 0) {
            os << (c.degree() > 0 ? "(" + to_string(c, tvar) + ")" : to_string(c, tvar));
            continue;
        }
        if (c.degree() > 0)
            os << '(' << to_string(c, tvar) << ")*";
        else if (!is_one)
            os << to_string(c, tvar) << '*';
        os << xvar;
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

Specialized specialize(const BiPoly& F, const mpz_class& a_in, const mpz_class& b_in) {
    if (sgn(b_in) == 0) throw std::invalid_argument("specialize: b = 0 (use the infinity chart)");
    if (sgn(a_in) == 0 && sgn(b_in) == 0)
        throw std::invalid_argument("specialize: (a, b) = (0, 0)");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a_in.get_mpz_t(), b_in.get_mpz_t());
    mpz_class a = a_in / g, b = b_in / g;
    if (sgn(b) < 0) {
        a = -a;
        b = -b;
    }
    const int D = std::max(degree_t(F), 0);
    std::vector<mpz_class> cs;
    cs.reserve(F.coeffs().size());
    for (const IPoly& cj : F.coeffs()) {
        // b^D * cj(a/b) = b^(D - deg cj) * eval_homogeneous(cj, a, b)
        if (cj.is_zero()) {
            cs.emplace_back(0);
        } else {
            cs.push_back(eval_homogeneous(cj, a, b) * pow_ui(b, D - cj.degree()));
        }
    }
    IPoly raw(std::move(cs));
    if (raw.is_zero())
        throw std::domain_error("specialize: fiber polynomial vanishes identically");
    Specialized out;
    out.content = content(raw);
    out.poly = primitive_part(raw);
    out.b_power = D;
    return out;
}

namespace {

// Lagrange interpolation with integer nodes; values per node are IPoly in a
// second variable. Returns, for every power of that second variable, the
// interpolated polynomial in the node variable. Throws if any coefficient
// fails to be an integer.
std::vector<IPoly> interpolate_columns(const std::vector<long>& nodes,
                                       const std::vector<IPoly>& values) {
    const size_t m = nodes.size();
    int sdeg = -1;
    for (const IPoly& v : values) sdeg = std::max(sdeg, v.degree());
    std::vector<IPoly> out;  // indexed by s-power; each poly in u
    for (int i = 0; i <= sdeg; ++i) {
        QPoly acc;
        for (size_t j = 0; j < m; ++j) {
            QPoly basis = QPoly::constant(mpq_class(values[j].coeff(i)));
            for (size_t k = 0; k < m; ++k) {
                if (k == j) continue;
                mpq_class den(nodes[j] - nodes[k]);
                QPoly lin(std::vector<mpq_class>{mpq_class(-nodes[k]), mpq_class(1)});
                basis = basis * lin.scaled(mpq_class(1) / den);
            }
            acc = acc + basis;
        }
        std::vector<mpz_class> ic;
        ic.reserve(acc.coeffs().size());
        for (const mpq_class& q : acc.coeffs()) {
            if (q.get_den() != 1)
                throw std::logic_error("interpolation produced a non-integral coefficient");
            ic.push_back(q.get_num());
        }
        out.emplace_back(std::move(ic));
    }
    return out;
}

IPoly resultant_with_quadratic_slack(const IPoly& fT, const IPoly& h) {
    // Res_T(fT(T), s - h(T)) as a polynomial in s.
    std::vector<IPoly> gcoeffs;  // coefficients of T^i, each an IPoly in s
    int m = h.degree();
    gcoeffs.reserve(m + 1);
    for (int i = 0; i <= m; ++i) {
        if (i == 0)
            gcoeffs.push_back(IPoly(std::vector<mpz_class>{-h.coeff(0), 1}));
        else
            gcoeffs.push_back(IPoly::constant(-h.coeff(i)));
    }
    BiPoly g(std::move(gcoeffs));
    return resultant(bipoly_from_x_poly(fT), g);
}

}  // namespace

BiPoly quadratic_resultant_cover(const IPoly& f, const IPoly& h, bool param_times_x) {
    if (f.degree() < 1 || h.degree() < 1)
        throw std::invalid_argument("quadratic cover needs deg f >= 1 and deg h >= 1");
    const int udeg = param_times_x ? f.degree() : h.degree();
    // Res_T(f - u [resp. f - uT], s - h(T)) has u-degree <= deg_T of the
    // second argument = deg h when u enters the first argument linearly; with
    // param_times_x the roles force the same bound through deg f. Use the safe
    // common bound max(deg f, deg h).
    const int bound = std::max(f.degree(), h.degree());
    (void)udeg;
    std::vector<long> nodes;
    std::vector<IPoly> values;
    for (long j = 0; j <= bound; ++j) {
        nodes.push_back(j);
        IPoly fT = f;
        {
            std::vector<mpz_class> cs(f.coeffs());
            if (param_times_x) {
                if (cs.size() < 2) cs.resize(2, mpz_class(0));
                cs[1] -= j;
            } else {
                cs[0] -= j;
            }
            fT = IPoly(std::move(cs));
        }
        values.push_back(resultant_with_quadratic_slack(fT, h));
    }
    std::vector<IPoly> per_s_power = interpolate_columns(nodes, values);  // in u
    // assemble main variable X with X^2 = s
    std::vector<IPoly> xcoeffs(2 * per_s_power.size() - 1, IPoly());
    for (size_t i = 0; i < per_s_power.size(); ++i) xcoeffs[2 * i] = per_s_power[i];
    BiPoly F{std::move(xcoeffs)};
    // verify at a spare node
    {
        long extra = bound + 1;
        std::vector<mpz_class> cs(f.coeffs());
        if (param_times_x) {
            if (cs.size() < 2) cs.resize(2, mpz_class(0));
            cs[1] -= extra;
        } else {
            cs[0] -= extra;
        }
        IPoly expect = resultant_with_quadratic_slack(IPoly(std::move(cs)), h);
        Specialized got = specialize(F, extra);
        IPoly expect_x = IPoly([&] {
            std::vector<mpz_class> xs(2 * (expect.degree() + 1) - 1, mpz_class(0));
            for (int i = 0; i <= expect.degree(); ++i) xs[2 * i] = expect.coeff(i);
            return xs;
        }());
        if (normalized_primitive(expect_x) != normalized_primitive(got.poly))
            throw std::logic_error("quadratic cover interpolation check failed");
    }
    return F;
}

IPoly monicize(const IPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("monicize needs degree >= 1");
    if (f.lc() == 1) return f;
    const mpz_class& l = f.lc();
    std::vector<mpz_class> cs(f.coeffs());
    for (int k = 0; k < f.degree(); ++k) cs[k] *= pow_ui(l, f.degree() - 1 - k);
    cs[f.degree()] = 1;
    return IPoly(std::move(cs));
}

}  // namespace kfd
