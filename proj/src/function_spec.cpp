#include "nurowski/function_spec.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace nurowski {

namespace {

bool is_nonneg_int(double a) { return a >= 0.0 && a == std::floor(a); }

// Jet of c * (x - s)^a by the falling-factorial formula.
Jet1 power_jet(double c, double a, double s, double x, int order) {
    double t = x - s;
    if (t == 0.0 && !is_nonneg_int(a))
        throw DomainError("power-law spec evaluated at its singular point");
    Jet1 r(x, order);
    double fall = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) fall *= (a - (k - 1));
        double e = a - k;
        double base = (t == 0.0) ? (e == 0.0 ? 1.0 : 0.0) : std::pow(t, e);
        r[k] = c * fall * base;
    }
    return r;
}

std::size_t grid_index(const std::vector<double>& grid, double x) {
    double scale = 1.0 + std::abs(x);
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (std::abs(grid[i] - x) <= 1e-12 * scale) return i;
    throw DomainError("tabulated spec evaluated off the integrator grid");
}

Jet1 exp_integral_jet(const ExpIntegralSpec& sp, double x, int order) {
    std::size_t i = grid_index(sp.grid, x);
    const Jet1& p = sp.p_jets[i];
    int avail = p.order() + 1;
    if (order > avail) throw DomainError("requested jet order exceeds tabulated data");
    Jet1 ip(x, order);  // jet of \int P dx
    ip[0] = sp.integral[i];
    for (int k = 1; k <= order; ++k) ip[k] = p[k - 1];
    return exp(sp.factor * ip);
}

}  // namespace

Jet1 jet_eval(const FunctionSpec& spec, double x, int order) {
    if (order > kMaxJetOrder) throw DomainError("jet order exceeds maximum");
    return std::visit(
        [&](const auto& sp) -> Jet1 {
            using T = std::decay_t<decltype(sp)>;
            if constexpr (std::is_same_v<T, ConstantSpec>) {
                return Jet1::constant(x, sp.value, order);
            } else if constexpr (std::is_same_v<T, PowerLawSpec>) {
                return power_jet(sp.coefficient, sp.exponent, sp.shift, x, order);
            } else if constexpr (std::is_same_v<T, PolynomialSpec>) {
                Jet1 r(x, order);
                for (int k = 0; k <= order; ++k) {
                    double acc = 0.0;
                    for (std::size_t i = static_cast<std::size_t>(k); i < sp.coefficients.size(); ++i) {
                        double fall = 1.0;
                        for (int j = 0; j < k; ++j) fall *= static_cast<double>(i) - j;
                        acc += sp.coefficients[i] * fall *
                               std::pow(x, static_cast<double>(i) - k);
                    }
                    r[k] = acc;
                }
                return r;
            } else if constexpr (std::is_same_v<T, TabulatedSpec>) {
                std::size_t i = grid_index(sp.grid, x);
                if (order > sp.jets[i].order())
                    throw DomainError("requested jet order exceeds tabulated data");
                return truncate(sp.jets[i], order);
            } else {
                return exp_integral_jet(sp, x, order);
            }
        },
        spec);
}

namespace {

// Zero-constant antiderivatives (H', H) of the closed-form kinds.
std::pair<double, double> antiderivatives(const FunctionSpec& spec, double x) {
    return std::visit(
        [&](const auto& sp) -> std::pair<double, double> {
            using T = std::decay_t<decltype(sp)>;
            if constexpr (std::is_same_v<T, ConstantSpec>) {
                return {sp.value * x, sp.value * x * x / 2.0};
            } else if constexpr (std::is_same_v<T, PowerLawSpec>) {
                double t = x - sp.shift, c = sp.coefficient, a = sp.exponent;
                if (a == -1.0) {
                    if (t <= 0.0) throw DomainError("log antiderivative needs x > shift");
                    return {c * std::log(t), c * (t * std::log(t) - t)};
                }
                if (a == -2.0) {
                    if (t <= 0.0) throw DomainError("log antiderivative needs x > shift");
                    return {-c / t, -c * std::log(t)};
                }
                double d1 = c * std::pow(t, a + 1.0) / (a + 1.0);
                double d0 = c * std::pow(t, a + 2.0) / ((a + 1.0) * (a + 2.0));
                return {d1, d0};
            } else if constexpr (std::is_same_v<T, PolynomialSpec>) {
                double d1 = 0.0, d0 = 0.0, xp = x;
                for (std::size_t i = 0; i < sp.coefficients.size(); ++i) {
                    double n = static_cast<double>(i);
                    d1 += sp.coefficients[i] * xp / (n + 1.0);
                    d0 += sp.coefficients[i] * xp * x / ((n + 1.0) * (n + 2.0));
                    xp *= x;
                }
                return {d1, d0};
            } else {
                return {0.0, 0.0};  // trajectory-backed kinds carry no antiderivative
            }
        },
        spec);
}

}  // namespace

Jet1 family_hjet(const FunctionSpec& spec, double x, int order) {
    if (order < 2) throw DomainError("family jet needs order >= 2");
    Jet1 w = jet_eval(spec, x, order - 2);
    auto [d1, d0] = antiderivatives(spec, x);
    Jet1 r(x, order);
    r[0] = d0;
    r[1] = d1;
    for (int k = 2; k <= order; ++k) r[k] = w[k - 2];
    return r;
}

namespace {

double parse_num(const std::string& s) {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw DomainError("bad number in function spec: " + s);
    return v;
}

}  // namespace

FunctionSpec parse_function_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw DomainError("function spec missing ':' — " + text);
    std::string kind = text.substr(0, colon);
    std::string rest = text.substr(colon + 1);
    if (kind == "const") {
        return ConstantSpec{parse_num(rest)};
    }
    if (kind == "poly") {
        PolynomialSpec sp;
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) sp.coefficients.push_back(parse_num(tok));
        if (sp.coefficients.empty()) throw DomainError("poly spec needs coefficients");
        return sp;
    }
    if (kind == "powerlaw") {
        PowerLawSpec sp;
        bool have_a = false;
        std::stringstream ss(rest);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto eq = tok.find('=');
            if (eq == std::string::npos) throw DomainError("powerlaw spec expects key=value: " + tok);
            std::string key = tok.substr(0, eq);
            double val = parse_num(tok.substr(eq + 1));
            if (key == "a") {
                sp.exponent = val;
                have_a = true;
            } else if (key == "c") {
                sp.coefficient = val;
            } else if (key == "shift") {
                sp.shift = val;
            } else {
                throw DomainError("unknown powerlaw key: " + key);
            }
        }
        if (!have_a) throw DomainError("powerlaw spec needs a=<exp>");
        return sp;
    }
    throw DomainError("unknown function spec kind: " + kind);
}

std::string format_function_spec(const FunctionSpec& spec) {
    std::ostringstream os;
    std::visit(
        [&](const auto& sp) {
            using T = std::decay_t<decltype(sp)>;
            if constexpr (std::is_same_v<T, ConstantSpec>) {
                os << "const:" << sp.value;
            } else if constexpr (std::is_same_v<T, PowerLawSpec>) {
                os << "powerlaw:a=" << sp.exponent << ",c=" << sp.coefficient;
                if (sp.shift != 0.0) os << ",shift=" << sp.shift;
            } else if constexpr (std::is_same_v<T, PolynomialSpec>) {
                os << "poly:";
                for (std::size_t i = 0; i < sp.coefficients.size(); ++i)
                    os << (i ? "," : "") << sp.coefficients[i];
            } else if constexpr (std::is_same_v<T, TabulatedSpec>) {
                os << "tabulated[" << sp.grid.size() << " nodes]";
            } else {
                os << "exp-integral[" << sp.grid.size() << " nodes]";
            }
        },
        spec);
    return os.str();
}

}  // namespace nurowski
