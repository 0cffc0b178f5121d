#include "centersvar/mpoly.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "centersvar/error.hpp"

namespace centersvar {

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
    MPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

int MPoly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0));
    return best;
}

Rational MPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        acc += term;
    }
    return acc;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            MPoly::Exponents e(a.nvars_);
            for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MPoly operator*(const Rational& s, const MPoly& a) {
    MPoly out(a.nvars_);
    for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
    return out;
}

std::string MPoly::to_string(const std::string& prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent vectors first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (sgn(c) < 0 ? "-" : "+");
        else if (sgn(c) < 0) os << "-";
        first = false;
        const Rational mag = abs(c);
        const bool is_const = std::accumulate(e.begin(), e.end(), 0) == 0;
        if (mag != 1 || is_const) os << format_rational(mag);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << prefix << i;
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

MPoly parse_mpoly(const std::string& text, std::size_t nvars, char prefix) {
    MPoly out(nvars);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        }
        Rational coeff = 1;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos > start) coeff = parse_rational(text.substr(start, pos - start));
        MPoly::Exponents e(nvars, 0);
        while (pos < text.size() && text[pos] == prefix) {
            ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail(ErrorCode::InvalidInput, "bad variable in polynomial text");
            const std::size_t var = static_cast<std::size_t>(text[pos] - '0');
            ++pos;
            if (var >= nvars) fail(ErrorCode::InvalidInput, "variable index out of range");
            int power = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t ps = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                power = std::stoi(text.substr(ps, pos - ps));
            }
            e[var] += power;
        }
        if (pos == start) fail(ErrorCode::InvalidInput, "unexpected character in polynomial text");
        out.add_term(e, sign * coeff);
        skip_ws();
    }
    return out;
}

MPoly det3(const std::vector<std::vector<MPoly>>& r) {
    return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
           r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

MPoly det4(const std::vector<std::vector<MPoly>>& r) {
    const std::size_t nv = r[0][0].nvars();
    MPoly out(nv);
    for (std::size_t j = 0; j < 4; ++j) {
        std::vector<std::vector<MPoly>> minor;
        for (std::size_t i = 1; i < 4; ++i) {
            std::vector<MPoly> row;
            for (std::size_t k = 0; k < 4; ++k)
                if (k != j) row.push_back(r[i][k]);
            minor.push_back(row);
        }
        MPoly term = r[0][j] * det3(minor);
        out = (j % 2 == 0) ? out + term : out - term;
    }
    return out;
}

}  // namespace centersvar
