#include "ribbonroots/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ribbonroots/errors.hpp"

namespace ribbonroots {

json to_json(const Partition& p) { return p.parts(); }

json to_json(const SkewShape& s) { return {{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}}; }

json to_json(const DescentSet& I) { return std::vector<int>(I.elements().begin(), I.elements().end()); }

json to_json(const Cell& c) { return {c.row, c.col}; }

json to_json(const NewtonForm& nf) {
    json coeffs = json::array();
    for (const BigInt& c : nf.coeffs) coeffs.push_back(c.get_str());
    return {{"alphas", nf.alphas}, {"coeffs", coeffs}};
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw DomainError("partition parts must be integers");
        parts.push_back(v.get<int>());
    }
    return Partition(std::move(parts));
}

SkewShape shape_from_json(const json& j) {
    if (!j.is_object() || !j.contains("outer")) throw DomainError(R"(shape must look like {"outer":[...],"inner":[...]})");
    return SkewShape(partition_from_json(j.at("outer")),
                     j.contains("inner") ? partition_from_json(j.at("inner")) : Partition());
}

DescentSet descent_set_from_json(const json& j) {
    if (!j.is_array()) throw DomainError("descent set must be a JSON array");
    std::set<int> s;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw DomainError("descent set elements must be integers");
        s.insert(v.get<int>());
    }
    return DescentSet(std::move(s));
}

NewtonForm newton_form_from_json(const json& j) {
    NewtonForm nf;
    try {
        nf.alphas = j.at("alphas").get<std::vector<int>>();
        for (const auto& c : j.at("coeffs")) nf.coeffs.emplace_back(c.get<std::string>());
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed Newton form: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw DomainError("Newton coefficients must be decimal integers");
    }
    if (nf.coeffs.size() != nf.alphas.size() + 1) throw DomainError("Newton form needs s+1 coefficients");
    return nf;
}

json descent_report(const DescentSet& I) {
    json out;
    out["set"] = to_json(I);
    if (I.empty()) {
        out["alphas"] = json::array();
        out["coeffs"] = {"1"};
        out["trivial_num"] = {"1"};
        out["trivial_den"] = "1";
        out["monomial"] = {"1"};
        return out;
    }
    const SkewShape shape = ribbon_from_descent_set(I);
    const NewtonForm nf = excitation_factor(shape);
    const json nfj = to_json(nf);
    out["alphas"] = nfj["alphas"];
    out["coeffs"] = nfj["coeffs"];
    const RationalPolynomial T = trivial_part(shape, I);
    const BigInt den = common_denominator(T);
    json num = json::array();
    for (const BigInt& c : integer_coefficients(T)) num.push_back(c.get_str());
    out["trivial_num"] = num;
    out["trivial_den"] = den.get_str();
    json mono = json::array();
    const RationalPolynomial d = descent_polynomial(I);
    for (const Rational& c : d.coefficients()) mono.push_back(c.get_str());
    out["monomial"] = mono;
    return out;
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    if (s.empty()) throw DomainError("expected an integer");
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw DomainError("expected an integer, got '" + s + "'");
    }
    if (pos != s.size()) throw DomainError("expected an integer, got '" + s + "'");
    return v;
}

}  // namespace

DescentSet parse_descent_set(std::string_view text) {
    std::string trimmed;
    for (char ch : text)
        if (ch != ' ') trimmed.push_back(ch);
    if (trimmed.empty() || trimmed == "{}" || trimmed == "[]") return {};
    if (trimmed.front() == '[') return descent_set_from_json(json::parse(trimmed, nullptr, false));
    std::set<int> s;
    for (const std::string& part : split(trimmed, ',')) {
        const int v = parse_int(part);
        if (v < 1) throw DomainError("descent set elements must be positive");
        s.insert(v);
    }
    return DescentSet(std::move(s));
}

Partition parse_partition(std::string_view text) {
    std::string trimmed(text);
    if (!trimmed.empty() && trimmed.front() == '[') {
        json j = json::parse(trimmed, nullptr, false);
        if (j.is_discarded()) throw DomainError("malformed partition JSON");
        return partition_from_json(j);
    }
    std::vector<int> parts;
    if (!trimmed.empty())
        for (const std::string& part : split(trimmed, ',')) parts.push_back(parse_int(part));
    return Partition(std::move(parts));
}

std::vector<Cell> parse_cells(std::string_view text) {
    std::vector<Cell> out;
    if (text.empty()) return out;
    for (const std::string& item : split(text, ',')) {
        const auto rc = split(item, ':');
        if (rc.size() != 2) throw DomainError("cells are written row:col, got '" + item + "'");
        Cell c{parse_int(rc[0]), parse_int(rc[1])};
        if (c.row < 1 || c.col < 1) throw DomainError("cells are 1-based");
        out.push_back(c);
    }
    return out;
}

std::string format_cells(const std::vector<Cell>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + to_string(cells[i]);
    return out;
}

std::vector<PlotRoot> plot_roots(const RootBoundsVerdict& verdict, int m) {
    std::vector<PlotRoot> out;
    for (std::size_t i = 0; i < verdict.report.roots.size(); ++i) {
        const auto z = verdict.report.roots[i];
        const double slack = kBoundSlack + verdict.report.error_bounds[i];
        out.push_back({z, std::abs(z) <= m + slack, z.real() >= -1.0 - slack});
    }
    return out;
}

namespace {

std::string fixed(double v, int digits = 10) {
    if (v == 0) v = 0;  // no "-0.000"
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    std::string s = buf;
    if (s.find_first_not_of("-0.") == std::string::npos) s = s.substr(s[0] == '-' ? 1 : 0);
    return s;
}

}  // namespace

std::string roots_csv(const std::vector<PlotRoot>& roots, int m) {
    std::ostringstream os;
    os << "re,im,modulus,shifted_modulus,modulus_ok,real_part_ok\n";
    for (const PlotRoot& r : roots) {
        os << fixed(r.z.real()) << ',' << fixed(r.z.imag()) << ',' << fixed(std::abs(r.z)) << ','
           << fixed(std::abs(r.z - std::complex<double>(m - 1, 0))) << ',' << (r.modulus_ok ? "true" : "false")
           << ',' << (r.real_part_ok ? "true" : "false") << '\n';
    }
    return os.str();
}

std::string roots_svg(const std::vector<PlotRoot>& roots, int m) {
    const double unit = 20.0;
    const int xmin = -5, xmax = m + 5, ymax = m + 1;
    const double width = (xmax - xmin) * unit, height = 2 * ymax * unit;
    auto X = [&](double re) { return fixed((re - xmin) * unit, 3); };
    auto Y = [&](double im) { return fixed((ymax - im) * unit, 3); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width, 0) << "\" height=\"" << fixed(height, 0)
       << "\" viewBox=\"0 0 " << fixed(width, 0) << ' ' << fixed(height, 0) << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << fixed(width, 0) << "\" height=\"" << fixed(height, 0)
       << "\" fill=\"white\"/>\n";
    // Admissible region: the disk |z| <= m with the half-plane Re z < -1 cut away.
    os << "<clipPath id=\"right-of-minus-one\"><rect x=\"" << X(-1) << "\" y=\"0\" width=\""
       << fixed((xmax + 1) * unit, 3) << "\" height=\"" << fixed(height, 0) << "\"/></clipPath>\n";
    os << "<circle cx=\"" << X(0) << "\" cy=\"" << Y(0) << "\" r=\"" << fixed(m * unit, 3)
       << "\" fill=\"#7fdfff\" clip-path=\"url(#right-of-minus-one)\"/>\n";
    os << "<g stroke=\"#999999\" stroke-width=\"0.5\">\n";
    for (int x = xmin; x <= xmax; ++x)
        os << "<line x1=\"" << X(x) << "\" y1=\"0\" x2=\"" << X(x) << "\" y2=\"" << fixed(height, 0) << "\"/>\n";
    for (int y = -ymax; y <= ymax; ++y)
        os << "<line x1=\"0\" y1=\"" << Y(y) << "\" x2=\"" << fixed(width, 0) << "\" y2=\"" << Y(y) << "\"/>\n";
    os << "</g>\n";
    os << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
    os << "<line x1=\"0\" y1=\"" << Y(0) << "\" x2=\"" << fixed(width, 0) << "\" y2=\"" << Y(0) << "\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"0\" x2=\"" << X(0) << "\" y2=\"" << fixed(height, 0) << "\"/>\n";
    os << "</g>\n";
    for (const PlotRoot& r : roots) {
        const char* colour = (r.modulus_ok && r.real_part_ok) ? "orange" : "red";
        os << "<circle cx=\"" << X(r.z.real()) << "\" cy=\"" << Y(r.z.imag()) << "\" r=\"" << fixed(0.2 * unit, 3)
           << "\" fill=\"" << colour << "\"/>\n";
    }
    os << "<text x=\"" << fixed(width / 2, 3) << "\" y=\"" << fixed(height - 4, 3)
       << "\" font-size=\"12\" text-anchor=\"middle\">real part</text>\n";
    os << "<text x=\"12\" y=\"" << fixed(height / 2, 3)
       << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 12 " << fixed(height / 2, 3)
       << ")\">imaginary part</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace ribbonroots
