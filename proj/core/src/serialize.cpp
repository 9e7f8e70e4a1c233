#include "fanocalc/serialize.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace fano::io {

json to_json(const IntWeight& w) {
    json a = json::array();
    for (std::size_t i = 0; i < w.length(); ++i) a.push_back(w[i]);
    return a;
}

json to_json(const Partition& p) {
    json a = json::array();
    for (auto v : p.parts()) a.push_back(v);
    return a;
}

IntWeight weight_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("weight: expected a nonempty array");
    std::vector<std::int64_t> e;
    for (const auto& v : j) e.push_back(v.get<std::int64_t>());
    return IntWeight(std::move(e));
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition: expected an array");
    std::vector<std::int64_t> e;
    for (const auto& v : j) {
        const auto x = v.get<std::int64_t>();
        if (x < 0) throw std::invalid_argument("partition: parts must be non-negative");
        e.push_back(x);
    }
    return Partition(std::move(e));
}

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

json to_json(const forms::AltForm& f) {
    json terms = json::array();
    for (const auto& [idx, c] : f.coeff) {
        json indices = json::array();
        for (int i : idx) indices.push_back(i + 1);  // 1-based on the wire
        terms.push_back(json{{"indices", indices}, {"coeff", rational_to_string(c)}});
    }
    return json{{"p", f.p}, {"n", f.n}, {"terms", terms}};
}

forms::AltForm alt_form_from_json(const json& j) {
    forms::AltForm f;
    f.p = j.at("p").get<int>();
    f.n = j.at("n").get<int>();
    for (const auto& t : j.at("terms")) {
        std::vector<int> idx;
        for (const auto& v : t.at("indices")) idx.push_back(v.get<int>() - 1);
        for (std::size_t i = 0; i + 1 < idx.size(); ++i)
            if (idx[i] >= idx[i + 1])
                throw std::invalid_argument("alt form: indices must be strictly increasing");
        f.add(std::move(idx), rational_from_string(t.at("coeff").get<std::string>()));
    }
    return f;
}

json to_json(const FormQ& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.coeff) {
        json exps = json::array();
        for (auto e : m) exps.push_back(static_cast<int>(e));
        terms.push_back(json{{"exponents", exps}, {"coeff", rational_to_string(c)}});
    }
    return json{{"n_vars", f.n_vars}, {"degree", f.degree}, {"terms", terms}};
}

FormQ form_q_from_json(const json& j) {
    FormQ f;
    f.n_vars = j.at("n_vars").get<int>();
    f.degree = j.at("degree").get<int>();
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& v : t.at("exponents")) m.push_back(static_cast<std::uint8_t>(v.get<int>()));
        if (static_cast<int>(m.size()) != f.n_vars)
            throw std::invalid_argument("form: exponent vector length mismatch");
        int deg = 0;
        for (auto e : m) deg += e;
        if (deg != f.degree) throw std::invalid_argument("form: monomial degree mismatch");
        f.add(m, rational_from_string(t.at("coeff").get<std::string>()));
    }
    return f;
}

std::string digest(const json& j) {
    const std::string s = j.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace fano::io
