#include "infcomp/io.hpp"

#include "infcomp/error.hpp"

#include <cmath>
#include <string>

namespace infcomp::io {

namespace {

double number(const json &value, const char *field) {
    if (!value.is_number()) {
        throw ValidationError(std::string("field '") + field + "' must be a number");
    }
    const double x = value.get<double>();
    if (!std::isfinite(x)) {
        throw ValidationError(std::string("field '") + field + "' must be finite");
    }
    return x;
}

const json &field(const json &object, const char *name) {
    const auto it = object.find(name);
    if (it == object.end()) {
        throw ValidationError(std::string("family description is missing '") + name + "'");
    }
    return *it;
}

unsigned exponent(const json &object) {
    const json &r0 = field(object, "r0");
    if (!r0.is_number_integer() || r0.get<long long>() < 2 || r0.get<long long>() > 64) {
        throw ValidationError("'r0' must be an integer in [2, 64]");
    }
    return static_cast<unsigned>(r0.get<long long>());
}

} // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json &value) {
    if (!value.is_array() || value.size() != 2) {
        throw ValidationError("complex numbers must be [re, im] pairs");
    }
    return {number(value[0], "re"), number(value[1], "im")};
}

FactorFamily family_from_json(const json &value) {
    if (!value.is_object()) {
        throw ValidationError("family description must be a JSON object");
    }
    const json &kind = field(value, "kind");
    if (!kind.is_string()) {
        throw ValidationError("'kind' must be a string");
    }
    const std::string name = kind.get<std::string>();
    if (name == "geometric") {
        return FactorFamily::geometric(complex_from_json(field(value, "s")), exponent(value));
    }
    if (name == "power_law") {
        return FactorFamily::power_law(number(field(value, "p"), "p"), exponent(value));
    }
    if (name == "explicit") {
        const json &factors = field(value, "factors");
        if (!factors.is_array()) {
            throw ValidationError("'factors' must be an array of coefficient lists");
        }
        std::vector<TruncatedSeries> list;
        for (const json &f : factors) {
            if (!f.is_array()) {
                throw ValidationError("each factor must be an array of [re, im] coefficients");
            }
            std::vector<Complex> coeffs;
            for (const json &c : f) {
                coeffs.push_back(complex_from_json(c));
            }
            list.emplace_back(std::move(coeffs));
        }
        return FactorFamily::explicit_list(std::move(list));
    }
    throw ValidationError("unknown family kind '" + name + "'");
}

json family_to_json(const FactorFamily &family) {
    switch (family.kind()) {
    case FamilyKind::geometric: {
        const auto &g = std::get<GeometricParams>(family.params());
        return {{"kind", "geometric"}, {"s", to_json(g.s)}, {"r0", g.exponent}};
    }
    case FamilyKind::power_law: {
        const auto &pl = std::get<PowerLawParams>(family.params());
        return {{"kind", "power_law"}, {"p", pl.p}, {"r0", pl.exponent}};
    }
    case FamilyKind::explicit_list: {
        json factors = json::array();
        for (const auto &f : std::get<ExplicitParams>(family.params()).factors) {
            factors.push_back(series_to_json(f));
        }
        return {{"kind", "explicit"}, {"factors", factors}};
    }
    }
    return {};
}

json series_to_json(const TruncatedSeries &f) {
    json out = json::array();
    for (const Complex &c : f.coeffs()) {
        out.push_back(to_json(c));
    }
    return out;
}

} // namespace infcomp::io
