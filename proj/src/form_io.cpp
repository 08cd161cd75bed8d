#include "bhc/form_io.hpp"

#include "bhc/errors.hpp"

#include <fstream>

namespace bhc {

namespace {

struct Entry {
    std::vector<std::size_t> index;
    Complex value;
};

std::vector<Entry> read_entries(const Json& doc, std::size_t width)
{
    if (!doc.contains("entries") || !doc["entries"].is_array())
        throw ParseError("form document needs an 'entries' array");
    std::vector<Entry> out;
    for (const Json& e : doc["entries"]) {
        if (!e.is_array() || (e.size() != width + 1 && e.size() != width + 2))
            throw ParseError("each entry needs " + std::to_string(width) + " indices and a value");
        Entry entry;
        for (std::size_t k = 0; k < width; ++k) {
            if (!e[k].is_number_unsigned())
                throw ParseError("entry indices must be non-negative integers");
            entry.index.push_back(e[k].get<std::size_t>());
        }
        if (!e[width].is_number())
            throw ParseError("entry value must be a number");
        const double re = e[width].get<double>();
        double im = 0.0;
        if (e.size() == width + 2) {
            if (!e[width + 1].is_number())
                throw ParseError("entry imaginary part must be a number");
            im = e[width + 1].get<double>();
        }
        entry.value = Complex(re, im);
        out.push_back(std::move(entry));
    }
    return out;
}

bool any_complex(const std::vector<Entry>& entries)
{
    for (const Entry& e : entries) {
        if (e.value.imag() != 0.0)
            return true;
    }
    return false;
}

unsigned read_positive(const Json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_number_unsigned() || doc[key].get<unsigned>() == 0)
        throw ParseError(std::string("form document needs a positive integer '") + key + "'");
    return doc[key].get<unsigned>();
}

} // namespace

FormInput parse_form(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
        throw ParseError("form document needs a 'kind' string");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "multilinear") {
        if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty())
            throw ParseError("multilinear form needs a non-empty 'dims' array");
        std::vector<std::size_t> dims;
        for (const Json& d : doc["dims"]) {
            if (!d.is_number_unsigned())
                throw ParseError("dims must be positive integers");
            dims.push_back(d.get<std::size_t>());
        }
        if (doc.contains("m") && (!doc["m"].is_number_unsigned() || doc["m"].get<std::size_t>() != dims.size()))
            throw ParseError("'m' must equal the length of 'dims'");
        const auto entries = read_entries(doc, dims.size());
        MultilinearForm form(dims, any_complex(entries) ? ScalarField::Complex : ScalarField::Real);
        for (const Entry& e : entries)
            form.set(e.index, e.value);
        return form;
    }
    if (kind == "polynomial") {
        const unsigned m = read_positive(doc, "m");
        const unsigned n = read_positive(doc, "n");
        const auto entries = read_entries(doc, n);
        HomogeneousPolynomial poly(m, n, any_complex(entries) ? ScalarField::Complex : ScalarField::Real);
        for (const Entry& e : entries)
            poly.set(MultiIndex(e.index.begin(), e.index.end()), e.value);
        return poly;
    }
    throw ParseError("unknown form kind '" + kind + "'");
}

FormInput load_form(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw IoError("cannot open '" + path + "'");
    Json doc;
    try {
        doc = Json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
    return parse_form(doc);
}

Json to_json(const MultilinearForm& form)
{
    Json entries = Json::array();
    std::vector<std::size_t> idx(form.arity(), 0);
    const auto coeffs = form.coefficients();
    for (std::size_t off = 0; off < coeffs.size(); ++off) {
        if (coeffs[off] != Complex{}) {
            Json e(idx);
            e.push_back(coeffs[off].real());
            if (coeffs[off].imag() != 0.0)
                e.push_back(coeffs[off].imag());
            entries.push_back(std::move(e));
        }
        for (std::size_t k = idx.size(); k-- > 0;) {
            if (++idx[k] < form.dims()[k])
                break;
            idx[k] = 0;
        }
    }
    return {{"kind", "multilinear"}, {"m", form.arity()}, {"dims", form.dims()}, {"entries", entries}};
}

Json to_json(const HomogeneousPolynomial& poly)
{
    Json entries = Json::array();
    for (const auto& [alpha, c] : poly.terms()) {
        Json e(alpha);
        e.push_back(c.real());
        if (c.imag() != 0.0)
            e.push_back(c.imag());
        entries.push_back(std::move(e));
    }
    return {{"kind", "polynomial"}, {"m", poly.degree()}, {"n", poly.variables()}, {"entries", entries}};
}

} // namespace bhc
