#include "pseudocohom/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pseudocohom {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Expression strings

struct ExprError {
    std::size_t column;
    std::string message;
};

struct Token {
    enum Kind { number, ident, symbol, end } kind = end;
    std::string text;
    std::size_t column = 0;
};

std::vector<Token> tokenize(const std::string& s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    auto ident_char = [](unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; };
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        Token t;
        t.column = i + 1;
        if (std::isdigit(c)) {
            t.kind = Token::number;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                t.text.push_back(s[i++]);
        } else if (std::isalpha(c) || c == '_' || c >= 0x80) {
            t.kind = Token::ident;
            while (i < s.size() && ident_char(static_cast<unsigned char>(s[i])))
                t.text.push_back(s[i++]);
        } else if (std::string("+-*/^()|").find(static_cast<char>(c)) != std::string::npos) {
            t.kind = Token::symbol;
            t.text = std::string(1, static_cast<char>(c));
            ++i;
        } else {
            throw ExprError{i + 1, std::string("unexpected character '") + static_cast<char>(c) + "'"};
        }
        out.push_back(std::move(t));
    }
    out.push_back(Token{Token::end, "", s.size() + 1});
    return out;
}

struct Sum;

struct Factor {
    enum Kind { number, ident, group } kind = number;
    std::string text; // number "p" or "p/q"; identifier name
    int power = 1;
    std::vector<Sum> legs; // group: one sum per '|'-separated slot
    std::size_t column = 0;
};

struct Term {
    bool negative = false;
    std::vector<Factor> factors;
    std::size_t column = 0;
};

struct Sum {
    std::vector<Term> terms;
};

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : toks_(tokenize(s)) {}

    Sum parse()
    {
        Sum s = sum();
        if (peek().kind != Token::end)
            throw ExprError{peek().column, "unexpected '" + peek().text + "'"};
        return s;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    bool at_symbol(const char* s) const { return peek().kind == Token::symbol && peek().text == s; }
    Token take() { return toks_[pos_++]; }

    Sum sum()
    {
        Sum out;
        bool negative = false;
        if (at_symbol("+") || at_symbol("-"))
            negative = take().text == "-";
        while (true) {
            Term t = term();
            t.negative = negative;
            out.terms.push_back(std::move(t));
            if (!(at_symbol("+") || at_symbol("-")))
                return out;
            negative = take().text == "-";
        }
    }

    bool starts_factor() const
    {
        return peek().kind == Token::number || peek().kind == Token::ident || at_symbol("(");
    }

    Term term()
    {
        Term t;
        t.column = peek().column;
        if (!starts_factor())
            throw ExprError{peek().column, peek().kind == Token::end ? "unexpected end of expression"
                                                                     : "unexpected '" + peek().text + "'"};
        t.factors.push_back(factor());
        while (true) {
            if (at_symbol("*")) {
                take();
                if (!starts_factor())
                    throw ExprError{peek().column, "expected a factor after '*'"};
                t.factors.push_back(factor());
            } else if (starts_factor()) {
                t.factors.push_back(factor());
            } else {
                return t;
            }
        }
    }

    int exponent()
    {
        if (!at_symbol("^"))
            return 1;
        take();
        if (peek().kind != Token::number)
            throw ExprError{peek().column, "expected a natural number after '^'"};
        const Token n = take();
        if (n.text.size() > 6)
            throw ExprError{n.column, "exponent too large"};
        return std::stoi(n.text);
    }

    Factor factor()
    {
        Factor f;
        f.column = peek().column;
        if (peek().kind == Token::number) {
            f.kind = Factor::number;
            f.text = take().text;
            if (at_symbol("/")) {
                take();
                if (peek().kind != Token::number)
                    throw ExprError{peek().column, "expected a denominator after '/'"};
                f.text += "/" + take().text;
            }
            if (at_symbol("^"))
                throw ExprError{peek().column, "powers of numbers are not supported"};
            return f;
        }
        if (peek().kind == Token::ident) {
            f.kind = Factor::ident;
            f.text = take().text;
            f.power = exponent();
            return f;
        }
        take(); // '('
        f.kind = Factor::group;
        f.legs.push_back(sum());
        while (at_symbol("|")) {
            take();
            f.legs.push_back(sum());
        }
        if (!at_symbol(")"))
            throw ExprError{peek().column, "expected ')'"};
        take();
        f.power = exponent();
        if (f.power != 1 && f.legs.size() != 1)
            throw ExprError{f.column, "powers of a tensor are not supported"};
        return f;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

Scalar scalar_of(const Factor& f, Field field)
{
    try {
        return field.parse_scalar(f.text);
    } catch (const Error& e) {
        throw ExprError{f.column, e.what()};
    }
}

HopfElement power(const HopfElement& a, int n)
{
    HopfElement out = HopfElement::one(a.hopf());
    for (int i = 0; i < n; ++i)
        out = out * a;
    return out;
}

HopfElement hopf_of(const Sum& s, const HopfAlgebra& h);

HopfElement hopf_factor(const Factor& f, const HopfAlgebra& h)
{
    switch (f.kind) {
    case Factor::number:
        return HopfElement::scalar(h, scalar_of(f, h.field()));
    case Factor::ident: {
        Monomial m;
        if (!h.lookup(f.text, m))
            throw ExprError{f.column, "unknown Hopf generator '" + f.text + "'"};
        return power(HopfElement(h, m, h.field().one()), f.power);
    }
    case Factor::group:
        if (f.legs.size() != 1)
            throw ExprError{f.column, "expected a Hopf element, found a tensor"};
        return power(hopf_of(f.legs[0], h), f.power);
    }
    return HopfElement(h);
}

HopfElement hopf_of(const Sum& s, const HopfAlgebra& h)
{
    HopfElement out(h);
    for (const Term& t : s.terms) {
        HopfElement acc = HopfElement::one(h);
        for (const Factor& f : t.factors)
            acc = acc * hopf_factor(f, h);
        if (t.negative)
            out -= acc;
        else
            out += acc;
    }
    return out;
}

bool is_zero_literal(const Sum& s)
{
    return s.terms.size() == 1 && !s.terms[0].negative && s.terms[0].factors.size() == 1 &&
           s.terms[0].factors[0].kind == Factor::number && s.terms[0].factors[0].text == "0";
}

std::int32_t label_of(const Term& t, const FreeModule& target)
{
    const Factor& last = t.factors.back();
    if (last.kind != Factor::ident || last.power != 1 || target.index_of(last.text) < 0) {
        const std::string found = last.kind == Factor::ident ? "'" + last.text + "'" : "a coefficient";
        throw ExprError{last.column, "each term must end with a basis label of " + target.name() + ", found " + found};
    }
    return target.index_of(last.text);
}

TensorElement tensor_of(const Sum& s, std::size_t arity, const FreeModule& target)
{
    const HopfAlgebra& h = target.hopf();
    const Field f = h.field();
    TensorElement out(h, arity);
    if (is_zero_literal(s))
        return out;
    for (const Term& t : s.terms) {
        const std::int32_t index = label_of(t, target);
        Scalar coeff = t.negative ? -f.one() : f.one();
        HopfElement outer = HopfElement::one(h);
        std::optional<HopfTensor> legs;
        for (std::size_t k = 0; k + 1 < t.factors.size(); ++k) {
            const Factor& fac = t.factors[k];
            if (fac.kind == Factor::number) {
                coeff *= scalar_of(fac, f);
            } else if (fac.kind == Factor::group && (arity > 1 || fac.legs.size() > 1)) {
                if (fac.legs.size() != arity)
                    throw ExprError{fac.column, "expected " + std::to_string(arity) + " legs, found " +
                                                    std::to_string(fac.legs.size())};
                if (legs)
                    throw ExprError{fac.column, "more than one leg group in a term"};
                std::vector<HopfElement> parts;
                for (const Sum& leg : fac.legs)
                    parts.push_back(hopf_of(leg, h));
                legs = HopfTensor::pure(parts);
            } else if (arity == 1) {
                outer = outer * hopf_factor(fac, h);
            } else {
                throw ExprError{fac.column, "Hopf factors must sit inside the leg group (f | g) for arity " +
                                                std::to_string(arity)};
            }
        }
        if (!legs)
            legs = HopfTensor::unit(h, arity);
        if (arity == 1) {
            HopfTensor lifted(h, 1);
            for (const auto& [m, c] : outer.terms())
                lifted.add(Legs{m}, c);
            legs = lifted * *legs;
        }
        for (const auto& [l, c] : legs->terms())
            out.add(l, index, coeff * c);
    }
    return out;
}

// λ-polynomials: keys (λ exponents, ∂ exponents).
using LamKey = std::pair<Monomial, Monomial>;
using LamPoly = SparseSum<LamKey>;

LamPoly lam_mul(const LamPoly& a, const LamPoly& b, Field f)
{
    LamPoly out(f);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            LamKey k = ka;
            for (std::size_t v = 0; v < k.first.size(); ++v) {
                k.first[v] += kb.first[v];
                k.second[v] += kb.second[v];
            }
            out.add(k, ca * cb);
        }
    return out;
}

LamPoly lam_one(std::size_t d, Field f)
{
    LamPoly out(f);
    out.add(LamKey{Monomial(d, 0), Monomial(d, 0)}, f.one());
    return out;
}

LamPoly lam_of(const Sum& s, const FreeModule& module, bool labelled);

LamPoly lam_factor(const Factor& fac, const FreeModule& module)
{
    const HopfAlgebra& h = module.hopf();
    const Field f = h.field();
    const auto& names = h.names();
    const std::size_t d = names.size();
    LamPoly base(f);
    if (fac.kind == Factor::number) {
        base.add(LamKey{Monomial(d, 0), Monomial(d, 0)}, scalar_of(fac, f));
        return base;
    }
    if (fac.kind == Factor::group) {
        if (fac.legs.size() != 1)
            throw ExprError{fac.column, "leg groups are not used in λ-brackets"};
        base = lam_of(fac.legs[0], module, false);
    } else {
        LamKey k{Monomial(d, 0), Monomial(d, 0)};
        bool found = false;
        for (std::size_t v = 0; v < d && !found; ++v) {
            const std::string lam = d == 1 ? "lambda" : "lambda_" + names[v];
            if (fac.text == names[v]) {
                k.second[v] = 1;
                found = true;
            } else if (fac.text == lam) {
                k.first[v] = 1;
                found = true;
            }
        }
        if (!found)
            throw ExprError{fac.column, "unknown variable '" + fac.text + "'"};
        base.add(k, f.one());
    }
    LamPoly out = lam_one(d, f);
    for (int i = 0; i < fac.power; ++i)
        out = lam_mul(out, base, f);
    return out;
}

// With `labelled`, every term ends in a basis label whose index is carried
// in an extra trailing slot of the λ exponents.
LamPoly lam_of(const Sum& s, const FreeModule& module, bool labelled)
{
    const Field f = module.field();
    const std::size_t d = module.hopf().names().size();
    LamPoly out(f);
    for (const Term& t : s.terms) {
        std::size_t n = t.factors.size();
        std::int32_t index = -1;
        if (labelled) {
            index = label_of(t, module);
            --n;
        }
        LamPoly acc = lam_one(d, f);
        for (std::size_t k = 0; k < n; ++k)
            acc = lam_mul(acc, lam_factor(t.factors[k], module), f);
        for (const auto& [key, c] : acc.terms()) {
            LamKey tagged = key;
            if (labelled)
                tagged.first.push_back(index);
            out.add(tagged, t.negative ? -c : c);
        }
    }
    return out;
}

LambdaPolynomial parse_lambda_sum(const Sum& s, const FreeModule& module)
{
    const LamPoly raw = lam_of(s, module, true);
    LambdaPolynomial out(module.field());
    for (const auto& [key, c] : raw.terms()) {
        Monomial lam = key.first;
        const std::int32_t index = lam.back();
        lam.pop_back();
        out.add(LambdaKey{lam, key.second, index}, c);
    }
    return out;
}

template <class Fn>
auto with_expr(const std::string& text, Fn fn)
{
    ExprParser p(text);
    return fn(p.parse());
}

// ---------------------------------------------------------------------------
// JSON model loading

class Loader {
public:
    Loader(std::string origin) : origin_(std::move(origin)) {}

    [[noreturn]] void fail(const std::string& path, const std::string& msg) const
    {
        throw ModelError(origin_ + ": " + (path.empty() ? "/" : path) + ": " + msg);
    }

    Model load(const json& doc);

private:
    const json& need(const json& obj, const std::string& key, const std::string& path) const
    {
        if (!obj.contains(key))
            fail(path, "missing key \"" + key + "\"");
        return obj.at(key);
    }
    std::string string_at(const json& v, const std::string& path) const
    {
        if (!v.is_string())
            fail(path, "expected a string");
        return v.get<std::string>();
    }
    const json& object_at(const json& v, const std::string& path) const
    {
        if (!v.is_object())
            fail(path, "expected an object");
        return v;
    }
    void allowed_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) const
    {
        for (auto it = obj.begin(); it != obj.end(); ++it)
            if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
                fail(path, "unknown key \"" + it.key() + "\"");
    }
    bool flag(const json& obj, const std::string& key, bool def, const std::string& path) const
    {
        if (!obj.contains(key))
            return def;
        if (!obj.at(key).is_boolean())
            fail(path + "/" + key, "expected true or false");
        return obj.at(key).get<bool>();
    }

    template <class Fn>
    auto expr(const std::string& text, const std::string& path, Fn fn) const
    {
        try {
            return with_expr(text, fn);
        } catch (const ExprError& e) {
            fail(path, "column " + std::to_string(e.column) + ": " + e.message + " in \"" + text + "\"");
        } catch (const Error& e) {
            fail(path, e.what());
        }
    }

    const FreeModule& module_ref(const json& v, const std::string& path) const
    {
        const std::string name = string_at(v, path);
        auto it = model_.modules.find(name);
        if (it == model_.modules.end())
            fail(path, "unknown module '" + name + "'");
        return it->second;
    }
    LiePseudoalgebra algebra_ref(const json& v, const std::string& path) const
    {
        const std::string name = string_at(v, path);
        if (!model_.algebras.count(name) && !model_.modules.count(name))
            fail(path, "unknown algebra '" + name + "'");
        return model_.algebra(name);
    }

    Tuple tuple_of(const std::string& key, const std::vector<FreeModule>& sources, const std::string& path) const
    {
        std::vector<std::string> parts;
        std::stringstream ss(key);
        std::string item;
        while (std::getline(ss, item, ','))
            parts.push_back(item);
        if (key.empty())
            parts.clear();
        if (parts.size() != sources.size())
            fail(path, "expected " + std::to_string(sources.size()) + " comma-separated labels");
        Tuple t;
        for (std::size_t k = 0; k < parts.size(); ++k) {
            std::string p = parts[k];
            p.erase(0, p.find_first_not_of(" \t"));
            p.erase(p.find_last_not_of(" \t") + 1);
            const int idx = sources[k].index_of(p);
            if (idx < 0)
                fail(path, "unknown basis label '" + p + "' of module " + sources[k].name());
            t.push_back(idx);
        }
        return t;
    }

    /// Fills a map from an "entries" object; with skew completion only
    /// nondecreasing tuples may be listed, and the result must be skew.
    PolyMap table(const json& entries, std::vector<FreeModule> sources, const FreeModule& target, bool skew_complete,
                  bool check_skewness, const std::string& path,
                  const std::function<TensorElement(const std::string&, const std::string&)>& value) const
    {
        object_at(entries, path);
        PolyMap out(sources, target);
        for (auto it = entries.begin(); it != entries.end(); ++it) {
            const std::string p = path + "/" + it.key();
            const Tuple t = tuple_of(it.key(), sources, p);
            if (out.table().count(t))
                fail(p, "duplicate entry");
            if (skew_complete && !std::is_sorted(t.begin(), t.end()))
                fail(p, "entry (" + it.key() + ") listed although skew_complete is set; give only i <= j");
            TensorElement v = value(string_at(it.value(), p), p);
            if (v.is_zero())
                out.set(t, TensorElement(target.hopf(), sources.size()));
            else
                out.set(t, v);
        }
        if (skew_complete)
            out = skew_complete_map(out);
        if (check_skewness) {
            const CheckReport r = check_skew(out);
            if (!r.passed()) {
                const Finding& f = r.findings.front();
                std::string pair;
                for (std::size_t k = 0; k < f.locator.size(); ++k)
                    pair += (k ? "," : "") + f.locator[k];
                fail(path, "skew-symmetry violated at (" + pair + "): difference " + f.difference);
            }
        }
        return out;
    }

    static PolyMap skew_complete_map(const PolyMap& m) { return skew_complete(m); }

    void load_hopf(const json& v);
    void load_modules(const json& v);
    void load_brackets(const json& v);
    void load_actions(const json& v);
    void load_cochains(const json& v);
    void load_maps(const json& v);
    void load_cocycles(const json& v);
    void load_pairs(const json& v);

    std::string origin_;
    Model model_;
};

void Loader::load_hopf(const json& v)
{
    object_at(v, "/hopf");
    const std::string kind = string_at(need(v, "kind", "/hopf"), "/hopf/kind");
    const Field f = model_.field;
    try {
        if (kind == "trivial") {
            allowed_keys(v, "/hopf", {"kind"});
            model_.hopf = HopfAlgebra::trivial(f);
        } else if (kind == "polynomial") {
            allowed_keys(v, "/hopf", {"kind", "generators"});
            const json& g = need(v, "generators", "/hopf");
            if (!g.is_array() || g.empty())
                fail("/hopf/generators", "expected a nonempty array of names");
            std::vector<std::string> names;
            for (std::size_t i = 0; i < g.size(); ++i)
                names.push_back(string_at(g[i], "/hopf/generators/" + std::to_string(i)));
            model_.hopf = HopfAlgebra::polynomial(f, names);
        } else if (kind == "group") {
            allowed_keys(v, "/hopf", {"kind", "elements", "table"});
            const json& e = need(v, "elements", "/hopf");
            const json& t = need(v, "table", "/hopf");
            if (!e.is_array() || e.empty())
                fail("/hopf/elements", "expected a nonempty array of labels");
            std::vector<std::string> labels;
            for (std::size_t i = 0; i < e.size(); ++i)
                labels.push_back(string_at(e[i], "/hopf/elements/" + std::to_string(i)));
            if (!t.is_array() || t.size() != labels.size())
                fail("/hopf/table", "expected " + std::to_string(labels.size()) + " rows");
            std::vector<std::vector<std::int32_t>> table;
            for (std::size_t i = 0; i < t.size(); ++i) {
                const std::string rp = "/hopf/table/" + std::to_string(i);
                if (!t[i].is_array() || t[i].size() != labels.size())
                    fail(rp, "expected " + std::to_string(labels.size()) + " entries");
                std::vector<std::int32_t> row;
                for (std::size_t j = 0; j < t[i].size(); ++j) {
                    const std::string s = string_at(t[i][j], rp + "/" + std::to_string(j));
                    auto it = std::find(labels.begin(), labels.end(), s);
                    if (it == labels.end())
                        fail(rp + "/" + std::to_string(j), "unknown group element '" + s + "'");
                    row.push_back(static_cast<std::int32_t>(it - labels.begin()));
                }
                table.push_back(std::move(row));
            }
            model_.hopf = HopfAlgebra::group(f, labels, table);
        } else {
            fail("/hopf/kind", "expected trivial, group or polynomial");
        }
    } catch (const ModelError&) {
        throw;
    } catch (const Error& e) {
        fail("/hopf", e.what());
    }
    const CheckReport axioms = check_hopf_axioms(model_.hopf);
    if (!axioms.passed())
        fail("/hopf", "Hopf axioms fail: " + axioms.summary(3));
}

void Loader::load_modules(const json& v)
{
    object_at(v, "/modules");
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string p = "/modules/" + it.key();
        if (!it.value().is_array() || it.value().empty())
            fail(p, "expected a nonempty array of basis labels");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < it.value().size(); ++i) {
            const std::string l = string_at(it.value()[i], p + "/" + std::to_string(i));
            if (l.empty() || l.find_first_of(", ") != std::string::npos)
                fail(p + "/" + std::to_string(i), "labels must be nonempty without commas or spaces");
            if (std::find(labels.begin(), labels.end(), l) != labels.end())
                fail(p + "/" + std::to_string(i), "duplicate label '" + l + "'");
            try {
                const auto toks = tokenize(l);
                if (toks.size() != 2 || toks[0].kind != Token::ident)
                    fail(p + "/" + std::to_string(i), "label '" + l + "' is not an identifier");
            } catch (const ExprError&) {
                fail(p + "/" + std::to_string(i), "label '" + l + "' is not an identifier");
            }
            labels.push_back(l);
        }
        model_.modules.emplace(it.key(), FreeModule(it.key(), labels, model_.hopf));
    }
}

void Loader::load_brackets(const json& v)
{
    object_at(v, "/brackets");
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string p = "/brackets/" + it.key();
        const json& b = object_at(it.value(), p);
        allowed_keys(b, p, {"module", "skew_complete", "entries", "lambda"});
        const FreeModule& m = module_ref(need(b, "module", p), p + "/module");
        const bool complete = flag(b, "skew_complete", true, p);
        if (b.contains("entries") == b.contains("lambda"))
            fail(p, "give exactly one of \"entries\" and \"lambda\"");
        PolyMap bracket;
        if (b.contains("entries")) {
            bracket = table(b.at("entries"), {m, m}, m, complete, true, p + "/entries",
                            [&](const std::string& s, const std::string& ep) {
                                return expr(s, ep, [&](const Sum& sum) { return tensor_of(sum, 2, m); });
                            });
        } else {
            if (m.hopf().kind() != HopfKind::polynomial)
                fail(p + "/lambda", "λ-brackets need a polynomial Hopf algebra");
            bracket = table(b.at("lambda"), {m, m}, m, complete, true, p + "/lambda",
                            [&](const std::string& s, const std::string& ep) {
                                const LambdaPolynomial poly = expr(s, ep, [&](const Sum& sum) {
                                    return parse_lambda_sum(sum, m);
                                });
                                LambdaTable t;
                                t.emplace(std::make_pair(0, 0), poly);
                                return from_lambda_bracket(t, m).value(Tuple{0, 0});
                            });
        }
        model_.algebras.emplace(it.key(), LiePseudoalgebra(it.key(), m, bracket));
    }
}

void Loader::load_actions(const json& v)
{
    object_at(v, "/actions");
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string p = "/actions/" + it.key();
        const json& a = object_at(it.value(), p);
        allowed_keys(a, p, {"algebra", "module", "entries", "adjoint"});
        const LiePseudoalgebra alg = algebra_ref(need(a, "algebra", p), p + "/algebra");
        const bool adjoint = flag(a, "adjoint", false, p);
        if (adjoint) {
            if (a.contains("entries"))
                fail(p, "\"adjoint\" and \"entries\" are exclusive");
            if (a.contains("module") && !(module_ref(a.at("module"), p + "/module") == alg.module))
                fail(p + "/module", "the adjoint action acts on the algebra's own module");
            model_.actions.emplace(it.key(), Representation(it.key(), alg, alg.module, alg.bracket));
            continue;
        }
        const FreeModule& m = module_ref(need(a, "module", p), p + "/module");
        PolyMap act({alg.module, m}, m);
        if (a.contains("entries"))
            act = table(a.at("entries"), {alg.module, m}, m, false, false, p + "/entries",
                        [&](const std::string& s, const std::string& ep) {
                            return expr(s, ep, [&](const Sum& sum) { return tensor_of(sum, 2, m); });
                        });
        model_.actions.emplace(it.key(), Representation(it.key(), alg, m, act));
    }
}

void Loader::load_cochains(const json& v)
{
    object_at(v, "/cochains");
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string p = "/cochains/" + it.key();
        const json& c = object_at(it.value(), p);
        allowed_keys(c, p, {"action", "degree", "skew_complete", "entries", "constant"});
        const std::string act_name = string_at(need(c, "action", p), p + "/action");
        if (!model_.actions.count(act_name))
            fail(p + "/action", "unknown action '" + act_name + "'");
        const Representation& r = model_.actions.at(act_name);
        const json& deg = need(c, "degree", p);
        if (!deg.is_number_unsigned() || deg.get<std::size_t>() > 8)
            fail(p + "/degree", "expected a degree between 0 and 8");
        const std::size_t n = deg.get<std::size_t>();
        Cochain cochain = zero_cochain(r, n);
        if (n == 0) {
            allowed_keys(c, p, {"action", "degree", "constant"});
            if (c.contains("constant")) {
                const std::string cp = p + "/constant";
                const TensorElement u = expr(string_at(c.at("constant"), cp), cp,
                                             [&](const Sum& sum) { return tensor_of(sum, 1, r.module); });
                for (const auto& [key, coeff] : u.terms())
                    cochain.constant[key.index] += coeff * r.module.hopf().counit(key.legs[0]);
            }
        } else {
            if (c.contains("constant"))
                fail(p + "/constant", "only degree-0 cochains have a constant");
            const bool complete = flag(c, "skew_complete", true, p);
            if (c.contains("entries")) {
                PolyMap map = table(c.at("entries"), std::vector<FreeModule>(n, r.algebra.module), r.module, complete,
                                    true, p + "/entries", [&](const std::string& s, const std::string& ep) {
                                        return expr(s, ep, [&](const Sum& sum) { return tensor_of(sum, n, r.module); });
                                    });
                cochain = make_cochain(r, std::move(map));
            }
        }
        model_.cochains.emplace(it.key(), ModelCochain{act_name, std::move(cochain)});
    }
}

void Loader::load_maps(const json& v)
{
    object_at(v, "/maps");
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string p = "/maps/" + it.key();
        const json& m = object_at(it.value(), p);
        allowed_keys(m, p, {"source", "target", "images"});
        const FreeModule& src = module_ref(need(m, "source", p), p + "/source");
        const FreeModule& tgt = module_ref(need(m, "target", p), p + "/target");
        std::vector<TensorElement> images(src.rank(), TensorElement(tgt.hopf(), 1));
        std::vector<char> seen(src.rank(), 0);
        const json& imgs = object_at(need(m, "images", p), p + "/images");
        for (auto jt = imgs.begin(); jt != imgs.end(); ++jt) {
            const std::string ip = p + "/images/" + jt.key();
            const int idx = src.index_of(jt.key());
            if (idx < 0)
                fail(ip, "unknown basis label '" + jt.key() + "' of module " + src.name());
            images[idx] = expr(string_at(jt.value(), ip), ip, [&](const Sum& sum) { return tensor_of(sum, 1, tgt); });
        }
        model_.maps.emplace(it.key(), ModuleMap(src, tgt, std::move(images)));
    }
}

void Loader::load_cocycles(const json& v)
{
    object_at(v, "/cocycles");
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string p = "/cocycles/" + it.key();
        const json& c = object_at(it.value(), p);
        allowed_keys(c, p, {"algebra", "coefficients", "skew_complete", "chi", "psi"});
        const std::string lname = string_at(need(c, "algebra", p), p + "/algebra");
        const std::string mname = string_at(need(c, "coefficients", p), p + "/coefficients");
        const LiePseudoalgebra L = algebra_ref(c.at("algebra"), p + "/algebra");
        const LiePseudoalgebra M = algebra_ref(c.at("coefficients"), p + "/coefficients");
        NonAbelianCocycle cocycle = NonAbelianCocycle::zero(L, M);
        const bool complete = flag(c, "skew_complete", true, p);
        if (c.contains("chi"))
            cocycle.chi = table(c.at("chi"), {L.module, L.module}, M.module, complete, true, p + "/chi",
                                [&](const std::string& s, const std::string& ep) {
                                    return expr(s, ep, [&](const Sum& sum) { return tensor_of(sum, 2, M.module); });
                                });
        if (c.contains("psi")) {
            const json& psi = c.at("psi");
            if (psi.is_string()) {
                const std::string a = psi.get<std::string>();
                auto at = model_.actions.find(a);
                if (at == model_.actions.end())
                    fail(p + "/psi", "unknown action '" + a + "'");
                if (!(at->second.algebra.module == L.module) || !(at->second.module == M.module))
                    fail(p + "/psi", "action '" + a + "' does not act by " + lname + " on " + mname);
                cocycle.psi = at->second.action;
            } else {
                cocycle.psi = table(psi, {L.module, M.module}, M.module, false, false, p + "/psi",
                                    [&](const std::string& s, const std::string& ep) {
                                        return expr(s, ep,
                                                    [&](const Sum& sum) { return tensor_of(sum, 2, M.module); });
                                    });
            }
        }
        model_.cocycles.emplace(it.key(), ModelCocycle{lname, mname, std::move(cocycle)});
    }
}

void Loader::load_pairs(const json& v)
{
    object_at(v, "/pairs");
    for (auto it = v.begin(); it != v.end(); ++it) {
        const std::string p = "/pairs/" + it.key();
        const json& c = object_at(it.value(), p);
        allowed_keys(c, p, {"beta", "alpha"});
        ModelPair pair;
        pair.beta = string_at(need(c, "beta", p), p + "/beta");
        pair.alpha = string_at(need(c, "alpha", p), p + "/alpha");
        for (const auto* name : {&pair.beta, &pair.alpha}) {
            const std::string sp = p + (name == &pair.beta ? "/beta" : "/alpha");
            auto mt = model_.maps.find(*name);
            if (mt == model_.maps.end())
                fail(sp, "unknown map '" + *name + "'");
            if (!(mt->second.source() == mt->second.target()))
                fail(sp, "map '" + *name + "' is not an endomorphism");
        }
        model_.pairs.emplace(it.key(), std::move(pair));
    }
}

Model Loader::load(const json& doc)
{
    if (!doc.is_object())
        fail("", "expected a JSON object");
    allowed_keys(doc, "", {"description", "scalars", "hopf", "modules", "brackets", "actions", "cochains", "maps",
                           "cocycles", "pairs"});
    try {
        model_.field = Field::parse(string_at(need(doc, "scalars", ""), "/scalars"));
    } catch (const ModelError&) {
        throw;
    } catch (const Error& e) {
        fail("/scalars", e.what());
    }
    load_hopf(need(doc, "hopf", ""));
    load_modules(need(doc, "modules", ""));
    auto section = [&](const char* key, void (Loader::*fn)(const json&)) {
        if (doc.contains(key))
            (this->*fn)(doc.at(key));
    };
    try {
        section("brackets", &Loader::load_brackets);
        section("actions", &Loader::load_actions);
        section("cochains", &Loader::load_cochains);
        section("maps", &Loader::load_maps);
        section("cocycles", &Loader::load_cocycles);
        section("pairs", &Loader::load_pairs);
    } catch (const ModelError&) {
        throw;
    } catch (const Error& e) {
        throw ModelError(origin_ + ": " + e.what());
    }
    return std::move(model_);
}

std::string lines_cols(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

// ---------------------------------------------------------------------------
// Rendering

std::string key_of(const PolyMap& p, const Tuple& t)
{
    std::string out;
    for (std::size_t k = 0; k < t.size(); ++k)
        out += (k ? "," : "") + p.source(k).label(t[k]);
    return out;
}

ojson entries_of(const PolyMap& p)
{
    ojson out = ojson::object();
    for (const auto& [t, v] : p.table())
        if (!v.is_zero())
            out[key_of(p, t)] = v.render(p.target());
    return out;
}

} // namespace

// ---------------------------------------------------------------------------

const FreeModule& Model::module(const std::string& name) const
{
    auto it = modules.find(name);
    if (it == modules.end())
        throw ModelError("unknown module '" + name + "'");
    return it->second;
}

LiePseudoalgebra Model::algebra(const std::string& name) const
{
    if (auto it = algebras.find(name); it != algebras.end())
        return it->second;
    if (auto it = modules.find(name); it != modules.end()) {
        LiePseudoalgebra a = LiePseudoalgebra::abelian(it->second);
        a.name = name;
        return a;
    }
    throw ModelError("unknown algebra '" + name + "'");
}

const Representation& Model::action(const std::string& name) const
{
    auto it = actions.find(name);
    if (it == actions.end())
        throw ModelError("unknown action '" + name + "'");
    return it->second;
}

const ModuleMap& Model::map(const std::string& name) const
{
    auto it = maps.find(name);
    if (it == maps.end())
        throw ModelError("unknown map '" + name + "'");
    return it->second;
}

const ModelCocycle& Model::cocycle(const std::string& name) const
{
    auto it = cocycles.find(name);
    if (it == cocycles.end())
        throw ModelError("unknown cocycle '" + name + "'");
    return it->second;
}

AutPair Model::pair(const std::string& name) const
{
    auto it = pairs.find(name);
    if (it == pairs.end())
        throw ModelError("unknown pair '" + name + "'");
    return AutPair{map(it->second.beta), map(it->second.alpha)};
}

bool Model::operator==(const Model& o) const
{
    auto same_keys = [](const auto& a, const auto& b) {
        return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; });
    };
    return field == o.field && hopf == o.hopf && modules == o.modules && same_keys(modules, o.modules) &&
           algebras == o.algebras && actions == o.actions && cochains == o.cochains && maps == o.maps &&
           cocycles == o.cocycles && pairs == o.pairs;
}

Model parse_model(const std::string& text, const std::string& origin)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string what = e.what();
        const auto pos = what.find("syntax error");
        if (pos != std::string::npos)
            what = what.substr(pos);
        throw ModelError(origin + ":" + lines_cols(text, e.byte) + ": " + what);
    }
    return Loader(origin).load(doc);
}

Model load_model(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ModelError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str(), path);
}

std::string render_model(const Model& m)
{
    ojson doc;
    doc["scalars"] = m.field.name();
    const HopfAlgebra& h = m.hopf;
    ojson hopf;
    switch (h.kind()) {
    case HopfKind::trivial:
        hopf["kind"] = "trivial";
        break;
    case HopfKind::polynomial:
        hopf["kind"] = "polynomial";
        hopf["generators"] = h.names();
        break;
    case HopfKind::group: {
        hopf["kind"] = "group";
        hopf["elements"] = h.names();
        ojson table = ojson::array();
        for (const auto& row : h.group_table()) {
            ojson r = ojson::array();
            for (auto v : row)
                r.push_back(h.names()[v]);
            table.push_back(r);
        }
        hopf["table"] = table;
        break;
    }
    }
    doc["hopf"] = hopf;
    ojson modules = ojson::object();
    for (const auto& [name, mod] : m.modules)
        modules[name] = mod.labels();
    doc["modules"] = modules;

    // Modules are referenced by name; find the declared name of a structure.
    auto module_name = [&](const FreeModule& mod) {
        if (m.modules.count(mod.name()) && m.modules.at(mod.name()) == mod)
            return mod.name();
        for (const auto& [name, x] : m.modules)
            if (x == mod)
                return name;
        throw Error("render_model: undeclared module " + mod.name());
    };

    ojson brackets = ojson::object();
    for (const auto& [name, a] : m.algebras)
        brackets[name] = ojson{{"module", module_name(a.module)}, {"skew_complete", false},
                               {"entries", entries_of(a.bracket)}};
    if (!brackets.empty())
        doc["brackets"] = brackets;

    auto algebra_name = [&](const LiePseudoalgebra& a) {
        if (m.algebras.count(a.name) && m.algebras.at(a.name) == a)
            return a.name;
        for (const auto& [name, x] : m.algebras)
            if (x == a)
                return name;
        const std::string mod = module_name(a.module);
        if (a.is_abelian() && !m.algebras.count(mod))
            return mod;
        throw Error("render_model: undeclared algebra " + a.name);
    };

    ojson actions = ojson::object();
    for (const auto& [name, r] : m.actions)
        actions[name] = ojson{{"algebra", algebra_name(r.algebra)}, {"module", module_name(r.module)},
                              {"entries", entries_of(r.action)}};
    if (!actions.empty())
        doc["actions"] = actions;

    ojson cochains = ojson::object();
    for (const auto& [name, c] : m.cochains) {
        ojson o{{"action", c.action}, {"degree", c.cochain.degree}};
        if (c.cochain.degree == 0) {
            const FreeModule& mod = m.actions.at(c.action).module;
            TensorElement u(h, 1);
            for (std::size_t i = 0; i < c.cochain.constant.size(); ++i)
                u.add(Legs{h.unit()}, static_cast<std::int32_t>(i), c.cochain.constant[i]);
            o["constant"] = u.render(mod);
        } else {
            o["skew_complete"] = false;
            o["entries"] = entries_of(c.cochain.map);
        }
        cochains[name] = o;
    }
    if (!cochains.empty())
        doc["cochains"] = cochains;

    ojson maps = ojson::object();
    for (const auto& [name, f] : m.maps) {
        ojson images = ojson::object();
        for (std::size_t j = 0; j < f.source().rank(); ++j)
            images[f.source().label(j)] = f.image(j).render(f.target());
        maps[name] = ojson{{"source", module_name(f.source())}, {"target", module_name(f.target())}, {"images", images}};
    }
    if (!maps.empty())
        doc["maps"] = maps;

    ojson cocycles = ojson::object();
    for (const auto& [name, c] : m.cocycles)
        cocycles[name] = ojson{{"algebra", c.algebra},
                               {"coefficients", c.coefficients},
                               {"skew_complete", false},
                               {"chi", entries_of(c.cocycle.chi)},
                               {"psi", entries_of(c.cocycle.psi)}};
    if (!cocycles.empty())
        doc["cocycles"] = cocycles;

    ojson pairs = ojson::object();
    for (const auto& [name, p] : m.pairs)
        pairs[name] = ojson{{"beta", p.beta}, {"alpha", p.alpha}};
    if (!pairs.empty())
        doc["pairs"] = pairs;
    return doc.dump(2) + "\n";
}

HopfElement parse_hopf_element(const std::string& text, const HopfAlgebra& h)
{
    try {
        return with_expr(text, [&](const Sum& s) { return hopf_of(s, h); });
    } catch (const ExprError& e) {
        throw ModelError("column " + std::to_string(e.column) + ": " + e.message + " in \"" + text + "\"");
    }
}

TensorElement parse_tensor(const std::string& text, std::size_t arity, const FreeModule& target)
{
    try {
        return with_expr(text, [&](const Sum& s) { return tensor_of(s, arity, target); });
    } catch (const ExprError& e) {
        throw ModelError("column " + std::to_string(e.column) + ": " + e.message + " in \"" + text + "\"");
    }
}

LambdaPolynomial parse_lambda(const std::string& text, const FreeModule& module)
{
    if (module.hopf().kind() != HopfKind::polynomial)
        throw ModelError("λ-brackets need a polynomial Hopf algebra");
    try {
        return with_expr(text, [&](const Sum& s) { return parse_lambda_sum(s, module); });
    } catch (const ExprError& e) {
        throw ModelError("column " + std::to_string(e.column) + ": " + e.message + " in \"" + text + "\"");
    }
}

} // namespace pseudocohom
