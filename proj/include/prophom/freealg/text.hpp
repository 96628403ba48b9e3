#pragma once

// Canonical text form used by golden tests and dumps.
//
//   letter      decimal integer; written bare when < 10, else in parentheses: "(12)"
//   word        letters concatenated; the empty word is "()"
//   Lie basis   "min|tail", e.g. "1|23"; a single letter is "3|"
//   Poisson     blocks in braces, ascending anchor: "{1|2}{3|}"
//   tensor      blocks joined by "#": "1|2#3|"
//   polynomial  "coeff*basis" terms joined by "+", e.g. "1*12+-1*21"; zero is "0"
//
// Terms appear in the container order (lexicographic on the basis key).

#include <prophom/freealg/pbw.hpp>
#include <prophom/freealg/tensor_lie.hpp>

#include <cctype>
#include <sstream>
#include <string>

namespace prophom::freealg {

inline std::string letters_text(const Word& w)
{
    std::string s;
    for (Letter l : w) {
        if (l < 10)
            s += static_cast<char>('0' + l);
        else
            s += "(" + std::to_string(l) + ")";
    }
    return s;
}

inline std::string word_text(const Word& w) { return w.empty() ? "()" : letters_text(w); }

inline std::string to_text(const LieBasisWord& b)
{
    return letters_text({b.anchor}) + "|" + letters_text(b.tail);
}

namespace detail {

template <typename Terms, typename KeyText>
std::string join_terms(const Terms& terms, KeyText key_text)
{
    if (terms.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms) {
        if (!first)
            s += "+";
        first = false;
        s += c.get_str() + "*" + key_text(k);
    }
    return s;
}

}  // namespace detail

inline std::string to_text(const AssocPoly& p)
{
    return detail::join_terms(p.terms(), [](const Word& w) { return word_text(w); });
}

inline std::string to_text(const LiePoly& p)
{
    return detail::join_terms(p.terms(), [](const LieBasisWord& b) { return to_text(b); });
}

inline std::string to_text(const SymLiePoly& p)
{
    return detail::join_terms(p.terms(), [](const SymLieTerm& t) {
        if (t.empty())
            return std::string("{}");
        std::string s;
        for (const auto& b : t)
            s += "{" + to_text(b) + "}";
        return s;
    });
}

inline std::string to_text(const TensorLiePoly& p)
{
    return detail::join_terms(p.terms(), [](const LieTensorTerm& t) {
        std::string s;
        for (std::size_t i = 0; i < t.size(); ++i)
            s += (i ? "#" : "") + to_text(t[i]);
        return s;
    });
}

namespace detail {

inline Word parse_letters(const std::string& s)
{
    Word w;
    if (s == "()")
        return w;
    for (std::size_t i = 0; i < s.size();) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            w.push_back(s[i] - '0');
            ++i;
        } else if (s[i] == '(') {
            auto close = s.find(')', i);
            if (close == std::string::npos)
                throw Error("unterminated letter in '" + s + "'");
            w.push_back(std::stoi(s.substr(i + 1, close - i - 1)));
            i = close + 1;
        } else {
            throw Error("bad letter text '" + s + "'");
        }
    }
    return w;
}

/// Splits "c*key+c*key" into (coefficient, key) pairs; coefficients may be negative.
inline std::vector<std::pair<Rational, std::string>> split_terms(const std::string& text)
{
    std::vector<std::pair<Rational, std::string>> out;
    if (text == "0" || text.empty())
        return out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto star = text.find('*', pos);
        if (star == std::string::npos)
            throw Error("missing '*' in '" + text + "'");
        auto plus = text.find('+', star);
        std::string key = text.substr(star + 1, plus == std::string::npos ? std::string::npos : plus - star - 1);
        out.emplace_back(parse_rational(text.substr(pos, star - pos)), key);
        if (plus == std::string::npos)
            break;
        pos = plus + 1;
    }
    return out;
}

}  // namespace detail

inline AssocPoly parse_assoc(const std::string& text)
{
    AssocPoly p;
    for (const auto& [c, key] : detail::split_terms(text)) {
        Word w = detail::parse_letters(key);
        if (p.is_zero() && p.support().empty())
            p = AssocPoly(support_of(w));
        p.add_term(w, c);
    }
    return p;
}

inline LiePoly parse_lie(const std::string& text)
{
    LiePoly p;
    for (const auto& [c, key] : detail::split_terms(text)) {
        auto bar = key.find('|');
        if (bar == std::string::npos)
            throw Error("Lie basis word needs '|': " + key);
        Word anchor = detail::parse_letters(key.substr(0, bar));
        if (anchor.size() != 1)
            throw Error("Lie basis word needs a single anchor: " + key);
        LieBasisWord b(anchor.front(), detail::parse_letters(key.substr(bar + 1)));
        if (p.is_zero() && p.support().empty())
            p = LiePoly(b.support());
        p.add_term(b, c);
    }
    return p;
}

}  // namespace prophom::freealg
