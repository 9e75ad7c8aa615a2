#include "ratknot/notation.hpp"

#include <cctype>
#include <charconv>

namespace ratknot {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ == text_.size(); }
    char peek() const { return done() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(pos_, what);
    }

    bool at_integer() const {
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
        return (c == '-' || c == '+') && pos_ + 1 < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
    }

    Int integer() {
        const std::size_t start = pos_;
        if (!at_integer()) throw ParseError(start, "integer");
        if (peek() == '+') ++pos_;
        Int value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [end, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) throw ParseError(start, "integer within 64 bits");
        pos_ += static_cast<std::size_t>(end - first);
        return value;
    }

    bool accept_word(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

ContinuedFraction read_vector(Scanner& s) {
    s.expect('[', "'['");
    std::vector<Int> terms;
    s.skip_space();
    while (true) {
        const std::size_t at = s.pos();
        const Int term = s.integer();
        if (!terms.empty() && term == 0) throw ParseError(at, "nonzero term after the first");
        terms.push_back(term);
        s.skip_space();
        if (s.accept(']')) break;
        if (s.accept(',')) s.skip_space();
        else if (!s.at_integer()) throw ParseError(s.pos(), "',' or ']'");
    }
    return ContinuedFraction(std::move(terms));
}

Fraction read_fraction(Scanner& s) {
    if (s.accept_word("inf")) return Fraction::infinity();
    const Int num = s.integer();
    if (!s.accept('/')) return Fraction::integer(num);
    const std::size_t at = s.pos();
    const Int den = s.integer();
    if (num == 0 && den == 0) throw ParseError(at, "nonzero numerator or denominator");
    return Fraction(num, den);
}

}  // namespace

Notation parse(std::string_view text) {
    Scanner s(text);
    s.skip_space();
    Notation result = s.peek() == '[' ? Notation(read_vector(s)) : Notation(read_fraction(s));
    s.skip_space();
    if (!s.done()) throw ParseError(s.pos(), "end of input");
    return result;
}

Fraction parse_fraction(std::string_view text) {
    Notation n = parse(text);
    if (auto* cf = std::get_if<ContinuedFraction>(&n)) return eval(*cf);
    return std::get<Fraction>(n);
}

ContinuedFraction parse_vector(std::string_view text) {
    Notation n = parse(text);
    if (auto* cf = std::get_if<ContinuedFraction>(&n)) return *cf;
    std::size_t at = 0;
    while (at < text.size() && std::isspace(static_cast<unsigned char>(text[at]))) ++at;
    throw ParseError(at, "'['");
}

std::string serialize(const Notation& n) {
    return std::visit([](const auto& v) { return to_string(v); }, n);
}

}  // namespace ratknot
