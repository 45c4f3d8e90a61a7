#pragma once

#include <cctype>
#include <compare>
#include <string>

#include "quadgenus/error.hpp"

namespace qg {

/// Vertex name: a numeric residue or a short alphabetic word.
/// Numerics order first (ascending), then words (lexicographic).
class Label {
public:
    Label() = default;
    static Label number(int n) {
        Label l;
        l.num_ = n;
        return l;
    }
    static Label word(std::string w) {
        Label l;
        l.word_ = std::move(w);
        return l;
    }
    // Parses "12" as numeric, "x" as a word; rejects mixed tokens.
    static Label parse(const std::string& tok) {
        if (tok.empty()) throw ParseError("empty vertex label");
        bool digits = true, alpha = true;
        for (char c : tok) {
            if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
            if (!std::isalpha(static_cast<unsigned char>(c))) alpha = false;
        }
        if (digits) return number(std::stoi(tok));
        if (alpha && tok.size() <= 8) return word(tok);
        throw ParseError("bad vertex label '" + tok + "'");
    }

    bool numeric() const { return num_ >= 0; }
    int value() const { return num_; }
    const std::string& text() const { return word_; }

    std::string str() const { return numeric() ? std::to_string(num_) : word_; }

    friend bool operator==(const Label& a, const Label& b) = default;
    friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
        if (a.numeric() != b.numeric())
            return a.numeric() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.numeric()) return a.num_ <=> b.num_;
        return a.word_ <=> b.word_;
    }

private:
    int num_ = -1;
    std::string word_;
};

} // namespace qg
