#include "multidb/textio.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace multidb {

std::string to_string(const Seq& s) {
    bool wide = false;
    for (int a : s)
        if (a > 9) wide = true;
    std::ostringstream out;
    if (wide) {
        out << '[';
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) out << ',';
            out << s[i];
        }
        out << ']';
    } else {
        for (int a : s) out << static_cast<char>('0' + a);
    }
    return out.str();
}

std::string to_string(const CyclicSeq& c) { return "(" + to_string(c.rep) + ")"; }

std::string to_string(const MultiCyclicSeq& mc) {
    std::string out;
    for (const auto& c : mc.cycles) out += "(" + to_string(c) + ")";
    return out;
}

Seq parse_seq(const std::string& text) {
    Seq s;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("unbalanced brackets");
        std::istringstream in(text.substr(1, text.size() - 2));
        std::string item;
        while (std::getline(in, item, ',')) {
            size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size() || v < 0) throw std::invalid_argument("bad symbol: " + item);
            s.push_back(v);
        }
        return s;
    }
    for (char ch : text) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument(std::string("bad symbol character: ") + ch);
        s.push_back(ch - '0');
    }
    return s;
}

CyclicSeq parse_cyclic(const std::string& text) {
    if (text.size() < 2 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("cycle must be parenthesized");
    return CyclicSeq(parse_seq(text.substr(1, text.size() - 2)));
}

MultiCyclicSeq parse_multicyclic(const std::string& text) {
    std::vector<Seq> cycles;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        if (text[i] != '(') throw std::invalid_argument("expected '('");
        size_t close = text.find(')', i);
        if (close == std::string::npos) throw std::invalid_argument("unbalanced parentheses");
        cycles.push_back(parse_seq(text.substr(i + 1, close - i - 1)));
        i = close + 1;
    }
    return MultiCyclicSeq(std::move(cycles));
}

}  // namespace multidb
