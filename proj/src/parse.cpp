#include "caysum/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace caysum {

namespace {

void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
        ++pos;
}

long parse_long(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
    if (pos == start)
        throw parse_error("expected an integer at position " +
                              std::to_string(start) + " in '" + s + "'",
                          start);
    return std::strtol(s.c_str() + start, nullptr, 10);
}

void expect(const std::string& s, std::size_t& pos, char c) {
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != c)
        throw parse_error(std::string("expected '") + c + "' at position " +
                              std::to_string(pos) + " in '" + s + "'",
                          pos);
    ++pos;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    std::vector<long> factors;
    std::size_t pos = 0;
    if (!text.empty() && text[0] == '[') {
        ++pos;
        while (true) {
            factors.push_back(parse_long(text, pos));
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(text, pos, ']');
    } else {
        while (true) {
            if (pos >= text.size() ||
                (text[pos] != 'Z' && text[pos] != 'z'))
                throw parse_error("expected 'Z' at position " +
                                      std::to_string(pos) + " in '" + text +
                                      "'",
                                  pos);
            ++pos;
            factors.push_back(parse_long(text, pos));
            if (pos < text.size() &&
                (text[pos] == 'x' || text[pos] == 'X')) {
                ++pos;
                continue;
            }
            break;
        }
    }
    if (pos != text.size())
        throw parse_error("trailing input at position " + std::to_string(pos) +
                              " in '" + text + "'",
                          pos);
    return GroupSpec::from_factors(std::move(factors));
}

namespace {

Element parse_element_at(const GroupSpec& g, const std::string& s,
                         std::size_t& pos) {
    std::vector<long> residues;
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        while (true) {
            residues.push_back(parse_long(s, pos));
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        expect(s, pos, ')');
    } else {
        if (g.rank() != 1)
            throw parse_error(
                "elements of " + g.to_string() +
                    " must be parenthesized tuples, at position " +
                    std::to_string(pos) + " in '" + s + "'",
                pos);
        residues.push_back(parse_long(s, pos));
    }
    if (residues.size() != g.rank())
        throw parse_error("element has " + std::to_string(residues.size()) +
                              " coordinates but " + g.to_string() + " has " +
                              std::to_string(g.rank()),
                          pos);
    Element e(std::move(residues));
    require_valid(g, e);
    return e;
}

}  // namespace

Element parse_element(const GroupSpec& g, const std::string& text) {
    std::size_t pos = 0;
    Element e = parse_element_at(g, text, pos);
    if (pos != text.size())
        throw parse_error("trailing input at position " + std::to_string(pos) +
                              " in '" + text + "'",
                          pos);
    return e;
}

ElementSet parse_element_set(const GroupSpec& g, const std::string& text) {
    ElementSet out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        out.insert(parse_element_at(g, text, pos));
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    if (pos != text.size())
        throw parse_error("trailing input at position " + std::to_string(pos) +
                              " in '" + text + "'",
                          pos);
    return out;
}

}  // namespace caysum
