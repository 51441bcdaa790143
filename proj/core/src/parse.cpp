#include "qfock/parse.hpp"

#include <charconv>
#include <cstdio>

namespace qfock {

namespace {

bool is_unit(char c) { return c == 'i' || c == 'j' || c == 'k'; }

double* component(Quaternion& q, char unit) {
    switch (unit) {
        case 'i':
            return &q.x;
        case 'j':
            return &q.y;
        case 'k':
            return &q.z;
        default:
            return &q.w;
    }
}

}  // namespace

Quaternion parse_quaternion(std::string_view text) {
    if (text.empty()) throw ParseError("empty quaternion literal", 1);

    Quaternion q;
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
        double sign = 1.0;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1.0 : 1.0;
            ++pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", pos + 1);
        }
        if (pos >= text.size()) throw ParseError("dangling sign", pos + 1);

        double value = 1.0;
        bool had_number = false;
        if (!is_unit(text[pos])) {
            const char* begin = text.data() + pos;
            const char* end = text.data() + text.size();
            double parsed = 0.0;
            const auto res = std::from_chars(begin, end, parsed);
            if (res.ec != std::errc() || res.ptr == begin) {
                throw ParseError("expected a number or unit", pos + 1);
            }
            value = parsed;
            had_number = true;
            pos = static_cast<std::size_t>(res.ptr - text.data());
        }

        char unit = '\0';
        if (pos < text.size() && is_unit(text[pos])) {
            unit = text[pos];
            ++pos;
        } else if (!had_number) {
            throw ParseError("expected a number or unit", pos + 1);
        }

        *component(q, unit) += sign * value;
        first = false;
    }
    return q;
}

std::string format_quaternion(const Quaternion& q) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi%+.17gj%+.17gk", q.w, q.x, q.y, q.z);
    return buf;
}

}  // namespace qfock
