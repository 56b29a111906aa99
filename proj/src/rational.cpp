#include "singedge/rational.hpp"

#include <cctype>
#include <cstdio>
#include <cstring>

namespace singedge {

std::optional<Scalar> Scalar::parse(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const char* s = text.c_str();

    auto parse_int = [](const char* p, const char** end) -> std::optional<long long> {
        char* e = nullptr;
        errno = 0;
        long long v = std::strtoll(p, &e, 10);
        if (e == p || errno == ERANGE) return std::nullopt;
        *end = e;
        return v;
    };

    const char* slash = std::strchr(s, '/');
    if (slash != nullptr) {
        const char* end = nullptr;
        auto n = parse_int(s, &end);
        if (!n || end != slash) return std::nullopt;
        auto d = parse_int(slash + 1, &end);
        if (!d || *end != '\0' || *d == 0) return std::nullopt;
        auto r = Rat::make(static_cast<__int128>(*n), static_cast<__int128>(*d));
        if (!r) return std::nullopt;
        return Scalar(*r);
    }

    bool integral = true;
    for (const char* p = s; *p; ++p) {
        if (*p == '.' || *p == 'e' || *p == 'E') { integral = false; break; }
    }
    if (integral) {
        const char* end = nullptr;
        auto n = parse_int(s, &end);
        if (!n || *end != '\0') return std::nullopt;
        return Scalar(*n);
    }

    char* e = nullptr;
    errno = 0;
    double v = std::strtod(s, &e);
    if (e == s || *e != '\0' || errno == ERANGE) return std::nullopt;
    return Scalar(v);
}

std::string Scalar::str() const {
    if (exact_) return rat_.str();
    return format_double(val_);
}

// 12 significant digits; the shared formatter for every serialized float.
std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace singedge
