#include "crossfield/ratio.hpp"

#include <cstdio>

namespace crossfield {

std::string percent_string(const Ratio& r, int decimals) {
    if (decimals < 0 || decimals > 9) throw DomainError("percent decimals out of range");
    std::int64_t scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;

    // round(num/den * 100 * scale), half away from zero
    __int128 n = static_cast<__int128>(r.num()) * 100 * scale;
    __int128 d = r.den();
    __int128 q = n >= 0 ? (2 * n + d) / (2 * d) : -((-2 * n + d) / (2 * d));

    bool neg = q < 0;
    if (neg) q = -q;
    std::int64_t integral = static_cast<std::int64_t>(q / scale);
    std::int64_t frac = static_cast<std::int64_t>(q % scale);

    std::string out;
    if (neg) out += '-';
    out += std::to_string(integral);
    if (decimals > 0) {
        std::string f = std::to_string(frac);
        out += '.';
        out.append(static_cast<std::size_t>(decimals) - f.size(), '0');
        out += f;
    }
    out += '%';
    return out;
}

std::string raw_string(const Ratio& r) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", r.value());
    return buf;
}

}  // namespace crossfield
