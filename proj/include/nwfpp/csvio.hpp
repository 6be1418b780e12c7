#pragma once

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace nwfpp {

// 17 significant digits: round-trippable doubles, locale-independent
inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

class csv_writer {
public:
    explicit csv_writer(const std::string& path) : f_(std::fopen(path.c_str(), "wb")) {
        if (!f_) throw std::runtime_error("csv_writer: cannot open " + path);
    }
    csv_writer(const csv_writer&) = delete;
    csv_writer& operator=(const csv_writer&) = delete;
    ~csv_writer() {
        if (f_) std::fclose(f_);
    }

    template <class... Ts>
    void row(const Ts&... fields) {
        bool first = true;
        ((put_field(fields, first), first = false), ...);
        std::fputc('\n', f_);
    }

    void line(const std::string& s) {
        std::fputs(s.c_str(), f_);
        std::fputc('\n', f_);
    }

    void close() {
        if (f_) {
            std::fclose(f_);
            f_ = nullptr;
        }
    }

private:
    void put_field(double x, bool first) {
        sep(first);
        std::fputs(format_g17(x).c_str(), f_);
    }
    void put_field(const char* s, bool first) {
        sep(first);
        std::fputs(s, f_);
    }
    void put_field(const std::string& s, bool first) { put_field(s.c_str(), first); }
    template <class T>
    void put_field(T v, bool first)
        requires std::is_integral_v<T>
    {
        sep(first);
        std::fprintf(f_, "%lld", static_cast<long long>(v));
    }
    void sep(bool first) {
        if (!first) std::fputc(',', f_);
    }

    std::FILE* f_;
};

} // namespace nwfpp
