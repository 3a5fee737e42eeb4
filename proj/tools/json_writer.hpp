#pragma once

// Minimal JSON emitter for the CLI's fixed output schemas.  All numbers are
// printed with %.17g so doubles round-trip losslessly and output is
// byte-identical across runs.

#include <cstdio>
#include <string>
#include <vector>

class JsonWriter {
public:
    void begin_object() { open('{'); }
    void end_object() { close('}'); }
    void begin_array() { open('['); }
    void end_array() { close(']'); }

    void key(const std::string& k) {
        comma();
        out_ += '"' + escape(k) + "\":";
        just_keyed_ = true;
    }

    void value(double x) {
        comma();
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out_ += buf;
    }
    void value(int x) { value_raw(std::to_string(x)); }
    void value(long x) { value_raw(std::to_string(x)); }
    void value(unsigned long x) { value_raw(std::to_string(x)); }
    void value(bool b) { value_raw(b ? "true" : "false"); }
    void value(const std::string& s) {
        comma();
        out_ += '"' + escape(s) + '"';
    }
    void value(const char* s) { value(std::string(s)); }

    const std::string& str() const { return out_; }

private:
    void value_raw(const std::string& s) {
        comma();
        out_ += s;
    }
    void open(char c) {
        comma();
        out_ += c;
        fresh_.push_back(true);
    }
    void close(char c) {
        out_ += c;
        fresh_.pop_back();
        just_keyed_ = false;
    }
    void comma() {
        if (just_keyed_) {
            just_keyed_ = false;
            return;
        }
        if (!fresh_.empty()) {
            if (!fresh_.back()) out_ += ',';
            fresh_.back() = false;
        }
    }
    static std::string escape(const std::string& s) {
        std::string r;
        for (char c : s) {
            if (c == '"' || c == '\\') r += '\\';
            r += c;
        }
        return r;
    }

    std::string out_;
    std::vector<bool> fresh_;
    bool just_keyed_ = false;
};
