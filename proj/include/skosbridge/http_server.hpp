#pragma once

// Binds LinkedDataService to an HTTP/1.1 listener (cpp-httplib).

#include <chrono>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <string>

#include <httplib.h>

#include "ldservice.hpp"

namespace skosbridge {

class HttpFrontend {
public:
    explicit HttpFrontend(const LinkedDataService& service, std::ostream* log = nullptr)
        : service_(service), log_(log)
    {
        auto handler = [this](const httplib::Request& req, httplib::Response& res) { serve(req, res); };
        server_.Get(".*", handler);
        server_.Post(".*", handler);
        server_.Put(".*", handler);
        server_.Patch(".*", handler);
        server_.Delete(".*", handler);
        server_.Options(".*", handler);
    }

    HttpFrontend(const HttpFrontend&) = delete;
    HttpFrontend& operator=(const HttpFrontend&) = delete;

    /// Port 0 picks a free port. Returns the bound port, or -1.
    int bind(const std::string& host, int port)
    {
        if (port == 0)
            port_ = server_.bind_to_any_port(host);
        else
            port_ = server_.bind_to_port(host, port) ? port : -1;
        return port_;
    }

    /// Blocks until stop() is called.
    bool run() { return server_.listen_after_bind(); }

    void stop() { server_.stop(); }
    void wait_until_ready() const { server_.wait_until_ready(); }
    int port() const { return port_; }

private:
    void serve(const httplib::Request& req, httplib::Response& res)
    {
        auto start = std::chrono::steady_clock::now();
        Request r;
        // httplib drops the body of HEAD responses itself and keeps the
        // GET Content-Length, so HEAD is answered as GET here.
        r.method = req.method == "HEAD" ? "GET" : req.method;
        r.path = req.path;
        for (auto& [k, v] : req.params)
            r.query.emplace(k, v);
        for (auto& [k, v] : req.headers)
            r.headers.emplace_back(k, v);

        Response out = service_.handle(r);
        res.status = out.status;
        std::string content_type = "text/plain";
        for (auto& [k, v] : out.headers) {
            if (detail::ascii_lowercase(k) == "content-type")
                content_type = v;
            else
                res.set_header(k, v);
        }
        res.set_content(std::move(out.body), content_type);

        if (log_) {
            auto micros =
                std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
            char duration[32];
            std::snprintf(duration, sizeof duration, "%.3fms", static_cast<double>(micros) / 1000.0);
            std::lock_guard lock(log_mutex_);
            *log_ << req.method << ' ' << req.path << ' ' << out.status << ' ' << duration << std::endl;
        }
    }

    const LinkedDataService& service_;
    std::ostream* log_;
    std::mutex log_mutex_;
    httplib::Server server_;
    int port_ = -1;
};

} // namespace skosbridge
