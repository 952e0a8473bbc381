#pragma once

// Opt-in network retrieval of b-files. Requires cpp-httplib; define
// CPPHTTPLIB_OPENSSL_SUPPORT before inclusion to reach https:// hosts.

#include "runbound/bfile.hpp"

#include <httplib.h>

#include <cstdlib>
#include <sstream>
#include <string>

namespace runbound::oeis {

inline constexpr const char* base_url_env = "RUNBOUND_OEIS_URL";
inline constexpr const char* default_base_url = "https://oeis.org";

inline std::string base_url() {
    const char* v = std::getenv(base_url_env);
    return (v && *v) ? std::string(v) : std::string(default_base_url);
}

/// GET <base>/<id>/b<digits>.txt and parse it.
inline BFile fetch_bfile(const std::string& id, const std::string& base = base_url()) {
    std::string host = base;
    while (!host.empty() && host.back() == '/') host.pop_back();
    httplib::Client cli(host);
    cli.set_follow_location(true);
    cli.set_connection_timeout(10);
    cli.set_read_timeout(30);
    const std::string path = "/" + id + "/" + bfile_name(id);
    auto res = cli.Get(path);
    if (!res) throw parse_error("fetch " + host + path + " failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw parse_error("fetch " + host + path + " returned HTTP " + std::to_string(res->status));
    std::istringstream in(res->body);
    return parse_bfile(in, id);
}

}  // namespace runbound::oeis
