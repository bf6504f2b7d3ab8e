#include "eptl/trace_io.hpp"

#include <fstream>

namespace eptl {

nlohmann::ordered_json value_to_json(const Value& v) {
    switch (v.kind()) {
    case Value::Kind::Integer: return v.as_integer();
    case Value::Kind::Boolean: return v.as_boolean();
    case Value::Kind::String: return v.as_string();
    case Value::Kind::Set: {
        nlohmann::ordered_json members = nlohmann::ordered_json::array();
        for (const auto& m : v.members()) members.push_back(value_to_json(m));
        return nlohmann::ordered_json{{"set", std::move(members)}};
    }
    }
    return {};
}

Value value_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Value::integer(j.get<std::int64_t>());
    if (j.is_boolean()) return Value::boolean(j.get<bool>());
    if (j.is_string()) return Value::string(j.get<std::string>());
    if (j.is_object() && j.size() == 1 && j.contains("set") && j["set"].is_array()) {
        std::vector<Value> members;
        for (const auto& m : j["set"]) members.push_back(value_from_json(m));
        return Value::set(std::move(members));
    }
    throw TraceError("unsupported value encoding: " + j.dump());
}

AbstractExecution trace_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("events") || !doc["events"].is_array())
        throw TraceError("trace document must be an object with an \"events\" array");

    std::vector<Event> events;
    for (const auto& je : doc["events"]) {
        if (!je.is_object() || !je.contains("id") || !je["id"].is_string() ||
            !je.contains("op") || !je["op"].is_string())
            throw TraceError("each event needs string fields \"id\" and \"op\"");
        Event ev;
        ev.id = je["id"].get<std::string>();
        ev.op.name = je["op"].get<std::string>();
        if (ev.op.name.empty()) throw TraceError("event " + ev.id + ": empty operation name");
        if (je.contains("args")) {
            if (!je["args"].is_array()) throw TraceError("event " + ev.id + ": \"args\" must be an array");
            for (const auto& a : je["args"]) ev.op.args.push_back(value_from_json(a));
        }
        if (je.contains("ret")) ev.op.ret = value_from_json(je["ret"]);
        if (je.contains("replica")) {
            if (!je["replica"].is_string())
                throw TraceError("event " + ev.id + ": \"replica\" must be a string");
            ev.replica = je["replica"].get<std::string>();
        }
        events.push_back(std::move(ev));
    }

    std::vector<std::pair<std::string, std::string>> vis;
    if (doc.contains("vis")) {
        if (!doc["vis"].is_array()) throw TraceError("\"vis\" must be an array of id pairs");
        for (const auto& edge : doc["vis"]) {
            if (!edge.is_array() || edge.size() != 2 || !edge[0].is_string() || !edge[1].is_string())
                throw TraceError("each \"vis\" entry must be a [from, to] id pair");
            vis.emplace_back(edge[0].get<std::string>(), edge[1].get<std::string>());
        }
    }
    return AbstractExecution::validate(std::move(events), vis);
}

nlohmann::ordered_json trace_to_json(const AbstractExecution& a) {
    nlohmann::ordered_json events = nlohmann::ordered_json::array();
    for (const auto& ev : a.events()) {
        nlohmann::ordered_json je;
        je["id"] = ev.id;
        je["op"] = ev.op.name;
        je["args"] = nlohmann::ordered_json::array();
        for (const auto& arg : ev.op.args) je["args"].push_back(value_to_json(arg));
        if (ev.op.ret) je["ret"] = value_to_json(*ev.op.ret);
        if (ev.replica) je["replica"] = *ev.replica;
        events.push_back(std::move(je));
    }
    nlohmann::ordered_json vis = nlohmann::ordered_json::array();
    for (const auto& [from, to] : a.reduction_edges())
        vis.push_back(nlohmann::ordered_json::array({from, to}));
    nlohmann::ordered_json doc;
    doc["events"] = std::move(events);
    doc["vis"] = std::move(vis);
    return doc;
}

AbstractExecution read_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TraceError("cannot open trace file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw TraceError("invalid JSON in " + path + ": " + e.what());
    }
    return trace_from_json(doc);
}

void write_trace_file(const AbstractExecution& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw TraceError("cannot write trace file: " + path);
    out << trace_to_json(a).dump(2) << '\n';
}

} // namespace eptl
