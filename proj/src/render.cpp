#include "opq/render.hpp"

namespace opq {

Json to_json(const InfChar& chi)
{
    Json out = Json::array();
    for (HalfInt h : chi.entries()) {
        out.push_back(h.to_string());
    }
    return out;
}

Json to_json(KType k)
{
    return Json{{"a", k.a}, {"b", k.b}};
}

Json to_json(const Rep& r)
{
    Json out;
    out["p"] = r.sig().p;
    out["q"] = r.sig().q;
    out["sign"] = std::string(1, to_char(r.sign()));
    out["lambda"] = r.lambda().to_string();
    out["zero"] = r.is_zero();
    out["regular"] = is_regular(r);
    if (r.is_zero()) {
        out["inf_char"] = nullptr;
        out["min_k_type"] = nullptr;
    } else {
        out["inf_char"] = to_json(inf_char(r));
        out["min_k_type"] = to_json(minimal_k_type(r));
    }
    return out;
}

Json to_json(const SpectrumEntry& e)
{
    Json out;
    out["sign"] = std::string(1, to_char(e.rep.sign()));
    out["mu"] = e.rep.lambda().to_string();
    out["ochar"] = std::string(to_string(e.ochar));
    out["n"] = e.n;
    return out;
}

Json to_json(const Spectrum& s)
{
    Json entries = Json::array();
    for (const auto& e : s.entries) {
        entries.push_back(to_json(e));
    }
    Json out;
    out["entries"] = std::move(entries);
    out["truncated"] = s.truncated;
    out["zero_omitted"] = s.zero_omitted;
    return out;
}

} // namespace opq
