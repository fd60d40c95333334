#include "bsp/bsp.h"

#include "bsp/errors.hpp"
#include "bsp/jsonio.hpp"
#include "bsp/nilpotency.hpp"
#include "bsp/norms.hpp"
#include "bsp/seqvec.hpp"
#include "bsp/spaces.hpp"
#include "bsp/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

struct bsp_vec {
    bsp::FinVec v;
};

namespace {

thread_local std::string g_last_error;

bsp_status fail(bsp_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Copies s into a malloc'd buffer (released by bsp_string_free).
void emit(char** out, const std::string& s) {
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
bsp_status guarded(Fn&& fn) {
    try {
        fn();
        return BSP_OK;
    } catch (const bsp::ParseError& e) {
        return fail(BSP_ERR_PARSE, e.what());
    } catch (const bsp::LimitError& e) {
        return fail(BSP_ERR_LIMIT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(BSP_ERR_INVALID, e.what());
    } catch (const std::domain_error& e) {
        return fail(BSP_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(BSP_ERR_INTERNAL, e.what());
    }
}

bool null_args(bool ok) {
    if (!ok) fail(BSP_ERR_INVALID, "null argument");
    return !ok;
}

}  // namespace

extern "C" {

const char* bsp_version(void) {
    return "1.0.0";
}

const char* bsp_last_error(void) {
    return g_last_error.c_str();
}

void bsp_string_free(char* s) {
    std::free(s);
}

bsp_status bsp_vec_parse(const char* text, bsp_vec** out) {
    if (null_args(text && out)) return BSP_ERR_INVALID;
    return guarded([&] { *out = new bsp_vec{bsp::parse_vector(text)}; });
}

bsp_status bsp_vec_from_json(const char* json_text, bsp_vec** out) {
    if (null_args(json_text && out)) return BSP_ERR_INVALID;
    return guarded([&] { *out = new bsp_vec{bsp::vec_from_json_text(json_text)}; });
}

bsp_status bsp_vec_to_text(const bsp_vec* v, char** out) {
    if (null_args(v && out)) return BSP_ERR_INVALID;
    return guarded([&] { emit(out, bsp::format_vector(v->v)); });
}

bsp_status bsp_vec_to_json(const bsp_vec* v, char** out) {
    if (null_args(v && out)) return BSP_ERR_INVALID;
    return guarded([&] { emit(out, bsp::vec_to_json(v->v).dump()); });
}

bsp_status bsp_vec_support_size(const bsp_vec* v, int64_t* out) {
    if (null_args(v && out)) return BSP_ERR_INVALID;
    *out = static_cast<int64_t>(v->v.support_size());
    return BSP_OK;
}

bsp_status bsp_vec_coeff(const bsp_vec* v, int64_t index, double* out) {
    if (null_args(v && out)) return BSP_ERR_INVALID;
    return guarded([&] {
        if (index < 1) throw std::invalid_argument("index must be >= 1");
        *out = v->v.coeff(index);
    });
}

void bsp_vec_free(bsp_vec* v) {
    delete v;
}

bsp_status bsp_norm(const char* space, const bsp_vec* v, double* out) {
    if (null_args(space && v && out)) return BSP_ERR_INVALID;
    return guarded([&] { *out = bsp::norm_in(bsp::SpaceLabel::parse(space), v->v); });
}

bsp_status bsp_norm_with_witness(const char* space, const bsp_vec* v, double* out,
                                 char** witness_json) {
    if (null_args(space && v && out && witness_json)) return BSP_ERR_INVALID;
    return guarded([&] {
        const auto label = bsp::SpaceLabel::parse(space);
        nlohmann::json witness;
        switch (label.family()) {
            case bsp::Family::Schreier: {
                const auto r = bsp::schreier_norm(v->v, label.param());
                *out = r.value;
                if (r.witness) witness = bsp::witness_to_json(*r.witness);
                break;
            }
            case bsp::Family::Baernstein: {
                const auto r = bsp::baernstein_norm(v->v, label.param());
                *out = r.value;
                if (r.witness) witness = bsp::witness_to_json(*r.witness);
                break;
            }
            default:
                *out = bsp::norm_in(label, v->v);
                break;
        }
        emit(witness_json, witness.dump());
    });
}

bsp_status bsp_norm_oracle(const char* space, const bsp_vec* v, double* out) {
    if (null_args(space && v && out)) return BSP_ERR_INVALID;
    return guarded([&] {
        const auto label = bsp::SpaceLabel::parse(space);
        switch (label.family()) {
            case bsp::Family::Schreier:
                *out = bsp::schreier_norm_oracle(v->v, label.param());
                break;
            case bsp::Family::Baernstein:
                *out = bsp::baernstein_norm_oracle(v->v, label.param());
                break;
            default:
                throw std::invalid_argument("no oracle for this space family");
        }
    });
}

bsp_status bsp_order(const char* y, const char* z, int* cmp) {
    if (null_args(y && z && cmp)) return BSP_ERR_INVALID;
    return guarded([&] {
        switch (bsp::compare(bsp::SpaceLabel::parse(y), bsp::SpaceLabel::parse(z))) {
            case bsp::Order::Less: *cmp = -1; break;
            case bsp::Order::Equal: *cmp = 0; break;
            case bsp::Order::Greater: *cmp = 1; break;
        }
    });
}

bsp_status bsp_inclusion_constant(const char* y, const char* z, char** json_out) {
    if (null_args(y && z && json_out)) return BSP_ERR_INVALID;
    return guarded([&] {
        const auto a =
            bsp::inclusion_constant(bsp::SpaceLabel::parse(y), bsp::SpaceLabel::parse(z));
        emit(json_out, bsp::inclusion_to_json(a).dump());
    });
}

bsp_status bsp_classify(const char* y, const char* z, char** json_out) {
    if (null_args(y && z && json_out)) return BSP_ERR_INVALID;
    return guarded([&] {
        const auto c =
            bsp::classify_pair(bsp::SpaceLabel::parse(y), bsp::SpaceLabel::parse(z));
        emit(json_out, bsp::classification_to_json(c).dump());
    });
}

bsp_status bsp_jameson_constant(double p, double q, double* out) {
    if (null_args(out != nullptr)) return BSP_ERR_INVALID;
    return guarded([&] { *out = bsp::jameson_constant(p, q); });
}

bsp_status bsp_label_canonical(const char* label, char** out) {
    if (null_args(label && out)) return BSP_ERR_INVALID;
    return guarded([&] { emit(out, bsp::SpaceLabel::parse(label).to_string()); });
}

bsp_status bsp_spec_canonical(const char* spec, char** out) {
    if (null_args(spec && out)) return BSP_ERR_INVALID;
    return guarded([&] {
        emit(out, bsp::canonicalize(bsp::DirectSumSpec::parse(spec)).to_string());
    });
}

bsp_status bsp_nilpotency_index(const char* spec, int* k) {
    if (null_args(spec && k)) return BSP_ERR_INVALID;
    return guarded([&] { *k = bsp::nilpotency_index(bsp::DirectSumSpec::parse(spec)); });
}

bsp_status bsp_witness_chain(const char* spec, char** json_out) {
    if (null_args(spec && json_out)) return BSP_ERR_INVALID;
    return guarded([&] {
        const auto chain = bsp::witness_chain(bsp::DirectSumSpec::parse(spec));
        nlohmann::json j = nlohmann::json::array();
        for (const auto& label : chain) j.push_back(label.to_string());
        emit(json_out, j.dump());
    });
}

bsp_status bsp_certify(const char* spec, uint64_t exhaustive_limit, char** json_out) {
    if (null_args(spec && json_out)) return BSP_ERR_INVALID;
    return guarded([&] {
        const auto report = bsp::certify(bsp::DirectSumSpec::parse(spec), exhaustive_limit);
        emit(json_out, bsp::cert_report_to_json(report).dump());
    });
}

bsp_status bsp_inclusion_trials(const char* y, const char* z, int64_t trials,
                                uint64_t seed, int record_ratios, char** json_out) {
    if (null_args(y && z && json_out)) return BSP_ERR_INVALID;
    return guarded([&] {
        if (trials < 1) throw std::invalid_argument("trials must be positive");
        const auto report =
            bsp::run_inclusion_trials(bsp::SpaceLabel::parse(y), bsp::SpaceLabel::parse(z),
                                      trials, seed, record_ratios != 0);
        emit(json_out, bsp::trial_report_to_json(report, record_ratios != 0).dump());
    });
}

bsp_status bsp_oracle_trials(const char* space, int max_support, int64_t trials,
                             uint64_t seed, char** json_out) {
    if (null_args(space && json_out)) return BSP_ERR_INVALID;
    return guarded([&] {
        if (trials < 1) throw std::invalid_argument("trials must be positive");
        const auto report =
            bsp::run_oracle_trials(bsp::SpaceLabel::parse(space), max_support, trials, seed);
        emit(json_out, bsp::trial_report_to_json(report).dump());
    });
}

bsp_status bsp_jameson_check(double p, double q, int64_t trials, uint64_t seed,
                             char** json_out) {
    if (null_args(json_out != nullptr)) return BSP_ERR_INVALID;
    return guarded([&] {
        if (trials < 1) throw std::invalid_argument("trials must be positive");
        const auto report = bsp::check_jameson(p, q, trials, seed);
        emit(json_out, bsp::trial_report_to_json(report).dump());
    });
}

bsp_status bsp_rearrangement_check(double p, int64_t trials, uint64_t seed,
                                   char** json_out) {
    if (null_args(json_out != nullptr)) return BSP_ERR_INVALID;
    return guarded([&] {
        if (trials < 1) throw std::invalid_argument("trials must be positive");
        const auto report = bsp::check_rearrangement(p, trials, seed);
        emit(json_out, bsp::trial_report_to_json(report).dump());
    });
}

bsp_status bsp_domination_probe(double p, double q, int blocks, double c, int64_t budget,
                                uint64_t seed, char** json_out) {
    if (null_args(json_out != nullptr)) return BSP_ERR_INVALID;
    return guarded([&] {
        const auto result = bsp::domination_probe(p, q, blocks, c, budget, seed);
        emit(json_out, bsp::probe_result_to_json(p, q, blocks, c, budget, result).dump());
    });
}

bsp_status bsp_make_xk(int k, const int64_t* subseq, size_t subseq_len, double p,
                       bsp_vec** out) {
    if (null_args(out != nullptr)) return BSP_ERR_INVALID;
    return guarded([&] {
        std::span<const bsp::Index> span;
        if (subseq) span = {subseq, subseq_len};
        *out = new bsp_vec{bsp::make_xk(k, span, p)};
    });
}

}  // extern "C"
