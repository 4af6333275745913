#include "cumulantkit/capi.h"

#include <string>

#include "cumulantkit/characters.hpp"
#include "cumulantkit/gap_operad.hpp"
#include "cumulantkit/json_io.hpp"

using namespace ckit;

struct ck_result {
    ck_status status = CK_OK;
    std::string output;
    std::string error;
    bool has_output = false;
};

namespace {

ck_status status_of(errc c) {
    switch (c) {
        case errc::invalid_argument: return CK_ERROR_INVALID_ARGUMENT;
        case errc::invalid_partition: return CK_ERROR_INVALID_PARTITION;
        case errc::invalid_subset: return CK_ERROR_INVALID_SUBSET;
        case errc::invalid_gap: return CK_ERROR_INVALID_GAP;
        case errc::arity_mismatch: return CK_ERROR_ARITY_MISMATCH;
        case errc::colour_mismatch: return CK_ERROR_COLOUR_MISMATCH;
        case errc::not_comparable: return CK_ERROR_NOT_COMPARABLE;
        case errc::unsupported_for_crossing: return CK_ERROR_UNSUPPORTED_FOR_CROSSING;
        case errc::not_in_augmentation_ideal: return CK_ERROR_NOT_IN_AUGMENTATION_IDEAL;
        case errc::empty_excluded: return CK_ERROR_EMPTY_EXCLUDED;
        case errc::truncation_exceeded: return CK_ERROR_TRUNCATION_EXCEEDED;
        case errc::not_invertible: return CK_ERROR_NOT_INVERTIBLE;
        case errc::algebra_mismatch: return CK_ERROR_ALGEBRA_MISMATCH;
        case errc::internal_inconsistency: return CK_ERROR_INTERNAL_INCONSISTENCY;
        case errc::parse_error: return CK_ERROR_PARSE;
    }
    return CK_ERROR_UNKNOWN;
}

std::string require(const char* s, const char* what) {
    if (s == nullptr) fail(errc::invalid_argument, std::string(what) + " must not be NULL");
    return std::string(s);
}

template <typename F>
ck_result* run(F&& f) {
    auto* r = new ck_result();
    try {
        r->output = f(*r);
        r->has_output = true;
    } catch (const error& e) {
        r->status = status_of(e.code());
        r->error = error_to_json(errc_name(e.code()), e.message()).dump();
    } catch (const std::exception& e) {
        r->status = CK_ERROR_UNKNOWN;
        r->error = error_to_json("UnknownError", e.what()).dump();
    }
    return r;
}

bool parse_mode(const std::string& mode) {
    if (mode == "nc") return true;
    if (mode == "sp") return false;
    fail(errc::invalid_argument, "mode must be nc or sp");
}

Algebra parse_algebra(const std::string& name) {
    if (name == "gap" || name == "gap-sp") return Algebra::gap_sp;
    if (name == "gap-nc") return Algebra::gap_nc;
    if (name == "block" || name == "block-sp") return Algebra::block_sp;
    if (name == "block-nc") return Algebra::block_nc;
    fail(errc::invalid_argument, "unknown algebra '" + name + "'");
}

}  // namespace

extern "C" {

ck_status ck_result_status(const ck_result* r) { return r ? r->status : CK_ERROR_INVALID_ARGUMENT; }

const char* ck_result_output(const ck_result* r) {
    return (r && r->has_output) ? r->output.c_str() : nullptr;
}

const char* ck_result_error(const ck_result* r) {
    return (r && !r->error.empty()) ? r->error.c_str() : nullptr;
}

void ck_result_free(ck_result* r) { delete r; }

const char* ck_status_name(ck_status s) {
    switch (s) {
        case CK_OK: return "CK_OK";
        case CK_ERROR_INVALID_ARGUMENT: return "CK_ERROR_INVALID_ARGUMENT";
        case CK_ERROR_INVALID_PARTITION: return "CK_ERROR_INVALID_PARTITION";
        case CK_ERROR_INVALID_SUBSET: return "CK_ERROR_INVALID_SUBSET";
        case CK_ERROR_INVALID_GAP: return "CK_ERROR_INVALID_GAP";
        case CK_ERROR_ARITY_MISMATCH: return "CK_ERROR_ARITY_MISMATCH";
        case CK_ERROR_COLOUR_MISMATCH: return "CK_ERROR_COLOUR_MISMATCH";
        case CK_ERROR_NOT_COMPARABLE: return "CK_ERROR_NOT_COMPARABLE";
        case CK_ERROR_UNSUPPORTED_FOR_CROSSING: return "CK_ERROR_UNSUPPORTED_FOR_CROSSING";
        case CK_ERROR_NOT_IN_AUGMENTATION_IDEAL: return "CK_ERROR_NOT_IN_AUGMENTATION_IDEAL";
        case CK_ERROR_EMPTY_EXCLUDED: return "CK_ERROR_EMPTY_EXCLUDED";
        case CK_ERROR_TRUNCATION_EXCEEDED: return "CK_ERROR_TRUNCATION_EXCEEDED";
        case CK_ERROR_NOT_INVERTIBLE: return "CK_ERROR_NOT_INVERTIBLE";
        case CK_ERROR_ALGEBRA_MISMATCH: return "CK_ERROR_ALGEBRA_MISMATCH";
        case CK_ERROR_INTERNAL_INCONSISTENCY: return "CK_ERROR_INTERNAL_INCONSISTENCY";
        case CK_ERROR_PARSE: return "CK_ERROR_PARSE";
        case CK_VERIFICATION_FAILED: return "CK_VERIFICATION_FAILED";
        case CK_ERROR_UNKNOWN: return "CK_ERROR_UNKNOWN";
    }
    return "?";
}

const char* ck_version(void) { return "1.0.0"; }

ck_result* ck_enumerate(const char* mode, int n) {
    return run([&](ck_result&) {
        bool nc = parse_mode(require(mode, "mode"));
        Json out = Json::array();
        auto all = nc ? enumerate_noncrossing_partitions(n) : enumerate_set_partitions(n);
        for (const Partition& p : all) out.push_back(partition_to_json(p));
        return out.dump();
    });
}

ck_result* ck_nc_closure(const char* partition) {
    return run([&](ck_result&) {
        return partition_to_json(nc_closure(parse_partition(require(partition, "partition")))).dump();
    });
}

ck_result* ck_nc_star(const char* partition) {
    return run([&](ck_result&) {
        return partition_lincomb_to_json(nc_star(parse_partition(require(partition, "partition")))).dump();
    });
}

ck_result* ck_gap_compose(const char* partition, int gap, const char* insert) {
    return run([&](ck_result&) {
        Partition p = parse_partition(require(partition, "partition"));
        Partition q = parse_partition(require(insert, "insert"));
        return partition_to_json(compose_partial(p, gap, q)).dump();
    });
}

ck_result* ck_gap_compose_full(const char* partition, const char* inputs) {
    return run([&](ck_result&) {
        Partition p = parse_partition(require(partition, "partition"));
        Json j = Json::parse(require(inputs, "inputs"), nullptr, false);
        if (j.is_discarded() || !j.is_array()) fail(errc::parse_error, "inputs must be a JSON array");
        std::vector<Partition> qs;
        for (const auto& je : j) qs.push_back(partition_from_json(je));
        return partition_to_json(compose_full(p, qs)).dump();
    });
}

ck_result* ck_block_compose(const char* composition, const char* inputs) {
    return run([&](ck_result&) {
        Composition c = parse_composition(require(composition, "composition"));
        Json j = Json::parse(require(inputs, "inputs"), nullptr, false);
        if (j.is_discarded() || !j.is_array()) fail(errc::parse_error, "inputs must be a JSON array");
        std::vector<Composition> qs;
        for (const auto& je : j) qs.push_back(composition_from_json(je));
        return composition_to_json(block_substitute(c, qs)).dump();
    });
}

ck_result* ck_coproduct(const char* algebra, const char* half, const char* input) {
    return run([&](ck_result&) {
        Algebra alg = parse_algebra(require(algebra, "algebra"));
        std::string h = half ? half : "";
        if (is_gap(alg)) {
            Monomial m = parse_gap_input(require(input, "input"));
            if (is_noncrossing_mode(alg))
                for (const Partition& f : m.factors())
                    if (!is_noncrossing(f))
                        fail(errc::unsupported_for_crossing, "crossing factor in a noncrossing algebra");
            GapTensor t;
            if (h.empty())
                t = gap_coproduct(m);
            else if (h == "prec")
                t = gap_coproduct_prec(m);
            else if (h == "succ")
                t = gap_coproduct_succ(m);
            else
                fail(errc::invalid_argument, "half must be prec or succ");
            return gap_tensor_to_json(t).dump();
        }
        if (!h.empty()) fail(errc::invalid_argument, "block coproducts have no unshuffle halves");
        CMonomial m = parse_block_input(require(input, "input"));
        if (is_noncrossing_mode(alg))
            for (const Partition& f : m.factors())
                if (!is_noncrossing(f))
                    fail(errc::unsupported_for_crossing, "crossing factor in a noncrossing algebra");
        return block_tensor_to_json(block_coproduct(m, is_noncrossing_mode(alg))).dump();
    });
}

ck_result* ck_moebius_table(const char* mode, int max_degree) {
    return run([&](ck_result&) {
        bool nc = parse_mode(require(mode, "mode"));
        LinearForm mu = moebius(nc ? Algebra::block_nc : Algebra::block_sp, max_degree);
        Json out = Json::array();
        for (int n = 1; n <= max_degree; ++n) {
            auto all = nc ? enumerate_noncrossing_partitions(n) : enumerate_set_partitions(n);
            for (const Partition& p : all) {
                Json row;
                row["partition"] = partition_to_json(p);
                row["value"] = rational_to_json(mu(p));
                out.push_back(std::move(row));
            }
        }
        return out.dump();
    });
}

ck_result* ck_psi(const char* which, int inverse, const char* partition) {
    return run([&](ck_result&) {
        Partition p = parse_partition(require(partition, "partition"));
        if (!is_noncrossing(p))
            fail(errc::unsupported_for_crossing, "universal characters live on noncrossing partitions");
        std::string w = require(which, "which");
        if (p.empty()) return rational_to_json(Rational(1)).dump();  // unit of the algebra
        int n = p.degree();
        LinearForm psi;
        if (w == "prec")
            psi = psi_prec(n);
        else if (w == "succ")
            psi = psi_succ(n);
        else if (w == "star")
            psi = psi_star(n);
        else
            fail(errc::invalid_argument, "which must be prec, succ or star");
        Rational v = inverse ? convolution_inverse(bar(psi))(p) : psi(p);
        return rational_to_json(v).dump();
    });
}

ck_result* ck_moments(const char* flavor, const char* cumulants, int n) {
    return run([&](ck_result&) {
        Flavor f = flavor_from_name(require(flavor, "flavor"));
        Json j = Json::parse(require(cumulants, "cumulants"), nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "cumulants must be a JSON array");
        Sequence s = sequence_from_json(j);
        if (n > 0) s.values.resize(static_cast<std::size_t>(n), Rational(0));
        Sequence m;
        switch (f) {
            case Flavor::free_probability: m = free_moments(s); break;
            case Flavor::classical: m = classical_moments(s); break;
            case Flavor::boolean_probability: m = boolean_moments(s); break;
            case Flavor::monotone: m = monotone_moments(s); break;
        }
        return sequence_to_json(m).dump();
    });
}

ck_result* ck_cumulants(const char* flavor, const char* moments, int n) {
    return run([&](ck_result&) {
        Flavor f = flavor_from_name(require(flavor, "flavor"));
        Json j = Json::parse(require(moments, "moments"), nullptr, false);
        if (j.is_discarded()) fail(errc::parse_error, "moments must be a JSON array");
        Sequence s = sequence_from_json(j);
        if (n > 0) s.values.resize(static_cast<std::size_t>(n), Rational(0));
        Sequence c;
        switch (f) {
            case Flavor::free_probability: c = free_cumulants(s); break;
            case Flavor::classical: c = classical_cumulants(s); break;
            default: c = cumulants_from_moments(f, s); break;
        }
        return sequence_to_json(c).dump();
    });
}

ck_result* ck_symbolic(const char* table, const char* flavor, const char* variable, int n) {
    return run([&](ck_result&) {
        Flavor f = flavor_from_name(require(flavor, "flavor"));
        std::string t = require(table, "table");
        if (n < 1) fail(errc::invalid_argument, "degree must be positive");
        Polynomial p;
        std::string var;
        if (t == "moments") {
            p = symbolic_moment(f, n);
            var = variable ? variable : cumulant_variable(f);
        } else if (t == "cumulants") {
            p = symbolic_cumulant(f, n);
            var = variable ? variable : "m";
        } else {
            fail(errc::invalid_argument, "table must be moments or cumulants");
        }
        return Json(p.str(var)).dump();
    });
}

ck_result* ck_phi(const char* lower, const char* upper) {
    return run([&](ck_result&) {
        LatticeInterval iv(parse_partition(require(lower, "lower")),
                           parse_partition(require(upper, "upper")));
        return cmonomial_to_json(interval_fibre(iv)).dump();
    });
}

ck_result* ck_verify(const char* suite, int max_degree, const char* mode) {
    return run([&](ck_result& r) {
        VerifyReport rep = run_verify_suite(require(suite, "suite"), max_degree,
                                            require(mode, "mode"));
        if (!rep.ok()) r.status = CK_VERIFICATION_FAILED;
        return report_to_json(rep).dump();
    });
}

}  // extern "C"
