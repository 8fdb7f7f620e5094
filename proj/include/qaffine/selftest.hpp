#pragma once

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qaffine/cluster.hpp"
#include "qaffine/paths.hpp"
#include "qaffine/qlaurent.hpp"
#include "qaffine/rmatrix.hpp"
#include "qaffine/sl2.hpp"
#include "qaffine/tsystem.hpp"

namespace qaffine {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget = 0.0;
    std::string detail;
};

namespace selftest_detail {

inline Int binom(int n, int k) {
    Int r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

/// Deterministic sample of prime snakes shared by the extended-T-system,
/// thinness and factorization criteria: the length-5 minimal snake of rank 4
/// plus 56 pseudo-random prime snakes of length <= 5 across ranks 1..4.
inline const std::vector<Snake>& snake_sample() {
    static const std::vector<Snake> sample = [] {
        std::vector<Snake> out;
        out.push_back(make_snake({{3, 0}, {3, 2}, {2, 5}, {2, 7}, {2, 9}}, 4));
        std::mt19937 rng(20240904);
        for (int rank = 1; rank <= 4; ++rank)
            for (int t = 0; t < 14; ++t) {
                int len = 2 + t % 4;
                std::uniform_int_distribution<int> node(1, rank);
                std::vector<LatticePoint> pts;
                int i = node(rng);
                pts.push_back({i, i % 2});
                for (int u = 1; u < len; ++u) {
                    int i2 = node(rng);
                    int lo = std::abs(i2 - pts.back().i) + 2;
                    int hi = std::min(pts.back().i + i2, 2 * rank + 2 - pts.back().i - i2);
                    std::uniform_int_distribution<int> step(0, (hi - lo) / 2);
                    pts.push_back({i2, pts.back().k + lo + 2 * step(rng)});
                }
                out.push_back(make_snake(std::move(pts), rank));
            }
        return out;
    }();
    return sample;
}

inline int snake_rank(const Snake& s) { return s.rank; }

} // namespace selftest_detail

/// The acceptance criteria, each checked exactly and timed against its
/// budget. Results stream to `live` as one PASS/FAIL line per criterion.
inline std::vector<CriterionResult> run_acceptance(std::ostream* live = nullptr) {
    using selftest_detail::binom;
    using selftest_detail::snake_sample;

    std::vector<std::tuple<int, std::string, double, std::function<bool(std::string&)>>> specs;

    specs.emplace_back(1, "q-binomial Pascal and alternating-sum identities, r <= 15", 1.0,
                       [](std::string& detail) {
                           for (int r = 0; r <= 15; ++r)
                               for (int k = 0; k <= r; ++k) {
                                   QLaurent rhs;
                                   if (k <= r - 1 && r >= 1)
                                       rhs += QLaurent::q_power(-k) * q_binomial(r - 1, k);
                                   if (k >= 1)
                                       rhs += QLaurent::q_power(r - k) * q_binomial(r - 1, k - 1);
                                   if (r >= 1 && q_binomial(r, k) != rhs) {
                                       detail = "Pascal identity failed";
                                       return false;
                                   }
                               }
                           for (int r = 1; r <= 15; ++r) {
                               QLaurent sum;
                               for (int k = 0; k <= r; ++k) {
                                   QLaurent t = q_binomial(r, k) * QLaurent::q_power((1 - r) * k);
                                   sum += (k % 2 == 0) ? t : -t;
                               }
                               if (!sum.is_zero()) {
                                   detail = "alternating sum failed at r=" + std::to_string(r);
                                   return false;
                               }
                           }
                           return true;
                       });

    specs.emplace_back(2, "path counts and q=1 totals equal binomial(l+1,i), l <= 6", 1.0,
                       [](std::string& detail) {
                           for (int l = 1; l <= 6; ++l)
                               for (int i = 1; i <= l; ++i) {
                                   Int expect = binom(l + 1, i);
                                   if (Int(enumerate_paths(i, i % 2, l).size()) != expect) {
                                       detail = "path count mismatch";
                                       return false;
                                   }
                                   LoopPolynomial chi = q_character(make_snake({{i, i % 2}}, l));
                                   if (chi.coefficient_sum() != expect) {
                                       detail = "character total mismatch";
                                       return false;
                                   }
                               }
                           return true;
                       });

    specs.emplace_back(3, "closed sl2 character equals the path formula, r <= 10", 5.0,
                       [](std::string& detail) {
                           for (int r = 0; r <= 10; ++r)
                               for (int s : {r % 2, r % 2 + 4}) {
                                   if (q_character_closed(EvalModule(r, s)) !=
                                       q_character(snake_of_kr(1, s - r + 1, r, 1))) {
                                       detail = "mismatch at r=" + std::to_string(r);
                                       return false;
                                   }
                               }
                           return true;
                       });

    specs.emplace_back(
        4, "sl2 matrices satisfy the sampled loop relations and eigenvalue series", 10.0,
        [](std::string& detail) {
            QLaurent unit = QLaurent::q_power(1) - QLaurent::q_power(-1);
            for (int r = 0; r <= 4; ++r)
                for (int s : {r % 2, 1 - r % 2})
                    for (int p = -2; p <= 2; ++p) {
                        EvalModule m(r, s);
                        QMatrix kk = generator_matrix(m, GenTag::K);
                        QMatrix kinv = k_matrix_inverse(m);
                        QMatrix xp = generator_matrix(m, GenTag::XPlus, p);
                        if (mat_mul(kk, mat_mul(xp, kinv)) !=
                            mat_scale(xp, QLaurent::q_power(2))) {
                            detail = "K-conjugation failed";
                            return false;
                        }
                        for (int mm = -2; mm <= 2; ++mm) {
                            QMatrix lhs = mat_scale(
                                commutator(generator_matrix(m, GenTag::XPlus, p),
                                           generator_matrix(m, GenTag::XMinus, mm)),
                                unit);
                            int nn = p + mm;
                            QMatrix rhs = zero_matrix(r + 1);
                            if (nn >= 0) rhs = phi_matrix(m, true, nn);
                            if (nn <= 0) rhs = mat_sub(rhs, phi_matrix(m, false, nn));
                            if (lhs != rhs) {
                                detail = "commutator relation failed";
                                return false;
                            }
                        }
                    }
            for (int r = 0; r <= 5; ++r)
                for (int k = 0; k <= r; ++k)
                    if (!drinfeld_series_check(EvalModule(r, r % 2), k, 10)) {
                        detail = "eigenvalue series mismatch";
                        return false;
                    }
            return true;
        });

    specs.emplace_back(
        5, "T-system on the desk grid and extended T-system on 57 prime snakes", 60.0,
        [](std::string& detail) {
            for (int l = 1; l <= 4; ++l)
                for (int i = 1; i <= l; ++i)
                    for (int r = 1; r <= 3; ++r)
                        for (int k : {i % 2, i % 2 + 6})
                            if (!verify_t_system(i, k, r, l)) {
                                detail = "T-system failed";
                                return false;
                            }
            for (const Snake& s : snake_sample())
                if (!verify_extended_t_system(s, s.rank)) {
                    detail = "extended T-system failed on " + s.str();
                    return false;
                }
            return true;
        });

    specs.emplace_back(
        6, "sampled snake characters are thin, special and anti-special", 60.0,
        [](std::string& detail) {
            for (const Snake& s : snake_sample()) {
                LoopPolynomial chi = q_character(s);
                if (!chi.all_coefficients_one() || chi.dominant_monomials().size() != 1 ||
                    chi.antidominant_monomials().size() != 1 ||
                    chi.dominant_monomials()[0] != s.highest_weight()) {
                    detail = "failed on " + s.str();
                    return false;
                }
            }
            return true;
        });

    specs.emplace_back(
        7, "every sampled character monomial factors below the highest weight", 30.0,
        [](std::string& detail) {
            for (const Snake& s : snake_sample()) {
                LoopPolynomial chi = q_character(s);
                LoopMonomial top = s.highest_weight();
                for (const auto& [m, c] : chi.terms()) {
                    auto f = factor_into_roots(m, top);
                    if (!f) {
                        detail = "no factorization on " + s.str();
                        return false;
                    }
                    for (const auto& [p, e] : *f)
                        if (e > 0) {
                            detail = "positive root exponent on " + s.str();
                            return false;
                        }
                }
            }
            return true;
        });

    specs.emplace_back(
        8, "special-position character identities, string lengths <= 4", 30.0,
        [](std::string& detail) {
            for (int r1 = 1; r1 <= 4; ++r1)
                for (int r2 = 1; r2 <= 4; ++r2) {
                    for (int p = 0; p < std::min(r1, r2); ++p)
                        for (int sign : {+1, -1}) {
                            int s1 = r1 % 2;
                            int s2 = s1 + sign * (r1 + r2 - 2 * p);
                            auto d = special_position(r1, r2, s1, s2);
                            if (!d || d->sign != sign || d->p != p ||
                                !tensor_identity_check(*d, r1, r2, s1, s2)) {
                                detail = "decomposition failed";
                                return false;
                            }
                        }
                    int s1 = r1 % 2, s2 = s1 + r1 + r2 + 4;
                    if (special_position(r1, r2, s1, s2)) {
                        detail = "false special position";
                        return false;
                    }
                    LoopPolynomial prod = q_character_closed(EvalModule(r1, s1)) *
                                          q_character_closed(EvalModule(r2, s2));
                    if (prod.dominant_monomials().size() != 1) {
                        detail = "general position not special";
                        return false;
                    }
                }
            return true;
        });

    specs.emplace_back(9, "sl2 determinant formula equals the path formula, r <= 6", 5.0,
                       [](std::string& detail) {
                           for (int r = 1; r <= 6; ++r)
                               for (int k : {-1, 1})
                                   if (kr_determinant_sl2(r, k) != kr_character(1, k, r, 1)) {
                                       detail = "determinant mismatch at r=" + std::to_string(r);
                                       return false;
                                   }
                           return true;
                       });

    specs.emplace_back(
        10, "cluster mutation reproduces KR characters on the stable region, l <= 3", 120.0,
        [](std::string& detail) {
            for (int l = 1; l <= 3; ++l) {
                int rounds = (l + 2) / 2; // ceil((l+1)/2)
                KrReport rep = verify_kr_correspondence(l, 10, rounds);
                std::ostringstream os;
                os << "l=" << l << ": " << rep.stable_mutable() << " stable";
                if (rep.stable_mutable() < static_cast<size_t>(3 * l)) {
                    detail = os.str() + " (stable region too small)";
                    return false;
                }
                if (!rep.all_checked_pass()) {
                    detail = os.str() + " (oracle mismatch)";
                    return false;
                }
                if (!rep.shape_restored_on_stable_interior()) {
                    detail = os.str() + " (quiver shape not restored)";
                    return false;
                }
            }
            return true;
        });

    specs.emplace_back(
        11, "Yang-Baxter, regularity and unitarity of the fundamental matrix", 60.0,
        [](std::string& detail) {
            if (!check_ybe(1, true) || !check_ybe(2, true)) {
                detail = "exact Yang-Baxter failed";
                return false;
            }
            if (!check_ybe(3, false, 24)) {
                detail = "sampled Yang-Baxter failed";
                return false;
            }
            for (int l = 1; l <= 3; ++l) {
                if (!check_regularity(l)) {
                    detail = "regularity failed at l=" + std::to_string(l);
                    return false;
                }
                auto f = check_unitarity(l);
                if (!f || f->set_variable_to_one(1).is_zero()) {
                    detail = "unitarity failed at l=" + std::to_string(l);
                    return false;
                }
            }
            return true;
        });

    std::vector<CriterionResult> results;
    for (auto& [id, name, budget, fn] : specs) {
        CriterionResult res;
        res.id = id;
        res.name = name;
        res.budget = budget;
        auto t0 = std::chrono::steady_clock::now();
        try {
            res.pass = fn(res.detail);
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (res.pass && res.seconds >= res.budget) {
            res.pass = false;
            res.detail = "over time budget";
        }
        if (live) {
            std::ostringstream line;
            line << (res.pass ? "PASS" : "FAIL") << "  " << res.id << "  " << res.name << "  ["
                 << std::fixed;
            line.precision(2);
            line << res.seconds << "s < " << res.budget << "s]";
            if (!res.detail.empty()) line << "  -- " << res.detail;
            (*live) << line.str() << std::endl;
        }
        results.push_back(std::move(res));
    }
    return results;
}

} // namespace qaffine
