#include <doctest.h>

#include <algorithm>
#include <random>

#include "planar/errors.hpp"
#include "planar/invariants.hpp"
#include "planar/presentation.hpp"
#include "planar/realize.hpp"
#include "support/oracles.hpp"

using namespace planar;

namespace {

OpenBook annulus_with_twists(int p) {
    OpenBook ob = identity_open_book(1);
    for (int k = 0; k < p; ++k)
        ob = append_twist(ob, Curve{1}, +1);
    return ob;
}

OpenBook hopf_annulus() { return positive_stabilization(standard_s3_open_book(), {}).book; }

}  // namespace

TEST_CASE("to_linking_presentation") {
    SUBCASE("identity book gives the zero matrix") {
        for (int h = 0; h <= 4; ++h)
            CHECK(to_linking_presentation(identity_open_book(h)).matrix == IntMatrix::zero(h));
    }
    SUBCASE("annulus with p right twists: |det| = p") {
        for (int p = 1; p <= 6; ++p) {
            const auto m = to_linking_presentation(annulus_with_twists(p)).matrix;
            CHECK(m.rows() == static_cast<std::size_t>(p + 1));
            CHECK(abs(determinant(m)) == p);
            CHECK(oracle::cofactor_det(m) * oracle::cofactor_det(m) == p * p);
        }
        CHECK(to_linking_presentation(annulus_with_twists(1)).matrix == IntMatrix{{0, 1}, {1, -1}});
    }
    SUBCASE("block_half is a 5x5 presentation of S3") {
        const auto m = to_linking_presentation(block_half()).matrix;
        CHECK(m == IntMatrix{{0, 0, 1, 0, 1},
                             {0, 0, 0, 1, 1},
                             {1, 0, -1, 0, 0},
                             {0, 1, 0, -1, 0},
                             {1, 1, 0, 0, 1}});
        CHECK(abs(oracle::cofactor_det(m)) == 1);
    }
    SUBCASE("interleaved letters are rejected") {
        auto ob = append_twist(append_twist(identity_open_book(3), Curve{1, 2}, 1), Curve{2, 3}, 1);
        try {
            to_linking_presentation(ob);
            FAIL("expected NonLaminarWord");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NonLaminarWord);
        }
        CHECK_FALSE(laminar_word(ob.word()));
    }
}

TEST_CASE("permuting disjoint letters permutes the presentation") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const auto ob = oracle::random_laminar_book(6, 6, rng);
        const auto& word = ob.word();
        for (std::size_t k = 0; k + 1 < word.size(); ++k) {
            const auto& a = word[k].curve.enclosed();
            const auto& b = word[k + 1].curve.enclosed();
            std::vector<int> common;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (!common.empty())
                continue;
            auto swapped_word = word;
            std::swap(swapped_word[k], swapped_word[k + 1]);
            const OpenBook swapped(ob.page(), swapped_word);
            std::vector<std::size_t> perm(ob.holes() + word.size());
            for (std::size_t i = 0; i < perm.size(); ++i)
                perm[i] = i;
            std::swap(perm[ob.holes() + k], perm[ob.holes() + k + 1]);
            CHECK(permuted(to_linking_presentation(ob).matrix, perm) == to_linking_presentation(swapped).matrix);
            CHECK(first_homology(swapped) == first_homology(ob));
        }
    }
}

TEST_CASE("contact_surgery_on_page_curve") {
    SUBCASE("sign rule") {
        const auto ob = contact_surgery_on_page_curve(identity_open_book(1), Curve{1}, -1);
        CHECK(ob.word().back() == TwistLetter{Curve{1}, 1});
        const auto plus = contact_surgery_on_page_curve(identity_open_book(1), Curve{1}, +1);
        CHECK(plus.word().back() == TwistLetter{Curve{1}, -1});
    }
    SUBCASE("-1 then +1 on the same curve cancels in H1 and d3") {
        const auto base = stabilize_for_legendrian(hopf_annulus(), Curve{1}).book;
        const auto after = contact_surgery_on_page_curve(contact_surgery_on_page_curve(base, Curve{1, 2}, -1),
                                                         Curve{1, 2}, +1);
        CHECK(after.word().size() == base.word().size() + 2);
        CHECK(after.word()[after.word().size() - 2] == TwistLetter{Curve{1, 2}, 1});
        CHECK(after.word().back() == TwistLetter{Curve{1, 2}, -1});
        CHECK(first_homology(after) == first_homology(base));
        CHECK(d3_of(after) == d3_of(base));

        const auto plain = contact_surgery_on_page_curve(
            contact_surgery_on_page_curve(identity_open_book(2), Curve{1, 2}, -1), Curve{1, 2}, +1);
        CHECK(first_homology(plain) == first_homology(identity_open_book(2)));
    }
    SUBCASE("+1 surgery on the stabilized core of the Hopf annulus is block_half") {
        const auto once = stabilize_legendrian_once(hopf_annulus(), Curve{1}, +1);
        const auto ob = contact_surgery_on_page_curve(once.book, once.stabilized, +1);
        CHECK(ob.word() == block_half().word());
        CHECK(ob.contact()->record == block_half().contact()->record);
        CHECK(d3_of(ob) == Rational(1, 2));
    }
    SUBCASE("untracked curves are rejected when contact data is present") {
        const auto ob = positive_stabilization(hopf_annulus(), {1}).book;
        try {
            contact_surgery_on_page_curve(ob, Curve{1, 2}, +1);
            FAIL("expected UntrackedCurve");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UntrackedCurve);
        }
        CHECK_THROWS_AS(contact_surgery_on_page_curve(ob, Curve{3}, +1), Error);
    }
    SUBCASE("a single +1 surgery on the tb -1 unknot is degenerate") {
        const auto ob = contact_surgery_on_page_curve(hopf_annulus(), Curve{1}, +1);
        CHECK(first_homology(ob) == AbelianGroup{1, {}});
        try {
            d3_of(ob);
            FAIL("expected DegeneratePresentation");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::DegeneratePresentation);
        }
    }
}

TEST_CASE("stabilize_legendrian_record") {
    const SurgeryComponent unknot{-1, 0, -1};
    CHECK(stabilize_legendrian_record(unknot, +1) == SurgeryComponent{-2, 1, -1});
    CHECK(stabilize_legendrian_record(unknot, -1) == SurgeryComponent{-2, -1, -1});
    CHECK(stabilize_legendrian_record(stabilize_legendrian_record(unknot, +1), -1) ==
          stabilize_legendrian_record(stabilize_legendrian_record(unknot, -1), +1));
}

TEST_CASE("lutz_twist") {
    SUBCASE("page stays planar and the word laminar on identity books") {
        for (int h = 1; h <= 4; ++h)
            for (int i = 1; i <= h; ++i)
                for (int orient : {1, -1}) {
                    const auto ob = lutz_twist(identity_open_book(h), Curve{i}, orient);
                    CHECK(ob.holes() == h + 4);
                    CHECK(ob.word().size() == 6);
                    CHECK(laminar_word(ob.word()));
                    CHECK(first_homology(ob) == AbelianGroup{static_cast<std::size_t>(h), {}});
                }
    }
    SUBCASE("word shape for orientation +1") {
        const auto ob = lutz_twist(identity_open_book(1), Curve{1}, +1);
        CHECK(ob.word() == std::vector<TwistLetter>{{Curve{2}, 1},
                                                    {Curve{3}, 1},
                                                    {Curve{4}, 1},
                                                    {Curve{5}, 1},
                                                    {Curve{1}, -1},
                                                    {Curve{1, 2, 4}, -1}});
    }
    SUBCASE("d2 tracking") {
        const auto once = lutz_twist(identity_open_book(2), Curve{1}, +1);
        CHECK(d2_difference(once) == std::vector<Int>{1, 0});
        const auto back = lutz_twist(once, Curve{1}, -1);
        CHECK(d2_difference(back) == std::vector<Int>{0, 0});
    }
    SUBCASE("on S3 pipelines the manifold stays S3 and records match the page model") {
        for (int orient : {1, -1}) {
            const auto ob = lutz_twist(hopf_annulus(), Curve{1}, orient);
            CHECK(abs(determinant(to_linking_presentation(ob).matrix)) == 1);
            REQUIRE(ob.contact());
            const auto& rec = ob.contact()->record;
            REQUIRE(rec.size() == 2);
            CHECK(rec.components()[0] == SurgeryComponent{-1, 0, 1});
            CHECK(rec.components()[1] == SurgeryComponent{-3, 2 * orient, 1});
            CHECK(rec.linking()(0, 1) == -1);
            CHECK(derive_record(ob) == rec);
            CHECK(abs(determinant(rec.topological_matrix())) == 1);
        }
    }
}

TEST_CASE("derive_record agrees with the stored record on random S3 pipelines") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        OpenBook ob = standard_s3_open_book();
        ob = positive_stabilization(ob, {}).book;
        for (int step = 0; step < 8; ++step) {
            const auto& tracked = ob.contact()->legendrians;
            const auto& pick = tracked[rng() % tracked.size()].curve;
            switch (rng() % 4) {
            case 0: ob = positive_stabilization(ob, {}).book; break;
            case 1: ob = stabilize_legendrian_once(ob, pick, rng() % 2 ? 1 : -1).book; break;
            default: {
                // Stay laminar: only surgery on curves nesting with every letter.
                const bool ok = std::all_of(ob.word().begin(), ob.word().end(),
                                            [&](const TwistLetter& l) { return laminar_pair(l.curve, pick); });
                if (ok)
                    ob = contact_surgery_on_page_curve(ob, pick, rng() % 2 ? 1 : -1);
            }
            }
        }
        if (!laminar_word(ob.word()))
            continue;
        CHECK(derive_record(ob) == ob.contact()->record);
        const auto& rec = ob.contact()->record;
        // The record describes surgery on S3, so det L = ± |H1| of the book.
        const auto group = first_homology(ob);
        const mpz_class det = abs(determinant(rec.topological_matrix()));
        if (det == 0) {
            CHECK(group.free_rank > 0);
        } else {
            mpz_class order = 1;
            for (const auto& d : group.torsion)
                order *= d;
            CHECK(group.free_rank == 0);
            CHECK(order == det);
        }
    }
}
