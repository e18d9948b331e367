"""Catalog entries, isomorphism testing, quotient search, witness frames."""

import itertools

import pytest

from conftest import line, mono

from quivertau.catalog import (
    BadParameterError,
    UnknownFrameError,
    UnknownIdError,
    catalog_get,
    catalog_ids,
    frame_ids,
    has_quotient,
    is_iso,
    verify_quotient_witness,
    verify_witness,
    witness_frame,
)
from quivertau.presentation import (
    dimension_table,
    opposite,
    parse_presentation,
    presentations_equal,
    structural_profile,
    validate_presentation,
)
from quivertau.tensor import rad_square_quotient, tensor_product


class TestCatalogGet:
    def test_n3(self):
        p = catalog_get("N(3)")
        assert presentations_equal(p, rad_square_quotient(line(3)))

    def test_b1(self):
        p = catalog_get("B1")
        assert [(a.name, a.source, a.target) for a in p.quiver.arrows] == \
            [("α", "1", "2"), ("β", "3", "2"), ("γ", "4", "3")]
        assert len(p.relations) == 1

    def test_a3_orientation(self):
        p = catalog_get("A(3,+-)")
        assert p.relations == ()
        targets = {a.target for a in p.quiver.arrows}
        assert targets == {"2"}

    def test_all_fixed_validate(self):
        for cat_id in catalog_ids():
            if "(" in cat_id and "n" in cat_id:
                continue  # family patterns
            pres = catalog_get(cat_id)
            assert validate_presentation(pres) == []

    def test_bad_ids(self):
        with pytest.raises(UnknownIdError):
            catalog_get("Z99")
        with pytest.raises(BadParameterError):
            catalog_get("A(3,+)")
        with pytest.raises(BadParameterError):
            catalog_get("D(3,++)")
        with pytest.raises(BadParameterError):
            catalog_get("N(0)")

    def test_d4(self):
        p = catalog_get("D(4,+++)")
        prof = structural_profile(p)
        assert prof.is_hereditary and prof.simple_count == 4


class TestIsIso:
    def test_identity(self):
        b1 = catalog_get("B1")
        iso = is_iso(b1, opposite(opposite(b1)))
        assert iso is not None
        assert dict(iso.vertex_map) == {v: v for v in b1.quiver.vertices}

    def test_tensor_swap_nonidentity(self):
        a2 = catalog_get("A(2,+)")
        t = tensor_product(a2, a2)
        swapped = tensor_product(a2, a2)
        iso = is_iso(t, swapped)
        assert iso is not None

    def test_b1_not_iso_opposite(self):
        b1 = catalog_get("B1")
        assert is_iso(b1, opposite(b1)) is None

    def test_relations_matter(self):
        with_rel = catalog_get("LNak4")
        without = line(4)
        assert is_iso(with_rel, without) is None

    def test_equivalence_on_fixed_set(self):
        reps = [catalog_get(i) for i in
                ("B1", "L42", "N(4)", "A(4,++-)", "LNak4")]
        for p in reps:
            assert is_iso(p, p) is not None
        for p, q in itertools.combinations(reps, 2):
            forward = is_iso(p, q) is not None
            backward = is_iso(q, p) is not None
            assert forward == backward
            assert not forward  # all chosen representatives are distinct

    def test_iso_implies_matching_profiles(self):
        p = catalog_get("B1")
        relabeled = parse_presentation(
            "vertex x\nvertex y\nvertex z\nvertex w\n"
            "arrow u : x -> y\narrow v : z -> y\narrow t : w -> z\n"
            "zero t.v\n")
        assert is_iso(p, relabeled) is not None
        prof1 = structural_profile(p)
        prof2 = structural_profile(relabeled)
        assert (prof1.is_schurian, prof1.is_radical_square_zero) == \
            (prof2.is_schurian, prof2.is_radical_square_zero)
        t1 = sorted(len(ps) for _, ps in dimension_table(p).pairs)
        t2 = sorted(len(ps) for _, ps in dimension_table(relabeled).pairs)
        assert t1 == t2


class TestHasQuotient:
    def test_b51_to_b1(self):
        w = has_quotient(catalog_get("B5_1"), catalog_get("B1"))
        assert w is not None
        assert w.killed_vertices == ("5",)
        assert verify_quotient_witness(catalog_get("B5_1"),
                                       catalog_get("B1"), w)

    def test_blocked_by_surviving_relation(self):
        ka4bg = parse_presentation(
            "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
            "arrow α : 1 -> 2\narrow β : 2 -> 3\narrow γ : 3 -> 4\n"
            "zero β.γ\n")
        assert has_quotient(ka4bg, catalog_get("LNak4")) is None

    def test_reflexive(self):
        for cat_id in ("B1", "L42", "LNak4", "N(4)"):
            p = catalog_get(cat_id)
            w = has_quotient(p, p)
            assert w is not None and w.killed_vertices == ()

    def test_dimension_monotone(self):
        pairs = [("B5_1", "B1"), ("B5_2", "B1"), ("LNak4", "A(3,++)"),
                 ("N(4)", "N(3)")]
        for big_id, small_id in pairs:
            big, small = catalog_get(big_id), catalog_get(small_id)
            assert has_quotient(big, small) is not None
            assert dimension_table(small).total <= \
                dimension_table(big).total

    def test_transitive_spot_check(self):
        b52 = catalog_get("B5_2")
        b1 = catalog_get("B1")
        a3 = catalog_get("A(3,+-)")
        assert has_quotient(b52, b1) is not None
        assert has_quotient(b1, a3) is not None
        assert has_quotient(b52, a3) is not None

    def test_extra_relations_reachable(self):
        # the commutative square surjects onto the monomial square
        comm = parse_presentation(
            "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
            "arrow α : 1 -> 2\narrow γ : 1 -> 3\n"
            "arrow β : 2 -> 4\narrow δ : 3 -> 4\n"
            "relation 1*α.β - 1*γ.δ\n")
        assert has_quotient(comm, catalog_get("L43square")) is not None
        # but the hereditary square is not a quotient of the monomial one
        hered = parse_presentation(
            "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
            "arrow α : 1 -> 2\narrow γ : 1 -> 3\n"
            "arrow β : 2 -> 4\narrow δ : 3 -> 4\n")
        assert has_quotient(catalog_get("L43square"), hered) is None


class TestFrames:
    def test_all_frames_verify(self):
        for frame_id in frame_ids():
            report = verify_witness(witness_frame(frame_id))
            assert report.quotient_ok, frame_id
            assert report.connected, frame_id
            assert report.ok, frame_id

    def test_count_anomalies_reported_verbatim(self):
        anomalies = {fid for fid in frame_ids()
                     if verify_witness(witness_frame(fid)).count_anomaly}
        assert anomalies == {"a3a3:++,++", "a4n3:++-", "n3-square"}
        for fid in anomalies:
            report = verify_witness(witness_frame(fid))
            assert "count-anomaly (paper figure)" in report.notes

    def test_hereditary_frame_full_verification(self):
        report = verify_witness(witness_frame("a4n3:+-+"))
        assert report.hereditary_ok
        assert report.induced_graph == "D~5"
        assert report.marked_count == 6

    def test_claimed_types(self):
        expected = {
            "a3a3:++,++": "D~4", "a3a3:++,-+": "E~6",
            "a3a3:+-,+-": "D~4", "a3a3:+-,-+": "D~6",
            "a4n3:+-+": "D~5", "a4n3:-++": "E~7", "a4n3:++-": "D~5",
            "n3-L42": "E~6", "n3-square": "A~6",
            "n4-B5_1": "E~8", "n3-B5_2": "E~8", "n3-B5_3": "E~7",
            "n4-LNak4": "E~7",
        }
        for fid, label in expected.items():
            assert witness_frame(fid).claimed_type.label() == label

    def test_unknown_frame(self):
        with pytest.raises(UnknownFrameError):
            witness_frame("nope")
